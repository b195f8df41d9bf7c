"""Exact normal-ordered quadratic forms in four boson modes.

A form is  sum C_ij a_i+ a_j  +  sum_{i<=j} R_ij a_i+ a_j+  +  sum_{i<=j} L_ij a_i a_j  + s
with all coefficients complex-rational.  Commutators of two such forms are
again of this shape, so the whole sp(8,R) story — the 36 bilinear forms, the
15 generators built from them and their commutation relations against the
metric diag(-1,-1,-1,-1,1,1) — is verified with no floating point at all.

Conventions (also exported as CONVENTION_LEDGER):
  * conserving coefficients are those of the Weyl-symmetrized basis
    h_ij = a_i+ a_j + delta_ij/2; the coefficient table is the same as for
    plain a_i+ a_j terms, only the scalar differs.  The stored `scalar` is
    the plain normal-ordered constant; `scalar_sym` is the constant in the
    h_ij convention.  In the symmetrized convention no commutator ever
    produces a constant, so the 36-form basis closes without a central term.
  * raising / lowering tables are symmetric and hold the full monomial
    coefficient of a_i+ a_j+ (resp. a_i a_j) at both (i,j) and (j,i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidInputError
from .exact import CRat

_CZERO = CRat(0)
_CHALF = CRat(Fraction(1, 2))

_I = CRat(0, 1)
_ZERO4 = tuple(tuple(CRat(0) for _ in range(4)) for _ in range(4))


def _tab(entries=()) -> tuple:
    """4x4 CRat table from {(i,j) 1-based: coeff}."""
    m = [[CRat(0)] * 4 for _ in range(4)]
    for (i, j), c in dict(entries).items():
        m[i - 1][j - 1] = CRat.coerce(c)
    return tuple(tuple(row) for row in m)


def _sym_tab(entries=()) -> tuple:
    """Symmetric 4x4 table with the same monomial coefficient at (i,j), (j,i)."""
    m = [[CRat(0)] * 4 for _ in range(4)]
    for (i, j), c in dict(entries).items():
        c = CRat.coerce(c)
        m[i - 1][j - 1] = c
        m[j - 1][i - 1] = c
    return tuple(tuple(row) for row in m)


def _add(x, y):
    return tuple(
        tuple(
            a if b.is_zero() else (b if a.is_zero() else a + b)
            for a, b in zip(rx, ry)
        )
        for rx, ry in zip(x, y)
    )


def _sub(x, y):
    return tuple(
        tuple(
            a if b.is_zero() else (-b if a.is_zero() else a - b)
            for a, b in zip(rx, ry)
        )
        for rx, ry in zip(x, y)
    )


def _scale(c, x):
    return tuple(tuple(_CZERO if a.is_zero() else c * a for a in row) for row in x)


def _mul(x, y):
    # skips zero entries; generator coefficient matrices are mostly zeros
    out = [[_CZERO] * 4 for _ in range(4)]
    for i in range(4):
        xi = x[i]
        oi = out[i]
        for k in range(4):
            c = xi[k]
            if c.is_zero():
                continue
            yk = y[k]
            for j in range(4):
                if not yk[j].is_zero():
                    t = c * yk[j]
                    oi[j] = t if oi[j] is _CZERO else oi[j] + t
    return tuple(tuple(row) for row in out)


def _t(x):
    return tuple(tuple(x[j][i] for j in range(4)) for i in range(4))


def _conj(x):
    return tuple(tuple(a.conj() for a in row) for row in x)


def _trace(x):
    return sum((x[i][i] for i in range(4)), CRat(0))


def _is_sym(x) -> bool:
    return all(x[i][j] == x[j][i] for i in range(4) for j in range(i + 1, 4))


def _halved(table):
    """Stored symmetric monomial table -> coefficient matrix B with
    sum_ij B_ij a_i a_j reproducing the form (off-diagonal halved)."""
    return tuple(
        tuple(
            v if i == j or v.is_zero() else _CHALF * v
            for j, v in enumerate(table[i])
        )
        for i in range(4)
    )


def _unhalved(b):
    """Coefficient matrix (will be symmetrized) -> stored monomial table.

    Stored off-diagonal = full monomial coefficient = b_ij + b_ji after
    symmetrizing; diagonal carries straight through.
    """
    out = [[_CZERO] * 4 for _ in range(4)]
    for i in range(4):
        out[i][i] = b[i][i]
        for j in range(i + 1, 4):
            u, v = b[i][j], b[j][i]
            s = u if v.is_zero() else (v if u.is_zero() else u + v)
            out[i][j] = s
            out[j][i] = s
    return tuple(tuple(row) for row in out)


@dataclass(frozen=True)
class QuadraticForm:
    conserving: tuple = _ZERO4  # coeff of a_i+ a_j (== coeff of h_ij)
    raising: tuple = _ZERO4  # symmetric monomial table for a_i+ a_j+
    lowering: tuple = _ZERO4  # symmetric monomial table for a_i a_j
    scalar: CRat = field(default_factory=CRat)  # plain normal-ordered constant

    def __post_init__(self):
        if not (_is_sym(self.raising) and _is_sym(self.lowering)):
            raise InvalidInputError("raising/lowering tables must be symmetric")

    @property
    def scalar_sym(self) -> CRat:
        """Constant in the h_ij = a_i+ a_j + delta_ij/2 convention."""
        return self.scalar - CRat(Fraction(1, 2)) * _trace(self.conserving)

    # -- algebra --------------------------------------------------------

    def __add__(self, other: "QuadraticForm") -> "QuadraticForm":
        return QuadraticForm(
            _add(self.conserving, other.conserving),
            _add(self.raising, other.raising),
            _add(self.lowering, other.lowering),
            self.scalar + other.scalar,
        )

    def __sub__(self, other: "QuadraticForm") -> "QuadraticForm":
        return self + (-other)

    def __neg__(self) -> "QuadraticForm":
        m1 = CRat(-1)
        return QuadraticForm(
            _scale(m1, self.conserving),
            _scale(m1, self.raising),
            _scale(m1, self.lowering),
            -self.scalar,
        )

    def __mul__(self, c) -> "QuadraticForm":
        c = CRat.coerce(c)
        return QuadraticForm(
            _scale(c, self.conserving),
            _scale(c, self.raising),
            _scale(c, self.lowering),
            c * self.scalar,
        )

    __rmul__ = __mul__

    def dagger(self) -> "QuadraticForm":
        return QuadraticForm(
            _conj(_t(self.conserving)),
            _conj(self.lowering),
            _conj(self.raising),
            self.scalar.conj(),
        )

    def is_zero(self) -> bool:
        return self == ZERO_FORM

    # -- views ------------------------------------------------------------

    def coeff(self, kind: str, i: int, j: int) -> CRat:
        """Monomial coefficient, 1-based indices; kind in {c, r, l}."""
        if kind == "c":
            return self.conserving[i - 1][j - 1]
        if kind == "r":
            return self.raising[i - 1][j - 1]
        if kind == "l":
            return self.lowering[i - 1][j - 1]
        raise InvalidInputError(f"unknown monomial kind {kind!r}")

    def vector(self) -> tuple:
        """Canonical 37-coordinate vector (16 conserving, 10 raising,
        10 lowering, scalar_sym), used for exact span arithmetic."""
        out = [self.conserving[i][j] for i in range(4) for j in range(4)]
        out += [self.raising[i][j] for i in range(4) for j in range(i, 4)]
        out += [self.lowering[i][j] for i in range(4) for j in range(i, 4)]
        out.append(self.scalar_sym)
        return tuple(out)

    def __str__(self):
        parts = []
        for i in range(4):
            for j in range(4):
                if self.conserving[i][j]:
                    parts.append(f"({self.conserving[i][j]})a{i+1}+a{j+1}")
        for i in range(4):
            for j in range(i, 4):
                if self.raising[i][j]:
                    parts.append(f"({self.raising[i][j]})a{i+1}+a{j+1}+")
        for i in range(4):
            for j in range(i, 4):
                if self.lowering[i][j]:
                    parts.append(f"({self.lowering[i][j]})a{i+1}a{j+1}")
        if self.scalar or not parts:
            parts.append(f"({self.scalar})")
        return " + ".join(parts)


ZERO_FORM = QuadraticForm()


# -- monomial constructors (1-based mode indices) ---------------------------


def number_form(i: int, j: int, coeff=1) -> QuadraticForm:
    """coeff * a_i+ a_j"""
    return QuadraticForm(conserving=_tab({(i, j): coeff}))


def creator_pair(i: int, j: int, coeff=1) -> QuadraticForm:
    """coeff * a_i+ a_j+"""
    return QuadraticForm(raising=_sym_tab({(min(i, j), max(i, j)): coeff}))


def annihilator_pair(i: int, j: int, coeff=1) -> QuadraticForm:
    """coeff * a_i a_j"""
    return QuadraticForm(lowering=_sym_tab({(min(i, j), max(i, j)): coeff}))


def scalar_form(c) -> QuadraticForm:
    return QuadraticForm(scalar=CRat.coerce(c))


def h_form(i: int, j: int) -> QuadraticForm:
    """Weyl-symmetrized conserving basis element h_ij = a_i+ a_j + delta_ij/2."""
    s = Fraction(1, 2) if i == j else 0
    return QuadraticForm(conserving=_tab({(i, j): 1}), scalar=CRat(s))


# -- the commutator ---------------------------------------------------------


def normal_order_commutator(x: QuadraticForm, y: QuadraticForm) -> QuadraticForm:
    """Exact normal-ordered canonical form of XY - YX.

    With X = (A, B, D, s) in matrix form (B, D symmetric halved-off-diagonal
    coefficient matrices) the bracket closes on quadratics:
        A'' = [A, A'] + 4(B'D - BD')
        B'' = AB' + B'At - A'B - BA't
        D'' = DA' + A'tD - D'A - AtD'
        s'' = 2 tr(DB') - 2 tr(D'B)
    """
    a, a2 = x.conserving, y.conserving
    b, b2 = _halved(x.raising), _halved(y.raising)
    d, d2 = _halved(x.lowering), _halved(y.lowering)

    four = CRat(4)
    a_out = _add(
        _sub(_mul(a, a2), _mul(a2, a)),
        _scale(four, _sub(_mul(b2, d), _mul(b, d2))),
    )
    b_out = _sub(
        _add(_mul(a, b2), _mul(b2, _t(a))),
        _add(_mul(a2, b), _mul(b, _t(a2))),
    )
    d_out = _sub(
        _add(_mul(d, a2), _mul(_t(a2), d)),
        _add(_mul(d2, a), _mul(_t(a), d2)),
    )
    two = CRat(2)
    s_out = two * _trace(_mul(d, b2)) - two * _trace(_mul(d2, b))
    return QuadraticForm(a_out, _unhalved(b_out), _unhalved(d_out), s_out)


def hermitian_check(x: QuadraticForm) -> bool:
    """True iff the form is self-adjoint."""
    return x.dagger() == x


# -- the so(4,2) generator set ----------------------------------------------

METRIC = (-1, -1, -1, -1, 1, 1)

# Pauli matrices as 2x2 CRat tables
PAULI = {
    1: ((CRat(0), CRat(1)), (CRat(1), CRat(0))),
    2: ((CRat(0), -_I), (_I, CRat(0))),
    3: ((CRat(1), CRat(0)), (CRat(0), CRat(-1))),
}

# cyclic triples (alpha, beta, gamma): J_{alpha beta} <-> sigma_gamma
CYCLIC = ((2, 3, 1), (3, 1, 2), (1, 2, 3))

CONVENTION_LEDGER = {
    "bracket": "[J_ab, J_cd] = i (g_bc J_ad - g_ac J_bd + g_ad J_bc - g_bd J_ac)",
    "metric": list(METRIC),
    "pauli": {
        "sigma1": [[0, 1], [1, 0]],
        "sigma2": [[0, "-i"], ["i", 0]],
        "sigma3": [[1, 0], [0, -1]],
    },
    "cyclic_assignment": {"J23": "sigma1", "J31": "sigma2", "J12": "sigma3"},
    "contraction": (
        "a+ sigma tb+ means sum_ij a_i+ sigma_ij b_j+ with a=(a1,a2), b=(a3,a4)"
    ),
    "alpha4_sign_flipped": False,
    "conserving_convention": (
        "coefficients of h_ij = a_i+ a_j + delta_ij/2; stored scalar is the "
        "plain normal-ordered constant"
    ),
}


def _sigma_bilinear(sigma, modes) -> QuadraticForm:
    """sum_pq x_p+ sigma_pq x_q over the two given 1-based modes."""
    out = ZERO_FORM
    for p in range(2):
        for q in range(2):
            if sigma[p][q]:
                out = out + number_form(modes[p], modes[q], sigma[p][q])
    return out


def spin_form(k: int, modes: tuple) -> QuadraticForm:
    """su(2) generator (1/2) x+ sigma_k x over the two given 1-based modes."""
    if k not in PAULI:
        raise InvalidInputError("spin index must be 1, 2 or 3")
    return _CHALF * _sigma_bilinear(PAULI[k], modes)


@dataclass(frozen=True)
class GeneratorSet:
    """The 15 forms J_ab (1 <= a < b <= 6), extended by antisymmetry."""

    members: dict  # {(a, b) with a < b: QuadraticForm}
    metric: tuple = METRIC

    def J(self, a: int, b: int) -> QuadraticForm:
        if not (1 <= a <= 6 and 1 <= b <= 6):
            raise InvalidInputError("generator indices must lie in 1..6")
        if a == b:
            return ZERO_FORM
        if a < b:
            return self.members[(a, b)]
        return -self.members[(b, a)]

    def pairs(self) -> tuple:
        return tuple(sorted(self.members))

    def replaced(self, a: int, b: int, form: QuadraticForm) -> "GeneratorSet":
        members = dict(self.members)
        members[(a, b)] = form
        return GeneratorSet(members=members, metric=self.metric)


def build_so42(flip_alpha4: bool = False) -> GeneratorSet:
    """Construct the 15 so(4,2) generators from four boson modes.

    J_{alpha beta} = (1/2)(a+ sigma_gamma a + b+ sigma_gamma b), cyclic;
    J_{alpha 4}    = -(1/2)(a+ sigma_alpha a - b+ sigma_alpha b);
    J_45           = (1/2)(a+ sigma_2 tb+ - a sigma_2 tb);
    J_56           = (1/2)(a+ a + b+ b + 2);
    J_{alpha 5} = i[J_{alpha 4}, J_45],  J_{alpha 6} = -i[J_{alpha 5}, J_56],
    J_46 = -i[J_45, J_56].

    `flip_alpha4` is the documented escape hatch that negates the J_{alpha 4}
    family (and everything bracket-derived from it); the shipped convention
    does not need it (see CONVENTION_LEDGER).
    """
    half = CRat(Fraction(1, 2))
    a_modes, b_modes = (1, 2), (3, 4)
    members: dict = {}

    for alpha, beta, gamma in CYCLIC:
        form = half * (
            _sigma_bilinear(PAULI[gamma], a_modes)
            + _sigma_bilinear(PAULI[gamma], b_modes)
        )
        key = (alpha, beta) if alpha < beta else (beta, alpha)
        members[key] = form if alpha < beta else -form

    alpha4_sign = CRat(1) if flip_alpha4 else CRat(-1)
    for alpha in (1, 2, 3):
        members[(alpha, 4)] = alpha4_sign * half * (
            _sigma_bilinear(PAULI[alpha], a_modes)
            - _sigma_bilinear(PAULI[alpha], b_modes)
        )

    # J_45 = (1/2)(a+ sigma2 tb+ - a sigma2 tb)
    j45 = ZERO_FORM
    sigma2 = PAULI[2]
    for p in range(2):
        for q in range(2):
            if sigma2[p][q]:
                j45 = j45 + creator_pair(a_modes[p], b_modes[q], half * sigma2[p][q])
                j45 = j45 - annihilator_pair(a_modes[p], b_modes[q], half * sigma2[p][q])
    members[(4, 5)] = j45

    j56 = QuadraticForm(
        conserving=_tab({(i, i): Fraction(1, 2) for i in (1, 2, 3, 4)}),
        scalar=CRat(1),
    )
    members[(5, 6)] = j56

    for alpha in (1, 2, 3):
        members[(alpha, 5)] = _I * normal_order_commutator(members[(alpha, 4)], j45)
    for alpha in (1, 2, 3):
        members[(alpha, 6)] = -_I * normal_order_commutator(members[(alpha, 5)], j56)
    members[(4, 6)] = -_I * normal_order_commutator(j45, j56)

    return GeneratorSet(members=members)


@dataclass(frozen=True)
class RelationReport:
    total: int
    passes: int
    failures: tuple  # ((ab, cd, residual QuadraticForm), ...)

    @property
    def ok(self) -> bool:
        return self.passes == self.total


def verify_so42_relations(gs: GeneratorSet) -> RelationReport:
    """Check [J_ab, J_cd] = i(g_bc J_ad - g_ac J_bd + g_ad J_bc - g_bd J_ac)
    exactly for all 105 unordered pairs of distinct generators."""
    if len(gs.members) != 15:
        raise InvalidInputError("generator set must have 15 members")
    g = gs.metric
    pairs = gs.pairs()
    failures = []
    total = 0
    for idx, (a, b) in enumerate(pairs):
        for (c, d) in pairs[idx + 1:]:
            total += 1
            lhs = normal_order_commutator(gs.J(a, b), gs.J(c, d))
            # expand the metric combination term by term; Kronecker deltas
            # leave at most two of the four terms alive
            rhs = ZERO_FORM
            if b == c:
                rhs = rhs + g[b - 1] * gs.J(a, d)
            if a == c:
                rhs = rhs - g[a - 1] * gs.J(b, d)
            if a == d:
                rhs = rhs + g[a - 1] * gs.J(b, c)
            if b == d:
                rhs = rhs - g[b - 1] * gs.J(a, c)
            rhs = _I * rhs
            residual = lhs - rhs
            if residual != ZERO_FORM:
                failures.append(((a, b), (c, d), residual))
    return RelationReport(total=total, passes=total - len(failures), failures=tuple(failures))


# -- the 36 bilinear forms of sp(8, R) --------------------------------------


def build_sp8() -> tuple:
    """The 36 bilinear forms: 16 symmetrized conserving h_ij, 10 symmetric
    raising a_i+ a_j+, 10 symmetric lowering a_i a_j (i <= j)."""
    forms = []
    for i in range(1, 5):
        for j in range(1, 5):
            forms.append(h_form(i, j))
    for i in range(1, 5):
        for j in range(i, 5):
            forms.append(creator_pair(i, j))
    for i in range(1, 5):
        for j in range(i, 5):
            forms.append(annihilator_pair(i, j))
    return tuple(forms)


def sp8_hermitian_basis() -> tuple:
    """A Hermitian re-basis of the 36 forms."""
    forms = []
    for i in range(1, 5):
        forms.append(h_form(i, i))
    for i in range(1, 5):
        for j in range(i + 1, 5):
            forms.append(h_form(i, j) + h_form(j, i))
            forms.append(_I * (h_form(i, j) - h_form(j, i)))
    for i in range(1, 5):
        for j in range(i, 5):
            forms.append(creator_pair(i, j) + annihilator_pair(i, j))
            forms.append(_I * (creator_pair(i, j) - annihilator_pair(i, j)))
    return tuple(forms)


# -- exact span arithmetic and closure --------------------------------------


class _ExactSpan:
    """Row-echelon span of exact coordinate vectors, with expansion tracking."""

    def __init__(self, vectors):
        self.k = len(vectors)
        self.rows = []  # (rowdict, coeffdict) pairs, rowdict has a pivot
        self.independent = True
        for idx, vec in enumerate(vectors):
            row = {i: c for i, c in enumerate(vec) if c}
            coeffs = {idx: CRat(1)}
            row, coeffs = self._reduce(row, coeffs)
            if not row:
                self.independent = False
                continue
            pivot = min(row)
            inv = CRat(1) / row[pivot]
            row = {i: inv * c for i, c in row.items()}
            coeffs = {i: inv * c for i, c in coeffs.items()}
            self.rows.append((pivot, row, coeffs))
            self.rows.sort(key=lambda t: t[0])

    def _reduce(self, row, coeffs):
        for pivot, prow, pcoeffs in self.rows:
            if pivot in row:
                factor = row[pivot]
                for i, c in prow.items():
                    row[i] = row.get(i, CRat(0)) - factor * c
                    if not row[i]:
                        del row[i]
                for i, c in pcoeffs.items():
                    coeffs[i] = coeffs.get(i, CRat(0)) - factor * c
                    if not coeffs[i]:
                        del coeffs[i]
        return row, coeffs

    def expand(self, vec):
        """Coefficients of vec over the original vectors, or None if outside."""
        row = {i: c for i, c in enumerate(vec) if c}
        coeffs: dict = {}
        row, coeffs = self._reduce(row, coeffs)
        if row:
            return None
        return tuple(-coeffs.get(i, CRat(0)) for i in range(self.k))


@dataclass(frozen=True)
class ClosureReport:
    closed: bool
    structure_constants: dict  # {(i, j): tuple of expansion coefficients}
    first_failure: tuple | None  # (i, j) witness pair, if not closed


def closure_report(forms) -> ClosureReport:
    """Check that all pairwise commutators of `forms` lie in their exact span.

    In the symmetrized-scalar coordinates no commutator carries a constant
    term, so a closed set here is a genuine Lie subalgebra of sp(8, R).
    """
    forms = tuple(forms)
    span = _ExactSpan([f.vector() for f in forms])
    if not span.independent:
        raise InvalidInputError("input forms are linearly dependent")
    constants = {}
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            comm = normal_order_commutator(forms[i], forms[j])
            coeffs = span.expand(comm.vector())
            if coeffs is None:
                return ClosureReport(
                    closed=False,
                    structure_constants=constants,
                    first_failure=(i, j),
                )
            constants[(i, j)] = coeffs
    return ClosureReport(closed=True, structure_constants=constants, first_failure=None)
