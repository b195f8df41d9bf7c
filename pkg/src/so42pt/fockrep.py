"""Truncated Fock-space realization of the bilinear generator algebra.

Four boson modes act on occupation-number states (n1, n2, n3, n4); the
constrained sector n1+n2 = n3+n4 carries the bound-state representation,
with principal quantum number n = n1+n2+1 and an n-block of dimension n^2.

On top of the sparse matrix realization this module provides the numeric
verification suite: Casimir spectra on interior states, SO(4) -> SO(3)
branching per n-block, the parity split of the SO(3,2) subalgebra, and
ground-state reachability under repeated generator application.

Truncation discipline: a polynomial of degree d in the generators shifts n
by at most d, so its matrix elements are exact only between interior states
with n <= n_max - d. All spectral assertions respect that margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import InvalidInputError, VerificationError
from .quadratic import (
    METRIC,
    GeneratorSet,
    QuadraticForm,
    build_so42,
    normal_order_commutator,
    spin_form,
)

DROP_TOLERANCE = 1e-14
SPECTRUM_TOLERANCE = 1e-9
STRUCTURE_TOLERANCE = 1e-12

# charge n1+n2-n3-n4 weights; constrained states have total charge 0
_CHARGE = (1, 1, -1, -1)

# index pairs: the so(4) subalgebra, the so(3,2) subalgebra, the parity-mixing
# boost generators J_alpha4
SO4_PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
SO32_PAIRS = (
    (1, 2), (1, 3), (2, 3),
    (1, 5), (2, 5), (3, 5),
    (1, 6), (2, 6), (3, 6),
    (5, 6),
)
ALPHA4_PAIRS = ((1, 4), (2, 4), (3, 4))


@dataclass(frozen=True)
class FockState:
    """Occupation-number state of the four boson modes."""

    occupations: tuple

    def __post_init__(self):
        occ = self.occupations
        if len(occ) != 4 or any(not isinstance(v, int) or v < 0 for v in occ):
            raise InvalidInputError(
                "occupations must be four non-negative integers"
            )

    @property
    def balanced(self) -> bool:
        n1, n2, n3, n4 = self.occupations
        return n1 + n2 == n3 + n4

    @property
    def principal(self) -> int:
        # n = n1 + n2 + 1, meaningful on the balanced sector
        return self.occupations[0] + self.occupations[1] + 1

    @property
    def total_quanta(self) -> int:
        return sum(self.occupations)


@dataclass(frozen=True, eq=False)
class FockBasis:
    """Deterministically ordered truncated basis.

    Constrained: balanced states with principal n <= n_max, ordered by n then
    lexicographic occupations; dimension sum of n^2.  Full: every occupation
    with total quanta <= 2(n_max - 1), ordered by total then lexicographic.
    """

    states: tuple
    n_max: int
    constrained: bool
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {s.occupations: k for k, s in enumerate(self.states)}
        )

    @property
    def dim(self) -> int:
        return len(self.states)

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def position(self, occupations) -> int | None:
        return self._index.get(tuple(occupations))

    def block(self, n: int) -> range:
        """Index range of the principal-n block of the constrained basis."""
        if not self.constrained:
            raise InvalidInputError("blocks are defined on the constrained basis")
        if not 1 <= n <= self.n_max:
            raise InvalidInputError("need 1 <= n <= n_max")
        offset = (n - 1) * n * (2 * n - 1) // 6
        return range(offset, offset + n * n)

    def interior(self, margin: int) -> list:
        """Indices of states with principal n <= n_max - margin."""
        cutoff = self.n_max - margin
        return [k for k, s in enumerate(self.states) if s.principal <= cutoff]


def build_basis(n_max: int, constrained: bool = True) -> FockBasis:
    if n_max < 1:
        raise InvalidInputError("n_max must be a positive integer")
    states = []
    if constrained:
        for n in range(1, n_max + 1):
            for n1 in range(n):
                for n3 in range(n):
                    states.append(FockState((n1, n - 1 - n1, n3, n - 1 - n3)))
    else:
        for total in range(2 * (n_max - 1) + 1):
            for n1 in range(total + 1):
                for n2 in range(total - n1 + 1):
                    for n3 in range(total - n1 - n2 + 1):
                        states.append(
                            FockState((n1, n2, n3, total - n1 - n2 - n3))
                        )
    return FockBasis(tuple(states), n_max, constrained)


@dataclass(frozen=True, eq=False)
class FockOperator:
    """Sparse complex matrix of a normal-ordered form over a FockBasis."""

    matrix: sp.csr_matrix
    basis: FockBasis
    drop_tolerance: float = DROP_TOLERANCE


def _require_charge_preserving(x: QuadraticForm) -> None:
    for i in range(4):
        for j in range(4):
            if not x.conserving[i][j].is_zero() and _CHARGE[i] != _CHARGE[j]:
                raise InvalidInputError(
                    "form does not preserve n1+n2-n3-n4 on the constrained basis"
                )
    for i in range(4):
        for j in range(i, 4):
            mixed = _CHARGE[i] + _CHARGE[j] == 0
            if not x.raising[i][j].is_zero() and not mixed:
                raise InvalidInputError(
                    "raising term changes n1+n2-n3-n4 on the constrained basis"
                )
            if not x.lowering[i][j].is_zero() and not mixed:
                raise InvalidInputError(
                    "lowering term changes n1+n2-n3-n4 on the constrained basis"
                )


def matrixize(
    x: QuadraticForm, basis: FockBasis, drop_tolerance: float = DROP_TOLERANCE
) -> FockOperator:
    """Matrix of the form in the number basis, a_i+|..n_i..> = sqrt(n_i+1)|..>.

    Components raised beyond the truncation are dropped, confining leakage
    to the boundary shell.
    """
    if basis.constrained:
        _require_charge_preserving(x)
    scalar = complex(x.scalar)
    conserving = [
        [complex(c) for c in row] for row in x.conserving
    ]
    raising = [[complex(c) for c in row] for row in x.raising]
    lowering = [[complex(c) for c in row] for row in x.lowering]

    rows, cols, vals = [], [], []

    def emit(target_occ, col, amp):
        row = basis.position(target_occ)
        if row is not None:
            rows.append(row)
            cols.append(col)
            vals.append(amp)

    for col, state in enumerate(basis.states):
        occ = state.occupations
        if scalar:
            rows.append(col)
            cols.append(col)
            vals.append(scalar)
        for i in range(4):
            for j in range(4):
                c = conserving[i][j]
                if not c:
                    continue
                if i == j:
                    if occ[i]:
                        rows.append(col)
                        cols.append(col)
                        vals.append(c * occ[i])
                elif occ[j]:
                    amp = c * math.sqrt(occ[j] * (occ[i] + 1))
                    t = list(occ)
                    t[j] -= 1
                    t[i] += 1
                    emit(tuple(t), col, amp)
        for i in range(4):
            for j in range(i, 4):
                c = raising[i][j]
                if c:
                    if i == j:
                        amp = c * math.sqrt((occ[i] + 1) * (occ[i] + 2))
                    else:
                        amp = c * math.sqrt((occ[i] + 1) * (occ[j] + 1))
                    t = list(occ)
                    t[i] += 1
                    t[j] += 1
                    emit(tuple(t), col, amp)
                c = lowering[i][j]
                if not c:
                    continue
                if i == j:
                    if occ[i] >= 2:
                        amp = c * math.sqrt(occ[i] * (occ[i] - 1))
                        t = list(occ)
                        t[i] -= 2
                        emit(tuple(t), col, amp)
                elif occ[i] and occ[j]:
                    amp = c * math.sqrt(occ[i] * occ[j])
                    t = list(occ)
                    t[i] -= 1
                    t[j] -= 1
                    emit(tuple(t), col, amp)

    m = sp.coo_matrix(
        (vals, (rows, cols)), shape=(basis.dim, basis.dim), dtype=complex
    ).tocsr()
    m.sum_duplicates()
    if drop_tolerance:
        m.data[np.abs(m.data) < drop_tolerance] = 0
        m.eliminate_zeros()
    return FockOperator(m, basis, drop_tolerance)


def generator_matrices(basis: FockBasis, gs: GeneratorSet | None = None) -> dict:
    """{(a, b) with a < b: sparse matrix} for the 15 generators."""
    gs = gs if gs is not None else build_so42()
    return {(a, b): matrixize(gs.J(a, b), basis).matrix for a, b in gs.pairs()}


def _jmat(mats: dict, a: int, b: int):
    return mats[(a, b)] if a < b else -mats[(b, a)]


def adjoint_defect(m) -> float:
    """Max-entry norm of M - M+."""
    d = (m - m.getH()).tocoo()
    return float(np.max(np.abs(d.data))) if d.nnz else 0.0


def morphism_defect(
    x: QuadraticForm, y: QuadraticForm, basis: FockBasis
) -> float:
    """Max-entry norm of [M(X), M(Y)] - M([X, Y]) between interior states.

    The commutator is a degree-2 polynomial, so the defect is measured on
    rows and columns with n <= n_max - 2; away from the truncation boundary
    the matrix realization must reproduce the exact bracket.
    """
    mx = matrixize(x, basis).matrix
    my = matrixize(y, basis).matrix
    mc = matrixize(normal_order_commutator(x, y), basis).matrix
    d = (mx @ my - my @ mx - mc).toarray()
    idx = basis.interior(2)
    if not idx:
        raise InvalidInputError("interior is empty at this n_max")
    sub = d[np.ix_(idx, idx)]
    return float(np.max(np.abs(sub))) if sub.size else 0.0


# -- Casimir operators -------------------------------------------------------


def _casimir1(mats: dict):
    g = METRIC
    total = None
    for (a, b), m in mats.items():
        term = (2 * g[a - 1] * g[b - 1]) * (m @ m)
        total = term if total is None else total + term
    return total


def _pair_partitions() -> tuple:
    """The 15 partitions of {1..6} into pairs (a<b, pairs ordered), signed."""

    def gen(rem):
        if not rem:
            yield ()
            return
        a = rem[0]
        for k in range(1, len(rem)):
            rest = rem[1:k] + rem[k + 1:]
            for tail in gen(rest):
                yield ((a, rem[k]),) + tail

    out = []
    for part in gen((1, 2, 3, 4, 5, 6)):
        perm = [x for pair in part for x in pair]
        sign = 1
        for i in range(6):
            for j in range(i + 1, 6):
                if perm[i] > perm[j]:
                    sign = -sign
        out.append((part, sign))
    return tuple(out)


_PAIR_PARTITIONS = _pair_partitions()


def _casimir2(mats: dict):
    # eps_abcdef J^ab J^cd J^ef: generators on disjoint index pairs commute,
    # so the 720-term sum collapses to 48 x (15 canonical pairings)
    g = METRIC
    total = None
    for part, sign in _PAIR_PARTITIONS:
        coeff = 48 * sign
        prod = None
        for a, b in part:
            coeff *= g[a - 1] * g[b - 1]
            prod = mats[(a, b)] if prod is None else prod @ mats[(a, b)]
        term = coeff * prod
        total = term if total is None else total + term
    return total


def _casimir3(mats: dict):
    # P_a^c = sum_b J_ab J^bc (36 products), then C3 = sum P_a^c P_c^a
    g = METRIC
    p = {}
    for a in range(1, 7):
        for c in range(1, 7):
            acc = None
            for b in range(1, 7):
                if b == a or b == c:
                    continue
                term = (g[b - 1] * g[c - 1]) * (_jmat(mats, a, b) @ _jmat(mats, b, c))
                acc = term if acc is None else acc + term
            p[(a, c)] = acc
    total = None
    for a in range(1, 7):
        for c in range(1, 7):
            term = p[(a, c)] @ p[(c, a)]
            total = term if total is None else total + term
    return total


@dataclass(frozen=True)
class CasimirReport:
    n_max: int
    c1_value: float
    c2_value: float
    c3_value: float
    max_residual: float
    max_constancy_deviation: float
    tolerance: float
    sign_convention: str


def _interior_scalar(mat, basis: FockBasis, degree: int):
    """Mean interior expectation, max |<k|C|k> - c|, max ||C psi - c psi||."""
    idx = basis.interior(degree)
    if not idx:
        raise InvalidInputError(
            f"degree-{degree} interior is empty at n_max={basis.n_max}"
        )
    mat = mat.tocsc()
    values = []
    max_residual = 0.0
    for k in idx:
        col = mat[:, [k]].toarray().ravel()
        values.append(col[k])
        col[k] = 0.0
        max_residual = max(max_residual, float(np.linalg.norm(col)))
    values = np.asarray(values)
    c = float(np.mean(values.real))
    deviation = float(np.max(np.abs(values - c)))
    return c, deviation, max_residual


def casimir_report(n_max: int, tolerance: float = SPECTRUM_TOLERANCE) -> CasimirReport:
    """Interior spectra of the quadratic, cubic and quartic Casimirs.

    Asserts |c1| = 6, c2 = 0, |c3| = 12 within tolerance; the signs are
    convention-dependent, so they are measured and recorded, not asserted.
    """
    if n_max < 6:
        raise InvalidInputError(
            "need n_max >= 6 so the degree-4 interior is non-empty"
        )
    basis = build_basis(n_max, constrained=True)
    mats = generator_matrices(basis)
    values = {}
    max_dev = 0.0
    max_res = 0.0
    for name, builder, degree in (
        ("c1", _casimir1, 2),
        ("c2", _casimir2, 3),
        ("c3", _casimir3, 4),
    ):
        c, dev, res = _interior_scalar(builder(mats), basis, degree)
        values[name] = c
        max_dev = max(max_dev, dev)
        max_res = max(max_res, res)
    signs = {k: "-" if v < 0 else "+" for k, v in values.items()}
    note = (
        "signs are convention-dependent; measured in this realization: "
        f"c1 {signs['c1']}, c3 {signs['c3']}"
    )
    report = CasimirReport(
        n_max=n_max,
        c1_value=values["c1"],
        c2_value=values["c2"],
        c3_value=values["c3"],
        max_residual=max_res,
        max_constancy_deviation=max_dev,
        tolerance=tolerance,
        sign_convention=note,
    )
    errors = (
        abs(abs(values["c1"]) - 6.0),
        abs(values["c2"]),
        abs(abs(values["c3"]) - 12.0),
        max_dev,
        max_res,
    )
    if max(errors) > tolerance:
        exc = VerificationError(
            "casimir spectra deviate from (|6|, 0, |12|): "
            f"c1={values['c1']!r} c2={values['c2']!r} c3={values['c3']!r} "
            f"constancy={max_dev:.3e} residual={max_res:.3e}"
        )
        exc.report = report
        raise exc
    return report


# -- branching, parity split, reachability -----------------------------------


def _l_squared_matrix(basis: FockBasis, gs: GeneratorSet) -> np.ndarray:
    total = None
    for a, b in ((1, 2), (2, 3), (3, 1)):
        m = matrixize(gs.J(a, b), basis).matrix
        term = m @ m
        total = term if total is None else total + term
    return total.toarray()


@dataclass(frozen=True)
class BranchingReport:
    n: int
    block_dim: int
    levels: tuple  # (l, eigenvalue l(l+1), multiplicity 2l+1) per l < n
    max_spectrum_deviation: float
    a_casimir: float
    b_casimir: float
    max_casimir_difference: float


def branching_report(
    n: int, n_max: int, tolerance: float = SPECTRUM_TOLERANCE
) -> BranchingReport:
    """SO(4) -> SO(3) content of the n-block: L^2 spectrum and the two spins.

    The block carries (j, j) with j = (n-1)/2: both su(2) Casimirs equal
    j(j+1) and L^2 runs over l(l+1) for l = 0..n-1 with multiplicity 2l+1.
    All generators involved conserve n, so no truncation margin is needed.
    """
    if n < 1 or n_max < 1 or n > n_max:
        raise InvalidInputError("need 1 <= n <= n_max")
    basis = build_basis(n_max, constrained=True)
    gs = build_so42()
    blk = list(basis.block(n))
    ix = np.ix_(blk, blk)

    l2 = _l_squared_matrix(basis, gs)[ix]
    eigenvalues = np.linalg.eigvalsh(l2)
    expected = [
        float(l * (l + 1)) for l in range(n) for _ in range(2 * l + 1)
    ]
    max_dev = float(np.max(np.abs(eigenvalues - np.asarray(expected))))
    levels = tuple((l, float(l * (l + 1)), 2 * l + 1) for l in range(n))

    sector_casimirs = []
    max_diff = 0.0
    blocks = []
    for modes in ((1, 2), (3, 4)):
        total = None
        for k in (1, 2, 3):
            m = matrixize(spin_form(k, modes), basis).matrix
            term = m @ m
            total = term if total is None else total + term
        blocks.append(total.toarray()[ix])
    max_diff = float(np.max(np.abs(blocks[0] - blocks[1])))
    j = (n - 1) / 2.0
    want = j * (j + 1)
    for blockmat in blocks:
        value = float(np.mean(np.diag(blockmat).real))
        scal_dev = float(np.max(np.abs(blockmat - want * np.eye(len(blk)))))
        if scal_dev > tolerance:
            raise VerificationError(
                f"spin Casimir on the n={n} block is not the scalar j(j+1): "
                f"deviation {scal_dev:.3e}"
            )
        sector_casimirs.append(value)
    if max_dev > tolerance:
        raise VerificationError(
            f"L^2 spectrum on the n={n} block deviates by {max_dev:.3e}"
        )
    if max_diff > STRUCTURE_TOLERANCE:
        raise VerificationError(
            f"a-spin and b-spin Casimir matrices differ by {max_diff:.3e}"
        )
    return BranchingReport(
        n=n,
        block_dim=len(blk),
        levels=levels,
        max_spectrum_deviation=max_dev,
        a_casimir=sector_casimirs[0],
        b_casimir=sector_casimirs[1],
        max_casimir_difference=max_diff,
    )


@dataclass(frozen=True)
class ParityReport:
    n_max: int
    odd_dim: int
    even_dim: int
    max_cross_so32: float
    max_cross_alpha4: float
    cross_by_generator: tuple  # ((a, b, max cross element), ...)


def so32_parity_check(
    n_max: int,
    tolerance: float = STRUCTURE_TOLERANCE,
    coupling_threshold: float = 0.1,
) -> ParityReport:
    """Sector structure under the parity of n + l.

    States are labeled (n, l) by diagonalizing L^2 per n-block and split by
    (n + l) mod 2.  The ten generators with indices in {1,2,3,5,6} close on
    each sector (cross elements vanish on interior states), while the
    J_alpha4 boosts shift l by one at fixed n and couple the sectors.
    """
    if n_max < 4:
        raise InvalidInputError("need n_max >= 4")
    basis = build_basis(n_max, constrained=True)
    gs = build_so42()
    l2 = _l_squared_matrix(basis, gs)

    odd_cols, even_cols = [], []
    odd_int, even_int = [], []
    interior_cut = n_max - 1
    for n in range(1, n_max + 1):
        blk = list(basis.block(n))
        eigenvalues, vectors = np.linalg.eigh(l2[np.ix_(blk, blk)])
        for pos, lam in enumerate(eigenvalues):
            l = int(round((-1.0 + math.sqrt(1.0 + 4.0 * lam)) / 2.0))
            full = np.zeros(basis.dim, dtype=complex)
            full[blk] = vectors[:, pos]
            if (n + l) % 2:
                odd_cols.append(full)
                if n <= interior_cut:
                    odd_int.append(full)
            else:
                even_cols.append(full)
                if n <= interior_cut:
                    even_int.append(full)

    vo = np.column_stack(odd_int)
    ve = np.column_stack(even_int)

    def cross(pair):
        m = matrixize(gs.J(*pair), basis).matrix
        block = vo.conj().T @ (m @ ve)
        return float(np.max(np.abs(block))) if block.size else 0.0

    per_generator = tuple((a, b, cross((a, b))) for a, b in SO32_PAIRS)
    max_so32 = max(v for _, _, v in per_generator)
    max_alpha4 = max(cross(pair) for pair in ALPHA4_PAIRS)
    if max_so32 > tolerance:
        raise VerificationError(
            f"an so(3,2) generator couples the parity sectors: {max_so32:.3e}"
        )
    if max_alpha4 <= coupling_threshold:
        raise VerificationError(
            f"no J_alpha4 generator couples the parity sectors: {max_alpha4:.3e}"
        )
    return ParityReport(
        n_max=n_max,
        odd_dim=len(odd_cols),
        even_dim=len(even_cols),
        max_cross_so32=max_so32,
        max_cross_alpha4=max_alpha4,
        cross_by_generator=per_generator,
    )


def reachability(
    n_max: int,
    generators: tuple | None = None,
    tolerance: float = 1e-8,
) -> int:
    """Dimension of the span generated from the ground state (0,0,0,0).

    Default generator set: the ladder J_45 - J_46 plus the six so(4)
    generators; repeated application reaches every constrained state, so the
    dimension is the full sum of n^2 up to the truncation.
    """
    if n_max < 2:
        raise InvalidInputError("need n_max >= 2")
    basis = build_basis(n_max, constrained=True)
    gs = build_so42()
    if generators is None:
        generators = (gs.J(4, 5) - gs.J(4, 6),) + tuple(
            gs.J(a, b) for a, b in SO4_PAIRS
        )
    mats = [matrixize(f, basis).matrix for f in generators]

    start = basis.position((0, 0, 0, 0))
    v0 = np.zeros(basis.dim, dtype=complex)
    v0[start] = 1.0
    span = [v0]
    queue = [v0]
    while queue:
        v = queue.pop(0)
        for m in mats:
            w = m @ v
            for u in span:
                w = w - u * np.vdot(u, w)
            norm = float(np.linalg.norm(w))
            if norm > tolerance:
                w = w / norm
                span.append(w)
                queue.append(w)
    return len(span)
