"""Cartan classification data and counting rules for semi-simple Lie algebras.

Holds the four-family order formulas, the five exceptional algebras, the
Racah counting rule f = (r - 3l)/2 for complete commuting sets, the group
catalog used throughout (SO(3) ... Sp(8,R)), and an exact worked check of
the rank-1 Cartan basis.  All arithmetic in this module is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, NotSemiSimpleError
from .exact import CRat, Q2


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class FamilyId:
    letter: str  # one of A, B, C, D
    rank: int

    def __post_init__(self):
        if self.letter not in ("A", "B", "C", "D"):
            raise InvalidInputError(f"unknown family letter {self.letter!r}")
        if self.rank < 1:
            raise InvalidInputError("rank must be >= 1")


@dataclass(frozen=True)
class FamilyData:
    order: int
    order_minus_rank: int
    representative_name: str
    coincidence: str | None  # low-rank isomorphism note, if any


# canonical minimum ranks of the four families as usually tabulated
CANONICAL_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}

_ORDER_FORMULA = {
    "A": lambda l: l * (l + 2),
    "B": lambda l: l * (2 * l + 1),
    "C": lambda l: l * (2 * l + 1),
    "D": lambda l: l * (2 * l - 1),
}

_REPRESENTATIVE = {
    "A": lambda l: f"su({l + 1})",
    "B": lambda l: f"so({2 * l + 1})",
    "C": lambda l: f"sp({2 * l})",
    "D": lambda l: f"so({2 * l})",
}

# low-rank coincidences between families
_COINCIDENCES = {
    ("C", 1): "≅ A1",
    ("B", 1): "≅ A1",
    ("C", 2): "≅ B2",
    ("D", 2): "≅ A1⊕A1",
    ("D", 3): "≅ A3",
}


def coincidence(family: FamilyId) -> str | None:
    """Low-rank identification of `family` with another family, if one exists."""
    return _COINCIDENCES.get((family.letter, family.rank))


def family_data(family: FamilyId) -> FamilyData:
    """Order, order-rank, and representative real form of a classical family."""
    l = family.rank
    order = _ORDER_FORMULA[family.letter](l)
    return FamilyData(
        order=order,
        order_minus_rank=order - l,
        representative_name=_REPRESENTATIVE[family.letter](l),
        coincidence=coincidence(family),
    )


# ---------------------------------------------------------------------------
# exceptional algebras


@dataclass(frozen=True)
class ExceptionalId:
    name: str
    rank: int
    order_standard: int
    order_paper: int

    @property
    def discrepancy(self) -> bool:
        return self.order_standard != self.order_paper


# (rank, order_standard, order_as_tabulated_here).  E8's tabulated order 240
# counts only the roots; the standard dimension adds the rank: 112+128+8=248.
_EXCEPTIONAL = {
    "G2": (2, 14, 14),
    "F4": (4, 52, 52),
    "E6": (6, 78, 78),
    "E7": (7, 133, 133),
    "E8": (8, 248, 240),
}


def exceptional_data(name: str) -> ExceptionalId:
    if name not in _EXCEPTIONAL:
        raise InvalidInputError(f"unknown exceptional algebra {name!r}")
    rank, order_standard, order_paper = _EXCEPTIONAL[name]
    return ExceptionalId(name, rank, order_standard, order_paper)


def exceptional_names() -> tuple[str, ...]:
    return tuple(_EXCEPTIONAL)


# ---------------------------------------------------------------------------
# counting rules


@dataclass(frozen=True)
class CountingReport:
    order: int
    rank: int
    racah_number: int
    commuting_count: int


def racah_and_commuting(order: int, rank: int) -> CountingReport:
    """Racah number f = (r-3l)/2 and the size (r+l)/2 of a complete commuting set."""
    if not (order >= rank >= 1):
        raise InvalidInputError("need order >= rank >= 1")
    d = order - 3 * rank
    if d < 0 or d % 2 != 0:
        raise NotSemiSimpleError(
            f"(order={order}, rank={rank}): r-3l must be a non-negative even integer"
        )
    f = d // 2
    return CountingReport(
        order=order,
        rank=rank,
        racah_number=f,
        commuting_count=(order + rank) // 2,
    )


# ---------------------------------------------------------------------------
# the group catalog: (group name, algebra type, order)

GROUP_TABLE = (
    ("SO(3)", "A1", 3),
    ("SO(4)", "D2", 6),
    ("SO(4,1)", "B2", 10),
    ("SO(3,2)", "B2", 10),
    ("SO(4,2)", "D3", 15),
    ("SU(2)", "A1", 3),
    ("SU(2,2)", "A3", 15),
    ("Sp(8,R)", "C4", 36),
)

# counting table: (groups, algebra, order r, rank l, racah f, commuting count)
COUNTING_TABLE = (
    ("SO(3) and SU(2)", "B1 = A1", 3, 1, 0, 2),
    ("SO(4) and SU(2)xSU(2)", "D2 = A1+A1", 6, 2, 0, 4),
    ("SO(4,1) and SO(3,2)", "B2", 10, 2, 2, 6),
    ("SO(4,2) and SU(2,2)", "D3 = A3", 15, 3, 3, 9),
    ("Sp(8,R)", "C4", 36, 4, 12, 20),
)

# family table at canonical minimum rank: (letter, rank, order, order-rank,
# representative)
FAMILY_TABLE_MIN = (
    ("A", 1, 3, 2, "su(2)"),
    ("B", 2, 10, 8, "so(5)"),
    ("C", 3, 21, 18, "sp(6)"),
    ("D", 4, 28, 24, "so(8)"),
)

# exceptional table as tabulated: (name, rank, order, order-rank)
EXCEPTIONAL_TABLE = (
    ("G2", 2, 14, 12),
    ("F4", 4, 52, 48),
    ("E6", 6, 78, 72),
    ("E7", 7, 133, 126),
    ("E8", 8, 240, 232),
)


# ---------------------------------------------------------------------------
# rank-1 Cartan basis, checked exactly over Q(i, sqrt(2))


@dataclass(frozen=True)
class A1CheckReport:
    root_values: tuple  # exact Q2 pair, the Cartan eigencoefficients on E_{+-1}
    hermitian_pairing_ok: bool
    casimir_identity_residual: Fraction  # max-abs entry of the exact residual
    residual_matrix: tuple  # 2x2 of Q2
    convention: str


def _m2(rows):
    return tuple(tuple(Q2.coerce(x) for x in row) for row in rows)


def _madd(x, y):
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def _msub(x, y):
    return tuple(tuple(a - b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def _mscale(c, x):
    c = Q2.coerce(c)
    return tuple(tuple(c * a for a in row) for row in x)


def _mmul(x, y):
    n = len(x)
    return tuple(
        tuple(sum((x[i][k] * y[k][j] for k in range(n)), Q2(0)) for j in range(n))
        for i in range(n)
    )


def _mconjt(x):
    n = len(x)
    return tuple(tuple(x[j][i].conj() for j in range(n)) for i in range(n))


def a1_cartan_verify() -> A1CheckReport:
    """Exact check of the rank-1 Cartan basis built from spin-1/2 matrices.

    Uses the quantum convention [X_a, X_b] = i eps_abc X_c (an i-free bracket
    would make the Cartan roots imaginary) and the normalization
    H1 = (1/v) X3, E_{+-1} = (1/v^2)(X1 +- i X2) * v with v = sqrt(2).
    The advertised identity C1 = (1/2)(X1^2+X2^2+X3^2) = H1^2 + E+E- + E-E+
    does not close under this normalization; the exact residual is reported
    instead of asserted away.
    """
    half = Fraction(1, 2)
    i = CRat(0, 1)
    x1 = _m2(((0, Q2(CRat(half))), (Q2(CRat(half)), 0)))
    x2 = _m2(((0, Q2(-i * CRat(half))), (Q2(i * CRat(half)), 0)))
    x3 = _m2(((Q2(CRat(half)), 0), (0, Q2(-CRat(half)))))

    inv_v = Q2(0, CRat(half))  # 1/sqrt(2) = (1/2) sqrt(2)
    h1 = _mscale(inv_v, x3)
    x_plus = _madd(x1, _mscale(Q2(i), x2))
    x_minus = _msub(x1, _mscale(Q2(i), x2))
    # (1/v^2) * v = 1/v
    e_plus = _mscale(inv_v, x_plus)
    e_minus = _mscale(inv_v, x_minus)

    # root of E_{+1}: [H1, E+] = alpha E+, solved from the first nonzero entry
    bracket = _msub(_mmul(h1, e_plus), _mmul(e_plus, h1))
    alpha = None
    for r in range(2):
        for c in range(2):
            if e_plus[r][c]:
                alpha = bracket[r][c] / e_plus[r][c]
                break
        if alpha is not None:
            break
    assert alpha is not None
    if _msub(bracket, _mscale(alpha, e_plus)) != _m2(((0, 0), (0, 0))):
        raise AssertionError("E_{+1} is not a root vector of H1")
    bracket_m = _msub(_mmul(h1, e_minus), _mmul(e_minus, h1))
    beta = None
    for r in range(2):
        for c in range(2):
            if e_minus[r][c]:
                beta = bracket_m[r][c] / e_minus[r][c]
                break
        if beta is not None:
            break
    if _msub(bracket_m, _mscale(beta, e_minus)) != _m2(((0, 0), (0, 0))):
        raise AssertionError("E_{-1} is not a root vector of H1")

    pairing_ok = e_minus == _mconjt(e_plus)

    c1 = _mscale(
        Q2(CRat(half)),
        _madd(_madd(_mmul(x1, x1), _mmul(x2, x2)), _mmul(x3, x3)),
    )
    rhs = _madd(
        _mmul(h1, h1),
        _madd(_mmul(e_plus, e_minus), _mmul(e_minus, e_plus)),
    )
    residual = _msub(rhs, c1)

    norm = Fraction(0)
    for row in residual:
        for entry in row:
            # entries of the residual stay in Q (no i, no sqrt(2))
            assert entry.b.is_zero() and entry.a.is_real()
            norm = max(norm, abs(entry.a.re))

    return A1CheckReport(
        root_values=(alpha, beta),
        hermitian_pairing_ok=pairing_ok,
        casimir_identity_residual=norm,
        residual_matrix=residual,
        convention=(
            "[X_a,X_b] = i eps_abc X_c; H1 = (1/v) X3; "
            "E_{+-1} = (1/v^2)(X1 +- i X2) * v; v = sqrt(2)"
        ),
    )
