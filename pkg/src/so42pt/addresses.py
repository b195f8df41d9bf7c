"""Quantum-number addresses for chemical elements.

An element is addressed by (n, l, j, m) with j = l +/- 1/2 and |m| <= j.
The half-integers j and m are stored doubled (jj = 2j, mm = 2m) so that
every invariant is integer-exact.  A closed formula maps an address to an
atomic number; its inverse walks the canonical enumeration.  The module
also carries the subshell filling rules (one rational parameter q), the
resulting electron configurations, and the embedded element datasets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .errors import InvalidInputError, VerificationError

# spectroscopic letters: s p d f g h i k ... (j is skipped by convention)
SUBSHELL_LETTERS = "spdfghiklmnoqrt"


def subshell_label(n: int, l: int) -> str:
    """Spectroscopic label of the subshell, e.g. (4, 3) -> '4f'."""
    if not (isinstance(n, int) and isinstance(l, int) and 0 <= l < n):
        raise InvalidInputError(f"not a subshell: (n={n}, l={l})")
    if l >= len(SUBSHELL_LETTERS):
        raise InvalidInputError(f"no spectroscopic letter for l={l}")
    return f"{n}{SUBSHELL_LETTERS[l]}"


def parse_subshell(label: str) -> tuple:
    """Inverse of subshell_label, e.g. '4f' -> (4, 3)."""
    text = label.strip().lower()
    head = text[:-1]
    if not (head.isdigit() and text[-1:] in SUBSHELL_LETTERS):
        raise InvalidInputError(f"not a subshell label: {label!r}")
    n, l = int(head), SUBSHELL_LETTERS.index(text[-1])
    if not 0 <= l < n:
        raise InvalidInputError(f"not a subshell label: {label!r}")
    return n, l


def format_subshells(pairs) -> str:
    """Render ((n, l), occupancy) pairs as '1s2 2s2 2p6 ...'."""
    return " ".join(f"{subshell_label(n, l)}{occ}" for (n, l), occ in pairs)


@dataclass(frozen=True)
class Address:
    """One element's quantum numbers (n, l, jj=2j, mm=2m)."""

    n: int
    l: int
    jj: int
    mm: int

    def __post_init__(self):
        n, l, jj, mm = self.n, self.l, self.jj, self.mm
        if not all(isinstance(v, int) for v in (n, l, jj, mm)):
            raise InvalidInputError("address components must be integers")
        if n < 1 or not 0 <= l <= n - 1:
            raise InvalidInputError(f"need 0 <= l <= n-1, got n={n}, l={l}")
        # jj in {2l-1, 2l+1} and positive; l=0 forces jj=1
        if jj < 1 or jj not in (2 * l - 1, 2 * l + 1):
            raise InvalidInputError(f"need jj in {{2l-1, 2l+1}}, jj >= 1, got jj={jj} for l={l}")
        if mm % 2 == 0 or abs(mm) > jj:
            raise InvalidInputError(f"need odd mm with |mm| <= jj, got mm={mm} for jj={jj}")

    @property
    def j(self) -> Fraction:
        return Fraction(self.jj, 2)

    @property
    def m(self) -> Fraction:
        return Fraction(self.mm, 2)

    @property
    def shell_sum(self) -> int:
        return self.n + self.l

    def __str__(self):
        return f"({self.n},{self.l},{self.j},{self.m})"

    @classmethod
    def parse(cls, text: str) -> "Address":
        """Parse '(4,3,5/2,-5/2)'; j and m accept fractions or decimals."""
        parts = text.strip().strip("()").split(",")
        if len(parts) != 4:
            raise InvalidInputError(f"not an address: {text!r}")
        try:
            n, l = int(parts[0]), int(parts[1])
            j, m = Fraction(parts[2].strip()), Fraction(parts[3].strip())
        except (ValueError, ZeroDivisionError) as err:
            raise InvalidInputError(f"not an address: {text!r}") from err
        jj, mm = 2 * j, 2 * m
        if jj.denominator != 1 or mm.denominator != 1:
            raise InvalidInputError(f"j and m must be half-integers in {text!r}")
        return cls(n, l, int(jj), int(mm))


@dataclass(frozen=True)
class ShellEntry:
    """One chart entry [shell_sum, n] holding a full subshell of boxes."""

    shell_sum: int
    n: int

    def __post_init__(self):
        l = self.shell_sum - self.n
        if self.n < 1 or not 0 <= l <= self.n - 1:
            raise InvalidInputError(f"not an entry: [{self.shell_sum} {self.n}]")

    @property
    def l(self) -> int:
        return self.shell_sum - self.n

    @property
    def capacity(self) -> int:
        return 2 * (2 * self.l + 1)

    @property
    def sub_multiplet_lengths(self) -> tuple:
        # the entry splits into j = l - 1/2 and j = l + 1/2 multiplets
        if self.l == 0:
            return (2,)
        return (2 * self.l, 2 * self.l + 2)

    def __str__(self):
        return f"[{self.shell_sum} {self.n}]"


@dataclass(frozen=True)
class ElementRecord:
    """A chemical element: atomic number, naming, address and entry data."""

    z: int
    name: str
    symbol: str | None
    address: Address
    entry: ShellEntry
    parity: str
    discovery_year: int | None = None


@dataclass(frozen=True)
class FillingRule:
    """Subshell ordering key (n + q*l, n, l), compared lexicographically.

    q = 1 is the Madelung rule, q = 0 the hydrogenic one, q = -1/2 the
    oscillator one and q = +1/2 the intermediate 'half' rule.
    """

    q: Fraction
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))

    def key(self, n: int, l: int):
        return (n + self.q * l, n, l)

    @classmethod
    def named(cls, name: str) -> "FillingRule":
        try:
            return _PRESETS[name]
        except KeyError:
            raise InvalidInputError(f"unknown filling rule: {name!r}") from None


MADELUNG = FillingRule(Fraction(1), "madelung")
HYDROGENIC = FillingRule(Fraction(0), "hydrogenic")
OSCILLATOR = FillingRule(Fraction(-1, 2), "oscillator")
HALF = FillingRule(Fraction(1, 2), "half")
_PRESETS = {r.name: r for r in (MADELUNG, HYDROGENIC, OSCILLATOR, HALF)}


@dataclass(frozen=True)
class Configuration:
    """Subshell occupancies in filling order plus the closed-core count."""

    subshells: tuple  # ((n, l), occupancy) pairs
    closed_core_count: int

    @property
    def total(self) -> int:
        return sum(occ for _, occ in self.subshells)

    def occupancies(self) -> dict:
        return {nl: occ for nl, occ in self.subshells}

    def compact(self) -> str:
        return format_subshells(self.subshells)


def atomic_number(a: Address) -> int:
    """Evaluate the closed-form address -> Z map in exact rationals."""
    s = a.n + a.l
    z = (
        Fraction(s * (s * s - 1), 6)
        + Fraction((s + 1) ** 2, 2)
        - Fraction((1 + (-1) ** s) * (s + 1), 4)
        - 4 * a.l * (a.l + 1)
        + a.l
        + a.j * (2 * a.l + 1)
        + a.m
        - 1
    )
    if z.denominator != 1 or z < 1:
        raise VerificationError(f"atomic number formula gave {z} at {a}")
    return int(z)


def _entry_addresses(shell_sum: int, n: int):
    # box order within an entry: jj ascending, then mm ascending
    l = shell_sum - n
    for jj in ((1,) if l == 0 else (2 * l - 1, 2 * l + 1)):
        for mm in range(-jj, jj + 1, 2):
            yield Address(n, l, jj, mm)


def _entries_of_shell(shell_sum: int):
    # entries [shell_sum, n] ordered by n ascending; l = shell_sum - n
    for n in range(shell_sum // 2 + 1, shell_sum + 1):
        yield ShellEntry(shell_sum, n)


def iter_addresses():
    """Infinite canonical stream: position k yields the address with Z = k."""
    for shell_sum in itertools.count(1):
        for entry in _entries_of_shell(shell_sum):
            yield from _entry_addresses(shell_sum, entry.n)


def enumerate_addresses(count: int) -> tuple:
    if count < 1:
        raise InvalidInputError(f"count must be >= 1, got {count}")
    return tuple(itertools.islice(iter_addresses(), count))


def _shell_capacity(shell_sum: int) -> int:
    # sum of 2(2l+1) over the entries of one shell_sum
    k = (shell_sum + 1) // 2
    return 2 * k * k


def address_of(z: int) -> Address:
    """Inverse of atomic_number along the canonical enumeration."""
    if not isinstance(z, int) or z < 1:
        raise InvalidInputError(f"atomic number must be a positive integer, got {z!r}")
    rest = z - 1
    shell_sum = 1
    while rest >= _shell_capacity(shell_sum):
        rest -= _shell_capacity(shell_sum)
        shell_sum += 1
    for entry in _entries_of_shell(shell_sum):
        if rest < entry.capacity:
            break
        rest -= entry.capacity
    l = entry.l
    for jj in ((1,) if l == 0 else (2 * l - 1, 2 * l + 1)):
        if rest < jj + 1:
            return Address(entry.n, l, jj, -jj + 2 * rest)
        rest -= jj + 1
    raise VerificationError(f"enumeration walk failed at Z={z}")  # unreachable


def parity_class(a: Address) -> str:
    return "even" if (a.n + a.l) % 2 == 0 else "odd"


def degeneracy_and_energy(n: int):
    """Return (n^2, 2n^2, E_n/E_1 = 1/n^2) for the n-th shell."""
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be a positive integer, got {n!r}")
    return n * n, 2 * n * n, Fraction(1, n * n)


@lru_cache(maxsize=64)
def _shell_sequence_block(rule: FillingRule, count: int) -> tuple:
    cap = count
    while True:
        pool = sorted(
            ((n, l) for n in range(1, cap + 1) for l in range(n)),
            key=lambda nl: rule.key(*nl),
        )
        chosen = pool[:count]
        # every subshell outside the pool has n > cap, hence first key
        # component >= bound and a larger n on ties
        bound = (cap + 1) + (rule.q * cap if rule.q < 0 else 0)
        if rule.key(*chosen[-1])[0] <= bound:
            return tuple(chosen)
        cap *= 2


def shell_sequence(rule: FillingRule, count: int) -> tuple:
    """First `count` subshells (n, l) in the rule's filling order."""
    if count < 1:
        raise InvalidInputError(f"count must be >= 1, got {count}")
    if rule.q < -1:
        raise InvalidInputError("filling order is not well-founded for q < -1")
    # cache power-of-two prefixes; any shorter request is a slice of one
    block = 1 << (count - 1).bit_length()
    return _shell_sequence_block(rule, block)[:count]


def electron_configuration(z: int, rule: FillingRule = MADELUNG) -> Configuration:
    """Fill subshells in rule order with the Stoner capacities 2(2l+1)."""
    if not isinstance(z, int) or z < 1:
        raise InvalidInputError(f"atomic number must be a positive integer, got {z!r}")
    filled = []
    rest = z
    for n, l in shell_sequence(rule, (z + 1) // 2):
        take = min(2 * (2 * l + 1), rest)
        filled.append(((n, l), take))
        rest -= take
        if rest == 0:
            break
    core = sum(occ for (n, l), occ in filled if occ == 2 * (2 * l + 1))
    return Configuration(tuple(filled), core)


# --- embedded datasets ---------------------------------------------------

def _data_text(name: str) -> str:
    return resources.files("so42pt").joinpath(f"data/{name}").read_text(encoding="utf-8")


def _rows(name: str):
    lines = _data_text(name).strip().split("\n")
    header = lines[0].split("\t")
    return header, [line.split("\t") for line in lines[1:]]


@lru_cache(maxsize=1)
def table2_rows() -> tuple:
    """The shipped 116-element address dataset as (address, z, symbol, name)."""
    _, body = _rows("table2.tsv")
    out = []
    for n, l, jj, mm, z, symbol, name in body:
        addr = Address(int(n), int(l), int(jj), int(mm))
        out.append((addr, int(z), symbol or None, name))
    return tuple(out)


@lru_cache(maxsize=1)
def _table3() -> dict:
    header, body = _rows("table3.tsv")
    columns = tuple(parse_subshell(h) for h in header[2:])
    out = {}
    for row in body:
        z = int(row[0])
        occ = tuple(
            (nl, int(v)) for nl, v in zip(columns, row[2:]) if int(v) != 0
        )
        out[z] = (row[1], occ)
    return out


def table3_reference(z: int) -> tuple:
    """Reference occupancies ((n, l), occ) for Z <= 103, dataset column order."""
    try:
        return _table3()[z][1]
    except KeyError:
        raise InvalidInputError(f"reference configurations cover Z = 1..103, got {z}") from None


@lru_cache(maxsize=1)
def discovery_years() -> dict:
    _, body = _rows("years.tsv")
    return {int(z): int(year) for z, year in body}


@lru_cache(maxsize=1)
def _names_by_z() -> dict:
    return {z: (name, symbol) for _, z, symbol, name in table2_rows()}


@lru_cache(maxsize=1)
def _z_by_symbol() -> dict:
    return {symbol.lower(): z for _, z, symbol, _ in table2_rows() if symbol}


def element_record(z: int) -> ElementRecord:
    """Element data for any Z >= 1; beyond the dataset the name is synthesized."""
    addr = address_of(z)
    name, symbol = _names_by_z().get(z, ("not named", None))
    return ElementRecord(
        z=z,
        name=name,
        symbol=symbol,
        address=addr,
        entry=ShellEntry(addr.shell_sum, addr.n),
        parity=parity_class(addr),
        discovery_year=discovery_years().get(z),
    )


def element_by_symbol(symbol: str) -> ElementRecord:
    z = _z_by_symbol().get(symbol.strip().lower())
    if z is None:
        raise InvalidInputError(f"unknown element symbol: {symbol!r}")
    return element_record(z)


@dataclass(frozen=True)
class DiffEntry:
    """One element where a filling rule disagrees with the reference dataset."""

    z: int
    predicted: Configuration
    reference: tuple  # ((n, l), occ) pairs


def configuration_diff(z_max: int, rule: FillingRule = MADELUNG) -> tuple:
    """All Z <= z_max where the rule's prediction differs from the dataset."""
    if not isinstance(z_max, int) or z_max < 1:
        raise InvalidInputError(f"z_max must be a positive integer, got {z_max!r}")
    if z_max > 103:
        raise InvalidInputError(f"reference configurations cover Z = 1..103, got {z_max}")
    out = []
    for z in range(1, z_max + 1):
        predicted = electron_configuration(z, rule)
        reference = table3_reference(z)
        if predicted.occupancies() != dict(reference):
            out.append(DiffEntry(z, predicted, reference))
    return tuple(out)
