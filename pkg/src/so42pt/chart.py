"""Periodic chart construction, rendering, and address navigation moves.

The chart lays rows by n; row n holds the entries [n+l, n] for l = 0..n-1,
each entry splitting into one or two j-multiplets of 2(2l+1) boxes total.
Navigation covers the same-n successor, the same-l (column) successor, and
the knight's move defined through conventional-table (period, group)
coordinates.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass

from .addresses import (
    Address,
    ElementRecord,
    ShellEntry,
    atomic_number,
    element_record,
)
from .errors import InvalidInputError, NoTargetError


@dataclass(frozen=True)
class ColumnKey:
    """A chart column (l, jj, mm): the n-independent part of an address."""

    l: int
    jj: int
    mm: int

    def __post_init__(self):
        # same sub-address constraints as Address, with n left free
        Address(self.l + 1, self.l, self.jj, self.mm)


@dataclass(frozen=True)
class SubMultiplet:
    """One j-multiplet inside an entry; boxes ordered by mm ascending."""

    jj: int
    boxes: tuple  # ElementRecord


@dataclass(frozen=True)
class ChartEntry:
    entry: ShellEntry
    sub_multiplets: tuple

    @property
    def boxes(self) -> tuple:
        return tuple(b for sm in self.sub_multiplets for b in sm.boxes)


@dataclass(frozen=True)
class ChartRow:
    n: int
    entries: tuple  # ChartEntry, l ascending

    @property
    def boxes(self) -> tuple:
        return tuple(b for e in self.entries for b in e.boxes)


@dataclass(frozen=True)
class Chart:
    z_limit: int
    rows: tuple  # ChartRow, n ascending

    def records(self) -> tuple:
        """All element records in atomic-number order."""
        return tuple(sorted((b for r in self.rows for b in r.boxes), key=lambda b: b.z))


def _entry_slots(l: int):
    # canonical box order of one entry: jj ascending, then mm ascending
    for jj in ((1,) if l == 0 else (2 * l - 1, 2 * l + 1)):
        for mm in range(-jj, jj + 1, 2):
            yield jj, mm


def build_chart(z_limit: int) -> Chart:
    """Chart holding every element with Z <= z_limit."""
    if not isinstance(z_limit, int) or z_limit < 1:
        raise InvalidInputError(f"z_limit must be a positive integer, got {z_limit!r}")
    grouped = {}
    for z in range(1, z_limit + 1):
        rec = element_record(z)
        a = rec.address
        grouped.setdefault((a.n, a.l, a.jj), []).append(rec)
    rows = []
    for n in range(1, max(k[0] for k in grouped) + 1):
        entries = []
        for l in range(n):
            subs = tuple(
                SubMultiplet(jj, tuple(grouped[(n, l, jj)]))
                for jj in ((1,) if l == 0 else (2 * l - 1, 2 * l + 1))
                if (n, l, jj) in grouped
            )
            if subs:
                entries.append(ChartEntry(ShellEntry(n + l, n), subs))
        rows.append(ChartRow(n, tuple(entries)))
    return Chart(z_limit, tuple(rows))


def column_members(key: ColumnKey, n_max: int) -> tuple:
    """Elements sharing (l, jj, mm) for n <= n_max, ordered by n."""
    if n_max < 1:
        raise InvalidInputError(f"n_max must be >= 1, got {n_max}")
    out = []
    for n in range(key.l + 1, n_max + 1):
        z = atomic_number(Address(n, key.l, key.jj, key.mm))
        out.append(element_record(z))
    return tuple(out)


# --- navigation moves ----------------------------------------------------

class MoveKind(enum.Enum):
    SAME_N_NEXT = "same-n"
    SAME_L_NEXT = "same-l"
    KNIGHT = "knight"


def _box_position(a: Address) -> int:
    # 1-based position of the box inside its entry, (jj, mm) order
    offset = 2 * a.l if (a.l > 0 and a.jj == 2 * a.l + 1) else 0
    return offset + (a.mm + a.jj) // 2 + 1


def _address_at(n: int, l: int, pos: int) -> Address:
    # inverse of _box_position for the entry [n+l, n]
    if not 1 <= pos <= 2 * (2 * l + 1):
        raise InvalidInputError(f"no box {pos} in an l={l} entry")
    if l > 0 and pos <= 2 * l:
        jj = 2 * l - 1
        return Address(n, l, jj, -jj + 2 * (pos - 1))
    jj = 2 * l + 1
    return Address(n, l, jj, -jj + 2 * (pos - 2 * l - 1))


def _knight(a: Address) -> Address:
    # Laing's move on conventional-table coordinates: one period down,
    # two groups right; defined for d- and p-block sources only
    pos = _box_position(a)
    if a.l == 1:
        period, group = a.n, pos + 12
    elif a.l == 2:
        period, group = a.n + 1, pos + 2
    else:
        raise NoTargetError(f"knight move undefined from an l={a.l} address")
    period, group = period + 1, group + 2
    if 3 <= group <= 12:
        return _address_at(period - 1, 2, group - 2)
    if 13 <= group <= 18:
        return _address_at(period, 1, group - 12)
    raise NoTargetError(f"knight move from {a} leaves the table")


def move(a: Address, kind) -> Address:
    """Successor address under the given move; NoTargetError at boundaries."""
    try:
        kind = MoveKind(kind)
    except ValueError as err:
        raise InvalidInputError(f"unknown move kind {kind!r}") from err
    if kind is MoveKind.SAME_L_NEXT:
        return Address(a.n + 1, a.l, a.jj, a.mm)
    if kind is MoveKind.KNIGHT:
        return _knight(a)
    # same-n successor in (l, jj, mm) lexicographic order
    if a.mm + 2 <= a.jj:
        return Address(a.n, a.l, a.jj, a.mm + 2)
    if a.jj == 2 * a.l - 1:
        return Address(a.n, a.l, a.jj + 2, -a.jj - 2)
    if a.l + 1 <= a.n - 1:
        l = a.l + 1
        return Address(a.n, l, 2 * l - 1, -(2 * l - 1))
    raise NoTargetError(f"{a} is the last address of its n-row")


# --- rendering -----------------------------------------------------------

def _grid(chart: Chart, scerri_like: bool):
    """Rows of (label, cells); each cell is an ElementRecord or None."""
    by_entry = {(e.entry.n, e.entry.l): e for row in chart.rows for e in row.entries}
    boxed = {}
    for (n, l), entry in by_entry.items():
        present = {(b.address.jj, b.address.mm): b for b in entry.boxes}
        boxed[(n, l)] = [present.get(slot) for slot in _entry_slots(l)]
    l_max = max(l for _, l in by_entry)
    lines = []
    if not scerri_like:
        # row n, blocks l ascending left to right
        for row in chart.rows:
            cells = []
            for l in range(min(row.n, l_max + 1)):
                cells.extend(boxed.get((row.n, l), [None] * (2 * (2 * l + 1))))
            lines.append((row.n, cells))
    else:
        # mirrored: blocks l descending, boxes reversed, block [n+l, n]
        # lowered by l so the display row is the shell sum n+l
        r_max = max(n + l for n, l in by_entry)
        for r in range(1, r_max + 1):
            cells = []
            for l in range(l_max, -1, -1):
                n = r - l
                block = boxed.get((n, l)) if n >= l + 1 else None
                if block is None:
                    block = [None] * (2 * (2 * l + 1))
                cells.extend(reversed(block))
            lines.append((r, cells))
    trimmed = []
    for label, cells in lines:
        while cells and cells[-1] is None:
            cells.pop()
        trimmed.append((label, cells))
    return trimmed


def _render_text(chart: Chart, scerri_like: bool) -> str:
    lines = []
    for label, cells in _grid(chart, scerri_like):
        symbols = ["  " if b is None else (b.symbol or "/").ljust(2) for b in cells]
        lines.append(f"{label:2d}  " + " ".join(symbols).rstrip())
    return "\n".join(lines) + "\n"


def _render_html(chart: Chart, scerri_like: bool) -> str:
    out = [
        "<!doctype html>",
        '<html><head><meta charset="utf-8"><title>periodic chart</title></head><body>',
        "<table>",
    ]
    for label, cells in _grid(chart, scerri_like):
        tds = []
        for b in cells:
            if b is None:
                tds.append("<td></td>")
            else:
                tds.append(f'<td title="{b.name} (Z={b.z})">{b.symbol or "/"}</td>')
        out.append(f"<tr><th>{label}</th>{''.join(tds)}</tr>")
    out.extend(["</table>", "</body></html>", ""])
    return "\n".join(out)


def _render_csv(chart: Chart) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["z", "symbol", "name", "n", "l", "jj", "mm", "shell_sum", "parity"])
    for b in chart.records():
        a = b.address
        writer.writerow([b.z, b.symbol or "", b.name, a.n, a.l, a.jj, a.mm, a.shell_sum, b.parity])
    return buf.getvalue()


def _render_json(chart: Chart) -> str:
    rows = []
    for row in chart.rows:
        entries = []
        for e in row.entries:
            entries.append(
                {
                    "shell_sum": e.entry.shell_sum,
                    "n": e.entry.n,
                    "sub_multiplets": [
                        {
                            "jj": sm.jj,
                            "boxes": [
                                {
                                    "mm": b.address.mm,
                                    "z": b.z,
                                    "symbol": b.symbol,
                                    "name": b.name,
                                }
                                for b in sm.boxes
                            ],
                        }
                        for sm in e.sub_multiplets
                    ],
                }
            )
        rows.append({"n": row.n, "entries": entries})
    return json.dumps({"version": 1, "rows": rows}, indent=2) + "\n"


def render(chart: Chart, format: str = "text", scerri_like: bool = False) -> str:
    """Deterministic serialization of a chart in the given format."""
    if format == "text":
        return _render_text(chart, scerri_like)
    if format == "html":
        return _render_html(chart, scerri_like)
    if scerri_like:
        raise InvalidInputError("scerri-like layout applies to text and html only")
    if format == "csv":
        return _render_csv(chart)
    if format == "json":
        return _render_json(chart)
    raise InvalidInputError(f"unknown chart format: {format!r}")
