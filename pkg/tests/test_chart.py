"""Chart construction, column slicing, navigation moves, and renderers."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from so42pt import chart as C
from so42pt.addresses import Address
from so42pt.errors import InvalidInputError, NoTargetError


@given(st.integers(min_value=1, max_value=240))
def test_build_covers_each_atomic_number_once(z_limit):
    ch = C.build_chart(z_limit)
    zs = [rec.z for rec in ch.records()]
    assert zs == list(range(1, z_limit + 1))


def test_complete_rows_have_squared_populations():
    # row n is complete once its highest entry [2n-1, n] fills; for n = 6
    # that happens at Z = 242
    ch = C.build_chart(242)
    by_n = {row.n: sum(1 for box in row.boxes if box is not None) for row in ch.rows}
    for n in range(1, 7):
        assert by_n[n] == 2 * n * n


def test_sub_multiplet_splits():
    ch = C.build_chart(120)
    for row in ch.rows:
        for entry in row.entries:
            lengths = tuple(len(sm.boxes) for sm in entry.sub_multiplets)
            l = entry.entry.l
            if l == 0:
                assert lengths == (2,)
            else:
                assert lengths == (2 * l, 2 * l + 2)


def _entry_zs(ch, shell_sum, n):
    for row in ch.rows:
        for entry in row.entries:
            if entry.entry.shell_sum == shell_sum and entry.entry.n == n:
                return [box.z for sm in entry.sub_multiplets for box in sm.boxes if box]
    return []


def test_late_blocks_fill_in_entry_order():
    ch = C.build_chart(138)
    assert _entry_zs(ch, 8, 6)[-9:] == list(range(104, 113))
    assert _entry_zs(ch, 8, 7) == list(range(113, 119))
    assert _entry_zs(ch, 8, 8) == [119, 120]
    g_block = _entry_zs(ch, 9, 5)
    assert g_block == list(range(121, 139))
    assert len(g_block) == 18


def test_column_members():
    alkalis = C.column_members(C.ColumnKey(0, 1, -1), 7)
    assert [rec.symbol for rec in alkalis] == ["H", "Li", "Na", "K", "Rb", "Cs", "Fr"]
    earths = C.column_members(C.ColumnKey(0, 1, 1), 7)
    assert [rec.symbol for rec in earths] == ["He", "Be", "Mg", "Ca", "Sr", "Ba", "Ra"]
    f_first = C.column_members(C.ColumnKey(3, 5, -5), 5)
    assert [rec.z for rec in f_first] == [57, 89]


def test_column_key_validation():
    with pytest.raises(InvalidInputError):
        C.ColumnKey(1, 5, 1)
    with pytest.raises(InvalidInputError):
        C.ColumnKey(0, 1, 0)


def test_same_n_walks_a_row_left_to_right():
    a = Address(3, 0, 1, -1)
    seen = [a]
    while True:
        try:
            a = C.move(a, "same-n")
        except NoTargetError:
            break
        seen.append(a)
    assert len(seen) == 18
    assert seen[-1] == Address(3, 2, 5, 5)
    assert C.move(Address(4, 3, 5, -5), "same-n") == Address(4, 3, 5, -3)


def test_same_l_steps_down_a_column():
    from so42pt.addresses import atomic_number

    assert C.move(Address(4, 0, 1, 1), "same-l") == Address(5, 0, 1, 1)
    a = Address(1, 0, 1, -1)
    zs = [1]
    for _ in range(6):
        a = C.move(a, "same-l")
        zs.append(atomic_number(a))
    # walking the alkali column hits exactly the alkali atomic numbers
    assert zs == [1, 3, 11, 19, 37, 55, 87]


def test_knight_move_examples():
    from so42pt.addresses import atomic_number

    zn = Address(3, 2, 5, 5)
    ag = Address(4, 2, 5, 3)
    cd = Address(4, 2, 5, 5)
    assert atomic_number(C.move(zn, "knight")) == 50
    assert atomic_number(C.move(ag, "knight")) == 81
    assert atomic_number(C.move(cd, "knight")) == 82
    # d -> d is allowed: Sc lands on Nb
    assert atomic_number(C.move(Address(3, 2, 3, -3), "knight")) == 41


def test_knight_move_boundaries():
    with pytest.raises(NoTargetError):
        C.move(Address(1, 0, 1, -1), "knight")  # s block has no source
    with pytest.raises(NoTargetError):
        C.move(Address(4, 3, 5, -5), "knight")  # f block has no source
    with pytest.raises(InvalidInputError):
        C.move(Address(1, 0, 1, -1), "sideways")


def test_text_render_layout():
    ch = C.build_chart(120)
    text = C.render(ch, format="text")
    lines = text.splitlines()
    assert lines[0] == " 1  H  He"
    # H and Li sit in the same display column
    col = lines[0].index("H ")
    assert lines[1][col:col + 2] == "Li"
    he = lines[0].index("He")
    assert lines[1][he:he + 2] == "Be"
    assert C.render(ch) == text  # deterministic and default format


def test_scerri_like_render_mirrors_the_rows():
    ch = C.build_chart(120)
    text = C.render(ch, format="text", scerri_like=True)
    first = text.splitlines()[0]
    assert first.split() == ["1", "He", "H"]
    assert "Ne F  O  N  C  B" in text


def test_csv_render():
    ch = C.build_chart(120)
    out = C.render(ch, format="csv")
    lines = out.splitlines()
    assert lines[0] == "z,symbol,name,n,l,jj,mm,shell_sum,parity"
    assert len(lines) == 121
    assert lines[57] == "57,La,lanthanum,4,3,5,-5,7,odd"


def test_json_render_schema():
    ch = C.build_chart(4)
    payload = json.loads(C.render(ch, format="json"))
    assert payload["version"] == 1
    first_row = payload["rows"][0]
    assert first_row["n"] == 1
    box = first_row["entries"][0]["sub_multiplets"][0]["boxes"][0]
    assert box == {"mm": -1, "z": 1, "symbol": "H", "name": "hydrogen"}


def test_html_render():
    ch = C.build_chart(10)
    html = C.render(ch, format="html")
    assert '<td title="hydrogen (Z=1)">H</td>' in html
    assert html.startswith("<!doctype html>")
    assert html.count("<tr>") == html.count("</tr>")


def test_render_rejects_bad_combinations():
    ch = C.build_chart(10)
    with pytest.raises(InvalidInputError):
        C.render(ch, format="pdf")
    with pytest.raises(InvalidInputError):
        C.render(ch, format="csv", scerri_like=True)
    with pytest.raises(InvalidInputError):
        C.render(ch, format="json", scerri_like=True)


def test_renders_are_deterministic():
    a = C.build_chart(120)
    b = C.build_chart(120)
    for fmt in ("text", "csv", "json", "html"):
        assert C.render(a, format=fmt) == C.render(b, format=fmt)
