"""Diagram layout and byte-exact rendering against the golden files."""

from pathlib import Path

import pytest

from chainendo.diagram import (
    REGION_COLORS,
    UnsupportedSize,
    layout,
    render,
    render_ascii,
    render_svg,
)
from chainendo.triangle import Region, TriangleSpec

GOLDEN = Path(__file__).parent / "golden"
SPEC = TriangleSpec(4, 1, 2, 3)
BIG = TriangleSpec(6, 1, 3, 4)


class TestLayout:
    def test_cell_count_is_the_triangle_order(self):
        assert layout(SPEC).cell_count() == 15
        assert layout(BIG).cell_count() == 28

    def test_apex_first_and_rows_grow(self):
        plan = layout(SPEC)
        assert [len(row) for row in plan.rows] == [1, 2, 3, 4, 5]
        assert plan.rows[0][0].elem == (0, 0, 4)

    def test_base_runs_from_const_a_to_const_b(self):
        base = layout(SPEC).rows[-1]
        assert base[0].elem == (4, 0, 0)
        assert base[-1].elem == (0, 4, 0)

    def test_rows_are_centred(self):
        for row in layout(BIG).rows:
            assert row[0].x + row[-1].x == 2 * BIG.n
            assert all(b.x - a.x == 2 for a, b in zip(row, row[1:]))


class TestGolden:
    def test_plain_ascii(self):
        want = (GOLDEN / "tri4_plain.txt").read_text()
        assert render_ascii(SPEC) == want

    def test_region_ascii(self):
        want = (GOLDEN / "tri6_region.txt").read_text()
        assert render_ascii(BIG, color_by="region") == want

    def test_region_svg(self):
        want = (GOLDEN / "tri4_region.svg").read_text()
        assert render_svg(SPEC, color_by="region") == want

    def test_renders_are_reproducible(self):
        for mode in ("ascii", "svg"):
            for color_by in ("none", "region"):
                first = render(BIG, mode, color_by)
                second = render(BIG, mode, color_by)
                assert first == second


class TestAsciiShape:
    def test_no_trailing_whitespace_and_final_newline(self):
        text = render_ascii(BIG)
        assert text.endswith("\n") and not text.endswith("\n\n")
        for line in text.splitlines():
            assert line == line.rstrip()

    def test_region_letters_cover_all_regions(self):
        text = render_ascii(BIG, color_by="region")
        letters = {ch for ch in text if not ch.isspace()}
        assert letters == {r.value for r in Region}

    def test_row_count(self):
        assert len(render_ascii(SPEC).splitlines()) == SPEC.n + 1

    def test_soft_limit_warns_but_renders(self):
        spec = TriangleSpec(31, 1, 2, 3)
        with pytest.warns(UserWarning):
            text = render_ascii(spec)
        assert len(text.splitlines()) == 32


class TestSvgShape:
    def test_hard_limit(self):
        with pytest.raises(UnsupportedSize):
            render_svg(TriangleSpec(201, 1, 2, 3))

    def test_one_rect_per_member(self):
        text = render_svg(BIG)
        assert text.count("<rect ") == 28
        assert text.count("text-anchor") == 28

    def test_region_mode_uses_the_palette(self):
        text = render_svg(BIG, color_by="region")
        for region in Region:
            assert REGION_COLORS[region] in text
        assert "#FFFFFF" not in text

    def test_plain_mode_is_uncolored(self):
        text = render_svg(BIG)
        assert text.count("#FFFFFF") == 28


class TestDispatch:
    def test_bad_mode(self):
        with pytest.raises(ValueError):
            render(SPEC, mode="png")

    def test_bad_color_by(self):
        with pytest.raises(ValueError):
            render(SPEC, color_by="rainbow")
