"""Rendering helpers: aligned tables, dg algebra listings, report and
certificate lines, and the basis sign normalization."""

from siltkit.cli.render import (
    canonical_signs,
    certificate_lines,
    collection_summary,
    columns,
    complex_summary,
    coords_text,
    dg_structured_lines,
    dg_table_lines,
    dims_text,
    pattern_structured_lines,
    pattern_table_lines,
    report_lines,
    report_structured_lines,
)
from siltkit.correspond.checks import check_pattern, check_presilting, check_smc, pattern_table
from siltkit.correspond.pipeline import standard_pair
from siltkit.dg import dg_end


def test_columns_pads_to_the_widest_cell():
    assert columns([("a", "bb", "c"), ("dd", "e", "fff")]) == [
        "a   bb  c",
        "dd  e   fff",
    ]


def test_dims_text_orders_degrees():
    assert dims_text({1: 1, 0: 2}) == "0: 2, 1: 1"
    assert dims_text({}) == "0"


def test_complex_and_collection_summaries(a2):
    _, smc = standard_pair(a2)
    assert complex_summary(smc[0]) == "res(1): [P2 @ -1 -> P1 @ 0]"
    assert collection_summary(smc) == (
        "{res(1): [P2 @ -1 -> P1 @ 0], res(2): [P2 @ 0]}"
    )


def test_dg_table_shows_elements_products_and_dimensions(a2):
    _, smc = standard_pair(a2)
    lines = dg_table_lines(dg_end(smc), "dg end")
    assert lines[0] == "dg end (7 elements)"
    assert lines[1].split() == ["element", "degree", "d(element)"]
    assert "  nonzero products:" in lines
    assert lines[-2] == "  graded dimensions: -1: 1, 0: 4, 1: 2"
    assert lines[-1] == "  cohomology dimensions: 0: 2, 1: 1"


def test_dg_structured_lines_are_machine_readable(a2):
    _, smc = standard_pair(a2)
    E = dg_end(smc)
    lines = dg_structured_lines(E, "end")
    assert lines[0] == "end dimension 7"
    assert sum(1 for l in lines if l.startswith("end element ")) == 7
    assert sum(1 for l in lines if l.startswith("end d ")) == 3
    assert "end cohomology 0 2" in lines
    assert "end cohomology 1 1" in lines
    product_lines = [l for l in lines if l.startswith("end product ")]
    assert product_lines == sorted(product_lines)


def test_sign_normalization_is_a_unit_vector(a2):
    _, smc = standard_pair(a2)
    E = dg_end(smc)
    signs = canonical_signs(E)
    assert len(signs) == E.dimension
    assert set(signs) <= {1, -1}
    # the first rendered product must come out with a positive sign
    lines = dg_table_lines(E, "t")
    start = lines.index("  nonzero products:")
    first = lines[start + 1]
    assert not first.split("=")[1].strip().startswith("-")


def test_coords_text_handles_zero_and_units(a2):
    _, smc = standard_pair(a2)
    E = dg_end(smc)
    signs = canonical_signs(E)
    assert coords_text(E, {}, signs) == "0"
    rendered = coords_text(E, E.differential[0], signs)
    assert rendered and not rendered.startswith("0")


def test_report_lines_mark_failures(a2):
    _, smc = standard_pair(a2)
    lines = report_lines(check_presilting(smc))
    assert lines[0] == "presilting: fail"
    assert any(l.startswith("  [FAIL]") for l in lines)
    ok_lines = [l for l in lines if l.startswith("  [ok  ]")]
    assert len(ok_lines) == 4


def test_structured_report_carries_the_witness(a2):
    _, smc = standard_pair(a2)
    lines = report_structured_lines(check_presilting(smc))
    assert lines[-1] == "witness presilting (0, 1, 1, 1)"
    assert any(l.startswith("check presilting violated ") for l in lines)


def test_passing_report_has_no_witness_line(a2):
    _, smc = standard_pair(a2)
    lines = report_structured_lines(check_smc(smc))
    assert all(not l.startswith("witness") for l in lines)
    assert all(" ok " in l for l in lines)


def test_pattern_table_lines(a2):
    silting, smc = standard_pair(a2)
    lines = pattern_table_lines(pattern_table(silting, smc), 2, 2)
    assert lines[0].startswith("degree-0 Hom table")
    assert lines[1].split() == ["T1", "T2"]
    assert lines[2].split() == ["S1", "1", "0"]
    assert lines[3].split() == ["S2", "0", "1"]
    assert lines[-1] == "all entries away from degree 0 vanish"


def test_pattern_structured_lines_are_sorted_and_complete(a2):
    silting, smc = standard_pair(a2)
    lines = pattern_structured_lines(pattern_table(silting, smc))
    assert lines == sorted(lines)
    assert "hom S1 T1 0 1" in lines
    assert "hom S2 T1 -1 0" in lines


def test_certificate_lines_lead_with_the_bijection(a2):
    cert = check_pattern(*standard_pair(a2))
    lines = certificate_lines(cert)
    assert lines[0] == "bijection: S1 -> T1, S2 -> T2"
    assert lines[1].startswith("degree-0 Hom table")


def test_rendering_is_deterministic(a2):
    silting, smc = standard_pair(a2)
    once = dg_table_lines(dg_end(smc), "x")
    again = dg_table_lines(dg_end(smc), "x")
    assert once == again
    assert certificate_lines(check_pattern(silting, smc)) == certificate_lines(
        check_pattern(silting, smc)
    )
