from pathlib import Path

import pytest

from zetakirch.covering import (
    covering_spec,
    parse_voltage,
    theorem15_formula,
    verify_corollaries,
    verify_corollary3,
    verify_covering,
    verify_theorem14,
    verify_theorem15,
    verify_theorem16,
)
from zetakirch.errors import DisconnectedCoverError, ParseError, PreconditionError, UnsupportedGroupError
from zetakirch.graph import complete_graph, parse_graph, path_graph
from zetakirch.spanning import weighted_complexity

from conftest import data_path


def load(graph, voltage, numeric=False):
    g = parse_graph(Path(data_path("graphs", graph)).read_text())
    return parse_voltage(Path(data_path("voltages", voltage)).read_text(), g, numeric)


def test_triangle_double_cover_is_hexagon(k3):
    spec = covering_spec(k3, "Z2", ["0", "0", "1"])
    H = spec.derived
    assert (H.n, H.m) == (6, 6)
    assert all(d == 2 for d in H.degrees())
    formula, direct, v = verify_theorem15(spec)
    assert formula == direct == 6 and v.passed


def test_vertex_numbering(k3):
    spec = covering_spec(k3, "Z2", ["0", "0", "1"])
    # edge 2-3 (0-based 1, 2) carries the nontrivial voltage: (1, h) joins (2, 1 - h)
    assert (1, 5) in {(i, j) for i, j, _ in spec.derived.edges}


def test_trivial_voltage_is_disconnected(k3):
    with pytest.raises(DisconnectedCoverError):
        covering_spec(k3, "Z2", ["0", "0", "0"]).derived


def test_tree_covers_are_disconnected():
    # a tree has trivial fundamental group, so every lift splits into |G| copies
    with pytest.raises(DisconnectedCoverError):
        covering_spec(path_graph(3), "Z3", ["1", "2"]).derived


def test_lifts_of_a_simple_graph_are_simple(k4):
    spec = covering_spec(k4, "S3", ["(12)", "(123)", "e", "(13)", "e", "(23)"])
    pairs = [(i, j) for i, j, _ in spec.derived.edges]
    assert len(pairs) == len(set(pairs)) == 36


@pytest.mark.parametrize("graph, voltage", [
    ("k3.wgr", "k3_z2.vlt"),
    ("k4.wgr", "k4_z2.vlt"),
    ("k4.wgr", "k4_s3.vlt"),
    ("k4_weighted.wgr", "k4_z2.vlt"),
])
def test_exact_path(graph, voltage):
    spec = load(graph, voltage)
    assert spec.irreps.exact
    v = verify_covering(spec)
    assert v.passed, "\n".join(v.lines())
    names = {c.name for c in v.checks}
    assert {"cover.factorization", "cover.complexity", "cover.index_form1", "cover.index_form2", "cover.index_form3",
             "cover.index_at_1.weighted"} <= names


@pytest.mark.parametrize("graph, voltage", [("k3.wgr", "k3_z3.vlt"), ("k4.wgr", "k4_z4.vlt")])
def test_numeric_path(graph, voltage):
    spec = load(graph, voltage)
    assert not spec.irreps.exact
    v = verify_covering(spec, seed=3)
    assert v.passed, "\n".join(v.lines())


def test_numeric_path_agrees_with_exact_on_z2():
    exact = load("k4_weighted.wgr", "k4_z2.vlt")
    numeric = load("k4_weighted.wgr", "k4_z2.vlt", numeric=True)
    assert verify_covering(numeric).passed
    assert abs(complex(theorem15_formula(numeric)) - float(theorem15_formula(exact))) < 1e-6


def test_elementary_abelian_cover():
    spec = covering_spec(complete_graph(4), "Z2^2", ["00", "00", "00", "01", "10", "00"])
    assert spec.derived.n == 16
    assert verify_covering(spec).passed


def test_s3_cover_of_weighted_k4(k4w):
    spec = covering_spec(k4w, "S3", ["(12)", "(123)", "e", "(13)", "e", "(23)"])
    assert verify_theorem15(spec)[2].passed
    assert weighted_complexity(spec.derived) == theorem15_formula(spec)


def test_voltage_file_errors(k3):
    with pytest.raises(ParseError) as info:
        parse_voltage("Z2\n0\n2\n1\n", k3)
    assert info.value.line == 3
    with pytest.raises(ParseError):
        parse_voltage("Z2\n0\n1\n", k3)
    with pytest.raises(UnsupportedGroupError):
        parse_voltage("A5\n0\n1\n0\n", k3)


@pytest.mark.parametrize("check", ["cover.factorization", "cover.complexity", "cover.index_form2", "cover.index_at_1.unweighted"])
def test_negative_controls(check):
    spec = load("k4.wgr", "k4_z2.vlt")
    v = verify_covering(spec, perturb={check})
    failed = [c.name for c in v.checks if not c.passed]
    assert failed == [check]


def test_numeric_negative_control():
    spec = load("k3.wgr", "k3_z3.vlt")
    v = verify_theorem16(spec, perturb={"*"})
    assert v.checks and not any(c.passed for c in v.checks)


def test_unweighted_form_alone(k4w):
    spec = load("k4.wgr", "k4_z2.vlt")
    v = verify_corollary3(spec)
    assert [c.name for c in v.checks] == ["cover.index_at_1.unweighted"] and v.passed
    with pytest.raises(PreconditionError):
        verify_corollary3(load("k4_weighted.wgr", "k4_z2.vlt"))
