import random
from fractions import Fraction
from pathlib import Path

import pytest

from zetakirch.errors import ParseError, ValidationError
from zetakirch.graph import (
    WeightedGraph,
    complete_bipartite,
    cycle_graph,
    matrices,
    parse_graph,
    parse_rational,
    random_graph,
    to_wgr,
)

from conftest import data_path


def test_parse_p3():
    g = parse_graph(Path(data_path("graphs", "p3.wgr")).read_text())
    assert (g.n, g.m, g.total_weight()) == (3, 2, 5)
    assert g.weighted_degrees() == [2, 5, 3]


def test_bytes_and_comments():
    g = parse_graph(b"# header\n\n2 1\n# edge\n1 2 -3/4\n")
    assert g.edges == ((0, 1, Fraction(-3, 4)),)


@pytest.mark.parametrize(
    "text, line, kind",
    [
        ("3 2\n1 2 1\n2 2 1\n", 3, ValidationError),
        ("3 2\n1 2 1\n1 2 5\n", 3, ValidationError),
        ("3 2\n1 2 1\n2 3 0\n", 3, ValidationError),
        ("3 2\n1 2 1\n2 4 1\n", 3, ValidationError),
        ("3 2\n2 1 1\n2 3 1\n", 2, ValidationError),
        ("3 2\n1 2 1.5\n2 3 1\n", 2, ParseError),
        ("3 2\n1 2 1/0\n2 3 1\n", 2, ParseError),
        ("3 3\n1 2 1\n2 3 1\n", 3, ParseError),
        ("3\n1 2 1\n", 1, ParseError),
    ],
)
def test_bad_files_name_their_line(text, line, kind):
    with pytest.raises(kind) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_disconnected_rejected():
    with pytest.raises(ValidationError):
        parse_graph("4 2\n1 2 1\n3 4 1\n")


def test_parse_rational():
    assert parse_rational("-7/21") == Fraction(-1, 3)
    with pytest.raises(ValueError):
        parse_rational("1e3")


def test_round_trip_text():
    g = cycle_graph(5, [1, Fraction(1, 2), -2, 3, 5])
    assert parse_graph(to_wgr(g, "five cycle")) == g


def test_matrices():
    g = complete_bipartite(2, 3)
    mb = matrices(g)
    assert mb.D_w == [[3 if i == j and i < 2 else 2 if i == j else 0 for j in range(5)] for i in range(5)]
    assert all(sum(row) == 0 for row in mb.L)


def test_arcs_pair_up():
    g = cycle_graph(4)
    arcs = g.arcs
    assert len(arcs) == 2 * g.m
    for e, (a, b) in enumerate(arcs):
        assert arcs[g.inverse_arc(e)] == (b, a)


def test_random_graphs_are_connected():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, 2, 7, 10, min_extra=1)
        assert g.is_connected()
        assert g.m <= 10 and g.m >= g.n


def test_direct_construction_validates():
    with pytest.raises(ValidationError):
        WeightedGraph(3, ((0, 1, Fraction(1)),))
