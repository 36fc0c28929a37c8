from fractions import Fraction

import numpy as np
import pytest

from zetakirch.errors import UnsupportedGroupError, ValidationError
from zetakirch.groups import builtin_group, group_from_table, irreps_from_matrices


@pytest.mark.parametrize("token, order, degrees", [
    ("Z2", 2, (1, 1)),
    ("Z3", 3, (1, 1, 1)),
    ("Z5", 5, (1,) * 5),
    ("Z2^2", 4, (1,) * 4),
    ("Z2^3", 8, (1,) * 8),
    ("S3", 6, (1, 1, 2)),
])
def test_builtins(token, order, degrees):
    G, irreps = builtin_group(token)
    assert G.order == order
    assert irreps.degrees == degrees
    assert sum(f * f for f in degrees) == order


def test_exactness():
    assert builtin_group("Z2")[1].exact
    assert builtin_group("S3")[1].exact
    assert not builtin_group("Z3")[1].exact


def test_s3_composition():
    G, irreps = builtin_group("S3")
    a, b = G.index("(12)"), G.index("(13)")
    # (12)(13): apply (13) first, so 1 -> 3 -> 3, 3 -> 1 -> 2, giving (132)
    assert G.names[G.mul(a, b)] == "(132)"
    two = irreps.irreps[2]
    assert all(x.denominator == 1 for m in two.matrices for row in m for x in row)
    assert two.character(G.index("(123)")) == -1


def test_inverses():
    G, _ = builtin_group("S3")
    for g in range(G.order):
        assert G.mul(g, G.inverse(g)) == G.identity


@pytest.mark.parametrize("token", ["Z1", "Q8", "Z2^4", "D4"])
def test_unsupported(token):
    with pytest.raises(UnsupportedGroupError):
        builtin_group(token)


def test_table_validation():
    with pytest.raises(ValidationError):
        group_from_table("bad", [[0, 1], [0, 1]])


def test_user_supplied_representations():
    G = group_from_table("C2", [[0, 1], [1, 0]])
    irreps = irreps_from_matrices(G, [[[[1]], [[1]]], [[[1]], [[-1]]]])
    assert irreps.exact
    with pytest.raises(ValidationError):
        irreps_from_matrices(G, [[[[1]], [[1]]], [[[1]], [[1]]]])


def test_numeric_user_representation():
    G = group_from_table("C3", [[(a + b) % 3 for b in range(3)] for a in range(3)])
    w = np.exp(2j * np.pi / 3)
    reps = [[[[1.0]]] * 3, [[[1]], [[w]], [[w * w]]], [[[1]], [[w * w]], [[w]]]]
    assert not irreps_from_matrices(G, reps).exact
