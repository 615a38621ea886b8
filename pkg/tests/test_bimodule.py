import pytest

from tauhh.bimodule import Bimodule, dual_bimodule, regular_bimodule
from tauhh.errors import InternalInconsistencyError


def test_regular_dims_two_cycle(two_cycle_gd2):
    x = regular_bimodule(two_cycle_gd2)
    assert x.dims[("y", "y")] == 2
    assert x.dims[("x", "x")] == 1
    assert x.dims[("y", "x")] == 1
    assert x.dims[("x", "y")] == 1
    assert x.total_dim == two_cycle_gd2.dim


def test_regular_dims_local(local_q2):
    x = regular_bimodule(local_q2)
    assert x.dims == {("u", "u"): 4}


def test_semisimple_regular(semisimple3):
    x = regular_bimodule(semisimple3)
    for (y, v), d in x.dims.items():
        assert d == (1 if y == v else 0)


def test_dual_transposes_dims(two_cycle_gd2, pair_first):
    for a in (two_cycle_gd2, pair_first):
        x = regular_bimodule(a)
        d = dual_bimodule(x)
        for (y, v), dim in x.dims.items():
            assert d.dims[(v, y)] == dim
        dd = dual_bimodule(d)
        assert dd.dims == x.dims
        assert d.total_dim == x.total_dim


def test_dual_of_two_cycle_regular(two_cycle_gd2):
    x = regular_bimodule(two_cycle_gd2)
    d = dual_bimodule(x)
    assert d.dims[("x", "y")] == x.dims[("y", "x")] == 1


def test_word_action_matches_relation_vanishing(pair_first):
    # a*d*a acts as zero on the regular bimodule
    x = regular_bimodule(pair_first)
    q = pair_first.quiver
    trav = tuple(q.arrow_index[n] for n in ["a", "d", "a"])
    p = q.path_from_traversal(trav)
    for v in q.vertices:
        m = x.left_action_of_path(p, v)
        assert all(x.field.is_zero(c) for row in m for c in row)


def test_invalid_bimodule_rejected(two_cycle_gd2):
    a = two_cycle_gd2
    f = a.field
    dims = {("x", "x"): 1, ("y", "y"): 1, ("y", "x"): 1, ("x", "y"): 1}
    # left action of a sends (x, x) -> (y, x); right action of b sends
    # (y, x) -> (y, y); a deliberately non-commuting pair
    left = {("a", "x"): [[f.one]]}
    right = {("b", "x"): [[f.one]], ("b", "y"): [[f.one]]}
    with pytest.raises(Exception):
        Bimodule(a, dims, left, right)


def test_outer_actions_commute(local_q2):
    x = regular_bimodule(local_q2)
    f = x.field
    lm = x.left_matrix("x", "u")
    rm = x.right_matrix("y", "u")

    def matmul(a, b):
        return [[sum((f.mul(a[i][k], b[k][j]) for k in range(4)), f.zero)
                 for j in range(4)] for i in range(4)]

    assert matmul(lm, rm) == matmul(rm, lm)
