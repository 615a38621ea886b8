import pytest

from tauhh.algebra import AlgebraPresentation, build_algebra
from tauhh.linalg import GF, QQ
from tauhh.quiver import Quiver


def mono(q, word):
    """Path from a juxtaposition word like "a*d*a" (rightmost traversed first)."""
    names = word.split("*")
    return q.path_from_traversal(tuple(q.arrow_index[n] for n in reversed(names)))


def rel(q, *terms):
    """Relation vector from (coefficient, word) pairs."""
    vec = {}
    for coeff, word in terms:
        p = mono(q, word)
        vec[p] = vec.get(p, 0) + coeff
    return vec


def presentation(vertices, arrows, relations, field=QQ, cap=20):
    q = Quiver(vertices, arrows)
    rels = [rel(q, *r) for r in relations]
    return AlgebraPresentation(q, field, rels, cap)


# -- the standing example algebras -------------------------------------------

def make_two_cycle_gd2(field=QQ):
    """x <-> y with the single length-2 relation b*a; global dimension 2."""
    return presentation(
        ["x", "y"],
        [("a", "x", "y"), ("b", "y", "x")],
        [[(1, "b*a")]],
        field)


def make_pair_first(field=QQ):
    """Three vertices, four arrows, relations a*d*a, d*c, a*d - c*b."""
    return presentation(
        ["x", "y", "z"],
        [("a", "z", "y"), ("b", "y", "x"), ("c", "x", "y"), ("d", "y", "z")],
        [[(1, "a*d*a")], [(1, "d*c")], [(1, "a*d"), (-1, "c*b")]],
        field)


def make_pair_second(field=QQ):
    """Oriented triangle with relations a*c*b*a and c*b*a*c."""
    return presentation(
        ["x", "y", "z"],
        [("a", "y", "z"), ("b", "z", "x"), ("c", "x", "y")],
        [[(1, "a*c*b*a")], [(1, "c*b*a*c")]],
        field)


def make_local_q2(field=QQ):
    """One vertex, loops x and y, relations x*x, y*x + 2 x*y, y*y."""
    return presentation(
        ["u"],
        [("x", "u", "u"), ("y", "u", "u")],
        [[(1, "x*x")], [(1, "y*x"), (2, "x*y")], [(1, "y*y")]],
        field)


def make_monomial_aba(field=QQ):
    """x <-> y bound by the single length-3 monomial a*b*a."""
    return presentation(
        ["x", "y"],
        [("a", "x", "y"), ("b", "y", "x")],
        [[(1, "a*b*a")]],
        field)


def make_semisimple(n=3, field=QQ):
    verts = [f"v{i}" for i in range(n)]
    return presentation(verts, [], [], field)


def rsq_presentation(vertices, arrows, field=QQ):
    """kQ/F^2: every length-2 path is a relation."""
    q = Quiver(vertices, arrows)
    rels = []
    for p in q.paths_of_length(2):
        rels.append({p: field.one})
    return AlgebraPresentation(q, field, rels, 20)


def make_one_loop_rsq(field=QQ):
    return rsq_presentation(["u"], [("b", "u", "u")], field)


def make_two_cycle_rsq(field=QQ):
    return rsq_presentation(["x", "y"],
                            [("a", "x", "y"), ("b", "y", "x")], field)


def make_kronecker_rsq(field=QQ):
    return rsq_presentation(["x", "y"],
                            [("a", "x", "y"), ("b", "x", "y")], field)


@pytest.fixture(scope="session")
def two_cycle_gd2():
    return build_algebra(make_two_cycle_gd2())


@pytest.fixture(scope="session")
def pair_first():
    return build_algebra(make_pair_first())


@pytest.fixture(scope="session")
def pair_second():
    return build_algebra(make_pair_second())


@pytest.fixture(scope="session")
def local_q2():
    return build_algebra(make_local_q2())


@pytest.fixture(scope="session")
def monomial_aba():
    return build_algebra(make_monomial_aba())


@pytest.fixture(scope="session")
def semisimple3():
    return build_algebra(make_semisimple(3))


@pytest.fixture(scope="session")
def one_loop_rsq():
    return build_algebra(make_one_loop_rsq())


@pytest.fixture(scope="session")
def two_cycle_rsq():
    return build_algebra(make_two_cycle_rsq())


@pytest.fixture(scope="session")
def kronecker_rsq():
    return build_algebra(make_kronecker_rsq())
