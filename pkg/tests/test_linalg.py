import random
from fractions import Fraction

from tauhh.linalg import (GF, QQ, SparseMatrix, kernel_dim, nullspace, rank,
                          rank_dense, rref, solve_in_rowspan)


def test_identity_rank():
    m = SparseMatrix.identity(3, QQ)
    assert rank(m) == 3
    assert kernel_dim(m) == 0


def test_zero_matrix():
    m = SparseMatrix(3, 3, QQ)
    assert rank(m) == 0
    z = SparseMatrix(4, 6, QQ)
    assert kernel_dim(z) == 6


def test_rank_one_all_ones():
    m = SparseMatrix.from_rows([[1, 1], [1, 1]], QQ)
    assert rank(m) == 1
    assert kernel_dim(m) == 1


def test_rank_strategies_agree_over_q():
    rng = random.Random(20240817)
    for _ in range(60):
        r = rng.randrange(1, 7)
        c = rng.randrange(1, 7)
        rows = [[Fraction(rng.randrange(-4, 5), rng.choice([1, 1, 1, 2, 3]))
                 for _ in range(c)] for _ in range(r)]
        m = SparseMatrix.from_rows(rows, QQ)
        assert m.rank("fraction_free") == m.rank("plain")
        assert m.rank() + m.kernel_dim() == c


def test_rank_strategies_agree_over_gfp():
    rng = random.Random(7)
    for p in (2, 3, 99991):
        f = GF(p)
        for _ in range(25):
            r = rng.randrange(1, 7)
            c = rng.randrange(1, 7)
            rows = [[rng.randrange(p if p < 50 else 9) for _ in range(c)]
                    for _ in range(r)]
            m = SparseMatrix.from_rows(rows, f)
            assert m.rank("fraction_free") == m.rank("plain")
            assert m.rank() + m.kernel_dim() == c


def test_rank_mod_p_bounded_by_rational_rank():
    rng = random.Random(424242)
    big_prime_drops = 0
    for _ in range(40):
        r = rng.randrange(1, 7)
        c = rng.randrange(1, 7)
        rows = [[rng.randrange(-4, 5) for _ in range(c)] for _ in range(r)]
        rq = SparseMatrix.from_rows(rows, QQ).rank()
        for p in (2, 3, 99991):
            rp = SparseMatrix.from_rows(rows, GF(p)).rank()
            assert rp <= rq
            if p == 99991 and rp != rq:
                big_prime_drops += 1
    # minors of tiny integer matrices cannot hit a 5-digit prime
    assert big_prime_drops == 0


def test_transpose_rank_invariance():
    rng = random.Random(99)
    for _ in range(20):
        rows = [[rng.randrange(-3, 4) for _ in range(5)] for _ in range(3)]
        m = SparseMatrix.from_rows(rows, QQ)
        assert m.rank() == m.transpose().rank()


def test_sparse_mul():
    a = SparseMatrix.from_rows([[1, 2], [0, 1]], QQ)
    b = SparseMatrix.from_rows([[1, 0], [3, 1]], QQ)
    ab = a.mul(b)
    assert ab.get(0, 0) == 7
    assert ab.get(0, 1) == 2
    assert ab.get(1, 0) == 3
    assert ab.get(1, 1) == 1


def test_rref_and_nullspace_canonical():
    basis = nullspace([[1, 1], [1, 1]], 2, QQ)
    assert basis == [[Fraction(-1), Fraction(1)]]
    red, pivots = rref([[0, 2, 1], [0, 4, 2]], 3, QQ)
    assert pivots == [1]
    assert red == [[Fraction(0), Fraction(1), Fraction(1, 2)]]


def test_solve_in_rowspan():
    coords = solve_in_rowspan([[1, 0, 1], [0, 1, 1]], 3, QQ, [2, 3, 5])
    assert coords == [Fraction(2), Fraction(3)]
    assert solve_in_rowspan([[1, 0, 0]], 3, QQ, [0, 1, 0]) is None


def test_mixed_dimensions_guard():
    m = SparseMatrix(2, 2, QQ)
    try:
        m.add_entry(5, 0, 1)
    except Exception as exc:
        assert "outside" in str(exc)
    else:
        raise AssertionError("out-of-bounds entry accepted")


def test_rank_dense_matches_sparse():
    rng = random.Random(3)
    for _ in range(20):
        rows = [[rng.randrange(-2, 3) for _ in range(4)] for _ in range(4)]
        assert rank_dense(rows, 4, QQ) == SparseMatrix.from_rows(rows, QQ).rank()
