"""Exact scalar arithmetic and sparse linear algebra.

Scalars are plain Python values interpreted through a field object:
`Fraction` over the rationals, residues in ``[0, p)`` over a prime
field.  No floating point appears anywhere; every rank/kernel result
is exact and deterministic.

Two independent rank strategies are provided: a fraction-free
(Bareiss-style cross-multiplication with gcd normalisation) Markowitz
elimination, and a plain textbook elimination that divides through the
pivot.  They must agree; the test suite cross-checks them on random
matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import InternalInconsistencyError, PresentationError


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any sane modulus."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The rationals; scalars are `fractions.Fraction` (always reduced)."""

    characteristic = 0

    def __repr__(self):
        return "Q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def scalar(self, value):
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / Fraction(b)

    def is_zero(self, a):
        return a == 0

    def to_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    """GF(p); scalars are ints in [0, p).  Distinct moduli never mix."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise PresentationError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p

    def __repr__(self):
        return f"GF({self.p})"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def scalar(self, value):
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by modulus")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def to_str(self, a):
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


class SparseMatrix:
    """Sparse matrix over a fixed field; zero entries are never stored."""

    def __init__(self, n_rows: int, n_cols: int, field, entries=None):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.field = field
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                self.add_entry(i, j, v)

    def add_entry(self, i, j, value):
        """Accumulate `value` at (i, j), dropping the entry if it cancels."""
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise InternalInconsistencyError(
                f"entry ({i},{j}) outside {self.n_rows}x{self.n_cols}")
        value = self.field.scalar(value)
        key = (i, j)
        if key in self.entries:
            value = self.field.add(self.entries[key], value)
        if self.field.is_zero(value):
            self.entries.pop(key, None)
        else:
            self.entries[key] = value

    def get(self, i, j):
        return self.entries.get((i, j), self.field.zero)

    @property
    def nnz(self):
        return len(self.entries)

    @classmethod
    def identity(cls, n, field):
        m = cls(n, n, field)
        for i in range(n):
            m.add_entry(i, i, field.one)
        return m

    @classmethod
    def from_rows(cls, rows, field):
        m = cls(len(rows), len(rows[0]) if rows else 0, field)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                v = field.scalar(v)
                if not field.is_zero(v):
                    m.add_entry(i, j, v)
        return m

    def rows_as_dicts(self):
        rows = [dict() for _ in range(self.n_rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def transpose(self):
        t = SparseMatrix(self.n_cols, self.n_rows, self.field)
        for (i, j), v in self.entries.items():
            t.entries[(j, i)] = v
        return t

    def mul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.field != other.field:
            raise InternalInconsistencyError("matrix product across distinct fields")
        if self.n_cols != other.n_rows:
            raise InternalInconsistencyError("matrix product shape mismatch")
        f = self.field
        by_row = {}
        for (i, j), v in other.entries.items():
            by_row.setdefault(i, []).append((j, v))
        out = SparseMatrix(self.n_rows, other.n_cols, f)
        acc = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                acc[key] = f.add(acc.get(key, f.zero), f.mul(a, b))
        for key, v in acc.items():
            if not f.is_zero(v):
                out.entries[key] = v
        return out

    def is_zero(self):
        return not self.entries

    def rank(self, strategy: str = "fraction_free") -> int:
        if strategy == "fraction_free":
            return _rank_fraction_free(self)
        if strategy == "plain":
            return _rank_plain(self)
        raise ValueError(f"unknown rank strategy {strategy!r}")

    def kernel_dim(self, strategy: str = "fraction_free") -> int:
        return self.n_cols - self.rank(strategy)


def rank(m: SparseMatrix) -> int:
    return m.rank()


def kernel_dim(m: SparseMatrix) -> int:
    return m.kernel_dim()


def _integer_rows(m: SparseMatrix):
    """Rows of `m` as integer dicts (denominators cleared row by row)."""
    rows = [dict() for _ in range(m.n_rows)]
    for (i, j), v in m.entries.items():
        rows[i][j] = v
    out = []
    for row in rows:
        if not row:
            out.append({})
            continue
        if m.field.characteristic == 0:
            lcm = 1
            for v in row.values():
                d = v.denominator
                lcm = lcm // gcd(lcm, d) * d
            ints = {j: int(v * lcm) for j, v in row.items()}
            g = 0
            for v in ints.values():
                g = gcd(g, v)
            out.append({j: v // g for j, v in ints.items()})
        else:
            out.append(dict(row))
    return out


def _rank_fraction_free(m: SparseMatrix) -> int:
    """Markowitz-pivoted elimination without fractions.

    Over Q the rows are cleared to integers and updated by
    cross-multiplication followed by a gcd division, so intermediate
    entries stay bounded.  Over GF(p) the same pivot order runs with
    modular arithmetic.  Pivot choice: rows of least fill first, then
    the entry of least column fill, ties broken by smallest row then
    smallest column index - deterministic output.
    """
    p = m.field.characteristic
    rows = _integer_rows(m)
    col_rows = {}
    for i, row in enumerate(rows):
        for j in row:
            col_rows.setdefault(j, set()).add(i)
    active = {i for i, row in enumerate(rows) if row}
    rank_count = 0
    while active:
        best = None
        min_size = min(len(rows[i]) for i in active)
        for i in sorted(active):
            row = rows[i]
            if len(row) != min_size:
                continue
            for j in sorted(row):
                cand = (len(col_rows[j]), i, j)
                if best is None or cand < best:
                    best = cand
            break  # rows scanned in index order; first minimal row wins
        _, pi, pj = best
        pivot_row = rows[pi]
        pivot = pivot_row[pj]
        targets = [k for k in col_rows[pj] if k != pi]
        for k in targets:
            row_k = rows[k]
            b = row_k.pop(pj)
            col_rows[pj].discard(k)
            if p == 0:
                new_row = {}
                for j in set(row_k) | set(pivot_row):
                    if j == pj:
                        continue
                    nv = pivot * row_k.get(j, 0) - b * pivot_row.get(j, 0)
                    if nv:
                        new_row[j] = nv
                g = 0
                for v in new_row.values():
                    g = gcd(g, v)
                if g > 1:
                    new_row = {j: v // g for j, v in new_row.items()}
            else:
                factor = b * pow(pivot, -1, p) % p
                new_row = dict(row_k)
                for j, v in pivot_row.items():
                    if j == pj:
                        continue
                    nv = (new_row.get(j, 0) - factor * v) % p
                    if nv:
                        new_row[j] = nv
                    else:
                        new_row.pop(j, None)
            for j in row_k:
                if j not in new_row:
                    col_rows[j].discard(k)
            for j in new_row:
                if j not in row_k:
                    col_rows.setdefault(j, set()).add(k)
            rows[k] = new_row
            if not new_row:
                active.discard(k)
        for j in rows[pi]:
            col_rows[j].discard(pi)
        active.discard(pi)
        rank_count += 1
    return rank_count


def _rank_plain(m: SparseMatrix) -> int:
    """Textbook elimination with field division, columns left to right."""
    f = m.field
    rows = [row for row in m.rows_as_dicts() if row]
    rank_count = 0
    for col in range(m.n_cols):
        pivot_idx = None
        for idx, row in enumerate(rows):
            if col in row:
                pivot_idx = idx
                break
        if pivot_idx is None:
            continue
        pivot_row = rows.pop(pivot_idx)
        inv = f.inv(pivot_row[col])
        pivot_row = {j: f.mul(v, inv) for j, v in pivot_row.items()}
        remaining = []
        for row in rows:
            if col in row:
                c = row.pop(col)
                for j, v in pivot_row.items():
                    if j == col:
                        continue
                    nv = f.sub(row.get(j, f.zero), f.mul(c, v))
                    if f.is_zero(nv):
                        row.pop(j, None)
                    else:
                        row[j] = nv
            if row:
                remaining.append(row)
        rows = remaining
        rank_count += 1
    return rank_count


# ---------------------------------------------------------------------------
# Dense helpers for the small matrices of the module layer.
# ---------------------------------------------------------------------------

def rref(rows, n_cols, field):
    """Reduced row echelon form; returns (rref_rows, pivot_columns).

    The RREF of a matrix is unique, so downstream kernel bases are
    canonical whatever the elimination order.
    """
    mat = [list(field.scalar(v) for v in row) for row in rows]
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = None
        for i in range(r, len(mat)):
            if not field.is_zero(mat[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(v, inv) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not field.is_zero(mat[i][c]):
                factor = mat[i][c]
                mat[i] = [field.sub(a, field.mul(factor, b))
                          for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows, n_cols, field):
    """Canonical kernel basis (one vector per free column of the RREF)."""
    red, pivots = rref(rows, n_cols, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vec = [field.zero] * n_cols
        vec[free] = field.one
        for r_idx, p_col in enumerate(pivots):
            vec[p_col] = field.neg(red[r_idx][free])
        basis.append(vec)
    return basis


def rank_dense(rows, n_cols, field):
    return len(rref(rows, n_cols, field)[0])


def solve_in_rowspan(basis_rows, n_cols, field, target):
    """Coordinates of `target` in the span of `basis_rows`, or None.

    `basis_rows` need not be echelonized; the result is exact.
    """
    if not basis_rows:
        return [] if all(field.is_zero(t) for t in target) else None
    # Augment [basis^T | target] and solve.
    aug = []
    for j in range(n_cols):
        aug.append([row[j] for row in basis_rows] + [target[j]])
    red, pivots = rref(aug, len(basis_rows) + 1, field)
    if len(basis_rows) in pivots:
        return None
    coords = [field.zero] * len(basis_rows)
    for r_idx, p_col in enumerate(pivots):
        coords[p_col] = red[r_idx][len(basis_rows)]
    return coords
