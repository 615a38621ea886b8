"""Finite dimensional bimodules over a built algebra.

A bimodule is stored Peirce-wise: component (y, x) holds the part with
left idempotent y and right idempotent x, and every arrow carries one
left-action and one right-action matrix per compatible component.
Longer words act by composing arrow matrices in traversal order.
"""

from __future__ import annotations

from .errors import InternalInconsistencyError, PresentationError
from .quiver import Path


def _mat_mul(a, b, field):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[field.zero] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            c = ai[k]
            if field.is_zero(c):
                continue
            bk = b[k]
            oi = out[i]
            for j in range(cols):
                oi[j] = field.add(oi[j], field.mul(c, bk[j]))
    return out


def _mat_add_scaled(acc, m, scale, field):
    for i, row in enumerate(m):
        for j, v in enumerate(row):
            acc[i][j] = field.add(acc[i][j], field.mul(scale, v))


def _zeros(r, c, field):
    return [[field.zero] * c for _ in range(r)]


def _transpose(m, rows, cols, field):
    return [[m[i][j] for i in range(rows)] for j in range(cols)]


class Bimodule:
    """Peirce-graded bimodule with per-arrow action matrices.

    dims: {(y, x): int}; left[(arrow_name, x)] maps the (s(a), x)
    component to the (t(a), x) component; right[(arrow_name, y)] maps
    (y, t(a)) to (y, s(a)).  Missing matrices mean zero maps.
    """

    def __init__(self, algebra, dims, left=None, right=None, check=True):
        self.algebra = algebra
        self.field = algebra.field
        q = algebra.quiver
        self.dims = {}
        for y in q.vertices:
            for x in q.vertices:
                d = dims.get((y, x), 0)
                if d < 0:
                    raise PresentationError("bimodule dimension must be >= 0")
                self.dims[(y, x)] = d
        self.left = dict(left or {})
        self.right = dict(right or {})
        if check:
            self._check_axioms()

    @property
    def total_dim(self):
        return sum(self.dims.values())

    def left_matrix(self, arrow_name, x):
        a = self.algebra.quiver.arrows[self.algebra.quiver.arrow_index[arrow_name]]
        m = self.left.get((arrow_name, x))
        if m is None:
            return _zeros(self.dims[(a.target, x)], self.dims[(a.source, x)],
                          self.field)
        return m

    def right_matrix(self, arrow_name, y):
        a = self.algebra.quiver.arrows[self.algebra.quiver.arrow_index[arrow_name]]
        m = self.right.get((arrow_name, y))
        if m is None:
            return _zeros(self.dims[(y, a.source)], self.dims[(y, a.target)],
                          self.field)
        return m

    # -- word actions ---------------------------------------------------------

    def left_action_of_path(self, path: Path, x):
        """Matrix of p . (-) from component (s(p), x) to (t(p), x)."""
        q = self.algebra.quiver
        d_from = self.dims[(path.source, x)]
        if path.is_stationary():
            m = _zeros(d_from, d_from, self.field)
            for i in range(d_from):
                m[i][i] = self.field.one
            return m
        mat = None
        for ai in path.arrows:  # first-traversed arrow acts first
            a = q.arrows[ai]
            step = self.left_matrix(a.name, x)
            mat = step if mat is None else _mat_mul(step, mat, self.field)
        return mat

    def right_action_of_path(self, path: Path, y):
        """Matrix of (-) . p from component (y, t(p)) to (y, s(p))."""
        q = self.algebra.quiver
        d_from = self.dims[(y, path.target)]
        if path.is_stationary():
            m = _zeros(d_from, d_from, self.field)
            for i in range(d_from):
                m[i][i] = self.field.one
            return m
        mat = None
        for ai in reversed(path.arrows):  # last-traversed arrow acts first
            a = q.arrows[ai]
            step = self.right_matrix(a.name, y)
            mat = step if mat is None else _mat_mul(step, mat, self.field)
        return mat

    def left_action_of_vector(self, vec, source, x):
        """Action matrix of a path vector whose paths start at `source`."""
        rows = None
        for path, c in vec.items():
            m = self.left_action_of_path(path, x)
            if rows is None:
                rows = _zeros(self.dims[(path.target, x)], self.dims[(source, x)],
                              self.field)
            _mat_add_scaled(rows, m, c, self.field)
        return rows

    def right_action_of_vector(self, vec, target, y):
        rows = None
        for path, c in vec.items():
            m = self.right_action_of_path(path, y)
            if rows is None:
                rows = _zeros(self.dims[(y, path.source)], self.dims[(y, target)],
                              self.field)
            _mat_add_scaled(rows, m, c, self.field)
        return rows

    # -- axioms -----------------------------------------------------------------

    def _check_axioms(self):
        q = self.algebra.quiver
        f = self.field
        for a in q.arrows:
            for b in q.arrows:
                # (a . xi) . b = a . (xi . b) on component (s(a), t(b))
                la_then = _mat_mul(self.right_matrix(b.name, a.target),
                                   self.left_matrix(a.name, b.target), f)
                ra_then = _mat_mul(self.left_matrix(a.name, b.source),
                                   self.right_matrix(b.name, a.source), f)
                if la_then != ra_then:
                    raise InternalInconsistencyError(
                        f"left/right actions of {a.name}/{b.name} do not commute")
        # relations act as zero on both sides
        for rel in self.algebra.presentation.relations:
            some = next(iter(rel))
            for x in q.vertices:
                m = self.left_action_of_vector(rel, some.source, x)
                if m is not None and any(not f.is_zero(v) for row in m for v in row):
                    raise PresentationError(
                        "relation does not act as zero on the bimodule (left)")
            for y in q.vertices:
                m = self.right_action_of_vector(rel, some.target, y)
                if m is not None and any(not f.is_zero(v) for row in m for v in row):
                    raise PresentationError(
                        "relation does not act as zero on the bimodule (right)")


def regular_bimodule(algebra) -> Bimodule:
    """The algebra over itself; actions are normal-form multiplications."""
    q = algebra.quiver
    f = algebra.field
    dims = {key: len(ix) for key, ix in algebra.peirce.items()}
    left = {}
    right = {}
    for a in q.arrows:
        a_path = q.path_from_traversal((q.arrow_index[a.name],))
        a_idx = algebra.index[a_path]
        for x in q.vertices:
            src = algebra.peirce.get((a.source, x), [])
            tgt = algebra.peirce.get((a.target, x), [])
            if src and tgt:
                pos = {b: r for r, b in enumerate(tgt)}
                m = _zeros(len(tgt), len(src), f)
                for c, b in enumerate(src):
                    for k, v in algebra.mult_basis(a_idx, b).items():
                        m[pos[k]][c] = f.add(m[pos[k]][c], v)
                if any(not f.is_zero(v) for row in m for v in row):
                    left[(a.name, x)] = m
        for y in q.vertices:
            src = algebra.peirce.get((y, a.target), [])
            tgt = algebra.peirce.get((y, a.source), [])
            if src and tgt:
                pos = {b: r for r, b in enumerate(tgt)}
                m = _zeros(len(tgt), len(src), f)
                for c, b in enumerate(src):
                    for k, v in algebra.mult_basis(b, a_idx).items():
                        m[pos[k]][c] = f.add(m[pos[k]][c], v)
                if any(not f.is_zero(v) for row in m for v in row):
                    right[(a.name, y)] = m
    return Bimodule(algebra, dims, left, right)


def dual_bimodule(x: Bimodule) -> Bimodule:
    """The k-dual DX: component dims transpose, actions transpose and swap sides."""
    algebra = x.algebra
    q = algebra.quiver
    f = x.field
    dims = {(y, z): x.dims[(z, y)] for (y, z) in x.dims}
    left = {}
    right = {}
    for a in q.arrows:
        for v in q.vertices:
            # left action of a on DX at (s(a), v) is the transpose of the
            # right action of a on X at (v, t(a)) -> (v, s(a))
            m = x.right_matrix(a.name, v)
            rows, cols = x.dims[(v, a.source)], x.dims[(v, a.target)]
            if rows and cols:
                t = _transpose(m, rows, cols, f)
                if any(not f.is_zero(c) for row in t for c in row):
                    left[(a.name, v)] = t
            # right action of a on DX at (v, t(a)) is the transpose of the
            # left action of a on X at (s(a), v) -> (t(a), v)
            m = x.left_matrix(a.name, v)
            rows, cols = x.dims[(a.target, v)], x.dims[(a.source, v)]
            if rows and cols:
                t = _transpose(m, rows, cols, f)
                if any(not f.is_zero(c) for row in t for c in row):
                    right[(a.name, v)] = t
    return Bimodule(algebra, dims, left, right)
