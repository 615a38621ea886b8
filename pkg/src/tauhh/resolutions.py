"""Minimal projective resolutions of simple left modules.

One resolution step takes a module M to the multiplicities of its
projective cover (the dimensions of M/rM per vertex) and the abstract
syzygy (kernel of the cover with recomputed arrow actions).  Iterating
over the simple modules fills the Ext/Tor table e_i(x, y) and detects
finite global dimension.

A second, independent route for monomial presentations computes the
same Tor dimensions from quotients of monomial ideal intersections by
counting paths with enough disjoint relation factors; the two routes
are cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import InternalInconsistencyError, UnsupportedError
from .linalg import nullspace, rank_dense, rref, solve_in_rowspan
from .quiver import Path


class LeftModule:
    """Vertex-graded module: dims per vertex, one matrix per arrow.

    acts[arrow_name] maps the s(a)-component to the t(a)-component;
    omitted matrices are zero.
    """

    def __init__(self, algebra, dims, acts=None, check=True):
        self.algebra = algebra
        self.field = algebra.field
        self.dims = {v: dims.get(v, 0) for v in algebra.quiver.vertices}
        self.acts = dict(acts or {})
        if check:
            self._check_relations()

    @property
    def total_dim(self):
        return sum(self.dims.values())

    def is_zero(self):
        return self.total_dim == 0

    def act_matrix(self, arrow_name):
        a = self.algebra.quiver.arrows[self.algebra.quiver.arrow_index[arrow_name]]
        m = self.acts.get(arrow_name)
        if m is None:
            return [[self.field.zero] * self.dims[a.source]
                    for _ in range(self.dims[a.target])]
        return m

    def apply_arrow(self, arrow_name, vec):
        m = self.act_matrix(arrow_name)
        f = self.field
        return [sum_scalars(f, (f.mul(row[j], vec[j]) for j in range(len(vec))))
                for row in m]

    def apply_path(self, path: Path, vec):
        q = self.algebra.quiver
        out = vec
        for ai in path.arrows:
            out = self.apply_arrow(q.arrows[ai].name, out)
        return out

    def _check_relations(self):
        f = self.field
        for rel in self.algebra.presentation.relations:
            some = next(iter(rel))
            d = self.dims[some.source]
            for j in range(d):
                e_j = [f.one if i == j else f.zero for i in range(d)]
                acc = [f.zero] * self.dims[some.target]
                for path, c in rel.items():
                    img = self.apply_path(path, e_j)
                    for i, v in enumerate(img):
                        acc[i] = f.add(acc[i], f.mul(c, v))
                if any(not f.is_zero(v) for v in acc):
                    raise InternalInconsistencyError(
                        "relation acts nontrivially on a module")


def sum_scalars(field, items):
    acc = field.zero
    for v in items:
        acc = field.add(acc, v)
    return acc


def simple_module(algebra, x) -> LeftModule:
    return LeftModule(algebra, {x: 1}, {}, check=False)


def projective_module(algebra, x) -> LeftModule:
    """The indecomposable projective on the stationary path at x."""
    q = algebra.quiver
    f = algebra.field
    comp = {w: algebra.peirce.get((w, x), []) for w in q.vertices}
    dims = {w: len(ix) for w, ix in comp.items()}
    acts = {}
    for a in q.arrows:
        src, tgt = comp[a.source], comp[a.target]
        if not src or not tgt:
            continue
        pos = {b: i for i, b in enumerate(tgt)}
        a_idx = algebra.index[q.path_from_traversal((q.arrow_index[a.name],))]
        mat = [[f.zero] * len(src) for _ in tgt]
        for c, b in enumerate(src):
            for nb, nv in algebra.mult_basis(a_idx, b).items():
                mat[pos[nb]][c] = f.add(mat[pos[nb]][c], nv)
        acts[a.name] = mat
    return LeftModule(algebra, dims, acts, check=False)


def zero_module(algebra) -> LeftModule:
    return LeftModule(algebra, {}, {}, check=False)


def _radical_subspace(m: LeftModule, v):
    """Row basis (RREF) of rM inside the v-component of M."""
    q = m.algebra.quiver
    f = m.field
    rows = []
    for ai in q.arrows_into(v):
        a = q.arrows[ai]
        mat = m.acts.get(a.name)
        if mat is None or m.dims[a.source] == 0 or m.dims[v] == 0:
            continue
        for j in range(m.dims[a.source]):
            col = [mat[i][j] for i in range(m.dims[v])]
            if any(not f.is_zero(c) for c in col):
                rows.append(col)
    red, _ = rref(rows, m.dims[v], f)
    return red


def _top_generators(m: LeftModule):
    """Deterministic coordinate generators of M/rM, per vertex."""
    f = m.field
    gens = {}
    for v in m.algebra.quiver.vertices:
        d = m.dims[v]
        if d == 0:
            gens[v] = []
            continue
        rad = _radical_subspace(m, v)
        chosen = []
        span = [row[:] for row in rad]
        current_rank = len(rad)
        for k in range(d):
            e_k = [f.one if i == k else f.zero for i in range(d)]
            cand = span + [e_k]
            r = rank_dense(cand, d, f)
            if r > current_rank:
                chosen.append(e_k)
                span = cand
                current_rank = r
        gens[v] = chosen
    return gens


@dataclass
class CoverStructure:
    """Projective cover data: generators and the per-vertex basis of P."""

    gen_vertices: list          # vertex of each generator, in order
    basis_by_vertex: dict       # w -> list of (gen_index, algebra basis index)


def _cover_basis(algebra, gen_vertices):
    basis_by_vertex = {w: [] for w in algebra.quiver.vertices}
    for g, v in enumerate(gen_vertices):
        for w in algebra.quiver.vertices:
            for b in algebra.peirce.get((w, v), ()):
                basis_by_vertex[w].append((g, b))
    return CoverStructure(gen_vertices, basis_by_vertex)


def minimal_resolution_step(m: LeftModule, algebra=None):
    """(multiplicity vector, syzygy) of the projective cover of M."""
    algebra = algebra or m.algebra
    q = algebra.quiver
    f = algebra.field
    if m.is_zero():
        return {v: 0 for v in q.vertices}, zero_module(algebra)
    gens = _top_generators(m)
    mults = {v: len(gens[v]) for v in q.vertices}
    gen_vertices = []
    gen_vectors = []
    for v in q.vertices:
        for vec in gens[v]:
            gen_vertices.append(v)
            gen_vectors.append(vec)
    cover = _cover_basis(algebra, gen_vertices)

    # kernel of the cover map, one block per vertex
    kernel_bases = {}
    for w in q.vertices:
        pbasis = cover.basis_by_vertex[w]
        if not pbasis:
            kernel_bases[w] = []
            continue
        cols = []
        for g, b in pbasis:
            img = m.apply_path(algebra.basis[b], gen_vectors[g])
            cols.append(img)
        rows = [[cols[c][i] for c in range(len(pbasis))]
                for i in range(m.dims[w])]
        kernel_bases[w] = nullspace(rows, len(pbasis), f)

    syz_dims = {w: len(kernel_bases[w]) for w in q.vertices}
    syz_acts = {}
    for a in q.arrows:
        src_k = kernel_bases[a.source]
        tgt_k = kernel_bases[a.target]
        if not src_k or not tgt_k:
            continue
        src_p = cover.basis_by_vertex[a.source]
        tgt_p = cover.basis_by_vertex[a.target]
        tgt_pos = {gb: i for i, gb in enumerate(tgt_p)}
        a_path = q.path_from_traversal((q.arrow_index[a.name],))
        a_idx = algebra.index[a_path]
        mat = []
        for kvec in src_k:
            img = [f.zero] * len(tgt_p)
            for c, (g, b) in enumerate(src_p):
                coeff = kvec[c]
                if f.is_zero(coeff):
                    continue
                for nb, nv in algebra.mult_basis(a_idx, b).items():
                    img[tgt_pos[(g, nb)]] = f.add(img[tgt_pos[(g, nb)]],
                                                  f.mul(coeff, nv))
            coords = solve_in_rowspan(tgt_k, len(tgt_p), f, img)
            if coords is None:
                raise InternalInconsistencyError(
                    "arrow action leaves the syzygy span")
            mat.append(coords)
        # mat rows are images per source-kernel vector; store column form
        syz_acts[a.name] = [[mat[j][i] for j in range(len(src_k))]
                            for i in range(len(tgt_k))]
    syzygy = LeftModule(algebra, syz_dims, syz_acts, check=False)
    return mults, syzygy


@dataclass
class ExtTorTable:
    """e_i(x, y) = dim Ext^i of the simple at x against the simple at y."""

    bound: int
    vertices: tuple
    entries: list                     # entries[i][(x, y)] -> int
    termination: dict = dc_field(default_factory=dict)  # x -> pd or None

    def e(self, i, x, y):
        if i > self.bound:
            raise ValueError("degree beyond table bound")
        return self.entries[i].get((x, y), 0)

    def total(self, i):
        return sum(self.entries[i].values())

    def terminated(self, x):
        return self.termination.get(x) is not None


def ext_tor_table(algebra, bound: int) -> ExtTorTable:
    q = algebra.quiver
    entries = [dict() for _ in range(bound + 1)]
    termination = {}
    for x in q.vertices:
        module = simple_module(algebra, x)
        termination[x] = None
        for i in range(bound + 1):
            if module.is_zero():
                break
            mults, module = minimal_resolution_step(module, algebra)
            for y, c in mults.items():
                if c:
                    entries[i][(x, y)] = c
            if module.is_zero():
                termination[x] = i
                break
    return ExtTorTable(bound, q.vertices, entries, termination)


@dataclass
class GlobalDimension:
    kind: str      # "exact" | "at_least"
    value: int

    def __str__(self):
        return (f"global dimension {self.value}" if self.kind == "exact"
                else f"global dimension at least {self.value}")


def global_dimension(algebra, bound: int, table: ExtTorTable = None) -> GlobalDimension:
    if table is None or table.bound < bound:
        table = ext_tor_table(algebra, bound)
    pds = []
    for x in algebra.quiver.vertices:
        pd = table.termination.get(x)
        if pd is None:
            return GlobalDimension("at_least", bound + 1)
        pds.append(pd)
    has_loop = any(a.source == a.target for a in algebra.quiver.arrows)
    if has_loop:
        raise InternalInconsistencyError(
            "all simple resolutions terminated although the quiver has a loop")
    return GlobalDimension("exact", max(pds, default=0))


# ---------------------------------------------------------------------------
# Independent Tor oracle for monomial presentations.
# ---------------------------------------------------------------------------

def _max_disjoint(word, rel_words):
    """Greatest number of pairwise disjoint relation factors inside `word`."""
    intervals = []
    n = len(word)
    for r in rel_words:
        lr = len(r)
        for pos in range(n - lr + 1):
            if word[pos:pos + lr] == r:
                intervals.append((pos + lr, pos))
    intervals.sort()
    count, free = 0, 0
    for end, start in intervals:
        if start >= free:
            count += 1
            free = end
    return count


def bongartz_tor(algebra, m: int, y, x) -> int:
    """dim of the (y, x) component of Tor_m between simples, monomial route.

    Valid for monomial presentations only: the ideal powers involved
    are spanned by paths, so membership reduces to counting disjoint
    relation factors inside a path word.
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    if not algebra.is_monomial():
        raise UnsupportedError(
            "the ideal-power route needs a monomial presentation")
    q = algebra.quiver
    rel_words = sorted({next(iter(rel)).arrows
                        for rel in algebra.presentation.relations})
    if not rel_words:
        # hereditary case: Tor_1 is spanned by the arrows, nothing higher
        return q.arrow_count(x, y) if m == 1 else 0
    max_len = max(len(r) for r in rel_words)

    def window(word, lo, hi, need):
        if len(word) < lo + hi:
            return False
        return _max_disjoint(word[lo:len(word) - hi], rel_words) >= need

    def in_numerator(word):
        if m % 2 == 0:
            n = m // 2
            return (_max_disjoint(word, rel_words) >= n
                    and window(word, 1, 1, n - 1))
        n = (m - 1) // 2
        return window(word, 0, 1, n) and window(word, 1, 0, n)

    def in_denominator(word):
        if m % 2 == 0:
            n = m // 2
            return window(word, 0, 1, n) or window(word, 1, 0, n)
        n = (m - 1) // 2
        return (_max_disjoint(word, rel_words) >= n + 1
                or window(word, 1, 1, n))

    total = 0
    for length in range(1, m * max_len + 1):
        for p in q.paths_of_length(length):
            if p.source != x or p.target != y:
                continue
            w = p.arrows
            if in_numerator(w) and not in_denominator(w):
                total += 1
    return total
