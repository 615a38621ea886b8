"""Quiver combinatorics: paths, oriented cycles, rotation orbits, shape.

Composition convention, fixed globally: the product ``p*q`` of paths
means "traverse q, then p".  Internally a path stores its arrows in
traversal order, so the displayed word ``a*b`` corresponds to the
traversal tuple ``(b, a)``.  Path ordering is degree first, then
lexicographic on the written word (arrow indices, last-traversed arrow
first); orbit representatives are the least members in that order.

Everything here is a pure function of an immutable quiver, safe to
call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PresentationError


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True, order=True)
class Path:
    """A path of a fixed quiver; `arrows` are arrow indices in traversal order."""

    sort_index: tuple = field(init=False, repr=False)
    source: str
    target: str
    arrows: tuple

    def __post_init__(self):
        object.__setattr__(self, "sort_index",
                           (len(self.arrows), tuple(reversed(self.arrows)),
                            self.source))

    @property
    def length(self):
        return len(self.arrows)

    def is_stationary(self):
        return not self.arrows


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = tuple(vertices)
        self.arrows = tuple(Arrow(*a) if not isinstance(a, Arrow) else a
                            for a in arrows)
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise PresentationError(f"duplicate identifier {v!r}")
            seen.add(v)
        for a in self.arrows:
            if a.name in seen:
                raise PresentationError(f"duplicate identifier {a.name!r}")
            seen.add(a.name)
            if a.source not in self.vertices or a.target not in self.vertices:
                raise PresentationError(
                    f"arrow {a.name!r} has undefined endpoint")
        self.arrow_index = {a.name: i for i, a in enumerate(self.arrows)}
        self._out = {v: [] for v in self.vertices}
        self._in = {v: [] for v in self.vertices}
        for i, a in enumerate(self.arrows):
            self._out[a.source].append(i)
            self._in[a.target].append(i)

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    # -- path construction -------------------------------------------------

    def stationary_path(self, v) -> Path:
        if v not in self._out:
            raise PresentationError(f"unknown vertex {v!r}")
        return Path(v, v, ())

    def path_from_traversal(self, indices) -> Path:
        indices = tuple(indices)
        if not indices:
            raise ValueError("empty traversal needs a vertex; use stationary_path")
        src = self.arrows[indices[0]].source
        at = src
        for i in indices:
            a = self.arrows[i]
            if a.source != at:
                raise PresentationError(
                    f"arrows do not compose at {at!r} (got {a.name!r})")
            at = a.target
        return Path(src, at, indices)

    def compose(self, after: Path, before: Path) -> Path:
        """Product after*before: traverse `before`, then `after`."""
        if before.target != after.source:
            raise PresentationError("paths do not compose")
        if not before.arrows and not after.arrows:
            return before
        return Path(before.source, after.target, before.arrows + after.arrows)

    def path_word(self, path: Path) -> str:
        """Juxtaposition display: last-traversed arrow leftmost."""
        if path.is_stationary():
            return f"e({path.source})"
        return "*".join(self.arrows[i].name for i in reversed(path.arrows))

    # -- enumeration --------------------------------------------------------

    def arrows_from(self, v):
        return self._out[v]

    def arrows_into(self, v):
        return self._in[v]

    def arrow_count(self, x, y) -> int:
        """Number of arrows x -> y."""
        return sum(1 for i in self._out[x] if self.arrows[i].target == y)

    def paths_of_length(self, n: int):
        """All length-n paths in canonical (lex on traversal tuple) order."""
        if n < 0:
            raise ValueError("path length must be >= 0")
        if n == 0:
            return [self.stationary_path(v) for v in self.vertices]
        out = []

        def extend(prefix, at, remaining):
            if remaining == 0:
                out.append(Path(self.arrows[prefix[0]].source, at, tuple(prefix)))
                return
            for i in self._out[at]:
                prefix.append(i)
                extend(prefix, self.arrows[i].target, remaining - 1)
                prefix.pop()

        for i in range(len(self.arrows)):
            extend([i], self.arrows[i].target, n - 1)
        out.sort()
        return out

    def path_counts(self, n: int):
        """dict (source, target) -> number of length-n paths."""
        counts = {}
        for p in self.paths_of_length(n):
            key = (p.source, p.target)
            counts[key] = counts.get(key, 0) + 1
        return counts


def enumerate_cycles(q: Quiver, n: int):
    """The set of closed length-n paths; degree 0 gives the vertices."""
    return [p for p in q.paths_of_length(n) if p.source == p.target]


def rotate_cycle(q: Quiver, cycle: Path) -> Path:
    """Cyclic action: move the first-traversed arrow to the end."""
    arr = cycle.arrows
    if len(arr) <= 1:
        return cycle
    at = q.arrows[arr[0]].target  # rotated cycle is based at t(first arrow)
    return Path(at, at, arr[1:] + arr[:1])


@dataclass
class OrbitDecomposition:
    degree: int
    cycles: list
    orbits: list        # lists of Path, representative (lex least) first
    sizes: list

    @property
    def orbit_count(self):
        return len(self.orbits)

    @property
    def even_orbit_count(self):
        return sum(1 for s in self.sizes if s % 2 == 0)


def orbit_decomposition(q: Quiver, n: int) -> OrbitDecomposition:
    if n < 1:
        raise ValueError("orbit decomposition needs degree >= 1")
    cycles = enumerate_cycles(q, n)
    seen = set()
    orbits = []
    for c in cycles:  # canonical order makes representatives lex least
        if c in seen:
            continue
        orbit = [c]
        seen.add(c)
        cur = rotate_cycle(q, c)
        while cur != c:
            orbit.append(cur)
            seen.add(cur)
            cur = rotate_cycle(q, cur)
        orbits.append(orbit)
    sizes = [len(o) for o in orbits]
    # the source vertex of a rotated cycle changes, so fix the orbit's
    # membership count against the cycle set for safety
    assert sum(sizes) == len(cycles)
    return OrbitDecomposition(n, cycles, orbits, sizes)


def parallel_pairs(q: Quiver, n: int) -> int:
    """|Q_n // Q_1|: pairs (length-n path, arrow) with equal endpoints."""
    counts = q.path_counts(n)
    total = 0
    for a in q.arrows:
        total += counts.get((a.source, a.target), 0)
    return total


def is_connected(q: Quiver) -> bool:
    """Connectivity of the underlying undirected graph."""
    if not q.vertices:
        return True
    adj = {v: set() for v in q.vertices}
    for a in q.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    stack = [q.vertices[0]]
    seen = {q.vertices[0]}
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(q.vertices)


def is_acyclic(q: Quiver) -> bool:
    """No oriented cycles (checked by repeated sink removal)."""
    out_deg = {v: 0 for v in q.vertices}
    preds = {v: [] for v in q.vertices}
    for a in q.arrows:
        out_deg[a.source] += 1
        preds[a.target].append(a.source)
    stack = [v for v, d in out_deg.items() if d == 0]
    removed = 0
    while stack:
        v = stack.pop()
        removed += 1
        for u in preds[v]:
            out_deg[u] -= 1
            if out_deg[u] == 0:
                stack.append(u)
    return removed == len(q.vertices)


@dataclass
class QuiverShape:
    kind: str             # "acyclic" | "crown" | "general"
    crown_order: int | None
    has_loop: bool
    connected: bool


def classify_shape(q: Quiver) -> QuiverShape:
    has_loop = any(a.source == a.target for a in q.arrows)
    connected = is_connected(q)
    c = len(q.vertices)
    if (connected and c >= 1 and len(q.arrows) == c
            and all(len(q.arrows_from(v)) == 1 for v in q.vertices)
            and all(len(q.arrows_into(v)) == 1 for v in q.vertices)):
        # out- and in-degree one everywhere and connected: one oriented
        # cycle through all vertices
        return QuiverShape("crown", c, has_loop, connected)
    if is_acyclic(q):
        return QuiverShape("acyclic", None, has_loop, connected)
    return QuiverShape("general", None, has_loop, connected)


def components(q: Quiver):
    """Connected components as sub-quivers (vertex order preserved)."""
    adj = {v: set() for v in q.vertices}
    for a in q.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    unvisited = set(q.vertices)
    comps = []
    for v0 in q.vertices:
        if v0 not in unvisited:
            continue
        stack, seen = [v0], {v0}
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        unvisited -= seen
        verts = [v for v in q.vertices if v in seen]
        arrows = [a for a in q.arrows if a.source in seen]
        comps.append(Quiver(verts, arrows))
    return comps
