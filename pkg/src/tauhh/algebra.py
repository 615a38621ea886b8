"""Bound quiver algebra construction from a presentation.

The quotient kQ/I is materialised as a normal-form basis together with
a completed rewriting system: rules rewrite a leading word (degree
first, then lex on the written word) into smaller terms.  Monomial
presentations skip completion entirely; their rewriting systems are
confluent as given.

Nilpotency is certified constructively: the least N with every
length-N path reducing to zero is found by extending the set of
nonzero-normal-form paths length by length.  Presentations for which
no such N exists below the degree cap are rejected.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field

from .errors import (AdmissibilityError, InternalInconsistencyError,
                     PresentationError, ResourceError)
from .linalg import QQ, nullspace, rank_dense
from .quiver import Path, Quiver

_CERT_GUARD = 200_000  # paths tracked per length in the nilpotency sweep


@dataclass
class AlgebraPresentation:
    quiver: Quiver
    field: object = dc_field(default_factory=lambda: QQ)
    relations: list = dc_field(default_factory=list)  # list of {Path: scalar}
    cap: int = 20

    def __post_init__(self):
        if self.cap < 1:
            raise PresentationError("degree cap must be positive")
        cleaned = []
        for rel in self.relations:
            vec = {}
            for p, c in rel.items():
                c = self.field.scalar(c)
                if not self.field.is_zero(c):
                    vec[p] = c
            if not vec:
                continue
            endpoints = {(p.source, p.target) for p in vec}
            if len(endpoints) != 1:
                raise PresentationError(
                    "relation mixes endpoints: "
                    + ", ".join(sorted(self.quiver.path_word(p) for p in vec)))
            if any(p.length < 2 for p in vec):
                bad = min(vec, key=lambda p: p.length)
                raise PresentationError(
                    f"relation term {self.quiver.path_word(bad)!r} has length "
                    f"{bad.length}; admissible relations need length >= 2")
            cleaned.append(vec)
        self.relations = cleaned

    def is_monomial(self):
        return all(len(rel) == 1 for rel in self.relations)


@dataclass
class Rule:
    """Rewrite lead -> tail, leading coefficient normalised to one."""

    lead: Path
    tail: dict  # Path -> scalar, every key < lead in the monomial order


def _vec_iadd(acc, path, coeff, field):
    cur = acc.get(path, field.zero)
    cur = field.add(cur, coeff)
    if field.is_zero(cur):
        acc.pop(path, None)
    else:
        acc[path] = cur


def _make_rule(vec, field):
    lead = max(vec, key=lambda p: p.sort_index)
    lc = vec[lead]
    tail = {}
    for p, c in vec.items():
        if p is lead or p == lead:
            continue
        tail[p] = field.neg(field.div(c, lc))
    return Rule(lead, tail)


class _Rewriter:
    """Shared reduction engine over a fixed rule list."""

    def __init__(self, quiver, field, rules):
        self.quiver = quiver
        self.field = field
        self.rules = list(rules)
        self._by_lead = {}
        self._lead_lengths = set()
        for idx, r in enumerate(self.rules):
            self._register(idx)

    def _register(self, idx):
        r = self.rules[idx]
        self._by_lead[r.lead.arrows] = idx
        self._lead_lengths.add(r.lead.length)

    def add_rule(self, rule):
        if rule.lead.arrows in self._by_lead:
            raise InternalInconsistencyError(
                "duplicate rewrite lead during completion")
        self.rules.append(rule)
        self._register(len(self.rules) - 1)
        return len(self.rules) - 1

    def find_occurrence(self, path):
        """Leftmost occurrence (pos, rule_index), shortest lead first."""
        trav = path.arrows
        n = len(trav)
        for pos in range(n):
            for length in sorted(self._lead_lengths):
                if pos + length > n:
                    continue
                idx = self._by_lead.get(trav[pos:pos + length])
                if idx is not None:
                    return pos, idx
        return None

    def replace_at(self, path, pos, rule_idx):
        """One rewriting step of `path` at a known occurrence; a vector."""
        rule = self.rules[rule_idx]
        pre = path.arrows[:pos]
        post = path.arrows[pos + rule.lead.length:]
        out = {}
        for t_path, t_coef in rule.tail.items():
            trav = pre + t_path.arrows + post
            new = Path(path.source, path.target, trav)
            _vec_iadd(out, new, t_coef, self.field)
        return out

    def reduce(self, vec):
        """Full normal form of a path vector."""
        work = dict(vec)
        while True:
            target = None
            for m in sorted(work, key=lambda p: p.sort_index, reverse=True):
                occ = self.find_occurrence(m)
                if occ is not None:
                    target = (m, occ)
                    break
            if target is None:
                return work
            m, (pos, idx) = target
            c = work.pop(m)
            for p, t in self.replace_at(m, pos, idx).items():
                _vec_iadd(work, p, self.field.mul(c, t), self.field)

    def reduce_path(self, path):
        return self.reduce({path: self.field.one})


def _ambiguities(ri, rule_i, rj, rule_j):
    """Overlap and inclusion ambiguities of an ordered rule pair."""
    u, v = rule_i.lead.arrows, rule_j.lead.arrows
    lu, lv = len(u), len(v)
    out = []
    # overlap: a proper suffix of u equals a proper prefix of v
    for o in range(1, min(lu, lv)):
        if u[lu - o:] == v[:o]:
            w = u + v[o:]
            out.append((w, (ri, 0), (rj, lu - o)))
    # inclusion: v occurs strictly inside u
    if lv < lu or (lv == lu and ri != rj):
        for pos in range(lu - lv + 1):
            if u[pos:pos + lv] == v:
                out.append((u, (ri, 0), (rj, pos)))
    return out


def _complete(rewriter: _Rewriter, cap: int):
    """Degree-truncated Buchberger/diamond completion.

    Ambiguities are processed in increasing degree with deterministic
    tie-breaking; ambiguities of degree >= cap are dropped (their words
    vanish once the nilpotency certificate holds below the cap).
    """
    q = rewriter.quiver
    heap = []
    seen = set()

    def push_pair(i, j):
        for w, occ1, occ2 in _ambiguities(i, rewriter.rules[i], j, rewriter.rules[j]):
            key = (w, occ1, occ2)
            if key in seen or len(w) >= cap:
                continue
            seen.add(key)
            heapq.heappush(heap, (len(w), w, occ1, occ2))

    n0 = len(rewriter.rules)
    for i in range(n0):
        for j in range(n0):
            push_pair(i, j)
    while heap:
        _, w, (i, pos_i), (j, pos_j) = heapq.heappop(heap)
        src = rewriter.quiver.arrows[w[0]].source
        tgt = rewriter.quiver.arrows[w[-1]].target
        word = Path(src, tgt, w)
        f = rewriter.field
        diff = {}
        for p, c in rewriter.replace_at(word, pos_i, i).items():
            _vec_iadd(diff, p, c, f)
        for p, c in rewriter.replace_at(word, pos_j, j).items():
            _vec_iadd(diff, p, f.neg(c), f)
        rem = rewriter.reduce(diff)
        if not rem:
            continue
        new_idx = rewriter.add_rule(_make_rule(rem, f))
        for k in range(len(rewriter.rules)):
            push_pair(new_idx, k)
            if k != new_idx:
                push_pair(k, new_idx)


def _normal_words(quiver, rewriter, cap):
    """Irreducible words by length; factor-closed, so extension suffices."""
    leads = set(rewriter._by_lead)
    by_len = [[quiver.stationary_path(v) for v in quiver.vertices]]
    while by_len[-1] and len(by_len) <= cap:
        nxt = []
        for w in by_len[-1]:
            for ai in quiver.arrows_from(w.target):
                trav = w.arrows + (ai,)
                bad = False
                for lead in leads:
                    ll = len(lead)
                    if ll <= len(trav) and trav[-ll:] == lead:
                        bad = True
                        break
                if not bad:
                    nxt.append(Path(w.source, quiver.arrows[ai].target, trav))
        nxt.sort()
        by_len.append(nxt)
    return by_len


def _nilpotency_degree(quiver, rewriter, cap):
    """Least N <= cap with every length-N path reducing to zero."""
    current = [quiver.stationary_path(v) for v in quiver.vertices]
    n = 0
    while current:
        n += 1
        if n > cap:
            witness = quiver.path_word(current[0])
            raise AdmissibilityError(
                f"no power of the arrow ideal vanishes below the cap {cap}; "
                f"the length-{cap} path {witness} survives")
        nxt = []
        for p in current:
            for ai in quiver.arrows_from(p.target):
                cand = Path(p.source, quiver.arrows[ai].target, p.arrows + (ai,))
                if rewriter.reduce_path(cand):
                    nxt.append(cand)
        if len(nxt) > _CERT_GUARD:
            raise ResourceError(
                f"nilpotency sweep exceeded {_CERT_GUARD} paths at length {n}")
        current = nxt
    return n


class FDAlgebra:
    """kQ/I with a finite normal-form basis.

    Immutable after construction; all products are computed by
    normal-form reduction and memoised, so sharing one instance across
    concurrent readers is safe.
    """

    def __init__(self, presentation, rewriter, basis_by_len, nilpotency):
        self.presentation = presentation
        self.quiver = presentation.quiver
        self.field = presentation.field
        self.rewriter = rewriter
        self.basis = [p for level in basis_by_len for p in level]
        self.index = {p: i for i, p in enumerate(self.basis)}
        self.nilpotency = nilpotency
        self.radical = [i for i, p in enumerate(self.basis) if p.length >= 1]
        self.peirce = {}
        for i, p in enumerate(self.basis):
            self.peirce.setdefault((p.target, p.source), []).append(i)
        self._mult = {}
        self._center_cache = None

    @property
    def dim(self):
        return len(self.basis)

    def is_monomial(self):
        return all(not r.tail for r in self.rewriter.rules)

    def vertex_idempotent(self, v):
        return self.index[self.quiver.stationary_path(v)]

    # -- multiplication ------------------------------------------------------

    def nf_path(self, path):
        """Normal form of a raw path, as {basis index: scalar}."""
        vec = self.rewriter.reduce_path(path)
        out = {}
        for p, c in vec.items():
            idx = self.index.get(p)
            if idx is None:
                raise InternalInconsistencyError(
                    f"normal form {self.quiver.path_word(p)} missing from basis")
            out[idx] = c
        return out

    def mult_basis(self, i, j):
        """Product basis[i] * basis[j] ("traverse j, then i") in coordinates."""
        key = (i, j)
        cached = self._mult.get(key)
        if cached is not None:
            return cached
        bi, bj = self.basis[i], self.basis[j]
        if bj.target != bi.source:
            out = {}
        else:
            out = self.nf_path(Path(bj.source, bi.target, bj.arrows + bi.arrows))
        self._mult[key] = out
        return out

    def multiply(self, u, v):
        """Product of coordinate vectors (dicts index -> scalar)."""
        f = self.field
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                c = f.mul(a, b)
                for k, w in self.mult_basis(i, j).items():
                    cur = f.add(out.get(k, f.zero), f.mul(c, w))
                    if f.is_zero(cur):
                        out.pop(k, None)
                    else:
                        out[k] = cur
        return out

    # -- structure -----------------------------------------------------------

    def peirce_dims(self):
        """dict (y, x) -> dim of the component yLx (paths x -> y)."""
        out = {}
        for y in self.quiver.vertices:
            for x in self.quiver.vertices:
                out[(y, x)] = len(self.peirce.get((y, x), ()))
        return out

    def center(self):
        """(dimension, basis) of the centre, canonical coordinates."""
        if self._center_cache is not None:
            return self._center_cache
        d = self.dim
        f = self.field
        rows = []
        for j in range(d):
            cols = []
            for i in range(d):
                com = {}
                for k, c in self.mult_basis(i, j).items():
                    _vec_iadd_idx(com, k, c, f)
                for k, c in self.mult_basis(j, i).items():
                    _vec_iadd_idx(com, k, f.neg(c), f)
                cols.append(com)
            for k in range(d):
                row = [cols[i].get(k, f.zero) for i in range(d)]
                if any(not f.is_zero(v) for v in row):
                    rows.append(row)
        basis = nullspace(rows, d, f)
        self._center_cache = (len(basis), basis)
        return self._center_cache

    def center_dim(self):
        return self.center()[0]

    def commutator_rank(self):
        """Rank of the span of all basis commutators [b_i, b_j]."""
        d = self.dim
        f = self.field
        rows = []
        for i in range(d):
            for j in range(i + 1, d):
                com = {}
                for k, c in self.mult_basis(i, j).items():
                    _vec_iadd_idx(com, k, c, f)
                for k, c in self.mult_basis(j, i).items():
                    _vec_iadd_idx(com, k, f.neg(c), f)
                if com:
                    rows.append([com.get(k, f.zero) for k in range(d)])
        return rank_dense(rows, d, f)

    def hh0_trace_dim(self):
        """dim of Lambda/[Lambda, Lambda]."""
        return self.dim - self.commutator_rank()

    # -- validation ----------------------------------------------------------

    def validate(self, triple_limit=50):
        """Structural sanity: idempotents, relations, nilpotency, associativity."""
        f = self.field
        for v in self.quiver.vertices:
            i = self.vertex_idempotent(v)
            sq = self.mult_basis(i, i)
            if sq != {i: f.one}:
                raise InternalInconsistencyError("idempotent fails e*e = e")
        for rel in self.presentation.relations:
            if self.rewriter.reduce(dict(rel)):
                raise InternalInconsistencyError("relation does not reduce to zero")
        # r^N = 0 on basis level
        for i in self.radical:
            for j in self.radical:
                for k, _ in self.mult_basis(i, j).items():
                    if self.basis[k].length >= self.nilpotency:
                        raise InternalInconsistencyError("r^N survives")
        if self.dim <= triple_limit:
            rng = range(self.dim)
            for i in rng:
                for j in rng:
                    ij = self.mult_basis(i, j)
                    for k in rng:
                        left = self.multiply(ij, {k: f.one})
                        right = self.multiply({i: f.one}, self.mult_basis(j, k))
                        if left != right:
                            raise InternalInconsistencyError(
                                f"associativity fails on triple ({i},{j},{k})")
        return True


def _vec_iadd_idx(acc, idx, coeff, field):
    cur = field.add(acc.get(idx, field.zero), coeff)
    if field.is_zero(cur):
        acc.pop(idx, None)
    else:
        acc[idx] = cur


def build_algebra(pres: AlgebraPresentation, force_groebner=False) -> FDAlgebra:
    rules = [_make_rule(rel, pres.field) for rel in pres.relations]
    leads = {}
    for r in rules:
        leads.setdefault(r.lead.arrows, r)
    rewriter = _Rewriter(pres.quiver, pres.field, leads.values())
    if force_groebner or not pres.is_monomial():
        _complete(rewriter, pres.cap)
    nilpotency = _nilpotency_degree(pres.quiver, rewriter, pres.cap)
    basis_by_len = _normal_words(pres.quiver, rewriter, pres.cap)
    if any(p.length >= nilpotency for level in basis_by_len for p in level):
        raise InternalInconsistencyError(
            "normal word survives past the certified nilpotency degree")
    return FDAlgebra(pres, rewriter, basis_by_len, nilpotency)
