"""Exact packing of internally disjoint trees and generalized 3-connectivity.

A family of trees connects a terminal set ``S`` internally disjointly when the
trees are pairwise edge-disjoint and any two of them share exactly the
vertices of ``S``.  ``kappa_of_set`` returns the largest such family,
``kappa3`` minimises that over all 3-subsets.  Every positive answer carries
a certificate that ``validate_certificate`` re-checks from scratch.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import NamedTuple

from . import _kernel
from ._pool import ordered_map
from .graph import Edge, Graph, GraphError, bits, components, to_mask, vertex_set

DEFAULT_LIMIT = 20


class SolverLimitError(GraphError):
    """The graph is larger than the configured solver limit."""


def solver_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    env = os.environ.get("TREECONN_SOLVER_LIMIT")
    return int(env) if env else DEFAULT_LIMIT


def _check_limit(g: Graph, limit: int | None) -> None:
    cap = solver_limit(limit)
    if g.n > cap:
        raise SolverLimitError(f"n={g.n} exceeds solver limit {cap}")


@dataclass(frozen=True)
class TreeCertificate:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    terminals: tuple[int, ...]

    @classmethod
    def from_edges(cls, edges, terminals) -> TreeCertificate:
        es = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
        vs = {v for e in es for v in e} | set(terminals)
        return cls(tuple(sorted(vs)), es, tuple(sorted(set(terminals))))


@dataclass(frozen=True)
class DisjointTreeFamily:
    terminals: tuple[int, ...]
    trees: tuple[TreeCertificate, ...] = ()

    def __len__(self) -> int:
        return len(self.trees)

    def sorted(self) -> DisjointTreeFamily:
        return DisjointTreeFamily(self.terminals, tuple(sorted(self.trees, key=lambda t: t.edges)))


@dataclass(frozen=True)
class KappaResult:
    kappa: int
    witness_set: tuple[int, ...]
    family: DisjointTreeFamily
    graph: Graph | None = field(default=None, compare=False)


class Validation(NamedTuple):
    ok: bool
    diagnostics: list[str]

    def __bool__(self) -> bool:
        return self.ok


def validate_certificate(g: Graph, fam: DisjointTreeFamily) -> Validation:
    diag: list[str] = []
    s = set(fam.terminals)
    for idx, tree in enumerate(fam.trees):
        tag = f"tree {idx}"
        vs = set(tree.vertices)
        for u, v in tree.edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.adj[u] >> v & 1:
                diag.append(f"{tag}: edge {u}-{v} is not an edge of the graph")
            if u not in vs or v not in vs:
                diag.append(f"{tag}: edge {u}-{v} leaves the tree's vertex set")
        if len(set(tree.edges)) != len(tree.edges):
            diag.append(f"{tag}: repeated edge")
        missing = s - vs
        if missing:
            diag.append(f"{tag}: terminals {sorted(missing)} not covered")
        if set(tree.terminals) != s:
            diag.append(f"{tag}: terminal set differs from the family's")
        if len(tree.edges) != len(vs) - 1:
            diag.append(f"{tag}: {len(tree.edges)} edges on {len(vs)} vertices is not a tree")
        elif vs:
            nbrs: dict[int, set[int]] = {v: set() for v in vs}
            for u, v in tree.edges:
                if u in nbrs and v in nbrs:
                    nbrs[u].add(v)
                    nbrs[v].add(u)
            start = min(vs)
            seen = {start}
            stack = [start]
            while stack:
                for w in nbrs[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen != vs:
                diag.append(f"{tag}: not connected")
            for v in sorted(vs):
                if len(nbrs[v]) == 1 and v not in s:
                    diag.append(f"{tag}: leaf {v} is not a terminal")
    for (i, a), (j, b) in combinations(enumerate(fam.trees), 2):
        for v in sorted((set(a.vertices) & set(b.vertices)) - s):
            diag.append(f"trees {i} and {j} share non-terminal vertex {v}")
        for u, v in sorted(set(a.edges) & set(b.edges)):
            diag.append(f"trees {i} and {j} share edge {u}-{v}")
    return Validation(not diag, diag)


def _tree_from_slot(g: Graph, smask: int, vmask: int, ss_used: list[Edge]) -> list[Edge]:
    allowed = smask | vmask
    ss_ok = set(ss_used)
    root = bits(smask)[0]
    seen = 1 << root
    queue = [root]
    nbrs: dict[int, list[int]] = {}
    edges: list[Edge] = []
    for v in queue:
        for w in bits(g.adj[v] & allowed & ~seen):
            if smask >> v & 1 and smask >> w & 1 and (min(v, w), max(v, w)) not in ss_ok:
                continue
            seen |= 1 << w
            queue.append(w)
            edges.append((min(v, w), max(v, w)))
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    # strip non-terminal leaves until every leaf is a terminal
    alive = set(edges)
    deg = {v: len(ns) for v, ns in nbrs.items()}
    stack = [v for v, d in deg.items() if d == 1 and not smask >> v & 1]
    while stack:
        v = stack.pop()
        for w in nbrs[v]:
            e = (min(v, w), max(v, w))
            if e in alive:
                alive.discard(e)
                deg[v] -= 1
                deg[w] -= 1
                if deg[w] == 1 and not smask >> w & 1:
                    stack.append(w)
    return sorted(alive)


def _prepare(g: Graph, s, limit: int | None) -> tuple[tuple[int, ...], int]:
    _check_limit(g, limit)
    terms = vertex_set(g, s)
    if len(terms) < 2:
        raise GraphError("terminal set needs at least two vertices")
    return terms, to_mask(terms)


def _set_cap(g: Graph, terms: tuple[int, ...], smask: int) -> int:
    """Cheap upper bound on kappa(S); 0 when S spans several components."""
    comp = next(c for c in components(g) if c >> terms[0] & 1)
    if comp & smask != smask:
        return 0
    nss = sum(1 for a, b in combinations(terms, 2) if g.adj[a] >> b & 1)
    # each tree needs a private outside vertex or |S|-1 terminal-terminal edges
    structural = (comp & ~smask).bit_count() + nss // (len(terms) - 1)
    return min(min(g.adj[v].bit_count() for v in terms), structural)


def _find(g: Graph, terms, smask: int, t: int, backend: str | None) -> DisjointTreeFamily | None:
    found = _kernel.get_pack(backend)(g.n, list(g.adj), smask, t)
    if found is None:
        return None
    vms, ems = found
    ss = [(a, b) for a, b in combinations(terms, 2) if g.adj[a] >> b & 1]
    trees = []
    for vm, em in zip(vms, ems):
        edges = _tree_from_slot(g, smask, vm, [ss[i] for i in bits(em)])
        trees.append(TreeCertificate.from_edges(edges, terms))
    return DisjointTreeFamily(terms, tuple(trees)).sorted()


def find_disjoint_trees(
    g: Graph, s, t: int, *, limit: int | None = None, backend: str | None = None
) -> DisjointTreeFamily | None:
    """A family of ``t`` internally disjoint trees connecting ``s``, or ``None``.

    ``None`` means no such family exists: the search is exhaustive.
    """
    terms, smask = _prepare(g, s, limit)
    if t < 1:
        raise ValueError("t must be positive")
    if t > _set_cap(g, terms, smask):
        return None
    return _find(g, terms, smask, t, backend)


def _kappa_capped(g: Graph, terms, smask: int, cap: int, backend: str | None) -> KappaResult:
    cap = min(cap, _set_cap(g, terms, smask))
    best = DisjointTreeFamily(terms)
    for t in range(1, cap + 1):
        fam = _find(g, terms, smask, t, backend)
        if fam is None:
            break
        best = fam
    return KappaResult(len(best), terms, best, g)


def kappa_of_set(g: Graph, s, *, limit: int | None = None, backend: str | None = None) -> KappaResult:
    terms, smask = _prepare(g, s, limit)
    return _kappa_capped(g, terms, smask, g.n, backend)


def kappa_upper_bounds(g: Graph) -> int:
    """Minimum degree, lowered by one if two minimum-degree vertices are adjacent."""
    if g.n < 3:
        raise GraphError("need at least three vertices")
    if len(components(g)) != 1:
        raise GraphError("graph is disconnected")
    degs = g.degrees()
    delta = min(degs)
    low = to_mask(v for v, d in enumerate(degs) if d == delta)
    if any(g.adj[v] & low for v in bits(low)):
        return delta - 1
    return delta


def _triple_job(g: Graph, cap: int, backend: str | None, triple) -> tuple[int, DisjointTreeFamily]:
    r = _kappa_capped(g, triple, to_mask(triple), cap, backend)
    return r.kappa, r.family


def kappa3(
    g: Graph, *, limit: int | None = None, workers: int = 1, backend: str | None = None
) -> KappaResult:
    """Generalized 3-connectivity with the lexicographically least minimizing triple.

    Disconnected graphs get 0, witnessed by the first triple meeting two
    components.
    """
    if g.n < 3:
        raise GraphError("kappa3 needs at least three vertices")
    _check_limit(g, limit)
    comps = components(g)
    if len(comps) > 1:
        for triple in combinations(range(g.n), 3):
            m = to_mask(triple)
            if not any(c & m == m for c in comps):
                return KappaResult(0, triple, DisjointTreeFamily(triple), g)
    ub = kappa_upper_bounds(g)
    triples = list(combinations(range(g.n), 3))

    if workers > 1:
        # every triple capped at ub+1 is exact below ub+1, so the reduction
        # below matches the sequential scan
        job = partial(_triple_job, g, ub + 1, backend)
        values = ordered_map(job, triples, workers)
        k, fam = min(values, key=lambda kv: kv[0])
        idx = next(i for i, (kv, _) in enumerate(values) if kv == k)
        return KappaResult(k, triples[idx], values[idx][1], g)

    best = ub + 1
    witness: KappaResult | None = None
    for triple in triples:
        if best == 1:
            break
        smask = to_mask(triple)
        if best <= _set_cap(g, triple, smask) and _find(g, triple, smask, best, backend) is not None:
            continue
        witness = _kappa_capped(g, triple, smask, best - 1, backend)
        best = witness.kappa
    assert witness is not None
    return witness
