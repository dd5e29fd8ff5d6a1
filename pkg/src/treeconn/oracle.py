"""Brute-force reference for kappa(S), used only to test the main solver.

Every subtree of the graph is listed explicitly (each connected vertex
subset, each spanning tree of its induced subgraph), then the largest
pairwise-compatible family is found by exhaustive clique search.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import Graph, GraphError, to_mask, vertex_set

ORACLE_LIMIT = 8


def _is_spanning_tree(k_vertices: list[int], edges) -> bool:
    parent = {v: v for v in k_vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


@lru_cache(maxsize=32)
def _all_subtrees(g: Graph) -> list[tuple[int, int, int]]:
    """``(vertex_mask, edge_mask, leaf_mask)`` for every subtree with an edge."""
    index = {e: i for i, e in enumerate(g.edges)}
    out = []
    for k in range(2, g.n + 1):
        for verts in combinations(range(g.n), k):
            vmask = to_mask(verts)
            inner = [e for e in g.edges if vmask >> e[0] & 1 and vmask >> e[1] & 1]
            if len(inner) < k - 1:
                continue
            for chosen in combinations(inner, k - 1):
                if not _is_spanning_tree(list(verts), chosen):
                    continue
                deg = dict.fromkeys(verts, 0)
                for u, v in chosen:
                    deg[u] += 1
                    deg[v] += 1
                leaves = to_mask(v for v, d in deg.items() if d == 1)
                out.append((vmask, to_mask(index[e] for e in chosen), leaves))
    return out


def brute_force_kappa_of_set(g: Graph, s) -> int:
    if g.n > ORACLE_LIMIT:
        raise GraphError(f"oracle limited to n <= {ORACLE_LIMIT}")
    terms = vertex_set(g, s)
    if len(terms) < 2:
        raise GraphError("terminal set needs at least two vertices")
    smask = to_mask(terms)
    cands = [
        (vm, em)
        for vm, em, leaves in _all_subtrees(g)
        if vm & smask == smask and leaves & ~smask == 0
    ]
    best = 0

    def grow(pool, size):
        nonlocal best
        best = max(best, size)
        for i, (vm, em) in enumerate(pool):
            if size + len(pool) - i <= best:
                return
            rest = [(v2, e2) for v2, e2 in pool[i + 1:] if v2 & vm == smask and e2 & em == 0]
            grow(rest, size + 1)

    grow(cands, 0)
    return best
