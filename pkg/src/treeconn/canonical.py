"""Canonical labeling by colour refinement plus individualisation.

The search tree is the usual partition-backtracking one: refine to an
equitable ordered partition, individualise each vertex of the first
smallest non-singleton cell, recurse.  Leaves are discrete partitions and
the maximal relabelled adjacency wins.  Two cheap prunings keep symmetric
graphs tractable: twins inside a cell are interchangeable, and automorphisms
discovered from equal leaves collapse sibling branches in the same orbit.
"""

from __future__ import annotations

from .graph import Graph, GraphError, bits

CANON_LIMIT = 32


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _code(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for w in bits(adj[v]):
            row |= 1 << pos[w]
        rows.append(row)
    return tuple(rows)


class _Search:
    def __init__(self, g: Graph) -> None:
        self.adj = g.adj
        self.n = g.n
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] = []
        self.first: tuple[int, ...] | None = None
        self.first_order: list[int] = []
        self.autos: list[list[int]] = []

    def _record_auto(self, order_a: list[int], order_b: list[int]) -> None:
        sigma = [0] * self.n
        for a, b in zip(order_a, order_b):
            sigma[b] = a
        if any(sigma[v] != v for v in range(self.n)):
            self.autos.append(sigma)

    def leaf(self, order: list[int]) -> None:
        code = _code(self.adj, order)
        if self.first is None:
            self.first, self.first_order = code, order
        elif code == self.first:
            self._record_auto(self.first_order, order)
        if self.best is None or code > self.best:
            self.best, self.best_order = code, order
        elif code == self.best:
            self._record_auto(self.best_order, order)

    def _orbit_roots(self, cell: list[int], path: list[int]) -> dict[int, int]:
        parent = {v: v for v in cell}

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        def union(a: int, b: int) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        for i, u in enumerate(cell):
            for v in cell[i + 1:]:
                if self.adj[u] & ~(1 << v) == self.adj[v] & ~(1 << u):
                    union(u, v)
        for sigma in self.autos:
            if all(sigma[p] == p for p in path):
                for v in cell:
                    if sigma[v] in parent:
                        union(v, sigma[v])
        return {v: find(v) for v in cell}

    def run(self, cells: list[list[int]], path: list[int]) -> None:
        cells = _refine(self.adj, cells)
        if len(cells) == self.n:
            self.leaf([c[0] for c in cells])
            return
        idx = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        target = cells[idx]
        done: set[int] = set()
        for v in target:
            roots = self._orbit_roots(target, path)
            if roots[v] in {roots[u] for u in done}:
                continue
            done.add(v)
            rest = [u for u in target if u != v]
            self.run(cells[:idx] + [[v], rest] + cells[idx + 1:], path + [v])


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` such that ``g.relabel(perm)`` is the canonical graph."""
    if g.n > CANON_LIMIT:
        raise GraphError(f"canonical form limited to n <= {CANON_LIMIT}, got {g.n}")
    if g.n == 0:
        return []
    search = _Search(g)
    search.run([list(range(g.n))], [])
    perm = [0] * g.n
    for i, v in enumerate(search.best_order):
        perm[v] = i
    return perm


def canonical_form(g: Graph) -> bytes:
    """Byte key equal for two graphs iff they are isomorphic."""
    perm = canonical_labeling(g)
    h = g.relabel(perm) if g.n else g
    width = (g.n + 7) // 8
    return bytes([g.n]) + b"".join(row.to_bytes(width, "little") for row in h.adj)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)
