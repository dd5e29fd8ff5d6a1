"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is kept twice: as a sorted edge tuple and as one neighbour
bitmask per vertex, so the packing search can intersect neighbourhoods
with a single ``&``.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex queries."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj = [0] * n
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            key = _norm(u, v)
            if key in seen:
                raise GraphError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_labeled_edges(
        cls, pairs: Iterable[tuple[Hashable, Hashable]]
    ) -> tuple[Graph, tuple[Hashable, ...]]:
        """Remap arbitrary labels to ``0..n-1`` in first-seen order.

        Returns the graph and the label of each dense vertex, so results can
        be reported in the caller's vocabulary.
        """
        index: dict[Hashable, int] = {}
        edges = []
        for a, b in pairs:
            for lab in (a, b):
                if lab not in index:
                    index[lab] = len(index)
            edges.append((index[a], index[b]))
        return cls(len(index), edges), tuple(index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return self.n

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph(self.n, self.edges + ((u, v),))

    def remove_edge(self, u: int, v: int) -> Graph:
        key = _norm(u, v)
        if key not in self.edges:
            raise GraphError(f"no edge {key[0]}-{key[1]}")
        return Graph(self.n, (e for e in self.edges if e != key))

    def complement(self) -> Graph:
        return Graph(
            self.n,
            (e for e in combinations(range(self.n), 2) if not self.adj[e[0]] >> e[1] & 1),
        )


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertex_set(g: Graph, members: Iterable[int]) -> tuple[int, ...]:
    """Sorted duplicate-free tuple of vertices, range-checked against ``g``."""
    out = tuple(sorted(set(members)))
    for v in out:
        g._check(v)
    return out


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    if g.n < 1:
        raise GraphError("min_degree of the empty graph")
    return min(g.degrees())


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by least vertex."""
    out = []
    left = (1 << g.n) - 1
    while left:
        reach = left & -left
        frontier = reach
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~reach
            reach |= frontier
        out.append(reach)
        left &= ~reach
    return out


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(components(g)) == 1


def is_stable_set(g: Graph, s: Iterable[int]) -> bool:
    members = vertex_set(g, s)
    mask = to_mask(members)
    return all(g.adj[v] & mask == 0 for v in members)


def degree_two_set(g: Graph) -> tuple[int, ...]:
    return tuple(v for v, d in enumerate(g.degrees()) if d == 2)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))
