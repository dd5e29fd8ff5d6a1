"""Named graphs: the H(k) family, smoothing, the figure fixtures, extremal graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, complete_graph


@dataclass(frozen=True)
class HParameters:
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise GraphError(f"H(k) needs k >= 1, got {self.k}")


def build_h(k: int) -> Graph:
    """4k-cycle x1 y1 x2 y2 ... x2k y2k plus apexes z_i on x_i and x_{i+k}.

    Labels: x_i -> 2(i-1), y_i -> 2i-1, z_i -> 4k-1+i.
    """
    HParameters(k)
    c = 4 * k
    edges = [(j, (j + 1) % c) for j in range(c)]
    for i in range(1, k + 1):
        z = c - 1 + i
        edges.append((z, 2 * (i - 1)))
        edges.append((z, 2 * (i + k - 1)))
    return Graph(5 * k, edges)


def smooth(g: Graph, u: int) -> Graph:
    """Delete the degree-2 vertex ``u`` and join its neighbours.

    Labels above ``u`` shift down by one.  A would-be parallel edge is an
    error: graphs here stay simple.
    """
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range for n={g.n}")
    nb = g.neighbors(u)
    if len(nb) != 2:
        raise GraphError(f"vertex {u} has degree {len(nb)}, not 2")
    w1, w2 = nb
    if g.adj[w1] >> w2 & 1:
        raise GraphError(f"neighbours {w1} and {w2} of {u} are already adjacent")

    def down(v: int) -> int:
        return v - 1 if v > u else v

    edges = [(down(a), down(b)) for a, b in g.edges if u not in (a, b)]
    edges.append((down(w1), down(w2)))
    return Graph(g.n - 1, edges)


def smoothable_vertices(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        if g.adj[v].bit_count() == 2:
            w1, w2 = g.neighbors(v)
            if not g.adj[w1] >> w2 & 1:
                out.append(v)
    return out


def smooth_many(g: Graph, t: int) -> Graph:
    """Smooth ``t`` times, always taking the least-labelled smoothable vertex."""
    if t < 1:
        raise GraphError("smooth_many needs t >= 1")
    for step in range(t):
        cands = smoothable_vertices(g)
        if not cands:
            raise GraphError(f"no smoothable vertex at step {step + 1}")
        g = smooth(g, cands[0])
    return g


def _cycle8(*extra: tuple[int, int]) -> list[tuple[int, int]]:
    return [(i, (i + 1) % 8) for i in range(8)] + list(extra)


def _xy_graph(y_nbrs: list[tuple[int, ...]]) -> Graph:
    # x1..x5 -> 0..4, y1..y4 -> 5..8, the single Y-Y edge is y1 y2
    edges = [(5, 6)]
    for j, xs in enumerate(y_nbrs):
        edges.extend((x, 5 + j) for x in xs)
    return Graph(9, edges)


def figure_fixture(fig: int) -> Graph:
    if fig == 1:
        return Graph(10, _cycle8((3, 7), (8, 0), (8, 4), (9, 2), (9, 6)))
    if fig == 2:
        return _xy_graph([(0, 1), (0, 2), (1, 3, 4), (2, 3, 4)])
    if fig == 3:
        return _xy_graph([(0, 1), (2, 3), (0, 2, 4), (1, 3, 4)])
    if fig == 4:
        return _xy_graph([(0, 1), (2, 3), (0, 1, 4), (2, 3, 4)])
    if fig == 5:
        return Graph(9, _cycle8((2, 6), (3, 7), (8, 0), (8, 4)))
    if fig == 6:
        return Graph(8, _cycle8((0, 4), (2, 6)))
    raise GraphError(f"no figure {fig}; ids run 1..6")


def build_extremal(n: int) -> Graph:
    """A graph of order ``n`` with kappa3 = 2 and the fewest possible edges."""
    if n < 4:
        raise GraphError(f"extremal graphs start at n=4, got {n}")
    if n == 4:
        return complete_graph(4).remove_edge(2, 3)
    if n == 5:
        return build_h(1)
    if n in (6, 7):
        return smooth_many(figure_fixture(6), 8 - n)
    if n in (8, 9, 10):
        return figure_fixture({8: 6, 9: 5, 10: 1}[n])
    k = -(-n // 5)
    t = 5 * k - n
    h = build_h(k)
    return smooth_many(h, t) if t else h
