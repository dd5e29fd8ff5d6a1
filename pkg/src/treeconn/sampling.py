"""Seeded random graphs for the verification campaigns.

All randomness goes through ``random.Random(seed)`` (Mersenne Twister), so
a seed reproduces the same graphs on every platform and Python >= 3.2.
"""

from __future__ import annotations

import random
from itertools import combinations

from .constructions import smoothable_vertices
from .graph import Graph


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus each remaining pair independently with prob ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for e in combinations(range(n), 2):
        if rng.random() < p:
            edges.add(e)
    return Graph(n, edges)


def subdivide(g: Graph, edge: tuple[int, int]) -> Graph:
    """Replace ``edge`` by a path through a new vertex labelled ``g.n``."""
    u, v = edge
    edges = [e for e in g.edges if e != (min(u, v), max(u, v))]
    edges += [(u, g.n), (v, g.n)]
    return Graph(g.n + 1, edges)


def connected_sample(rng: random.Random, count: int, n_range: tuple[int, int], densities) -> list[Graph]:
    out = []
    lo, hi = n_range
    for i in range(count):
        n = rng.randint(lo, hi)
        out.append(random_connected_graph(rng, n, densities[i % len(densities)]))
    return out


def smoothable_sample(rng: random.Random, count: int, max_n: int = 9, densities=(0.2, 0.4, 0.6, 0.8, 1.0)) -> list[Graph]:
    """Connected graphs on 4..max_n vertices that have a smoothable vertex.

    A random base graph gets up to three random edges subdivided, which both
    guarantees a smoothable vertex and tends to keep kappa3 at 2 for dense
    bases.
    """
    out = []
    i = 0
    while len(out) < count:
        p = densities[i % len(densities)]
        i += 1
        n0 = rng.randint(3, max_n - 1)
        g = random_connected_graph(rng, n0, p)
        for _ in range(rng.randint(0, min(3, max_n - n0))):
            g = subdivide(g, rng.choice(g.edges))
        if g.n >= 4 and smoothable_vertices(g):
            out.append(g)
    return out
