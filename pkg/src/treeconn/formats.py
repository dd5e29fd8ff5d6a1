"""Edge-list, graph6, DOT and certificate documents."""

from __future__ import annotations

import json
from collections.abc import Sequence

from .graph import Graph, GraphError
from .packing import DisjointTreeFamily, KappaResult, TreeCertificate, validate_certificate


class FormatError(ValueError):
    """Malformed input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DuplicateEdgeError(FormatError):
    pass


class LoopError(FormatError):
    pass


class LabelOverflowError(FormatError):
    pass


class HeaderMismatchError(FormatError):
    pass


class CertificateError(FormatError):
    pass


# --- edge lists -------------------------------------------------------------


def _data_lines(text: str) -> list[tuple[int, list[int]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise FormatError(f"expected two integers, got {body!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer label in {body!r}", lineno) from None
        if a < 0 or b < 0:
            raise FormatError("negative label", lineno)
        out.append((lineno, [a, b]))
    return out


def parse_edge_list(text: str, header: bool | None = None) -> Graph:
    """Parse ``u v`` lines with an optional leading ``n m`` header.

    With ``header=None`` the first line counts as a header only when ``m``
    equals the number of remaining lines and every remaining label is below
    ``n``; pass ``header=True`` to insist on one (and get mismatch
    diagnostics) or ``False`` to forbid it.
    """
    rows = _data_lines(text)
    n = None
    if rows and header is not False:
        (hline, (hn, hm)), body = rows[0], rows[1:]
        fits_count = hm == len(body)
        fits_labels = all(max(uv) < hn for _, uv in body)
        if header or (fits_count and fits_labels):
            if not fits_count:
                raise HeaderMismatchError(f"header declares {hm} edges, body has {len(body)}", hline)
            n, rows = hn, body
    elif header:
        raise HeaderMismatchError("missing header", None)
    if n is None:
        n = max((max(uv) for _, uv in rows), default=-1) + 1
    seen: set[tuple[int, int]] = set()
    for lineno, (u, v) in rows:
        if u == v:
            raise LoopError(f"loop at vertex {u}", lineno)
        if u >= n or v >= n:
            raise LabelOverflowError(f"label {max(u, v)} not below n={n}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
    return Graph(n, seen)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# --- graph6 -----------------------------------------------------------------

_G6_MAX = 62


def emit_graph6(g: Graph) -> str:
    if g.n > _G6_MAX:
        raise GraphError(f"short-form graph6 supports n <= {_G6_MAX}")
    out = [chr(63 + g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"bad graph6 character {ch!r}")
    n = ord(s[0]) - 63
    if n > _G6_MAX:
        raise FormatError("long-form graph6 (n > 62) is not supported")
    total = n * (n - 1) // 2
    need = -(-total // 6)
    data = s[1:]
    if len(data) < need:
        raise FormatError(f"truncated graph6: {len(data)} of {need} data bytes")
    if len(data) > need:
        raise FormatError(f"trailing data in graph6: {len(data)} bytes, expected {need}")
    vals = [ord(c) - 63 for c in data]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if vals[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need and vals[-1] & ((1 << (need * 6 - total)) - 1):
        raise FormatError("nonzero graph6 padding bits")
    return Graph(n, edges)


# --- DOT --------------------------------------------------------------------

PALETTE = ("red", "blue", "forestgreen", "orange", "purple", "brown", "magenta", "cyan")


def emit_dot(g: Graph, trees: Sequence[TreeCertificate] = (), name: str = "G") -> str:
    colour = {}
    for i, tree in enumerate(trees):
        for e in tree.edges:
            colour[e] = PALETTE[i % len(PALETTE)]
    terminals = set(trees[0].terminals) if trees else set()
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v} [shape=doublecircle];" if v in terminals else f"  {v};")
    for u, v in g.edges:
        c = colour.get((u, v))
        attr = f' [color="{c}", penwidth=2]' if c else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- certificates -----------------------------------------------------------


def certificate_dict(result: KappaResult) -> dict:
    if result.graph is None:
        raise ValueError("result carries no graph")
    g = result.graph
    trees = sorted(result.family.trees, key=lambda t: t.edges)
    return {
        "graph": {"n": g.n, "edges": [list(e) for e in g.edges]},
        "set": list(result.witness_set),
        "kappa": result.kappa,
        "trees": [[list(e) for e in t.edges] for t in trees],
    }


def emit_certificate(result: KappaResult) -> str:
    return json.dumps(certificate_dict(result), indent=2) + "\n"


def _tree_as_listed(edges, terms) -> TreeCertificate:
    # vertex set taken from the edges alone so a dropped terminal shows up
    es = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
    return TreeCertificate(tuple(sorted({v for e in es for v in e})), es, terms)


def parse_certificate(doc: str | dict) -> KappaResult:
    data = json.loads(doc) if isinstance(doc, str) else doc
    try:
        g = Graph(data["graph"]["n"], data["graph"]["edges"])
        terms = tuple(sorted(data["set"]))
        kappa = int(data["kappa"])
        trees = tuple(_tree_as_listed(t, terms) for t in data["trees"])
    except (KeyError, TypeError, GraphError) as exc:
        raise CertificateError(f"malformed certificate: {exc}") from exc
    fam = DisjointTreeFamily(terms, trees).sorted()
    if len(trees) != kappa:
        raise CertificateError(f"kappa {kappa} but {len(trees)} trees")
    check = validate_certificate(g, fam)
    if not check.ok:
        raise CertificateError("; ".join(check.diagnostics))
    return KappaResult(kappa, terms, fam, g)
