import json
import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treeconn.constructions import figure_fixture
from treeconn.formats import (
    CertificateError,
    DuplicateEdgeError,
    FormatError,
    HeaderMismatchError,
    LabelOverflowError,
    LoopError,
    emit_certificate,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    parse_certificate,
    parse_edge_list,
    parse_graph6,
)
from treeconn.graph import Graph, complete_graph, cycle_graph
from treeconn.packing import kappa_of_set

nx = pytest.importorskip("networkx")


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def _nx_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


class TestEdgeList:
    def test_header_triangle(self):
        g = parse_edge_list("3 3\n0 1\n1 2\n2 0")
        assert g == Graph(3, [(0, 1), (1, 2), (0, 2)])

    def test_headerless_and_comments(self):
        g = parse_edge_list("# a path\n0 1  # first\n\n1 2\n")
        assert (g.n, g.edges) == (3, ((0, 1), (1, 2)))

    def test_distinct_diagnostics(self):
        with pytest.raises(DuplicateEdgeError) as exc:
            parse_edge_list("0 1\n0 1")
        assert exc.value.line == 2
        with pytest.raises(LoopError):
            parse_edge_list("0 1\n2 2")
        with pytest.raises(LabelOverflowError):
            parse_edge_list("3 2\n0 1\n1 5", header=True)
        with pytest.raises(HeaderMismatchError):
            parse_edge_list("3 3\n0 1\n1 2", header=True)
        with pytest.raises(FormatError, match="two integers"):
            parse_edge_list("0 1 2")

    def test_explicit_no_header(self):
        g = parse_edge_list("2 1\n0 1", header=False)
        assert g.edges == ((0, 1), (1, 2))

    def test_fixture_file(self, fixture_dir):
        text = (fixture_dir / "figure6.edges").read_text()
        g = parse_edge_list(text)
        assert (g.n, g.m) == (8, 10)
        assert len(text.splitlines()) == 11
        assert emit_edge_list(g) == text

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_edge_list(emit_edge_list(g)) == g


class TestGraph6:
    @pytest.mark.parametrize(
        "g, expected",
        [(complete_graph(3), "Bw"), (complete_graph(4), "C~"), (cycle_graph(5), "Dhc")],
    )
    def test_reference_bytes(self, g, expected):
        assert emit_graph6(g) == expected
        assert _nx_graph6(g) == expected

    def test_known_line_round_trip(self):
        assert emit_graph6(parse_graph6("D?{")) == "D?{"

    def test_corpus_round_trip(self):
        rng = random.Random(5)
        corpus = []
        for _ in range(100):
            n = rng.randint(1, 20)
            g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < rng.random()])
            corpus.append(_nx_graph6(g))
        for line in corpus:
            assert emit_graph6(parse_graph6(line)) == line

    def test_k4_isomorphic(self):
        assert parse_graph6(emit_graph6(complete_graph(4))) == complete_graph(4)

    def test_errors(self):
        with pytest.raises(FormatError, match="bad graph6 character"):
            parse_graph6("D?{ !")
        with pytest.raises(FormatError, match="truncated"):
            parse_graph6("D?")
        with pytest.raises(FormatError, match="trailing"):
            parse_graph6("Bww")

    def test_header_prefix_accepted(self):
        assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)

    @given(graphs(max_n=20))
    def test_matches_networkx(self, g):
        assert emit_graph6(g) == _nx_graph6(g)
        assert parse_graph6(emit_graph6(g)) == g


class TestDot:
    def test_triangle(self):
        assert emit_dot(complete_graph(3)).count("--") == 3

    def test_fixture_edge_count(self):
        assert emit_dot(figure_fixture(5)).count(" -- ") == 12

    def test_tree_colours(self):
        r = kappa_of_set(complete_graph(4), [0, 1, 2])
        text = emit_dot(r.graph, r.family.trees)
        colours = {part.split('"')[1] for part in text.split("color=")[1:]}
        assert len(colours) == 2
        assert text.startswith("graph G {")


class TestCertificate:
    def _result(self):
        return kappa_of_set(figure_fixture(1), [1, 3, 8])

    def test_round_trip(self):
        r = self._result()
        doc = emit_certificate(r)
        back = parse_certificate(doc)
        assert back == r
        assert emit_certificate(back) == doc
        assert list(json.loads(doc)) == ["graph", "set", "kappa", "trees"]

    def test_figure1_two_trees(self):
        data = json.loads(emit_certificate(self._result()))
        assert data["kappa"] == 2
        assert len(data["trees"]) == 2

    def test_tampered_tree(self):
        data = json.loads(emit_certificate(self._result()))
        # drop the edges touching terminal 8 from the first tree
        data["trees"][0] = [e for e in data["trees"][0] if 8 not in e]
        with pytest.raises(CertificateError):
            parse_certificate(data)

    def test_kappa_mismatch(self):
        data = json.loads(emit_certificate(self._result()))
        data["kappa"] = 3
        with pytest.raises(CertificateError):
            parse_certificate(data)
