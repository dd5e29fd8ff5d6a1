"""Size bounds for kappa3 = 2 and the campaigns that check them by computation."""

from __future__ import annotations

import json
import logging
import random
import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations, combinations_with_replacement

from ._pool import ordered_map
from .canonical import canonical_form
from .constructions import build_extremal, build_h, figure_fixture, smooth, smooth_many, smoothable_vertices
from .formats import FormatError, emit_graph6, parse_graph6
from .graph import Graph, GraphError, degree_two_set, is_connected
from .packing import kappa3
from .sampling import smoothable_sample

log = logging.getLogger(__name__)


def lower_bound_size(n: int) -> int:
    """ceil(6n/5)."""
    if n < 1:
        raise ValueError("n must be positive")
    return -(-6 * n // 5)


def extremal_size(n: int) -> int:
    if n < 4:
        raise ValueError("extremal size is defined for n >= 4")
    return lower_bound_size(n) + (1 if n in (9, 10) else 0)


@dataclass(frozen=True)
class BoundVerdict:
    status: str  # "holds", "violated" or "not-applicable"
    kappa3: int
    n: int
    e: int
    bound: int

    @property
    def tight(self) -> bool:
        return self.status == "holds" and self.e == self.bound


def check_bound(g: Graph, *, limit: int | None = None) -> BoundVerdict:
    k = kappa3(g, limit=limit).kappa
    bound = lower_bound_size(g.n)
    if k != 2:
        status = "not-applicable"
    elif g.m >= bound:
        status = "holds"
    else:
        status = "violated"
        log.error("size bound refuted: n=%d e=%d kappa3=2 graph6=%s", g.n, g.m, emit_graph6(g))
    return BoundVerdict(status, k, g.n, g.m, bound)


# --- forced degree profiles ---------------------------------------------------


@dataclass(frozen=True)
class ConstraintProfile:
    """Degree classes a hypothetical kappa3 = 2 graph of order n, size m must have.

    X holds the degree-2 vertices (a stable set), Y the rest; ``y_internal``
    edges run inside Y.  ``y_degree`` is the common Y degree when forced,
    ``None`` when only the lower bound 3 is known.
    """

    n: int
    m: int
    x_size: int
    y_size: int
    y_internal: int
    y_degree: int | None

    def __post_init__(self) -> None:
        if self.x_size + self.y_size != self.n:
            raise ValueError("x_size + y_size must equal n")
        if self.m != 2 * self.x_size + self.y_internal:
            raise ValueError("m must equal 2*x_size + y_internal")

    def degree_sum_consistent(self) -> bool:
        total = 2 * self.m - 2 * self.x_size
        if self.y_degree is None:
            return 2 * self.x_size + 3 * self.y_size <= 2 * self.m
        return total == self.y_degree * self.y_size


def feasible_profiles(n: int, m: int) -> list[ConstraintProfile]:
    """All (|X|, |Y|, m') splits allowed by the degree counting argument."""
    out = []
    # 2m >= 2|X| + 3(n - |X|) and m = 2|X| + m' with m' >= 0
    for x in range(max(0, 3 * n - 2 * m), min(n, m // 2) + 1):
        y = n - x
        mp = m - 2 * x
        if mp > y * (y - 1) // 2 or (x > 0 and y < 2) or y == 0:
            continue
        ysum = 2 * mp + 2 * x
        out.append(ConstraintProfile(n, m, x, y, mp, 3 if ysum == 3 * y else None))
    return out


def derive_profile(n: int, m: int) -> ConstraintProfile | None:
    """The forced profile, or ``None`` when no kappa3 = 2 graph can exist."""
    profs = feasible_profiles(n, m)
    if not profs:
        return None
    if len(profs) > 1:
        raise ValueError(f"(n, m) = ({n}, {m}) does not pin a single profile")
    return profs[0]


def enumerate_candidates(profile: ConstraintProfile) -> Iterator[Graph]:
    """Connected graphs realizing ``profile``, one per isomorphism class.

    X vertices are labelled ``0..x-1`` and Y vertices follow.  Y-internal
    edge sets are reduced up to isomorphism first; X vertices each pick an
    unordered Y pair (a multiset, since X is interchangeable); a canonical
    form pass removes whatever symmetry is left.
    """
    if profile.y_degree is None:
        raise ValueError("candidate enumeration needs an exact Y degree target")
    x, y = profile.x_size, profile.y_size
    ys = list(range(x, x + y))
    pairs = list(combinations(ys, 2))
    seen_inner: set[bytes] = set()
    seen: set[bytes] = set()
    for inner in combinations(pairs, profile.y_internal):
        key = canonical_form(Graph(y, [(a - x, b - x) for a, b in inner]))
        if key in seen_inner:
            continue
        seen_inner.add(key)
        residual = {v: profile.y_degree for v in ys}
        for a, b in inner:
            residual[a] -= 1
            residual[b] -= 1
        if any(r < 0 for r in residual.values()) or sum(residual.values()) != 2 * x:
            continue
        for choice in combinations_with_replacement(pairs, x):
            left = dict(residual)
            for a, b in choice:
                left[a] -= 1
                left[b] -= 1
            if any(left.values()):
                continue
            edges = list(inner) + [(i, v) for i, pr in enumerate(choice) for v in pr]
            g = Graph(x + y, edges)
            if not is_connected(g):
                continue
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
            yield g


def lemma4_case(g: Graph) -> str:
    """Which branch of the (9, 11) case split a candidate falls in."""
    xs = degree_two_set(g)
    ymask = sum(1 << v for v in range(g.n) if v not in xs)
    inner = [(a, b) for a, b in g.edges if ymask >> a & 1 and ymask >> b & 1]
    if len(inner) != 1:
        raise GraphError("not a (9, 11) profile graph")
    y1, y2 = inner[0]
    if any(g.adj[x] >> y1 & 1 and g.adj[x] >> y2 & 1 for x in xs):
        return "case 1"
    covered = {tuple(g.neighbors(x)) for x in xs}
    others = [p for p in combinations(sorted(v for v in range(g.n) if ymask >> v & 1), 2) if p != (y1, y2)]
    return "subcase 2.1" if all(p in covered for p in others) else "subcase 2.2"


# --- campaign reports ---------------------------------------------------------


@dataclass
class CampaignReport:
    name: str
    examined: int
    violations: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self, timing: bool = False) -> dict:
        doc = {
            "campaign": self.name,
            "examined": self.examined,
            "violations": sorted(self.violations),
            "verdict": self.verdict,
            "details": self.details,
        }
        if timing:
            doc["elapsed_seconds"] = round(self.elapsed, 3)
        return doc

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            f"campaign: {self.name}",
            f"examined: {self.examined}",
            f"violations: {len(self.violations)}",
        ]
        lines += [f"  {v}" for v in sorted(self.violations)]
        for key, val in self.details.items():
            if isinstance(val, list):
                lines.append(f"{key}:")
                lines += [f"  {row}" for row in val]
            else:
                lines.append(f"{key}: {val}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def _k3(limit: int | None, g: Graph) -> int:
    return kappa3(g, limit=limit).kappa


def _profile_campaign(name: str, n: int, m: int, workers: int, limit: int | None) -> tuple[CampaignReport, list[Graph]]:
    start = time.perf_counter()
    profile = derive_profile(n, m)
    assert profile is not None
    cands = list(enumerate_candidates(profile))
    kappas = ordered_map(partial(_k3, limit), cands, workers)
    report = CampaignReport(name, len(cands))
    report.violations = sorted(emit_graph6(g) for g, k in zip(cands, kappas) if k > 1)
    report.details["profile"] = (
        f"x={profile.x_size} y={profile.y_size} m'={profile.y_internal} y_degree={profile.y_degree}"
    )
    hist: dict[int, int] = {}
    for k in kappas:
        hist[k] = hist.get(k, 0) + 1
    report.details["kappa3 histogram"] = [f"kappa3={k}: {c}" for k, c in sorted(hist.items())]
    report.elapsed = time.perf_counter() - start
    return report, cands


def _contains(cands: list[Graph], g: Graph) -> bool:
    key = canonical_form(g)
    return any(canonical_form(c) == key for c in cands if c.m == g.m and c.n == g.n)


def verify_lemma4(*, workers: int = 1, limit: int | None = None) -> CampaignReport:
    """Every connected (9, 11) graph in the forced profile has kappa3 <= 1."""
    report, cands = _profile_campaign("lemma4", 9, 11, workers, limit)
    cases: dict[str, int] = {}
    for g in cands:
        c = lemma4_case(g)
        cases[c] = cases.get(c, 0) + 1
    report.details["case counts"] = [f"{c}: {cases[c]}" for c in sorted(cases)]
    report.details["figure fixtures present"] = [
        f"figure {f}: {_contains(cands, figure_fixture(f))}" for f in (2, 3, 4)
    ]
    return report


def verify_lemma3(*, workers: int = 1, limit: int | None = None) -> CampaignReport:
    """Every connected (10, 12) graph in the forced profile has kappa3 <= 1."""
    report, cands = _profile_campaign("lemma3", 10, 12, workers, limit)
    report.details["H(2) present"] = _contains(cands, build_h(2))
    return report


def _smoothing_job(limit: int | None, g: Graph) -> tuple[int, list[tuple[int, int]]]:
    base = kappa3(g, limit=limit).kappa
    return base, [(u, kappa3(smooth(g, u), limit=limit).kappa) for u in smoothable_vertices(g)]


def verify_lemma5(samples: int = 200, seed: int = 7, *, workers: int = 1, limit: int | None = None) -> CampaignReport:
    """Smoothing a degree-2 vertex never lowers kappa3, on seeded random graphs."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    start = time.perf_counter()
    graphs = smoothable_sample(random.Random(seed), samples)
    results = ordered_map(partial(_smoothing_job, limit), graphs, workers)
    report = CampaignReport("lemma5", len(graphs))
    pairs = 0
    by_base: dict[int, int] = {}
    for g, (base, after) in zip(graphs, results):
        by_base[base] = by_base.get(base, 0) + 1
        for u, k in after:
            pairs += 1
            if k < base:
                report.violations.append(f"{emit_graph6(g)} vertex={u} before={base} after={k}")
    report.details["seed"] = seed
    report.details["smoothings checked"] = pairs
    report.details["samples by kappa3"] = [f"kappa3={k}: {c}" for k, c in sorted(by_base.items())]
    report.elapsed = time.perf_counter() - start
    return report


def verify_theorem1(max_k: int = 3, *, kappa_max_n: int = 15, workers: int = 1, limit: int | None = None) -> CampaignReport:
    """Sizes of the smoothed H(k) family and of ``build_extremal``, plus kappa3 = 2 up to ``kappa_max_n``."""
    if max_k < 3:
        raise ValueError("max_k must be >= 3")
    start = time.perf_counter()
    report = CampaignReport("theorem1", 0)
    rows: list[str] = []
    to_solve: list[tuple[str, Graph]] = []
    for k in range(3, max_k + 1):
        h = build_h(k)
        for t in range(5):
            g = smooth_many(h, t) if t else h
            n_ok = g.n == 5 * k - t and g.m == 6 * k - t and g.m == lower_bound_size(g.n)
            rows.append(f"k={k} t={t} n={g.n} e={g.m} ceil(6n/5)={lower_bound_size(g.n)} {'ok' if n_ok else 'MISMATCH'}")
            report.examined += 1
            if not n_ok:
                report.violations.append(f"{emit_graph6(g)} smoothed H({k}) t={t} size mismatch")
            if g.n <= kappa_max_n:
                to_solve.append((f"H({k}) t={t}", g))
    for n in range(4, 5 * max_k + 1):
        g = build_extremal(n)
        report.examined += 1
        ok = g.n == n and g.m == extremal_size(n)
        rows.append(f"extremal n={n} e={g.m} extremal_size={extremal_size(n)} {'ok' if ok else 'MISMATCH'}")
        if not ok:
            report.violations.append(f"{emit_graph6(g)} extremal n={n} size mismatch")
        if n <= kappa_max_n:
            to_solve.append((f"extremal n={n}", g))
    kappas = ordered_map(partial(_k3, limit), [g for _, g in to_solve], workers)
    for (label, g), k in zip(to_solve, kappas):
        rows.append(f"{label}: kappa3={k}")
        if k != 2:
            report.violations.append(f"{emit_graph6(g)} {label} kappa3={k}")
    report.details["rows"] = rows
    report.elapsed = time.perf_counter() - start
    return report


# --- graph6 stream filter -----------------------------------------------------


@dataclass
class FilterSummary:
    read: int = 0
    matched: int = 0
    errors: list[tuple[int, str]] = field(default_factory=list)

    def line(self) -> str:
        return f"read {self.read} matched {self.matched} errors {len(self.errors)}"


def kappa_equals(value: int) -> Callable[[int], bool]:
    return lambda k: k == value


def kappa_at_least(value: int) -> Callable[[int], bool]:
    return lambda k: k >= value


def _filter_job(limit: int | None, item: tuple[int, str]) -> tuple[int, int | None, str | None]:
    lineno, text = item
    try:
        g = parse_graph6(text)
        return lineno, kappa3(g, limit=limit).kappa, None
    except (FormatError, GraphError) as exc:
        return lineno, None, str(exc)


def filter_kappa(
    lines: Iterable[str],
    predicate: Callable[[int], bool],
    summary: FilterSummary | None = None,
    *,
    workers: int = 1,
    limit: int | None = None,
    batch: int = 256,
) -> Iterator[str]:
    """Yield the graph6 lines whose kappa3 satisfies ``predicate``, in input order.

    Unparseable lines are recorded in ``summary.errors`` and skipped.
    """
    summary = summary if summary is not None else FilterSummary()
    job = partial(_filter_job, limit)
    pending: list[tuple[int, str]] = []

    def flush() -> Iterator[str]:
        texts = dict(pending)
        for lineno, k, err in ordered_map(job, pending, workers):
            if err is not None:
                summary.errors.append((lineno, err))
            elif predicate(k):
                summary.matched += 1
                yield texts[lineno]
        pending.clear()

    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text:
            continue
        summary.read += 1
        pending.append((lineno, text))
        if len(pending) >= batch:
            yield from flush()
    if pending:
        yield from flush()
