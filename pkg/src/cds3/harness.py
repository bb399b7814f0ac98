"""Sweep engine: graph sources, hypothesis filters, per-graph checks, reports.

Sources are exhaustive labeled enumeration (n <= 7), a pruned exhaustive
enumeration of the size-4 theorem's hypothesis class (n <= 8), graph6
streams from external generators, and seeded random sampling with rejection
filters.  Checks verify the constructive procedures and the invariant
inequalities graph by graph, collecting re-checkable graph6 witnesses for
any violation.  Reports are deterministic given the source order and seed;
workers only change wall time, never output.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, Optional

from .constructive import (
    CaseGapError,
    build_h_certificate,
    theorem1_edge,
    theorem2_cds,
)
from .graphs import Graph, bit_list, bits
from .invariants import (
    clique_number,
    find_claw,
    find_induced_cycle,
    has_independent_set,
    is_cds,
    is_simplicial,
    iter_cds,
    min_cds_size,
)
from .minors import h_number, hadwiger_number, verify_h_sequence

ENUMERATION_CAP = 7
CLASS_ENUMERATION_CAP = 8
H_CHECK_CAP = 12
GAP_LABEL = "CASE_GAP"

KNOWN_CHECKS = (
    "theorem1",
    "theorem2",
    "corollary_bound_half",
    "corollary_bound_quarter",
    "sandwich",
    "domination_step",
    "certificate",
)
_H_CHECKS = frozenset(
    ("corollary_bound_half", "corollary_bound_quarter", "sandwich", "domination_step")
)


# -- sources -----------------------------------------------------------------


@dataclass(frozen=True)
class EnumerateSource:
    """All labeled graphs on n_lo..n_hi vertices."""

    n_lo: int
    n_hi: int


@dataclass(frozen=True)
class ClassSource:
    """Pruned exhaustive enumeration of connected claw-free alpha=3 C7-free graphs."""

    n_lo: int
    n_hi: int
    degree_sorted: bool = False


@dataclass(frozen=True)
class StreamSource:
    """graph6 lines; path='-' reads standard input (resolved by the CLI)."""

    path: str


@dataclass(frozen=True)
class LinesSource:
    """In-memory graph6 lines."""

    lines: tuple[bytes, ...]


@dataclass(frozen=True)
class RandomSource:
    """Seeded G(n, p) samples filtered by the sweep filters."""

    n: int
    p: float
    count: int
    seed: int
    max_attempts: int = 1_000_000


@dataclass(frozen=True)
class Filters:
    connected: Optional[bool] = None
    alpha_eq: Optional[int] = None
    alpha_max: Optional[int] = None
    claw_free: bool = False
    forbid_cycles: tuple[int, ...] = ()


@dataclass(frozen=True)
class SweepSpec:
    source: object
    checks: tuple[str, ...]
    filters: Filters = Filters()
    strict: bool = False
    jobs: int = 1
    domination_samples: int = 5

    def __post_init__(self):
        if not self.checks:
            raise ValueError("a sweep needs at least one check")
        for c in self.checks:
            if c not in KNOWN_CHECKS:
                raise ValueError(f"unknown check {c!r} (known: {', '.join(KNOWN_CHECKS)})")
        f = self.filters
        if f.alpha_eq is not None and f.alpha_max is not None and f.alpha_eq > f.alpha_max:
            raise ValueError("filters demand an independence number above the allowed maximum")


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices exactly once, by edge-mask order."""
    if n > ENUMERATION_CAP:
        raise ValueError(
            f"labeled enumeration is capped at n = {ENUMERATION_CAP}; "
            "feed larger graphs in as a graph6 stream"
        )
    yield from _enumerate_range(n, 0, 1 << (n * (n - 1) // 2))


def _enumerate_range(n: int, lo: int, hi: int) -> Iterator[Graph]:
    pairs = [(i, j) for j in range(n) for i in range(j)]
    for emask in range(lo, hi):
        rows = [0] * n
        m = emask
        while m:
            b = m & -m
            i, j = pairs[b.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            m ^= b
        yield Graph._unchecked(n, rows)


def _has_nonadj_pair(rows: list[int], mask: int) -> bool:
    m = mask
    while m:
        b = m & -m
        m ^= b
        if m & ~rows[b.bit_length() - 1]:
            return True
    return False


def _has_indep_triple(rows: list[int], mask: int) -> bool:
    m = mask
    while m:
        b = m & -m
        m ^= b
        if _has_nonadj_pair(rows, m & ~rows[b.bit_length() - 1]):
            return True
    return False


def _degree_sorted(rows: list[int], n: int) -> bool:
    prev = n
    for r in rows:
        d = r.bit_count()
        if d > prev:
            return False
        prev = d
    return True


def enumerate_theorem2_class(n: int, degree_sorted: bool = False) -> Iterator[Graph]:
    """All labeled connected, claw-free, alpha = 3, C7-free graphs on n vertices.

    Vertex-by-vertex extension with hereditary pruning: claws, independent
    4-sets and induced 7-cycles are all inherited by induced subgraphs, so a
    prefix showing one can be cut.  Connectivity and the exact independence
    number are filtered at the end.  With degree_sorted=True only graphs
    whose degree sequence is nonincreasing are emitted; every isomorphism
    class keeps at least one representative, at a fraction of the count.
    """
    if n > CLASS_ENUMERATION_CAP:
        raise ValueError(f"hypothesis-class enumeration is capped at n = {CLASS_ENUMERATION_CAP}")
    if n <= 0:
        return
    rows = [0] * n

    def extend_ok(i: int, m: int) -> bool:
        """Cheap hereditary checks for attaching vertex i with neighborhood m."""
        prefix = (1 << i) - 1
        # claw with the new vertex as center
        if _has_indep_triple(rows, m):
            return False
        # independent 4-set through the new vertex
        if _has_indep_triple(rows, prefix & ~m):
            return False
        # claw with the new vertex as a leaf
        mm = m
        while mm:
            b = mm & -mm
            mm ^= b
            if _has_nonadj_pair(rows, rows[b.bit_length() - 1] & ~m):
                return False
        return True

    def level(i: int) -> Iterator[Graph]:
        if i == n - 1:
            # final vertex: run the cheap whole-graph filters before the
            # expensive 7-cycle detection
            for m in range(1 << i):
                if not extend_ok(i, m):
                    continue
                rows[i] = m
                mm = m
                while mm:
                    b = mm & -mm
                    mm ^= b
                    rows[b.bit_length() - 1] |= 1 << i
                g = Graph._unchecked(n, list(rows))
                if (
                    (not degree_sorted or _degree_sorted(rows, n))
                    and g.is_connected()
                    and has_independent_set(g, 3)
                    and (n < 7 or find_induced_cycle(g, 7) is None)
                ):
                    yield g
                mm = m
                while mm:
                    b = mm & -mm
                    mm ^= b
                    rows[b.bit_length() - 1] &= ~(1 << i)
                rows[i] = 0
            return
        for m in range(1 << i):
            if not extend_ok(i, m):
                continue
            rows[i] = m
            mm = m
            while mm:
                b = mm & -mm
                mm ^= b
                rows[b.bit_length() - 1] |= 1 << i
            if i < 6 or find_induced_cycle(Graph._unchecked(i + 1, rows[: i + 1]), 7) is None:
                yield from level(i + 1)
            mm = m
            while mm:
                b = mm & -mm
                mm ^= b
                rows[b.bit_length() - 1] &= ~(1 << i)
            rows[i] = 0

    yield from level(0)


def random_graphs(n: int, p: float, seed: int) -> Iterator[Graph]:
    """Endless stream of G(n, p) samples from a seeded generator."""
    rng = random.Random(seed)
    pairs = [(i, j) for j in range(n) for i in range(j)]
    while True:
        rows = [0] * n
        for i, j in pairs:
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph._unchecked(n, rows)


def passes_filters(g: Graph, f: Filters) -> bool:
    if f.connected is not None and g.is_connected() != f.connected:
        return False
    if f.alpha_max is not None and has_independent_set(g, f.alpha_max + 1):
        return False
    if f.alpha_eq is not None:
        if has_independent_set(g, f.alpha_eq + 1):
            return False
        if not has_independent_set(g, f.alpha_eq):
            return False
    if f.claw_free and find_claw(g) is not None:
        return False
    for k in f.forbid_cycles:
        if g.n >= k and find_induced_cycle(g, k) is not None:
            return False
    return True


def random_filtered(
    n: int,
    p: float,
    count: int,
    seed: int,
    filters: Filters = Filters(),
    max_attempts: int = 1_000_000,
) -> tuple[list[Graph], int]:
    """count filter-passing G(n, p) samples plus the number of attempts used."""
    out = []
    attempts = 0
    for g in random_graphs(n, p, seed):
        if attempts >= max_attempts:
            raise RuntimeError(
                f"rejection sampling exhausted {max_attempts} attempts "
                f"({len(out)}/{count} samples); the filters are too tight for G({n}, {p})"
            )
        attempts += 1
        if passes_filters(g, filters):
            out.append(g)
            if len(out) == count:
                break
    return out, attempts


# -- per-graph checks ---------------------------------------------------------


class _GraphContext:
    """Lazy per-graph values shared between checks."""

    def __init__(self, g: Graph):
        self.g = g
        self._h = None
        self._g6 = None

    @property
    def g6(self) -> str:
        if self._g6 is None:
            self._g6 = self.g.to_graph6().decode("ascii")
        return self._g6

    def h(self) -> int:
        if self._h is None:
            self._h = h_number(self.g)[0]
        return self._h


def _nonsimplicial(g: Graph) -> list[int]:
    return [v for v in range(g.n) if not is_simplicial(g, v)]


def _check_theorem1(ctx, spec, out):
    g = ctx.g
    for v in _nonsimplicial(g):
        try:
            (a, b), trace = theorem1_edge(g, v)
        except Exception as exc:  # any failure is a reportable violation
            out.violation("theorem1", ctx.g6, {"vertex": v, "error": str(exc)})
            continue
        out.label(trace.label)
        covered = g.closed_neighborhood(a) | g.closed_neighborhood(b)
        if v not in (a, b) or covered != g.vertex_mask:
            out.violation("theorem1", ctx.g6, {"vertex": v, "edge": [a, b]})


def _check_theorem2(ctx, spec, out):
    g = ctx.g
    floor = None
    for v in _nonsimplicial(g):
        try:
            d, trace = theorem2_cds(g, v, strict=spec.strict)
        except CaseGapError as gap:
            out.label(GAP_LABEL)
            out.gap(ctx.g6, v, gap)
            continue
        except Exception as exc:
            out.violation("theorem2", ctx.g6, {"vertex": v, "error": str(exc)})
            continue
        out.label(trace.label)
        size = d.bit_count()
        if floor is None:
            floor = min_cds_size(g)
        if not (is_cds(g, d) and (d >> v) & 1 and floor <= size <= 4):
            out.violation(
                "theorem2",
                ctx.g6,
                {"vertex": v, "D": bit_list(d), "trace": trace.label, "min_cds": floor},
            )


def _check_bound(ctx, spec, out, denom: int, name: str):
    g = ctx.g
    if g.n > H_CHECK_CAP:
        out.violation(name, ctx.g6, {"error": f"h check needs n <= {H_CHECK_CAP}"})
        return
    need = -(-g.n // denom)  # ceil(n / denom)
    got = ctx.h()
    if got < need:
        out.violation(name, ctx.g6, {"h": got, "bound": need})


def _check_sandwich(ctx, spec, out):
    g = ctx.g
    if g.n > H_CHECK_CAP:
        out.violation("sandwich", ctx.g6, {"error": f"h check needs n <= {H_CHECK_CAP}"})
        return
    w = clique_number(g)
    h = ctx.h()
    eta = hadwiger_number(g)[0]
    if not w <= h <= eta:
        out.violation("sandwich", ctx.g6, {"omega": w, "h": h, "eta": eta})


def _check_domination_step(ctx, spec, out):
    g = ctx.g
    if g.n > H_CHECK_CAP:
        out.violation("domination_step", ctx.g6, {"error": f"h check needs n <= {H_CHECK_CAP}"})
        return
    h = ctx.h()
    taken = 0
    for d in iter_cds(g):
        rest = g.vertex_mask & ~d
        sub, _ = g.induced(rest)
        if h_number(sub)[0] > h - 1:
            out.violation("domination_step", ctx.g6, {"D": bit_list(d), "h": h})
        taken += 1
        if taken >= spec.domination_samples:
            break


def _check_certificate(ctx, spec, out):
    g = ctx.g
    seq = build_h_certificate(g)
    if not verify_h_sequence(g, seq):
        out.violation("certificate", ctx.g6, {"sequence": seq.to_json()})
        return
    rec = {"length": seq.length, "floor": -(-g.n // 4)}
    if g.n <= 9:
        h = ctx.h()
        if seq.length > h:
            out.violation("certificate", ctx.g6, {"length": seq.length, "h": h})
        rec["h"] = h
    out.stat("certificate_lengths", rec["length"] >= rec["floor"])
    return rec


_CHECK_FUNCS: dict[str, Callable] = {
    "theorem1": _check_theorem1,
    "theorem2": _check_theorem2,
    "corollary_bound_half": lambda c, s, o: _check_bound(c, s, o, 2, "corollary_bound_half"),
    "corollary_bound_quarter": lambda c, s, o: _check_bound(c, s, o, 4, "corollary_bound_quarter"),
    "sandwich": _check_sandwich,
    "domination_step": _check_domination_step,
    "certificate": _check_certificate,
}


# -- report -------------------------------------------------------------------


@dataclass
class SweepReport:
    checked: int = 0
    filtered_out: int = 0
    failed: int = 0
    decode_errors: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    gaps: list = field(default_factory=list)
    histogram: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> int:
        return self.checked - self.failed

    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "SweepReport") -> None:
        self.checked += other.checked
        self.filtered_out += other.filtered_out
        self.failed += other.failed
        self.decode_errors.extend(other.decode_errors)
        self.violations.extend(other.violations)
        self.gaps.extend(other.gaps)
        for k, v in other.histogram.items():
            self.histogram[k] = self.histogram.get(k, 0) + v
        for k, v in other.stats.items():
            self.stats[k] = self.stats.get(k, 0) + v

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "filtered_out": self.filtered_out,
            "decode_errors": self.decode_errors,
            "violations": self.violations,
            "gaps": self.gaps,
            "histogram": dict(sorted(self.histogram.items())),
            "stats": dict(sorted(self.stats.items())),
            "elapsed_seconds": round(self.elapsed, 3),
        }


class _Out:
    """Collects one graph's findings; folded into the report afterwards."""

    def __init__(self):
        self.violations = []
        self.gaps = []
        self.labels = []
        self.stats = {}

    def violation(self, check, g6, detail):
        self.violations.append({"check": check, "graph6": g6, "detail": detail})

    def gap(self, g6, v, err: CaseGapError):
        self.gaps.append(
            {
                "graph6": g6,
                "vertex": v,
                "reason": err.reason,
                "partition": err.partition.to_json(),
                "detail": err.detail,
            }
        )

    def label(self, lab):
        self.labels.append(lab)

    def stat(self, key, ok):
        if ok:
            self.stats[key] = self.stats.get(key, 0) + 1
        self.stats.setdefault(key + "_total", 0)
        self.stats[key + "_total"] += 1


def _process_graph(g: Graph, spec: SweepSpec) -> Optional[_Out]:
    """Run all enabled checks on one graph; None when filtered out."""
    if not passes_filters(g, spec.filters):
        return None
    ctx = _GraphContext(g)
    out = _Out()
    for name in spec.checks:
        _CHECK_FUNCS[name](ctx, spec, out)
    return out


def _fold(report: SweepReport, out: Optional[_Out]) -> None:
    if out is None:
        report.filtered_out += 1
        return
    report.checked += 1
    if out.violations:
        report.failed += 1
        report.violations.extend(out.violations)
    report.gaps.extend(out.gaps)
    for lab in out.labels:
        report.histogram[lab] = report.histogram.get(lab, 0) + 1
    for k, v in out.stats.items():
        report.stats[k] = report.stats.get(k, 0) + v


def _source_graphs(spec: SweepSpec, report: SweepReport) -> Iterator[Graph]:
    src = spec.source
    if isinstance(src, EnumerateSource):
        for n in range(src.n_lo, src.n_hi + 1):
            yield from enumerate_labeled(n)
    elif isinstance(src, ClassSource):
        for n in range(src.n_lo, src.n_hi + 1):
            yield from enumerate_theorem2_class(n, src.degree_sorted)
    elif isinstance(src, RandomSource):
        graphs, attempts = random_filtered(
            src.n, src.p, src.count, src.seed, spec.filters, src.max_attempts
        )
        report.stats["random_attempts"] = attempts
        yield from graphs
    elif isinstance(src, (StreamSource, LinesSource)):
        if isinstance(src, StreamSource):
            with open(src.path, "rb") as fh:
                lines = fh.readlines()
        else:
            lines = list(src.lines)
        for lineno, line in enumerate(lines, 1):
            if not line.strip():
                continue
            try:
                yield Graph.from_graph6(line)
            except ValueError as exc:
                report.decode_errors.append({"line": lineno, "error": str(exc)})
    else:
        raise TypeError(f"unknown source {src!r}")


def _chunk_worker(args) -> SweepReport:
    spec, chunk = args
    report = SweepReport()
    kind = chunk[0]
    if kind == "enum":
        _, n, lo, hi = chunk
        for g in _enumerate_range(n, lo, hi):
            _fold(report, _process_graph(g, spec))
    else:
        _, lines = chunk
        for line in lines:
            try:
                g = Graph.from_graph6(line)
            except ValueError as exc:
                report.decode_errors.append({"line": line.decode("ascii", "replace").strip(), "error": str(exc)})
                continue
            _fold(report, _process_graph(g, spec))
    return report


def _parallel_chunks(spec: SweepSpec) -> Optional[list[tuple]]:
    """Order-preserving chunk descriptors, or None when the source can't split."""
    src = spec.source
    if isinstance(src, EnumerateSource):
        chunks = []
        for n in range(src.n_lo, src.n_hi + 1):
            total = 1 << (n * (n - 1) // 2)
            step = max(4096, total // (spec.jobs * 8))
            for lo in range(0, total, step):
                chunks.append(("enum", n, lo, min(lo + step, total)))
        return chunks
    if isinstance(src, LinesSource):
        lines = [s for s in src.lines if s.strip()]
        step = max(1, len(lines) // (spec.jobs * 8) + 1)
        return [("lines", tuple(lines[i : i + step])) for i in range(0, len(lines), step)]
    return None


def run_sweep(spec: SweepSpec, on_result: Optional[Callable[[Graph, _Out], None]] = None) -> SweepReport:
    """Execute every enabled check on every filtered source graph.

    The report is deterministic given source order and seed: multi-worker
    runs merge chunk results in source order.  on_result (per checked graph)
    requires jobs == 1.
    """
    t0 = time.monotonic()
    report = SweepReport()
    if spec.jobs > 1 and on_result is not None:
        raise ValueError("per-graph callbacks require jobs=1")
    chunks = _parallel_chunks(spec) if spec.jobs > 1 else None
    if chunks is not None:
        with Pool(spec.jobs) as pool:
            for part in pool.imap(_chunk_worker, [(spec, c) for c in chunks]):
                report.merge(part)
    else:
        for g in _source_graphs(spec, report):
            out = _process_graph(g, spec)
            _fold(report, out)
            if on_result is not None and out is not None:
                on_result(g, out)
    report.elapsed = time.monotonic() - t0
    return report


def histogram_csv(report: SweepReport) -> str:
    """Case-trace histogram as CSV text (label,count; sorted by label)."""
    lines = ["label,count"]
    for lab, cnt in sorted(report.histogram.items()):
        lines.append(f"{lab},{cnt}")
    return "\n".join(lines) + "\n"
