"""Exhaustive (n <= 7) and randomized theorem scans.

Labeled graphs on ``n`` vertices are enumerated by an integer code whose bit
``k`` is the ``k``-th vertex pair in graph6 order ``(0,1), (0,2), (1,2), ...``,
so code order is the iteration order.

Running ``check`` two million times at n = 7 is slow in pure Python, so the
enumeration is screened with vectorised numpy passes first: batched symmetric
eigenvalues for the spectral hypotheses, and bit-parallel claw / connectivity
tests for the structural filters.  The screens are conservative (a slack of
1e-6 on eigenvalue thresholds); every graph that could satisfy the hypothesis
is handed to ``check``, and the rest are counted as vacuous.
"""
from __future__ import annotations

import csv
import io
import json
import math
import random
from dataclasses import asdict, dataclass, field
from itertools import combinations

import numpy as np

from .codec import emit_graph6
from .graph import Graph, is_connected, line_graph
from .structure import closure, is_claw_free
from .theorems import TheoremId, check, parse_theorem

MAX_EXHAUSTIVE_N = 7
FILTERS = ("all", "clawfree_connected", "clawfree_2connected")
SCREEN_SLACK = 1e-6
CHUNK = 1 << 16


@dataclass
class ScanReport:
    theorem: str
    n: int | str
    mode: str  # exhaustive filter name, or random generator mode
    total: int = 0  # graphs enumerated / generated
    filtered: int = 0  # graphs passing the structural filter
    checked: int = 0  # graphs handed to check()
    hypothesis_true: int = 0
    holds: int = 0
    exceptions: int = 0
    unresolved: int = 0
    counterexamples: list[str] = field(default_factory=list)  # graph6

    @property
    def counterexample_count(self) -> int:
        return len(self.counterexamples)

    def add(self, g: Graph, verdict) -> None:
        self.checked += 1
        if verdict.status == "unresolved":
            self.unresolved += 1
            return
        if not verdict.hypothesis_holds:
            return
        self.hypothesis_true += 1
        if verdict.status == "holds":
            self.holds += 1
        elif verdict.status == "exception":
            self.exceptions += 1
        elif verdict.status == "counterexample":
            self.counterexamples.append(emit_graph6(g))

    def merge(self, other: ScanReport) -> ScanReport:
        out = ScanReport(self.theorem, self.n if self.n == other.n else "mixed", self.mode)
        for name in ("total", "filtered", "checked", "hypothesis_true", "holds",
                     "exceptions", "unresolved"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        out.counterexamples = self.counterexamples + other.counterexamples
        return out

    def to_dict(self) -> dict:
        d = asdict(self)
        d["counterexample_count"] = self.counterexample_count
        return d

    CSV_FIELDS = ("theorem", "n", "mode", "total", "filtered", "checked", "hypothesis_true",
                  "holds", "exceptions", "unresolved", "counterexample_count")

    def csv_row(self) -> list:
        d = self.to_dict()
        return [d[k] for k in self.CSV_FIELDS]


def reports_to_json(reports: list[ScanReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def reports_to_csv(reports: list[ScanReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ScanReport.CSV_FIELDS)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()


# -- exhaustive enumeration ----------------------------------------------------


def pair_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_code(n: int, code: int) -> Graph:
    return Graph(n, [p for k, p in enumerate(pair_order(n)) if code >> k & 1])


class _Batch:
    """Bit-parallel views of a block of consecutive graph codes."""

    def __init__(self, n: int, codes: np.ndarray):
        self.n = n
        self.codes = codes
        self.pairs = pair_order(n)
        self.bits = [(codes >> k) & 1 for k in range(len(self.pairs))]

    def rows(self) -> list[np.ndarray]:
        rows = [np.zeros_like(self.codes) for _ in range(self.n)]
        for (u, v), b in zip(self.pairs, self.bits):
            rows[u] |= b << v
            rows[v] |= b << u
        return rows

    def adjacency(self, complement: bool = False) -> np.ndarray:
        a = np.zeros((len(self.codes), self.n, self.n))
        for (u, v), b in zip(self.pairs, self.bits):
            val = 1 - b if complement else b
            a[:, u, v] = val
            a[:, v, u] = val
        return a

    def spectral_radius(self, complement: bool = False) -> np.ndarray:
        if self.n == 0:
            return np.zeros(len(self.codes))
        return np.linalg.eigvalsh(self.adjacency(complement))[:, -1]

    def claw_free(self) -> np.ndarray:
        ok = np.ones(len(self.codes), dtype=bool)
        index = {p: k for k, p in enumerate(self.pairs)}
        bit = lambda a, b: index[(min(a, b), max(a, b))]  # noqa: E731
        for v in range(self.n):
            others = [u for u in range(self.n) if u != v]
            for a, b, c in combinations(others, 3):
                have = (1 << bit(v, a)) | (1 << bit(v, b)) | (1 << bit(v, c))
                miss = (1 << bit(a, b)) | (1 << bit(a, c)) | (1 << bit(b, c))
                ok &= ~(((self.codes & have) == have) & ((self.codes & miss) == 0))
        return ok

    def _reach(self, rows, start: int, allowed: int) -> np.ndarray:
        seen = np.full(len(self.codes), start, dtype=np.int64)
        for _ in range(self.n):
            grow = seen.copy()
            for v in range(self.n):
                if allowed >> v & 1:
                    grow |= np.where((seen >> v) & 1 == 1, rows[v] & allowed, 0)
            seen = grow
        return seen

    def connected(self, rows=None) -> np.ndarray:
        if self.n == 0:
            return np.ones(len(self.codes), dtype=bool)
        rows = self.rows() if rows is None else rows
        full = (1 << self.n) - 1
        return self._reach(rows, 1, full) == full

    def two_connected(self) -> np.ndarray:
        if self.n < 3:
            return np.zeros(len(self.codes), dtype=bool)
        rows = self.rows()
        ok = self.connected(rows)
        full = (1 << self.n) - 1
        for w in range(self.n):
            allowed = full & ~(1 << w)
            start = 1 if w else 2
            ok &= self._reach(rows, start, allowed) == allowed
        return ok


def _screen(theorem: TheoremId, batch: _Batch) -> np.ndarray | None:
    """Boolean mask of graphs that might satisfy the hypothesis (None = no screen)."""
    n = batch.n
    if theorem is TheoremId.FINI_TRACE:
        return batch.spectral_radius() >= n - 2 - SCREEN_SLACK
    if theorem is TheoremId.FINI_HAM:
        return batch.spectral_radius() > n - 2 - SCREEN_SLACK
    if theorem is TheoremId.FINIC_TRACE:
        return batch.spectral_radius(True) <= math.sqrt(max(n - 1, 0)) + SCREEN_SLACK
    if theorem is TheoremId.FINIC_HAM:
        return batch.spectral_radius(True) <= math.sqrt(max(n - 2, 0)) + SCREEN_SLACK
    if theorem is TheoremId.L_DUDV:
        return batch.claw_free() & batch.two_connected()
    return None


def exhaustive_scan(n: int, theorem: TheoremId | str, filter: str = "all",
                    tol: float = 1e-8, k: int | None = None) -> ScanReport:
    """Check ``theorem`` on every labeled graph of order ``n`` passing ``filter``."""
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive scans need 1 <= n <= {MAX_EXHAUSTIVE_N}")
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}")
    if isinstance(theorem, str):
        theorem, parsed = parse_theorem(theorem)
        k = parsed if k is None else k
    label = f"{theorem.value}({k or 3})" if theorem is TheoremId.L_EG else theorem.value
    report = ScanReport(label, n, filter)
    total = 1 << (n * (n - 1) // 2)
    report.total = total
    for lo in range(0, total, CHUNK):
        codes = np.arange(lo, min(lo + CHUNK, total), dtype=np.int64)
        batch = _Batch(n, codes)
        keep = np.ones(len(codes), dtype=bool)
        if filter != "all":
            keep &= batch.claw_free()
            keep &= batch.connected() if filter == "clawfree_connected" else batch.two_connected()
        report.filtered += int(keep.sum())
        screen = _screen(theorem, batch)
        if screen is not None:
            keep &= screen
        for code in codes[keep]:
            g = graph_from_code(n, int(code))
            report.add(g, check(g, theorem, tol=tol, k=k))
    return report


# -- random claw-free instances ------------------------------------------------


def _random_connected(m: int, edges: int, rng: random.Random) -> Graph:
    order = list(range(m))
    rng.shuffle(order)
    chosen = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, m)}
    rest = [p for p in combinations(range(m), 2) if p not in chosen]
    chosen.update(rng.sample(rest, edges - len(chosen)))
    return Graph(m, sorted(chosen))


def _random_line_graph(n: int, rng: random.Random) -> Graph:
    lo = 2
    while lo * (lo - 1) // 2 < n:
        lo += 1
    m = rng.randint(lo, n + 1)
    lg = line_graph(_random_connected(m, n, rng))
    perm = list(range(n))
    rng.shuffle(perm)
    return lg.relabel(perm)


def random_clawfree(n: int, seed: int, mode: str = "line_graph",
                    close: bool | None = None) -> Graph:
    """A connected claw-free graph of order ``n``, deterministic in ``seed``.

    ``line_graph``: the line graph of a random connected graph with ``n`` edges.
    ``closure_perturbed``: such a line graph with random edges removed while it
    stays claw-free and connected, then closed with probability 1/2 (or as
    ``close`` says).
    """
    if n < 4:
        raise ValueError("random_clawfree needs n >= 4")
    rng = random.Random(seed)
    g = _random_line_graph(n, rng)
    if mode == "line_graph":
        return g
    if mode != "closure_perturbed":
        raise ValueError(f"unknown mode {mode!r}")
    edges = g.edges()
    rng.shuffle(edges)
    for e in edges:
        if rng.random() < 0.5:
            h = g.remove_edges([e])
            if is_connected(h) and is_claw_free(h):
                g = h
    if close is None:
        close = rng.random() < 0.5
    if close:
        g = closure(g)[0]
    if not (is_connected(g) and is_claw_free(g)):
        raise RuntimeError("generator produced an invalid instance")
    return g


def random_scan(theorem: TheoremId | str, n_values, count: int, seed: int = 0,
                mode: str = "line_graph", tol: float = 1e-8, k: int | None = None,
                budget: int | None = None) -> ScanReport:
    """Check ``theorem`` on ``count`` random claw-free graphs, cycling through ``n_values``."""
    if isinstance(theorem, str):
        theorem, parsed = parse_theorem(theorem)
        k = parsed if k is None else k
    label = f"{theorem.value}({k or 3})" if theorem is TheoremId.L_EG else theorem.value
    sizes = list(n_values)
    report = ScanReport(label, sizes[0] if len(sizes) == 1 else f"{min(sizes)}..{max(sizes)}",
                        mode)
    for i in range(count):
        g = random_clawfree(sizes[i % len(sizes)], seed * 1_000_003 + i, mode)
        report.total += 1
        report.filtered += 1
        report.add(g, check(g, theorem, tol=tol, k=k, budget=budget))
    return report
