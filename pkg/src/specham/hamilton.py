"""Exact Hamilton cycle / path search for small dense graphs.

Depth-first extension of a partial path with three prunes applied to the
unvisited remainder ``U`` together with the path's live endpoint(s):

* degree: every vertex of ``U`` needs two usable neighbours (one for at most
  a single free path end);
* connectivity of the remainder;
* cut vertices: deleting any vertex may leave at most one component without
  an endpoint in path mode and none in cycle mode.

Failed states ``(visited set, current vertex)`` are memoised.  Twins
(vertices with equal open or equal closed neighbourhoods) are interchangeable
by an automorphism fixing the path, so only one unvisited twin is tried per
branch and memo keys are stored in a twin-canonical form; a large clique then
costs a count instead of a subset enumeration.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from .graph import Graph, iter_bits, reach, twin_classes

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "SPECHAM_BUDGET"


class HamiltonBudgetExceeded(RuntimeError):
    pass


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass
class HamiltonResult:
    kind: str
    status: str  # found | absent | budget_exceeded
    witness: list[int] | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == "found"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "status": self.status, "witness": self.witness,
                "nodes": self.nodes}


def verify_witness(g: Graph, kind: str, seq) -> bool:
    """Independent check that ``seq`` is a Hamilton path / cycle of ``g``."""
    if sorted(seq) != list(range(g.n)):
        return False
    if any(not g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
        return False
    if kind == "cycle":
        return g.n >= 3 and g.has_edge(seq[-1], seq[0])
    return True


class _Search:
    def __init__(self, g: Graph, kind: str, budget: int):
        self.rows = g.rows
        self.full = g.full_mask
        self.cycle = kind == "cycle"
        self.budget = budget
        self.nodes = 0
        self.dead: set[tuple[int, int]] = set()
        self.twins, self.classes = twin_classes(g, fixed=0 if self.cycle else None)

    def key(self, visited: int, cur: int) -> tuple[int, int]:
        for cls in self.classes:
            inside = visited & cls
            if not inside:
                continue
            count = inside.bit_count()
            low = 0
            rest = cls
            for _ in range(count):
                bit = rest & -rest
                low |= bit
                rest ^= bit
            visited = visited & ~cls | low
            if cls >> cur & 1:
                cur = (cls & -cls).bit_length() - 1
        return visited, cur

    def feasible(self, cur: int, visited: int) -> bool:
        rows, full = self.rows, self.full
        left = full & ~visited
        if not left:
            return True
        if self.cycle:
            ends = (1 << cur) | 1
            need, free = 2, 0
        else:
            ends = 1 << cur
            need, free = 1, 1
        h = left | ends
        weak = 0
        for u in iter_bits(left):
            d = (rows[u] & h).bit_count()
            if d < need:
                return False
            if free and d == 1:
                weak += 1
                if weak > free:
                    return False
        if reach(rows, 1 << cur, h) != h:
            return False
        for w in iter_bits(h):
            rest = h & ~(1 << w)
            live = ends & rest
            if not rest:
                continue
            # vertices reachable from surviving endpoints
            covered = reach(rows, live, rest) if live else 0
            if covered == rest:
                continue
            if ends >> w & 1:
                # an endpoint was removed: the rest of the path must stay connected
                low = rest & -rest
                if reach(rows, low, rest) != rest:
                    return False
                continue
            stray = rest & ~covered
            extra = 0
            while stray:
                comp = reach(rows, stray & -stray, stray)
                stray &= ~comp
                extra += 1
                if extra > free:
                    return False
        return True

    def run(self, start: int) -> list[int] | None:
        rows, full = self.rows, self.full
        visited = 1 << start
        path = [start]
        if visited == full:
            return path if not self.cycle else None
        key = self.key(visited, start)
        if key in self.dead or not self.feasible(start, visited):
            self.dead.add(key)
            return None
        stack = [[start, visited, rows[start] & ~visited]]
        while stack:
            top = stack[-1]
            cand = top[2]
            if not cand:
                self.dead.add(self.key(top[1], top[0]))
                stack.pop()
                path.pop()
                continue
            low = cand & -cand
            v = low.bit_length() - 1
            top[2] = cand & ~self.twins[v] & ~low
            vis = top[1] | low
            self.nodes += 1
            if self.nodes > self.budget:
                raise HamiltonBudgetExceeded(f"node budget {self.budget} exhausted")
            path.append(v)
            if vis == full:
                if not self.cycle or rows[v] & 1:
                    return path
                path.pop()
                continue
            key = self.key(vis, v)
            if key in self.dead or not self.feasible(v, vis):
                self.dead.add(key)
                path.pop()
                continue
            stack.append([v, vis, rows[v] & ~vis])
        return None


def hamilton(g: Graph, kind: str = "cycle", budget: int | None = None) -> HamiltonResult:
    """Decide whether ``g`` has a Hamilton cycle (``kind="cycle"``) or path.

    Cycles are anchored at vertex 0; children are tried in ascending order, so
    witnesses are reproducible.  ``absent`` means the search was exhausted.
    """
    if kind not in ("cycle", "path"):
        raise ValueError(f"unknown kind {kind!r}")
    if kind == "cycle" and g.n < 3:
        raise ValueError("Hamilton cycles need n >= 3")
    if kind == "path" and g.n < 1:
        raise ValueError("Hamilton paths need n >= 1")
    search = _Search(g, kind, default_budget() if budget is None else budget)
    starts = [0] if kind == "cycle" else range(g.n)
    try:
        for s in starts:
            witness = search.run(s)
            if witness is not None:
                return HamiltonResult(kind, "found", witness, search.nodes)
    except HamiltonBudgetExceeded:
        return HamiltonResult(kind, "budget_exceeded", None, search.nodes)
    return HamiltonResult(kind, "absent", None, search.nodes)


def _decide(g: Graph, kind: str, budget: int | None) -> bool:
    res = hamilton(g, kind, budget)
    if res.status == "budget_exceeded":
        raise HamiltonBudgetExceeded(f"{kind} search on n={g.n} exceeded its budget")
    return res.found


def is_hamiltonian(g: Graph, budget: int | None = None) -> bool:
    return _decide(g, "cycle", budget)


def is_traceable(g: Graph, budget: int | None = None) -> bool:
    return _decide(g, "path", budget)
