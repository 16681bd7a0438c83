"""Constructors for the extremal claw-free graphs and their labelling contracts.

Labelling
---------
``build_en(n)``
    clique ``0..n-4``; pendant ``n-3, n-2, n-1`` hang off ``0, 1, 2``.
``build_brousek(x1, x2, x3)``
    triangle ``a1 a2 a3 = 0 1 2``, triangle ``b1 b2 b3 = 3 4 5``, then each
    connector in turn: ``T`` adds one vertex ``c_i`` adjacent to ``a_i, b_i``
    (and ``a_i b_i`` becomes an edge), a path of order ``k`` adds its ``k - 2``
    inner vertices in order from ``a_i`` to ``b_i``.
``build_ep(n, "standard")``
    clique ``0..n-7`` with ``b1 b2 b3 = 0 1 2``; ``a1 a2 a3 = n-6 n-5 n-4``;
    ``c1 c2 c3 = n-3 n-2 n-1``.
``build_ep(n, "prime")``
    clique ``0..n-7`` with ``a3 b3 c3 = 0 1 2``; then
    ``a1 a2 b1 b2 c1 c2 = n-6 .. n-1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph import Graph, combine, complete, empty
from .structure import is_isomorphic

TRIANGLE = "T"


class SpecParseError(ValueError):
    """An extremal spec string is malformed."""


def _connector(x) -> str | int:
    if isinstance(x, str):
        s = x.strip()
        if s.upper() == TRIANGLE:
            return TRIANGLE
        if not s.isdigit():
            raise ValueError(f"connector must be 'T' or an integer >= 3, got {x!r}")
        x = int(s)
    if isinstance(x, bool) or not isinstance(x, int) or x < 3:
        raise ValueError(f"path connector needs order >= 3, got {x!r}")
    return x


@lru_cache(maxsize=None)
def build_en(n: int) -> Graph:
    """K_{n-3} with three disjoint pendant edges."""
    if n < 6:
        raise ValueError("EN_n needs n >= 6")
    k = n - 3
    edges = list(combinations(range(k), 2)) + [(0, k), (1, k + 1), (2, k + 2)]
    return Graph(n, edges)


@lru_cache(maxsize=None)
def build_brousek(x1, x2, x3) -> Graph:
    xs = [_connector(x) for x in (x1, x2, x3)]
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    nxt = 6
    for i, x in enumerate(xs):
        a, b = i, 3 + i
        if x == TRIANGLE:
            edges += [(a, b), (a, nxt), (b, nxt)]
            nxt += 1
        else:
            chain = [a] + list(range(nxt, nxt + x - 2)) + [b]
            edges += list(zip(chain, chain[1:]))
            nxt += x - 2
    return Graph(nxt, edges)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.edges():
        common = g.rows[u] & g.rows[v] & ~((1 << (v + 1)) - 1)
        while common:
            low = common & -common
            out.append((u, v, low.bit_length() - 1))
            common ^= low
    return out


def blow_up_triangle(g: Graph, tri, m: int) -> Graph:
    """Add ``m`` vertices (ids ``g.n .. g.n+m-1``) completing ``tri`` to K_{m+3}."""
    tri = tuple(tri)
    if len(set(tri)) != 3 or not all(g.has_edge(u, v) for u, v in combinations(tri, 2)):
        raise ValueError(f"{tri} is not a triangle")
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return g
    big = combine(g, empty(m), "disjoint_union")
    clique = list(tri) + list(range(g.n, g.n + m))
    return big.add_edges(combinations(clique, 2))


def _clique_first(g: Graph, order: list[int]) -> Graph:
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


@lru_cache(maxsize=None)
def build_ep(n: int, variant: str = "standard") -> Graph:
    """EP_n (end triangle blown up) or EP'_n (connecting triangle blown up)."""
    if n < 9:
        raise ValueError("EP_n needs n >= 9")
    base = build_brousek(TRIANGLE, TRIANGLE, TRIANGLE)
    extra = list(range(9, n))
    if variant == "standard":
        g = blow_up_triangle(base, (3, 4, 5), n - 9)
        order = [3, 4, 5] + extra + [0, 1, 2, 6, 7, 8]
    elif variant == "prime":
        g = blow_up_triangle(base, (2, 5, 8), n - 9)
        order = [2, 5, 8] + extra + [0, 1, 3, 4, 6, 7]
    else:
        raise ValueError(f"unknown EP variant {variant!r}")
    return _clique_first(g, order)


BROUSEK_BASES = (
    (TRIANGLE, TRIANGLE, TRIANGLE),
    (3, TRIANGLE, TRIANGLE),
    (3, 3, TRIANGLE),
    (3, 3, 3),
)


@dataclass(frozen=True)
class FamilyMember:
    base: tuple
    triangle: tuple[int, int, int]
    graph: Graph

    @property
    def label(self) -> str:
        name = ",".join(str(x) for x in self.base)
        return f"P[{name}] blow-up of {self.triangle}"


@lru_cache(maxsize=None)
def ep_family_members(n: int) -> tuple[FamilyMember, ...]:
    """Distinct (up to isomorphism) members of the EP family of order ``n``."""
    if n < 9:
        raise ValueError("the EP family needs n >= 9")
    kept: list[FamilyMember] = []
    for base in BROUSEK_BASES:
        g0 = build_brousek(*base)
        for tri in triangles(g0):
            g = blow_up_triangle(g0, tri, n - 9)
            if not any(is_isomorphic(g, m.graph) for m in kept):
                kept.append(FamilyMember(base, tri, g))
    return tuple(kept)


def ep_family(n: int) -> list[Graph]:
    return [m.graph for m in ep_family_members(n)]


def in_ep_family(g: Graph) -> bool:
    return g.n >= 9 and any(is_isomorphic(g, h) for h in ep_family(g.n))


# -- named small graphs from the theorem statements --------------------------


def fini_trace_exception(n: int) -> Graph:
    """K_{n-1} + K_1."""
    return combine(complete(n - 1), complete(1), "disjoint_union")


def fini_ham_exception(n: int) -> Graph:
    """K_1 join (K_1 + K_{n-2})."""
    return combine(complete(1), combine(complete(1), complete(n - 2), "disjoint_union"), "join")


def k6_join_independent(n: int) -> Graph:
    """K_6 join (n-6)K_1, whose spectral radius is (5 + sqrt(24n - 119)) / 2."""
    return combine(complete(6), empty(n - 6), "join")


# -- textual specs ---------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalSpec:
    """Declarative description of one constructed graph, e.g. ``"ep':20"``."""

    kind: str  # en | ep | ep' | brousek | family
    n: int | None = None
    connectors: tuple = ()
    index: int | None = None

    _PATTERN = re.compile(r"^\s*(en|ep'|ep|brousek|family)\s*:\s*(.+?)\s*$", re.IGNORECASE)

    @classmethod
    def parse(cls, text: str) -> ExtremalSpec:
        m = cls._PATTERN.match(text)
        if not m:
            raise SpecParseError(f"cannot parse extremal spec {text!r}")
        kind, arg = m.group(1).lower(), m.group(2)
        try:
            if kind in ("en", "ep", "ep'"):
                return cls(kind, n=int(arg))
            if kind == "brousek":
                parts = [p.strip() for p in arg.split(",")]
                if len(parts) != 3:
                    raise ValueError("brousek needs three connectors")
                return cls(kind, connectors=tuple(_connector(p) for p in parts))
            n_str, _, idx = arg.partition("/")
            return cls(kind, n=int(n_str), index=int(idx) if idx else 0)
        except ValueError as exc:
            raise SpecParseError(f"bad extremal spec {text!r}: {exc}") from None

    def build(self) -> Graph:
        if self.kind == "en":
            return build_en(self.n)
        if self.kind == "ep":
            return build_ep(self.n, "standard")
        if self.kind == "ep'":
            return build_ep(self.n, "prime")
        if self.kind == "brousek":
            return build_brousek(*self.connectors)
        members = ep_family(self.n)
        if not 0 <= self.index < len(members):
            raise ValueError(f"family index {self.index} out of range 0..{len(members) - 1}")
        return members[self.index]

    def __str__(self) -> str:
        if self.kind == "brousek":
            return "brousek:" + ",".join(str(c) for c in self.connectors)
        if self.kind == "family":
            return f"family:{self.n}/{self.index}"
        return f"{self.kind}:{self.n}"
