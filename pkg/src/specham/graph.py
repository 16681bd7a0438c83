"""Simple undirected graphs on vertices ``0..n-1`` stored as dense bit rows.

Row ``v`` is a Python int whose bit ``u`` is set iff ``uv`` is an edge, so
adjacency tests, neighbourhood intersections and induced-subgraph masks are
single integer operations.  Graphs are immutable; every combinator returns a
new graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

#: Hard cap on the order of any graph built by this package.
MAX_VERTICES = 4096


class GraphError(ValueError):
    """Raised for malformed graph input (loops, out-of-range ids, asymmetry)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph.

    Construct from an edge iterable, ``Graph(4, [(0, 1), (1, 2)])``, or from
    bit rows / a 0-1 matrix with :meth:`from_rows` and :meth:`from_adjacency`.
    Equality is equality of labelled graphs; use
    :func:`specham.structure.is_isomorphic` for the unlabelled notion.
    """

    __slots__ = ("_rows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[int], check: bool = True) -> Graph:
        """Build from bit rows; ``check`` validates symmetry and loop-freeness."""
        n = len(rows)
        _check_order(n)
        rows = tuple(int(r) for r in rows)
        if check:
            full = (1 << n) - 1
            for v, r in enumerate(rows):
                if r & ~full:
                    raise GraphError(f"row {v} has bits beyond n={n}")
                if r >> v & 1:
                    raise GraphError(f"self-loop at vertex {v}")
                for u in iter_bits(r):
                    if not rows[u] >> v & 1:
                        raise GraphError(f"asymmetric pair ({v}, {u})")
        g = cls.__new__(cls)
        g._rows = rows
        g._hash = None
        return g

    @classmethod
    def from_adjacency(cls, matrix) -> Graph:
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        nz = a != 0
        if not np.array_equal(nz, nz.T):
            raise GraphError("adjacency matrix is not symmetric")
        if nz.diagonal().any():
            raise GraphError("adjacency matrix has a nonzero diagonal")
        rows = [mask_of(np.flatnonzero(nz[v]).tolist()) for v in range(a.shape[0])]
        return cls.from_rows(rows, check=False)

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbor_mask(self, v: int) -> int:
        return self._rows[v]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, r in enumerate(self._rows):
            out.extend((u, v) for v in iter_bits(r >> (u + 1) << (u + 1)))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.has_edge(u, v)]

    def adjacency(self, dtype=float) -> np.ndarray:
        n = self.n
        a = np.zeros((n, n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def has_isolated_vertex(self) -> bool:
        return any(r == 0 for r in self._rows)

    # -- derived graphs ------------------------------------------------

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self._rows)
        for u, v in pairs:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph.from_rows(rows, check=False)

    def remove_edges(self, pairs: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self._rows)
        for u, v in pairs:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph.from_rows(rows, check=False)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled so that ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise GraphError("repeated vertex in induced()")
        rows = []
        for v in vertices:
            r = 0
            for u in iter_bits(self._rows[v]):
                i = index.get(u)
                if i is not None:
                    r |= 1 << i
            rows.append(r)
        return Graph.from_rows(rows, check=False)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise GraphError("relabel() needs a permutation of 0..n-1")
        rows = [0] * n
        for v, r in enumerate(self._rows):
            rows[perm[v]] = mask_of(perm[u] for u in iter_bits(r))
        return Graph.from_rows(rows, check=False)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"


def _check_order(n: int) -> None:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    if n > MAX_VERTICES:
        raise GraphError(f"n={n} exceeds MAX_VERTICES={MAX_VERTICES}")


# -- named graphs ----------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.from_rows([full ^ (1 << v) for v in range(n)], check=False)


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(m: int) -> Graph:
    """K_{1,m} with centre 0."""
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` is the ``i``-th edge of ``g.edges()``."""
    edges = g.edges()
    by_vertex: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        by_vertex[u].append(i)
        by_vertex[v].append(i)
    pairs = set()
    for incident in by_vertex:
        pairs.update(combinations(incident, 2))
    return Graph(len(edges), pairs)


# -- combinators -----------------------------------------------------------


def combine(g1: Graph, g2: Graph, mode: str = "disjoint_union") -> Graph:
    """Disjoint union or join; ``g2``'s vertices are shifted past ``g1``'s."""
    if mode not in ("disjoint_union", "join"):
        raise ValueError(f"unknown mode {mode!r}")
    n1, n2 = g1.n, g2.n
    _check_order(n1 + n2)
    left = ((1 << n2) - 1) << n1 if mode == "join" else 0
    right = (1 << n1) - 1 if mode == "join" else 0
    rows = [r | left for r in g1.rows] + [(r << n1) | right for r in g2.rows]
    return Graph.from_rows(rows, check=False)


def disjoint_union(*graphs: Graph) -> Graph:
    out = empty(0)
    for g in graphs:
        out = combine(out, g, "disjoint_union")
    return out


def join(*graphs: Graph) -> Graph:
    out = empty(0)
    for g in graphs:
        out = combine(out, g, "join")
    return out


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph.from_rows([full ^ r ^ (1 << v) for v, r in enumerate(g.rows)], check=False)


# -- connectivity ----------------------------------------------------------


@dataclass(frozen=True)
class Connectivity:
    is_connected: bool
    is_two_connected: bool


def twin_classes(g: Graph, fixed: int | None = None) -> tuple[list[int], list[int]]:
    """Per-vertex twin masks and the twin classes of size >= 2.

    Twins share their open or their closed neighbourhood, so swapping two of
    them is an automorphism.  ``fixed`` is left out of every class.
    """
    groups: dict[tuple[str, int], int] = {}
    for v, row in enumerate(g.rows):
        if v == fixed:
            continue
        for key in (("open", row), ("closed", row | 1 << v)):
            groups[key] = groups.get(key, 0) | 1 << v
    # a vertex cannot have both an open and a closed twin, so these are disjoint
    classes = [m for m in groups.values() if m & (m - 1)]
    twins = [0] * g.n
    for cls in classes:
        for v in iter_bits(cls):
            twins[v] = cls
    return twins, classes


def reach(rows: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from the vertices of ``start`` inside ``allowed``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g`` (restricted to ``within``) as bitmasks."""
    left = g.full_mask if within is None else within
    comps = []
    while left:
        low = left & -left
        comp = reach(g.rows, low, left)
        comps.append(comp)
        left &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return reach(g.rows, 1, g.full_mask) == g.full_mask


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices, by iterative Hopcroft-Tarjan low-link search."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    timer = 0
    nbrs = [g.neighbors(v) for v in range(n)]
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(nbrs[v]):
                stack[-1] = (v, parent, i + 1)
                w = nbrs[v][i]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, 0))
                elif w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if parent != root and low[v] >= disc[parent]:
                        cut[parent] = True
        if root_children > 1:
            cut[root] = True
    return [v for v in range(n) if cut[v]]


def connectivity(g: Graph) -> Connectivity:
    conn = is_connected(g) and g.n >= 1
    two = conn and g.n >= 3 and not articulation_points(g)
    return Connectivity(conn, two)
