"""Claw-freeness, the claw-free closure, cliques and small-graph matching."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .graph import Graph, components, iter_bits, reach, star, twin_classes


class NotClawFreeError(ValueError):
    pass


class NotEligibleError(ValueError):
    pass


class SearchBudgetError(RuntimeError):
    """A backtracking search hit its size or node budget."""


# -- claws and induced patterns ---------------------------------------------


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """Return ``(centre, a, b, c)`` for some induced claw, or None."""
    rows = g.rows
    for v in range(g.n):
        nb = rows[v]
        for a in iter_bits(nb):
            rest = nb & ~rows[a] & ~((1 << (a + 1)) - 1)
            for b in iter_bits(rest):
                third = rest & ~rows[b] & ~((1 << (b + 1)) - 1)
                if third:
                    return v, a, b, (third & -third).bit_length() - 1
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def _require_claw_free(g: Graph) -> None:
    claw = find_claw(g)
    if claw is not None:
        raise NotClawFreeError(f"graph contains an induced claw centred at {claw[0]}: {claw}")


@dataclass(frozen=True)
class InducedEmbedding:
    pattern: Graph
    host: Graph
    map: tuple[int, ...]

    def is_valid(self) -> bool:
        m = self.map
        if len(set(m)) != len(m):
            return False
        p, h = self.pattern, self.host
        return all(p.has_edge(u, v) == h.has_edge(m[u], m[v])
                   for u, v in combinations(range(p.n), 2))


MAX_PATTERN = 12


def _embed(host: Graph, pattern: Graph, order: list[int], induced: bool,
           max_nodes: int | None = None) -> tuple[int, ...] | None:
    """Backtracking injective map pattern -> host following ``order``."""
    k = pattern.n
    prow, hrow = pattern.rows, host.rows
    pdeg, hdeg = pattern.degrees(), host.degrees()
    # for each position: earlier pattern vertices that must be adjacent / non-adjacent
    need_adj, need_non = [], []
    for i, v in enumerate(order):
        before = order[:i]
        need_adj.append([u for u in before if prow[v] >> u & 1])
        need_non.append([u for u in before if not prow[v] >> u & 1] if induced else [])
    image = [0] * k
    used = 0
    nodes = 0
    full = host.full_mask

    def candidates(i):
        cand = full & ~used
        for u in need_adj[i]:
            cand &= hrow[image[u]]
        for u in need_non[i]:
            cand &= ~hrow[image[u]]
        return cand

    stack = [candidates(0)] if k else []
    if not k:
        return ()
    i = 0
    while stack:
        cand = stack[-1]
        placed = False
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if hdeg[w] < pdeg[order[i]]:
                continue
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise SearchBudgetError(f"embedding search exceeded {max_nodes} nodes")
            stack[-1] = cand
            image[order[i]] = w
            used |= low
            placed = True
            break
        if not placed:
            stack.pop()
            i -= 1
            if i >= 0:
                used &= ~(1 << image[order[i]])
            continue
        if i == k - 1:
            return tuple(image)
        i += 1
        stack.append(candidates(i))
    return None


def find_induced(host: Graph, pattern: Graph) -> InducedEmbedding | None:
    """Lexicographically smallest induced embedding of ``pattern`` in ``host``."""
    if pattern.n > MAX_PATTERN:
        raise SearchBudgetError(f"pattern order {pattern.n} exceeds cap {MAX_PATTERN}")
    if pattern.n > host.n:
        return None
    m = _embed(host, pattern, list(range(pattern.n)), induced=True)
    return None if m is None else InducedEmbedding(pattern, host, m)


def _search_order(g: Graph) -> list[int]:
    """Connected greedy order: next vertex has most already-placed neighbours, then degree."""
    left = set(range(g.n))
    order: list[int] = []
    placed = 0
    deg = g.degrees()
    while left:
        v = max(left, key=lambda u: ((g.rows[u] & placed).bit_count(), deg[u], -u))
        order.append(v)
        placed |= 1 << v
        left.discard(v)
    return order


def is_spanning_subgraph(g: Graph, h: Graph, max_nodes: int | None = 10**7) -> bool:
    """True iff ``g`` is isomorphic to a spanning subgraph of ``h`` (same order)."""
    if g.n != h.n or g.edge_count > h.edge_count:
        return False
    gd, hd = sorted(g.degrees(), reverse=True), sorted(h.degrees(), reverse=True)
    if any(a > b for a, b in zip(gd, hd)):
        return False
    return _embed(h, g, _search_order(g), induced=False, max_nodes=max_nodes) is not None


# -- closure -----------------------------------------------------------------


class Shape(Enum):
    CLIQUE = "clique"
    TWO_CLIQUES = "two_cliques"
    OTHER = "other"


@dataclass(frozen=True)
class NeighborhoodShape:
    shape: Shape
    parts: tuple[tuple[int, ...], ...] = ()


def _is_clique_mask(rows, mask: int) -> bool:
    for v in iter_bits(mask):
        if (mask & ~(1 << v)) & ~rows[v]:
            return False
    return True


def _eligible(rows, v: int) -> bool:
    nb = rows[v]
    if not nb:
        return False
    if _is_clique_mask(rows, nb):
        return False
    low = nb & -nb
    return reach(rows, low, nb) == nb


def eligible_vertices(g: Graph) -> list[int]:
    _require_claw_free(g)
    return [v for v in range(g.n) if _eligible(g.rows, v)]


def missing_neighborhood_edges(g: Graph, x: int) -> list[tuple[int, int]]:
    """B_G(x): the non-adjacent pairs inside N(x)."""
    nb = g.neighbors(x)
    return [(u, v) for u, v in combinations(nb, 2) if not g.has_edge(u, v)]


def local_completion(g: Graph, x: int, check: bool = True) -> Graph:
    if check:
        _require_claw_free(g)
    if not _eligible(g.rows, x):
        raise NotEligibleError(f"vertex {x} is not eligible")
    out = g.add_edges(missing_neighborhood_edges(g, x))
    if check:
        _require_claw_free(out)
    return out


@dataclass
class ClosureTrace:
    initial: Graph
    final: Graph
    steps: list[tuple[int, tuple[tuple[int, int], ...]]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.initial.n,
            "initial_edges": self.initial.edge_count,
            "final_edges": self.final.edge_count,
            "steps": [{"vertex": x, "added": [list(p) for p in added]} for x, added in self.steps],
        }


def closure(g: Graph, rng: random.Random | None = None,
            check_steps: bool = False) -> tuple[Graph, ClosureTrace]:
    """Ryjacek closure by repeated local completion.

    The smallest-index eligible vertex is completed at each step unless ``rng``
    is given, in which case the eligible vertex is drawn from it.  With
    ``check_steps`` each intermediate graph is re-verified claw-free.
    """
    _require_claw_free(g)
    trace = ClosureTrace(g, g)
    cur = g
    while True:
        rows = cur.rows
        elig = [v for v in range(cur.n) if _eligible(rows, v)]
        if not elig:
            break
        x = rng.choice(elig) if rng is not None else elig[0]
        added = tuple(missing_neighborhood_edges(cur, x))
        cur = cur.add_edges(added)
        if check_steps:
            _require_claw_free(cur)
        trace.steps.append((x, added))
    trace.final = cur
    return cur, trace


def is_closed(g: Graph) -> bool:
    _require_claw_free(g)
    rows = g.rows
    return not any(_eligible(rows, v) for v in range(g.n))


def neighborhood_shape(g: Graph, v: int) -> NeighborhoodShape:
    _require_claw_free(g)
    rows = g.rows
    nb = rows[v]
    if _is_clique_mask(rows, nb):
        return NeighborhoodShape(Shape.CLIQUE, (tuple(iter_bits(nb)),))
    comps = components(g, within=nb)
    if len(comps) == 2 and all(_is_clique_mask(rows, c) for c in comps):
        return NeighborhoodShape(Shape.TWO_CLIQUES, tuple(tuple(iter_bits(c)) for c in comps))
    return NeighborhoodShape(Shape.OTHER)


# -- cliques and degrees -------------------------------------------------------


def heavy_vertices(g: Graph) -> list[int]:
    return [v for v, d in enumerate(g.degrees()) if 2 * d >= g.n]


def maximum_clique(g: Graph, max_nodes: int = 10**7) -> list[int]:
    """Exact maximum clique: branch and bound with greedy-colouring bounds."""
    rows = g.rows
    best: list[int] = []
    nodes = 0

    def colour_order(cand: int) -> list[tuple[int, int]]:
        # greedy sequential colouring; returns (vertex, colour) by increasing colour
        out = []
        colour = 0
        left = cand
        while left:
            colour += 1
            avail = left
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~rows[v] & ~low
                left &= ~low
                out.append((v, colour))
        return out

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > max_nodes:
            raise SearchBudgetError(f"max-clique search exceeded {max_nodes} nodes")
        order = colour_order(cand)
        for v, c in reversed(order):
            if len(clique) + c <= len(best):
                return
            new = clique + [v]
            sub = cand & rows[v]
            if sub:
                expand(new, sub)
            elif len(new) > len(best):
                best = new
            cand &= ~(1 << v)

    if g.n:
        expand([], g.full_mask)
    return sorted(best)


def clique_number(g: Graph, max_nodes: int = 10**7) -> int:
    return len(maximum_clique(g, max_nodes))


# -- isomorphism -----------------------------------------------------------------

MAX_ISO_ORDER = 512


def _refine(graphs: list[Graph]) -> list[list[int]]:
    """Joint colour refinement (1-WL) from degrees; colours comparable across graphs."""
    colours = [g.degrees() for g in graphs]
    nclasses = len({c for cs in colours for c in cs})
    while True:
        sigs = []
        for g, cs in zip(graphs, colours):
            sigs.append([(cs[v], tuple(sorted(cs[u] for u in iter_bits(g.rows[v]))))
                         for v in range(g.n)])
        palette = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colours = [[palette[s] for s in ss] for ss in sigs]
        if len(palette) == nclasses:
            return colours
        nclasses = len(palette)


def colour_classes(g: Graph) -> list[int]:
    """Bitmasks of the stable colour-refinement classes, ordered by colour."""
    masks: dict[int, int] = {}
    for v, c in enumerate(_refine([g])[0]):
        masks[c] = masks.get(c, 0) | (1 << v)
    return [masks[c] for c in sorted(masks)]


def is_isomorphic(g: Graph, h: Graph, max_nodes: int = 10**7) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if max(g.n, h.n) > MAX_ISO_ORDER:
        raise SearchBudgetError(f"isomorphism test limited to n <= {MAX_ISO_ORDER}")
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    cg, ch = _refine([g, h])
    if sorted(cg) != sorted(ch):
        return False
    n = g.n
    if n == 0:
        return True
    by_colour: dict[int, int] = {}
    for v, c in enumerate(ch):
        by_colour[c] = by_colour.get(c, 0) | (1 << v)
    size = {c: m.bit_count() for c, m in by_colour.items()}
    # small colour classes first, staying connected where possible
    order = []
    placed = 0
    left = set(range(n))
    while left:
        v = min(left, key=lambda u: (-(g.rows[u] & placed).bit_count(), size[cg[u]], u))
        order.append(v)
        placed |= 1 << v
        left.discard(v)
    grow, hrow = g.rows, h.rows
    h_twins = twin_classes(h)[0]
    image = [-1] * n
    nodes = 0

    def extend(i: int, used: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        v = order[i]
        cand = by_colour[cg[v]] & ~used
        for u in order[:i]:
            if grow[v] >> u & 1:
                cand &= hrow[image[u]]
            else:
                cand &= ~hrow[image[u]]
        while cand:
            w = (cand & -cand).bit_length() - 1
            # an unused twin of a failed image fails too
            cand &= ~(1 << w) & ~h_twins[w]
            nodes += 1
            if nodes > max_nodes:
                raise SearchBudgetError(f"isomorphism search exceeded {max_nodes} nodes")
            image[v] = w
            if extend(i + 1, used | (1 << w)):
                return True
        image[v] = -1
        return False

    return extend(0, 0)


CLAW = star(3)
