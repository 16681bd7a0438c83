"""Edge-count implications behind the large-n theorems, checked in exact arithmetic.

Each theorem is reduced to an edge-count lemma: the spectral hypothesis plus
a classical bound forces ``e(G)`` above the lemma's threshold.  The functions
below verify those integer / algebraic inequalities over finite ranges and
report the first ``n`` from which each holds.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .spectral import feng_yu_bound, hong_bound
from .theorems import binom2


def _twice(x) -> Fraction:
    return 2 * Fraction(x)


def traceable_q_chain(n: int) -> bool:
    """(n-1)(n-6)/2 >= n(n-9)/2 + 21."""
    return (n - 1) * (n - 6) >= n * (n - 9) + 42


def ham_mu_chain(n: int) -> bool:
    """((n-7)^2 + n - 1)/2 >= n(n-15)/2 + 57."""
    return (n - 7) ** 2 + n - 1 >= n * (n - 15) + 114


def ham_q_chain(n: int) -> bool:
    """(n-1)(n-12)/2 >= n(n-15)/2 + 57."""
    return (n - 1) * (n - 12) >= n * (n - 15) + 114


def complement_edge_bound(n: int) -> tuple[Fraction, Fraction]:
    """(A, B) with  n(n-1)/2 - ((5 + sqrt(24n-119))/2)^2 * n/(n-1)  =  A - B*sqrt(24n-119)."""
    # ((5 + r)/2)^2 = (25 + 10 r + r^2)/4 and r^2 = 24n - 119
    scale = Fraction(n, 4 * (n - 1))
    a = Fraction(n * (n - 1), 2) - scale * (25 + 24 * n - 119)
    b = scale * 10
    return a, b


def ham_comu_chain(n: int) -> bool:
    """n(n-1)/2 - ((5+sqrt(24n-119))/2)^2 * n/(n-1) > n(n-15)/2 + 56, decided exactly."""
    a, b = complement_edge_bound(n)
    gap = a - Fraction(n * (n - 15), 2) - 56  # need gap > b * r with r = sqrt(24n - 119)
    return gap > 0 and gap * gap > b * b * (24 * n - 119)


def ham_comu_margin(n: int) -> float:
    a, b = complement_edge_bound(n)
    return float(a - b * (24 * n - 119) ** 0.5 - Fraction(n * (n - 15), 2) - 56)


def leeg_inequality(n: int, k: int) -> bool:
    """(n^2 - 1)/4 <= C(n-k-1, 2) + C(k+2, 2)."""
    return n * n - 1 <= 4 * (binom2(n - k - 1) + binom2(k + 2))


def leeg_case_bounds(n: int, k: int) -> bool:
    """Both case estimates in the clique-size argument, for every admissible clique size t.

    Small cliques (1 <= t <= (n+1)/2):  C(t,2) + (n-t)(n+1)/4 <= (n^2-1)/4.
    Large cliques (n/2+1 <= t <= n-k-1): C(t,2) + C(n-t+1,2) <= C(n-k-1,2) + C(k+2,2).
    """
    target = binom2(n - k - 1) + binom2(k + 2)
    for t in range(1, (n + 1) // 2 + 1):
        if 4 * binom2(t) + (n - t) * (n + 1) > n * n - 1:
            return False
    for t in range(-(-(n + 2) // 2), n - k):
        if binom2(t) + binom2(n - t + 1) > target:
            return False
    return True


CHAINS = {
    "traceable_q": (traceable_q_chain, 18),
    "ham_mu": (ham_mu_chain, 33),
    "ham_q": (ham_q_chain, 51),
    "ham_comu": (ham_comu_chain, 219),
}


@dataclass
class ChainReport:
    name: str
    claimed_from: int
    checked_to: int
    holds_on_range: bool
    first_failure: int | None
    holds_from: int | None  # smallest n0 with the chain true on n0..checked_to

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def chain_report(name: str, upto: int = 1000, start: int = 10) -> ChainReport:
    fn, claimed = CHAINS[name]
    values = {n: fn(n) for n in range(start, upto + 1)}
    failures = [n for n in range(claimed, upto + 1) if not values[n]]
    n0 = upto + 1
    while n0 - 1 >= start and values[n0 - 1]:
        n0 -= 1
    return ChainReport(name, claimed, upto, not failures, failures[0] if failures else None,
                       n0 if n0 <= upto else None)


# -- per-graph replay -------------------------------------------------------------


def implied_edges_from_mu(n: int, mu: float) -> float:
    """Smallest e compatible with mu <= sqrt(2e - n + 1)."""
    return (mu * mu + n - 1) / 2


def implied_edges_from_q(n: int, q: float) -> float:
    """Smallest e compatible with q <= 2e/(n-1) + n - 2."""
    return (q - n + 2) * (n - 1) / 2


def replay(g: Graph, mu: float, q: float, tol: float = 1e-8) -> dict:
    """The two edge lower bounds a graph's own spectrum implies, and whether e(G) meets them."""
    n, e = g.n, g.edge_count
    from_mu = implied_edges_from_mu(n, mu)
    from_q = implied_edges_from_q(n, q) if n >= 2 else None
    return {
        "n": n,
        "e": e,
        "from_mu": from_mu,
        "from_q": from_q,
        "mu_ok": g.has_isolated_vertex() or mu <= hong_bound(n, e) + tol,
        "q_ok": from_q is None or q <= feng_yu_bound(n, e) + tol,
    }
