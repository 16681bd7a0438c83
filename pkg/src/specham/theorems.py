"""Hypothesis / conclusion / exception checkers for the spectral Hamiltonicity results.

Every result has the shape "if HYPOTHESIS then CONCLUSION unless EXCEPTION".
``check`` evaluates the three parts on one graph and returns a
``TheoremVerdict``; a false ``consistent`` is a counterexample report, never
an exception.

Spectral comparisons use a margin ``tol``: ``x >= c`` holds when
``x >= c - tol``, ``x > c`` when ``x > c + tol`` (and symmetrically for upper
bounds).  The signed margin is kept in ``details``.
"""
from __future__ import annotations

import math
import re
from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import cached_property, lru_cache

from . import extremal
from .graph import Graph, complement, connectivity
from .hamilton import HamiltonBudgetExceeded, hamilton
from .spectral import DEFAULT_TOL, adjacency_matrix, largest_eigenvalue, signless_laplacian
from .structure import (SearchBudgetError, clique_number, is_claw_free, is_closed,
                        is_isomorphic, is_spanning_subgraph)

DEFAULT_MARGIN = 1e-8
SPECTRAL_TOL = DEFAULT_TOL


class TheoremId(Enum):
    FINI_TRACE = "FiNi_trace"
    FINI_HAM = "FiNi_ham"
    FINIC_TRACE = "FiNiC_trace"
    FINIC_HAM = "FiNiC_ham"
    NILI_MU = "NiLi_mu"
    NILI_COMU = "NiLi_comu"
    TRACEABLE_Q = "Traceable_q"
    HAM_MU = "Ham_mu"
    HAM_Q = "Ham_q"
    HAM_COMU = "Ham_comu"
    L_DUDV = "L_dudv"
    L_EG = "L_eG"
    L_ENN = "L_ENn"
    L_EG_ENN = "L_eG_ENn"
    L_EPN = "L_EPn"
    L_EG_EPN = "L_eG_EPn"
    # the same edge-count lemma with the 2-connected / Hamiltonian reading its proof supports
    L_EG_EPN_HAM = "L_eG_EPn_ham"


def _squash(s: str) -> str:
    return re.sub(r"[^a-z0-9]", "", s.lower())


_BY_KEY = {_squash(t.value): t for t in TheoremId}


def parse_theorem(text: str) -> tuple[TheoremId, int | None]:
    """Accept ``"FiNi_trace"``, ``"fini-trace"``, ``"L_eG(4)"``, ``"leg:4"`` and the like."""
    m = re.match(r"^\s*(.*?)\s*(?:[(:]\s*(\d+)\s*\)?)?\s*$", text)
    name, k = m.group(1), m.group(2)
    tid = _BY_KEY.get(_squash(name))
    if tid is None:
        raise ValueError(f"unknown theorem id {text!r}")
    if tid is TheoremId.L_EG:
        return tid, int(k) if k is not None else 3
    if k is not None:
        raise ValueError(f"{tid.value} takes no parameter")
    return tid, None


# -- reference values of the extremal graphs ----------------------------------


@lru_cache(maxsize=None)
def mu_of(spec: str) -> float:
    return largest_eigenvalue(adjacency_matrix(extremal.ExtremalSpec.parse(spec).build()),
                              SPECTRAL_TOL).value


@lru_cache(maxsize=None)
def q_of(spec: str) -> float:
    return largest_eigenvalue(signless_laplacian(extremal.ExtremalSpec.parse(spec).build()),
                              SPECTRAL_TOL).value


@lru_cache(maxsize=None)
def mu_complement_of(spec: str) -> float:
    g = extremal.ExtremalSpec.parse(spec).build()
    return largest_eigenvalue(adjacency_matrix(complement(g)), SPECTRAL_TOL).value


def binom2(m: int) -> int:
    return m * (m - 1) // 2 if m >= 2 else 0


def leeg_threshold(n: int, k: int) -> int:
    return binom2(n - k - 1) + binom2(k + 2) + 1


# -- facts about one graph, computed on demand ---------------------------------


class GraphFacts:
    """Lazily computed invariants of ``g``; keyword overrides pre-seed any of them."""

    def __init__(self, g: Graph, budget: int | None = None, **known):
        self.g = g
        self.budget = budget
        for name, value in known.items():
            if not isinstance(getattr(type(self), name, None), cached_property):
                raise AttributeError(f"unknown fact {name!r}")
            self.__dict__[name] = value

    @property
    def n(self) -> int:
        return self.g.n

    @cached_property
    def e(self) -> int:
        return self.g.edge_count

    @cached_property
    def mu(self) -> float:
        return largest_eigenvalue(adjacency_matrix(self.g), SPECTRAL_TOL).value if self.n else 0.0

    @cached_property
    def q(self) -> float:
        return largest_eigenvalue(signless_laplacian(self.g), SPECTRAL_TOL).value if self.n else 0.0

    @cached_property
    def mu_complement(self) -> float:
        if not self.n:
            return 0.0
        return largest_eigenvalue(adjacency_matrix(complement(self.g)), SPECTRAL_TOL).value

    @cached_property
    def _conn(self):
        return connectivity(self.g)

    @cached_property
    def connected(self) -> bool:
        return self._conn.is_connected

    @cached_property
    def two_connected(self) -> bool:
        return self._conn.is_two_connected

    @cached_property
    def claw_free(self) -> bool:
        return is_claw_free(self.g)

    @cached_property
    def closed(self) -> bool:
        return self.claw_free and is_closed(self.g)

    @cached_property
    def omega(self) -> int:
        return clique_number(self.g)

    @cached_property
    def traceable(self) -> bool:
        return self._decide("path")

    @cached_property
    def hamiltonian(self) -> bool:
        return self.n >= 3 and self._decide("cycle")

    def _decide(self, kind: str) -> bool:
        res = hamilton(self.g, kind, self.budget)
        if res.status == "budget_exceeded":
            raise HamiltonBudgetExceeded(f"{kind} search exceeded its budget (n={self.n})")
        return res.found


# -- verdicts -------------------------------------------------------------------


@dataclass
class TheoremVerdict:
    theorem: str
    n: int
    hypothesis_holds: bool
    conclusion_holds: bool | None
    is_exception: bool
    consistent: bool | None  # None only when the conclusion could not be decided
    status: str  # vacuous | holds | exception | counterexample | unresolved
    reason: str = ""
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


class _Ctx:
    """Collects details and precondition reasons while a rule is evaluated."""

    def __init__(self, facts: GraphFacts, margin: float):
        self.f = facts
        self.margin = margin
        self.details: dict = {}
        self.reason = ""

    def require(self, ok: bool, why: str) -> bool:
        if not ok and not self.reason:
            self.reason = why
        return ok

    def at_least(self, name: str, value: float, bound: float, strict: bool = False) -> bool:
        self.details[name] = value
        self.details[name + "_bound"] = bound
        self.details[name + "_margin"] = value - bound
        ok = value > bound + self.margin if strict else value >= bound - self.margin
        return self.require(ok, f"{name} = {value:.12g} below {bound:.12g}")

    def at_most(self, name: str, value: float, bound: float, strict: bool = False) -> bool:
        self.details[name] = value
        self.details[name + "_bound"] = bound
        self.details[name + "_margin"] = bound - value
        ok = value < bound - self.margin if strict else value <= bound + self.margin
        return self.require(ok, f"{name} = {value:.12g} above {bound:.12g}")

    def structure(self, *needs: str) -> bool:
        for need in needs:
            if not self.require(getattr(self.f, need), f"not {need.replace('_', ' ')}"):
                return False
        return True


@dataclass(frozen=True)
class _Rule:
    hypothesis: object  # (ctx, k) -> bool
    conclusion: object  # (facts) -> bool | None
    exception: object  # (facts) -> bool


def _iso(name_fn):
    def test(f: GraphFacts) -> bool:
        h = name_fn(f.n)
        return h is not None and is_isomorphic(f.g, h)
    return test


def _safe(builder, lo: int):
    return lambda n: builder(n) if n >= lo else None


_fini_trace_exc = _iso(_safe(extremal.fini_trace_exception, 2))
_fini_ham_exc = _iso(_safe(extremal.fini_ham_exception, 3))
_en_exc = _iso(_safe(extremal.build_en, 6))
_ep_exc = _iso(_safe(lambda n: extremal.build_ep(n, "standard"), 9))
_ep_prime_exc = _iso(_safe(lambda n: extremal.build_ep(n, "prime"), 9))


def _inside_en(f: GraphFacts) -> bool:
    return f.n >= 6 and is_spanning_subgraph(f.g, extremal.build_en(f.n))


def _inside_ep(f: GraphFacts) -> bool:
    return f.n >= 9 and any(is_spanning_subgraph(f.g, extremal.build_ep(f.n, v))
                            for v in ("standard", "prime"))


def _traceable(f):
    return f.traceable


def _hamiltonian(f):
    return f.hamiltonian


def _never(f):
    return False


def _h_fini_trace(c: _Ctx, k):
    n = c.f.n
    return c.require(n >= 1, "n < 1") and c.at_least("mu", c.f.mu, n - 2)


def _h_fini_ham(c: _Ctx, k):
    n = c.f.n
    return c.require(n >= 3, "n < 3") and c.at_least("mu", c.f.mu, n - 2, strict=True)


def _h_finic_trace(c: _Ctx, k):
    n = c.f.n
    return c.require(n >= 1, "n < 1") and c.at_most("mu_complement", c.f.mu_complement,
                                                     math.sqrt(n - 1))


def _h_finic_ham(c: _Ctx, k):
    n = c.f.n
    return c.require(n >= 3, "n < 3") and c.at_most("mu_complement", c.f.mu_complement,
                                                     math.sqrt(n - 2))


def _h_nili_mu(c: _Ctx, k):
    return c.structure("connected", "claw_free") and c.at_least("mu", c.f.mu, c.f.n - 4)


def _h_nili_comu(c: _Ctx, k):
    n = c.f.n
    return (c.require(n >= 24, "n < 24") and c.structure("connected", "claw_free")
            and c.at_most("mu_complement", c.f.mu_complement, mu_complement_of(f"en:{n}")))


def _h_traceable_q(c: _Ctx, k):
    n = c.f.n
    return (c.require(n >= 18, "n < 18") and c.structure("connected", "claw_free")
            and c.at_least("q", c.f.q, q_of(f"en:{n}")))


def _h_ham_mu(c: _Ctx, k):
    n = c.f.n
    return (c.require(n >= 33, "n < 33") and c.structure("two_connected", "claw_free")
            and c.at_least("mu", c.f.mu, mu_of(f"ep:{n}")))


def _h_ham_q(c: _Ctx, k):
    n = c.f.n
    return (c.require(n >= 51, "n < 51") and c.structure("two_connected", "claw_free")
            and c.at_least("q", c.f.q, q_of(f"ep:{n}")))


def _h_ham_comu(c: _Ctx, k):
    n = c.f.n
    return (c.require(n >= 219, "n < 219") and c.structure("two_connected", "claw_free")
            and c.at_most("mu_complement", c.f.mu_complement, mu_complement_of(f"ep':{n}")))


def _h_dudv(c: _Ctx, k):
    if not c.structure("two_connected", "claw_free", "closed"):
        return False
    g, deg = c.f.g, c.f.g.degrees()
    best = None
    for u, v in g.non_edges():
        if best is None or deg[u] + deg[v] > best[0]:
            best = (deg[u] + deg[v], u, v)
    c.details["max_nonadjacent_degree_sum"] = best[0] if best else None
    return c.require(best is not None and best[0] >= c.f.n,
                     "no non-adjacent pair with degree sum >= n")


def _edges_at_least(c: _Ctx, bound) -> bool:
    c.details["e"] = c.f.e
    c.details["e_bound"] = bound
    return c.require(c.f.e >= bound, f"e = {c.f.e} below {bound}")


def _h_leg(c: _Ctx, k):
    n = c.f.n
    return (c.require(n >= 2 * k, f"n < 2k = {2 * k}") and c.structure("claw_free", "closed")
            and c.require(not c.f.hamiltonian, "Hamiltonian")
            and _edges_at_least(c, leeg_threshold(n, k)))


def _c_leg(k):
    return lambda f: f.omega >= f.n - k


def _h_enn(c: _Ctx, k):
    if not (c.structure("connected", "claw_free", "closed")
            and c.require(not c.f.traceable, "traceable")):
        return False
    c.details["omega"] = c.f.omega
    return c.require(c.f.omega >= c.f.n - 3, "omega < n - 3")


def _h_eg_enn(c: _Ctx, k):
    n = c.f.n
    # n(n-9)/2 + 21, kept exact by doubling
    return (c.require(n >= 6, "n < 6") and c.structure("connected", "claw_free")
            and c.require(2 * c.f.e >= n * (n - 9) + 42, "e below n(n-9)/2 + 21")
            and _edges_at_least(c, n * (n - 9) / 2 + 21))


def _h_epn(c: _Ctx, k):
    if not (c.structure("two_connected", "claw_free", "closed")
            and c.require(not c.f.hamiltonian, "Hamiltonian")):
        return False
    c.details["omega"] = c.f.omega
    return c.require(c.f.omega >= c.f.n - 6, "omega < n - 6")


def _h_eg_epn(need: str):
    def hyp(c: _Ctx, k):
        n = c.f.n
        return (c.require(n >= 12, "n < 12") and c.structure(need, "claw_free")
                and c.require(2 * c.f.e >= n * (n - 15) + 114, "e below n(n-15)/2 + 57")
                and _edges_at_least(c, n * (n - 15) / 2 + 57))
    return hyp


_RULES = {
    TheoremId.FINI_TRACE: _Rule(_h_fini_trace, _traceable, _fini_trace_exc),
    TheoremId.FINI_HAM: _Rule(_h_fini_ham, _hamiltonian, _fini_ham_exc),
    TheoremId.FINIC_TRACE: _Rule(_h_finic_trace, _traceable, _fini_trace_exc),
    TheoremId.FINIC_HAM: _Rule(_h_finic_ham, _hamiltonian, _fini_ham_exc),
    TheoremId.NILI_MU: _Rule(_h_nili_mu, _traceable, _en_exc),
    TheoremId.NILI_COMU: _Rule(_h_nili_comu, _traceable, _en_exc),
    TheoremId.TRACEABLE_Q: _Rule(_h_traceable_q, _traceable, _en_exc),
    TheoremId.HAM_MU: _Rule(_h_ham_mu, _hamiltonian, _ep_exc),
    TheoremId.HAM_Q: _Rule(_h_ham_q, _hamiltonian, _ep_exc),
    TheoremId.HAM_COMU: _Rule(_h_ham_comu, _hamiltonian, _ep_prime_exc),
    TheoremId.L_DUDV: _Rule(_h_dudv, _hamiltonian, _never),
    TheoremId.L_EG: _Rule(_h_leg, None, _never),
    TheoremId.L_ENN: _Rule(_h_enn, _en_exc, _never),
    TheoremId.L_EG_ENN: _Rule(_h_eg_enn, _traceable, _inside_en),
    TheoremId.L_EPN: _Rule(_h_epn, lambda f: extremal.in_ep_family(f.g), _never),
    TheoremId.L_EG_EPN: _Rule(_h_eg_epn("connected"), _traceable, _inside_ep),
    TheoremId.L_EG_EPN_HAM: _Rule(_h_eg_epn("two_connected"), _hamiltonian, _inside_ep),
}


def check(g: Graph | GraphFacts, theorem: TheoremId | str, tol: float = DEFAULT_MARGIN,
          k: int | None = None, full: bool = False, budget: int | None = None) -> TheoremVerdict:
    """Evaluate one result on ``g``.

    The conclusion and exception are evaluated only when the hypothesis holds,
    unless ``full`` is set.  A Hamilton search that runs out of budget, or an
    isomorphism / embedding search that is too large, yields status
    ``unresolved`` with ``consistent = None``.
    """
    if isinstance(theorem, str):
        theorem, parsed_k = parse_theorem(theorem)
        k = parsed_k if k is None else k
    if theorem is TheoremId.L_EG and k is None:
        k = 3
    facts = g if isinstance(g, GraphFacts) else GraphFacts(g, budget)
    rule = _RULES[theorem]
    conclusion_fn = _c_leg(k) if theorem is TheoremId.L_EG else rule.conclusion
    label = f"{theorem.value}({k})" if theorem is TheoremId.L_EG else theorem.value
    ctx = _Ctx(facts, tol)
    try:
        hyp = bool(rule.hypothesis(ctx, k))
    except (HamiltonBudgetExceeded, SearchBudgetError) as exc:
        return TheoremVerdict(label, facts.n, False, None, False, None, "unresolved",
                              str(exc), ctx.details)
    if not hyp and not full:
        return TheoremVerdict(label, facts.n, False, None, False, True, "vacuous",
                              ctx.reason, ctx.details)
    try:
        concl = bool(conclusion_fn(facts))
        # every named exception violates the conclusion, so only look when it fails
        exc_hit = not concl and bool(rule.exception(facts))
    except (HamiltonBudgetExceeded, SearchBudgetError) as exc:
        return TheoremVerdict(label, facts.n, hyp, None, False, None, "unresolved",
                              str(exc), ctx.details)
    if theorem is TheoremId.L_EG or theorem is TheoremId.L_ENN or theorem is TheoremId.L_EPN:
        ctx.details.setdefault("omega", facts.omega)
    consistent = (not hyp) or concl or exc_hit
    if not hyp:
        status = "vacuous"
    elif concl:
        status = "holds"
    elif exc_hit:
        status = "exception"
    else:
        status = "counterexample"
    return TheoremVerdict(label, facts.n, hyp, concl, exc_hit, consistent, status,
                          ctx.reason, ctx.details)
