"""Quartic (and one cubic) eigenvalue polynomials of EP_n / EP'_n and their complements.

Both graphs have an equitable partition into four vertex classes ``u, v, w, z``:

* ``u``: the degree-2 vertices;
* ``v``: the remaining vertices outside the big clique;
* ``w``: clique vertices with a neighbour outside the clique;
* ``z``: the other clique vertices.

The complements use the same classes.  The Perron vector is constant on each
class, so the largest eigenvalue of the whole matrix is the largest eigenvalue
of the 4x4 quotient matrix, a root of its characteristic polynomial.

Six closed-form polynomials are kept in two readings: ``"printed"`` (as
stated) and ``"corrected"`` (the two misprinted ones repaired, matching the
quotient characteristic polynomials).
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .extremal import build_ep
from .graph import Graph, complement, iter_bits
from .spectral import (DEFAULT_TOL, adjacency_matrix, largest_eigenvalue,
                       signless_laplacian)
from .structure import colour_classes, maximum_clique

READINGS = ("printed", "corrected")
KINDS = ("adjacency", "signless_laplacian", "complement_adjacency")
VARIANTS = ("standard", "prime")
RESIDUAL_LIMIT = 1e-6


class QuotientError(ValueError):
    """The built graph does not split into the expected four classes."""


class PolyFamily(Enum):
    ADJ_EP = "AdjEP"
    ADJ_EP_PRIME = "AdjEPPrime"
    Q_EP = "QEP"
    Q_EP_PRIME = "QEPPrime"
    CO_ADJ_EP = "CoAdjEP"
    CO_ADJ_EP_PRIME = "CoAdjEPPrime"

    @property
    def variant(self) -> str:
        return "prime" if self.value.endswith("Prime") else "standard"

    @property
    def kind(self) -> str:
        if self.value.startswith("Adj"):
            return "adjacency"
        if self.value.startswith("Q"):
            return "signless_laplacian"
        return "complement_adjacency"

    @classmethod
    def of(cls, variant: str, kind: str) -> PolyFamily:
        for fam in cls:
            if fam.variant == variant and fam.kind == kind:
                return fam
        raise ValueError(f"no family for {variant}/{kind}")


# closed forms, valid for int, Fraction and float arguments

def _adj_ep(n, x):
    return (x - n + 10) * (x**3 - 4 * x**2 + x + 2) - (3 * n - 27) * (x**2 - 2 * x - 1)


def _adj_ep_prime(n, x):
    return ((x - n + 9) * ((x**2 - 2 * x - 2) * (x - 1) - 2 * x)
            - (2 * n - 16) * (x**2 - 2 * x - 2))


def _q_ep(n, x):
    return ((x - 2 * n + 17) * ((x - n + 3) * (x**2 - 8 * x + 11) - (2 * x - 6))
            - (3 * n - 27) * (x**2 - 8 * x + 11))


def _q_ep_prime_core(n, x):
    return ((x**2 - 8 * x + 12) * ((x - 2 * n + 16) * (x - n + 4) - (2 * n - 16))
            - (2 * x - 4 * n + 32) * (2 * x - n + 2))


def _q_ep_prime_printed(n, x):
    return _q_ep_prime_core(n, x) - 4 * n + 32


def _q_ep_prime_fixed(n, x):
    # the trailing constant carries the opposite sign
    return _q_ep_prime_core(n, x) + 4 * n - 32


def _co_adj_ep_printed(n, x):
    return x**3 - (2 * x**2 + 4 * x + 8) - (6 * n - 54) * (x + 1)


def _co_adj_ep_fixed(n, x):
    return x**3 - (2 * x**2 + 12 * x + 8) - (6 * n - 54) * (x + 1)


def _co_adj_ep_prime(n, x):
    return ((x**2 - 4 * n + 32) * (x**2 - 2) - (2 * x**2 + x) * (x + 2)
            - (2 * n - 16) * (x**2 + x + 2))


_FORMS = {
    PolyFamily.ADJ_EP: (_adj_ep, _adj_ep),
    PolyFamily.ADJ_EP_PRIME: (_adj_ep_prime, _adj_ep_prime),
    PolyFamily.Q_EP: (_q_ep, _q_ep),
    PolyFamily.Q_EP_PRIME: (_q_ep_prime_printed, _q_ep_prime_fixed),
    PolyFamily.CO_ADJ_EP: (_co_adj_ep_printed, _co_adj_ep_fixed),
    PolyFamily.CO_ADJ_EP_PRIME: (_co_adj_ep_prime, _co_adj_ep_prime),
}


def _form(family: PolyFamily, reading: str):
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    return _FORMS[family][READINGS.index(reading)]


def _interpolate(values: list[int]) -> list[int]:
    """Monomial coefficients (lowest first) of the polynomial through (k, values[k])."""
    # Newton divided differences on nodes 0..d, then expand the Newton basis
    diffs = [Fraction(v) for v in values]
    newton = [diffs[0]]
    for level in range(1, len(diffs)):
        diffs = [(diffs[i + 1] - diffs[i]) / level for i in range(len(diffs) - 1)]
        newton.append(diffs[0])
    coeffs = [Fraction(0)] * len(values)
    basis = [Fraction(1)]
    for k, c in enumerate(newton):
        for i, b in enumerate(basis):
            coeffs[i] += c * b
        basis = [Fraction(0)] + basis
        for i in range(len(basis) - 1):
            basis[i] -= k * basis[i + 1]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("closed form has non-integer coefficients")
    return [int(c) for c in coeffs]


def coefficients(family: PolyFamily, n: int, reading: str = "printed") -> list[int]:
    """Exact integer coefficients of the closed form at order ``n``, lowest degree first."""
    fn = _form(family, reading)
    return _interpolate([fn(n, x) for x in range(7)])


def poly_eval(family: PolyFamily, n: int, x, reading: str = "printed"):
    """Value of the closed form at ``x``.

    Integer and Fraction arguments are evaluated exactly; floats by compensated
    summation of the expanded monomials.
    """
    if n < 10:
        raise ValueError("the polynomials are stated for n >= 10")
    coeffs = coefficients(family, n, reading)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        acc = 0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc
    x = float(x)
    return math.fsum(c * x**k for k, c in enumerate(coeffs))


@dataclass
class Residual:
    family: str
    n: int
    reading: str
    value: float
    residual: float
    relative_residual: float
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)


def residual_check(family: PolyFamily, n: int, lam: float,
                   reading: str = "printed") -> Residual:
    coeffs = coefficients(family, n, reading)
    terms = [c * float(lam) ** k for k, c in enumerate(coeffs)]
    value = math.fsum(terms)
    scale = math.fsum(abs(t) for t in terms)
    rel = abs(value) / scale if scale else abs(value)
    return Residual(family.value, n, reading, float(lam), abs(value), rel, rel <= RESIDUAL_LIMIT)


# -- quotient matrices ----------------------------------------------------------


def role_classes(variant: str, n: int) -> tuple[list[int], list[int], list[int], list[int]]:
    """Vertex lists of the classes ``u, v, w, z`` of EP_n / EP'_n, discovered from the graph."""
    g = build_ep(n, variant)
    clique = 0
    for v in maximum_clique(g):
        clique |= 1 << v
    inside, outside = [], []
    for mask in colour_classes(g):
        (inside if mask & ~clique == 0 else outside).append(mask)
    if len(inside) != 2 or len(outside) != 2:
        raise QuotientError(
            f"{variant} n={n}: expected 2+2 classes, got {len(inside)} in / {len(outside)} out")
    deg = g.degrees()
    u, v = sorted(outside, key=lambda m: deg[(m & -m).bit_length() - 1])
    w, z = sorted(inside, key=lambda m: g.rows[(m & -m).bit_length() - 1] & ~clique == 0)
    if deg[(u & -u).bit_length() - 1] != 2:
        raise QuotientError(f"{variant} n={n}: no degree-2 class")
    return tuple(list(iter_bits(m)) for m in (u, v, w, z))


def _class_matrix(g: Graph, classes) -> np.ndarray:
    masks = [sum(1 << v for v in cl) for cl in classes]
    k = len(classes)
    b = np.zeros((k, k), dtype=np.int64)
    for i, cl in enumerate(classes):
        for j, m in enumerate(masks):
            counts = {(g.rows[v] & m).bit_count() for v in cl}
            if len(counts) != 1:
                raise QuotientError(f"partition is not equitable between classes {i} and {j}")
            b[i, j] = counts.pop()
    return b


@dataclass
class QuotientMatrix:
    variant: str
    kind: str
    n: int
    sizes: list[int]
    matrix: np.ndarray  # integer entries, rows/cols ordered u, v, w, z
    degrees: list[int]  # degree of each class in the graph itself (not the complement)

    def charpoly(self) -> list[int]:
        return characteristic_polynomial(self.matrix)

    def largest_eigenvalue(self, tol: float = DEFAULT_TOL) -> float:
        # similar to the symmetric matrix D^(1/2) B D^(-1/2), D = diag(sizes)
        r = np.sqrt(np.asarray(self.sizes, dtype=float))
        s = self.matrix * r[:, None] / r[None, :]
        return largest_eigenvalue((s + s.T) / 2, tol).value


def quotient_matrix(variant: str, kind: str, n: int) -> QuotientMatrix:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if n < 10:
        raise ValueError("quotient matrices need n >= 10")
    g = build_ep(n, variant)
    classes = role_classes(variant, n)
    sizes = [len(c) for c in classes]
    deg = g.degrees()
    degrees = [deg[c[0]] for c in classes]
    if kind == "complement_adjacency":
        b = _class_matrix(complement(g), classes)
    else:
        b = _class_matrix(g, classes)
        if kind == "signless_laplacian":
            b = b + np.diag(degrees)
    return QuotientMatrix(variant, kind, n, sizes, b, degrees)


def characteristic_polynomial(m) -> list[int]:
    """det(xI - M) for an integer matrix, lowest degree first (Faddeev-LeVerrier)."""
    a = [[int(v) for v in row] for row in np.asarray(m)]
    k = len(a)
    coeffs = [0] * k + [1]
    mk = [[0] * k for _ in range(k)]
    for step in range(1, k + 1):
        c_prev = coeffs[k - step + 1]
        mk = [[sum(a[i][t] * mk[t][j] for t in range(k)) + (c_prev if i == j else 0)
               for j in range(k)] for i in range(k)]
        am = [[sum(a[i][t] * mk[t][j] for t in range(k)) for j in range(k)] for i in range(k)]
        trace = sum(am[i][i] for i in range(k))
        if trace % step:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[k - step] = -trace // step
    return coeffs


def _divide_linear(coeffs: list[int], r: int) -> list[int]:
    """Quotient of p(x) / (x - r), assuming r is a root; lowest degree first."""
    out = [0] * (len(coeffs) - 1)
    carry = 0
    for k in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[k] + carry * r
        out[k - 1] = carry
    return out


def _eval_int(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def reduced_charpoly(q: QuotientMatrix, degree: int) -> list[int]:
    """Characteristic polynomial with integer roots split off until ``degree`` remains.

    The remaining factor keeps the largest eigenvalue as a root.
    """
    coeffs = q.charpoly()
    while len(coeffs) - 1 > degree:
        bound = max(abs(c) for c in coeffs)
        roots = [r for r in range(-bound, bound + 1) if _eval_int(coeffs, r) == 0]
        if not roots:
            raise QuotientError("no integer root to split off")
        coeffs = _divide_linear(coeffs, min(roots, key=abs))
    return coeffs


@dataclass
class TypoReport:
    family: str
    n: int
    printed: list[int]
    derived: list[int]
    difference: list[int]  # printed minus derived, lowest degree first
    relative_residual: float

    def describe(self) -> str:
        terms = [f"{c:+d}x^{k}" for k, c in enumerate(self.difference) if c]
        return (f"{self.family} (n={self.n}): printed polynomial differs from the quotient "
                f"characteristic polynomial by {' '.join(terms) or '0'}; "
                f"relative residual at lambda_max {self.relative_residual:.3g}")

    def to_dict(self) -> dict:
        return asdict(self)


def compare_with_quotient(family: PolyFamily, n: int, reading: str = "printed"
                          ) -> TypoReport | None:
    """None if the closed form equals the quotient polynomial, else a report."""
    stated = coefficients(family, n, reading)
    q = quotient_matrix(family.variant, family.kind, n)
    derived = reduced_charpoly(q, len(stated) - 1)
    if derived == stated:
        return None
    width = max(len(stated), len(derived))
    pad = lambda c: c + [0] * (width - len(c))  # noqa: E731
    diff = [a - b for a, b in zip(pad(stated), pad(derived))]
    lam = full_lambda_max(family, n)
    rel = residual_check(family, n, lam, reading).relative_residual
    return TypoReport(family.value, n, stated, derived, diff, rel)


def _matrix_for(family: PolyFamily, n: int) -> np.ndarray:
    g = build_ep(n, family.variant)
    if family.kind == "adjacency":
        return adjacency_matrix(g)
    if family.kind == "signless_laplacian":
        return signless_laplacian(g)
    return adjacency_matrix(complement(g))


def full_lambda_max(family: PolyFamily, n: int, tol: float = DEFAULT_TOL) -> float:
    return largest_eigenvalue(_matrix_for(family, n), tol).value


def eigenvector_ratio_readings(n: int, tol: float = DEFAULT_TOL) -> dict:
    """Residuals of the printed ratio y_u / y_v for the complement of EP'_n.

    The printed ratio is (m^2 + m + 2) / (m^2 - 2) with one ``m`` written as a
    bare symbol.  Reading ``"own"`` takes it as the complement's own largest
    eigenvalue; reading ``"other"`` takes the eigenvalue of the complement of EP_n.
    """
    g = complement(build_ep(n, "prime"))
    est = largest_eigenvalue(adjacency_matrix(g), tol)
    u, v, _, _ = role_classes("prime", n)
    actual = est.vector[u[0]] / est.vector[v[0]]
    mu2 = est.value
    mu_other = full_lambda_max(PolyFamily.CO_ADJ_EP, n, tol)
    out = {"n": n, "ratio": float(actual)}
    for name, bare in (("own", mu2), ("other", mu_other)):
        predicted = (mu2**2 + bare + 2) / (mu2**2 - 2)
        out[name] = float(abs(predicted - actual) / abs(actual))
    return out


# -- brackets -------------------------------------------------------------------

BRACKET_PAIRS = {
    "adjacency": (PolyFamily.ADJ_EP, PolyFamily.ADJ_EP_PRIME),
    "q_index": (PolyFamily.Q_EP, PolyFamily.Q_EP_PRIME),
    "complement": (PolyFamily.CO_ADJ_EP, PolyFamily.CO_ADJ_EP_PRIME),
}
BRACKET_THRESHOLDS = {"adjacency": 12, "q_index": 27, "complement": 55}


def bracket_points(kind: str, n: int):
    """(s, t); exact Fractions for the rational brackets, floats for the complement."""
    if kind == "adjacency":
        return n - 7 + Fraction(4, (n - 7) ** 2), n - 7 + Fraction(7, (n - 7) ** 2)
    if kind == "q_index":
        return 2 * (n - 7) + Fraction(4, n), 2 * (n - 7) + Fraction(6, n - 7)
    if kind == "complement":
        s = math.sqrt(n * (n - 6))
        return s, s + 1.3
    raise ValueError(f"unknown bracket kind {kind!r}")


@dataclass
class BracketReport:
    kind: str
    n: int
    reading: str
    s: float
    t: float
    f_t: float
    g_s: float
    g_t: float
    passed: bool
    claimed: bool  # n is at or above the stated threshold

    def to_dict(self) -> dict:
        return asdict(self)

    CSV_FIELDS = ("n", "kind", "s", "t", "f_t", "g_s", "g_t", "passed")


def bracket_check(kind: str, n: int, reading: str = "printed") -> BracketReport:
    f_fam, g_fam = BRACKET_PAIRS[kind]
    s, t = bracket_points(kind, n)
    f_t = poly_eval(f_fam, n, t, reading)
    g_s = poly_eval(g_fam, n, s, reading)
    g_t = poly_eval(g_fam, n, t, reading)
    ok = f_t < 0 and g_s < 0 < g_t
    return BracketReport(kind, n, reading, float(s), float(t), float(f_t), float(g_s),
                         float(g_t), bool(ok), n >= BRACKET_THRESHOLDS[kind])


def brackets_to_json(reports: list[BracketReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def brackets_to_csv(reports: list[BracketReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BracketReport.CSV_FIELDS)
    for r in reports:
        w.writerow([r.n, r.kind, f"{r.s:.12g}", f"{r.t:.12g}", f"{r.f_t:.12g}",
                    f"{r.g_s:.12g}", f"{r.g_t:.12g}", r.passed])
    return buf.getvalue()


# -- the three comparison chains ------------------------------------------------

TABLE_MARGIN = 1e-6


def k6_join_radius(n: int) -> float:
    """Spectral radius of K_6 joined with n-6 isolated vertices."""
    return (5 + math.sqrt(24 * n - 119)) / 2


def comparison_row(n: int, margin: float = TABLE_MARGIN, tol: float = DEFAULT_TOL) -> dict:
    """The three eigenvalue chains for EP_n and EP'_n, with a pass flag for each."""
    lam = {fam: full_lambda_max(fam, n, tol) for fam in PolyFamily}
    mu_ep, mu_epp = lam[PolyFamily.ADJ_EP], lam[PolyFamily.ADJ_EP_PRIME]
    q_ep, q_epp = lam[PolyFamily.Q_EP], lam[PolyFamily.Q_EP_PRIME]
    co_ep, co_epp = lam[PolyFamily.CO_ADJ_EP], lam[PolyFamily.CO_ADJ_EP_PRIME]
    k6 = k6_join_radius(n)
    return {
        "n": n,
        "mu_ep": mu_ep,
        "mu_ep_prime": mu_epp,
        "n_minus_7": n - 7,
        "q_ep": q_ep,
        "q_ep_prime": q_epp,
        "two_n_minus_14": 2 * n - 14,
        "mu_co_ep_prime": co_epp,
        "mu_co_ep": co_ep,
        "k6_join_bound": k6,
        "pass_adjacency": mu_ep - mu_epp > margin and mu_epp - (n - 7) > margin,
        "pass_q_index": q_ep - q_epp > margin and q_epp - (2 * n - 14) > margin,
        "pass_complement": co_ep - co_epp > margin and k6 - co_ep > margin,
    }
