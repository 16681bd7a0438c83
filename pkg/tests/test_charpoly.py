from fractions import Fraction

import numpy as np
import pytest

from specham.charpoly import (BRACKET_THRESHOLDS, PolyFamily, QuotientError, bracket_check,
                              bracket_points, brackets_to_csv, brackets_to_json,
                              characteristic_polynomial, coefficients, compare_with_quotient,
                              comparison_row, eigenvector_ratio_readings, full_lambda_max,
                              poly_eval, quotient_matrix, reduced_charpoly, residual_check,
                              role_classes)
from specham.extremal import build_ep
from specham.graph import complement
from specham.spectral import adjacency_matrix, signless_laplacian

TYPO_FAMILIES = {PolyFamily.Q_EP_PRIME, PolyFamily.CO_ADJ_EP}


def test_faddeev_leverrier_against_numpy(rng):
    for _ in range(200):
        k = rng.randint(1, 6)
        m = np.array([[rng.randint(-5, 5) for _ in range(k)] for _ in range(k)])
        expected = [int(round(c)) for c in np.poly(m)[::-1]]
        assert characteristic_polynomial(m) == expected


def test_family_metadata():
    assert PolyFamily.Q_EP_PRIME.variant == "prime"
    assert PolyFamily.CO_ADJ_EP.kind == "complement_adjacency"
    assert PolyFamily.of("standard", "signless_laplacian") is PolyFamily.Q_EP
    with pytest.raises(ValueError):
        PolyFamily.of("other", "adjacency")


@pytest.mark.parametrize("n", [10, 11, 12, 17, 25])
def test_role_classes(n):
    for variant in ("standard", "prime"):
        u, v, w, z = role_classes(variant, n)
        g = build_ep(n, variant)
        assert sorted(u + v + w + z) == list(range(n))
        assert all(g.degree(x) == 2 for x in u)
        assert len(w) + len(z) == n - 6


@pytest.mark.parametrize("n", [10, 11, 13, 20, 31])
def test_quotient_spectrum_is_part_of_full_spectrum(n):
    for fam in PolyFamily:
        q = quotient_matrix(fam.variant, fam.kind, n)
        g = build_ep(n, fam.variant)
        full = {"adjacency": adjacency_matrix(g), "signless_laplacian": signless_laplacian(g),
                "complement_adjacency": adjacency_matrix(complement(g))}[fam.kind]
        spectrum = np.linalg.eigvalsh(full)
        for root in np.roots(q.charpoly()[::-1]):
            assert np.min(np.abs(spectrum - root.real)) < 1e-6
        assert abs(q.largest_eigenvalue() - spectrum[-1]) < 1e-9
        assert abs(full_lambda_max(fam, n) - spectrum[-1]) < 1e-9


@pytest.mark.parametrize("n", [10, 12, 20, 40])
def test_class_degrees(n):
    # u, v, w, z: clique vertices with outside neighbours have degree n - 5
    for variant in ("standard", "prime"):
        q = quotient_matrix(variant, "adjacency", n)
        assert q.degrees[0] == 2 and q.degrees[2] == n - 5 and q.degrees[3] == n - 7


def test_quotient_argument_checks():
    with pytest.raises(ValueError):
        quotient_matrix("standard", "laplacian", 12)
    with pytest.raises(ValueError):
        quotient_matrix("standard", "adjacency", 9)
    assert issubclass(QuotientError, ValueError)


def test_reduced_charpoly_keeps_largest_root():
    q = quotient_matrix("standard", "complement_adjacency", 20)
    coeffs = reduced_charpoly(q, 3)
    assert len(coeffs) == 4
    lam = q.largest_eigenvalue()
    assert abs(sum(c * lam**k for k, c in enumerate(coeffs))) < 1e-6 * lam**3


def test_poly_eval_exact():
    assert poly_eval(PolyFamily.ADJ_EP, 10, 0) == 3
    assert poly_eval(PolyFamily.CO_ADJ_EP, 10, -1) == -7
    assert isinstance(poly_eval(PolyFamily.ADJ_EP, 12, Fraction(1, 3)), Fraction)
    with pytest.raises(ValueError):
        poly_eval(PolyFamily.ADJ_EP, 9, 1.0)


@pytest.mark.parametrize("n", range(10, 41))
def test_corrected_forms_match_quotients(n):
    for fam in PolyFamily:
        assert compare_with_quotient(fam, n, "corrected") is None
        res = residual_check(fam, n, full_lambda_max(fam, n), "corrected")
        assert res.passed, res


@pytest.mark.parametrize("n", [10, 20, 40])
def test_printed_forms(n):
    for fam in PolyFamily:
        report = compare_with_quotient(fam, n, "printed")
        if fam not in TYPO_FAMILIES:
            assert report is None
    q = compare_with_quotient(PolyFamily.Q_EP_PRIME, n, "printed")
    assert q.difference[0] == -8 * (n - 8) and not any(q.difference[1:])
    co = compare_with_quotient(PolyFamily.CO_ADJ_EP, n, "printed")
    assert co.difference == [0, 8, 0, 0]
    assert "CoAdjEP" in co.describe()


def test_coefficients_are_integers():
    for fam in PolyFamily:
        assert all(isinstance(c, int) for c in coefficients(fam, 15))


def test_bare_symbol_reading():
    r = eigenvector_ratio_readings(20)
    assert r["own"] < 1e-9 < r["other"]


def test_bracket_points():
    s, t = bracket_points("adjacency", 17)
    assert s == 10 + Fraction(4, 100) and t == 10 + Fraction(7, 100)
    s, t = bracket_points("complement", 55)
    assert abs(t - s - 1.3) < 1e-12
    with pytest.raises(ValueError):
        bracket_points("other", 20)


def test_q_index_brackets_pass():
    for n in range(BRACKET_THRESHOLDS["q_index"], 201):
        assert bracket_check("q_index", n).passed


def test_adjacency_brackets_measured_range():
    # the upper bracket point drops below mu(EP_n) from n = 17 on
    assert all(bracket_check("adjacency", n).passed for n in range(12, 17))
    assert not bracket_check("adjacency", 17).passed
    r = bracket_check("adjacency", 20)
    assert r.f_t > 0 and r.claimed


def test_bracket_serialisation():
    reports = [bracket_check("q_index", n) for n in (27, 28)]
    assert '"kind": "q_index"' in brackets_to_json(reports)
    lines = brackets_to_csv(reports).strip().splitlines()
    assert lines[0].startswith("n,kind") and len(lines) == 3


def test_comparison_rows():
    for n in (10, 11, 30, 60):
        row = comparison_row(n)
        assert row["pass_adjacency"] and row["pass_q_index"] and row["pass_complement"]
        assert row["mu_ep"] > row["mu_ep_prime"] > row["n_minus_7"]
