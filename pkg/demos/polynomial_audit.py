"""Compare the closed-form characteristic polynomials with quotient matrices."""
from specham.charpoly import (PolyFamily, bracket_check, compare_with_quotient,
                              eigenvector_ratio_readings, quotient_matrix)

q = quotient_matrix("standard", "adjacency", 20)
print("classes u, v, w, z of EP_20 have sizes", q.sizes)
print("their degrees are", q.degrees, "(the w class has degree n - 5)")
print("quotient adjacency matrix:\n", q.matrix)

print("\nPrinted forms versus the quotient characteristic polynomial at n = 20:")
for fam in PolyFamily:
    report = compare_with_quotient(fam, 20, "printed")
    print(f"  {fam.value:<13}", "matches" if report is None else report.describe())

print("\nRatio of eigenvector entries in the complement of EP'_20:",
      eigenvector_ratio_readings(20))

print("\nBracket signs (f(t) < 0 and g(s) < 0 < g(t) is a pass):")
for kind, orders in (("adjacency", (12, 16, 17, 40)), ("q_index", (27, 100)),
                     ("complement", (55, 200))):
    for n in orders:
        r = bracket_check(kind, n)
        print(f"  {kind:<10} n={n:>3}  f(t)={r.f_t:+.3e}  g(s)={r.g_s:+.3e}  "
              f"g(t)={r.g_t:+.3e}  {'pass' if r.passed else 'FAIL'}")
