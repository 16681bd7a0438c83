"""Evaluate the theorem checkers on their sharpness witnesses and on near misses."""
from specham import build_en, build_ep, check
from specham.extremal import fini_ham_exception, fini_trace_exception
from specham.scan import exhaustive_scan, random_scan

cases = [
    (fini_trace_exception(9), "FiNi_trace"),
    (fini_ham_exception(9), "FiNi_ham"),
    (build_en(18), "Traceable_q"),
    (build_en(18).add_edges([(3, 15)]), "Traceable_q"),
    (build_ep(33), "Ham_mu"),
    (build_ep(33).add_edges([(3, 30)]), "Ham_mu"),
    (build_en(14), "L_eG_EPn"),
    (build_ep(40), "L_eG_EPn_ham"),
]
for g, tid in cases:
    v = check(g, tid)
    print(f"{tid:<14} n={v.n:<3} e={g.edge_count:<4} {v.status:<15} {v.reason}")

print("\nExhaustive scan, order 6:", exhaustive_scan(6, "FiNiC_ham").to_dict())
print("Random scan:", random_scan("L_eG(4)", range(8, 13), 200, seed=2,
                                  mode="closure_perturbed").to_dict())
