"""Walk through the extremal graphs: structure, spectra and the Hamilton oracle."""
from specham import build_en, build_ep, ep_family, hamilton, spectral_report
from specham.charpoly import comparison_row
from specham.structure import clique_number

print("order  graph  edges  omega  mu        q         mu(complement)  hamilton")
for n in (10, 14, 20):
    for name, g, kind in (("EN", build_en(n), "path"), ("EP", build_ep(n), "cycle"),
                          ("EP'", build_ep(n, "prime"), "cycle")):
        r = spectral_report(g)
        res = hamilton(g, kind)
        print(f"{n:>5}  {name:<5}  {g.edge_count:>5}  {clique_number(g):>5}  {r.mu:<8.5f}  "
              f"{r.q:<8.5f}  {r.mu_complement:<14.5f}  {kind} {res.status} ({res.nodes} nodes)")

print("\nEP family at order 11:", len(ep_family(11)), "members up to isomorphism")

print("\nEigenvalue chains (margins above zero mean the ordering holds):")
for n in (10, 20, 40, 60):
    row = comparison_row(n)
    print(f"  n={n:>2}  mu(EP)-mu(EP')={row['mu_ep'] - row['mu_ep_prime']:.2e}  "
          f"mu(EP')-(n-7)={row['mu_ep_prime'] - row['n_minus_7']:.2e}  "
          f"q(EP')-(2n-14)={row['q_ep_prime'] - row['two_n_minus_14']:.3f}  "
          f"bound-mu(co-EP)={row['k6_join_bound'] - row['mu_co_ep']:.3f}")
