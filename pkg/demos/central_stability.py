"""Bounded-index recovery, stability thresholds, and growth orders.

A finitely presented functor is recovered at every group by the colimit
of its values on bounded-index quotients once the bound passes the
presentation degree; restricted to chains of elementary abelian groups its
structure maps become injective and jointly surjective from explicit
thresholds on; and its growth is measured by exact ratio tables.
"""

from repstab import (cyclic, group, all_abelian, elementary, free_object,
                     evaluate_dim, truncate_tau, central_stability_degree,
                     stability_scan, omega_order, qstar_check,
                     trans_bij_check, cyclic_family, torsion_example_a)

Z2 = all_abelian(2)
C4 = cyclic(2, 2)

print("Truncation of a representable generator")
print("---------------------------------------")
e4 = free_object(Z2, C4)
for n in (1, 2, 4, 8):
    sp, counit = truncate_tau(e4, n, group(2, [2, 1]))
    print(f"  bound {n}: recovered dimension {sp.dim} "
          f"(value has {evaluate_dim(e4, group(2, [2, 1]))})")

print()
x = torsion_example_a(3)
rep = central_stability_degree(x, 27)
print(f"Central stability degree of the p=3 example at bound 27: "
      f"{rep.thresholds['degree']}")
print(f"  {rep.verdicts[0]}")

print()
print("Stability scan over elementary abelian 3-groups, rank <= 4")
scan = stability_scan(x, elementary(3), 4)
for key in sorted(scan.table):
    print(f"  {key:16} {scan.table[key]}")
for verdict in scan.verdicts:
    print(f"  -> {verdict}")

print()
print("Growth ratios of e[C8] in the elementary family at n = 8")
est = omega_order(free_object(elementary(2), group(2, [1, 1, 1])), 8,
                  elementary(2), 7)
for g, d, delta, ratio in est.samples:
    print(f"  {g.key():22} dim {d:9}  ratio {ratio} ~ {float(ratio):.4f}")

print()
print("Values factor through the bounded-quotient reflection:")
out = qstar_check(free_object(Z2, cyclic(2, 1)), 2, 16)
print(f"  e[C2] against bound 2 up to order 16: ok = {out['ok']}")

print()
print("Noetherianity criterion data for cyclic families:")
for p in (2, 3):
    out = trans_bij_check(cyclic_family(p), 27)
    print(f"  p = {p}: transitive and two-point-stable = {out['ok']}")
