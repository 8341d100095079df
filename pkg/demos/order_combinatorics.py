"""Ordered labeled sets, good pairs, and framings of p-groups.

The combinatorial layer behind the noetherianity results: surjections of
ordered sets whose minimum-preimage section is monotone, the invariant
triple that makes their category a well-quasi-order, and the
factorization of every framing of a p-group through finitely many
tautological ones.
"""

from repstab import (cyclic, group, ols, dagger,
                     find_good_pair, ldag_invariants,
                     ldag_construct_morphism, tautological_framings,
                     Framing, factor_framing, is_tautological)

print("Minimum-preimage sections")
print("-------------------------")
for values in ((0, 1, 0), (0, 1), (1, 0)):
    sec, monotone = dagger(values)
    print(f"  surjection {values}: section {sec}, monotone: {monotone}")

print()
print("Good pairs under the componentwise order on pairs:")
seq = [(2, 0), (1, 1), (0, 2), (3, 3)]
print(f"  {seq} -> {find_good_pair(seq)}")
print(f"  [(2,0),(1,1),(0,2)] -> {find_good_pair([(2,0),(1,1),(0,2)])}")

print()
print("Invariant triples and the comparison-driven construction:")
x, y = ols(2, 1), ols(2, 2, 1)
print(f"  {x}: (first, min, tail-word) = {ldag_invariants(x)}")
print(f"  {y}: (first, min, tail-word) = {ldag_invariants(y)}")
mor = ldag_construct_morphism(x, y)
print(f"  comparable, so a labeled surjection {y} -> {x} exists: "
      f"{mor.values}")

print()
print("Framings of the order-two group")
print("-------------------------------")
c2 = cyclic(2, 1)
for f in tautological_framings(c2):
    print(f"  ordered subset {f.assignment} with labels "
          f"{f.domain.labels}")

print()
print("Factorization of a redundant framing through a tautological one:")
f = Framing(ols(1, 1, 1), c2, ((1,), (1,), (0,)))
mor, taut = factor_framing(f)
print(f"  assignment {f.assignment} collapses via {mor.values} onto "
      f"{taut.assignment}  (tautological: {is_tautological(taut)})")

print()
print("A free-module framing of the four-element group:")
c22 = group(2, [1, 1])
f2 = Framing(ols(1, 2, 1), c22, ((1, 0), (1, 1), (0, 1)))
mor2, taut2 = factor_framing(f2)
print(f"  {f2.assignment} with labels {f2.domain.labels} factors via "
      f"{mor2.values} through {taut2.assignment}")
