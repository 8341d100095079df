"""Tensor and internal-hom decompositions of representable generators.

The tensor of two representables splits over the wide subgroups of the
product: subgroups surjecting onto both factors.  Each wide subgroup is
cut out by a unique triple (kernel on the left, isomorphism of the common
quotient, kernel on the right), which is also how the library enumerates
them.  Internal homs split over virtual homomorphisms.
"""

from repstab import (cyclic, group, trivial_group, all_abelian,
                     cyclic_family, count_epis, enumerate_wide, count_wide,
                     tensor_decompose, enumerate_vhom, hom_decompose,
                     hom_dimension, hom_eval_oracle)
from repstab.subgroups import enumerate_subgroups, quotient

C2, C4 = cyclic(2, 1), cyclic(2, 2)
Z2 = all_abelian(2)
C2INF = cyclic_family(2)

print("Wide subgroups of C4 x C2")
print("-------------------------")
for fam in (Z2, C2INF):
    wides = enumerate_wide(C4, C2, fam)
    print(f"  in {fam.key()}: {len(wides)}")
    for w in wides:
        print(f"    type {w.isomorphism_type.key():8}  "
              f"common quotient {w.spread.key()}")

print()
print("The tensor square of the order-two generator splits as")
for summand in tensor_decompose(C2, C2, Z2):
    print(f"  e[{summand.key()}]")
print("and its dimension at T is |Epi(T,C2)|^2; for T = C2^2:",
      count_epis(group(2, [1, 1]), C2) ** 2, "=",
      sum(count_epis(group(2, [1, 1]), w)
          for w in tensor_decompose(C2, C2, Z2)))

print()
print("Counting identity: #wide subgroups of T x G equals the surjection")
print("count onto every quotient of G, summed over kernels.")
T, G = group(2, [1, 1]), C4
lhs = count_wide(T, G, Z2)
rhs = sum(count_epis(T, quotient(G, n)[0]) for n in enumerate_subgroups(G))
print(f"  T = {T.key()}, G = {G.key()}: {lhs} == {rhs}")

print()
print("Virtual homomorphisms from C2 to C2 (pairs A' normal in A wide,")
print("A' meeting the right factor trivially), with their spreads:")
for v in enumerate_vhom(C2, C2, Z2):
    print(f"  |A| = {v.wide.embedded.order}, |A'| = {v.sub.order},"
          f"  spread {v.spread.key()}")

print()
print("Internal hom dimensions, two independent routes:")
for t in (C2, group(2, [1, 1])):
    d1 = hom_dimension(C2, C2, t, Z2)
    d2 = hom_eval_oracle(C2, C2, t, Z2)
    print(f"  at {t.key()}: decomposition {d1}, tensor-side oracle {d2}")

print()
print("The dual of e[C2] (hom into the unit) splits as:")
for s in hom_decompose(C2, trivial_group(2), Z2):
    print(f"  e[{s.key()}]")
