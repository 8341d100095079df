import math

import pytest
from hypothesis import given, settings, strategies as st

from repstab.groups import (group, cyclic, trivial_group,
                            make_morphism, identity_morphism, is_surjective,
                            enumerate_epis, iter_epis, count_epis,
                            automorphisms, automorphism_generators,
                            quotient_exists, lift_epi, hom_candidate_count)
from repstab.errors import DivisibilityViolation, ShapeMismatch
from repstab.subgroups import image, quotient

from oracles import count_epis_bruteforce, all_matrices, is_onto_bruteforce

C2 = cyclic(2, 1)
C4 = cyclic(2, 2)
C8 = cyclic(2, 3)
C22 = group(2, [1, 1])
C23 = group(2, [1, 1, 1])
C42 = group(2, [2, 1])

SMALL_2GROUPS = [trivial_group(2), C2, C22, C4, C23, C42, C8]


def test_grouptype_invariants():
    g = group(2, [2, 1])
    assert g.order == 8 and g.rank == 2
    assert g.key() == "p2-l2.1"
    assert trivial_group(2).key() == "p2-l"
    assert trivial_group(2) == trivial_group(3)
    with pytest.raises(ValueError):
        group(2, [1, 2])  # not sorted
    with pytest.raises(ValueError):
        group(4, [1])     # not prime


def test_make_morphism_examples():
    f = make_morphism(C4, C2, [[1]])
    assert is_surjective(f)
    with pytest.raises(DivisibilityViolation):
        make_morphism(C2, C4, [[1]])
    g = make_morphism(C42, C4, [[1, 2]])
    assert is_surjective(g)
    with pytest.raises(ShapeMismatch):
        make_morphism(C4, C2, [[1, 0]])


def test_canonical_reduction_idempotent():
    f = make_morphism(C4, C2, [[3]])
    assert f.matrix == ((1,),)
    g = make_morphism(C4, C4, [[5]])
    assert g.matrix == ((1,),)


def test_is_surjective_examples():
    assert is_surjective(make_morphism(C4, C2, [[1]]))
    assert is_surjective(make_morphism(C22, C2, [[1, 1]]))
    assert not is_surjective(make_morphism(C4, C4, [[2]]))


def test_surjectivity_brute_force_agreement():
    # mod-p rank criterion vs image enumeration, plus cokernel triviality
    pairs = [(t, g) for t in SMALL_2GROUPS for g in SMALL_2GROUPS
             if hom_candidate_count(t, g) <= 512]
    for t, g in pairs:
        if g.is_trivial():
            continue
        for mat in all_matrices(t, g):
            f = make_morphism(t, g, mat)
            brute = is_onto_bruteforce(mat, t, g)
            assert is_surjective(f) == brute
            qt, _ = quotient(g, image(f))
            assert (qt.order == 1) == brute


def test_epi_counts_match_bruteforce():
    for t in SMALL_2GROUPS:
        for g in SMALL_2GROUPS:
            if hom_candidate_count(t, g) > 4096:
                continue
            assert count_epis(t, g) == count_epis_bruteforce(t, g), (t, g)
    for t, g in [(group(3, [1, 1]), cyclic(3, 1)),
                 (cyclic(3, 2), cyclic(3, 1)),
                 (group(3, [2, 1]), group(3, [1, 1]))]:
        assert count_epis(t, g) == count_epis_bruteforce(t, g)


def test_enumerate_epis_examples():
    assert len(enumerate_epis(C22, C2)) == 3
    assert enumerate_epis(C2, C4) == []
    p, m, n = 2, 3, 2
    t, g = group(p, [1] * m), group(p, [1] * n)
    expected = math.prod(p ** m - p ** i for i in range(n))
    assert len(enumerate_epis(t, g)) == expected


def test_enumeration_is_lexicographic_and_canonical():
    epis = enumerate_epis(C22, C2)
    keys = [f.sort_key() for f in epis]
    assert keys == sorted(keys)
    for f in epis:
        assert all(0 <= v < 2 for row in f.matrix for v in row)


def test_vectorized_count_agrees_with_iteration():
    # the chunked scan and the python loop must agree above the cutoff
    t, g = group(2, [1] * 4), group(2, [1] * 4)
    assert hom_candidate_count(t, g) > 1 << 14
    from repstab.groups import _count_epis_vectorized
    assert _count_epis_vectorized(t, g) == \
        math.prod(2 ** 4 - 2 ** i for i in range(4))


def test_automorphisms_examples():
    assert len(automorphisms(C22)) == 6
    assert len(automorphisms(C4)) == 2
    assert len(automorphisms(trivial_group(2))) == 1
    assert automorphisms(C4) == enumerate_epis(C4, C4)


@pytest.mark.parametrize("g", [C2, C4, C22, C42, C8, cyclic(3, 2),
                               group(3, [1, 1]), group(2, [2, 2])])
def test_automorphism_generators_generate(g):
    gens = automorphism_generators(g)
    full = {f.matrix for f in automorphisms(g)}
    reached = {identity_morphism(g).matrix}
    frontier = [identity_morphism(g)]
    while frontier:
        f = frontier.pop()
        for psi in gens:
            h = psi @ f
            if h.matrix not in reached:
                reached.add(h.matrix)
                frontier.append(h)
    assert reached == full


def test_composition_associative_and_canonical():
    a = make_morphism(C42, C4, [[1, 2]])
    b = make_morphism(C4, C2, [[1]])
    c = make_morphism(group(2, [2, 2]), C42, [[1, 0], [0, 1]])
    assert ((b @ a) @ c).matrix == (b @ (a @ c)).matrix


def test_epis_are_categorically_epi():
    # precomposition with a surjection is injective on surjection sets
    phi = make_morphism(C23, C22, [[1, 0, 0], [0, 1, 0]])
    seen = {}
    for f in enumerate_epis(C22, C2):
        key = (f @ phi).matrix
        assert key not in seen
        seen[key] = f


def test_lift_epi_fills_cospans():
    # free source dominating: every cospan lifts to a surjection
    fq = group(2, [2, 2])
    for b in [C4, C42, group(2, [2, 2]), C22]:
        for c in [C2, C4, trivial_group(2)]:
            if not quotient_exists(b, c) or not quotient_exists(fq, c):
                continue
            alpha = next(iter_epis(fq, c))
            beta = next(iter_epis(b, c))
            gamma = lift_epi(alpha, beta)
            assert is_surjective(gamma)
            assert (beta @ gamma).matrix == alpha.matrix


def test_lift_epi_many_cospans():
    fq = group(2, [1, 1, 1])
    b = group(2, [1, 1])
    c = C2
    for alpha in enumerate_epis(fq, c)[:5]:
        for beta in enumerate_epis(b, c)[:5]:
            gamma = lift_epi(alpha, beta)
            assert is_surjective(gamma)
            assert (beta @ gamma).matrix == alpha.matrix


@given(st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=30, deadline=None)
def test_quotient_exists_iff_epis_exist(a, b):
    t = group(2, [2, 1][:a] or [1]) if a else trivial_group(2)
    g = group(2, [1] * b) if b else trivial_group(2)
    has = count_epis(t, g) > 0
    assert has == quotient_exists(t, g)
