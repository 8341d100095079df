import pytest

from repstab.groups import cyclic, trivial_group
from repstab.families import all_abelian, cyclic_family, truncated
from repstab.presentations import (free_object, evaluate_dim,
                                   builtin_to_presentation, BuiltinObject,
                                   torsion_example_a)
from repstab.resolutions import resolution
from repstab.errors import DepthExceeded

C2 = cyclic(2, 1)
C4 = cyclic(2, 2)


def _counit_dims(levels, x, bound):
    """Evaluate the level-0 cover and compare against x."""
    fam = truncated(x.family, bound) if x.family.kind != "TruncatedLeq" \
        else x.family
    from repstab.groups import count_epis
    out = {}
    for g in fam.members(bound):
        out[g] = sum(count_epis(g, t) for t in levels[0].generators)
    return out


def test_coinduced_minimal_resolution():
    c2inf = cyclic_family(2)
    t1 = builtin_to_presentation(
        BuiltinObject("t_triv", c2inf, group=trivial_group(2)), 8)
    levels = resolution(t1, 8, 5, minimal=True)
    assert [[g.key() for g in lv.generators] for lv in levels] == \
        [["p2-l"], ["p2-l1"]]
    # no isomorphism components anywhere
    for lv in levels[1:]:
        for col in lv.differential:
            for entry in col:
                if entry is None:
                    continue
                for mor, _c in entry.terms:
                    assert mor.source.order > mor.target.order


def test_generator_resolves_in_degree_zero():
    e = free_object(all_abelian(2), C4)
    levels = resolution(e, 8, 4, minimal=True)
    assert len(levels) == 1
    assert [g.key() for g in levels[0].generators] == ["p2-l2"]


def test_counit_covers_values():
    c2inf = cyclic_family(2)
    t1 = builtin_to_presentation(
        BuiltinObject("t_triv", c2inf, group=trivial_group(2)), 8)
    levels = resolution(t1, 8, 5, minimal=True)
    cover = _counit_dims(levels, t1, 8)
    for g, d in cover.items():
        assert d >= evaluate_dim(t1, g)


def test_base_grows_when_the_bottom_is_rigid():
    # the cover is an isomorphism at the base order when the value there
    # carries no automorphism twist, and the base then climbs; with plain
    # representable covers this holds at small bounds where each level
    # bottoms out on a rigid value
    c2inf = cyclic_family(2)
    t1 = builtin_to_presentation(
        BuiltinObject("t_triv", c2inf, group=trivial_group(2)), 8)
    for bound, minimal in ((2, False), (8, True)):
        levels = resolution(t1, bound, 5, minimal=minimal)
        bases = [min(g.order for g in lv.generators) for lv in levels]
        assert bases[0] == 1
        for k in range(1, len(bases)):
            assert bases[k] >= bases[0] + k


def test_depth_guard():
    c2inf = cyclic_family(2)
    t1 = builtin_to_presentation(
        BuiltinObject("t_triv", c2inf, group=trivial_group(2)), 8)
    with pytest.raises(DepthExceeded):
        resolution(t1, 8, 0, minimal=True)


def test_twisted_residues_are_rejected_not_faked():
    # with plain representable covers a minimal resolution of an object
    # whose residues carry automorphism twists cannot exist; the library
    # refuses rather than emitting a resolution with isomorphism
    # components
    x = torsion_example_a(3)
    with pytest.raises(DepthExceeded):
        resolution(x, 27, 6, minimal=True)
