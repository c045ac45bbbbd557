import pytest

from pretzelarc.pretzel import (
    FamilySpec,
    PretzelSpec,
    crossing_number,
    is_knot,
    mirror,
    parse_pretzel,
    permutations,
    standard_writhe,
)


def test_parse_and_print():
    assert parse_pretzel("P(-2,3,3)") == PretzelSpec((-2, 3, 3))
    assert parse_pretzel("P( -2 , 3 ,3 )") == PretzelSpec((-2, 3, 3))
    assert str(PretzelSpec((-2, 3, 3))) == "P(-2,3,3)"
    assert parse_pretzel("P(5)") == PretzelSpec((5,))
    for bad in ("P(", "P()", "Q(1,2)", "P(1,,2)", "P(1 2)"):
        with pytest.raises(ValueError):
            parse_pretzel(bad)


def test_spec_validation():
    with pytest.raises(ValueError):
        PretzelSpec((1, 0, 2))
    with pytest.raises(ValueError):
        PretzelSpec(())


def test_is_knot():
    assert is_knot(PretzelSpec((-2, 3, 3)))
    assert not is_knot(PretzelSpec((-2, 2, 3)))
    assert is_knot(PretzelSpec((-3, 4, 5)))
    with pytest.raises(ValueError):
        is_knot(PretzelSpec((1, 1)))


def test_is_knot_permutation_invariant():
    for f in (FamilySpec(2, 3, 3), FamilySpec(3, 4, 5), FamilySpec(5, 5, 7)):
        values = {is_knot(s) for s in permutations(f)}
        assert values == {True}


def test_component_counts():
    assert PretzelSpec((-2, 3, 3)).component_count() == 1
    assert PretzelSpec((-2, 2, 4)).component_count() == 3
    assert PretzelSpec((2, 2, 3)).component_count() == 2


def test_crossing_number():
    assert crossing_number(FamilySpec(2, 3, 3)) == 8
    assert crossing_number(FamilySpec(2, 3, 7)) == 12
    assert crossing_number(FamilySpec(3, 4, 7)) == 14


def test_family_validation():
    with pytest.raises(ValueError):
        FamilySpec(2, 3, 2)  # r < q
    with pytest.raises(ValueError):
        FamilySpec(2, 2, 4)  # two even
    with pytest.raises(ValueError):
        FamilySpec(1, 3, 3)


def test_permutations():
    specs = permutations(FamilySpec(2, 3, 5))
    assert len(specs) == 6
    assert PretzelSpec((3, -2, 5)) in specs
    assert len(permutations(FamilySpec(3, 3, 3))) == 3
    assert len(permutations(FamilySpec(3, 4, 5))) == 6


def test_writhe_trefoils():
    # With the band convention used here (positive band: the strand from
    # bottom-left to top-right passes over), P(1,1,1) is the left-handed
    # trefoil: all three crossing signs are negative under the trace.
    assert standard_writhe(PretzelSpec((1, 1, 1))) == -3
    assert standard_writhe(PretzelSpec((-1, -1, -1))) == 3


def test_writhe_mirror_antisymmetry():
    for twists in [(1, 1, 1), (-2, 3, 3), (-3, 4, 5), (5, -3, 2), (-2, 2, 4), (4,)]:
        s = PretzelSpec(twists)
        assert standard_writhe(mirror(s)) == -standard_writhe(s)


def test_writhe_single_band():
    # One positive half-twist closes to an unknot diagram with one
    # negative-writhe curl.
    assert standard_writhe(PretzelSpec((1,))) == -1
    assert standard_writhe(PretzelSpec((3,))) == -3


def test_mirror():
    assert mirror(PretzelSpec((-2, 3, 3))) == PretzelSpec((2, -3, -3))
