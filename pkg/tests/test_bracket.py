import pytest

from pretzelarc.bracket import bracket, grid_state_sum, jones, jones_from_F
from pretzelarc.grid import GridDiagram, mirror_grid, to_planar, translate_columns
from pretzelarc.laurent import Laurent1, Laurent2
from pretzelarc.pretzel import PretzelSpec
from pretzelarc.skein import kauffman_F

TREFOIL = GridDiagram((2, 3, 4, 5, 1), (4, 5, 1, 2, 3))
UNKNOT2 = GridDiagram((1, 2), (2, 1))
KINK_NEG = GridDiagram((2, 3, 1), (3, 1, 2))  # one-crossing unknot, sign -1
HOPF = GridDiagram((1, 2, 3, 4), (3, 4, 1, 2))


def test_bracket_unknot():
    assert bracket(to_planar(UNKNOT2)) == Laurent1.one()


def test_bracket_single_kink():
    pd = to_planar(KINK_NEG)
    assert pd.crossing_count == 1 and pd.crossings[0].sign == -1
    assert bracket(pd) == Laurent1({-3: -1})
    assert bracket(to_planar(mirror_grid(KINK_NEG))) == Laurent1({3: -1})


def test_bracket_hopf():
    assert bracket(to_planar(HOPF)) == Laurent1({4: -1, -4: -1})


def test_bracket_crossing_limit():
    with pytest.raises(ValueError, match="too many crossings"):
        bracket(to_planar(TREFOIL), max_crossings=3)


def test_bracket_resolution_order_independence():
    # summing in reversed crossing order gives the same polynomial
    grids = [TREFOIL, HOPF, KINK_NEG, GridDiagram((1, 4, 3, 2), (3, 2, 1, 4)),
             GridDiagram((2, 3, 4, 5, 1), (5, 1, 2, 3, 4))]
    for g in grids:
        pd = to_planar(g)
        rev = type(pd)(
            n_pieces=pd.n_pieces,
            crossings=tuple(reversed(pd.crossings)),
            corner_joins=pd.corner_joins,
        )
        assert bracket(pd) == bracket(rev)


def test_jones_unknot_and_trefoil():
    assert jones(UNKNOT2) == Laurent1.one()
    left = jones(TREFOIL)
    assert left == Laurent1({-4: 1, -12: 1, -16: -1})


def test_jones_matches_skein_engine_on_trefoils():
    left = jones_from_F(kauffman_F(PretzelSpec((1, 1, 1))))
    assert jones(TREFOIL) == left
    right = jones_from_F(kauffman_F(PretzelSpec((-1, -1, -1))))
    assert jones(mirror_grid(TREFOIL)) == right
    assert left != right


def test_jones_mirror_inverts_variable():
    for g in (TREFOIL, KINK_NEG):
        assert jones(mirror_grid(g)) == jones(g).reciprocal_variable()


def test_jones_invariant_under_column_translation():
    for shift in range(1, 5):
        assert jones(translate_columns(TREFOIL, shift)) == jones(TREFOIL)


def test_jones_invariant_under_stabilization():
    # split column 1's vertical right before its X: insert a new column
    # and row making a length-one jog (a stabilization of the diagram).
    g = TREFOIL

    def stabilize(g):
        # split column 1's X corner: add a row above it and a unit-height
        # column in front carrying the jog
        r = g.xs[0]

        def lift(v):
            return v + 1 if v > r else v

        xs = [lift(v) for v in g.xs]
        os_ = [lift(v) for v in g.os]
        xs[0] = r + 1
        return GridDiagram(tuple([r] + xs), tuple([r + 1] + os_))

    h = stabilize(g)
    from pretzelarc.grid import component_count, validate

    assert validate(h) == [] and component_count(h) == 1
    assert h.size == g.size + 1
    assert jones(h) == jones(g)


def test_jones_rejects_links():
    with pytest.raises(ValueError, match="single-component"):
        jones(HOPF)


def test_jones_from_F_unknot():
    assert jones_from_F(Laurent2.one()) == Laurent1.one()


def test_jones_from_F_rejects_negative_z():
    with pytest.raises(ValueError, match="min z-degree"):
        jones_from_F(Laurent2({(0, -1): 1}))


def test_state_sum_result():
    res = grid_state_sum(TREFOIL)
    assert res.crossing_count == 4
    assert res.writhe == -4
    assert res.bracket == bracket(to_planar(TREFOIL))
