import random

import pytest

from pretzelarc.laurent import Laurent1, Laurent2, PolySummary

A = Laurent2.monomial
DELTA = Laurent2({(1, -1): 1, (0, 0): -1, (-1, -1): 1})


def test_add_inverse_is_zero():
    x = A(1, 1, 0)
    assert (x + (-x)).is_zero()
    assert (x + (-x)).terms == {}


def test_add_cancellation():
    # (z^-1 a - 1 + z^-1 a^-1) + 1 = z^-1 a + z^-1 a^-1
    got = DELTA + Laurent2.one()
    assert got == Laurent2({(1, -1): 1, (-1, -1): 1})


def test_add_disjoint_support():
    x = A(1, -1, 3)
    y = Laurent2({(-2, 2): 1, (-3, 1): -2})
    assert (x + y).terms == {(-1, 3): 1, (-2, 2): 1, (-3, 1): -2}


def test_mul_identity_and_inverse():
    x = Laurent2({(2, 1): 3, (-1, 0): -1})
    assert x * Laurent2.one() == x
    assert A(1, 1, 0) * A(1, -1, 0) == Laurent2.one()


def test_mul_delta_squared():
    # expanded by hand: (z^-1 a - 1 + z^-1 a^-1)^2
    expected = Laurent2(
        {
            (2, -2): 1,
            (1, -1): -2,
            (0, 0): 1,
            (0, -2): 2,
            (-1, -1): -2,
            (-2, -2): 1,
        }
    )
    assert DELTA * DELTA == expected


def test_mono_mul():
    assert Laurent2.one().mono_mul(1, -4, 0) == A(1, -4, 0)
    x = Laurent2({(3, 2): 5, (0, -1): 1})
    assert x.mono_mul(1, 0, 0) == x
    y = Laurent2({(1, 0): 1, (0, 1): 1})  # a + z
    assert y.mono_mul(2, 1, 1) == Laurent2({(2, 1): 2, (1, 2): 2})
    with pytest.raises(ValueError):
        y.mono_mul(0, 1, 1)


def test_spread_a():
    assert DELTA.spread_a() == 2
    assert A(1, -7, 0).spread_a() == 0
    with pytest.raises(ValueError):
        Laurent2.zero().spread_a()


def test_summarize_two_sided_example():
    # z(z^2-1)a^-1 + z^2 a^-2 - 2z a^-3
    x = Laurent2({(-1, 3): 1, (-1, 1): -1, (-2, 2): 1, (-3, 1): -2})
    s = x.summarize()
    assert (s.max_a, s.top_coeff, s.top_zpow) == (-1, 1, 3)
    assert (s.min_a, s.bot_coeff, s.bot_zpow) == (-3, -2, 1)
    assert s.bracket_notation() == "[<z^3>a^-1, <-2z>a^-3]"


def test_summarize_monomial_and_zero():
    s = A(1, 2, 0).summarize()
    assert (s.max_a, s.top_coeff, s.top_zpow) == (2, 1, 0)
    assert (s.min_a, s.bot_coeff, s.bot_zpow) == (2, 1, 0)
    with pytest.raises(ValueError):
        Laurent2.zero().summarize()


def test_summary_validation():
    with pytest.raises(ValueError):
        PolySummary(max_a=0, top_coeff=1, top_zpow=0, min_a=1, bot_coeff=1, bot_zpow=0)
    with pytest.raises(ValueError):
        PolySummary(max_a=1, top_coeff=0, top_zpow=0, min_a=0, bot_coeff=1, bot_zpow=0)


def test_substitute_monomials():
    a_img = Laurent1({-3: -1})  # -q^-3
    z_img = Laurent1({1: 1, -1: 1})  # q + q^-1
    assert A(1, 2, 0).substitute(a_img, z_img) == Laurent1({-6: 1})
    assert A(1, 0, 1).substitute(a_img, z_img) == z_img


def test_substitute_rejects_negative_z_with_nonunit_image():
    x = Laurent2({(0, -1): 1})
    z_img = Laurent1({1: 1, -1: 1})
    with pytest.raises(ValueError, match="negative z-power with non-unit image"):
        x.substitute(Laurent1({-3: -1}), z_img)
    # unit monomial z-image is fine
    assert x.substitute(Laurent1({-3: -1}), Laurent1({1: 1})) == Laurent1({-1: 1})


def _random_poly(rng, max_terms=5):
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        terms[(rng.randint(-6, 6), rng.randint(-6, 6))] = rng.randint(-9, 9)
    return Laurent2(terms)


def test_ring_axioms_random():
    rng = random.Random(20240811)
    for _ in range(200):
        x, y, z = (_random_poly(rng) for _ in range(3))
        assert x + y == y + x
        assert (x + y) + z == x + (y + z)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_spread_additive_under_mul():
    rng = random.Random(7)
    checked = 0
    while checked < 60:
        x, y = _random_poly(rng), _random_poly(rng)
        if x.is_zero() or y.is_zero():
            continue
        assert (x * y).max_a() == x.max_a() + y.max_a()
        assert (x * y).min_a() == x.min_a() + y.min_a()
        assert (x * y).spread_a() == x.spread_a() + y.spread_a()
        checked += 1


def test_summarize_stable_under_a_shift():
    rng = random.Random(99)
    for _ in range(40):
        x = _random_poly(rng)
        if x.is_zero():
            continue
        i = rng.randint(-5, 5)
        s0 = x.summarize()
        s1 = x.mono_mul(1, i, 0).summarize()
        assert (s1.max_a, s1.min_a) == (s0.max_a + i, s0.min_a + i)
        assert (s1.top_coeff, s1.top_zpow) == (s0.top_coeff, s0.top_zpow)
        assert (s1.bot_coeff, s1.bot_zpow) == (s0.bot_coeff, s0.bot_zpow)


def test_text_rendering():
    assert DELTA.to_text() == "a*z^-1 - 1 + a^-1*z^-1"
    assert Laurent2.zero().to_text() == "0"
    assert Laurent2({(0, 2): -3, (2, 0): 1}).to_text() == "a^2 - 3*z^2"
    assert Laurent1({2: 1, -2: -1}).to_text("q") == "q^2 - q^-2"


def test_json_rendering_sorted_and_stable():
    x = Laurent2({(1, -1): 1, (-1, -1): 1, (0, 0): -1})
    assert x.to_json_terms() == [[-1, -1, 1], [0, 0, -1], [1, -1, 1]]
    assert x.to_json_terms() == Laurent2(x.terms).to_json_terms()


def test_laurent1_pow_and_reciprocal():
    q = Laurent1({1: 1})
    assert q**0 == Laurent1.one()
    assert (Laurent1({-3: -1}) ** -2) == Laurent1({6: 1})
    with pytest.raises(ValueError):
        Laurent1({1: 1, -1: 1}) ** -1
    assert Laurent1({3: 2, -1: 5}).reciprocal_variable() == Laurent1({-3: 2, 1: 5})
