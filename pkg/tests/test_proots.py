from hypothesis import given, settings, strategies as st

from levelscope.ideals import HomIdeal, equals
from levelscope.multipoly import mul, parse_poly, power
from levelscope.proots import decompose, roots_ideal, roots_one_of_ideal
from test_multipoly import polys

import pytest


def P(text, p):
    return parse_poly(text, p)


def test_decompose_examples():
    dec = decompose(P("x^3*y^2 + x", 3), 1)
    assert {a: str(g) for a, g in dec.components.items()} == {(0, 2, 0): "x", (1, 0, 0): "1"}
    for p in (3, 5, 7):
        assert {a: str(g) for a, g in decompose(P(f"x^{p - 1}", p), 1).components.items()} == {(p - 1, 0, 0): "1"}
        assert {a: str(g) for a, g in decompose(P(f"x^{p}", p), 1).components.items()} == {(0, 0, 0): "x"}
    with pytest.raises(ValueError):
        decompose(P("x", 3), 0)


def test_roots_ideal_examples():
    f = P("y^2*z^3 - x^5 - 2*z^5", 11)
    assert str(roots_ideal(power(f, 10), 1)) == "(z^2, x*z, x^3)"
    for p in (3, 5, 13):
        assert roots_ideal(P(f"x^{p - 1}", p), 1).is_unit()
        assert str(roots_ideal(P(f"x^{2 * p}", p), 1)) == "(x^2)"


def test_roots_one_of_ideal_examples():
    for p in (3, 5, 7):
        k = HomIdeal([P(f"x^{p}", p), P(f"y^{p}", p)], p, 3)
        assert str(roots_one_of_ideal(k)) == "(y, x)"
        assert roots_one_of_ideal(HomIdeal.unit(p, 3)).is_unit()
        assert str(roots_one_of_ideal(HomIdeal([P(f"x^{p + 1}", p)], p, 3))) == "(x)"


prime_and_e = st.sampled_from([(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2)])


@settings(max_examples=60, deadline=None)
@given(prime_and_e.flatmap(lambda pe: st.tuples(st.just(pe[1]), polys(pe[0], max_deg=12, max_terms=8))))
def test_reconstruction(args):
    e, g = args
    assert decompose(g, e).reconstruct() == g


@settings(max_examples=60, deadline=None)
@given(prime_and_e.flatmap(lambda pe: st.tuples(st.just(pe[1]), polys(pe[0], max_deg=15, homogeneous=True, max_terms=8))))
def test_components_homogeneous_with_degree_formula(args):
    e, g = args
    q = g.p**e
    for alpha, comp in decompose(g, e).components.items():
        assert comp.is_homogeneous()
        assert comp.degree() == (g.degree() - sum(alpha)) // q
        assert (g.degree() - sum(alpha)) % q == 0


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5]).flatmap(lambda p: polys(p, max_deg=12, homogeneous=True, max_terms=6)))
def test_level_composition(g):
    # I_2(g) = I_1(I_1(g))
    direct = roots_ideal(g, 2)
    via_one = roots_one_of_ideal(roots_ideal(g, 1))
    assert equals(direct, via_one)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5]).flatmap(
    lambda p: st.tuples(st.lists(polys(p, max_deg=8, homogeneous=True, max_terms=4), min_size=1, max_size=3),
                        st.lists(polys(p, max_deg=3, homogeneous=True, max_terms=3), min_size=1, max_size=3))))
def test_generating_set_independence(args):
    gens, mults = args
    p = gens[0].p
    k = HomIdeal(gens, p, 3)
    # add homogeneous R-combinations of the generators: same ideal, bigger generating set
    extra = []
    for g in gens:
        for m in mults:
            extra.append(mul(m, g))
    bigger = HomIdeal(list(gens) + extra, p, 3)
    assert equals(k, bigger)
    assert equals(roots_one_of_ideal(k), roots_one_of_ideal(bigger))
