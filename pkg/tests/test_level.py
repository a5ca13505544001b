import random

import pytest
from hypothesis import given, settings, strategies as st

from levelscope.errors import ResourceError
from levelscope.fields import FpMatrix
from levelscope.ideals import HomIdeal, equals
from levelscope.level import extract_operator, hasse_invariant, level_chain, level_direct
from levelscope.multipoly import MultiPoly, linear_change, parse_poly, power
from oracles import eval_poly
from test_multipoly import invertible, polys


def P(t, p):
    return parse_poly(t, p)


QUINTIC = "y^2*z^3 - x^5 - 2*z^5"


def test_quintic_levels():
    r = level_chain(P(QUINTIC, 11))
    assert r.level == 2 and not r.capped
    assert [str(j) for j in r.strict_chain] == ["(z^2, x*z, x^3)"]
    r = level_chain(P(QUINTIC, 13))
    assert r.level == 4
    assert all(not j.is_unit() for j in r.strict_chain)
    # strictly decreasing before stabilising
    for a, b in zip(r.strict_chain, r.strict_chain[1:]):
        assert a.includes(b) and not b.includes(a)


def test_level_one_and_zero():
    assert level_chain(P("x", 5)).level == 1
    assert level_chain(P("y^2*z - x^3 - x*z^2 - z^3", 5)).level == 1
    with pytest.raises(ValueError):
        level_chain(MultiPoly.zero(5, 3))


def test_capped():
    r = level_chain(P(QUINTIC, 13), e_max=2)
    assert r.capped and r.level is None
    assert len(r.chain) == 2


def test_level_direct_examples():
    assert str(level_direct(P("x^2", 3), 2)) == "(x)"
    assert equals(level_direct(P(QUINTIC, 11), 1), HomIdeal([P(t, 11) for t in ("z^2", "x*z", "x^3")], 11, 3))
    with pytest.raises(ResourceError):
        level_direct(P(QUINTIC, 13), 4)


def _check_certificate(f, r):
    op = extract_operator(f, r)
    q = f.p**op.e
    assert op.e == r.level
    assert op.recombine() == power(f, q - f.p)
    for _, g in op.pairs:
        assert any(g == h for h in r.ideal(op.e).generators)
    return op


def test_extract_operator_examples():
    for text, p, e in [("x", 5, 1), ("y^2*z - x^3 - x*z^2 - z^3", 5, 1), ("y^2*z - x^3 - x*z^2", 7, 2)]:
        f = P(text, p)
        r = level_chain(f)
        assert r.level == e
        _check_certificate(f, r)


def test_extract_operator_budget():
    f = P(QUINTIC, 13)
    with pytest.raises(ResourceError):
        extract_operator(f, level_chain(f))


def _hasse_oracle(f):
    # coefficient of (xyz)^(p-1) in f^(p-1), by naive expansion
    return power(f, f.p - 1).coefficient((f.p - 1,) * 3)


def test_hasse_examples():
    assert int(hasse_invariant(P("y^2*z - x^3 - x*z^2", 7))) == 0
    f = P("y^2*z - x^3 - x^2*z", 3)
    assert int(hasse_invariant(f)) == 1 == _hasse_oracle(f)
    with pytest.raises(ValueError):
        hasse_invariant(P("x^4", 5))


def test_gl_transform_example():
    f = P(QUINTIC, 11)
    a = FpMatrix([[1, 1, 0], [0, 1, 0], [2, 0, 1]], 11)
    assert level_chain(linear_change(f, a)).level == 2


small_cases = st.sampled_from([(3, 1), (3, 2), (5, 1), (5, 2), (7, 1)]).flatmap(
    lambda pe: st.tuples(st.just(pe[1]), polys(pe[0], max_deg=5, homogeneous=True, max_terms=6).filter(lambda f: f.terms))
)


@settings(max_examples=60, deadline=None)
@given(small_cases)
def test_chain_matches_direct(args):
    e, f = args
    r = level_chain(f, e_max=e)
    assert equals(r.ideal(e), level_direct(f, e))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5, 7]).flatmap(lambda p: polys(p, max_deg=5, homogeneous=True, max_terms=6)).filter(lambda f: f.terms))
def test_chain_decreasing(f):
    r = level_chain(f, e_max=4)
    prev = HomIdeal.unit(f.p, 3)
    for j in r.chain:
        assert prev.includes(j)
        prev = j
    if r.level is not None:
        assert equals(r.ideal(r.level - 1), r.ideal(r.level))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 7]).flatmap(
    lambda p: st.tuples(polys(p, max_deg=4, homogeneous=True, max_terms=5).filter(lambda f: f.terms), invertible(p))))
def test_gl_invariance(args):
    f, a = args
    g = linear_change(f, a)
    r, s = level_chain(f, e_max=4), level_chain(g, e_max=4)
    assert r.level == s.level
    # I_e(f|A) = I_e(f)|A
    for jf, jg in zip(r.chain, s.chain):
        moved = HomIdeal([linear_change(h, a) for h in jf.generators], f.p, 3)
        assert equals(moved, jg)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([5, 7, 11]), st.integers(0, 10**6))
def test_elliptic_level_tracks_hasse(p, seed):
    rnd = random.Random(seed)
    while True:
        a, b = rnd.randrange(p), rnd.randrange(p)
        if (4 * a**3 + 27 * b**2) % p:
            break
    f = P(f"y^2*z - x^3 - {a}*x*z^2 - {b}*z^3", p)
    r = level_chain(f)
    assert (int(hasse_invariant(f)) != 0) == (r.level == 1)
    assert r.level in (1, 2)
    assert eval_poly(f.terms, (0, 1, 0), p) == 0
