import pytest
from hypothesis import given, settings, strategies as st

from levelscope.errors import FieldError, ParseError, ResourceError
from levelscope.fields import FpMatrix
from levelscope.multipoly import MultiPoly, frobenius_power, linear_change, mul, parse_poly, power
from oracles import naive_mul, naive_pow


def P(text, p, vars=("x", "y", "z")):
    return parse_poly(text, p, vars)


def test_parse_examples():
    f = P("y^2*z^3 - x^5 - 2*z^5", 11)
    assert len(f) == 3
    assert f.coefficient((0, 0, 5)) == 9
    assert P("x - x", 7).is_zero()
    assert P("-3*x*y + 4", 5) == MultiPoly({(1, 1, 0): 2, (0, 0, 0): 4}, 5, 3)
    assert P(" x ^ 2 * y ", 5).coefficient((2, 1, 0)) == 1


@pytest.mark.parametrize("text", ["x^(3)", "", "   ", "w + x", "x^", "x + * y", "2*", "x y", "3*4*x"])
def test_parse_errors(text):
    with pytest.raises(ParseError) as exc:
        P(text, 7)
    assert exc.value.position >= 0


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        P("x + w", 7)
    assert exc.value.position == 4


def test_mul_examples():
    assert mul(P("x+y", 7), P("x-y", 7)) == P("x^2 + 6*y^2", 7)
    f = P("x^3 + 2*y*z^2", 7)
    assert f * P("1", 7) == f
    with pytest.raises(FieldError):
        P("x", 2)
    with pytest.raises(FieldError):
        mul(P("x", 5), P("x", 7))


def test_pow_examples():
    assert power(P("x+y", 3), 3) == P("x^3 + y^3", 3)
    assert power(P("x+y", 3), 0) == P("1", 3)
    f = P("y^2*z^3 - x^5 - 2*z^5", 11)
    big = power(f, 10)
    assert big.degree() == 50 and big.is_homogeneous()
    assert big.terms == naive_pow(f.terms, 10, 11, 3)


def test_frobenius_examples():
    assert frobenius_power(P("x + 2*y", 5), 1) == P("x^5 + 2*y^5", 5)
    assert frobenius_power(P("1", 5), 3) == P("1", 5)
    f = P("x+y", 3)
    assert frobenius_power(f, 2) == P("x^9 + y^9", 3)
    assert frobenius_power(f, 2).terms == naive_pow(f.terms, 9, 3, 3)


def test_linear_change_examples():
    swap = FpMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]], 13)
    assert linear_change(P("x^2", 13), swap) == P("y^2", 13)
    f = P("x^3 + 5*x*y*z - z^3", 13)
    assert linear_change(f, FpMatrix.identity(3, 13)) == f


def test_resource_budget(monkeypatch):
    monkeypatch.setenv("LEVELSCOPE_MAX_TERMS", "50")
    with pytest.raises(ResourceError, match="LEVELSCOPE_MAX_TERMS"):
        power(P("x + y + z + 1", 7), 6)


def test_printing():
    assert str(P("y^2*z^3 - x^5 - 2*z^5", 11)) == "-x^5 + y^2*z^3 - 2*z^5"
    assert str(P("0", 5)) == "0"
    assert str(P("3", 5)) == "-2"  # symmetric residues
    assert str(P("2", 5)) == "2"


# random polynomials


def polys(p, nvars=3, max_deg=4, homogeneous=False, max_terms=5):
    exps = st.tuples(*[st.integers(0, max_deg)] * nvars)
    if homogeneous:
        def fix(d):
            return st.dictionaries(
                st.lists(st.integers(0, d), min_size=nvars - 1, max_size=nvars - 1).map(
                    lambda cuts: _composition(sorted(cuts), d)),
                st.integers(1, p - 1), min_size=1, max_size=max_terms)
        terms = st.integers(1, max_deg).flatmap(fix)
    else:
        terms = st.dictionaries(exps, st.integers(1, p - 1), min_size=1, max_size=max_terms)
    return terms.map(lambda t: MultiPoly(t, p, nvars))


def _composition(cuts, d):
    bounds = [0] + cuts + [d]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


@settings(max_examples=40, deadline=None)
@given(polys(7), st.integers(0, 6), st.integers(0, 6))
def test_pow_additive(f, m, n):
    assert power(f, m + n) == mul(power(f, m), power(f, n))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5]).flatmap(lambda p: st.tuples(polys(p, max_deg=2, max_terms=3), st.integers(1, 2))))
def test_frobenius_equals_pow(args):
    f, k = args
    q = f.p**k
    assert frobenius_power(f, k) == power(f, q)
    assert power(f, q).terms == naive_pow(f.terms, q, f.p, 3)


@settings(max_examples=40, deadline=None)
@given(polys(13), polys(13))
def test_mul_matches_naive(a, b):
    assert mul(a, b).terms == naive_mul(a.terms, b.terms, 13)


@settings(max_examples=40)
@given(polys(11))
def test_print_parse_roundtrip(f):
    assert parse_poly(str(f), 11) == f


def invertible(p):
    return st.lists(st.integers(0, p - 1), min_size=9, max_size=9).map(
        lambda v: FpMatrix([v[0:3], v[3:6], v[6:9]], p)).filter(lambda m: m.rank() == 3)


@settings(max_examples=30, deadline=None)
@given(polys(13, homogeneous=True), invertible(13), invertible(13))
def test_linear_change_laws(f, a, b):
    g = linear_change(f, a)
    assert g.degree() == f.degree() and g.is_homogeneous()
    assert linear_change(g, a.inverse()) == f
    assert linear_change(linear_change(f, a), b) == linear_change(f, a @ b)
