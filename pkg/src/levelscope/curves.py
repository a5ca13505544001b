"""Hyperelliptic models ``y^2 = h(x)`` over F_p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .errors import InvalidCurveError
from .fields import check_prime, inv_mod
from .multipoly import MultiPoly, parse_poly

IMAGINARY = "imaginary"
REAL = "real"
MAX_RESAMPLES = 1000


# univariate helpers on coefficient lists, lowest degree first


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def coefficients(h: MultiPoly) -> list:
    """Coefficient list of a univariate polynomial, constant term first."""
    if h.nvars != 1:
        raise ValueError("expected a univariate polynomial")
    out = [0] * (h.degree() + 1)
    for (k,), c in h.terms.items():
        out[k] = c
    return out


def from_coefficients(c: Sequence[int], p: int, var: str = "x") -> MultiPoly:
    return MultiPoly({(k,): v for k, v in enumerate(c) if v % p}, p, 1, (var,))


def poly_rem(a: list, b: list, p: int) -> list:
    a = _trim([v % p for v in a])
    b = _trim([v % p for v in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = inv_mod(b[-1], p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        f = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, v in enumerate(b):
            a[shift + i] = (a[shift + i] - f * v) % p
        _trim(a)
    return a


def poly_gcd(a: list, b: list, p: int) -> list:
    a = _trim([v % p for v in a])
    b = _trim([v % p for v in b])
    while b:
        a, b = b, poly_rem(a, b, p)
    if a:
        inv = inv_mod(a[-1], p)
        a = [v * inv % p for v in a]
    return a


def derivative(c: Sequence[int], p: int) -> list:
    return _trim([(k * c[k]) % p for k in range(1, len(c))])


def is_squarefree(c: Sequence[int], p: int) -> bool:
    return len(poly_gcd(list(c), derivative(c, p), p)) == 1


def evaluate(c: Sequence[int], a: int, p: int) -> int:
    acc = 0
    for v in reversed(c):
        acc = (acc * a + v) % p
    return acc


def taylor_shift(c: Sequence[int], a: int, p: int) -> list:
    """Coefficients ``b`` with ``h(x) = sum_k b_k (x - a)^k``, by repeated synthetic division."""
    cur = [v % p for v in c]
    out = []
    while cur:
        # divide cur by (x - a): quotient q, remainder r = cur(a)
        q = [0] * (len(cur) - 1)
        acc = 0
        for i in range(len(cur) - 1, -1, -1):
            acc = (acc * a + cur[i]) % p
            if i:
                q[i - 1] = acc
        out.append(acc)
        cur = q
    return out


@dataclass(frozen=True)
class CurveModel:
    genus: int
    p: int
    kind: str
    h: MultiPoly
    provenance: str = ""

    @property
    def coefficients(self) -> list:
        return coefficients(self.h)

    def __str__(self):
        return f"y^2 = {self.h} over F_{self.p} ({self.kind}, genus {self.genus})"


def from_weierstrass(h: Union[MultiPoly, str], p: Optional[int] = None, expected_genus: Optional[int] = None,
                     provenance: str = "") -> CurveModel:
    """Validate ``y^2 = h(x)`` and infer genus and model kind from ``deg h``."""
    if isinstance(h, str):
        if p is None:
            raise ValueError("a prime is required to parse h")
        h = parse_poly(h, p, ("x",))
    p = check_prime(p if p is not None else h.p)
    if h.p != p:
        raise ValueError(f"h is over F_{h.p}, not F_{p}")
    c = coefficients(h)
    deg = len(c) - 1
    if deg < 3:
        raise InvalidCurveError(f"deg h = {deg} does not define a curve of positive genus")
    genus = (deg - 1) // 2
    if expected_genus is not None and genus != expected_genus:
        raise InvalidCurveError(f"deg h = {deg} gives genus {genus}, expected {expected_genus}")
    if not is_squarefree(c, p):
        raise InvalidCurveError(f"h = {h} has a repeated root over F_{p}")
    kind = IMAGINARY if deg % 2 else REAL
    return CurveModel(genus, p, kind, h, provenance)


def homogenize(m: CurveModel) -> MultiPoly:
    """``y^2 z^(2g-1) - h(x, z)`` (imaginary) or ``y^2 z^(2g) - h(x, z)`` (real), in x, y, z."""
    d = 2 * m.genus + (1 if m.kind == IMAGINARY else 2)
    p = m.p
    terms = {(0, 2, d - 2): 1}
    for k, c in enumerate(m.coefficients):
        if c:
            terms[(k, 0, d - k)] = (terms.get((k, 0, d - k), 0) - c) % p
    return MultiPoly(terms, p, 3, ("x", "y", "z"))


def dehomogenize(f: MultiPoly) -> MultiPoly:
    """Set ``z = 1``."""
    return f.evaluate_at(2, 1)


def rational_roots(m: CurveModel) -> list:
    c = m.coefficients
    return [a for a in range(m.p) if evaluate(c, a, m.p) == 0]


def to_imaginary(m: CurveModel, a: int) -> CurveModel:
    """Imaginary model via ``(x, y) -> (1/(x-a), y/(x-a)^(g+1))`` for a root ``a`` of h.

    With ``h(x) = sum_k b_k (x-a)^k`` the new polynomial is
    ``u^(2g+2) h(a + 1/u) = sum_k b_k u^(2g+2-k)``.
    """
    p = m.p
    a %= p
    b = taylor_shift(m.coefficients, a, p)
    if b[0]:
        raise ValueError(f"{a} is not a root of h over F_{p}")
    top = 2 * m.genus + 2
    b = b + [0] * (top + 1 - len(b))
    new = [b[top - j] for j in range(top + 1)]
    new = _trim(new)
    if len(new) - 1 != 2 * m.genus + 1:
        raise InvalidCurveError("transformed polynomial has degree below 2g+1")
    h = from_coefficients(new, p)
    prov = f"{m.provenance}; " if m.provenance else ""
    return from_weierstrass(h, p, m.genus, provenance=f"{prov}to_imaginary(a={a})")


FAMILIES = ("mu_x", "mu_const")


def family(kind: str, genus: int, mu: int, p: int):
    """A curve of one of the two superspecial families and its predicted superspeciality.

    ``mu_x``: ``h = x^(2g+1) + mu x``, superspecial iff ``p = 2g+1`` or ``-1`` mod ``4g``.
    ``mu_const``: ``h = x^(2g+1) + mu``; no usable congruence, so the prediction is None.
    """
    check_prime(p)
    if mu % p == 0:
        raise ValueError("mu must be nonzero in F_p")
    if genus < 2:
        raise ValueError("the families are defined for genus >= 2")
    c = [0] * (2 * genus + 2)
    c[-1] = 1
    if kind == "mu_x":
        c[1] = mu % p
        r = p % (4 * genus)
        predicted = r == (2 * genus + 1) % (4 * genus) or r == 4 * genus - 1
    elif kind == "mu_const":
        c[0] = mu % p
        predicted = None
    else:
        raise ValueError(f"unknown family {kind!r}")
    model = from_weierstrass(from_coefficients(c, p), p, genus, provenance=f"{kind}(g={genus}, mu={mu % p})")
    return model, predicted


def random_curve(genus: int, p: int, seed) -> CurveModel:
    """Uniform monic squarefree ``h`` of degree ``2g+1``; ``seed`` may be an int or int sequence."""
    check_prime(p)
    if genus < 1:
        raise ValueError("genus must be >= 1")
    rng = np.random.default_rng(seed)
    deg = 2 * genus + 1
    for _ in range(MAX_RESAMPLES):
        c = [int(v) for v in rng.integers(0, p, size=deg)] + [1]
        if is_squarefree(c, p):
            return from_weierstrass(from_coefficients(c, p), p, genus, provenance=f"random(seed={seed})")
    raise InvalidCurveError(f"no squarefree polynomial after {MAX_RESAMPLES} draws")
