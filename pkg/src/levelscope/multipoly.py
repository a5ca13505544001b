"""Sparse multivariate polynomials over F_p.

A :class:`MultiPoly` maps exponent tuples to nonzero residues.  Terms are
ordered by graded reverse lexicographic order with ``vars[0] > vars[1] > ...``.
Products go through :mod:`levelscope.kernels` on Kronecker-packed exponents.
"""

from __future__ import annotations

import os
import re
from typing import Iterable, Mapping, Optional, Sequence

from . import kernels
from .errors import FieldError, InvalidTransformError, ParseError, ResourceError, ShapeError
from .fields import FpMatrix, check_prime, inv_mod

DEFAULT_MAX_TERMS = 50_000_000
MAX_EXPONENT = 2**32 - 1


def max_terms() -> int:
    """Term budget per polynomial; ``LEVELSCOPE_MAX_TERMS`` overrides it."""
    env = os.environ.get("LEVELSCOPE_MAX_TERMS")
    return int(env) if env else DEFAULT_MAX_TERMS


def grevlex_key(e: tuple) -> tuple:
    """Sort key: larger key means larger monomial in grevlex."""
    return (sum(e), tuple(-a for a in reversed(e)))


def default_vars(nvars: int) -> tuple:
    if nvars <= 3:
        return ("x", "y", "z")[:nvars]
    return tuple(f"x{i}" for i in range(nvars))


class MultiPoly:
    __slots__ = ("nvars", "p", "terms", "vars")

    def __init__(self, terms: Mapping[tuple, int], p: int, nvars: int, vars: Optional[Sequence[str]] = None):
        check_prime(p)
        self.nvars = nvars
        self.p = p
        self.vars = tuple(vars) if vars is not None else default_vars(nvars)
        if len(self.vars) != nvars:
            raise ShapeError(f"{nvars} variables but names {self.vars}")
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != nvars:
                raise ShapeError(f"exponent {e} does not have length {nvars}")
            c %= p
            if c:
                clean[e] = (clean.get(e, 0) + c) % p
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict, p: int, nvars: int, vars: tuple) -> MultiPoly:
        # trusted constructor: terms already reduced with no zeros
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.p = p
        obj.vars = vars
        obj.terms = terms
        return obj

    # construction helpers

    @classmethod
    def zero(cls, p: int, nvars: int, vars=None) -> MultiPoly:
        return cls({}, p, nvars, vars)

    @classmethod
    def constant(cls, c: int, p: int, nvars: int, vars=None) -> MultiPoly:
        return cls({(0,) * nvars: c}, p, nvars, vars)

    @classmethod
    def monomial(cls, exps: Sequence[int], p: int, coeff: int = 1, vars=None) -> MultiPoly:
        return cls({tuple(exps): coeff}, p, len(exps), vars)

    @classmethod
    def variable(cls, i: int, p: int, nvars: int, vars=None) -> MultiPoly:
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, p, nvars, vars)

    def _like(self, terms: dict) -> MultiPoly:
        return MultiPoly._raw(terms, self.p, self.nvars, self.vars)

    def _check(self, other: MultiPoly):
        if self.p != other.p:
            raise FieldError(f"moduli differ: {self.p} vs {other.p}")
        if self.nvars != other.nvars:
            raise ShapeError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self, descending: bool = True) -> list:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=descending)

    def leading_term(self) -> tuple:
        return max(self.terms.items(), key=lambda t: grevlex_key(t[0]))

    def sort_key(self) -> tuple:
        """Canonical ordering of polynomials: degree, then terms in grevlex."""
        return (self.degree(), [(grevlex_key(e), c) for e, c in self.sorted_terms()])

    def monic(self) -> MultiPoly:
        if not self.terms:
            return self
        lc = self.leading_term()[1]
        return self.scale(inv_mod(lc, self.p)) if lc != 1 else self

    # arithmetic

    def __eq__(self, other):
        if isinstance(other, int):
            return self == MultiPoly.constant(other, self.p, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.p == other.p and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, self.nvars, frozenset(self.terms.items())))

    def __neg__(self):
        p = self.p
        return self._like({e: p - c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.p, self.nvars, self.vars)
        self._check(other)
        p = self.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._like(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.p, self.nvars, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> MultiPoly:
        c %= self.p
        if not c:
            return self._like({})
        p = self.p
        return self._like({e: (v * c) % p for e, v in self.terms.items()})

    def shift(self, exps: Sequence[int]) -> MultiPoly:
        """Multiply by the monomial ``x^exps``."""
        exps = tuple(exps)
        return self._like({tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, MultiPoly):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return power(self, n)

    def evaluate_at(self, i: int, value: int) -> MultiPoly:
        """Substitute the constant ``value`` for variable ``i``."""
        p = self.p
        out: dict = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            out[ne] = (out.get(ne, 0) + c * pow(value, e[i], p)) % p
        return MultiPoly(out, p, self.nvars, self.vars)

    # printing

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        p = self.p
        parts = []
        for e, c in self.sorted_terms():
            neg = c > p // 2
            mag = p - c if neg else c
            factors = []
            for name, a in zip(self.vars, e):
                if a == 1:
                    factors.append(name)
                elif a > 1:
                    factors.append(f"{name}^{a}")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    __str__ = to_string

    def __repr__(self):
        return f"MultiPoly({self.to_string()!r}, p={self.p}, vars={self.vars})"


# products and powers


def _pack(terms: Iterable[tuple], base: int, nvars: int) -> list:
    keys = []
    for e in terms:
        k = 0
        for a in e:
            k = k * base + a
        keys.append(k)
    return keys


def _unpack(key: int, base: int, nvars: int) -> tuple:
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        key, out[i] = divmod(key, base)
    return tuple(out)


def _check_budget(n: int, what: str):
    budget = max_terms()
    if n > budget:
        raise ResourceError(f"{what} needs {n} terms, over the term budget of {budget} (LEVELSCOPE_MAX_TERMS)")


def mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    a._check(b)
    if not a.terms or not b.terms:
        return a._like({})
    if len(a.terms) == 1 or len(b.terms) == 1:
        if len(a.terms) > len(b.terms):
            a, b = b, a
        (e, c), = a.terms.items()
        p = a.p
        return b._like({tuple(x + y for x, y in zip(e, f)): (c * d) % p for f, d in b.terms.items()})
    n = a.nvars
    base = max(a.degree_in(i) + b.degree_in(i) for i in range(n)) + 1
    ea, ca = list(a.terms), list(a.terms.values())
    eb, cb = list(b.terms), list(b.terms.values())
    keys, coefs = kernels.multiply_packed(_pack(ea, base, n), ca, _pack(eb, base, n), cb, a.p, base**n)
    _check_budget(len(keys), "product")
    return b._like({_unpack(k, base, n): c for k, c in zip(keys, coefs)})


def frobenius_power(f: MultiPoly, k: int) -> MultiPoly:
    """``f^(p^k)``: exponents scale by ``p^k``; F_p coefficients are fixed."""
    if k < 1:
        raise ValueError("frobenius_power needs k >= 1")
    q = f.p**k
    if f.terms and max(max(e) for e in f.terms) * q > MAX_EXPONENT:
        raise ResourceError(f"exponent overflow computing a {q}-th power")
    return f._like({tuple(a * q for a in e): c for e, c in f.terms.items()})


def _small_power(f: MultiPoly, n: int) -> MultiPoly:
    result = MultiPoly.constant(1, f.p, f.nvars, f.vars)
    base = f
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def power(f: MultiPoly, n: int) -> MultiPoly:
    """Exact ``f^n`` using the base-p digits of ``n``.

    ``f^n = prod_i (f^(n_i))^(p^i)``, so repeated squaring only ever runs on
    exponents below ``p``; the ``p^i`` blocks are exponent rescalings.
    """
    if n < 0:
        raise ValueError("negative polynomial power")
    p = f.p
    if n == 0:
        return MultiPoly.constant(1, p, f.nvars, f.vars)
    if not f.terms:
        return f
    digits = []
    m = n
    while m:
        m, r = divmod(m, p)
        digits.append(r)
    cache: dict = {}
    blocks = []
    for i, d in enumerate(digits):
        if not d:
            continue
        if d not in cache:
            cache[d] = _small_power(f, d)
        blocks.append(frobenius_power(cache[d], i) if i else cache[d])
    blocks.sort(key=len)
    result = blocks[0]
    for blk in blocks[1:]:
        result = mul(result, blk)
    return result


def linear_change(f: MultiPoly, a: FpMatrix) -> MultiPoly:
    """The right action ``(f|A)(x) = f(A x)``: each ``x_i`` becomes row ``i`` of ``A``."""
    n = f.nvars
    if a.shape != (n, n):
        raise InvalidTransformError(f"expected a {n}x{n} matrix, got {a.shape}")
    if a.p != f.p:
        raise FieldError(f"moduli differ: {f.p} vs {a.p}")
    if a.rank() < n:
        raise InvalidTransformError("change of coordinates is singular")
    p = f.p
    forms = []
    for i in range(n):
        lin = {}
        for j in range(n):
            if a[i, j]:
                e = [0] * n
                e[j] = 1
                lin[tuple(e)] = a[i, j]
        forms.append(MultiPoly._raw(lin, p, n, f.vars))
    powers = [[MultiPoly.constant(1, p, n, f.vars)] for _ in range(n)]

    def form_power(i, k):
        lst = powers[i]
        while len(lst) <= k:
            lst.append(mul(lst[-1], forms[i]))
        return lst[k]

    out = MultiPoly.zero(p, n, f.vars)
    for e, c in f.sorted_terms():
        term = MultiPoly.constant(c, p, n, f.vars)
        for i, k in enumerate(e):
            if k:
                term = mul(term, form_power(i, k))
        out = out + term
    return out


# parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^])|(?P<bad>\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", text, start)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_poly(text: str, p: int, vars: Sequence[str] = ("x", "y", "z")) -> MultiPoly:
    """Parse ``poly := term (('+'|'-') term)*`` with ``coeff*var^k*...`` terms.

    A leading unary sign is allowed and a term may be a bare integer.
    Coefficients are reduced mod ``p``.
    """
    check_prime(p)
    vars = tuple(vars)
    index = {v: i for i, v in enumerate(vars)}
    n = len(vars)
    toks = _tokenize(text)
    if toks[0][0] == "end":
        raise ParseError("empty polynomial", text, 0)
    pos = 0
    terms: dict = {}

    def peek():
        return toks[pos]

    def factor():
        nonlocal pos
        kind, val, at = toks[pos]
        if kind != "name":
            raise ParseError(f"expected a variable, got {val or 'end of input'!r}", text, at)
        if val not in index:
            raise ParseError(f"unknown variable {val!r}", text, at)
        pos += 1
        k = 1
        if toks[pos][1] == "^" and toks[pos][0] == "op":
            pos += 1
            kind2, val2, at2 = toks[pos]
            if kind2 != "num":
                raise ParseError("malformed exponent: expected an unsigned integer after '^'", text, at2)
            k = int(val2)
            pos += 1
        return index[val], k

    def term():
        nonlocal pos
        exps = [0] * n
        coeff = 1
        kind, val, at = peek()
        if kind == "num":
            coeff = int(val)
            pos += 1
            if not (peek()[0] == "op" and peek()[1] == "*"):
                return tuple(exps), coeff
            pos += 1
        i, k = factor()
        exps[i] += k
        while peek()[0] == "op" and peek()[1] == "*":
            pos += 1
            i, k = factor()
            exps[i] += k
        return tuple(exps), coeff

    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if peek()[1] == "-" else 1
        pos += 1
    while True:
        e, c = term()
        terms[e] = (terms.get(e, 0) + sign * c) % p
        kind, val, at = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            pos += 1
            continue
        raise ParseError(f"unexpected {val!r}", text, at)
    return MultiPoly(terms, p, n, vars)
