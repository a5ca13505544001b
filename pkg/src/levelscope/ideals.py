"""Homogeneous ideals of F_p[x_1..x_n] with Groebner-free graded membership.

For a homogeneous ideal J, the degree-D piece J_D is the F_p-span of all
``m * g`` with ``g`` a generator and ``m`` a monomial of degree ``D - deg g``.
Membership of a homogeneous ``h`` is therefore a linear-algebra question in
the finite-dimensional space of degree-D forms.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from . import kernels
from .errors import FieldError, ShapeError
from .fields import check_prime, inv_mod, solve_in_span
from .multipoly import MultiPoly, default_vars, grevlex_key


@lru_cache(maxsize=4096)
def monomials(nvars: int, degree: int) -> tuple:
    """All exponent tuples of the given total degree, grevlex descending."""
    if degree < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grevlex_key, reverse=True)
    return tuple(out)


class _Echelon:
    """Row-echelon basis of a space of forms of one degree.

    Rows are sparse dicts keyed by their leading monomial, each monic there.
    """

    __slots__ = ("p", "rows")

    def __init__(self, p: int):
        self.p = p
        self.rows: dict = {}

    def reduce(self, vec: dict) -> dict:
        p = self.p
        rows = self.rows
        v = dict(vec)
        done: dict = {}
        while v:
            lead = max(v, key=grevlex_key)
            c = v.pop(lead)
            row = rows.get(lead)
            if row is None:
                done[lead] = c
                continue
            for m, a in row.items():
                if m == lead:
                    continue
                nv = (v.get(m, 0) - c * a) % p
                if nv:
                    v[m] = nv
                else:
                    v.pop(m, None)
        return done

    def normal_form(self, vec: dict) -> dict:
        """The unique representative of ``vec`` modulo the span with no pivot monomials."""
        p = self.p
        rows = self.rows
        v = dict(vec)
        while True:
            hits = [m for m in v if m in rows]
            if not hits:
                return v
            lead = max(hits, key=grevlex_key)
            c = v[lead]
            for m, a in rows[lead].items():
                nv = (v.get(m, 0) - c * a) % p
                if nv:
                    v[m] = nv
                else:
                    v.pop(m, None)

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return False when it was already in the span."""
        rem = self.reduce(vec)
        if not rem:
            return False
        lead = max(rem, key=grevlex_key)
        inv = inv_mod(rem[lead], self.p)
        self.rows[lead] = {m: (c * inv) % self.p for m, c in rem.items()}
        return True


class _GradedSpan:
    """Lazily built degree pieces of the ideal spanned by a growing generator list."""

    def __init__(self, p: int, nvars: int):
        self.p = p
        self.nvars = nvars
        self.gens: list = []
        self._pieces: dict = {}  # degree -> (echelon, number of gens folded in)

    def add_generator(self, g: MultiPoly):
        self.gens.append(g)

    def piece(self, degree: int) -> _Echelon:
        ech, used = self._pieces.get(degree, (None, 0))
        if ech is None:
            ech = _Echelon(self.p)
        for g in self.gens[used:]:
            dg = g.degree()
            if dg > degree:
                continue
            for m in monomials(self.nvars, degree - dg):
                ech.add({tuple(a + b for a, b in zip(e, m)): c for e, c in g.terms.items()})
        self._pieces[degree] = (ech, len(self.gens))
        return ech

    def contains(self, h: MultiPoly) -> bool:
        if not h.terms:
            return True
        d = h.degree()
        if not any(g.degree() <= d for g in self.gens):
            return False
        return not self.piece(d).reduce(h.terms)


def _canonical(gens: Sequence[MultiPoly]) -> list:
    return sorted(gens, key=lambda g: g.sort_key())


class HomIdeal:
    """Homogeneous ideal given by generators.

    Generators are stored monic, deduplicated and in canonical order
    (degree, then grevlex).  The unit ideal is ``(1)``; the zero ideal has
    no generators.
    """

    def __init__(self, generators: Sequence[MultiPoly], p: int, nvars: int, vars=None):
        check_prime(p)
        self.p = p
        self.nvars = nvars
        self.vars = tuple(vars) if vars is not None else default_vars(nvars)
        seen = set()
        gens = []
        for g in generators:
            if g.p != p:
                raise FieldError(f"generator over F_{g.p} in an ideal over F_{p}")
            if g.nvars != nvars:
                raise ShapeError("generator has the wrong number of variables")
            if not g.terms:
                continue
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            g = g.monic()
            if g.is_constant():
                gens = [g]
                seen = {g}
                break
            if g not in seen:
                seen.add(g)
                gens.append(g)
        self.generators = tuple(_canonical(gens))
        self._span: Optional[_GradedSpan] = None

    @classmethod
    def unit(cls, p: int, nvars: int, vars=None) -> HomIdeal:
        return cls([MultiPoly.constant(1, p, nvars, vars)], p, nvars, vars)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def _graded(self) -> _GradedSpan:
        if self._span is None:
            span = _GradedSpan(self.p, self.nvars)
            for g in self.generators:
                span.add_generator(g)
            self._span = span
        return self._span

    def contains(self, h: MultiPoly) -> bool:
        return contains(self, h)

    def __contains__(self, h):
        return contains(self, h)

    def includes(self, other: HomIdeal) -> bool:
        """True iff ``other`` is a subset of this ideal."""
        return all(contains(self, g) for g in other.generators)

    def equals(self, other: HomIdeal) -> bool:
        return equals(self, other)

    def minimalize(self) -> HomIdeal:
        return minimalize(self)

    def degrees(self) -> list:
        return [g.degree() for g in self.generators]

    def express(self, h: MultiPoly) -> Optional[list]:
        """Cofactors ``u_j`` with ``sum(u_j * g_j) == h``, or None if ``h`` is not in the ideal."""
        if not h.is_homogeneous():
            raise ValueError("express needs a homogeneous polynomial")
        zero = MultiPoly.zero(self.p, self.nvars, self.vars)
        if not h.terms:
            return [zero] * len(self.generators)
        d = h.degree()
        basis = monomials(self.nvars, d)
        index = {m: i for i, m in enumerate(basis)}
        vectors = []
        labels = []
        for j, g in enumerate(self.generators):
            dg = g.degree()
            if dg > d:
                continue
            for m in monomials(self.nvars, d - dg):
                v = [0] * len(basis)
                for e, c in g.terms.items():
                    v[index[tuple(a + b for a, b in zip(e, m))]] = c
                vectors.append(v)
                labels.append((j, m))
        target = [0] * len(basis)
        for e, c in h.terms.items():
            target[index[e]] = c
        coeffs = solve_in_span(vectors, target, self.p)
        if coeffs is None:
            return None
        cof = [dict() for _ in self.generators]
        for (j, m), c in zip(labels, coeffs):
            if c:
                cof[j][m] = c
        return [MultiPoly(t, self.p, self.nvars, self.vars) for t in cof]

    def __str__(self):
        return "(" + ", ".join(g.to_string() for g in self.generators) + ")"

    def __repr__(self):
        return f"HomIdeal{self}"

    def to_strings(self) -> list:
        return [g.to_string() for g in self.generators]


def contains(j: HomIdeal, h: MultiPoly) -> bool:
    """Decide ``h in J`` for homogeneous ``h`` by linear algebra in degree ``deg h``."""
    if h.p != j.p or h.nvars != j.nvars:
        raise FieldError("polynomial and ideal live in different rings")
    if not h.terms:
        return True
    if not h.is_homogeneous():
        raise ValueError(f"{h} is not homogeneous")
    if j.is_unit():
        return True
    if j.is_zero():
        return False
    return j._graded().contains(h)


def equals(j: HomIdeal, k: HomIdeal) -> bool:
    """Ideal equality, checked as inclusion in both directions."""
    return j.includes(k) and k.includes(j)


def minimalize(j: HomIdeal) -> HomIdeal:
    """Drop generators lying in the ideal of the ones kept before them.

    Generators are visited in canonical order; a later generator never has
    smaller degree, so the survivors are irredundant.
    """
    if j.is_unit() or len(j.generators) <= 1:
        return j
    span = _GradedSpan(j.p, j.nvars)
    kept = []
    for g in j.generators:
        if not span.contains(g):
            span.add_generator(g)
            kept.append(g)
    out = HomIdeal(kept, j.p, j.nvars, j.vars)
    out._span = span
    return out


def canonicalize(j: HomIdeal) -> HomIdeal:
    """A canonical minimal generating set for ``J``.

    Degree by degree, the new generators are the reduced row echelon basis
    of the normal forms modulo the part generated in lower degrees.  Equal
    ideals get identical generator lists.
    """
    if j.is_unit() or j.is_zero():
        return j
    p, n = j.p, j.nvars
    by_degree: dict = {}
    for g in j.generators:
        by_degree.setdefault(g.degree(), []).append(g)
    span = _GradedSpan(p, n)
    kept = []
    for d in sorted(by_degree):
        ech = span.piece(d)
        nfs = [nf for nf in (ech.normal_form(g.terms) for g in by_degree[d]) if nf]
        if not nfs:
            continue
        cols = sorted({m for nf in nfs for m in nf}, key=grevlex_key, reverse=True)
        index = {m: i for i, m in enumerate(cols)}
        dense = []
        for nf in nfs:
            row = [0] * len(cols)
            for m, c in nf.items():
                row[index[m]] = c
            dense.append(row)
        reduced, _ = kernels.rref(dense, p)
        for row in reduced:
            g = MultiPoly._raw({cols[i]: c for i, c in enumerate(row) if c}, p, n, j.vars)
            span.add_generator(g)
            kept.append(g)
    out = HomIdeal(kept, p, n, j.vars)
    out._span = span
    return out


def relevant_ideal(genus: int, p: int, vars=("x", "y", "z")) -> HomIdeal:
    """The monomial ideal generated by ``z^a x^b`` with
    ``a + b = 2g-2, a >= g-1`` or ``a + b = 2g-1, a < g-1``.
    """
    if genus < 2:
        raise ValueError("the relevant ideal is defined for genus >= 2")
    g = genus
    gens = []
    for a in range(g - 1, 2 * g - 1):
        gens.append(MultiPoly.monomial((2 * g - 2 - a, 0, a), p, vars=vars))
    for a in range(0, g - 1):
        gens.append(MultiPoly.monomial((2 * g - 1 - a, 0, a), p, vars=vars))
    return HomIdeal(gens, p, 3, vars)
