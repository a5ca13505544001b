"""Ideals of p^e-th roots.

R = F_p[x] is free over its subring of p^e-th powers with basis the
monomials ``x^a``, ``0 <= a_i < p^e``.  Writing ``g = sum_a g_a^(p^e) x^a``,
the ideal ``I_e(g)`` is generated by the ``g_a``.  Taking p^e-th roots of
coefficients is the identity because they lie in the prime field, which is
why only prime moduli are accepted anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fields import check_prime
from .ideals import HomIdeal, canonicalize
from .multipoly import MultiPoly, frobenius_power


@dataclass
class RootDecomposition:
    e: int
    p: int
    components: dict = field(default_factory=dict)  # basis exponent -> MultiPoly

    @property
    def q(self) -> int:
        return self.p**self.e

    def reconstruct(self) -> MultiPoly:
        """``sum_a g_a^(p^e) * x^a``; equals the decomposed polynomial."""
        out = None
        for alpha, comp in self.components.items():
            term = frobenius_power(comp, self.e).shift(alpha)
            out = term if out is None else out + term
        return out


def decompose(g: MultiPoly, e: int) -> RootDecomposition:
    """Split every exponent as ``b = q*p^e + a`` and group terms by ``a``."""
    if e < 1:
        raise ValueError("the root level e must be >= 1")
    p = check_prime(g.p)
    q = p**e
    buckets: dict = {}
    for beta, c in g.terms.items():
        qs = []
        alpha = []
        for b in beta:
            hi, lo = divmod(b, q)
            qs.append(hi)
            alpha.append(lo)
        buckets.setdefault(tuple(alpha), {})[tuple(qs)] = c
    comps = {a: MultiPoly._raw(t, p, g.nvars, g.vars) for a, t in buckets.items()}
    return RootDecomposition(e, p, comps)


def roots_ideal(g: MultiPoly, e: int) -> HomIdeal:
    """``I_e(g)``, with its canonical minimal generating set."""
    dec = decompose(g, e)
    return canonicalize(HomIdeal(list(dec.components.values()), g.p, g.nvars, g.vars))


def roots_one_of_ideal(k: HomIdeal) -> HomIdeal:
    """Smallest L with ``K`` inside ``L^[p]``: the sum of ``I_1`` over generators of K."""
    comps = []
    for h in k.generators:
        comps.extend(decompose(h, 1).components.values())
    return canonicalize(HomIdeal(comps, k.p, k.nvars, k.vars))
