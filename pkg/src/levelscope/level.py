"""The level of a polynomial via the chain of ideals of p^e-th roots.

With ``F = f^(p-1)`` one has ``f^(p^(s+1)-1) = f^(p^s-1) * F^(p^s)``, and
``I_s(h^(p^s) u) = h I_s(u)`` together with ``I_(s+1) = I_1 o I_s`` give

    I_(s+1)(f^(p^(s+1)-1)) = I_1(F * I_s(f^(p^s-1))).

:func:`level_chain` iterates this; :func:`level_direct` applies the
definition to the full power and is the independent oracle for it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .errors import InconsistencyError, ResourceError
from .fields import FpElem
from .ideals import HomIdeal, canonicalize, equals
from .multipoly import MultiPoly, frobenius_power, mul, power
from .proots import decompose, roots_ideal

DEFAULT_E_MAX = 8
DEFAULT_DEGREE_BUDGET = 30_000
DEFAULT_OPERATOR_BUDGET = 125


@dataclass
class LevelResult:
    f: MultiPoly
    chain: list  # [I_1, I_2, ...], every ideal that was computed
    level: Optional[int]
    capped: bool
    timings: list = field(default_factory=list)  # seconds per chain step

    def ideal(self, s: int) -> HomIdeal:
        """``I_s(f^(p^s-1))``; ``I_0`` is the unit ideal."""
        if s == 0:
            return HomIdeal.unit(self.f.p, self.f.nvars, self.f.vars)
        if s <= len(self.chain):
            return self.chain[s - 1]
        if self.level is not None:
            return self.chain[-1]  # the chain is constant from I_(level-1) on
        raise IndexError(f"I_{s} was not computed (capped at {len(self.chain)})")

    @property
    def strict_chain(self) -> list:
        """The strictly decreasing part ``I_1 > ... > I_(e-1)`` below R."""
        if self.level is None:
            return list(self.chain)
        return list(self.chain[: self.level - 1])


@dataclass
class FrobeniusOperator:
    """Certificate ``f^(p^e-p) = sum_j u_j * g_j^(p^e)`` with ``g_j`` generating ``I_e``."""

    e: int
    p: int
    pairs: list  # [(u_j, g_j)]

    def recombine(self) -> MultiPoly:
        out = None
        for u, g in self.pairs:
            t = mul(u, frobenius_power(g, self.e))
            out = t if out is None else out + t
        return out


def _roots_of_products(big: MultiPoly, gens) -> HomIdeal:
    comps = []
    for g in gens:
        comps.extend(decompose(mul(big, g), 1).components.values())
    return canonicalize(HomIdeal(comps, big.p, big.nvars, big.vars))


def level_chain(f: MultiPoly, e_max: int = DEFAULT_E_MAX) -> LevelResult:
    """Compute ``I_1, I_2, ...`` until two consecutive ideals agree.

    The level is the first ``s`` with ``I_(s-1) = I_s``; it is 1 exactly when
    ``I_1`` is the unit ideal.  When ``e_max`` ideals have been computed
    without stabilizing, the result is returned with ``capped=True``.
    """
    if not f.terms:
        raise ValueError("the level of the zero polynomial is undefined")
    if e_max < 1:
        raise ValueError("e_max must be >= 1")
    t0 = time.perf_counter()
    big = power(f, f.p - 1)
    current = roots_ideal(big, 1)
    chain = [current]
    timings = [time.perf_counter() - t0]
    if current.is_unit():
        return LevelResult(f, chain, 1, False, timings)
    while len(chain) < e_max:
        t0 = time.perf_counter()
        nxt = _roots_of_products(big, current.generators)
        chain.append(nxt)
        timings.append(time.perf_counter() - t0)
        if equals(current, nxt):
            return LevelResult(f, chain, len(chain), False, timings)
        current = nxt
    return LevelResult(f, chain, None, True, timings)


def _check_degree_budget(f: MultiPoly, n: int, budget: int):
    need = max(f.degree(), 0) * n
    if need > budget:
        raise ResourceError(f"degree {need} of f^{n} exceeds the degree budget {budget}")


def level_direct(f: MultiPoly, e: int, degree_budget: int = DEFAULT_DEGREE_BUDGET) -> HomIdeal:
    """``I_e(f^(p^e-1))`` straight from the definition, with no recursion."""
    q = f.p**e
    _check_degree_budget(f, q - 1, degree_budget)
    return roots_ideal(power(f, q - 1), e)


def extract_operator(f: MultiPoly, result: LevelResult, max_q: int = DEFAULT_OPERATOR_BUDGET) -> FrobeniusOperator:
    """Cofactors ``u_j`` with ``f^(p^e-p) = sum_j u_j g_j^(p^e)``, ``e`` the level.

    Split ``f^(p^e-p) = sum_a G_a^(p^e) x^a``; each ``G_a`` lies in
    ``I_e`` and is written as ``sum_j w_(j,a) g_j`` by graded linear algebra,
    then ``u_j = sum_a w_(j,a)^(p^e) x^a``.
    """
    if result.level is None:
        raise ValueError("the level is unknown (capped); no operator to extract")
    e = result.level
    p = f.p
    q = p**e
    if q > max_q:
        raise ResourceError(f"p^e = {q} exceeds the operator extraction budget {max_q}")
    target = power(f, q - p)
    ideal = result.ideal(e)
    gens = ideal.generators
    zero = MultiPoly.zero(p, f.nvars, f.vars)
    cof = [zero] * len(gens)
    for alpha, comp in decompose(target, e).components.items():
        ws = ideal.express(comp)
        if ws is None:
            raise InconsistencyError(f"component at {alpha} is not in I_{e}; the level computation is wrong")
        for j, w in enumerate(ws):
            if w.terms:
                cof[j] = cof[j] + frobenius_power(w, e).shift(alpha)
    op = FrobeniusOperator(e, p, [(u, g) for u, g in zip(cof, gens) if u.terms])
    got = op.recombine() if op.pairs else zero
    if got != target:
        raise InconsistencyError("operator certificate does not reproduce f^(p^e-p)")
    return op


def hasse_invariant(f: MultiPoly) -> FpElem:
    """Coefficient of ``(xyz)^(p-1)`` in ``f^(p-1)`` for a plane cubic."""
    if f.nvars != 3 or not f.is_homogeneous() or f.degree() != 3:
        raise ValueError("hasse_invariant needs a homogeneous cubic in three variables")
    p = f.p
    return FpElem(power(f, p - 1).coefficient((p - 1,) * 3), p)
