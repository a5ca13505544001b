"""Cartier-Manin matrices and the classification they determine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .curves import CurveModel, coefficients, from_coefficients, is_squarefree
from .errors import InvalidCurveError
from .fields import FpMatrix, check_prime, rank
from .multipoly import MultiPoly, power

ORDINARY = "ordinary"
SUPERSPECIAL = "superspecial"
SUPERSINGULAR = "supersingular"
PRANK_ZERO = "p-rank-zero-nonordinary"
INTERMEDIATE = "intermediate"


def _as_univariate(h, p):
    if isinstance(h, CurveModel):
        return h.h
    if isinstance(h, MultiPoly):
        return h
    return from_coefficients(list(h), p)


def expansion_coefficients(h, p: int, k: int = 1) -> list:
    """Coefficients ``c_j`` of ``h(x)^((p^k - 1)/2)``."""
    check_prime(p)
    hp = _as_univariate(h, p)
    return coefficients(power(hp, (p**k - 1) // 2))


def _read_matrix(c: list, q: int, genus: int, width: int, p: int) -> FpMatrix:
    def coef(n):
        return c[n] if 0 <= n < len(c) else 0

    return FpMatrix([[coef(i * q - j) for j in range(1, width + 1)] for i in range(1, genus + 1)], p, cols=width)


def cartier_manin(h, p: int, genus: int, width: str = "g") -> FpMatrix:
    """The matrix ``(c_(ip-j))``, ``1 <= i <= g``, with ``j <= g`` or ``j <= 2g+1`` for ``width="extended"``."""
    check_prime(p)
    hp = _as_univariate(h, p)
    deg = hp.degree()
    if deg not in (2 * genus + 1, 2 * genus + 2):
        raise ValueError(f"deg h = {deg} does not match genus {genus}")
    if not is_squarefree(coefficients(hp), p):
        raise InvalidCurveError(f"h = {hp} is not squarefree over F_{p}")
    if width not in ("g", "extended"):
        raise ValueError("width must be 'g' or 'extended'")
    ncols = genus if width == "g" else 2 * genus + 1
    return _read_matrix(expansion_coefficients(hp, p), p, genus, ncols, p)


def cartier_manin_direct(h, p: int, genus: int, k: int) -> FpMatrix:
    """``C_k`` read from ``h^((p^k-1)/2)`` itself; equals ``C^k`` for curves over F_p."""
    c = expansion_coefficients(h, p, k)
    return _read_matrix(c, p**k, genus, genus, p)


@dataclass(frozen=True)
class CartierData:
    genus: int
    p: int
    C: FpMatrix
    C_ext: FpMatrix
    rank_C: int
    stable_rank: int
    nilpotency: Optional[int]  # largest r with C^r != 0 when C is nilpotent
    classification: str
    warnings: tuple = field(default=())

    @property
    def p_rank(self) -> int:
        return self.stable_rank

    @property
    def extended_nonzero(self) -> bool:
        return not self.C_ext.is_zero()


def analyze(curve: Union[CurveModel, MultiPoly], p: Optional[int] = None, genus: Optional[int] = None) -> CartierData:
    """Cartier-Manin data of a model (or a univariate h with explicit genus)."""
    if isinstance(curve, CurveModel):
        h, p, genus = curve.h, curve.p, curve.genus
    else:
        h = curve
        p = p or h.p
        if genus is None:
            genus = (h.degree() - 1) // 2
    C = cartier_manin(h, p, genus)
    C_ext = cartier_manin(h, p, genus, width="extended")
    powers = [FpMatrix.identity(genus, p), C]
    while len(powers) <= genus:
        powers.append(powers[-1] @ C)
    stable = rank(powers[genus])
    nil = None
    if powers[genus].is_zero():
        nil = max(r for r in range(genus + 1) if not powers[r].is_zero())
    rk = rank(C)
    warnings = []
    if genus >= 2 and p < 7:
        warnings.append("rank criterion for ordinarity is stated for p >= 7; reported rank only")
    return CartierData(genus, p, C, C_ext, rk, stable, nil, _classify(genus, C, rk, stable), tuple(warnings))


def _classify(genus, C, rk, stable) -> str:
    if C.is_zero():
        return SUPERSPECIAL
    if rk == genus:
        return ORDINARY
    if stable == 0:
        return SUPERSINGULAR if genus <= 2 else PRANK_ZERO
    return INTERMEDIATE


def p_rank(data: CartierData) -> int:
    """Rank of ``C^g``, the stable rank of the Cartier-Manin matrix."""
    return data.stable_rank


def classify(data: CartierData) -> str:
    return data.classification


def level_lower_bound(data: CartierData) -> int:
    """Lower bound on the level implied by the nilpotency of ``C``.

    ``C^r != 0 = C^(r+1)`` with ``r >= 1`` forces level ``>= r+2``; otherwise
    only the genus bound ``level >= 2`` applies.
    """
    if data.genus < 2:
        raise ValueError("the bound applies to genus >= 2")
    if data.nilpotency is not None and data.nilpotency >= 1:
        return data.nilpotency + 2
    return 2
