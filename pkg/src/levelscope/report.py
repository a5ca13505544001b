"""Fixed catalog of published examples, recomputed and compared."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .cartier import SUPERSPECIAL, analyze, level_lower_bound
from .curves import family, from_weierstrass, homogenize
from .fields import primes_between
from .level import level_chain
from .multipoly import parse_poly

QUINTIC = "y^2*z^3 - x^5 - 2*z^5"
TRANSFORM_QUINTIC = "y^2*z^3 - x^5 - 2*x^3*z^2 - 2*x^2*z^3 - x*z^4 - 2*z^5"
TRANSFORM_SEXTIC = "y^2*z^4 - 2*x^6 + 2*x^4*z^2 - 8*x^3*z^3 + x^2*z^4 - 6*x*z^5 - 8*z^6"

# (prime, level, p-rank, strict chain or None)
QUINTIC_TABLE = (
    (11, 2, 2, [["z^2", "x*z", "x^3"]]),
    (13, 4, 0, None),
    (17, 3, 0, None),
)


@dataclass
class Row:
    label: str
    expected: str
    computed: str
    ok: bool


def quintic_rows() -> list:
    rows = []
    for p, level, prank, chain in QUINTIC_TABLE:
        f = parse_poly(QUINTIC, p)
        res = level_chain(f)
        data = analyze(from_weierstrass("x^5 + 2", p, 2))
        got_chain = [j.to_strings() for j in res.strict_chain]
        ok = res.level == level and data.p_rank == prank and (chain is None or got_chain == chain)
        exp = f"level {level}, p-rank {prank}" + (f", chain {chain}" if chain else "")
        comp = f"level {res.level}, p-rank {data.p_rank}" + (f", chain {got_chain}" if chain else "")
        rows.append(Row(f"quintic p={p}", exp, comp, ok))
    return rows


def transform_rows() -> list:
    rows = []
    for label, text, level in (("printed quintic p=13", TRANSFORM_QUINTIC, 3), ("printed sextic p=13", TRANSFORM_SEXTIC, 2)):
        res = level_chain(parse_poly(text, 13))
        rows.append(Row(label, f"level {level}", f"level {res.level}", res.level == level))
    return rows


def family_rows(genus: int = 2, mu: int = 1, lo: int = 7, hi: int = 100) -> list:
    """mu_x family: prediction vs Cartier-Manin; where superspecial, C_ext != 0 and level > 2."""
    rows = []
    for p in primes_between(lo, hi):
        model, predicted = family("mu_x", genus, mu, p)
        data = analyze(model)
        is_ss = data.classification == SUPERSPECIAL
        ok = predicted == is_ss
        comp = data.classification
        if predicted:
            res = level_chain(homogenize(model))
            level_ok = res.capped or (res.level is not None and res.level >= 3)
            ok = ok and data.extended_nonzero and level_ok and (res.level is None or res.level >= level_lower_bound(data))
            comp += f", C_ext {'!=' if data.extended_nonzero else '=='} 0, level {res.level if not res.capped else 'capped'}"
        exp = "superspecial, C_ext != 0, level >= 3" if predicted else "not superspecial"
        rows.append(Row(f"mu_x g={genus} p={p}", exp, comp, ok))
    return rows


def paper_report(max_p: int = 100) -> tuple:
    """Run the catalog; returns ``(rows, seconds)``."""
    t0 = time.perf_counter()
    rows = quintic_rows() + transform_rows() + family_rows(hi=max_p)
    return rows, time.perf_counter() - t0


def format_rows(rows) -> str:
    w0 = max(len(r.label) for r in rows)
    w1 = max(len(r.expected) for r in rows)
    lines = [f"{'example':<{w0}}  {'expected':<{w1}}  {'computed'}  result"]
    for r in rows:
        lines.append(f"{r.label:<{w0}}  {r.expected:<{w1}}  {r.computed}  {'PASS' if r.ok else 'FAIL'}")
    return "\n".join(lines)
