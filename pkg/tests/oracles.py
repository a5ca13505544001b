"""Independent brute-force references used only by the tests.

Nothing here touches the kernels, packing or base-p power splitting used
by the package.
"""

from itertools import product


def naive_mul(a: dict, b: dict, p: int) -> dict:
    out = {}
    for (ea, ca), (eb, cb) in product(a.items(), b.items()):
        k = tuple(x + y for x, y in zip(ea, eb))
        out[k] = (out.get(k, 0) + ca * cb) % p
    return {k: v for k, v in out.items() if v}


def naive_pow(a: dict, n: int, p: int, nvars: int) -> dict:
    out = {(0,) * nvars: 1}
    for _ in range(n):
        out = naive_mul(out, a, p)
    return out


def monomial_ideal_contains(gens: list, mono: tuple) -> bool:
    """Membership of a monomial in a monomial ideal by divisibility."""
    return any(all(a <= b for a, b in zip(g, mono)) for g in gens)


def eval_poly(terms: dict, point, p: int) -> int:
    acc = 0
    for e, c in terms.items():
        t = c
        for x, k in zip(point, e):
            t = t * pow(x, k, p) % p
        acc = (acc + t) % p
    return acc


def count_points_weierstrass(h_coeffs, p: int) -> int:
    """Affine points of y^2 = h(x) plus the point at infinity (odd degree)."""
    squares = {}
    for y in range(p):
        squares[y * y % p] = squares.get(y * y % p, 0) + 1
    n = 1
    for x in range(p):
        v = sum(c * pow(x, k, p) for k, c in enumerate(h_coeffs)) % p
        n += squares.get(v, 0)
    return n
