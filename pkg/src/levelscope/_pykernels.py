"""Pure-Python implementations of the hot kernels.

Both functions mirror the compiled versions in ``_kernels.pyx`` exactly,
including output ordering, so either backend can be swapped in.
"""


def poly_mul(ka, ca, kb, cb, p):
    """Product of two sparse polynomials given as packed exponent keys.

    Keys are Kronecker-packed monomials, so adding two keys multiplies the
    monomials.  Returns ``(keys, coefs)`` sorted by key with zeros dropped.
    """
    if len(ka) < len(kb):
        ka, ca, kb, cb = kb, cb, ka, ca
    acc = {}
    get = acc.get
    for k2, c2 in zip(kb, cb):
        for k1, c1 in zip(ka, ca):
            k = k1 + k2
            acc[k] = get(k, 0) + c1 * c2
    keys = []
    coefs = []
    for k in sorted(acc):
        c = acc[k] % p
        if c:
            keys.append(k)
            coefs.append(c)
    return keys, coefs


def rref(rows, p):
    """Reduced row echelon form over F_p.

    Pivots are chosen as the first nonzero entry scanning columns left to
    right.  Returns ``(nonzero_rows, pivot_columns)``; input is not modified.
    """
    m = [[v % p for v in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        inv = pow(row[c], p - 2, p)
        if inv != 1:
            row = [(v * inv) % p for v in row]
            m[r] = row
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    other = m[i]
                    m[i] = [(a - f * b) % p for a, b in zip(other, row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots
