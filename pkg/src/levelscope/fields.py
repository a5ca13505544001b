"""Exact arithmetic in F_p and dense linear algebra over it."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from . import kernels
from .errors import FieldError, InvalidTransformError, ShapeError

MAX_PRIME = 2**31 - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17)  # deterministic below 3.4e14


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    """Validate a modulus: an odd prime below 2**31. Returns ``p``."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise FieldError(f"modulus must be an int, got {p!r}")
    if p == 2:
        raise FieldError("p = 2 is not supported; an odd prime is required")
    if p > MAX_PRIME:
        raise FieldError(f"modulus {p} exceeds 2**31 - 1")
    if not is_prime(p):
        raise FieldError(f"modulus {p} is not prime")
    return p


def primes_between(lo: int, hi: int) -> list[int]:
    """Odd primes in the closed range [lo, hi]."""
    return [q for q in range(max(lo, 3), hi + 1) if is_prime(q)]


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise FieldError(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


@dataclass(frozen=True)
class FpElem:
    value: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise FieldError(f"moduli differ: {self.p} vs {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElem(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElem(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElem(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElem(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.value, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * inv_mod(o, self.p)

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return FpElem(pow(self.value, n, self.p), self.p)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def inv(self) -> FpElem:
        return FpElem(inv_mod(self.value, self.p), self.p)

    def __repr__(self):
        return f"FpElem({self.value} mod {self.p})"


def inv(a: FpElem) -> FpElem:
    return a.inv()


class FpMatrix:
    """Dense immutable matrix over F_p, stored row-major as tuples."""

    __slots__ = ("p", "rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence[int]], p: int, cols: Optional[int] = None):
        check_prime(p)
        rows = tuple(tuple(int(v) % p for v in r) for r in data)
        ncols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged matrix rows")
        self.p = p
        self.rows = len(rows)
        self.cols = ncols
        self._data = rows

    @classmethod
    def identity(cls, n: int, p: int) -> FpMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], p, cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> FpMatrix:
        return cls([[0] * cols for _ in range(rows)], p, cols=cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    @property
    def shape(self):
        return self.rows, self.cols

    def __eq__(self, other):
        return isinstance(other, FpMatrix) and self.p == other.p and self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.p, self.shape, self._data))

    def __repr__(self):
        return f"FpMatrix({self.tolist()}, p={self.p})"

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    def transpose(self) -> FpMatrix:
        return FpMatrix([list(c) for c in zip(*self._data)] if self.rows else [], self.p, cols=self.rows)

    def column_slice(self, start: int, stop: int) -> FpMatrix:
        return FpMatrix([r[start:stop] for r in self._data], self.p, cols=stop - start)

    def __matmul__(self, other: FpMatrix) -> FpMatrix:
        if self.p != other.p:
            raise FieldError(f"moduli differ: {self.p} vs {other.p}")
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        p = self.p
        cols = list(zip(*other._data)) if other.rows else [()] * other.cols
        out = [[sum(a * b for a, b in zip(r, c)) % p for c in cols] for r in self._data]
        return FpMatrix(out, p, cols=other.cols)

    def __pow__(self, k: int) -> FpMatrix:
        return power_matrix(self, k)

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> FpMatrix:
        if self.rows != self.cols:
            raise ShapeError("only square matrices are invertible")
        n = self.rows
        aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self._data)]
        red, piv = kernels.rref(aug, self.p)
        if piv[:n] != list(range(n)) or len(red) < n:
            raise InvalidTransformError("matrix is singular over F_%d" % self.p)
        return FpMatrix([r[n:] for r in red], self.p, cols=n)


def rank(m: FpMatrix) -> int:
    """Row rank over F_p by Gaussian elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, piv = kernels.rref(m.tolist(), m.p)
    return len(piv)


def power_matrix(c: FpMatrix, k: int) -> FpMatrix:
    """``c**k`` by repeated squaring; ``c**0`` is the identity."""
    if c.rows != c.cols:
        raise ShapeError("power of a non-square matrix")
    if k < 0:
        raise ValueError("negative matrix power")
    result = FpMatrix.identity(c.rows, c.p)
    base = c
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def solve_in_span(vectors: Sequence[Sequence[int]], target: Sequence[int], p: int) -> Optional[list[int]]:
    """Coefficients ``c`` with ``sum(c[i] * vectors[i]) == target`` mod p, or None.

    Free variables are set to zero, so the answer is deterministic.
    """
    check_prime(p)
    n = len(target)
    if any(len(v) != n for v in vectors):
        raise ShapeError("vectors and target must share one length")
    k = len(vectors)
    if k == 0:
        return [] if not any(t % p for t in target) else None
    # augmented system: one row per coordinate, one column per vector, target last
    aug = [[vectors[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    red, piv = kernels.rref(aug, p)
    if piv and piv[-1] == k:
        return None
    coeffs = [0] * k
    for row, c in zip(red, piv):
        coeffs[c] = row[k] % p
    return coeffs
