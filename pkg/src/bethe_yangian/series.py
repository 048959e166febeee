"""Truncated series in u^-1 whose coefficients live in a (possibly noncommutative) ring.

Coefficients may be any objects supporting ``+``, ``-``, ``*`` and truthiness:
rationals, :class:`~bethe_yangian.ncpoly.NcElement`, or classical commutative
polynomials.  Products always keep the left factor on the left.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb


class SeriesError(ValueError):
    pass


def _is_zero(c) -> bool:
    return not c


class USeries:
    """``sum_{r=0}^{N} c_r u^{-r}`` known modulo ``u^{-(N+1)}``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise SeriesError("a series needs at least its constant coefficient")
        self.coeffs = coeffs

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, N: int) -> "USeries":
        return cls([c] + [Fraction(0)] * N)

    @classmethod
    def zero(cls, N: int) -> "USeries":
        return cls.constant(Fraction(0), N)

    @classmethod
    def one(cls, N: int) -> "USeries":
        return cls.constant(Fraction(1), N)

    def __getitem__(self, r: int):
        if r < 0 or r > self.N:
            raise IndexError(f"coefficient u^-{r} is beyond truncation order {self.N}")
        return self.coeffs[r]

    def truncate(self, N: int) -> "USeries":
        if N > self.N:
            raise SeriesError(f"cannot extend a series known to order {self.N} up to {N}")
        return USeries(self.coeffs[:N + 1])

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def map(self, f) -> "USeries":
        return USeries([f(c) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        N = min(self.N, other.N)
        return all(_is_zero(a - b) for a, b in zip(self.coeffs[:N + 1], other.coeffs[:N + 1]))

    __hash__ = None

    def __neg__(self):
        return USeries([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, USeries):
            return USeries([self.coeffs[0] + other] + self.coeffs[1:])
        N = min(self.N, other.N)
        return USeries([self.coeffs[r] + other.coeffs[r] for r in range(N + 1)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, USeries):
            return USeries([c * other for c in self.coeffs])
        N = min(self.N, other.N)
        out = []
        for m in range(N + 1):
            acc = Fraction(0)
            for r in range(m + 1):
                a, b = self.coeffs[r], other.coeffs[m - r]
                if _is_zero(a) or _is_zero(b):
                    continue
                acc = acc + a * b
            out.append(acc)
        return USeries(out)

    def __rmul__(self, other):
        return USeries([other * c for c in self.coeffs])

    def __str__(self):
        parts = []
        for r, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            parts.append(f"({c})" if r == 0 else f"({c}) u^-{r}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} [trunc {self.N}]"

    def __repr__(self):
        return f"USeries({self})"


def shift(S: USeries, a) -> USeries:
    """``S(u - a)`` re-expanded in u^-1, using ``(u-a)^-r = sum_p C(r+p-1, p) a^p u^(-r-p)``."""
    a = Fraction(a)
    if a == 0:
        return USeries(list(S.coeffs))
    out = [S.coeffs[0]]
    for m in range(1, S.N + 1):
        acc = Fraction(0)
        for r in range(1, m + 1):
            c = S.coeffs[r]
            if _is_zero(c):
                continue
            w = comb(m - 1, m - r) * a ** (m - r)
            if w:
                acc = acc + c * w
        out.append(acc)
    return USeries(out)


def alternate_signs(S: USeries) -> USeries:
    """``S(-u)``."""
    return USeries([c if r % 2 == 0 else -c for r, c in enumerate(S.coeffs)])


def reflect_shift(S: USeries, n) -> USeries:
    """``S(-u - n)``: since ``(-u-n)^-r = (-1)^r (u+n)^-r`` this is a sign flip followed by ``u -> u + n``."""
    return shift(alternate_signs(S), -Fraction(n))


def _check_unital(c0) -> None:
    if c0 != 1:
        raise SeriesError(f"series inversion needs constant term 1, got {c0}")


def invert(S: USeries) -> USeries:
    """Two-sided inverse of a series with constant term 1.

    ``b_0 = 1`` and ``b_m = -sum_{j>=1} a_j b_{m-j}``; the same recursion gives
    the right inverse, so the result is two-sided even for noncommuting
    coefficients.
    """
    _check_unital(S.coeffs[0])
    b = [Fraction(1)]
    for m in range(1, S.N + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            a = S.coeffs[j]
            if _is_zero(a) or _is_zero(b[m - j]):
                continue
            acc = acc - a * b[m - j]
        b.append(acc)
    return USeries(b)


class MatrixSeries:
    """A square array of :class:`USeries` of common truncation order."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = [list(r) for r in entries]
        size = len(rows)
        if any(len(r) != size for r in rows):
            raise SeriesError("matrix series must be square")
        N = min(e.N for r in rows for e in r) if size else 0
        self.entries = [[e if e.N == N else e.truncate(N) for e in r] for r in rows]

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def N(self) -> int:
        return self.entries[0][0].N if self.entries else 0

    @classmethod
    def identity(cls, size: int, N: int) -> "MatrixSeries":
        return cls([[USeries.one(N) if i == j else USeries.zero(N) for j in range(size)]
                    for i in range(size)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def entry(self, i: int, j: int) -> USeries:
        """1-based access."""
        return self.entries[i - 1][j - 1]

    def coefficient_matrix(self, r: int) -> list:
        return [[e.coeffs[r] for e in row] for row in self.entries]

    @classmethod
    def from_coefficient_matrices(cls, mats) -> "MatrixSeries":
        size = len(mats[0])
        return cls([[USeries([m[i][j] for m in mats]) for j in range(size)] for i in range(size)])

    def is_unital(self) -> bool:
        c0 = self.coefficient_matrix(0)
        return all(c0[i][j] == (1 if i == j else 0) for i in range(self.size) for j in range(self.size))

    def map(self, f) -> "MatrixSeries":
        return MatrixSeries([[f(e) for e in row] for row in self.entries])

    def __eq__(self, other):
        if not isinstance(other, MatrixSeries):
            return NotImplemented
        return self.size == other.size and all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    __hash__ = None

    def __add__(self, other):
        return MatrixSeries([[a + b for a, b in zip(ra, rb)]
                             for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return MatrixSeries([[a - b for a, b in zip(ra, rb)]
                             for ra, rb in zip(self.entries, other.entries)])

    def __mul__(self, other):
        if not isinstance(other, MatrixSeries):
            return self.map(lambda e: e * other)
        size = self.size
        out = []
        for i in range(size):
            row = []
            for j in range(size):
                acc = USeries.zero(min(self.N, other.N))
                for k in range(size):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return MatrixSeries(out)

    def __str__(self):
        return "\n".join(" | ".join(str(e) for e in row) for row in self.entries)


def _matmul(A, B):
    size = len(A)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = Fraction(0)
            for k in range(size):
                a, b = A[i][k], B[k][j]
                if _is_zero(a) or _is_zero(b):
                    continue
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def invert_matrix(M: MatrixSeries) -> MatrixSeries:
    """Inverse of a unital matrix series by the matrix geometric recursion."""
    if not M.is_unital():
        raise SeriesError("matrix series inversion needs identity constant term")
    size, N = M.size, M.N
    coeff = [M.coefficient_matrix(r) for r in range(N + 1)]
    b = [[[Fraction(1 if i == j else 0) for j in range(size)] for i in range(size)]]
    for m in range(1, N + 1):
        acc = [[Fraction(0)] * size for _ in range(size)]
        for j in range(1, m + 1):
            prod = _matmul(coeff[j], b[m - j])
            acc = [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(acc, prod)]
        b.append(acc)
    return MatrixSeries.from_coefficient_matrices(b)


def matrix_reflect_shift(M: MatrixSeries, n) -> MatrixSeries:
    return M.map(lambda e: reflect_shift(e, n))


def matrix_shift(M: MatrixSeries, a) -> MatrixSeries:
    return M.map(lambda e: shift(e, a))
