"""Exact univariate polynomials and rational functions over QQ in a parameter ``t``.

Polynomials are tuples of :class:`~fractions.Fraction` coefficients, lowest
degree first, with no trailing zeros (the zero polynomial is ``()``).
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

Poly = tuple

ZERO: Poly = ()
ONE: Poly = (Fraction(1),)
T: Poly = (Fraction(0), Fraction(1))


def poly(coeffs) -> Poly:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return poly(out)


def pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pscale(a: Poly, c) -> Poly:
    if c == 0:
        return ZERO
    return tuple(x * c for x in a)


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly(out)


def pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(rem) - 1 < db:
        return ZERO, poly(rem)
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        q = rem[k + db] / lead
        quot[k] = q
        if q:
            for j, y in enumerate(b):
                rem[k + j] -= q * y
    return poly(quot), poly(rem[:db])


def pmonic(a: Poly) -> Poly:
    return pscale(a, 1 / a[-1]) if a else a


def pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def peval(a: Poly, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def valuation(a: Poly) -> int | None:
    """t-adic valuation; ``None`` for the zero polynomial."""
    for i, c in enumerate(a):
        if c:
            return i
    return None


def pstr(a: Poly, var: str = "t") -> str:
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = f"{var}^{i}"
        if mono and abs(c) == 1:
            body = mono
        elif mono:
            body = f"{abs(c)}*{mono}"
        else:
            body = str(abs(c))
        parts.append(("-" if c < 0 else "+", body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class RatFunc:
    """An element of QQ(t), kept as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=ZERO, den=ONE, *, _reduced=False):
        if isinstance(num, (int, Rational)):
            num = poly([num])
        if isinstance(den, (int, Rational)):
            den = poly([den])
        num, den = poly(num), poly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced and den != ONE:
            if not num:
                den = ONE
            else:
                g = pgcd(num, den)
                if g != ONE:
                    num = pdivmod(num, g)[0]
                    den = pdivmod(den, g)[0]
                lead = den[-1]
                num, den = pscale(num, 1 / lead), pscale(den, 1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def t(cls) -> "RatFunc":
        return cls(T, ONE, _reduced=True)

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return cls(poly([x]), ONE, _reduced=True)

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = RatFunc.coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == ONE and len(self.num) <= 1:
            return hash(self.num[0] if self.num else 0)
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFunc(pneg(self.num), self.den, _reduced=True)

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return self
            return RatFunc(padd(self.num, pscale(self.den, other)), self.den, _reduced=True)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den == other.den:
            if self.den == ONE:
                return RatFunc(padd(self.num, other.num), ONE, _reduced=True)
            return RatFunc(padd(self.num, other.num), self.den)
        return RatFunc(padd(pmul(self.num, other.den), pmul(other.num, self.den)),
                       pmul(self.den, other.den))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return RatFunc()
            return RatFunc(pscale(self.num, other), self.den, _reduced=True)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den == ONE and other.den == ONE:
            return RatFunc(pmul(self.num, other.num), ONE, _reduced=True)
        return RatFunc(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return RatFunc(pscale(self.num, Fraction(1) / other), self.den, _reduced=True)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc.coerce(1)
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, x):
        d = peval(self.den, x)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return peval(self.num, x) / d

    def __str__(self):
        if self.den == ONE:
            return pstr(self.num)
        return f"({pstr(self.num)})/({pstr(self.den)})"

    def __repr__(self):
        return f"RatFunc({self})"
