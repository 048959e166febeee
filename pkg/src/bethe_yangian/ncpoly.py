"""Noncommutative polynomials in the RTT generators of Y(gl_n) and their PBW normal form.

A generator ``t[i,j;r]`` is stored as the letter ``(r, i, j)`` so that plain
tuple comparison is the level-major PBW order.  A monomial is a tuple of
letters; it is *normal* when its letters are non-decreasing.  The level-0
entries ``t[i,j;0] = delta_ij`` are never stored.

The commutation relations are not typed in by hand: :func:`component_relation`
reads them off the RTT relation with ``R(u) = 1 - P/u`` by multiplying matrix
units, and everything else is built on top of that.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .qt import RatFunc

Letter = tuple  # (level, row, col)
Monomial = tuple  # tuple of letters

NEG_INF = float("-inf")


class ConventionError(RuntimeError):
    """Raised when the derived commutation relations fail the startup self-check."""


class ParseError(ValueError):
    pass


def letter(i: int, j: int, r: int) -> Letter:
    if i < 1 or j < 1:
        raise ValueError(f"generator indices must be >= 1, got t[{i},{j};{r}]")
    if r < 1:
        raise ValueError(f"generator level must be >= 1, got t[{i},{j};{r}]")
    return (r, i, j)


def letter_str(x: Letter) -> str:
    r, i, j = x
    return f"t[{i},{j};{r}]"


def _is_scalar(c) -> bool:
    return isinstance(c, (int, Rational, RatFunc))


def _coerce(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


class NcElement:
    """A finite linear combination of words in the generators ``t[i,j;r]``.

    ``+``, ``-`` and scalar multiplication act termwise.  ``*`` between two
    elements is the product in the Yangian and always returns a normal form;
    use :meth:`free_mul` to concatenate words without rewriting.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[tuple(m)] = _coerce(c)

    @classmethod
    def _raw(cls, terms: dict) -> "NcElement":
        out = cls.__new__(cls)
        out.terms = terms
        return out

    @classmethod
    def generator(cls, i: int, j: int, r: int) -> "NcElement":
        return cls._raw({(letter(i, j, r),): Fraction(1)})

    @classmethod
    def scalar(cls, c) -> "NcElement":
        c = _coerce(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def word(cls, letters, coeff=1) -> "NcElement":
        """The unreduced word ``coeff * x1*x2*...`` from ``(i, j, r)`` triples."""
        m = tuple(letter(i, j, r) for i, j, r in letters)
        return cls._raw({m: _coerce(coeff)} if coeff else {})

    def copy(self) -> "NcElement":
        return NcElement._raw(dict(self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other):
        if _is_scalar(other):
            other = NcElement.scalar(other)
        if not isinstance(other, NcElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return NcElement._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if _is_scalar(other):
            other = NcElement.scalar(other)
        if not isinstance(other, NcElement):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return NcElement._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if _is_scalar(other):
            other = NcElement.scalar(other)
        if not isinstance(other, NcElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NcElement":
        c = _coerce(c)
        if not c:
            return NcElement()
        out = {}
        for m, v in self.terms.items():
            w = v * c
            if w:
                out[m] = w
        return NcElement._raw(out)

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, NcElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if _is_scalar(other):
            return self.scale(1 / _coerce(other) if not isinstance(other, RatFunc) else other.inverse())
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = NcElement.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def free_mul(self, other: "NcElement") -> "NcElement":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return NcElement._raw(out)

    def is_normal(self) -> bool:
        return all(is_normal_monomial(m) for m in self.terms)

    def degree(self):
        return degree(self)

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def homogeneous_part(self, d: int) -> "NcElement":
        return NcElement._raw({m: c for m, c in self.terms.items() if monomial_degree(m) == d})

    def map_coefficients(self, f) -> "NcElement":
        out = {}
        for m, c in self.terms.items():
            v = f(c)
            if v:
                out[m] = v
        return NcElement._raw(out)

    def letters(self) -> set:
        return {x for m in self.terms for x in m}

    def max_index(self) -> int:
        return max((max(x[1], x[2]) for x in self.letters()), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (monomial_degree(mc[0]), len(mc[0]), mc[0]))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"NcElement({render(self)})"


ZERO = NcElement()


def one() -> NcElement:
    return NcElement.scalar(1)


def t(i: int, j: int, r: int) -> NcElement:
    """The generator ``t[i,j;r]``; level 0 gives the scalar delta_ij."""
    if r == 0:
        return NcElement.scalar(1 if i == j else 0)
    return NcElement.generator(i, j, r)


def monomial_degree(m: Monomial) -> int:
    return sum(x[0] for x in m)


def is_normal_monomial(m: Monomial) -> bool:
    return all(m[k] <= m[k + 1] for k in range(len(m) - 1))


def degree(p: NcElement):
    """Filtration degree: max over monomials of the summed levels; ``-inf`` for 0."""
    if not p.terms:
        return NEG_INF
    return max(monomial_degree(m) for m in p.terms)


# ---------------------------------------------------------------------------
# The component relation, derived from R(u) = 1 - P/u
# ---------------------------------------------------------------------------

def _unit_mul(x, y):
    """Product of matrix units E_x E_y as a unit or ``None``."""
    return (x[0], y[1]) if x[1] == y[0] else None


def _tensor_mul(left, right):
    """Product of sums of elementary tensors, each a dict {(unit1, unit2): coeff}."""
    out: dict = {}
    for (a1, a2), c in left.items():
        for (b1, b2), d in right.items():
            p1, p2 = _unit_mul(a1, b1), _unit_mul(a2, b2)
            if p1 is not None and p2 is not None:
                out[(p1, p2)] = out.get((p1, p2), 0) + c * d
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def component_relation(a: int, b: int, c: int, d: int):
    """Read off the E_ab (x) E_cd component of ``P T1(u) T2(v)`` and ``T2(v) T1(u) P``.

    With ``R(u) = 1 - P/u`` the RTT relation is equivalent to
    ``(u - v)[T1(u), T2(v)] = P T1(u) T2(v) - T2(v) T1(u) P``.  Returns
    ``(left, right)`` where each side is a list of
    ``(coeff, (row, col) of the u-factor, (row, col) of the v-factor, u_first)``;
    ``u_first`` records which factor stands first in the product.
    """
    size = max(a, b, c, d)
    idx = range(1, size + 1)
    perm = {((p, q), (q, p)): 1 for p in idx for q in idx}
    target = ((a, b), (c, d))
    left, right = [], []
    for i, j, k, l in itertools.product(idx, repeat=4):
        tensor = {((i, j), (k, l)): 1}
        # P * (E_ij (x) E_kl): the algebra factor is t_ij(u) t_kl(v), u first
        coeff = _tensor_mul(perm, tensor).get(target, 0)
        if coeff:
            left.append((coeff, (i, j), (k, l), True))
        # (E_ij (x) E_kl) * P: the algebra factor is t_kl(v) t_ij(u), v first
        coeff = _tensor_mul(tensor, perm).get(target, 0)
        if coeff:
            right.append((coeff, (i, j), (k, l), False))
    return tuple(left), tuple(right)


def _t_word(row: int, col: int, level: int):
    """``t[row,col;level]`` as (scalar, letters) with level 0 folded to delta."""
    if level == 0:
        return (Fraction(1), ()) if row == col else (Fraction(0), ())
    return Fraction(1), ((level, row, col),)


@lru_cache(maxsize=None)
def commutator_words(x: Letter, y: Letter) -> tuple:
    """``[x, y]`` for generators x, y as a tuple of ``(words, coeff)`` pairs.

    Expanding ``1/(u - v)`` in the component relation gives
    ``[X^(r+1), Y^(s)] - [X^(r), Y^(s+1)] = rhs(r, s)``; telescoping down to
    ``X^(0)`` yields a sum over ``p < r``.  When ``r > s`` the shorter sum for
    ``-[y, x]`` is used instead.
    """
    r, a, b = x
    s, c, d = y
    if r > s:
        return tuple((w, -k) for w, k in commutator_words(y, x))
    left, right = component_relation(a, b, c, d)
    total = r + s - 1
    acc: dict = {}
    for p in range(r):
        q = total - p
        # coefficient of u^-p v^-q on the right-hand side
        for coeff, uf, vf, _ in left:
            c1, w1 = _t_word(uf[0], uf[1], p)
            c2, w2 = _t_word(vf[0], vf[1], q)
            if c1 and c2:
                acc[w1 + w2] = acc.get(w1 + w2, 0) + coeff * c1 * c2
        for coeff, uf, vf, _ in right:
            c1, w1 = _t_word(vf[0], vf[1], q)
            c2, w2 = _t_word(uf[0], uf[1], p)
            if c1 and c2:
                acc[w1 + w2] = acc.get(w1 + w2, 0) - coeff * c1 * c2
    return tuple((w, Fraction(k)) for w, k in sorted(acc.items()) if k)


def rtt_commutator(i: int, j: int, r: int, k: int, l: int, s: int, n: int | None = None) -> NcElement:
    """``[t[i,j;r], t[k,l;s]]`` in normal form."""
    if n is not None and not all(1 <= v <= n for v in (i, j, k, l)):
        raise ValueError(f"indices out of range for n={n}")
    x, y = letter(i, j, r), letter(k, l, s)
    out = NcElement()
    for w, c in commutator_words(x, y):
        out = out + NcElement._raw(_word_nf(w)).scale(c)
    return out


# ---------------------------------------------------------------------------
# Rewriting to normal form
# ---------------------------------------------------------------------------

def _accumulate(acc: dict, terms: dict, c) -> None:
    for m, v in terms.items():
        w = acc.get(m, 0) + c * v
        if w:
            acc[m] = w
        else:
            acc.pop(m, None)


@lru_cache(maxsize=None)
def _mul_letter(m: Monomial, x: Letter):
    """Normal form of ``m * x`` for a normal monomial m (returned as a frozen dict)."""
    if not m or m[-1] <= x:
        return ((m + (x,), Fraction(1)),)
    y = m[-1]
    head = m[:-1]
    acc: dict = {}
    # head * y * x = head * x * y + head * [y, x]
    for p, c in _mul_letter(head, x):
        for q, c2 in _mul_letter(p, y):
            w = acc.get(q, 0) + c * c2
            if w:
                acc[q] = w
            else:
                acc.pop(q, None)
    for word, c in commutator_words(y, x):
        _accumulate(acc, _mul_monomial_word(head, word), c)
    return tuple(acc.items())


def _mul_monomial_word(m: Monomial, word) -> dict:
    cur = {m: Fraction(1)}
    for x in word:
        nxt: dict = {}
        for p, c in cur.items():
            for q, c2 in _mul_letter(p, x):
                w = nxt.get(q, 0) + c * c2
                if w:
                    nxt[q] = w
                else:
                    nxt.pop(q, None)
        cur = nxt
    return cur


@lru_cache(maxsize=None)
def _mul_normal(m1: Monomial, m2: Monomial):
    return tuple(_mul_monomial_word(m1, m2).items())


def _word_nf(word: Monomial) -> dict:
    if is_normal_monomial(word):
        return {word: Fraction(1)}
    return _mul_monomial_word((), word)


def normal_form(p: NcElement) -> NcElement:
    """The unique combination of normal monomials equal to p modulo the RTT relations."""
    acc: dict = {}
    for m, c in p.terms.items():
        if is_normal_monomial(m):
            w = acc.get(m, 0) + c
            if w:
                acc[m] = w
            else:
                acc.pop(m, None)
        else:
            _accumulate(acc, _word_nf(m), c)
    return NcElement._raw(acc)


def multiply(p: NcElement, q: NcElement) -> NcElement:
    """Product of two elements, returned in normal form (inputs are normalized first)."""
    if not p.is_normal():
        p = normal_form(p)
    if not q.is_normal():
        q = normal_form(q)
    acc: dict = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            c = c1 * c2
            if not m1 or not m2 or m1[-1] <= m2[0]:
                m = m1 + m2
                w = acc.get(m, 0) + c
                if w:
                    acc[m] = w
                else:
                    acc.pop(m, None)
                continue
            for m, v in _mul_normal(m1, m2):
                w = acc.get(m, 0) + c * v
                if w:
                    acc[m] = w
                else:
                    acc.pop(m, None)
    return NcElement._raw(acc)


def commutator(p: NcElement, q: NcElement) -> NcElement:
    return multiply(p, q) - multiply(q, p)


def cache_info() -> dict:
    return {
        "mul_letter": _mul_letter.cache_info()._asdict(),
        "mul_normal": _mul_normal.cache_info()._asdict(),
    }


# ---------------------------------------------------------------------------
# PBW basis
# ---------------------------------------------------------------------------

def generator_letters(n: int, max_level: int) -> list:
    return sorted((r, i, j) for r in range(1, max_level + 1)
                  for i in range(1, n + 1) for j in range(1, n + 1))


@lru_cache(maxsize=None)
def _pbw_exact(n: int, d: int, start: int) -> tuple:
    """Normal monomials of degree exactly d using letters from index ``start`` on."""
    if d == 0:
        return ((),)
    letters = generator_letters(n, d)
    out = []
    for idx in range(start, len(letters)):
        x = letters[idx]
        if x[0] > d:
            break
        for rest in _pbw_exact(n, d - x[0], idx):
            out.append((x,) + rest)
    return tuple(out)


def pbw_basis(n: int, d: int, *, include_unit: bool = True) -> list:
    """All normal monomials of degree <= d, ordered by degree, then length, then letters."""
    if d < 0:
        raise ValueError("degree bound must be >= 0")
    out = []
    for k in range(0 if include_unit else 1, d + 1):
        out.extend(sorted(_pbw_exact(n, k, 0), key=lambda m: (len(m), m)))
    return out


# ---------------------------------------------------------------------------
# Algebra maps given on generators
# ---------------------------------------------------------------------------

def apply_homomorphism(p: NcElement, images) -> NcElement:
    """Extend ``letter -> NcElement`` multiplicatively and linearly to p.

    ``images`` is a callable or a mapping on letters ``(r, i, j)``.
    """
    get = images if callable(images) else images.__getitem__
    cache: dict = {}
    out = NcElement()
    for m, c in p.terms.items():
        val = NcElement.scalar(c)
        for x in m:
            img = cache.get(x)
            if img is None:
                img = cache[x] = get(x)
            val = val * img
        out = out + val
    return out


def relabel(p: NcElement, perm) -> NcElement:
    """Apply ``t[i,j;r] -> t[perm(i), perm(j); r]`` (``perm`` maps 1-based indices)."""
    get = perm if callable(perm) else perm.__getitem__
    return normal_form(NcElement._raw({
        tuple((r, get(i), get(j)) for r, i, j in m): c for m, c in p.terms.items()
    }))


# ---------------------------------------------------------------------------
# Text rendering and parsing
# ---------------------------------------------------------------------------

def _coeff_str(c) -> tuple[str, str]:
    """Sign and magnitude text of a coefficient."""
    if isinstance(c, RatFunc):
        if c.is_polynomial() and len(c.num) == 1:
            c = c.num[0]
        else:
            return "+", f"({c})"
    c = Fraction(c)
    return ("-" if c < 0 else "+"), str(abs(c))


def render(p: NcElement) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        sign, mag = _coeff_str(c)
        word = "*".join(letter_str(x) for x in m)
        if not word:
            body = mag
        elif mag == "1":
            body = word
        else:
            body = f"{mag} * {word}"
        pieces.append((sign, body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"""
    \s*(?:
      (?P<gen>t\s*\[\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*;\s*(?P<r>\d+)\s*\])
    | (?P<num>\d+)
    | (?P<param>t)
    | (?P<op>\*\*|[-+*/^()])
    )""", re.VERBOSE)


def _tokenize(text: str) -> list:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {pos}: {text[pos:pos + 12]!r}")
        pos = m.end()
        if m.group("gen"):
            out.append(("gen", (int(m.group("i")), int(m.group("j")), int(m.group("r")))))
        elif m.group("num"):
            out.append(("num", int(m.group("num"))))
        elif m.group("param"):
            out.append(("param", None))
        else:
            op = m.group("op")
            out.append(("op", "^" if op == "**" else op))
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}")

    def expr(self) -> NcElement:
        out = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> NcElement:
        out = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.unary()
            if op == "*":
                out = out.free_mul(rhs)
            else:
                if set(rhs.terms) - {()} or not rhs.terms:
                    raise ParseError("division is only defined by nonzero scalars")
                c = rhs.terms[()]
                out = out.scale(c.inverse() if isinstance(c, RatFunc) else 1 / c)
        return out

    def unary(self) -> NcElement:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> NcElement:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            out = NcElement.scalar(1)
            for _ in range(val):
                out = out.free_mul(base)
            return out
        return base

    def atom(self) -> NcElement:
        kind, val = self.take()
        if kind == "gen":
            i, j, r = val
            if r == 0:
                return NcElement.scalar(1 if i == j else 0)
            return NcElement.generator(i, j, r)
        if kind == "num":
            return NcElement.scalar(val)
        if kind == "param":
            return NcElement.scalar(RatFunc.t())
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def parse(text: str) -> NcElement:
    """Parse ``c * t[i,j;r]*t[k,l;s] + ...`` into an (unreduced) element.

    Coefficients are exact rationals ``p/q`` or rational functions of the
    parameter ``t``; ``^`` (or ``**``) takes non-negative integer powers.
    """
    parser = _Parser(_tokenize(text))
    if not parser.tokens:
        raise ParseError("empty expression")
    out = parser.expr()
    if parser.pos != len(parser.tokens):
        raise ParseError(f"trailing input after token {parser.pos}")
    return out


# ---------------------------------------------------------------------------
# Convention self-check
# ---------------------------------------------------------------------------

def sign_convention() -> int:
    """The sign eps with ``[t[1,1;1], t[1,2;1]] = eps * t[1,2;1]``."""
    val = rtt_commutator(1, 1, 1, 1, 2, 1)
    coeff = val.terms.get(((1, 1, 2),), 0)
    if set(val.terms) != {((1, 1, 2),)} or coeff not in (1, -1):
        raise ConventionError(f"unexpected level-1 commutator: {val}")
    return int(coeff)


def jacobi_sum(x: NcElement, y: NcElement, z: NcElement) -> NcElement:
    return (commutator(x, commutator(y, z)) + commutator(y, commutator(z, x))
            + commutator(z, commutator(x, y)))


def gl_skeleton_violations(n: int) -> list:
    """Level-1 pairs whose commutator differs from eps*(d_jk E_il - d_li E_kj)."""
    eps = sign_convention()
    bad = []
    for i, j, k, l in itertools.product(range(1, n + 1), repeat=4):
        got = rtt_commutator(i, j, 1, k, l, 1)
        want = t(i, l, 1).scale(1 if j == k else 0) - t(k, j, 1).scale(1 if l == i else 0)
        if got != want.scale(eps):
            bad.append(((i, j), (k, l)))
    return bad


def self_check(n: int = 3, max_level: int = 2) -> int:
    """Verify the gl_n skeleton and Jacobi identities on generators; returns eps."""
    eps = sign_convention()
    if gl_skeleton_violations(n):
        raise ConventionError("level-1 generators do not close onto gl_n")
    gens = [t(*ij, r) for r in range(1, max_level + 1)
            for ij in [(1, 1), (1, 2), (2, 1), (2, n)]]
    for a, b, c in itertools.combinations(gens, 3):
        if jacobi_sum(a, b, c):
            raise ConventionError(f"Jacobi identity fails on {a}, {b}, {c}")
    return eps


EPSILON = self_check()
