"""The Poisson algebra of functions on the first congruence subgroup of GL_n[[u^-1]].

Elements are commutative polynomials in symbols ``g[i,j;r]``; the bracket of
two symbols comes from the same component expansion of the RTT relation that
drives the quantum rewriting, read with commuting products.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .linalg import rank
from .ncpoly import NEG_INF, NcElement, commutator_words, letter, normal_form
from .series import USeries
from .yangian import det, permutation_sign


class ClassicalElement:
    """A polynomial in ``g[i,j;r]``; monomials are sorted tuples of ``(r, i, j)`` letters."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for m, c in (terms or {}).items():
            if c:
                key = tuple(sorted(m))
                v = self.terms.get(key, 0) + Fraction(c)
                if v:
                    self.terms[key] = v
                else:
                    self.terms.pop(key, None)

    @classmethod
    def _raw(cls, terms):
        out = cls.__new__(cls)
        out.terms = terms
        return out

    @classmethod
    def generator(cls, i, j, r) -> "ClassicalElement":
        return cls._raw({(letter(i, j, r),): Fraction(1)})

    @classmethod
    def scalar(cls, c) -> "ClassicalElement":
        return cls._raw({(): Fraction(c)} if c else {})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ClassicalElement.scalar(other)
        if not isinstance(other, ClassicalElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def _combine(self, other, sign):
        if not isinstance(other, ClassicalElement):
            other = ClassicalElement.scalar(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + sign * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return ClassicalElement._raw(out)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ClassicalElement._raw({m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "ClassicalElement":
        if not c:
            return ClassicalElement()
        return ClassicalElement._raw({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, ClassicalElement):
            return self.scale(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return ClassicalElement._raw(out)

    def __rmul__(self, other):
        return self.scale(other)

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(x[0] for x in m) for m in self.terms)

    def homogeneous_part(self, d: int) -> "ClassicalElement":
        return ClassicalElement._raw({m: c for m, c in self.terms.items()
                                      if sum(x[0] for x in m) == d})

    def linear_part(self) -> dict:
        """``{letter: coefficient}`` of the degree-one (in the symbols) terms: the gradient at 0."""
        return {m[0]: c for m, c in self.terms.items() if len(m) == 1}

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in sorted(self.terms.items(), key=lambda mc: (sum(x[0] for x in mc[0]), mc[0])):
            word = "*".join(f"g[{i},{j};{r}]" for r, i, j in m)
            mag = abs(c)
            body = word if mag == 1 and word else (f"{mag} * {word}" if word else str(mag))
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for s, b in pieces[1:]:
            out += f" {s} {b}"
        return out

    __repr__ = __str__


def g(i: int, j: int, r: int) -> ClassicalElement:
    if r == 0:
        return ClassicalElement.scalar(1 if i == j else 0)
    return ClassicalElement.generator(i, j, r)


def _generator_bracket(x, y) -> ClassicalElement:
    return ClassicalElement({w: c for w, c in _bracket_terms(x, y)})


def _bracket_terms(x, y):
    acc: dict = {}
    for w, c in commutator_words(x, y):
        key = tuple(sorted(w))
        acc[key] = acc.get(key, 0) + c
    return [(k, v) for k, v in acc.items() if v]


def poisson_bracket(f: ClassicalElement, h: ClassicalElement) -> ClassicalElement:
    """Biderivation extending the bracket of symbols."""
    out: dict = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in h.terms.items():
            for a in range(len(m1)):
                rest1 = m1[:a] + m1[a + 1:]
                for b in range(len(m2)):
                    rest2 = m2[:b] + m2[b + 1:]
                    for w, c in _bracket_terms(m1[a], m2[b]):
                        key = tuple(sorted(rest1 + rest2 + w))
                        v = out.get(key, 0) + c1 * c2 * c
                        if v:
                            out[key] = v
                        else:
                            out.pop(key, None)
    return ClassicalElement._raw(out)


def jacobi_sum(a, b, c) -> ClassicalElement:
    pb = poisson_bracket
    return pb(a, pb(b, c)) + pb(b, pb(c, a)) + pb(c, pb(a, b))


# ---------------------------------------------------------------------------
# Classical Bethe generators
# ---------------------------------------------------------------------------

def g_series(i: int, j: int, N: int) -> USeries:
    return USeries([ClassicalElement.scalar(1 if i == j else 0)] + [g(i, j, r) for r in range(1, N + 1)])


def classical_minor(rows, cols, N: int) -> USeries:
    """Ordinary minor of ``g(u) = I + sum_r g^{(r)} u^-r`` (no argument shifts)."""
    acc = USeries([ClassicalElement()] * (N + 1))
    k = len(rows)
    for perm in itertools.permutations(range(k)):
        prod = USeries.one(N)
        for m in range(k):
            prod = prod * g_series(rows[perm[m]], cols[m], N)
        acc = acc + prod if permutation_sign(perm) > 0 else acc - prod
    return acc.map(lambda c: c if isinstance(c, ClassicalElement) else ClassicalElement.scalar(c))


def sigma_series(n: int, k: int, C, N: int) -> USeries:
    """``sum_{S, S'} det C[S', S] * minor_{S, S'}(g(u))``; for diagonal C this is
    ``sum_S lambda_S minor_{S,S}``."""
    C = list(C)
    if C and not isinstance(C[0], (list, tuple)):
        C = [[C[i] if i == j else 0 for j in range(n)] for i in range(n)]
    acc = USeries([ClassicalElement()] * (N + 1))
    subsets = list(itertools.combinations(range(1, n + 1), k))
    for S in subsets:
        for S2 in subsets:
            w = det([[Fraction(C[b - 1][a - 1]) for a in S] for b in S2])
            if w:
                acc = acc + classical_minor(S, S2, N) * w
    return acc


def sigma_generators(n: int, C, d: int) -> dict:
    """``{(k, r): sigma_k^{(r)}}`` for k = 1..n, r = 1..d."""
    out = {}
    for k in range(1, n + 1):
        s = sigma_series(n, k, C, d)
        for r in range(1, d + 1):
            out[(k, r)] = s.coeffs[r]
    return out


def poisson_commute_check(n: int, C, d: int) -> dict:
    gens = sigma_generators(n, C, d)
    keys = sorted(gens)
    violations = []
    count = 0
    for a, b in itertools.combinations(keys, 2):
        count += 1
        br = poisson_bracket(gens[a], gens[b])
        if br:
            violations.append({"pair": [list(a), list(b)], "bracket": str(br)})
    return {"pairs_checked": count, "violations": violations,
            "status": "pass" if not violations else "fail"}


def jacobian_rank(n: int, C, d: int) -> dict:
    """Ranks of the differentials at the origin of all ``sigma_k^{(r)}``.

    Rows are grouped by r and columns by the level s of ``g[i,j;s]``; the
    off-diagonal (r != s) blocks are reported and expected to vanish.
    """
    gens = sigma_generators(n, C, d)
    variables = [(s, i, j) for s in range(1, d + 1) for i in range(1, n + 1) for j in range(1, n + 1)]
    col = {v: idx for idx, v in enumerate(variables)}
    per_degree = []
    cross_nonzero = []
    all_rows = []
    for r in range(1, d + 1):
        rows = []
        for k in range(1, n + 1):
            grad = gens[(k, r)].linear_part()
            vec = {col[x]: c for x, c in grad.items()}
            all_rows.append(vec)
            rows.append(vec)
            for x, c in grad.items():
                if x[0] != r and c:
                    cross_nonzero.append({"generator": [k, r], "variable": list(x)})
        per_degree.append(rank(rows))
    return {"per_degree": per_degree, "total": rank(all_rows),
            "cross_degree_nonzero": cross_nonzero}


# ---------------------------------------------------------------------------
# Symbols
# ---------------------------------------------------------------------------

def to_classical(p: NcElement) -> ClassicalElement:
    """``t[i,j;r] -> g[i,j;r]`` on every monomial (commutative image)."""
    return ClassicalElement({m: c for m, c in p.terms.items()})


def symbol(p: NcElement, d: int | None = None) -> ClassicalElement:
    """Image in the associated graded: the degree-d part (default: top degree) of the normal form."""
    p = normal_form(p)
    if not p:
        return ClassicalElement()
    if d is None:
        d = int(p.degree())
    return to_classical(p.homogeneous_part(d))
