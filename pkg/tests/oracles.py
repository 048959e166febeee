"""Independent reference computations used by the tests.

Nothing here calls the rewriting engine: elements are evaluated in a tensor
product of evaluation modules, where every product is plain matrix
multiplication.
"""
from fractions import Fraction


def zeros(d):
    return [[Fraction(0)] * d for _ in range(d)]


def eye(d):
    return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]


def matmul(A, B):
    d = len(A)
    out = zeros(d)
    for i in range(d):
        Ai = A[i]
        for k in range(d):
            a = Ai[k]
            if a:
                Bk = B[k]
                row = out[i]
                for j in range(d):
                    if Bk[j]:
                        row[j] += a * Bk[j]
    return out


def madd(A, B, c=1):
    return [[a + c * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def kron(A, B):
    da, db = len(A), len(B)
    out = zeros(da * db)
    for i in range(da):
        for j in range(da):
            if A[i][j]:
                for k in range(db):
                    for l in range(db):
                        out[i * db + k][j * db + l] = A[i][j] * B[k][l]
    return out


def unit(n, i, j):
    M = zeros(n)
    M[i - 1][j - 1] = Fraction(1)
    return M


def evaluation_image(n, a, i, j, r):
    """Image of t[i,j;r] under t_ij(u) -> delta_ij - E_ji/(u - a), namely -a^(r-1) E_ji."""
    if r == 0:
        return eye(n) if i == j else zeros(n)
    return [[-Fraction(a) ** (r - 1) * x for x in row] for row in unit(n, j, i)]


def coproduct_image(n, points, i, j, r):
    """Image of t[i,j;r] in the tensor product of evaluation modules at ``points``.

    Uses t_ij(u) -> sum_k t_ik(u) (x) t_kj(u) iterated.
    """
    if len(points) == 1:
        return evaluation_image(n, points[0], i, j, r)
    dim_rest = n ** (len(points) - 1)
    out = zeros(n * dim_rest)
    for p in range(r + 1):
        for k in range(1, n + 1):
            left = evaluation_image(n, points[0], i, k, p)
            right = coproduct_image(n, points[1:], k, j, r - p)
            out = madd(out, kron(left, right))
    return out


class Representation:
    def __init__(self, n, points):
        self.n = n
        self.points = tuple(points)
        self.dim = n ** len(points)
        self._cache = {}

    def letter(self, x):
        if x not in self._cache:
            r, i, j = x
            self._cache[x] = coproduct_image(self.n, self.points, i, j, r)
        return self._cache[x]

    def element(self, p):
        out = zeros(self.dim)
        for m, c in p.terms.items():
            M = eye(self.dim)
            for x in m:
                M = matmul(M, self.letter(x))
            out = madd(out, M, c)
        return out


def commutator_closed_form(i, j, r, k, l, s):
    """``[t_ij^(r), t_kl^(s)] = sum_{p<min(r,s)} t_kj^(p) t_il^(r+s-1-p) - t_kj^(r+s-1-p) t_il^(p)``
    as a dict of two-letter words (level-0 letters folded to deltas)."""
    acc = {}

    def word(a, b, lvl):
        if lvl == 0:
            return (1 if a == b else 0), ()
        return 1, ((lvl, a, b),)

    for p in range(min(r, s)):
        q = r + s - 1 - p
        for sign, (x1, x2) in ((1, ((k, j, p), (i, l, q))), (-1, ((k, j, q), (i, l, p)))):
            c1, w1 = word(*x1)
            c2, w2 = word(*x2)
            if c1 and c2:
                acc[w1 + w2] = acc.get(w1 + w2, 0) + sign
    return {w: Fraction(c) for w, c in acc.items() if c}


def colored_partitions_via_series(colors, d):
    """Coefficients of prod (1-q^r)^(-colors) by truncated power-series multiplication."""
    coeffs = [1] + [0] * d
    for r in range(1, d + 1):
        for _ in range(colors):
            # multiply by 1/(1 - q^r) = sum q^{r m}
            for m in range(r, d + 1):
                coeffs[m] += coeffs[m - r]
    return coeffs
