"""Series-level structure of Y(gl_n): the T-matrix, quantum minors, fused traces,
the involution gamma_n, the embeddings iota / xi / eta, Gauss coordinates and
the A/B/C series, and the Gelfand-Tsetlin and Levi generator lists.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ncpoly import NcElement, apply_homomorphism, multiply, normal_form, t
from .series import (MatrixSeries, USeries, invert, invert_matrix, matrix_reflect_shift,
                     shift)


class CalibrationError(RuntimeError):
    """No shift in the search window makes the A/B/C relations hold."""


@dataclass(frozen=True)
class YangianContext:
    n: int
    N: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.N < 1:
            raise ValueError("truncation order N must be >= 1")

    def check_index(self, *idx: int) -> None:
        for i in idx:
            if not 1 <= i <= self.n:
                raise ValueError(f"index {i} out of range 1..{self.n}")


def permutation_sign(perm) -> int:
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def det(M):
    """Leibniz determinant of a small square matrix over any commutative field."""
    k = len(M)
    acc = Fraction(0)
    for perm in itertools.permutations(range(k)):
        prod = Fraction(permutation_sign(perm))
        for r in range(k):
            prod = prod * M[r][perm[r]]
            if not prod:
                break
        acc = acc + prod
    return acc


# ---------------------------------------------------------------------------
# Generator series and products
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _t_series(N: int, i: int, j: int, a: Fraction) -> USeries:
    base = USeries([Fraction(1 if i == j else 0)] + [t(i, j, r) for r in range(1, N + 1)])
    return shift(base, a)


def t_series(ctx: YangianContext, i: int, j: int) -> USeries:
    ctx.check_index(i, j)
    return _t_series(ctx.N, i, j, Fraction(0))


def t_matrix(ctx: YangianContext) -> MatrixSeries:
    return MatrixSeries([[t_series(ctx, i, j) for j in range(1, ctx.n + 1)]
                         for i in range(1, ctx.n + 1)])


@lru_cache(maxsize=None)
def staggered_product(N: int, pairs: tuple) -> USeries:
    """``t_{p1}(u) t_{p2}(u-1) ... t_{pk}(u-k+1)`` for index pairs p."""
    if not pairs:
        return USeries.one(N)
    head = staggered_product(N, pairs[:-1])
    i, j = pairs[-1]
    return head * _t_series(N, i, j, Fraction(len(pairs) - 1))


def _minor(N: int, rows: tuple, cols: tuple) -> USeries:
    if len(set(rows)) < len(rows) or len(set(cols)) < len(cols):
        return USeries.zero(N)
    return _minor_cached(N, rows, cols)


@lru_cache(maxsize=None)
def _minor_cached(N: int, rows: tuple, cols: tuple) -> USeries:
    k = len(rows)
    acc = USeries.zero(N)
    for perm in itertools.permutations(range(k)):
        prod = staggered_product(N, tuple((rows[perm[m]], cols[m]) for m in range(k)))
        acc = acc + prod if permutation_sign(perm) > 0 else acc - prod
    return acc


def quantum_minor(ctx: YangianContext, rows, cols) -> USeries:
    """``t^{rows}_{cols}(u) = sum_s sgn(s) t_{a_s(1) b_1}(u) ... t_{a_s(k) b_k}(u-k+1)``.

    Rows and columns are arbitrary sequences; a repeated index gives the zero series.
    """
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols) or not rows:
        raise ValueError("a quantum minor needs equally many (>= 1) rows and columns")
    ctx.check_index(*rows, *cols)
    return _minor(ctx.N, rows, cols)


def principal_minor(ctx: YangianContext, k: int) -> USeries:
    return quantum_minor(ctx, range(1, k + 1), range(1, k + 1))


def qdet(ctx: YangianContext) -> USeries:
    return principal_minor(ctx, ctx.n)


# ---------------------------------------------------------------------------
# Fused traces
# ---------------------------------------------------------------------------

def _as_matrix(ctx: YangianContext, C):
    """Accept an n x n matrix or a length-n diagonal."""
    C = list(C)
    if C and not isinstance(C[0], (list, tuple)):
        return [[C[i] if i == j else Fraction(0) for j in range(len(C))] for i in range(len(C))]
    if len(C) != ctx.n or any(len(r) != ctx.n for r in C):
        raise ValueError(f"parameter must be {ctx.n} x {ctx.n}")
    return [list(r) for r in C]


def fused_tau(ctx: YangianContext, k: int, C) -> USeries:
    """``tr A_k C_1 ... C_k T_1(u) ... T_k(u-k+1)`` with ``A_k = sum sgn(s) P_s``.

    Contracting the trace leaves
    ``sum_{l, j} det[C_{j_p l_m}] t_{l_1 j_1}(u) ... t_{l_k j_k}(u-k+1)``
    over sequences l, j of distinct indices.
    """
    if not 1 <= k <= ctx.n:
        raise ValueError(f"k must lie in 1..{ctx.n}")
    C = _as_matrix(ctx, C)
    acc = USeries.zero(ctx.N)
    idx = range(1, ctx.n + 1)
    for l in itertools.permutations(idx, k):
        for j in itertools.permutations(idx, k):
            w = det([[C[j[p] - 1][l[m] - 1] for m in range(k)] for p in range(k)])
            if w:
                acc = acc + staggered_product(ctx.N, tuple(zip(l, j))) * w
    return acc


def minor_tau(ctx: YangianContext, k: int, lam) -> USeries:
    """``sum_{|S| = k} lambda_S t^S_S(u)`` for a diagonal parameter."""
    lam = list(lam)
    if len(lam) != ctx.n:
        raise ValueError(f"need {ctx.n} eigenvalues")
    acc = USeries.zero(ctx.N)
    for S in itertools.combinations(range(1, ctx.n + 1), k):
        w = Fraction(1)
        for a in S:
            w = w * lam[a - 1]
        if w:
            acc = acc + quantum_minor(ctx, S, S) * w
    return acc


def general_minor_tau(ctx: YangianContext, k: int, C) -> USeries:
    """``sum_{S, S'} det C[S', S] t^{S}_{S'}(u)``: the minor form of a fused trace for any C."""
    C = _as_matrix(ctx, C)
    acc = USeries.zero(ctx.N)
    subsets = list(itertools.combinations(range(1, ctx.n + 1), k))
    for S in subsets:
        for S2 in subsets:
            w = det([[C[b - 1][a - 1] for a in S] for b in S2])
            if w:
                acc = acc + quantum_minor(ctx, S, S2) * w
    return acc


def proportionality(X: USeries, Y: USeries):
    """The scalar c with ``X = c*Y``, or None if there is none (Y must be nonzero)."""
    for y, x in zip(Y.coeffs, X.coeffs):
        y, x = _as_nc(y), _as_nc(x)
        if y:
            m, c = next(iter(y.terms.items()))
            ratio = x.terms.get(m, 0) / c
            return ratio if X == Y * ratio else None
    return None


@lru_cache(maxsize=None)
def fusion_constant(n: int, k: int) -> Fraction:
    """kappa_k with ``fused_tau(k, diag) = kappa_k * minor_tau(k, diag)``, measured at N = 1."""
    ctx = YangianContext(n, 1)
    lam = [Fraction(i + 2) for i in range(n)]
    ratio = proportionality(fused_tau(ctx, k, lam), minor_tau(ctx, k, lam))
    if ratio is None:
        raise AssertionError(f"fused trace is not proportional to the minor form for k={k}")
    return ratio


# ---------------------------------------------------------------------------
# gamma_n and the embeddings
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def gamma_matrix(ctx: YangianContext) -> MatrixSeries:
    """``T(-u-n)^{-1}``: entry (i, j), coefficient r is the image of t[i,j;r] under gamma_n."""
    return invert_matrix(matrix_reflect_shift(t_matrix(ctx), ctx.n))


def gamma_generator(ctx: YangianContext, x) -> NcElement:
    r, i, j = x
    if r > ctx.N:
        raise ValueError(f"gamma of level {r} needs truncation order >= {r}")
    ctx.check_index(i, j)
    return gamma_matrix(ctx).entry(i, j).coeffs[r]


def gamma(ctx: YangianContext, obj):
    """Apply gamma_n to an element, a series (coefficient-wise) or a matrix series."""
    if isinstance(obj, MatrixSeries):
        return obj.map(lambda e: gamma(ctx, e))
    if isinstance(obj, USeries):
        return obj.map(lambda c: gamma(ctx, c))
    if isinstance(obj, NcElement):
        return apply_homomorphism(obj, lambda x: gamma_generator(ctx, x))
    return obj


def iota(p: NcElement, n: int | None = None) -> NcElement:
    """``t[i,j;r] -> t[i,j;r]``: Y(gl_m) into Y(gl_n) on the leading block."""
    if n is not None and p.max_index() > n:
        raise ValueError("element does not live in the target")
    return p.copy()


def xi(p: NcElement, offset: int) -> NcElement:
    """``t[i,j;r] -> t[offset+i, offset+j; r]``: Y(gl_k) onto the trailing block."""
    return NcElement._raw({tuple((r, i + offset, j + offset) for r, i, j in m): c
                           for m, c in p.terms.items()})


def eta(p: NcElement, n: int, k: int, N: int | None = None) -> NcElement:
    """``gamma_n o xi_{n-k} o gamma_k``: Y(gl_k) -> Y(gl_n)."""
    if p.max_index() > k:
        raise ValueError(f"element does not live in Y(gl_{k})")
    level = max((x[0] for x in p.letters()), default=1)
    N = max(N or 1, level)
    small = YangianContext(k, N)
    big = YangianContext(n, N)
    return gamma(big, xi(gamma(small, p), n - k))


def eta_series(s: USeries, n: int, k: int) -> USeries:
    return s.map(lambda c: eta(c, n, k, s.N) if isinstance(c, NcElement) else c)


def eta_minor_closed(ctx: YangianContext, k: int, rows, cols) -> USeries:
    """``Q(u+n-k)^{-1} t^{1..n-k, n-k+rows}_{1..n-k, n-k+cols}(u+n-k)`` with Q the leading
    principal minor of size n-k."""
    m = ctx.n - k
    head = tuple(range(1, m + 1))
    Q = principal_minor(ctx, m) if m else USeries.one(ctx.N)
    big = quantum_minor(ctx, head + tuple(m + a for a in rows), head + tuple(m + b for b in cols))
    return invert(shift(Q, -m)) * shift(big, -m)


# ---------------------------------------------------------------------------
# Gauss decomposition and A/B/C series
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def gauss_decompose(ctx: YangianContext):
    """``T(u) = F(u) D(u) E(u)`` by successive Schur complements."""
    n, N = ctx.n, ctx.N
    M = [[t_series(ctx, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    zero, one = USeries.zero(N), USeries.one(N)
    F = [[one if i == j else zero for j in range(n)] for i in range(n)]
    E = [[one if i == j else zero for j in range(n)] for i in range(n)]
    D = [[zero] * n for _ in range(n)]
    for p in range(n):
        d = M[p][p]
        D[p][p] = d
        inv = invert(d)
        for j in range(p + 1, n):
            E[p][j] = inv * M[p][j]
        for i in range(p + 1, n):
            F[i][p] = M[i][p] * inv
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                M[i][j] = M[i][j] - F[i][p] * M[p][j]
    return MatrixSeries(F), MatrixSeries(D), MatrixSeries(E)


def a_series(ctx: YangianContext, i: int, s=0) -> USeries:
    """``t^{1..i}_{1..i}(u + s)``."""
    return shift(principal_minor(ctx, i), -Fraction(s))


def abc_series(ctx: YangianContext, i: int, s=0):
    """``(A_i, B_i, C_i)`` with ``A_i(u) = t^{1..i}_{1..i}(u + s)``, ``B_i = A_i E_{i,i+1}``,
    ``C_i = F_{i+1,i} A_i``."""
    if not 1 <= i <= ctx.n - 1:
        raise ValueError(f"i must lie in 1..{ctx.n - 1}")
    F, _, E = gauss_decompose(ctx)
    A = a_series(ctx, i, s)
    return A, A * E.entry(i, i + 1), F.entry(i + 1, i) * A


# The two orderings in which the right-hand side of an A/X relation can be written.
#   "XA": (u-v)[A(u), X(v)] = sign * (X(u)A(v) - X(v)A(u))
#   "AX": (u-v)[A(u), X(v)] = sign * (A(u)X(v) - A(v)X(u))
PRINTED_FORMS = {"B": ("XA", 1), "C": ("XA", 1)}


def _coef(S: USeries, r: int):
    return S.coeffs[r]


def relation_defects(A: USeries, X: USeries, form=("XA", 1), *, stop_early=True) -> list:
    """Coefficient pairs (p, q) at which ``(u-v)[A(u), X(v)] = rhs`` fails.

    At ``u^-p v^-q`` the left side is ``[a_{p+1}, x_q] - [a_p, x_{q+1}]``; every
    coefficient index involved stays within the truncation order.
    """
    order, sign = form
    N = min(A.N, X.N)
    bad = []
    for p in range(N):
        for q in range(N):
            lhs = _comm(_coef(A, p + 1), _coef(X, q)) - _comm(_coef(A, p), _coef(X, q + 1))
            if order == "XA":
                rhs = _prod(_coef(X, p), _coef(A, q)) - _prod(_coef(X, q), _coef(A, p))
            else:
                rhs = _prod(_coef(A, p), _coef(X, q)) - _prod(_coef(A, q), _coef(X, p))
            if _nz(lhs - _scale(rhs, sign)):
                bad.append((p, q))
                if stop_early:
                    return bad
    return bad


def commuting_defects(A: USeries, X: USeries, *, stop_early=True) -> list:
    bad = []
    N = min(A.N, X.N)
    for p in range(1, N + 1):
        for q in range(1, N + 1):
            if _nz(_comm(_coef(A, p), _coef(X, q))):
                bad.append((p, q))
                if stop_early:
                    return bad
    return bad


def _as_nc(x) -> NcElement:
    return x if isinstance(x, NcElement) else NcElement.scalar(x)


def _comm(x, y) -> NcElement:
    x, y = _as_nc(x), _as_nc(y)
    return multiply(x, y) - multiply(y, x)


def _prod(x, y) -> NcElement:
    return multiply(_as_nc(x), _as_nc(y))


def _scale(x, c) -> NcElement:
    return _as_nc(x).scale(c)


def _nz(x) -> bool:
    return bool(normal_form(_as_nc(x)))


def shift_window(n: int) -> list:
    return [Fraction(h, 2) for h in range(-2 * n, 2 * n + 1)]


def calibrate_abc(ctx: YangianContext, forms=None) -> list:
    """Lock, for each i, the unique shift in ``[-n, n]`` (step 1/2) under which the
    relations for B_i and C_i hold in the requested forms."""
    forms = forms or PRINTED_FORMS
    shifts = []
    for i in range(1, ctx.n):
        good = []
        for s in shift_window(ctx.n):
            A, B, C = abc_series(ctx, i, s)
            if not relation_defects(A, C, forms["C"]) and not relation_defects(A, B, forms["B"]):
                good.append(s)
        if len(good) != 1:
            raise CalibrationError(
                f"i={i}: {len(good)} admissible shifts for forms {forms} (need exactly 1)")
        shifts.append(good[0])
    return shifts


def shift_scan(ctx: YangianContext, i: int, forms) -> dict:
    """For each shift in the window, which of the B and C relations hold."""
    out = {}
    for s in shift_window(ctx.n):
        A, B, C = abc_series(ctx, i, s)
        out[s] = (not relation_defects(A, B, forms["B"]), not relation_defects(A, C, forms["C"]))
    return out


def abc_report(ctx: YangianContext, shifts, forms=None) -> dict:
    """All A/B/C relations among i, j in 1..n-1 with the given shifts."""
    forms = forms or PRINTED_FORMS
    n = ctx.n
    series = {i: abc_series(ctx, i, shifts[i - 1]) for i in range(1, n)}
    failures = []
    for j in range(1, n):
        Aj = series[j][0]
        for i in range(1, n):
            _, B, C = series[i]
            if i == j:
                if relation_defects(Aj, B, forms["B"]):
                    failures.append(f"B relation fails for i=j={i}")
                if relation_defects(Aj, C, forms["C"]):
                    failures.append(f"C relation fails for i=j={i}")
            else:
                if commuting_defects(Aj, B):
                    failures.append(f"[A_{j}, B_{i}] != 0")
                if commuting_defects(Aj, C):
                    failures.append(f"[A_{j}, C_{i}] != 0")
            if commuting_defects(Aj, series[i][0]):
                failures.append(f"[A_{j}, A_{i}] != 0")
    return {"failures": failures}


# ---------------------------------------------------------------------------
# Gelfand-Tsetlin and Levi generators
# ---------------------------------------------------------------------------

def gt_generators(ctx: YangianContext, d: int) -> list:
    """Coefficients of ``t^{1..k}_{1..k}(u)``, k = 1..n, of degree 1..d."""
    if d > ctx.N:
        raise ValueError("degree bound exceeds truncation order")
    return [principal_minor(ctx, k).coeffs[r] for k in range(1, ctx.n + 1) for r in range(1, d + 1)]


def blocks_from_label(n: int, I) -> tuple:
    """Block sizes of the Levi for a set I of simple roots kept (subset of 1..n-1)."""
    I = set(I)
    if not I <= set(range(1, n)):
        raise ValueError(f"simple-root labels must lie in 1..{n - 1}")
    sizes, cur = [], 1
    for i in range(1, n):
        if i in I:
            cur += 1
        else:
            sizes.append(cur)
            cur = 1
    sizes.append(cur)
    return tuple(sizes)


def greedy_profile(blocks, k: int) -> tuple:
    out, left = [], k
    for m in blocks:
        c = min(left, m)
        out.append(c)
        left -= c
    return tuple(out)


def profile_subsets(blocks, profile) -> list:
    """Index sets meeting block j in exactly ``profile[j]`` elements."""
    pieces, start = [], 1
    for m, c in zip(blocks, profile):
        pieces.append(list(itertools.combinations(range(start, start + m), c)))
        start += m
    return [tuple(itertools.chain.from_iterable(choice)) for choice in itertools.product(*pieces)]


def levi_minor_series(ctx: YangianContext, I) -> list:
    """``(k, S, S', t^{S}_{S'}(u))`` for S, S' with the greedy profile of k."""
    blocks = blocks_from_label(ctx.n, I)
    out = []
    for k in range(1, ctx.n + 1):
        subsets = profile_subsets(blocks, greedy_profile(blocks, k))
        for S in subsets:
            for S2 in subsets:
                out.append((k, S, S2, quantum_minor(ctx, S, S2)))
    return out


def levi_generators(ctx: YangianContext, I, d: int) -> list:
    if d > ctx.N:
        raise ValueError("degree bound exceeds truncation order")
    return [s.coeffs[r] for _, _, _, s in levi_minor_series(ctx, I) for r in range(1, d + 1)]
