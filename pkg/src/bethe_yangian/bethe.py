"""Bethe subalgebras B(C) of Y(gl_n): generators, commutativity, filtered spans,
Poincare dimensions, t -> 0 limits and centralizers.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Echelon, SubspaceBasis, kernel, limit_span
from .ncpoly import NcElement, commutator, degree, multiply, normal_form, pbw_basis
from .qt import RatFunc
from .yangian import (YangianContext, eta, fused_tau, gt_generators, minor_tau)

THREADS_ENV = "BETHE_YANGIAN_THREADS"


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def parallel_map(fn, items) -> list:
    """``list(map(fn, items))``, fanned out over processes when the thread env var is > 1."""
    items = list(items)
    workers = worker_count()
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------

def is_diagonal(C) -> bool:
    C = list(C)
    if not C or not isinstance(C[0], (list, tuple)):
        return True
    return all(not C[i][j] for i in range(len(C)) for j in range(len(C)) if i != j)


def diagonal_of(C) -> list:
    C = list(C)
    if C and isinstance(C[0], (list, tuple)):
        return [C[i][i] for i in range(len(C))]
    return C


def is_regular_diagonal(lam) -> bool:
    """Pairwise distinct and nonzero."""
    lam = list(lam)
    return all(x != 0 for x in lam) and len(set(lam)) == len(lam)


@dataclass
class BetheFamily:
    ctx: YangianContext
    C: list
    d: int
    generators: dict = field(default_factory=dict)   # (k, r) -> NcElement

    def elements(self) -> list:
        return [self.generators[key] for key in sorted(self.generators)]

    def nonzero_elements(self) -> list:
        return [g for g in self.elements() if g]


def tau_generators(ctx: YangianContext, C, d: int) -> BetheFamily:
    """Coefficients ``tau_k^{(r)}``, k = 1..n, r = 1..d.

    A diagonal C (given as a list of eigenvalues or a matrix) uses the
    weighted principal-minor form; any other C the fused trace.
    """
    if d > ctx.N:
        raise ValueError("degree bound exceeds truncation order")
    fam = BetheFamily(ctx, C, d)
    for k in range(1, ctx.n + 1):
        series = minor_tau(ctx, k, diagonal_of(C)) if is_diagonal(C) else fused_tau(ctx, k, C)
        for r in range(1, d + 1):
            c = series.coeffs[r]
            fam.generators[(k, r)] = c if isinstance(c, NcElement) else NcElement.scalar(c)
    return fam


# ---------------------------------------------------------------------------
# Commutativity
# ---------------------------------------------------------------------------

def _pair_commutator(pair):
    x, y = pair
    return commutator(x, y)


def commute_check(family: BetheFamily) -> dict:
    keys = sorted(family.generators)
    pairs = list(itertools.combinations(keys, 2))
    results = parallel_map(_pair_commutator,
                           [(family.generators[a], family.generators[b]) for a, b in pairs])
    violations = [{"pair": [list(a), list(b)], "commutator": str(c)}
                  for (a, b), c in zip(pairs, results) if c]
    return {"pairs_checked": len(pairs), "violations": violations,
            "status": "pass" if not violations else "fail"}


# ---------------------------------------------------------------------------
# Spans
# ---------------------------------------------------------------------------

def ambient_coords(n: int, d: int) -> list:
    return pbw_basis(n, d, include_unit=False)


def to_vector(p: NcElement, index: dict) -> dict:
    vec = {}
    for m, c in p.terms.items():
        if not m:
            raise ValueError("constant terms are excluded from spans")
        try:
            vec[index[m]] = c
        except KeyError:
            raise ValueError(f"monomial of degree {sum(x[0] for x in m)} outside the ambient space")
    return vec


def _products(gens: list, d: int, commutative: bool):
    """Yield ``(label degree, product)`` for products with label-degree sum <= d."""
    gens = [(g, int(degree(g))) for g in gens if g]
    gens = [(g, e) for g, e in gens if 0 < e <= d]
    gens.sort(key=lambda ge: ge[1])

    def grow(prefix, start, deg):
        for idx in range(0 if not commutative else start, len(gens)):
            g, e = gens[idx]
            if deg + e > d:
                if commutative:
                    break
                continue
            prod = g if prefix is None else multiply(prefix, g)
            yield deg + e, prod
            yield from grow(prod, idx, deg + e)

    yield from grow(None, 0, 0)


def filtered_spans(generators, n: int, d: int, *, commutative: bool = True) -> list:
    """Spans of products of generators of total degree <= r, for r = 1..d.

    All spans share the coordinates ``pbw_basis(n, d)`` without the unit.
    """
    coords = ambient_coords(n, d)
    index = {m: i for i, m in enumerate(coords)}
    by_degree: dict = {}
    for e, p in _products(list(generators), d, commutative):
        by_degree.setdefault(e, []).append(p)
    out = []
    current = SubspaceBasis(coords)
    for r in range(1, d + 1):
        for p in by_degree.get(r, []):
            if p:
                current.add(to_vector(p, index))
        out.append(current.copy())
    return out


def span(generators, n: int, d: int, *, commutative: bool = True) -> SubspaceBasis:
    return filtered_spans(generators, n, d, commutative=commutative)[-1]


def graded_dims(spans) -> list:
    dims = [s.dim for s in spans]
    return [b - a for a, b in zip([0] + dims[:-1], dims)]


def colored_partition_counts(colors: int, d: int) -> list:
    """Coefficients of ``prod_{r>=1} (1 - q^r)^{-colors}`` for q^0..q^d.

    Counted directly as multisets of colored parts, with no series arithmetic.
    """
    parts = [(r, c) for r in range(1, d + 1) for c in range(colors)]
    counts = [0] * (d + 1)

    def walk(start, total):
        counts[total] += 1
        for idx in range(start, len(parts)):
            r = parts[idx][0]
            if total + r <= d:
                walk(idx, total + r)

    walk(0, 0)
    return counts


def poincare_dims(ctx: YangianContext, C, d: int) -> dict:
    fam = tau_generators(ctx, C, d)
    spans = filtered_spans(fam.elements(), ctx.n, d)
    return {"filtered": [s.dim for s in spans], "graded": graded_dims(spans),
            "expected": colored_partition_counts(ctx.n, d)[1:]}


def closure_defects(S: SubspaceBasis, d: int) -> int:
    """Products of pairs of basis rows (of total degree <= d) falling outside S."""
    coords = S.coords
    index = {m: i for i, m in enumerate(coords)}
    elems = []
    for row in S.rows:
        elems.append(NcElement._raw({coords[k]: v for k, v in row.items()}))
    bad = 0
    for x, y in itertools.combinations_with_replacement(elems, 2):
        if degree(x) + degree(y) <= d and not S.contains(to_vector(multiply(x, y), index)):
            bad += 1
    return bad


# ---------------------------------------------------------------------------
# Limits
# ---------------------------------------------------------------------------

def curve_parameter(C0, C1) -> list:
    """``diag(C0, t*C1)`` over QQ(t)."""
    tt = RatFunc.t()
    return [RatFunc.coerce(Fraction(x)) for x in C0] + [tt * Fraction(x) for x in C1]


def limit_filtered_spans(generators, n: int, d: int) -> list:
    return [limit_span(s) for s in filtered_spans(generators, n, d)]


def block_limit_side(n: int, k: int, C0, C1, d: int) -> list:
    ctx = YangianContext(n, d)
    fam = tau_generators(ctx, curve_parameter(C0, C1), d)
    return limit_filtered_spans(fam.elements(), n, d)


def block_product_generators(n: int, k: int, C0, C1, d: int) -> list:
    """iota-images of B(C0) generators and eta-images of B(C1) generators."""
    gens = tau_generators(YangianContext(n - k, d), list(C0), d).elements()
    gens += [eta(g, n, k, d) for g in tau_generators(YangianContext(k, d), list(C1), d).elements()]
    return gens


def block_product_side(n: int, k: int, C0, C1, d: int) -> list:
    return filtered_spans(block_product_generators(n, k, C0, C1, d), n, d)


def verify_block_limit(n: int, k: int, C0, C1, d: int) -> dict:
    C0 = [Fraction(x) for x in C0]
    C1 = [Fraction(x) for x in C1]
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    if len(C0) != n - k or len(C1) != k:
        raise ValueError(f"C0 must have {n - k} entries and C1 {k}")
    if not (is_regular_diagonal(C0) and is_regular_diagonal(C1)):
        raise ValueError("C0 and C1 must be regular (distinct, nonzero eigenvalues)")
    limit = block_limit_side(n, k, C0, C1, d)
    product = block_product_side(n, k, C0, C1, d)
    per_degree = []
    for r, (a, b) in enumerate(zip(limit, product), start=1):
        per_degree.append({"degree": r, "limit_dim": a.dim, "product_dim": b.dim, "equal": a == b})
    ok = all(x["equal"] for x in per_degree)
    return {"per_degree": per_degree, "status": "pass" if ok else "fail"}


# ---------------------------------------------------------------------------
# Centralizers
# ---------------------------------------------------------------------------

def centralizer_span(generators, n: int, d: int) -> SubspaceBasis:
    """Elements x of the degree <= d PBW span (no constants) with ``[x, g] = 0`` for all g."""
    coords = ambient_coords(n, d)
    gens = [normal_form(g) for g in generators]
    labels: dict = {}
    images = []
    for m in coords:
        x = NcElement._raw({m: Fraction(1)})
        vec = {}
        for gi, g in enumerate(gens):
            for mono, c in commutator(x, g).terms.items():
                vec[labels.setdefault((gi, mono), len(labels))] = c
        images.append(vec)
    return SubspaceBasis(coords, kernel(images))


def gt_span(n: int, d: int) -> SubspaceBasis:
    return span(gt_generators(YangianContext(n, d), d), n, d)
