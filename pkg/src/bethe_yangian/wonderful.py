"""Torus boundary points of the wonderful compactification of PGL_n and their Bethe subalgebras.

A point is recorded by its images in the projectivized endomorphism spaces of
the exterior powers, one square matrix per k indexed by the k-subsets of
``1..n`` in lexicographic order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .bethe import (BetheFamily, colored_partition_counts, filtered_spans, graded_dims,
                    is_regular_diagonal, block_limit_side, to_vector, ambient_coords)
from .ncpoly import NcElement, relabel
from .series import USeries
from .yangian import (YangianContext, det, eta, greedy_profile, levi_generators,
                      profile_subsets, quantum_minor, minor_tau)


def subsets(n: int, k: int) -> list:
    return list(itertools.combinations(range(1, n + 1), k))


@dataclass(frozen=True)
class TorusCurve:
    """``C(t) = diag(lambda_i * t^{a_i})``."""
    lam: tuple
    a: tuple

    def __post_init__(self):
        lam = tuple(Fraction(x) for x in self.lam)
        a = tuple(int(x) for x in self.a)
        if len(lam) != len(a) or not lam:
            raise ValueError("need one exponent per eigenvalue")
        if any(x == 0 for x in lam):
            raise ValueError("eigenvalues must be nonzero")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "a", a)

    @property
    def n(self) -> int:
        return len(self.lam)

    @classmethod
    def parse(cls, text: str) -> "TorusCurve":
        """``"l1:a1,l2:a2,..."`` with rational eigenvalues and integer exponents."""
        lam, a = [], []
        for item in text.split(","):
            try:
                l_txt, a_txt = item.split(":")
                lam.append(Fraction(l_txt.strip()))
                a.append(int(a_txt.strip()))
            except ValueError as exc:
                raise ValueError(f"bad curve entry {item!r}; expected lambda:exponent") from exc
        return cls(tuple(lam), tuple(a))

    def sorting_permutation(self) -> tuple:
        """``perm`` (0-based) with ``a[perm[0]] <= a[perm[1]] <= ...`` (stable)."""
        return tuple(sorted(range(self.n), key=lambda i: self.a[i]))

    def sorted(self) -> "TorusCurve":
        p = self.sorting_permutation()
        return TorusCurve(tuple(self.lam[i] for i in p), tuple(self.a[i] for i in p))


def _prod(values):
    out = Fraction(1)
    for v in values:
        out *= v
    return out


@dataclass
class BoundaryPoint:
    """Per-k component matrices (raw values, not yet projectively normalized)."""
    n: int
    components: dict                       # k -> square matrix over QQ
    curve: TorusCurve | None = None
    frame: dict = field(default_factory=dict)

    def component(self, k: int) -> list:
        return self.components[k]

    def canonical(self) -> dict:
        """Each component divided by its first nonzero entry (row-major)."""
        out = {}
        for k, M in self.components.items():
            lead = next((x for row in M for x in row if x), None)
            if lead is None:
                raise ValueError(f"component {k} is zero")
            out[k] = [[x / lead for x in row] for row in M]
        return out

    def projectively_equal(self, other: "BoundaryPoint") -> bool:
        return self.n == other.n and self.canonical() == other.canonical()

    def is_diagonal(self) -> bool:
        return all(not M[i][j] for M in self.components.values()
                   for i in range(len(M)) for j in range(len(M)) if i != j)

    def diagonal(self, k: int) -> dict:
        M = self.components[k]
        return {S: M[i][i] for i, S in enumerate(subsets(self.n, k))}

    def render(self) -> str:
        lines = []
        for k in sorted(self.components):
            if self.is_diagonal():
                body = " ".join(f"{{{','.join(map(str, S))}}}:{v}" for S, v in self.diagonal(k).items())
            else:
                body = "; ".join(" ".join(str(x) for x in row) for row in self.components[k])
            lines.append(f"k={k}: {body}")
        return "\n".join(lines)


def curve_limit(curve: TorusCurve) -> BoundaryPoint:
    """Keep, in each exterior power, the entries ``lambda_S`` with minimal ``a(S)``."""
    n = curve.n
    comps = {}
    for k in range(1, n + 1):
        subs = subsets(n, k)
        weights = [sum(curve.a[i - 1] for i in S) for S in subs]
        low = min(weights)
        size = len(subs)
        M = [[Fraction(0)] * size for _ in range(size)]
        for idx, (S, w) in enumerate(zip(subs, weights)):
            if w == low:
                M[idx][idx] = _prod(curve.lam[i - 1] for i in S)
        comps[k] = M
    return BoundaryPoint(n, comps, curve)


# ---------------------------------------------------------------------------
# Strata
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StratumLabel:
    """Simple roots kept in the Levi (``I``) and the block data they determine."""
    I: frozenset
    n: int
    permutation: tuple = ()

    @property
    def removed(self) -> tuple:
        return tuple(sorted(set(range(1, self.n)) - self.I))

    @property
    def blocks(self) -> tuple:
        sizes, cur = [], 1
        for i in range(1, self.n):
            if i in self.I:
                cur += 1
            else:
                sizes.append(cur)
                cur = 1
        sizes.append(cur)
        return tuple(sizes)

    def as_dict(self) -> dict:
        return {"I": sorted(self.I), "removed_simple_roots": list(self.removed),
                "blocks": list(self.blocks), "permutation": [p + 1 for p in self.permutation]}


class StratumError(ValueError):
    pass


def stratum_of(point: BoundaryPoint) -> StratumLabel:
    """I = positions i with ``a_i = a_{i+1}`` after sorting the exponents.

    The support of every component, read in the sorted frame, must be exactly
    the set of subsets with the greedy block profile of I.
    """
    if point.curve is None or not point.is_diagonal():
        raise StratumError("stratum_of needs a point obtained as a torus-curve limit")
    curve = point.curve
    perm = curve.sorting_permutation()
    a = [curve.a[i] for i in perm]
    I = frozenset(i for i in range(1, curve.n) if a[i - 1] == a[i])
    label = StratumLabel(I, curve.n, perm)
    # support check in the sorted frame; sorted position p holds original index perm[p]+1
    position = {perm[p] + 1: p + 1 for p in range(curve.n)}
    for k in range(1, curve.n + 1):
        support = {tuple(sorted(position[i] for i in S))
                   for S, v in point.diagonal(k).items() if v}
        expected = set(profile_subsets(label.blocks, greedy_profile(label.blocks, k)))
        if support != expected:
            raise StratumError(f"component {k} support does not match the block profile")
    return label


# ---------------------------------------------------------------------------
# Boundary Bethe subalgebras
# ---------------------------------------------------------------------------

def component_tau(ctx: YangianContext, k: int, X) -> USeries:
    """``sum_{S, S'} X_{S', S} t^{S}_{S'}(u)`` for a component matrix X on k-subsets."""
    subs = subsets(ctx.n, k)
    acc = USeries.zero(ctx.N)
    for a, S2 in enumerate(subs):
        for b, S in enumerate(subs):
            w = X[a][b]
            if w:
                acc = acc + quantum_minor(ctx, S, S2) * w
    return acc


def boundary_tau_series(point: BoundaryPoint, N: int) -> dict:
    ctx = YangianContext(point.n, N)
    return {k: component_tau(ctx, k, point.components[k]) for k in range(1, point.n + 1)}


def boundary_bethe(point: BoundaryPoint, d: int) -> BetheFamily:
    ctx = YangianContext(point.n, d)
    fam = BetheFamily(ctx, point.components, d)
    for k, s in boundary_tau_series(point, d).items():
        for r in range(1, d + 1):
            c = s.coeffs[r]
            fam.generators[(k, r)] = c if isinstance(c, NcElement) else NcElement.scalar(c)
    return fam


def explicit_two_block_taus(lam, k: int, N: int) -> dict:
    """Generators for the limit of ``diag(C0, t*C1)``, |C1| = k, written out block by block:
    ``tau_j = sum_{A in [1..n-k], |A|=j} lambda_A t^A_A`` for j <= n-k and
    ``tau_{n-k+m} = (lambda_1...lambda_{n-k}) sum_{|B|=m} lambda_{n-k+B} t^{[1..n-k]+B}_{[1..n-k]+B}``.
    """
    lam = [Fraction(x) for x in lam]
    n = len(lam)
    m0 = n - k
    ctx = YangianContext(n, N)
    head = tuple(range(1, m0 + 1))
    out = {}
    for j in range(1, m0 + 1):
        acc = USeries.zero(N)
        for A in itertools.combinations(head, j):
            acc = acc + quantum_minor(ctx, A, A) * _prod(lam[i - 1] for i in A)
        out[j] = acc
    pref = _prod(lam[:m0])
    for m in range(1, k + 1):
        acc = USeries.zero(N)
        for B in itertools.combinations(range(1, k + 1), m):
            S = head + tuple(m0 + b for b in B)
            acc = acc + quantum_minor(ctx, S, S) * _prod(lam[m0 + b - 1] for b in B)
        out[m0 + m] = acc * pref
    return out


def levi_regular(curve: TorusCurve) -> bool:
    """Eigenvalues within each block of equal exponents are distinct."""
    groups: dict = {}
    for l, a in zip(curve.lam, curve.a):
        groups.setdefault(a, []).append(l)
    return all(is_regular_diagonal(g) for g in groups.values())


def levi_block_embedding(p: NcElement, n: int, offset: int, N: int) -> NcElement:
    """Y(gl_m) onto the diagonal block starting after ``offset``: the leading-block
    inclusion into Y(gl_{n-offset}) followed by eta."""
    if offset == 0:
        return p.copy()
    return eta(p, n, n - offset, N)


def levi_bethe_generators(lam_sorted, blocks, d: int) -> list:
    """Bethe generators of each block's Yangian, with that block's eigenvalues, embedded."""
    n = sum(blocks)
    out, offset = [], 0
    for m in blocks:
        block_lam = list(lam_sorted[offset:offset + m])
        ctx = YangianContext(m, d)
        for k in range(1, m + 1):
            s = minor_tau(ctx, k, block_lam)
            for r in range(1, d + 1):
                out.append(levi_block_embedding(s.coeffs[r], n, offset, d))
        offset += m
    return out


def _relabel_to_sorted(perm):
    """Index map original -> sorted position (1-based)."""
    pos = {perm[p] + 1: p + 1 for p in range(len(perm))}
    return lambda i: pos[i]


def verify_bethelevi(point: BoundaryPoint, d: int) -> dict:
    """(a) containment in the Levi Yangian, (b) equality with the Levi Bethe subalgebra,
    (c) for two blocks, equality with the t -> 0 limit of ``B(C(t))``."""
    label = stratum_of(point)
    curve = point.curve
    n = point.n
    blocks = label.blocks
    sorted_curve = curve.sorted()
    to_sorted = _relabel_to_sorted(label.permutation)
    fam = boundary_bethe(point, d)
    gens = [relabel(gen, to_sorted) for gen in fam.elements()]
    sorted_point = curve_limit(sorted_curve)
    direct = boundary_bethe(sorted_point, d).elements()

    report = {"stratum": label.as_dict(), "blocks": list(blocks), "checks": {}}
    checks = report["checks"]
    checks["relabel_consistent"] = all(a == b for a, b in zip(gens, direct))

    # (a) containment
    levi = levi_generators(YangianContext(n, d), label.I, d)
    levi_span = filtered_spans(levi, n, d, commutative=False)[-1]
    index = {m: i for i, m in enumerate(ambient_coords(n, d))}
    outside = [i for i, gen in enumerate(gens) if gen and not levi_span.contains(to_vector(gen, index))]
    checks["a_levi_containment"] = not outside

    boundary_spans = filtered_spans(gens, n, d)
    report["graded_dims"] = graded_dims(boundary_spans)
    report["expected_dims"] = colored_partition_counts(n, d)[1:]
    if not levi_regular(curve):
        report["note"] = "Levi part not regular: only containment checked"
    else:
        lb = filtered_spans(levi_bethe_generators(sorted_curve.lam, blocks, d), n, d)
        checks["b_levi_bethe_equal"] = all(x == y for x, y in zip(boundary_spans, lb))
        if len(blocks) == 2:
            k = blocks[1]
            lam = sorted_curve.lam
            lim = block_limit_side(n, k, lam[:n - k], lam[n - k:], d)
            checks["c_limit_equal"] = all(x == y for x, y in zip(boundary_spans, lim))
    if len(blocks) > 2:
        report["extension"] = "multi-block Levi profile"
    report["status"] = "pass" if all(checks.values()) else "fail"
    return report


# ---------------------------------------------------------------------------
# Conjugated points and the symmetry witness
# ---------------------------------------------------------------------------

def exterior_power(g, k: int) -> list:
    """``Lambda^k(g)`` in the lexicographic basis of k-subsets: the k x k minors of g."""
    n = len(g)
    subs = subsets(n, k)
    return [[det([[Fraction(g[i - 1][j - 1]) for j in T] for i in S]) for T in subs] for S in subs]


def _matmul(A, B):
    return [[sum((A[i][l] * B[l][j] for l in range(len(B))), Fraction(0))
             for j in range(len(B[0]))] for i in range(len(A))]


def _inverse(g):
    n = len(g)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(g)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            raise ValueError("matrix is singular")
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def conjugate_point(point: BoundaryPoint, g) -> BoundaryPoint:
    """``g X g^{-1}`` componentwise, through the exterior powers of g."""
    ginv = _inverse(g)
    comps = {}
    for k, M in point.components.items():
        comps[k] = _matmul(_matmul(exterior_power(g, k), M), exterior_power(ginv, k))
    return BoundaryPoint(point.n, comps, None)


def self_adjointness_check(point: BoundaryPoint) -> dict:
    bad = [k for k, M in point.components.items()
           if any(M[i][j] != M[j][i] for i in range(len(M)) for j in range(len(M)))]
    return {"non_symmetric_components": bad, "status": "pass" if not bad else "fail"}
