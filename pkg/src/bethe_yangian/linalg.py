"""Exact sparse linear algebra: reduced echelon subspaces, kernels, and t -> 0 limits.

Vectors are dicts ``{column index: nonzero scalar}``; scalars are
:class:`~fractions.Fraction` or :class:`~bethe_yangian.qt.RatFunc`.
"""
from __future__ import annotations

from fractions import Fraction

from .qt import ONE, RatFunc, padd, pdivmod, pgcd, pmul, pscale, valuation


def _inv(c):
    return c.inverse() if isinstance(c, RatFunc) else Fraction(1) / c


def _axpy(y: dict, a, x: dict) -> None:
    """``y += a*x`` in place."""
    for k, v in x.items():
        w = y.get(k, 0) + a * v
        if w:
            y[k] = w
        else:
            y.pop(k, None)


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Each row is normalized to have a 1 at its pivot (its smallest column) and
    zeros at every other pivot column.  An optional ``tag`` dict is carried
    along with every row and transformed by the same row operations.
    """

    def __init__(self):
        self.rows: dict = {}
        self.tags: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict, tag: dict | None = None):
        vec = dict(vec)
        tag = dict(tag) if tag is not None else None
        for col in sorted(vec):
            c = vec.get(col)
            if c and col in self.rows:
                _axpy(vec, -c, self.rows[col])
                if tag is not None:
                    _axpy(tag, -c, self.tags[col])
        return vec, tag

    def add(self, vec: dict, tag: dict | None = None) -> bool:
        """Insert vec; returns False (and leaves self unchanged) if it is dependent."""
        vec, tag = self.reduce(vec, tag)
        if not vec:
            return False
        self._insert(vec, tag)
        return True

    def _insert(self, vec: dict, tag) -> None:
        pivot = min(vec)
        scale = _inv(vec[pivot])
        vec = {k: v * scale for k, v in vec.items()}
        if tag is not None:
            tag = {k: v * scale for k, v in tag.items()}
        for p, row in self.rows.items():
            c = row.get(pivot)
            if c:
                _axpy(row, -c, vec)
                if tag is not None:
                    _axpy(self.tags[p], -c, tag)
        self.rows[pivot] = vec
        if tag is not None:
            self.tags[pivot] = tag

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def sorted_rows(self) -> list:
        return [self.rows[p] for p in sorted(self.rows)]


class SubspaceBasis:
    """A subspace of the span of ``coords`` (labels), stored in reduced echelon form."""

    def __init__(self, coords, rows=()):
        self.coords = list(coords)
        self.index = {c: i for i, c in enumerate(self.coords)}
        self._ech = Echelon()
        for r in rows:
            self._ech.add(r)

    @classmethod
    def from_vectors(cls, coords, vectors) -> "SubspaceBasis":
        return cls(coords, vectors)

    @property
    def dim(self) -> int:
        return len(self._ech)

    @property
    def rows(self) -> list:
        return self._ech.sorted_rows()

    @property
    def pivots(self) -> list:
        return sorted(self._ech.rows)

    def add(self, vec: dict) -> bool:
        return self._ech.add(vec)

    def contains(self, vec: dict) -> bool:
        return self._ech.contains(vec)

    def issubset(self, other: "SubspaceBasis") -> bool:
        self._check_compatible(other)
        return all(other.contains(r) for r in self.rows)

    def _check_compatible(self, other) -> None:
        if self.coords != other.coords:
            raise ValueError("subspaces live in different coordinate spaces")

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        self._check_compatible(other)
        return self.rows == other.rows

    __hash__ = None

    def copy(self) -> "SubspaceBasis":
        out = SubspaceBasis(self.coords)
        out._ech.rows = {p: dict(r) for p, r in self._ech.rows.items()}
        return out

    def labelled_rows(self) -> list:
        """Rows as ``{label: coefficient}`` dicts."""
        return [{self.coords[k]: v for k, v in sorted(r.items())} for r in self.rows]

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient={len(self.coords)})"


def rank(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def kernel(images) -> list:
    """Basis of ``{x : sum_m x_m images[m] = 0}`` as dicts over input positions."""
    ech = Echelon()
    out = []
    for m, img in enumerate(images):
        vec, tag = ech.reduce(img, {m: Fraction(1)})
        if vec:
            ech._insert(vec, tag)
        else:
            out.append(tag)
    # present in reduced echelon form for a canonical answer
    canon = Echelon()
    for v in out:
        canon.add(v)
    return canon.sorted_rows()


# ---------------------------------------------------------------------------
# Limits at t = 0
# ---------------------------------------------------------------------------

def _polynomial_row(vec: dict) -> dict:
    """Scale a row of rational functions to polynomial entries (as coefficient tuples)."""
    den = ONE
    for v in vec.values():
        v = RatFunc.coerce(v)
        if v.den != ONE:
            den = _plcm(den, v.den)
    out = {}
    for k, v in vec.items():
        v = RatFunc.coerce(v)
        q, r = pdivmod(pmul(v.num, den), v.den)
        assert not r
        out[k] = q
    return out


def _plcm(a, b):
    return pdivmod(pmul(a, b), pgcd(a, b))[0]


def _strip_t(row: dict) -> dict:
    v = min(valuation(p) for p in row.values())
    if v == 0:
        return row
    return {k: p[v:] for k, p in row.items()}


def _poly_axpy(y: dict, a, x: dict) -> None:
    for k, p in x.items():
        w = padd(y.get(k, ()), pscale(p, a))
        if w:
            y[k] = w
        else:
            y.pop(k, None)


def limit_rows(rows) -> list:
    """Basis over QQ of the t -> 0 limit of the QQ(t)-span of independent ``rows``.

    Works in the lattice of polynomial combinations: a row whose value at 0
    is a combination of accepted values is replaced by its difference with
    that combination divided by the largest power of t, and retried.  For
    independent input rows the t-adic valuation of their wedge product is
    finite and drops at every division, so the loop terminates with one
    accepted row per input row.
    """
    accepted = Echelon()       # evaluations at t = 0, reduced
    lattice: dict = {}         # pivot -> polynomial row with that evaluation
    for vec in rows:
        prow = _polynomial_row(vec)
        if not prow:
            raise ValueError("limit of a zero row is undefined")
        while True:
            prow = _strip_t(prow)
            ev = {k: p[0] for k, p in prow.items() if p and p[0]}
            for col in sorted(ev):
                c = ev.get(col)
                if c and col in accepted.rows:
                    _axpy(ev, -c, accepted.rows[col])
                    _poly_axpy(prow, -c, lattice[col])
            if ev:
                pivot = min(ev)
                scale = 1 / ev[pivot]
                ev = {k: v * scale for k, v in ev.items()}
                prow = {k: pscale(p, scale) for k, p in prow.items()}
                for p, row in accepted.rows.items():
                    c = row.get(pivot)
                    if c:
                        _axpy(row, -c, ev)
                        _poly_axpy(lattice[p], -c, prow)
                accepted.rows[pivot] = ev
                lattice[pivot] = prow
                break
            if not prow:
                raise ValueError("rows passed to limit_rows are linearly dependent")
    return accepted.sorted_rows()


def limit_span(S: SubspaceBasis) -> SubspaceBasis:
    """The t -> 0 limit of a subspace over QQ(t) as a point of the Grassmannian."""
    out = SubspaceBasis(S.coords, limit_rows(S.rows))
    if out.dim != S.dim:
        raise AssertionError("limit changed the dimension")
    return out


def evaluate_rows(rows, t0) -> list:
    """Substitute ``t = t0`` into rows of rational functions."""
    out = []
    for r in rows:
        ev = {}
        for k, v in r.items():
            x = v.evaluate(t0) if isinstance(v, RatFunc) else v
            if x:
                ev[k] = Fraction(x)
        out.append(ev)
    return out


__all__ = [
    "Echelon", "SubspaceBasis", "rank", "kernel", "limit_rows", "limit_span",
    "evaluate_rows",
]
