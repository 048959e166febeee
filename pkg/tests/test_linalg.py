from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bethe_yangian.linalg import (SubspaceBasis, evaluate_rows, kernel, limit_rows, limit_span,
                                  rank)
from bethe_yangian.qt import RatFunc

t = RatFunc.t()
fracs = st.fractions(min_value=-3, max_value=3, max_denominator=2)
vectors = st.dictionaries(st.integers(0, 4), fracs.filter(bool), max_size=5)


def test_rank_and_kernel():
    vs = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}]
    assert rank(vs) == 2
    ker = kernel(vs)
    assert ker == [{0: 1, 1: -1, 2: -1}]
    assert all(isinstance(c, Fraction) for c in ker[0].values())


@settings(max_examples=50, deadline=None)
@given(st.lists(vectors, max_size=6))
def test_kernel_dimension(vs):
    ker = kernel(vs)
    assert len(ker) + rank(vs) == len(vs)
    for x in ker:
        total = {}
        for m, c in x.items():
            for k, v in vs[m].items():
                total[k] = total.get(k, 0) + c * v
        assert not any(total.values())


def test_subspace_equality_and_containment():
    A = SubspaceBasis.from_vectors(range(3), [{0: 1, 1: 2}, {2: 1}])
    B = SubspaceBasis.from_vectors(range(3), [{0: 2, 1: 4, 2: 3}, {2: 5}])
    assert A == B and A.dim == 2
    assert A.contains({0: 1, 1: 2, 2: 7})
    assert not A.contains({1: 1})
    C = SubspaceBasis.from_vectors(range(3), [{2: 1}])
    assert C.issubset(A) and not A.issubset(C)


def test_limit_examples():
    # span{(1, t)} -> span{(1, 0)}
    assert limit_rows([{0: RatFunc(1), 1: t}]) == [{0: 1}]
    # span{(1, t), (1, 2t)} -> whole plane; the naive evaluation would lose a dimension
    assert limit_rows([{0: RatFunc(1), 1: t}, {0: RatFunc(1), 1: 2 * t}]) == [{0: 1}, {1: 1}]
    # span{(t, 1)} scaled by 1/t is fine
    assert limit_rows([{0: t, 1: t * t}]) == [{0: 1}]
    assert limit_rows([{0: 1 / t, 1: RatFunc(1)}]) == [{0: 1}]


def test_limit_rejects_dependent_rows():
    with pytest.raises(ValueError):
        limit_rows([{0: RatFunc(1), 1: t}, {0: 2 * RatFunc(1), 1: 2 * t}])


def test_limit_span_preserves_dimension():
    S = SubspaceBasis.from_vectors(range(4), [{0: RatFunc(1), 2: t}, {0: RatFunc(1), 1: t, 3: t * t}])
    L = limit_span(S)
    assert L.dim == 2
    assert L == SubspaceBasis.from_vectors(range(4), [{0: 1}, {1: 1, 2: -1}])


def test_limit_agrees_with_generic_evaluation_when_flat():
    rows = [{0: RatFunc(1), 1: t + 1}, {1: RatFunc(1), 2: t * t}]
    at_zero = evaluate_rows(rows, 0)
    assert SubspaceBasis.from_vectors(range(3), at_zero) == \
        SubspaceBasis.from_vectors(range(3), limit_rows(rows))
