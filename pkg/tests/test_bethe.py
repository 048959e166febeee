from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bethe_yangian import bethe
from bethe_yangian.ncpoly import NcElement, commutator, normal_form, t
from bethe_yangian.yangian import YangianContext, gt_generators

from oracles import colored_partitions_via_series

nonzero = st.fractions(min_value=-6, max_value=6, max_denominator=4).filter(bool)


def regular(n):
    return st.lists(nonzero, min_size=n, max_size=n, unique=True)


def test_tau_examples():
    ctx = YangianContext(2, 2)
    fam = bethe.tau_generators(ctx, [2, 3], 2)
    assert fam.generators[(1, 1)] == t(1, 1, 1).scale(2) + t(2, 2, 1).scale(3)
    assert fam.generators[(2, 1)] == (t(1, 1, 1) + t(2, 2, 1)).scale(6)
    with pytest.raises(ValueError):
        bethe.tau_generators(ctx, [2, 3], 3)


def test_tau_matrix_and_list_agree():
    ctx = YangianContext(2, 2)
    a = bethe.tau_generators(ctx, [2, 3], 2).generators
    b = bethe.tau_generators(ctx, [[2, 0], [0, 3]], 2).generators
    assert a == b


@settings(max_examples=6, deadline=None)
@given(regular(2))
def test_commutativity_random_regular(lam):
    rep = bethe.commute_check(bethe.tau_generators(YangianContext(2, 3), lam, 3))
    assert rep["status"] == "pass" and rep["pairs_checked"] == 15


def test_commutativity_non_diagonal():
    C = [[Fraction(1), Fraction(2)], [Fraction(-1), Fraction(3)]]
    rep = bethe.commute_check(bethe.tau_generators(YangianContext(2, 2), C, 2))
    assert rep["status"] == "pass"


def test_commutativity_rank_three():
    rep = bethe.commute_check(bethe.tau_generators(YangianContext(3, 2), [1, -2, 5], 2))
    assert rep["status"] == "pass"


def test_parallel_map_matches_serial(monkeypatch):
    fam = bethe.tau_generators(YangianContext(2, 2), [2, 7], 2)
    serial = bethe.commute_check(fam)
    monkeypatch.setenv(bethe.THREADS_ENV, "2")
    assert bethe.worker_count() == 2
    assert bethe.commute_check(fam) == serial
    monkeypatch.setenv(bethe.THREADS_ENV, "junk")
    assert bethe.worker_count() == 1


def test_colored_partition_counts():
    for colors in (1, 2, 4, 9):
        assert bethe.colored_partition_counts(colors, 5) == colored_partitions_via_series(colors, 5)
    assert bethe.colored_partition_counts(2, 3) == [1, 2, 5, 10]


def test_poincare_regular_and_identity():
    reg = bethe.poincare_dims(YangianContext(2, 3), [2, 5], 3)
    assert reg["graded"] == reg["expected"] == [2, 5, 10]
    ident = bethe.poincare_dims(YangianContext(2, 3), [1, 1], 3)
    assert ident["graded"] == [1, 3, 5]
    reg3 = bethe.poincare_dims(YangianContext(3, 2), [1, 2, -3], 2)
    assert reg3["graded"] == [3, 9]


@settings(max_examples=5, deadline=None)
@given(regular(2), nonzero)
def test_scalar_invariance(lam, c):
    ctx = YangianContext(2, 2)
    a = bethe.span(bethe.tau_generators(ctx, lam, 2).elements(), 2, 2)
    b = bethe.span(bethe.tau_generators(ctx, [c * x for x in lam], 2).elements(), 2, 2)
    assert a == b


def test_span_is_closed_subalgebra():
    S = bethe.span(bethe.tau_generators(YangianContext(2, 3), [2, -1], 3).elements(), 2, 3)
    assert bethe.closure_defects(S, 3) == 0


def test_commutative_and_ordered_products_agree():
    gens = bethe.tau_generators(YangianContext(2, 3), [3, 4], 3).elements()
    assert bethe.span(gens, 2, 3) == bethe.span(gens, 2, 3, commutative=False)


def test_to_vector_rejects_constants():
    coords = bethe.ambient_coords(2, 1)
    index = {m: i for i, m in enumerate(coords)}
    with pytest.raises(ValueError):
        bethe.to_vector(NcElement.scalar(1), index)
    with pytest.raises(ValueError):
        bethe.to_vector(t(1, 1, 2), index)


def test_block_limit_cases():
    for n, k, C0, C1, d in ((2, 1, (2,), (3,), 3), (3, 1, (1, 2), (5,), 2), (3, 2, (3,), (1, 5), 2)):
        rep = bethe.verify_block_limit(n, k, C0, C1, d)
        assert rep["status"] == "pass", rep


def test_block_limit_dims_rank_three():
    rep = bethe.verify_block_limit(3, 1, (1, 2), (5,), 2)
    assert [x["limit_dim"] for x in rep["per_degree"]] == [3, 12]


def test_block_limit_rejects_bad_input():
    with pytest.raises(ValueError):
        bethe.verify_block_limit(2, 2, (), (1, 2), 2)
    with pytest.raises(ValueError):
        bethe.verify_block_limit(3, 1, (1, 1), (2,), 2)
    with pytest.raises(ValueError):
        bethe.verify_block_limit(3, 1, (1,), (2,), 2)


def test_limit_exceeds_generators_at_zero():
    # substituting t = 0 into the generators loses the trailing block
    n, d = 2, 2
    fam = bethe.tau_generators(YangianContext(n, d), bethe.curve_parameter((2,), (3,)), d)
    at_zero = [g.map_coefficients(lambda c: c.evaluate(0)) for g in fam.elements()]
    naive = bethe.span(at_zero, n, d)
    limit = bethe.block_limit_side(n, 1, (2,), (3,), d)[-1]
    assert naive.dim < limit.dim
    assert naive.issubset(limit)


def test_centralizer_rank_one_is_everything():
    gens = gt_generators(YangianContext(1, 2), 2)
    cent = bethe.centralizer_span(gens, 1, 2)
    assert cent.dim == len(bethe.ambient_coords(1, 2))


def test_centralizer_level_one_is_centre():
    cent = bethe.centralizer_span([t(i, j, 1) for i in (1, 2) for j in (1, 2)], 2, 1)
    assert cent.dim == 1
    coords = bethe.ambient_coords(2, 1)
    index = {m: i for i, m in enumerate(coords)}
    assert cent.contains(bethe.to_vector(t(1, 1, 1) + t(2, 2, 1), index))


def test_centralizer_of_gt_is_gt():
    gens = [g for g in gt_generators(YangianContext(2, 2), 2) if g.degree() == 2]
    cent = bethe.centralizer_span(gens, 2, 2)
    assert cent == bethe.gt_span(2, 2)
    assert cent.dim == 7
    all_gens = gt_generators(YangianContext(2, 2), 2)
    assert bethe.centralizer_span(all_gens, 2, 2) == cent


def test_centralizer_elements_commute():
    gens = [normal_form(t(1, 2, 1))]
    cent = bethe.centralizer_span(gens, 2, 1)
    coords = cent.coords
    for row in cent.rows:
        x = NcElement._raw({coords[k]: v for k, v in row.items()})
        assert not commutator(x, gens[0])
