import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from limweight.core.exceptions import HypothesisViolated, NotDominant
from limweight.degrees import (
    GTPattern,
    argmax_weights,
    balanced_weight,
    deg_fd,
    dim_fd,
    dominant_weights,
    dual_weight,
    equal_size_pairs,
    gt_patterns,
    lp_rp,
    mult_fd,
    verify_lem0,
    verify_lem1,
    verify_lem2,
    verify_lem3,
    verify_lem4,
    verify_lemma_deg,
    weight_multiplicities,
    weyl_dimension,
)
from limweight.weights import Weight

from conftest import dominant_int_weights, interlacing_triples

dominant = dominant_int_weights()


def test_degree_of_the_adjoint_module():
    assert dim_fd((2, 1, 0)) == 8
    assert deg_fd((2, 1, 0)) == 2
    assert argmax_weights((2, 1, 0)) == [(1, 1, 1)]
    assert dim_fd(Weight.of(2, 1, 0)) == 8


@pytest.mark.parametrize(
    "weight, dim, deg",
    [((1, 0, 0), 3, 1), ((2, 0), 3, 1), ((1, 1, 0, 0), 6, 1), ((2, 2, 0, 0), 20, 2), ((3, 0, 0), 10, 1)],
)
def test_small_modules(weight, dim, deg):
    assert (dim_fd(weight), deg_fd(weight)) == (dim, deg)


@given(dominant)
def test_patterns_agree_with_the_weyl_formula(weight):
    assert dim_fd(weight) == weyl_dimension(weight)
    assert sum(weight_multiplicities(weight).values()) == dim_fd(weight)


@hypothesis_settings(max_examples=30)
@given(dominant)
def test_gt_pattern_enumeration(weight):
    patterns = list(gt_patterns(weight))
    assert len(patterns) == dim_fd(weight)
    assert all(p.top == weight for p in patterns)


@given(dominant)
def test_degree_is_attained_on_dominant_weights(weight):
    best = deg_fd(weight)
    assert best == max(weight_multiplicities(weight).values())
    assert all(mult_fd(weight, nu) == best for nu in argmax_weights(weight))
    assert balanced_weight(weight) in dominant_weights(weight)


def test_multiplicities():
    assert mult_fd((2, 1, 0), (1, 1, 1)) == 2
    assert mult_fd((2, 1, 0), (0, 1, 2)) == 1
    assert mult_fd((2, 1, 0), (3, 0, 0)) == 0
    assert mult_fd((2, 0), (1, 1, 0)) == 0
    assert mult_fd((2, 0), Weight.of("1/2", "3/2")) == 0
    assert dominant_weights((2, 1, 0)) == [(2, 1, 0), (1, 1, 1)]


def test_weight_helpers():
    assert balanced_weight((4, 0, 0)) == (2, 1, 1)
    assert dual_weight((2, 1, 0)) == (0, -1, -2)
    assert lp_rp((2, 2, 1, 0, 0, 0)) == (2, 3)
    assert lp_rp((1, 1)) == (2, 2)


@hypothesis_settings(max_examples=30)
@given(dominant)
def test_duality_preserves_multiplicities(weight):
    dual = dual_weight(weight)
    for nu, count in weight_multiplicities(weight).items():
        assert mult_fd(dual, dual_weight(nu)) == count


@pytest.mark.parametrize("weight", [(0, 1), (1, "a"), ()])
def test_non_dominant_weights_are_rejected(weight):
    with pytest.raises(NotDominant):
        dim_fd(weight)


def test_gt_pattern_rows_must_interlace():
    with pytest.raises(ValueError):
        GTPattern(((2, 1, 0), (3, 0), (1,)))
    assert GTPattern(((2, 1, 0), (2, 0), (1,))).weight == (1, 1, 1)


# Lower bounds


def test_bounds_hold_on_small_cases():
    assert verify_lem0((2, 1, 0), (2, 0), (1, 1)).holds
    assert verify_lem1(2, 2).holds
    assert verify_lem1(3, 2).rhs == 2
    assert verify_lem2(2, 2, 1).holds
    assert verify_lem3((2, 1, 0)).holds
    assert verify_lem4((2, 1), 2).holds


@given(st.integers(2, 4), st.integers(2, 3))
def test_first_bound(x, ell):
    assert verify_lem1(x, ell).holds


@hypothesis_settings(max_examples=100)
@given(interlacing_triples())
def test_interlacing_pair_bound(triple):
    weight, first, second = triple
    report = verify_lem0(weight, first, second)
    assert report.holds
    assert report.rhs == deg_fd(first) + deg_fd(second)


def test_equal_size_pairs():
    assert equal_size_pairs((2, 1, 0)) == [((2, 0), (1, 1))]
    assert equal_size_pairs((1, 0, 0)) == []
    assert all(sum(a) == sum(b) and a != b for a, b in equal_size_pairs((3, 1, 1, 0)))


@hypothesis_settings(max_examples=30)
@given(st.integers(2, 3), st.integers(1, 2), st.integers(1, 2))
def test_second_bound(x, k, ell):
    assert verify_lem2(x, k, ell).holds


@pytest.mark.parametrize(
    "call",
    [
        lambda: verify_lem0((2, 1, 0), (2, 0), (2, 0)),
        lambda: verify_lem0((2, 1, 0), (2, 1), (1, 1)),
        lambda: verify_lem1(1, 3),
        lambda: verify_lem2(2, 0, 1),
        lambda: verify_lem3((1, 0, 0)),
        lambda: verify_lem3((0, 1, 2)),
        lambda: verify_lem4((2, 0), 1),
        lambda: verify_lem4((1, 1), 1),
    ],
)
def test_bounds_check_their_hypotheses(call):
    with pytest.raises(HypothesisViolated):
        call()


def test_parabolic_degree_bound():
    report = verify_lemma_deg(Weight.of("g0", 1, 1, 0, 0))
    assert report.rhs == 3
    assert report.window_size > 0
    assert report.lhs is None
    for weight in (Weight.of(0, 1, 1, 0), Weight.of(2, 1, 1, 0, 0), Weight.of("g0", 0, 1, 0, 0)):
        with pytest.raises(HypothesisViolated):
            verify_lemma_deg(weight)
