import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from limweight.branching import (
    branch,
    branch_Xsl,
    branch_Xsp,
    coherence_window,
    gt_candidates,
    lemma_s_set_disagreements,
    limit_coherence,
    neg,
    parity,
    s_set,
    s_set_member,
    verify_branch,
)
from limweight.core.exceptions import NotDominant, RankTooSmall
from limweight.realization import ModuleFamily
from limweight.weights import ExtScalar, Weight, WeightSeq

from conftest import int_seqs, seqs, weights


def test_branch_of_a_known_weight():
    mu = Weight.of(-1, 1, 0)
    summands = branch_Xsl(mu, 2)
    assert [s.k for s in summands] == [-2, -1, 0]
    assert [str(s.charge) for s in summands] == ["2", "1", "0"]
    assert str(summands[-1]) == "X_sl(-1,1);0"
    assert summands[-1].contains(mu)
    assert not summands[0].contains(mu)


def test_known_weight_branches_without_discrepancy():
    report = verify_branch(ModuleFamily.SL, Weight.of(-1, 1, 0))
    assert report.ok
    assert report.checked == 9 ** 3
    assert report.summands > 0


@hypothesis_settings(max_examples=20, deadline=None)
@given(weights(min_rank=2, max_rank=3))
def test_sl_branching_matches_the_window(mu):
    assert verify_branch("sl", mu, 2).ok


@hypothesis_settings(max_examples=10, deadline=None)
@given(weights(min_rank=3, max_rank=3))
def test_sp_branching_matches_the_window(mu):
    assert verify_branch("sp", mu, 1).ok


def test_s_set_shapes():
    generic_last = s_set(Weight.of(1, 0, "g0"), 3)
    assert generic_last.shape == "right-ray"
    assert generic_last.members == (-1, 0, 1, 2, 3)
    assert str(generic_last) == "[-1, inf]"
    left = s_set(Weight.of(-1, 1, 0), 2)
    assert left.shape == "left-ray"
    assert str(left) == "[-inf, 0]"
    assert s_set(Weight.of("g0", "g1", "g2"), 1).shape == "all"


def test_s_set_member_loads_the_first_indices():
    assert s_set_member(Weight.of(-1, 1, 0), -1) == Weight.of(-1, 0)
    assert s_set_member(Weight.of(0, 1, "g0"), 2) == Weight.of(2, 0)
    assert s_set_member(Weight.of(-1, 1, 0), 1) is None


def test_literal_last_condition_disagrees_for_a_generic_charge():
    mu = Weight.of(1, 0, "g0")
    assert lemma_s_set_disagreements(mu, 3) == list(s_set(mu, 3).members)


def test_sp_branch_needs_rank_three():
    with pytest.raises(RankTooSmall):
        branch_Xsp(Weight.of(0, 0))
    summands = branch(ModuleFamily.SP, Weight.of(0, 0, "g0"), 2)
    assert [s.k for s in summands] == [-2, -1, 0, 1, 2]
    assert summands[1].representative == Weight.of(1, 0)


def test_summand_samples_carry_the_charge():
    (summand,) = [s for s in branch_Xsl(Weight.of(-1, 1, 0), 1) if s.k == 0]
    sample = summand.sample(1)
    assert Weight.of(-1, 1, 0) in sample
    assert all(w.entry(3) == ExtScalar.rational(0) for w in sample)


def test_helpers():
    assert parity(-3) == 1
    assert neg(ExtScalar.rational(-2)) == -1
    assert neg(ExtScalar.generic(0)) == 1


def test_limit_coherence_on_known_sequences():
    mu = WeightSeq.of([1, 2, "g0"], -1)
    assert limit_coherence(mu, 2)
    assert limit_coherence(mu, 3)
    assert limit_coherence(WeightSeq.of([], (-1, 0)), 3)


@hypothesis_settings(max_examples=25, deadline=None)
@given(seqs(), st.integers(2, 3))
def test_limit_coherence(mu, n):
    assert limit_coherence(mu, n, window=2)


@hypothesis_settings(deadline=None)
@given(int_seqs(0, 2), st.integers(2, 3))
def test_limit_coherence_for_finite_dimensional_pieces(mu, n):
    assert limit_coherence(mu, n, window=2)


def test_limit_coherence_for_the_symplectic_family():
    assert limit_coherence(WeightSeq.of([0, 0], 0), 2, ModuleFamily.SP)
    assert limit_coherence(WeightSeq.of([1, "g0"], -1), 3, ModuleFamily.SP, window=2)


def test_coherence_window_flags_a_mismatched_pair_of_ranks():
    upper = Weight.of(1, 2, 3)
    assert coherence_window(ModuleFamily.SL, upper.head(2), upper, window=2) == []
    mismatches = coherence_window(ModuleFamily.SL, Weight.of(1, 3), upper, window=2)
    assert mismatches[0] == {"summands": 0}
    assert any(m.get("lower") != m.get("upper") for m in mismatches[1:])
    assert coherence_window(ModuleFamily.SP, Weight.of(0, 1), Weight.of(0, 0, 0), window=1)


def test_gt_candidates():
    assert gt_candidates(Weight.of(2, 1, 0)) == [
        Weight.of(2, 1), Weight.of(2, 0), Weight.of(1, 1), Weight.of(1, 0),
    ]
    assert gt_candidates(Weight.of(3)) == []
    with pytest.raises(NotDominant):
        gt_candidates(Weight.of(0, 1))
