"""Worked cases with known answers; the paper-examples suite runs the same ones"""
import pytest

from limweight.classify import hw_test_Xsp, iso_Xsl
from limweight.core.exceptions import RankTooSmall
from limweight.degrees import deg_fd, dim_fd
from limweight.limits import (
    HwStatus,
    LimitModuleDescriptor,
    ModuleKind,
    Side,
    annihilator_label,
    classify_sl,
    hw_test_limit,
)
from limweight.rootdata import BorelDescriptor, parse_borel
from limweight.services import run_verification
from limweight.weights import HALF, SetDescriptor, Weight, WeightSeq

TWO_SIDED = "[asc{odds}; desc{evens}]"


def test_one_generic_entry_with_a_dense_tail():
    d = LimitModuleDescriptor.x_sl(WeightSeq.of([-1, -1, "g0"], 0))
    verdict = hw_test_limit(d, parse_borel("[seq(1,2,3); dense{4,...}]"))
    assert verdict.status is HwStatus.HIGHEST_WEIGHT
    assert verdict.side is Side.ONE_SIDED
    assert (verdict.i0, str(verdict.a)) == (3, "g0")
    assert hw_test_limit(d, BorelDescriptor.natural()).is_highest_weight


def test_two_sided_highest_weight():
    d = LimitModuleDescriptor.x_sl(WeightSeq.indicator(SetDescriptor.odds(), -1, 0))
    verdict = hw_test_limit(d, parse_borel(TWO_SIDED))
    assert (verdict.status, verdict.side) == (HwStatus.HIGHEST_WEIGHT, Side.TWO_SIDED)


def test_drifting_tail_depends_on_the_order():
    d = LimitModuleDescriptor.x_sl(WeightSeq.of([1, 2, "g0"], -1, -1))
    assert hw_test_limit(d, BorelDescriptor.natural()).status is HwStatus.NEITHER
    assert hw_test_limit(d, BorelDescriptor.reversed_natural()).status is HwStatus.PSEUDO


def test_sp_constant_sequence_is_pseudo():
    d = LimitModuleDescriptor.x_sp(WeightSeq.constant(1))
    assert hw_test_limit(d, BorelDescriptor.natural(SetDescriptor.empty())).status is HwStatus.PSEUDO


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sp_fixed_borel(n):
    certificate = hw_test_Xsp(Weight.zero(n), BorelDescriptor.fixed_sp(n))
    assert certificate.hw_weight == Weight.constant(n, HALF)


def test_sl2_exceptional_pair():
    with pytest.raises(RankTooSmall):
        iso_Xsl(Weight.zero(2), Weight.constant(2, -1), 1, as_gl=False)
    assert iso_Xsl(Weight.zero(3), Weight.constant(3, -1), 2, as_gl=False)


def test_generic_tail_is_not_integrable():
    d, shape = classify_sl(WeightSeq.of([1, 2, "g0"], -1))
    assert d.kind is ModuleKind.X_SL
    assert shape is None
    assert str(annihilator_label(d)) == "I(1,0;[];[])"


def test_degree_of_the_adjoint_module():
    assert (dim_fd((2, 1, 0)), deg_fd((2, 1, 0))) == (8, 2)


def test_suite_passes():
    report = run_verification(["paper-examples"], seed=7, threads=1)
    assert report.ok, [o for o in report.outcomes if not o.ok]
    assert all(o.cases == 1 for o in report.outcomes)
