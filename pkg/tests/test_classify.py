import pytest
from hypothesis import given, strategies as st

from limweight.classify import (
    central_char_Xsl,
    cone_of,
    epsilon_weight,
    finite_dim_identify_Xsl,
    hw_test_Xsl,
    hw_test_Xsp,
    is_cuspidal,
    is_finite_dim_Xsl,
    is_integrable,
    iso_Xsl,
    locally_finite_roots_Xsl,
    locally_finite_roots_Xsp,
    normalize_to_mu,
    root_closure_ok,
    sim_sl,
    sim_sp,
    sim_weyl,
    twisted_loc_support,
)
from limweight.core.exceptions import InvalidBorel, NotCommuting, NotFiniteDimensional, RankTooSmall
from limweight.rootdata import BorelDescriptor, Family, LieType, Root, natural_support
from limweight.weights import HALF, ExtScalar, SetDescriptor, Weight, WeightSeq, int_sets

from conftest import seqs, weights


def test_sim_on_weights():
    assert sim_sl(Weight.of(1, 0, "g0"), Weight.of(0, 1, "g0"))
    assert not sim_sl(Weight.of(1, -1, "g0"), Weight.of(0, 0, "g0"))
    assert not sim_sl(Weight.of(1, 0), Weight.of(2, 0))
    assert sim_weyl(Weight.of(1, -1), Weight.of(2, -3))
    assert sim_sp(Weight.of(2, 0), Weight.of(0, 0))
    assert not sim_sp(Weight.of(1, 0), Weight.of(2, 0))


def test_sim_on_sequences():
    assert sim_sl(WeightSeq.of([1, 0], -1), WeightSeq.of([0, 1], -1))
    assert not sim_sl(WeightSeq.of([1, 0], -1), WeightSeq.of([0, 0], -1))
    assert not sim_sl(WeightSeq.constant(1), WeightSeq.constant(0))
    assert not sim_sl(WeightSeq.of(["g0"], 0), WeightSeq.of(["g1"], 0))


@given(weights(2, 4))
def test_sim_sl_is_reflexive(mu):
    assert sim_sl(mu, mu)


@given(seqs(), seqs())
def test_sim_sl_is_symmetric_on_sequences(mu, nu):
    assert sim_sl(mu, nu) == sim_sl(nu, mu)


@given(weights(2, 4), st.data())
def test_sim_sl_on_lattice_moves(mu, data):
    shift = data.draw(st.lists(st.integers(-2, 2), min_size=mu.rank - 1, max_size=mu.rank - 1))
    nu = mu + tuple(shift + [-sum(shift)])
    assert sim_sl(mu, nu) == (int_sets(mu)[1] == int_sets(nu)[1])


# Highest weights


def test_hw_certificate_for_one_generic_entry():
    certificate = hw_test_Xsl(Weight.of(-1, -1, "g0"), BorelDescriptor.natural(size=3))
    assert certificate.i0 == 3
    assert certificate.a == ExtScalar.generic(0)
    assert certificate.hw_weight == Weight.of(-1, -1, "g0")


def test_hw_certificate_depends_on_the_order():
    mu = Weight.of(-1, 1, 0)
    certificate = hw_test_Xsl(mu, BorelDescriptor.natural(size=3))
    assert (certificate.i0, certificate.a) == (2, ExtScalar.rational(1))
    assert hw_test_Xsl(mu, BorelDescriptor.reversed_natural(size=3)) is None
    assert str(hw_test_Xsl(Weight.zero(3), BorelDescriptor.natural(size=3))) == "SlCert(i0=1, a=0) hw=(0,0,0)"


def test_mixed_generic_sum_has_no_certificate():
    assert hw_test_Xsl(Weight.of("g0", "g1", 0), BorelDescriptor.natural(size=3)) is None


def test_epsilon_weight():
    assert epsilon_weight(BorelDescriptor.natural(size=3), 3, 2, 5) == Weight.of(-1, 5, 0)
    assert epsilon_weight(BorelDescriptor.reversed_natural(size=3), 3, 2, 5) == Weight.of(0, 5, -1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sp_fixed_borel_highest_weight(n):
    certificate = hw_test_Xsp(Weight.zero(n), BorelDescriptor.fixed_sp(n))
    assert certificate.hw_weight == Weight.constant(n, HALF)


def test_sp_certificates():
    natural = BorelDescriptor.natural(SetDescriptor.everything(), size=2)
    certificate = hw_test_Xsp(Weight.of(-1, -1), natural)
    assert certificate.kind == "SpCertOmega"
    assert certificate.hw_weight == Weight.of("-1/2", "-1/2")
    shifted = hw_test_Xsp(Weight.of(-1, -2), natural)
    assert shifted.kind == "SpCertOmegaDelta"
    assert hw_test_Xsp(Weight.of("g0", 0), natural) is None
    with pytest.raises(InvalidBorel):
        hw_test_Xsp(Weight.zero(2), BorelDescriptor.natural(size=2))


# Isomorphism


def test_sl2_exceptional_pair():
    with pytest.raises(RankTooSmall):
        iso_Xsl(Weight.zero(2), Weight.constant(2, -1), 1, as_gl=False)
    assert iso_Xsl(Weight.zero(3), Weight.constant(3, -1), 2, as_gl=False)
    assert not iso_Xsl(Weight.zero(3), Weight.constant(3, -1))


def test_normalize_to_mu():
    assert normalize_to_mu(Weight.of(1, 0), 3) == Weight.of(2, 1)
    assert normalize_to_mu(Weight.of(0, 0, 0), 1) == Weight.of("1/3", "1/3", "1/3")


# Finiteness


def test_locally_finite_roots_sl():
    assert is_integrable(locally_finite_roots_Xsl(Weight.zero(3)))
    assert is_cuspidal(locally_finite_roots_Xsl(Weight.of("g0", "g1", "g2")))
    partition = locally_finite_roots_Xsl(Weight.of(-1, 0, "g0"))
    assert partition.fin == {Root.e_diff(1, 2), Root.e_diff(1, 3), Root.e_diff(3, 2)}
    assert root_closure_ok(partition)
    assert set(cone_of(partition.inf)) == {Root.e_diff(2, 3), Root.e_diff(3, 1)}


def test_locally_finite_roots_sp():
    partition = locally_finite_roots_Xsp(Weight.zero(2))
    assert len(partition.fin) == 5
    assert partition.inf == {Root.e_sum(1, 2), Root.two_e(1), Root.two_e(2)}
    assert not is_integrable(partition)


def test_finite_dimensional_identification():
    assert is_finite_dim_Xsl(Weight.of(2, 0, 1))
    assert str(finite_dim_identify_Xsl(Weight.of(2, 0, 1))) == "S^3(V)"
    assert str(finite_dim_identify_Xsl(Weight.of(-1, -2))) == "S^1(V*)"
    with pytest.raises(NotFiniteDimensional):
        finite_dim_identify_Xsl(Weight.of(1, -1))


def test_central_character():
    label = central_char_Xsl(Weight.of(1, 0, "g0"))
    assert (label.c, label.n) == (ExtScalar.generic(0, 1), 2)


def test_twisted_localization_support():
    base = natural_support(LieType(Family.A))
    twisted = twisted_loc_support(base, [Root.e_diff(1, 2)], ["1/2"])
    assert Weight.of("3/2", "-1/2", 0) in twisted
    assert Weight.of("1/2", "1/2", 0) in twisted
    assert Weight.of("1/2", "-1/2", 0) not in twisted
    assert twisted_loc_support(base, [], []) is base
    with pytest.raises(NotCommuting):
        twisted_loc_support(base, [Root.e_diff(1, 2), Root.e_diff(2, 3)], [0, 0])
