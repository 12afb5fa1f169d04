from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings as hypothesis_settings

from limweight.classify import sim_sl, sim_sp
from limweight.core.exceptions import NotInBasis
from limweight.realization import (
    BasisStatus,
    CharacterKind,
    CharacterModel,
    MatrixLieAlgebra,
    Monomial,
    XModule,
    act,
    act_sl,
    basis_window,
    bracket_fidelity,
    is_strongly_connected,
    singular_by_closed_form,
    singular_monomials,
    string_terminates,
    weight_of,
    xmodule_act,
)
from limweight.realization.coefficients import format_coeff
from limweight.rootdata import BorelDescriptor, Root
from limweight.weights import Weight

from conftest import weights


@pytest.mark.parametrize(
    "algebra, exponents",
    [
        (MatrixLieAlgebra.gl(1), [Weight.of(0, 0), Weight.of("g0", -1)]),
        (MatrixLieAlgebra.gl(2), [Weight.of(-1, 2, "g2+1/2")]),
        (MatrixLieAlgebra.sp(1), [Weight.of("g0"), Weight.of(2)]),
        (MatrixLieAlgebra.sp(2), [Weight.of(1, "g1-1/2")]),
    ],
    ids=str,
)
def test_realization_respects_brackets(algebra, exponents):
    assert bracket_fidelity(algebra, exponents) == []


def test_matrix_algebras():
    assert str(MatrixLieAlgebra.gl(2)) == "gl(3)"
    assert str(MatrixLieAlgebra.sp(2)) == "sp(4)"
    assert MatrixLieAlgebra.sp(2).variables == 2
    assert len(MatrixLieAlgebra.gl(2).generators()) == 6 + 3
    with pytest.raises(ValueError):
        MatrixLieAlgebra.gl(0)


def test_act_sl_is_x_i_d_j():
    term = act_sl(1, 2, 1, Monomial(Weight.of(-1, 0)))
    assert term.mono == Monomial(Weight.of(-2, 1))
    assert term.coeff == Fraction(-1)
    assert act_sl(1, 1, 2, Monomial(Weight.of(-1, 0))) is None
    with pytest.raises(ValueError):
        act_sl(1, 1, 1, Monomial(Weight.of(0, 0)))


def test_generic_coefficients_are_polynomials():
    (term,) = act(XModule.sl(Weight.of("g0", "g1")), Root.e_diff(1, 2), Monomial(Weight.of("g0", "g1")))
    assert format_coeff(term.coeff) == "g1"


def test_basis_status():
    module = XModule.sl(Weight.of(-1, 0, -1))
    assert module.status(Monomial(Weight.of(-1, 1, -2))) is BasisStatus.IN_BASIS
    assert module.status(Monomial(Weight.of(0, 0, -2))) is BasisStatus.IN_V_PLUS
    assert module.status(Monomial(Weight.of(-2, -1, 1))) is BasisStatus.OUTSIDE
    assert module.status(Monomial(Weight.of(-1, 0, 0))) is BasisStatus.OUTSIDE


def test_quotient_drops_the_submodule():
    module = XModule.sl(Weight.of(-1, 0, -1))
    m = Monomial(Weight.of(-1, 1, -2))
    assert act(module, Root.e_diff(1, 2), m)
    assert xmodule_act(module, Root.e_diff(1, 2), m) == []


def test_acting_off_the_basis_raises():
    module = XModule.sl(Weight.of(1, 0))
    with pytest.raises(NotInBasis):
        xmodule_act(module, Root.e_diff(1, 2), Monomial(Weight.of(2, -1)))
    with pytest.raises(ValueError):
        XModule.sl(Weight.of(1))


@hypothesis_settings(max_examples=25, deadline=None)
@given(weights(min_rank=2, max_rank=3))
def test_sl_window_stays_in_class(mu):
    module = XModule.sl(mu)
    window = basis_window(module, 2)
    assert Monomial(mu) in window
    assert all(sim_sl(m.exponent, mu) for m in window)


@hypothesis_settings(max_examples=25, deadline=None)
@given(weights(min_rank=1, max_rank=2))
def test_sp_window_stays_in_class(mu):
    window = basis_window(XModule.sp(mu), 2)
    assert all(sim_sp(m.exponent, mu) for m in window)


@pytest.mark.parametrize("mu", [Weight.of(-1, 0, 0), Weight.of(0, "g0", -1), Weight.of(-2, 1, 0)], ids=str)
def test_closed_form_singular_vectors(mu):
    module = XModule.sl(mu)
    window = basis_window(module, 2)
    for order in permutations(range(1, 4)):
        borel = BorelDescriptor.from_permutation(order)
        expected = [m for m in window if singular_by_closed_form(module, borel, m)]
        assert singular_monomials(module, borel, window) == expected


def test_weight_of():
    m = Monomial(Weight.of(1, -2))
    assert weight_of(m, "sl") == Weight.of(1, -2)
    assert weight_of(m, "sp") == Weight.of("3/2", "-3/2")


def test_cuspidal_module_is_strongly_connected():
    assert is_strongly_connected(XModule.sl(Weight.of("g0", "g1")), radius=1)


def test_root_strings():
    symmetric_square = XModule.sl(Weight.of(2, 0))
    m = Monomial(Weight.of(2, 0))
    assert string_terminates(symmetric_square, Root.e_diff(1, 2), m)
    assert string_terminates(symmetric_square, Root.e_diff(2, 1), m)
    cuspidal = XModule.sl(Weight.of("g0", "g1"))
    assert not string_terminates(cuspidal, Root.e_diff(1, 2), Monomial(Weight.of("g0", "g1")))


def test_character_models():
    assert len(CharacterModel.of(CharacterKind.SPINOR_B, 2).weights()) == 4
    assert len(CharacterModel.of(CharacterKind.SPINOR_D_PLUS, 2).weights()) == 2
    even = CharacterModel.of(CharacterKind.SHALE_WEIL_EVEN, 1)
    assert even.weights() == [Weight.of("5/2"), Weight.of("1/2")]
    assert even.highest_weight == Weight.of("1/2")
    assert CharacterModel.of(CharacterKind.SHALE_WEIL_ODD, 2).highest_weight == Weight.of("3/2", "1/2")
    adjoint = CharacterModel.finite_dim_gl(Weight.of(2, 1, 0))
    assert adjoint.multiplicity(Weight.of(1, 1, 1)) == 2
    assert adjoint.multiplicity(Weight.of(1, 1)) == 0
    assert len(adjoint.weights()) == 7
    assert str(adjoint) == "L(2,1,0)"
