from .algebra import AlgebraKind, Coroot, Generator, MatrixLieAlgebra
from .characters import CharacterKind, CharacterModel, character_multiplicity
from .fidelity import BracketFailure, bracket_fidelity
from .operators import WeylOperator, apply_to
from .xmodule import (
    BasisStatus,
    ModuleFamily,
    Monomial,
    Term,
    XModule,
    act,
    act_sl,
    act_sp,
    basis_window,
    is_strongly_connected,
    reachability_graph,
    singular_by_closed_form,
    singular_monomials,
    string_terminates,
    weight_of,
    xmodule_act,
)

__ALL__ = (
    'Monomial',
    'Term',
    'XModule',
    'CharacterModel',
    'MatrixLieAlgebra',
    'WeylOperator',
    'act_sl',
    'act_sp',
    'weight_of',
    'xmodule_act',
    'singular_monomials',
    'character_multiplicity',
)
