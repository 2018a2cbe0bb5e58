# 自由李代数核心模块
# 包含 Lyndon 基运算、W 商以及 Galois 记账

from .exceptions import DegreeOverflowError, DomainError, FastLieError, TruncationMismatchError
from .freelie import (
    ZERO,
    BracketTree,
    Generator,
    LieElement,
    LyndonWord,
    ad_power,
    bigraded_dimension,
    bracket,
    lyndon_basis,
    parse_bracket,
    rewrite_to_basis,
    witt_dimension,
)
from .wquotient import (
    Bidegree,
    FiltrationIdeal,
    WElement,
    in_ideal,
    project_to_w,
    w_graded_basis,
    w_graded_dimension,
    w_nilpotent_dimension,
)
from .galois import (
    CharacterLabel,
    GradedModuleLabel,
    LieAutomorphism,
    apply_automorphism,
    character_of_graded_piece,
    check_leading_term,
    dual_twist,
    minus_eigenspace_dimension,
    sigma_involution,
)

__all__ = [
    'FastLieError',
    'DomainError',
    'DegreeOverflowError',
    'TruncationMismatchError',
    'ZERO',
    'Generator',
    'LyndonWord',
    'LieElement',
    'BracketTree',
    'witt_dimension',
    'bigraded_dimension',
    'lyndon_basis',
    'rewrite_to_basis',
    'parse_bracket',
    'bracket',
    'ad_power',
    'Bidegree',
    'FiltrationIdeal',
    'WElement',
    'in_ideal',
    'project_to_w',
    'w_graded_basis',
    'w_graded_dimension',
    'w_nilpotent_dimension',
    'CharacterLabel',
    'GradedModuleLabel',
    'LieAutomorphism',
    'character_of_graded_piece',
    'dual_twist',
    'apply_automorphism',
    'check_leading_term',
    'sigma_involution',
    'minus_eigenspace_dimension',
]
