"""
自由李代数测试
"""
import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lie.exceptions import DegreeOverflowError, DomainError, TruncationMismatchError
from lie.freelie import (
    ZERO,
    BracketTree,
    Generator,
    LieElement,
    LyndonWord,
    ad_power,
    bigraded_basis,
    bigraded_dimension,
    bracket,
    is_lyndon,
    lyndon_basis,
    parse_bracket,
    rewrite_to_basis,
    tree_degree,
    witt_dimension,
    word,
)
from oracle import (
    commutator,
    elements,
    expand_element,
    expand_tree,
    expand_word,
    random_element,
    rank,
    trees,
    words_up_to,
)

E, F = Generator.E, Generator.F


def basis(letters, D=8):
    return LieElement.basis(letters, D)


@pytest.mark.parametrize("n, expected", [(1, 2), (2, 1), (3, 2), (4, 3), (5, 6), (6, 9)])
def test_witt_dimension(n, expected):
    assert witt_dimension(n) == expected


def test_witt_dimension_rejects_zero():
    with pytest.raises(DomainError):
        witt_dimension(0)


@pytest.mark.parametrize("i, j, expected", [(1, 0, 1), (2, 0, 0), (2, 3, 2), (3, 2, 2)])
def test_bigraded_dimension(i, j, expected):
    assert bigraded_dimension(i, j) == expected


def test_bigraded_dimension_rejects_origin():
    with pytest.raises(DomainError):
        bigraded_dimension(0, 0)


def test_lyndon_basis_small_degrees():
    assert [w.letters for w in lyndon_basis(1)] == ["E", "F"]
    assert [w.letters for w in lyndon_basis(2)] == ["EF"]
    assert [w.letters for w in lyndon_basis(3)] == ["EEF", "EFF"]


@pytest.mark.parametrize("n", range(1, 17))
def test_basis_count_matches_witt_and_bigraded_sum(n):
    assert len(lyndon_basis(n)) == witt_dimension(n)
    assert sum(bigraded_dimension(i, n - i) for i in range(n + 1)) == witt_dimension(n)


def test_bigraded_dimension_symmetric():
    for n in range(1, 17):
        for i in range(n + 1):
            assert bigraded_dimension(i, n - i) == bigraded_dimension(n - i, i)


def test_bigraded_basis_matches_dimension():
    for n in range(1, 9):
        for i in range(n + 1):
            assert len(bigraded_basis(i, n - i)) == bigraded_dimension(i, n - i)


def test_lyndon_word_validation():
    assert is_lyndon("EEF") and not is_lyndon("FE") and not is_lyndon("EE")
    with pytest.raises(DomainError):
        LyndonWord("FE")
    with pytest.raises(DomainError):
        LyndonWord("EXF")


def test_standard_factorization_and_bracketing():
    assert word("EEF").bracketing() == "[e,[e,f]]"
    assert word("EFF").bracketing() == "[[e,f],f]"
    u, v = word("EEFEF").standard_factorization()
    assert (u.letters, v.letters) == ("EEF", "EF")
    assert word("EEFF").bidegree == (2, 2)


def test_lyndon_basis_is_linearly_independent():
    for n in range(1, 7):
        assert rank(expand_word(w) for w in lyndon_basis(n)) == witt_dimension(n)


@pytest.mark.parametrize("text, expected", [
    ("[e,e]", {}),
    ("[e,f]", {"EF": 1}),
    ("[[e,f],f]", {"EFF": 1}),
    ("[f,[e,f]]", {"EFF": -1}),
    ("[e,[e,f]]", {"EEF": 1}),
])
def test_rewrite_examples(text, expected):
    assert rewrite_to_basis(text, 6) == LieElement(expected, 6)


def test_rewrite_with_coefficients():
    result = rewrite_to_basis("2*[e,[e,f]] - 3/2[f,[e,f]]", 3)
    assert result.coefficient("EEF") == 2
    assert result.coefficient("EFF") == Fraction(3, 2)


def test_parse_bracket_builds_trees():
    ((coeff, tree),) = parse_bracket("-[e,[e,f]]")
    assert coeff == -1
    assert tree == BracketTree(E, BracketTree(E, F))
    assert tree_degree(tree) == 3


def test_parse_bracket_rejects_garbage():
    with pytest.raises(DomainError):
        parse_bracket("[e,f")
    with pytest.raises(DomainError):
        parse_bracket("3/0[e,f]")


def test_rewrite_rejects_tree_above_truncation():
    with pytest.raises(DegreeOverflowError):
        rewrite_to_basis("[e,[e,f]]", 2)


def test_bracket_examples():
    e, f = LieElement.generator(E, 4), LieElement.generator(F, 4)
    assert bracket(e, e).is_zero()
    assert bracket(e, f) == LieElement.basis("EF", 4)
    assert bracket(LieElement.basis("EF", 4), e) == -LieElement.basis("EEF", 4)


def test_bracket_truncates_silently():
    assert bracket(basis("EEF", 5), basis("EFF", 5)).is_zero()
    assert not bracket(basis("EEF", 6), basis("EFF", 6)).is_zero()


def test_mismatched_truncation_degrees():
    with pytest.raises(TruncationMismatchError):
        bracket(basis("EF", 4), basis("EF", 5))
    with pytest.raises(TruncationMismatchError):
        basis("EF", 4) + basis("EF", 5)


def test_zero_element_degree_marker():
    zero = LieElement.zero(3)
    assert zero.degree is ZERO
    assert zero.min_degree is ZERO
    assert LieElement({"EF": 0}, 3).is_zero()


def test_terms_above_truncation_are_dropped():
    x = LieElement({"E": 1, "EEF": 2}, 2)
    assert list(x.terms) == [word("E")]


def test_homogeneous_components():
    x = LieElement({"E": 1, "EF": 2, "EFF": -1}, 4)
    parts = x.homogeneous_components()
    assert sorted(parts) == [1, 2, 3]
    assert all(p.is_homogeneous() for p in parts.values())
    assert sum(parts.values(), LieElement.zero(4)) == x


def test_ad_power_examples():
    ef = LieElement.basis("EF", 6)
    assert ad_power(E, 0, ef) == ef
    assert ad_power(E, 1, ef) == LieElement.basis("EEF", 6)
    assert ad_power(F, 2, ef) == LieElement.basis("EFFF", 6)


@pytest.mark.parametrize("k", range(0, 7))
def test_ad_power_signs(k):
    ef = LieElement.basis("EF", k + 2)
    assert ad_power(E, k, ef) == LieElement.basis("E" * (k + 1) + "F", k + 2)
    assert ad_power(F, k, ef) == (-1) ** k * LieElement.basis("E" + "F" * (k + 1), k + 2)


def test_ad_power_overflow():
    with pytest.raises(DegreeOverflowError):
        ad_power(E, 3, LieElement.basis("EF", 4))


@given(elements(4, 8), elements(4, 8))
def test_antisymmetry(x, y):
    assert (bracket(x, y) + bracket(y, x)).is_zero()


@given(elements(3, 8), elements(3, 8), elements(3, 8))
def test_jacobi(x, y, z):
    total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert total.is_zero()


@given(st.sampled_from(words_up_to(4)), st.sampled_from(words_up_to(4)))
def test_grading_is_additive(u, v):
    product = bracket(LieElement.basis(u, 8), LieElement.basis(v, 8))
    i, j = u.bidegree[0] + v.bidegree[0], u.bidegree[1] + v.bidegree[1]
    assert all(w.bidegree == (i, j) for w in product.terms)


@given(trees.filter(lambda t: tree_degree(t) <= 6))
def test_rewrite_agrees_with_associative_expansion(tree):
    assert expand_element(rewrite_to_basis(tree, 6)) == expand_tree(tree)


@given(elements(4, 8), elements(4, 8))
def test_bracket_agrees_with_commutator(x, y):
    # 次数之和不超过 8，截断不起作用
    assert expand_element(bracket(x, y)) == commutator(expand_element(x), expand_element(y))


def test_jacobi_and_antisymmetry_seeded():
    rng = random.Random(20240601)
    for _ in range(500):
        x, y, z = (random_element(rng, 8, 10) for _ in range(3))
        assert (bracket(x, y) + bracket(y, x)).is_zero()
        total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert total.is_zero()


def test_bracket_agrees_with_commutator_seeded():
    rng = random.Random(7)
    for _ in range(200):
        x, y = random_element(rng, 4, 8), random_element(rng, 4, 8)
        assert expand_element(bracket(x, y)) == commutator(expand_element(x), expand_element(y))


def test_dimension_formulas_use_current_mobius():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert witt_dimension(12) == 335
        assert bigraded_dimension(6, 6) == 75
    assert not [w for w in caught if "mobius" in str(w.message)]
