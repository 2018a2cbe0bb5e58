"""
Selmer 维数账本测试
"""
import pytest
import sympy
from hypothesis import given, strategies as st

from lie.exceptions import DomainError, FastLieError
from selmer.assumptions import SYMBOLIC, AssumptionSet, Mode
from selmer.ledger import (
    EVENTUALLY_STRICT,
    AffineBound,
    H2Kind,
    TraceEntry,
    build_ledger,
    compare_dimensions,
    first_strict_level,
    global_h1_graded_bound,
    global_h1f_bound,
    h2_status,
    h2_symbol,
    local_h1f_graded,
    local_h1f_total,
    replay_trace,
    stable_strict_level,
    theorem_threshold,
)
from selmer.rules import CITATIONS, RULES

THEOREM = AssumptionSet.all_nonvanishing()


def finite(*exceptional, cap=SYMBOLIC, bar=None):
    return AssumptionSet.finite_zeros(exceptional, h2_cap=cap, exceptional_bar=bar)


# ---------------------------------------------------------------- 局部维数

@pytest.mark.parametrize("n", [3, 4, 17, 50])
def test_local_graded(n):
    assert local_h1f_graded(n) == 2


def test_local_graded_rejects_level_two():
    with pytest.raises(DomainError):
        local_h1f_graded(2)


@pytest.mark.parametrize("n, expected", [(2, 2), (5, 8), (10, 18)])
def test_local_total(n, expected):
    assert local_h1f_total(n) == expected


def test_local_total_closed_form():
    assert all(local_h1f_total(n) == 2 * n - 2 for n in range(2, 201))
    with pytest.raises(DomainError):
        local_h1f_total(1)


# ---------------------------------------------------------------- H^2

def test_h2_vanishes_under_all_nonvanishing():
    status = h2_status(5, THEOREM)
    assert status.kind is H2Kind.VANISHES
    assert status.value == 0
    assert len(status.trace) == 4
    assert [e.rule for e in status.trace][-1] == "nonvanishing_all"


def test_h2_conditional_at_exceptional_level():
    status = h2_status(3, finite(-1))
    assert status.kind is H2Kind.CONDITIONAL
    assert status.k == -1
    assert str(status) == "CONDITIONAL(-1)"


def test_h2_vanishes_far_from_exceptional_set():
    status = h2_status(100, finite(-1))
    assert status.kind is H2Kind.VANISHES
    assert status.trace[-1].rule == "nonvanishing_eventual"


def test_h2_without_cap_is_unknown():
    status = h2_status(3, finite(-1, cap=None))
    assert status.kind is H2Kind.UNKNOWN
    assert status.value == h2_symbol(3)


def test_h2_rejects_low_levels():
    with pytest.raises(DomainError):
        h2_status(2, THEOREM)


def test_asymmetric_exceptional_sets():
    assumptions = finite(-1, cap=1, bar=[-2])
    assert h2_status(3, assumptions).kind is H2Kind.CONDITIONAL
    assert h2_status(4, assumptions).kind is H2Kind.CONDITIONAL
    assert h2_status(5, assumptions).kind is H2Kind.VANISHES


# ---------------------------------------------------------------- 整体上界

def test_graded_global_bound():
    assert global_h1_graded_bound(4, THEOREM) == 1
    assert global_h1_graded_bound(3, finite(-1, cap=2)) == 3
    assert global_h1_graded_bound(3, finite(-1)) == h2_symbol(3) + 1


@pytest.mark.parametrize("r, s", [(0, 1), (1, 2), (3, 4)])
def test_global_bound_at_level_two(r, s):
    bounds = global_h1f_bound(2, r, s, THEOREM)
    assert bounds.paper_value == bounds.derived_value == r + s - 1


@pytest.mark.parametrize("n, r, s, paper, derived", [(6, 1, 2, 7, 6), (4, 0, 1, 3, 2)])
def test_global_bound_examples(n, r, s, paper, derived):
    bounds = global_h1f_bound(n, r, s, THEOREM)
    assert (bounds.paper_value, bounds.derived_value) == (paper, derived)


def test_symbolic_global_bound_is_affine():
    bounds = global_h1f_bound(6, 1, 2, finite(-1, -2))
    assert bounds.paper is None
    assert bounds.derived.slope == 1
    assert bounds.derived.symbolic_constant
    assert bounds.derived_value == 6 + h2_symbol(3) + h2_symbol(4)


def test_global_bound_parameter_validation():
    with pytest.raises(DomainError):
        global_h1f_bound(1, 1, 2, THEOREM)
    with pytest.raises(DomainError):
        global_h1f_bound(3, 1, 0, THEOREM)


# ---------------------------------------------------------------- 比较与阈值

def test_compare_at_paper_threshold():
    verdict = compare_dimensions(4, 1, 2, THEOREM)
    assert (verdict.local, verdict.paper_bound, verdict.strict_paper) == (6, 5, True)


def test_compare_below_paper_threshold():
    verdict = compare_dimensions(3, 1, 2, THEOREM)
    assert (verdict.local, verdict.paper_bound, verdict.strict_paper) == (4, 4, False)
    assert verdict.strict_derived is True


def test_compare_with_concrete_caps():
    verdict = compare_dimensions(8, 1, 2, finite(-1, -2, cap=1))
    assert (verdict.local, verdict.derived_bound, verdict.strict_derived) == (14, 10, True)
    assert verdict.paper_bound is None


def test_compare_with_symbolic_caps():
    verdict = compare_dimensions(20, 1, 2, finite(-1, -2))
    assert verdict.eventual == EVENTUALLY_STRICT
    assert verdict.crossing_level is None
    assert "C_3" in verdict.crossing_expression
    assert verdict.strict_derived is None


@pytest.mark.parametrize("r, s, expected", [(1, 2, 4), (0, 1, 2), (3, 4, 8)])
def test_theorem_threshold(r, s, expected):
    threshold = theorem_threshold(r, s)
    assert threshold.paper == expected
    assert threshold.derived == max(r + s, 2)


def test_theorem_grid():
    for r in range(6):
        for s in range(1, 7):
            threshold = theorem_threshold(r, s)
            strict = [compare_dimensions(n, r, s, THEOREM) for n in range(2, 21)]
            for verdict in strict:
                assert verdict.strict_paper == (verdict.n >= threshold.paper)
                assert verdict.paper_bound - verdict.derived_bound == 1
            for flags in ([v.strict_paper for v in strict], [v.strict_derived for v in strict]):
                assert flags == sorted(flags)
            assert first_strict_level(r, s, THEOREM, bound="paper") == threshold.paper
            assert first_strict_level(r, s, THEOREM) == threshold.derived


def test_ledger_rows_under_theorem():
    for r in range(6):
        for s in range(1, 7):
            for row in build_ledger(r, s, THEOREM, 20):
                assert row.local_dim == 2 * row.n - 2
                assert row.paper_value - row.derived_value == (0 if row.n == 2 else 1)


# ---------------------------------------------------------------- trace

@pytest.mark.parametrize("assumptions", [THEOREM, finite(-1, -2, cap=1), finite(-1, -3), finite(-2, cap=None)])
def test_trace_soundness(assumptions):
    for row in build_ledger(1, 2, assumptions, 12):
        assert row.trace
        assert all(entry.citation in CITATIONS for entry in row.trace)
        assert all(entry.rule in RULES for entry in row.trace)
        assert replay_trace(row) == (row.local_dim, row.derived_value)


def test_ledger_rows_carry_h2_status():
    rows = build_ledger(1, 2, finite(-1, cap=2), 5)
    assert rows[0].h2_status is None
    assert [str(row.h2_status) for row in rows[1:]] == ["CONDITIONAL(-1)", "VANISHES", "VANISHES"]
    assert [row.derived_value for row in rows] == [2, 5, 6, 7]


def test_build_ledger_validation():
    with pytest.raises(DomainError):
        build_ledger(1, 2, THEOREM, 1)
    with pytest.raises(DomainError):
        build_ledger(-1, 2, THEOREM, 4)


# ---------------------------------------------------------------- 穿越层

def _scan(r, s, assumptions, upto=200):
    return next(
        n for n in range(2, upto) if global_h1f_bound(n, r, s, assumptions).derived_value < 2 * n - 2
    )


@given(
    st.sets(st.integers(-6, -1), max_size=3),
    st.integers(0, 4),
    st.integers(0, 3),
    st.integers(1, 3),
)
def test_crossing_level_matches_linear_scan(exceptional, cap, r, s):
    assumptions = finite(*exceptional, cap=cap)
    first = first_strict_level(r, s, assumptions)
    assert first == _scan(r, s, assumptions)
    assert compare_dimensions(first, r, s, assumptions).crossing_level == first

    stable = stable_strict_level(r, s, assumptions)
    for n in range(stable, stable + 20):
        assert compare_dimensions(n, r, s, assumptions).strict_derived
    if stable > 2:
        assert not compare_dimensions(stable - 1, r, s, assumptions).strict_derived


def test_symbolic_crossing_is_an_upper_bound_expression():
    stable = stable_strict_level(1, 2, finite(-1, -2))
    assert isinstance(stable, sympy.Expr)
    assert stable.free_symbols == {h2_symbol(3), h2_symbol(4)}
    assert first_strict_level(1, 2, finite(-1, -2)) is None


# ---------------------------------------------------------------- 假设与仿射上界

def test_assumption_set_validation():
    with pytest.raises(DomainError):
        AssumptionSet(Mode.ALL_NONVANISHING, frozenset({-1}))
    with pytest.raises(DomainError):
        finite(1)
    with pytest.raises(DomainError):
        finite(-1, cap=-3)


def test_assumption_set_from_config():
    flat = AssumptionSet.from_config({"mode": "finite-zeros", "exceptional": [-1, -2], "h2_cap": 2})
    assert flat == finite(-1, -2, cap=2)
    nested = AssumptionSet.from_config(
        {"mode": "finite-zeros", "exceptional": {"chi": [-1], "chi_bar": [-3]}, "h2_cap": "symbolic"}
    )
    assert nested.exceptional == frozenset({-1})
    assert nested.exceptional_bar == frozenset({-3})
    assert nested.h2_cap is SYMBOLIC
    assert AssumptionSet.from_config({}) == THEOREM
    with pytest.raises(DomainError):
        AssumptionSet.from_config({"mode": "sometimes"})


def test_assumption_set_describe():
    assert finite(-2, -1, cap=3).describe() == {
        "mode": "finite-zeros",
        "exceptional": [-2, -1],
        "exceptional_bar": None,
        "h2_cap": 3,
    }


def test_affine_bound():
    bound = AffineBound(1, 2)
    assert bound.at(5) == 7
    assert bound.evaluable
    assert bound.eventually_less_than(AffineBound(2, -2))
    assert not AffineBound(2, -2).eventually_less_than(bound)
    symbolic = AffineBound(1, h2_symbol(3))
    assert symbolic.symbolic_constant
    assert symbolic.eventually_less_than(AffineBound(2, -100))
    assert symbolic.eventually_less_than(AffineBound(1, 0)) is False


def test_replay_rejects_tampered_trace():
    row = build_ledger(1, 2, THEOREM, 4)[-1]
    forged = TraceEntry("sigma_minus", "made up", row.n, 0, 1)
    with pytest.raises(FastLieError):
        replay_trace(list(row.trace) + [forged])
    wrong_kind = TraceEntry.of("sigma_minus", row.n, local_delta=1)
    with pytest.raises(FastLieError):
        replay_trace(list(row.trace) + [wrong_kind])
