"""
Pruebas del analizador de fórmulas y del oráculo de tablas de verdad.
"""

import pytest
from hypothesis import given, settings, strategies as st

from src.core.models import And, Iff, Implies, Not, Or, Var, format_compact, format_parenthesized
from src.core.services.formulas import (
    assignment_of,
    collect_variables,
    conjunction_satisfiable,
    parse,
    truth_table,
)
from src.shared.exceptions import FormulaSizeError, FormulaSyntaxError, UnknownVariableError

a, b, c = Var("a"), Var("b"), Var("c")

VARIABLES = ["a", "b", "c", "d"]

formulas = st.recursive(
    st.sampled_from(VARIABLES).map(Var),
    lambda children: st.one_of(
        children.map(Not),
        st.tuples(children, children).map(lambda t: And(*t)),
        st.tuples(children, children).map(lambda t: Or(*t)),
        st.tuples(children, children).map(lambda t: Implies(*t)),
        st.tuples(children, children).map(lambda t: Iff(*t)),
    ),
    max_leaves=8,
)


@pytest.mark.parametrize("text, expected", [
    ("a & !b", And(a, Not(b))),
    ("a -> b | c", Implies(a, Or(b, c))),
    ("a | b & c", Or(a, And(b, c))),
    ("!a & b", And(Not(a), b)),
    ("~a", Not(a)),
    ("!!a", Not(Not(a))),
    ("(a | b) & c", And(Or(a, b), c)),
    ("a & b & c", And(And(a, b), c)),
    ("a | b | c", Or(Or(a, b), c)),
    ("a -> b -> c", Implies(a, Implies(b, c))),
    ("a <-> b <-> c", Iff(Iff(a, b), c)),
    ("a -> b <-> c", Iff(Implies(a, b), c)),
    ("a | b -> c", Implies(Or(a, b), c)),
    ("  a   &(b)  ", And(a, b)),
    ("x_1 & y2", And(Var("x_1"), Var("y2"))),
])
def test_precedence(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize("text, position", [
    ("a &", 3),
    ("", 0),
    ("a $ b", 2),
    ("(a", 2),
    ("a b", 2),
    ("a & )", 4),
])
def test_syntax_errors_report_position(text, position):
    with pytest.raises(FormulaSyntaxError) as exc:
        parse(text)
    assert exc.value.position == position
    assert f"posición {position}" in str(exc.value)


def test_truth_table_of_a_variable():
    assert truth_table(a, ["a"]).mask == 0b10


def test_contradiction_has_empty_mask():
    table = truth_table(parse("a & !a"), ["a"])
    assert table.mask == 0
    assert table.is_bottom and not table.satisfiable


def test_disjunction_has_three_models():
    assert truth_table(parse("a | b"), ["a", "b"]).model_count() == 3


def test_tautology_is_top():
    assert truth_table(parse("a | !a"), ["a"]).is_top


def test_unknown_variable():
    with pytest.raises(UnknownVariableError):
        truth_table(parse("a & b"), ["a"])


def test_too_many_variables():
    names = [f"v{i}" for i in range(17)]
    with pytest.raises(FormulaSizeError):
        truth_table(Var("v0"), names)


@pytest.mark.parametrize("texts, vars, expected", [
    (["a", "!a"], ["a"], False),
    (["a", "b"], ["a", "b"], True),
    ([], [], True),
    (["a -> b", "a", "!b"], ["a", "b"], False),
])
def test_conjunction_satisfiable(texts, vars, expected):
    assert conjunction_satisfiable([parse(t) for t in texts], vars) is expected


def test_collect_variables_is_sorted_union():
    assert collect_variables([parse("c & a"), parse("b | a")]) == ["a", "b", "c"]


@settings(max_examples=200, deadline=None)
@given(formulas)
def test_truth_table_matches_evaluation(formula):
    vars = collect_variables([formula])
    table = truth_table(formula, vars)
    for j in range(1 << len(vars)):
        assert bool(table.mask >> j & 1) == formula.evaluate(assignment_of(j, vars))


@settings(max_examples=200, deadline=None)
@given(formulas)
def test_parenthesized_printer_round_trips(formula):
    assert parse(format_parenthesized(formula)) == formula


@settings(max_examples=200, deadline=None)
@given(formulas)
def test_compact_printer_round_trips(formula):
    assert parse(format_compact(formula)) == formula


@settings(max_examples=150, deadline=None)
@given(st.lists(formulas, max_size=4))
def test_conjunction_agrees_with_assignments(fs):
    vars = collect_variables(fs)
    expected = any(
        all(f.evaluate(assignment_of(j, vars)) for f in fs)
        for j in range(1 << len(vars))
    )
    assert conjunction_satisfiable(fs, vars) is expected


@settings(max_examples=100, deadline=None)
@given(formulas, formulas)
def test_de_morgan_on_masks(left, right):
    vars = collect_variables([left, right])
    assert truth_table(Not(And(left, right)), vars).mask == truth_table(Or(Not(left), Not(right)), vars).mask
