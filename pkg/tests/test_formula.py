import pytest
from hypothesis import given

from conftest import F, formulas
from iel.formula import (BOTTOM, K_BOTTOM, And, Implies, Know, Or, Var, length, subformula_closure,
                         subformulas)
from iel.syntax import ParseError, parse, render

p, q, r = Var("p"), Var("q"), Var("r")


@pytest.mark.parametrize("text, expected", [
    ("K(p->q)->(Kp->Kq)", Implies(Know(Implies(p, q)), Implies(Know(p), Know(q)))),
    ("~K_|_", Implies(Know(BOTTOM), BOTTOM)),
    ("p", p),
    ("p & q | r", Or(And(p, q), r)),
    ("p -> q -> r", Implies(p, Implies(q, r))),
    ("p & q & r", And(And(p, q), r)),
    ("KKp", Know(Know(p))),
    ("~Kp", Implies(Know(p), BOTTOM)),
    ("false", BOTTOM),
    ("K¬p → p ∧ ⊥", Implies(Know(Implies(p, BOTTOM)), And(p, BOTTOM))),
])
def test_parse(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize("text, pos", [("p &", 3), ("(p", 2), ("p q", 2), ("p $ q", 2), ("", 0)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos


@pytest.mark.parametrize("f, fmt, expected", [
    (Implies(Know(BOTTOM), BOTTOM), "ascii", "~K_|_"),
    (Know(Know(Var("g"))), "unicode", "KKg"),
    (And(p, Or(q, r)), "ascii", "p & (q | r)"),
    (Implies(Implies(p, q), r), "ascii", "(p -> q) -> r"),
    (Know(And(p, q)), "unicode", "K(p ∧ q)"),
    (Implies(p, BOTTOM), "latex", r"\neg p"),
])
def test_render(f, fmt, expected):
    assert render(f, fmt) == expected


@given(formulas)
def test_round_trip_ascii(f):
    assert parse(render(f, "ascii")) == f


@given(formulas)
def test_round_trip_unicode(f):
    assert parse(render(f, "unicode")) == f


@pytest.mark.parametrize("f, n", [(p, 1), (Know(p), 2), (Implies(Know(p), p), 4), (BOTTOM, 1)])
def test_length(f, n):
    assert length(f) == n


@given(formulas)
def test_proper_subformulas_are_shorter(f):
    for g in subformulas(f):
        if g != f:
            assert length(g) < length(f)


def test_closure_examples():
    assert subformula_closure([], Know(p)) == {Know(p), p, K_BOTTOM, BOTTOM}
    assert subformula_closure([], BOTTOM) == {BOTTOM, K_BOTTOM}
    kpq = F("K(p & q)")
    assert subformula_closure([kpq], q) == {kpq, And(p, q), p, q, K_BOTTOM, BOTTOM}


@given(formulas, formulas)
def test_closure_idempotent_and_monotone(f, g):
    c = subformula_closure([f], g)
    assert subformula_closure(c, g) == c
    assert subformula_closure([], g) <= c
    for h in c:
        assert set(subformulas(h)) <= c


@given(formulas, formulas)
def test_canonical_order_is_total(f, g):
    assert (f < g) + (g < f) + (f == g) == 1
