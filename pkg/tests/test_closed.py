import json

import pytest
from hypothesis import given, settings, strategies as st

from stlc_machines.closed import (
    NIL,
    Clapp,
    Closure,
    Env,
    Value,
    check_closed,
    closed_equal,
    closed_from_json,
    closed_to_json,
    describe,
    env_lookup,
    is_val,
    make_value,
)
from stlc_machines.errors import IllTyped, IndexOutOfRange, NotAValue
from stlc_machines.generate import random_pairs
from stlc_machines.syntax import O, App, Arrow, Lam, Var, read_term

OO = Arrow(O, O)
ID = Lam(O, Var(0, O), OO)


@pytest.fixture
def idc():
    return Closure(ID, NIL)


def test_is_val(idc):
    assert is_val(idc)
    assert not is_val(Closure(Var(0, OO), Env.of(idc)))
    f = Closure(Lam(OO, Var(0, OO), Arrow(OO, OO)), NIL)
    assert not is_val(Clapp(f, idc))


def test_make_value(idc):
    assert make_value(idc).closure is idc
    f = Closure(Lam(OO, Var(0, OO), Arrow(OO, OO)), NIL)
    with pytest.raises(NotAValue):
        make_value(Clapp(f, idc))
    with pytest.raises(NotAValue):
        make_value(Closure(App(f.term, ID, OO), NIL))
    with pytest.raises(NotAValue):
        Value(Closure(Var(0, OO), Env.of(idc)))


def test_env_lookup(idc):
    c1 = Closure(read_term(r"\x:o->o. x"), NIL)
    assert env_lookup(Env.of(idc), 0) is idc
    assert env_lookup(Env.of(idc, c1), 1) is c1
    with pytest.raises(IndexOutOfRange):
        env_lookup(NIL, 0)
    with pytest.raises(IndexOutOfRange):
        env_lookup(Env.of(idc), 1)


def test_env_is_persistent(idc):
    e1 = Env.of(idc)
    e2 = e1.extend(idc)
    assert len(e1) == 1 and len(e2) == 2
    assert e2.tail is e1
    assert e2.context == (OO, OO)


def test_closed_equal(idc):
    assert closed_equal(idc, idc)
    assert closed_equal(idc, Closure(Lam(O, Var(0, O), OO, "other"), NIL))
    f = Closure(Lam(OO, Var(0, OO), Arrow(OO, OO)), NIL)
    assert not closed_equal(idc, Clapp(f, idc))
    assert not closed_equal(
        Closure(Var(0, OO), Env.of(idc)),
        Closure(Var(0, OO), Env.of(Closure(read_term(r"\z:o. z"), Env.of(idc)))),
    )
    assert Closure(ID, Env.of(idc)) != idc


def test_equality_survives_deep_environments(idc):
    # far deeper than the interpreter's recursion limit
    a, b = idc, Closure(ID, NIL)
    for _ in range(5000):
        a = Closure(ID, Env.of(a))
        b = Closure(ID, Env.of(b))
    assert a == b
    assert Value(a) == Value(b)


def test_clapp_type_checks(debug, idc):
    with pytest.raises(IllTyped):
        Clapp(idc, idc)
    f = Closure(Lam(OO, Var(0, OO), Arrow(OO, OO)), NIL)
    assert Clapp(f, idc).ty == OO


def test_closure_construction_checks_in_debug(debug, idc):
    with pytest.raises(IllTyped):
        Closure(Var(0, O), Env.of(idc))


def test_describe(idc):
    assert describe(make_value(idc)) == r"\x:o. x  [in env: <empty>]"
    v = Closure(read_term(r"\f:o->o. \y:o. f y").body, Env.of(idc))
    assert describe(v) == r"\y:o. v0 y  [in env: v0 : o -> o]"
    assert "v0 : o -> o =" in describe(v, verbose=True)


def test_json_round_trip(idc):
    v = Closure(read_term(r"\f:o->o. \y:o. f y").body, Env.of(idc))
    f = Closure(Lam(OO, Var(0, OO), Arrow(OO, OO)), NIL)
    c = Clapp(f, v)
    data = closed_to_json(c)
    assert data["kind"] == "clapp"
    assert data["arg"] == {
        "kind": "closure",
        "type": "o -> o",
        "term": r"\y:o. v0 y",
        "env": [{"kind": "closure", "type": "o -> o", "term": r"\x:o. x", "env": []}],
    }
    assert closed_from_json(json.loads(json.dumps(data))) == c


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32))
def test_random_closed_terms_are_coherent(seed):
    for ctx, c in random_pairs(seed, 5):
        check_closed(c)
        for arg in ctx:
            check_closed(arg)
        assert closed_from_json(closed_to_json(c)) == c
