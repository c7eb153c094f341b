import pytest
from hypothesis import given, settings, strategies as st

from stlc_machines.closed import NIL, Clapp, Closure, Env, Value, check_closed, is_val
from stlc_machines.errors import FuelExhausted, IllTyped
from stlc_machines.generate import GenConfig, generate_term, random_pairs
from stlc_machines.reduction import (
    ARG,
    MT,
    Beta,
    DecomposeD,
    EvalContext,
    Lookup,
    Rapp,
    ValD,
    check_decomposition,
    closure_of,
    contract,
    decompose,
    evaluate_smallstep,
    from_redex,
    head_reduce,
    load,
    plug,
    unload,
)
from stlc_machines.syntax import O, App, Arrow, Lam, Var, read_term
from stlc_machines.trace import StepLog

OO = Arrow(O, O)
ID = Lam(O, Var(0, O), OO)  # \y:o. y
F = Lam(OO, Var(0, OO), Arrow(OO, OO))  # \x:o->o. x
K = read_term(r"\a:o->o. \b:o->o. a")


@pytest.fixture
def idc():
    return Closure(ID, NIL)


# -- from_redex / contract ----------------------------------------------------


def test_from_redex(idc):
    env = Env.of(idc)
    assert from_redex(Lookup(0, env, OO)) == Closure(Var(0, OO), env)
    assert from_redex(Rapp(F, ID, NIL)) == Closure(App(F, ID, OO), NIL)
    assert from_redex(Beta(ID, NIL, Closure(Var(0, O), Env.of(Closure(Var(0, O), NIL))))) == Clapp(
        Closure(ID, NIL), Closure(Var(0, O), Env.of(Closure(Var(0, O), NIL)))
    )


def test_contract(idc):
    assert contract(Lookup(0, Env.of(idc), OO)) is idc
    # hand-applied Rapp clause
    r = contract(Rapp(F, ID, NIL))
    assert r == Clapp(Closure(F, NIL), Closure(ID, NIL))
    assert check_closed(r) == OO
    assert contract(Beta(F, NIL, idc)) == Closure(Var(0, OO), Env.of(idc))


# -- plug ----------------------------------------------------------------------


def test_plug(idc):
    f = Closure(K, NIL)
    x = idc
    y = Closure(Lam(O, Var(0, O), OO, "z"), NIL)
    assert plug(MT, f) is f
    assert plug(ARG(x, MT), f) == Clapp(f, x)
    assert plug(ARG(x, ARG(y, MT)), f) == Clapp(Clapp(f, x), y)
    assert plug(EvalContext.of(x, y), f) == Clapp(Clapp(f, x), y)


def test_context_destination(debug, idc):
    ctx = EvalContext.of(idc, idc)
    assert ctx.destination(K.ty) == OO
    with pytest.raises(IllTyped):
        ctx.destination(OO)
    with pytest.raises(IllTyped):
        plug(ctx, idc)


# -- load / unload / decompose -------------------------------------------------


def test_load_value():
    d = load(MT, Closure(ID, NIL))
    assert isinstance(d, ValD) and d.body == Var(0, O) and d.env == NIL


def test_load_app():
    d = load(MT, Closure(App(F, ID, OO), NIL))
    assert d == DecomposeD(Rapp(F, ID, NIL), MT)


def test_load_clapp(idc):
    d = load(MT, Clapp(Closure(F, NIL), idc))
    assert d == DecomposeD(Beta(F, NIL, idc), MT)
    assert d.redex.body == Var(0, OO)


def test_unload(idc):
    body_env = Env.of(idc)
    a2 = Closure(Lam(O, Var(0, O), OO, "w"), NIL)
    assert unload(MT, F, body_env) == ValD(F, body_env)
    assert unload(ARG(idc, MT), F, body_env) == DecomposeD(Beta(F, body_env, idc), MT)
    d = unload(ARG(idc, ARG(a2, MT)), K, NIL)
    assert d == DecomposeD(Beta(K, NIL, idc), ARG(a2, MT))
    assert check_decomposition(d)


def test_decompose_examples(idc):
    assert decompose(Closure(ID, NIL)) == ValD(ID, NIL)
    v = Env.of(idc)
    assert decompose(Closure(Var(0, OO), v)) == DecomposeD(Lookup(0, v, OO), MT)
    f = Closure(K, NIL)
    y = Closure(Lam(O, Var(0, O), OO, "z"), NIL)
    c = Clapp(Clapp(f, idc), y)
    d = decompose(c)
    assert d == DecomposeD(Beta(K, NIL, idc), ARG(y, MT))
    assert d.subject is c
    assert check_decomposition(d)


def test_decomposition_equality_distinguishes_kinds(idc):
    env = Env.of(idc)
    assert DecomposeD(Lookup(0, env, OO), MT) != DecomposeD(Rapp(F, ID, NIL), MT)
    assert ValD(ID, NIL) != DecomposeD(Lookup(0, env, OO), MT)


# -- head_reduce ----------------------------------------------------------------


def test_head_reduce(idc):
    assert head_reduce(idc) is idc
    env = Env.of(idc)
    assert head_reduce(Closure(App(F, ID, OO), env)) == Clapp(Closure(F, env), Closure(ID, env))
    assert head_reduce(Clapp(Closure(F, NIL), idc)) == Closure(Var(0, OO), Env.of(idc))


# -- evaluate_smallstep ------------------------------------------------------------


def test_evaluate_value_takes_no_steps(idc):
    v, log = evaluate_smallstep(idc, 10)
    assert v == Value(idc) and log.total == 0


def test_evaluate_worked_example(debug, ident_app, idc):
    c = closure_of(ident_app)
    v, log = evaluate_smallstep(c, 100)
    assert v == Value(idc)
    assert log.steps == ["rapp", "beta", "lookup"]
    # independent route: three head reductions
    c3 = head_reduce(head_reduce(head_reduce(c)))
    assert is_val(c3) and c3 == v.closure
    assert not is_val(head_reduce(head_reduce(c)))


@pytest.mark.parametrize("fuel", [0, -1, 1.5])
def test_evaluate_rejects_bad_fuel(ident_app, fuel):
    with pytest.raises(ValueError):
        evaluate_smallstep(closure_of(ident_app), fuel)


def test_fuel_exhaustion_keeps_partial_log(ident_app):
    with pytest.raises(FuelExhausted) as exc:
        evaluate_smallstep(closure_of(ident_app), 2)
    assert exc.value.log.steps == ["rapp", "beta"]
    v, log = evaluate_smallstep(closure_of(ident_app), 3)
    assert log.total == 3


def test_steplog_json(ident_app):
    _, log = evaluate_smallstep(closure_of(ident_app))
    data = log.to_json()
    assert data == {
        "machine": "smallstep",
        "steps": [{"n": 0, "redex": "rapp"}, {"n": 1, "redex": "beta"}, {"n": 2, "redex": "lookup"}],
        "total": 3,
        "fuel_used": 3,
    }
    assert StepLog.from_json(data) == log


def test_verbose_trace_records_states(ident_app):
    _, log = evaluate_smallstep(closure_of(ident_app), verbose=True)
    assert len(log.states) == 3
    assert log.states[0]["term"] == r"(\x:o -> o. x) (\y:o. y)"


# -- properties -------------------------------------------------------------------


def _fold_head_reduce(c, limit=100_000):
    n = 0
    while not is_val(c):
        c = head_reduce(c)
        n += 1
        assert n < limit
    return c, n


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_iteration_consistency(seed):
    for t in generate_term(GenConfig(seed=seed, count=5)):
        v, log = evaluate_smallstep(closure_of(t), check=True)
        c, n = _fold_head_reduce(closure_of(t))
        assert c == v.closure and n == log.total


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32))
def test_decomposition_soundness_and_type_preservation(seed):
    for ctx, c in random_pairs(seed, 5):
        c = plug(ctx, c)
        d = decompose(c)
        assert check_decomposition(d)
        assert d.subject is c
        if isinstance(d, DecomposeD):
            assert contract(d.redex).ty == from_redex(d.redex).ty
            assert check_closed(contract(d.redex)) == d.redex.ty
        else:
            assert head_reduce(c) is c
