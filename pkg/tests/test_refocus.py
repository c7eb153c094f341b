import pytest
from hypothesis import given, settings, strategies as st

from stlc_machines.closed import NIL, Clapp, Closure, Env, Value
from stlc_machines.diff import harvest_pairs
from stlc_machines.generate import GenConfig, generate_term, random_pairs
from stlc_machines.reduction import (
    ARG,
    MT,
    Beta,
    DecomposeD,
    Lookup,
    ValD,
    check_decomposition,
    closure_of,
    decompose,
    evaluate_smallstep,
    load,
    plug,
)
from stlc_machines.refocus import evaluate_refocus, refocus
from stlc_machines.syntax import O, Arrow, Lam, Var, read_term

OO = Arrow(O, O)
ID = Lam(O, Var(0, O), OO)


@pytest.fixture
def idc():
    return Closure(ID, NIL)


def test_refocus_clauses(idc):
    assert refocus(MT, Closure(ID, NIL)) == ValD(ID, NIL)
    assert refocus(ARG(idc, MT), Closure(ID, NIL)) == DecomposeD(Beta(ID, NIL, idc), MT)


def test_refocus_through_clapp(idc):
    f = Closure(read_term(r"\g:o->o. g"), NIL)
    x = idc
    c = Clapp(Closure(Var(0, f.ty), Env.of(f)), x)
    d = refocus(MT, c)
    assert d == DecomposeD(Lookup(0, Env.of(f), f.ty), ARG(x, MT))
    assert d == decompose(plug(MT, c))


def test_evaluate_refocus_value(idc):
    v, log = evaluate_refocus(idc, 10)
    assert v == Value(idc) and log.total == 0 and log.machine == "refocus"


def test_evaluate_refocus_worked_example(debug, ident_app, idc):
    v, log = evaluate_refocus(closure_of(ident_app), 100)
    assert v == Value(idc)
    assert log.steps == ["rapp", "beta", "lookup"]
    v2, log2 = evaluate_smallstep(closure_of(ident_app), 100)
    assert v == v2 and log.steps == log2.steps


def test_evaluate_refocus_higher_order(debug):
    t = read_term(r"((\f:(o->o)->(o->o). f) (\g:o->o. g)) (\z:o. z)")
    v, log = evaluate_refocus(closure_of(t), 100)
    assert v == Value(Closure(ID, NIL))
    _, log2 = evaluate_smallstep(closure_of(t), 100)
    assert log.steps == log2.steps


def test_on_refocus_sees_every_call(ident_app):
    seen = []
    _, log = evaluate_refocus(closure_of(ident_app), on_refocus=lambda ctx, c: seen.append((ctx, c)))
    assert len(seen) == log.total + 1
    assert seen[0][0] is MT


def _lemmas_hold(ctx, c):
    r = refocus(ctx, c)
    d = decompose(plug(ctx, c))
    l = load(ctx, c)
    return r == d and d == l and all(map(check_decomposition, (r, d, l)))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_refocus_correct_on_generated_pairs(seed):
    for ctx, c in random_pairs(seed, 5):
        assert _lemmas_hold(ctx, c)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32))
def test_refocus_correct_on_harvested_pairs(seed):
    for t in generate_term(GenConfig(seed=seed, count=4)):
        for ctx, c in harvest_pairs(t):
            assert _lemmas_hold(ctx, c)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_evaluators_agree(seed):
    for t in generate_term(GenConfig(seed=seed, count=5)):
        v1, l1 = evaluate_smallstep(closure_of(t))
        v2, l2 = evaluate_refocus(closure_of(t))
        assert v1 == v2 and l1.steps == l2.steps
