"""Refocused small-step machine.

``refocus(ctx, c)`` walks straight to the next redex of ``plug(ctx, c)``
without building the plugged term, so the evaluator never calls plug or
decompose.
"""

from __future__ import annotations

from . import _config
from .closed import Clapp, Value, closed_to_json
from .errors import FuelExhausted
from .reduction import (
    ARG,
    MT,
    Beta,
    DecomposeD,
    Lookup,
    Rapp,
    ValD,
    _check_step,
    contract,
    from_redex,
)
from .syntax import App, Lam
from .trace import DEFAULT_FUEL, StepLog, check_fuel


def refocus(ctx, c):
    ctx0, c0 = ctx, c
    while isinstance(c, Clapp):
        ctx = ARG(c.arg, ctx)
        c = c.fun
    t = c.term
    if isinstance(t, Lam):
        if ctx.tail is None:
            return ValD(t, c.env, ctx0, c0)
        return DecomposeD(Beta(t, c.env, ctx.head), ctx.tail, ctx0, c0)
    if isinstance(t, App):
        return DecomposeD(Rapp(t.fun, t.arg, c.env), ctx, ctx0, c0)
    return DecomposeD(Lookup(t.index, c.env, t.ty), ctx, ctx0, c0)


def evaluate_refocus(c, fuel=DEFAULT_FUEL, *, verbose=False, check=None, on_refocus=None):
    """Iterate refocus/contract from the empty context.

    ``on_refocus(ctx, c)`` is called before every refocus call; it is how
    the property tests harvest reachable pairs.
    """
    check_fuel(fuel)
    check = _config.DEBUG if check is None else check
    log = StepLog("refocus", states=[] if verbose else None)
    ty = c.ty
    if on_refocus is not None:
        on_refocus(MT, c)
    d = refocus(MT, c)
    while isinstance(d, DecomposeD):
        if check:
            _check_step(d, ty)
        if log.total >= fuel:
            raise FuelExhausted(fuel, log)
        r, ctx = d.redex, d.ctx
        if verbose:
            state = {"redex": _redex_json(r), "ctx": [closed_to_json(a) for a in ctx]}
        else:
            state = None
        log.record(r.kind, state)
        c = contract(r)
        if on_refocus is not None:
            on_refocus(ctx, c)
        d = refocus(ctx, c)
    if check:
        _check_step(d, ty)
    return Value(d.subject), log


def _redex_json(r):
    return {"kind": r.kind, "term": closed_to_json(from_redex(r))}
