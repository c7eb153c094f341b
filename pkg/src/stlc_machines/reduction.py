"""Redexes, evaluation contexts, decomposition and iterated head reduction.

A closed term either is a value (the closure of a lambda) or splits
uniquely into a redex and the stack of arguments around it.  Decompositions
remember the ``(ctx, c)`` pair they were computed from so the term they
describe can be rebuilt and checked on demand.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _config
from .closed import NIL, Clapp, Closure, Value, closed_to_json, env_lookup
from .errors import FuelExhausted, IllTyped, InvariantViolation
from .syntax import Arrow, App, Lam, Term, Ty, Var
from .trace import DEFAULT_FUEL, StepLog, check_fuel

# ----------------------------------------------------------------------------
# Redexes


@dataclass(slots=True)
class Lookup:
    ref: int
    env: object
    ty: Ty

    kind = "lookup"


@dataclass(slots=True)
class Rapp:
    fun: Term
    arg: Term
    env: object

    kind = "rapp"

    @property
    def ty(self):
        return self.fun.ty.cod


@dataclass(slots=True)
class Beta:
    # the whole lambda is kept so its binder type (and name) survive
    lam: Lam
    env: object
    arg: object

    kind = "beta"

    @property
    def body(self):
        return self.lam.body

    @property
    def ty(self):
        return self.lam.body.ty


def from_redex(r):
    if isinstance(r, Lookup):
        return Closure(Var(r.ref, r.ty), r.env)
    if isinstance(r, Rapp):
        return Closure(App(r.fun, r.arg, r.fun.ty.cod), r.env)
    return Clapp(Closure(r.lam, r.env), r.arg)


def contract(r):
    if isinstance(r, Lookup):
        return env_lookup(r.env, r.ref)
    if isinstance(r, Rapp):
        return Clapp(Closure(r.fun, r.env), Closure(r.arg, r.env))
    return Closure(r.lam.body, r.env.extend(r.arg))


# ----------------------------------------------------------------------------
# Evaluation contexts


class EvalContext:
    """Arguments pending along an application spine.

    ``head`` is the argument applied first; iteration runs innermost to
    outermost.  The empty context ``MT`` fits any source type; the
    destination of a non-empty one follows from its source, see
    :meth:`destination`.
    """

    __slots__ = ("head", "tail", "size")

    def __init__(self, head=None, tail=None):
        self.head = head
        self.tail = tail
        self.size = 0 if tail is None else tail.size + 1

    @classmethod
    def of(cls, *args):
        """``EvalContext.of(x, y)`` is ``ARG x (ARG y MT)``."""
        ctx = MT
        for a in reversed(args):
            ctx = ARG(a, ctx)
        return ctx

    def push(self, arg):
        return EvalContext(arg, self)

    def __len__(self):
        return self.size

    def __iter__(self):
        ctx = self
        while ctx.tail is not None:
            yield ctx.head
            ctx = ctx.tail

    def destination(self, source):
        """Result type after plugging a term of type ``source``."""
        ty = source
        for arg in self:
            if not isinstance(ty, Arrow) or ty.dom != arg.ty:
                raise IllTyped(f"context argument of type {arg.ty} cannot follow {ty}")
            ty = ty.cod
        return ty

    def __eq__(self, other):
        if not isinstance(other, EvalContext):
            return NotImplemented
        if self.size != other.size:
            return False
        return all(a == b for a, b in zip(self, other))

    __hash__ = None

    def __repr__(self):
        if self.tail is None:
            return "MT"
        return f"EvalContext.of({', '.join(map(repr, self))})"


MT = EvalContext()


def ARG(arg, ctx):
    return EvalContext(arg, ctx)


def plug(ctx, c):
    if _config.DEBUG:
        ctx.destination(c.ty)
    while ctx.tail is not None:
        c = Clapp(c, ctx.head)
        ctx = ctx.tail
    return c


# ----------------------------------------------------------------------------
# Decompositions


class Decomposition:
    __slots__ = ("origin_ctx", "origin", "_subject")

    def _set_origin(self, ctx, c):
        self.origin_ctx = ctx
        self.origin = c
        self._subject = c if ctx.tail is None else None

    @property
    def subject(self):
        """The closed term this decomposition describes."""
        if self._subject is None:
            self._subject = plug(self.origin_ctx, self.origin)
        return self._subject

    __hash__ = None


class ValD(Decomposition):
    __slots__ = ("lam", "env")

    def __init__(self, lam, env, ctx=None, c=None):
        self.lam = lam
        self.env = env
        if c is None:
            ctx, c = MT, Closure(lam, env)
        self._set_origin(ctx, c)

    @property
    def body(self):
        return self.lam.body

    def __eq__(self, other):
        if not isinstance(other, ValD):
            return NotImplemented
        return self.lam == other.lam and self.env == other.env and self.subject == other.subject

    def __repr__(self):
        return f"ValD({self.lam!r}, {self.env!r})"


class DecomposeD(Decomposition):
    __slots__ = ("redex", "ctx")

    def __init__(self, redex, ctx, origin_ctx=None, c=None):
        self.redex = redex
        self.ctx = ctx
        if c is None:
            origin_ctx, c = ctx, from_redex(redex)
        self._set_origin(origin_ctx, c)

    def __eq__(self, other):
        if not isinstance(other, DecomposeD):
            return NotImplemented
        return (
            type(self.redex) is type(other.redex)
            and self.redex == other.redex
            and self.ctx == other.ctx
            and self.subject == other.subject
        )

    def __repr__(self):
        return f"DecomposeD({self.redex!r}, {self.ctx!r})"


def check_decomposition(d):
    """The subject invariant: a ValD describes its lambda closure, a
    DecomposeD describes its redex plugged into its context."""
    if isinstance(d, ValD):
        return d.subject == Closure(d.lam, d.env)
    return d.subject == plug(d.ctx, from_redex(d.redex))


def load(ctx, c):
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


def unload(ctx, lam, env):
    """Decide whether the closure of ``lam`` is a value or a Beta redex."""
    if ctx.tail is None:
        return ValD(lam, env)
    return DecomposeD(Beta(lam, env, ctx.head), ctx.tail, ctx, Closure(lam, env))


def decompose(c):
    return load(MT, c)


def head_reduce(c):
    d = decompose(c)
    if isinstance(d, ValD):
        return c
    return plug(d.ctx, contract(d.redex))


def _check_step(d, ty):
    if not check_decomposition(d):
        raise InvariantViolation(f"decomposition does not describe its subject: {d!r}")
    if d.subject.ty != ty:
        raise InvariantViolation(f"type changed from {ty} to {d.subject.ty}")


def evaluate_smallstep(c, fuel=DEFAULT_FUEL, *, verbose=False, check=None):
    """Decompose, contract, plug; repeat until the term is a value.

    Only contractions count as steps and consume fuel.
    """
    check_fuel(fuel)
    check = _config.DEBUG if check is None else check
    log = StepLog("smallstep", states=[] if verbose else None)
    ty = c.ty
    d = decompose(c)
    while isinstance(d, DecomposeD):
        if check:
            _check_step(d, ty)
        if log.total >= fuel:
            raise FuelExhausted(fuel, log)
        log.record(d.redex.kind, closed_to_json(c) if verbose else None)
        c = plug(d.ctx, contract(d.redex))
        d = decompose(c)
    if check:
        _check_step(d, ty)
    return Value(c), log


def closure_of(term):
    """The closed term a closed ``Term`` denotes: its closure under NIL."""
    return Closure(term, NIL)
