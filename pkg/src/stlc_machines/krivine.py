"""The Krivine machine.

States are ``(term, env, ctx)`` triples.  The App transition pushes
``Closure(x, env)`` onto the context and moves to the function in one go,
so no closed application is ever built: environments and contexts hold
closures only.  The validity predicates below state that invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import _config
from .closed import NIL, Closure, Env, Value, closed_to_json, env_lookup, env_to_json, slot_names
from .errors import FuelExhausted, IndexOutOfRange, InvalidEnvironment, InvariantViolation
from .reduction import ARG, MT, EvalContext
from .syntax import App, Lam, Term, Ty, Var, infer_type, print_term
from .trace import DEFAULT_FUEL, StepLog, check_fuel

LOOKUP_T = "lookup"
APP_T = "app"
BETA_T = "beta"


# ----------------------------------------------------------------------------
# Validity


def _valid_envs(envs, known=None):
    stack = list(envs)
    seen = set() if known is None else known
    while stack:
        env = stack.pop()
        if id(env) in seen:
            continue
        e = env
        while e.tail is not None:
            c = e.head
            if not isinstance(c, Closure):
                return False
            stack.append(c.env)
            e = e.tail
        seen.add(id(env))
    return True


def is_valid_closure(c):
    return isinstance(c, Closure) and _valid_envs([c.env])


def is_valid_env(env):
    return _valid_envs([env])


def is_valid_context(ctx):
    frames = list(ctx)
    if not all(isinstance(c, Closure) for c in frames):
        return False
    return _valid_envs([c.env for c in frames])


def invariant(ctx, env):
    return is_valid_env(env) and is_valid_context(ctx)


class ValidClosure:
    """A closure whose environment holds closures only, recursively."""

    __slots__ = ("closure",)

    def __init__(self, c, check=True):
        if check and not is_valid_closure(c):
            raise InvalidEnvironment(f"not a valid closure: {c!r}")
        self.closure = c

    @property
    def context(self):
        return self.closure.env.context

    @property
    def env(self):
        return self.closure.env

    @property
    def term(self):
        return self.closure.term

    def __eq__(self, other):
        if not isinstance(other, ValidClosure):
            return NotImplemented
        return self.closure == other.closure

    __hash__ = None

    def __repr__(self):
        return f"ValidClosure({self.closure!r})"


def valid_lookup(ref, env, check=None):
    """Look ``ref`` up in a valid environment; the entry is a closure.

    The entry itself is always checked.  With ``check`` (default: the debug
    flag) the whole environment's validity is checked first.
    """
    check = _config.DEBUG if check is None else check
    if check and not is_valid_env(env):
        raise InvalidEnvironment("lookup in an environment containing a closed application")
    try:
        c = env_lookup(env, ref)
    except IndexOutOfRange as exc:
        raise InvalidEnvironment(str(exc)) from exc
    if not isinstance(c, Closure):
        raise InvalidEnvironment(f"entry {ref} is a closed application")
    return ValidClosure(c, check=False)


# ----------------------------------------------------------------------------
# States and transitions


@dataclass(slots=True, eq=False)
class MachineState:
    term: Term
    env: Env
    ctx: EvalContext
    # destination type: the type of the whole configuration, constant
    # across transitions
    dest: Ty

    @property
    def context(self):
        return self.env.context

    @classmethod
    def initial(cls, term):
        return cls(term, NIL, MT, term.ty)

    def __eq__(self, other):
        if not isinstance(other, MachineState):
            return NotImplemented
        return (
            self.term == other.term
            and self.env == other.env
            and self.ctx == other.ctx
            and self.dest == other.dest
        )

    __hash__ = None

    def to_json(self):
        return {
            "term": print_term(self.term, slot_names(self.env)),
            "env": env_to_json(self.env),
            "ctx": [closed_to_json(c) for c in self.ctx],
        }


@dataclass(slots=True, eq=False)
class Continue:
    next: MachineState
    transition: str


@dataclass(slots=True, eq=False)
class Final:
    value: Value


KrivineOutcome = Union[Continue, Final]


def krivine_step(s, check=None):
    t, env, ctx = s.term, s.env, s.ctx
    if isinstance(t, Var):
        c = valid_lookup(t.index, env, check)
        return Continue(MachineState(c.term, c.env, ctx, s.dest), LOOKUP_T)
    if isinstance(t, App):
        return Continue(MachineState(t.fun, env, ARG(Closure(t.arg, env), ctx), s.dest), APP_T)
    if ctx.tail is None:
        return Final(Value(Closure(t, env)))
    return Continue(MachineState(t.body, env.extend(ctx.head), ctx.tail, s.dest), BETA_T)


class _StateChecker:
    """Per-run invariant and typing checks; memoizes validated environments."""

    def __init__(self):
        self.known = set()
        self.alive = []

    def __call__(self, s):
        envs = [s.env]
        for frame in s.ctx:
            if not isinstance(frame, Closure):
                raise InvariantViolation("closed application in an evaluation context")
            envs.append(frame.env)
        if not _valid_envs(envs, self.known):
            raise InvariantViolation("closed application in an environment")
        self.alive.extend(envs)
        if infer_type(s.term, s.env.context) != s.term.ty:
            raise InvariantViolation("focus term mistyped")
        if s.ctx.destination(s.term.ty) != s.dest:
            raise InvariantViolation("destination type changed")


def evaluate_krivine(term, fuel=DEFAULT_FUEL, *, verbose=False, check=None, observer=None):
    """Run the machine from ``(term, NIL, MT)`` until it stops.

    Every transition consumes one unit of fuel.  ``observer(state, outcome)``
    sees each transition as it is taken, the final one included.
    """
    check_fuel(fuel)
    check = _config.DEBUG if check is None else check
    if check:
        infer_type(term, ())
        checker = _StateChecker()
    log = StepLog("krivine", states=[] if verbose else None)
    s = MachineState.initial(term)
    while True:
        if check:
            checker(s)
        if not isinstance(s.term, Lam) or s.ctx.tail is not None:
            if log.total >= fuel:
                raise FuelExhausted(fuel, log)
        out = krivine_step(s, check)
        if observer is not None:
            observer(s, out)
        if isinstance(out, Final):
            return out.value, log
        log.record(out.transition, s.to_json() if verbose else None)
        s = out.next


def describe_state(s):
    return f"{print_term(s.term, slot_names(s.env))}  | env {len(s.env)} | ctx {len(s.ctx)}"
