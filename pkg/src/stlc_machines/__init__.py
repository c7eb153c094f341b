"""Three evaluators for the simply typed lambda calculus (a plug/decompose
small-step evaluator, its refocused abstract machine, and the Krivine
machine) with a parser, type checker and differential test harness."""

from .closed import NIL, Clapp, Closure, Env, Value, closed_equal, env_lookup, is_val, make_value
from .errors import (
    FuelExhausted,
    GenerationFailed,
    IllScoped,
    IllTyped,
    InvalidEnvironment,
    NotAValue,
    ParseError,
    StlcError,
    UnboundVariable,
)
from .krivine import evaluate_krivine, krivine_step, valid_lookup
from .reduction import (
    ARG,
    MT,
    EvalContext,
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
from .refocus import evaluate_refocus, refocus
from .syntax import O, Arrow, elaborate, infer_type, parse_term, parse_type, read_term
from .trace import DEFAULT_FUEL, StepLog

__all__ = [name for name in dir() if not name.startswith("_")]
