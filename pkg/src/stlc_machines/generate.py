"""Type-directed random generation of closed, well-typed terms.

Generation is guided by an inhabitation test for implicational types (with
a single base type every type ends in ``o``), so the backtracking search
never commits to a goal that has no inhabitant in the current context.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .closed import NIL, Clapp, Closure, Env
from .errors import GenerationFailed
from .reduction import EvalContext
from .syntax import O, App, Arrow, Base, Lam, Ty, Var, arrows

NAMES = "xyzfghuvwabcdpqrst"


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_depth: int = 5
    goal_type: Ty = Arrow(O, O)
    count: int = 1
    # soft cap: past it no new redexes, and short spines are strongly preferred
    max_nodes: int = 50

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")
        if self.count < 1:
            raise ValueError("count must be at least 1")


# ----------------------------------------------------------------------------
# Inhabitation


def premises(ty):
    out = []
    while isinstance(ty, Arrow):
        out.append(ty.dom)
        ty = ty.cod
    return out


def inhabited(ty, ctx=()):
    """Does ``ty`` have an inhabitant in a context with these types?"""
    return _inhabited(ty, frozenset(ctx))


@lru_cache(maxsize=None)
def _inhabited(ty, hyps):
    return _prove(ty, hyps, frozenset())


def _prove(ty, hyps, in_progress):
    hyps = hyps.union(premises(ty))
    if hyps in in_progress:
        return False
    in_progress = in_progress | {hyps}
    return any(all(_prove(p, hyps, in_progress) for p in premises(h)) for h in hyps)


# ----------------------------------------------------------------------------
# Terms


def random_type(rng, size=3):
    if size <= 1 or rng.random() < 0.4:
        return O
    left = rng.randint(1, size - 1)
    return Arrow(random_type(rng, left), random_type(rng, size - left))


def _weighted_order(rng, options):
    keyed = [(rng.random() ** (1.0 / w), i, opt) for i, (opt, w) in enumerate(options) if w > 0]
    keyed.sort(key=lambda k: (-k[0], k[1]))
    return [opt for _, _, opt in keyed]


class _OutOfBudget(Exception):
    pass


class TermGenerator:
    """Backtracking generator.  ``generate(goal, ctx, depth)`` returns a
    term of type ``goal`` in ``ctx`` (innermost first) whose binder depth is
    at most ``depth``, or None.

    A beta-redex ``(\\v. body) arg`` is only introduced when two binder
    levels remain, so at depth 1 the search space is the normal forms.
    """

    def __init__(self, rng, max_nodes=50, budget=20_000):
        self.rng = rng
        self.max_nodes = max_nodes
        self.budget = budget
        self.calls = 0
        self.nodes = 0

    def fresh_run(self):
        self.calls = 0
        self.nodes = 0

    def generate(self, goal, ctx=(), depth=5, names=()):
        self.calls += 1
        if self.calls > self.budget or self.nodes > 2 * self.max_nodes:
            raise _OutOfBudget
        if not inhabited(goal, ctx):
            return None
        over = self.nodes >= self.max_nodes
        options = []
        spines = [
            (i, len(prem) - k)
            for i, ty in enumerate(ctx)
            for prem in [premises(ty)]
            for k in range(len(prem) + 1)
            if _suffix(ty, len(prem) - k) == goal
        ]
        for sp in spines:
            nargs = sp[1]
            options.append((("spine", sp), 3.0 / (1 + nargs) ** (4 if over else 1)))
        if isinstance(goal, Arrow) and depth >= 1:
            options.append((("lam", None), 2.0))
        if depth >= 2 and not over:
            options.append((("redex", None), 6.0 if not ctx else 1.5))
        for kind, data in _weighted_order(self.rng, options):
            saved = self.nodes
            t = getattr(self, "_" + kind)(goal, ctx, depth, names, data)
            if t is not None:
                return t
            self.nodes = saved
        return None

    def _spine(self, goal, ctx, depth, names, data):
        i, nargs = data
        self.nodes += 1
        head = Var(i, ctx[i])
        for dom in premises(ctx[i])[:nargs]:
            arg = self.generate(dom, ctx, depth, names)
            if arg is None:
                return None
            self.nodes += 1
            head = App(head, arg, head.ty.cod)
        return head

    def _name(self, names):
        for n in NAMES:
            if n not in names:
                return n
        return f"x{len(names)}"

    def _lam(self, goal, ctx, depth, names, data):
        self.nodes += 1
        name = self._name(names)
        body = self.generate(goal.cod, (goal.dom,) + ctx, depth - 1, (name,) + names)
        if body is None:
            return None
        return Lam(goal.dom, body, goal, name)

    def _redex(self, goal, ctx, depth, names, data):
        rng = self.rng
        candidates = [random_type(rng, rng.randint(1, 4)) for _ in range(4)]
        if ctx:
            candidates.append(rng.choice(ctx))
        candidates.append(goal)
        for sigma in candidates:
            if not inhabited(sigma, ctx):
                continue
            self.nodes += 2
            name = self._name(names)
            body = self.generate(goal, (sigma,) + ctx, depth - 1, (name,) + names)
            if body is None:
                return None
            arg = self.generate(sigma, ctx, depth - 1, names)
            if arg is None:
                return None
            return App(Lam(sigma, body, Arrow(sigma, goal), name), arg, goal)
        return None

    def closed_term(self, goal, depth, attempts=25):
        for _ in range(attempts):
            self.fresh_run()
            try:
                t = self.generate(goal, (), depth)
            except _OutOfBudget:
                continue
            if t is not None:
                return t
        raise GenerationFailed(goal, depth)


def _suffix(ty, n):
    for _ in range(n):
        ty = ty.cod
    return ty


def generate_term(cfg):
    """``cfg.count`` closed terms of ``cfg.goal_type``, reproducible from
    ``cfg.seed``."""
    goal = cfg.goal_type
    if isinstance(goal, Base) or not inhabited(goal):
        raise GenerationFailed(goal, cfg.max_depth)
    gen = TermGenerator(random.Random(cfg.seed), cfg.max_nodes)
    return [gen.closed_term(goal, cfg.max_depth) for _ in range(cfg.count)]


# ----------------------------------------------------------------------------
# Random closed terms and (context, closed term) pairs


def random_closed_type(rng, size=4):
    while True:
        ty = random_type(rng, rng.randint(2, size))
        if isinstance(ty, Arrow) and inhabited(ty):
            return ty


def random_closed(gen, ty, depth=2):
    """A random closed term of a closed-inhabited type ``ty``: a closure
    over a random environment, or a closed application."""
    rng = gen.rng
    if depth > 0 and rng.random() < 0.35:
        sigma = random_closed_type(rng, 3)
        return Clapp(random_closed(gen, Arrow(sigma, ty), depth - 1), random_closed(gen, sigma, depth - 1))
    gamma = []
    if depth > 0:
        gamma = [random_closed_type(rng, 3) for _ in range(rng.randint(0, 2))]
    # one binder per premise must fit
    depth_budget = len(premises(ty)) + 2
    gen.fresh_run()
    try:
        term = gen.generate(ty, tuple(gamma), depth_budget)
    except _OutOfBudget:
        term = None
    if term is None:
        return Closure(gen.closed_term(ty, depth_budget), NIL)
    env = Env.of(*(random_closed(gen, g, depth - 1) for g in gamma))
    return Closure(term, env)


def random_pair(gen, max_args=3):
    """A random evaluation context together with a closed term that fits it."""
    rng = gen.rng
    result = random_closed_type(rng, 3)
    arg_types = [random_closed_type(rng, 3) for _ in range(rng.randint(0, max_args))]
    args = [random_closed(gen, a, 1) for a in arg_types]
    c = random_closed(gen, arrows(*arg_types, result), 2)
    return EvalContext.of(*args), c


def random_pairs(seed, count):
    gen = TermGenerator(random.Random(seed), max_nodes=20)
    return [random_pair(gen) for _ in range(count)]
