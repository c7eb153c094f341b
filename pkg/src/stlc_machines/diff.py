"""Run every evaluator on the same terms and compare the results."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .closed import Clapp, Closure, describe
from .errors import FuelExhausted
from .krivine import evaluate_krivine
from .reduction import EvalContext, closure_of, evaluate_smallstep, plug
from .refocus import evaluate_refocus
from .syntax import print_term
from .trace import DEFAULT_FUEL, MACHINES


@dataclass
class TermResult:
    index: int
    term: str
    values: Dict[str, Optional[str]] = field(default_factory=dict)
    steps: Dict[str, Optional[int]] = field(default_factory=dict)
    smallstep_refocus_value: bool = False
    refocus_krivine_value: bool = False
    smallstep_refocus_log: bool = False
    error: Optional[str] = None

    @property
    def agree(self):
        return (
            self.error is None
            and self.smallstep_refocus_value
            and self.refocus_krivine_value
            and self.smallstep_refocus_log
        )

    def to_json(self):
        return {
            "index": self.index,
            "term": self.term,
            "values": self.values,
            "steps": self.steps,
            "flags": {
                "smallstep_refocus_value": self.smallstep_refocus_value,
                "refocus_krivine_value": self.refocus_krivine_value,
                "smallstep_refocus_log": self.smallstep_refocus_log,
            },
            "error": self.error,
            "agree": self.agree,
        }


@dataclass
class DiffReport:
    results: List[TermResult] = field(default_factory=list)

    @property
    def passed(self):
        return sum(r.agree for r in self.results)

    @property
    def failed(self):
        return len(self.results) - self.passed

    @property
    def fuel_failures(self):
        return sum(r.error is not None and r.error.startswith("fuel") for r in self.results)

    @property
    def ok(self):
        return self.failed == 0

    def to_json(self):
        return {
            "terms": [r.to_json() for r in self.results],
            "passed": self.passed,
            "failed": self.failed,
        }

    def dumps(self, **kw):
        return json.dumps(self.to_json(), **kw)

    def render(self, verbose=False):
        lines = []
        for r in self.results:
            if r.agree and not verbose:
                continue
            mark = "ok  " if r.agree else "FAIL"
            steps = " ".join(f"{m}={r.steps.get(m)}" for m in MACHINES)
            lines.append(f"{mark} #{r.index} {r.term}")
            lines.append(f"     steps: {steps}")
            if not r.agree:
                if r.error:
                    lines.append(f"     error: {r.error}")
                for m in MACHINES:
                    lines.append(f"     {m}: {r.values.get(m)}")
        lines.append(f"{self.passed} passed, {self.failed} failed")
        return "\n".join(lines)


def diff_term(index, term, fuel=DEFAULT_FUEL, check=None):
    res = TermResult(index, print_term(term))
    try:
        v1, log1 = evaluate_smallstep(closure_of(term), fuel, check=check)
        v2, log2 = evaluate_refocus(closure_of(term), fuel, check=check)
        v3, log3 = evaluate_krivine(term, fuel, check=check)
    except FuelExhausted as exc:
        res.error = f"fuel exhausted on {exc.log.machine} after {exc.fuel} steps"
        return res
    for m, v, log in zip(MACHINES, (v1, v2, v3), (log1, log2, log3)):
        res.values[m] = describe(v)
        res.steps[m] = log.total
    res.smallstep_refocus_value = v1 == v2
    res.refocus_krivine_value = v2 == v3
    res.smallstep_refocus_log = log1.steps == log2.steps
    return res


def run_diff(terms, fuel=DEFAULT_FUEL, check=None):
    """Evaluate each closed term on all three machines.

    A fuel exhaustion is recorded against its term; the batch carries on.
    """
    return DiffReport([diff_term(i, t, fuel, check) for i, t in enumerate(terms)])


def spine_splits(c):
    """Every ``(ctx, head)`` with ``plug(ctx, head) == c``, outermost split first."""
    args = []
    while True:
        yield EvalContext.of(*reversed(args)), c
        if not isinstance(c, Clapp):
            return
        args.append(c.arg)
        c = c.fun


def harvest_pairs(term, fuel=DEFAULT_FUEL):
    """``(ctx, c)`` pairs reachable while evaluating the closed ``term``.

    Collected from the refocus calls of the refocused machine (together
    with every spine split of the term they describe) and from the states
    of the Krivine machine, read as ``(ctx, Closure(term, env))``.
    """
    pairs = []

    def on_refocus(ctx, c):
        pairs.append((ctx, c))
        if len(ctx):
            pairs.extend(spine_splits(plug(ctx, c)))
        else:
            pairs.extend(list(spine_splits(c))[1:])

    def observer(state, outcome):
        pairs.append((state.ctx, Closure(state.term, state.env)))

    evaluate_refocus(closure_of(term), fuel, on_refocus=on_refocus)
    evaluate_krivine(term, fuel, observer=observer)
    return pairs
