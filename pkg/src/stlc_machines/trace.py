"""Step logs recorded by the three evaluators."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional

DEFAULT_FUEL = 1_000_000

MACHINES = ("smallstep", "refocus", "krivine")


@dataclass
class StepLog:
    """Kinds of the contractions (or transitions) taken, in order.

    Step ordinals are the list positions.  ``states`` is only filled in
    verbose mode and then holds one serialized machine state per step.
    """

    machine: str
    steps: List[str] = field(default_factory=list)
    states: Optional[list] = None

    def record(self, kind, state=None):
        self.steps.append(kind)
        if self.states is not None:
            self.states.append(state)

    @property
    def total(self):
        return len(self.steps)

    @property
    def fuel_used(self):
        return len(self.steps)

    def to_json(self):
        key = "transition" if self.machine == "krivine" else "redex"
        steps = []
        for n, kind in enumerate(self.steps):
            entry = {"n": n, key: kind}
            if self.states is not None:
                entry["state"] = self.states[n]
            steps.append(entry)
        return {
            "machine": self.machine,
            "steps": steps,
            "total": self.total,
            "fuel_used": self.fuel_used,
        }

    @classmethod
    def from_json(cls, data):
        key = "transition" if data["machine"] == "krivine" else "redex"
        entries = sorted(data["steps"], key=lambda e: e["n"])
        if [e["n"] for e in entries] != list(range(len(entries))):
            raise ValueError("step ordinals are not contiguous from 0")
        log = cls(data["machine"], [e[key] for e in entries])
        if entries and "state" in entries[0]:
            log.states = [e.get("state") for e in entries]
        return log

    def dumps(self, **kw):
        return json.dumps(self.to_json(), **kw)


def check_fuel(fuel):
    if not isinstance(fuel, int) or fuel <= 0:
        raise ValueError(f"fuel must be a positive integer, got {fuel!r}")
