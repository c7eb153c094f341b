"""Closed terms: closures, closed applications, environments and values.

Environments are cons lists, so extending one shares the tail.  Equality on
closed terms is structural, environments included, and is computed with an
explicit stack because environment chains can nest deeply.
"""

from __future__ import annotations

from . import _config
from .errors import IllTyped, IndexOutOfRange, NotAValue
from .syntax import Arrow, Lam, elaborate, infer_type, parse_term, parse_type, print_term, print_type


class Env:
    """Persistent environment.  Position ``i`` holds the value of index ``i``."""

    __slots__ = ("head", "tail", "size")

    def __init__(self, head=None, tail=None):
        self.head = head
        self.tail = tail
        self.size = 0 if tail is None else tail.size + 1

    @classmethod
    def of(cls, *entries):
        env = NIL
        for c in reversed(entries):
            env = env.extend(c)
        return env

    def extend(self, c):
        return Env(c, self)

    def __len__(self):
        return self.size

    def __iter__(self):
        env = self
        while env.tail is not None:
            yield env.head
            env = env.tail

    def __getitem__(self, index):
        return env_lookup(self, index)

    @property
    def context(self):
        return tuple(c.ty for c in self)

    def __eq__(self, other):
        if not isinstance(other, Env):
            return NotImplemented
        return closed_equal(self, other)

    __hash__ = None

    def __repr__(self):
        if self.tail is None:
            return "NIL"
        return f"Env.of({', '.join(map(repr, self))})"


NIL = Env()


class Closed:
    __slots__ = ()

    def __eq__(self, other):
        if not isinstance(other, Closed):
            return NotImplemented
        return closed_equal(self, other)

    __hash__ = None


class Closure(Closed):
    __slots__ = ("term", "env")

    def __init__(self, term, env=NIL):
        if _config.DEBUG:
            infer_type(term, env.context)
        self.term = term
        self.env = env

    @property
    def ty(self):
        return self.term.ty

    def __repr__(self):
        return f"Closure({self.term!r}, {self.env!r})"


class Clapp(Closed):
    """Closed application; caches its result type."""

    __slots__ = ("fun", "arg", "ty")

    def __init__(self, fun, arg):
        fty = fun.ty
        if not isinstance(fty, Arrow):
            raise IllTyped(f"closed application of a {fty}")
        if _config.DEBUG and fty.dom != arg.ty:
            raise IllTyped(f"closed argument of type {arg.ty} where {fty.dom} expected")
        self.fun = fun
        self.arg = arg
        self.ty = fty.cod

    def __repr__(self):
        return f"Clapp({self.fun!r}, {self.arg!r})"


def closed_equal(a, b):
    """Structural equality of closed terms or environments."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if type(x) is not type(y):
            return False
        if isinstance(x, Closure):
            if x.term != y.term:
                return False
            stack.append((x.env, y.env))
        elif isinstance(x, Clapp):
            stack.append((x.arg, y.arg))
            stack.append((x.fun, y.fun))
        elif isinstance(x, Env):
            if x.size != y.size:
                return False
            while x.tail is not None:
                if x is y:
                    break
                stack.append((x.head, y.head))
                x, y = x.tail, y.tail
        else:
            raise TypeError(f"not a closed term or environment: {x!r}")
    return True


def check_closed(c):
    """Re-check every cached type inside ``c``; raises IllTyped/IllScoped."""
    stack = [c]
    seen = set()
    while stack:
        x = stack.pop()
        if id(x) in seen:
            continue
        seen.add(id(x))
        if isinstance(x, Closure):
            infer_type(x.term, x.env.context)
            stack.extend(x.env)
        else:
            fty = x.fun.ty
            if not isinstance(fty, Arrow) or fty.dom != x.arg.ty or fty.cod != x.ty:
                raise IllTyped(f"closed application {fty} to {x.arg.ty} cached as {x.ty}")
            stack.append(x.fun)
            stack.append(x.arg)
    return c.ty


def is_val(c):
    return isinstance(c, Closure) and isinstance(c.term, Lam)


class Value:
    """A closed term in weak head normal form: the closure of a lambda."""

    __slots__ = ("closure",)

    def __init__(self, c):
        if not is_val(c):
            raise NotAValue(f"not a value: {c!r}")
        self.closure = c

    @property
    def term(self):
        return self.closure.term

    @property
    def env(self):
        return self.closure.env

    @property
    def ty(self):
        return self.closure.ty

    def __eq__(self, other):
        if not isinstance(other, Value):
            return NotImplemented
        return closed_equal(self.closure, other.closure)

    __hash__ = None

    def __repr__(self):
        return f"Value({self.closure!r})"


def make_value(c):
    return Value(c)


def env_lookup(env, ref):
    """``env ! ref``: the entry for de Bruijn index ``ref``."""
    if ref < 0:
        raise IndexOutOfRange(f"negative index {ref}")
    e = env
    for _ in range(ref):
        if e.tail is None:
            break
        e = e.tail
    if e.tail is None:
        raise IndexOutOfRange(f"index {ref} in an environment of length {len(env)}")
    return e.head


# ----------------------------------------------------------------------------
# Printing and JSON
#
# Free variables of a closure's term are printed as v0, v1, ... naming the
# environment slots, innermost first.


def slot_names(env):
    return [f"v{i}" for i in range(len(env))]


def closure_text(c):
    return print_term(c.term, slot_names(c.env))


def describe(c, verbose=False, indent=""):
    """One-line (or, with ``verbose``, recursive) rendering of a closed term."""
    if isinstance(c, Value):
        c = c.closure
    if isinstance(c, Clapp):
        return f"{indent}<clapp : {print_type(c.ty)}>" if not verbose else (
            f"{indent}clapp : {print_type(c.ty)}\n"
            f"{describe(c.fun, True, indent + '  ')}\n{describe(c.arg, True, indent + '  ')}"
        )
    head = f"{indent}{closure_text(c)}"
    if len(c.env) == 0:
        return f"{head}  [in env: <empty>]"
    if not verbose:
        entries = ", ".join(f"v{i} : {print_type(e.ty)}" for i, e in enumerate(c.env))
        return f"{head}  [in env: {entries}]"
    lines = [f"{head}  [in env:"]
    for i, e in enumerate(c.env):
        lines.append(f"{indent}  v{i} : {print_type(e.ty)} =")
        lines.append(describe(e, True, indent + "    "))
    lines.append(f"{indent}]")
    return "\n".join(lines)


def closed_to_json(c):
    if isinstance(c, Value):
        c = c.closure
    if isinstance(c, Closure):
        return {
            "kind": "closure",
            "type": print_type(c.ty),
            "term": closure_text(c),
            "env": env_to_json(c.env),
        }
    return {
        "kind": "clapp",
        "type": print_type(c.ty),
        "fun": closed_to_json(c.fun),
        "arg": closed_to_json(c.arg),
    }


def env_to_json(env):
    return [closed_to_json(e) for e in env]


def env_from_json(items):
    return Env.of(*(closed_from_json(item) for item in items))


def closed_from_json(data):
    kind = data.get("kind")
    if kind == "closure":
        env = env_from_json(data["env"])
        names = [(f"v{i}", e.ty) for i, e in enumerate(env)]
        term = elaborate(parse_term(data["term"]), names)
        if "type" in data and parse_type(data["type"]) != term.ty:
            raise IllTyped(f"closure term has type {term.ty}, recorded {data['type']}")
        return Closure(term, env)
    if kind == "clapp":
        return Clapp(closed_from_json(data["fun"]), closed_from_json(data["arg"]))
    raise ValueError(f"unknown closed-term kind {kind!r}")
