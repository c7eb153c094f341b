"""Types, de Bruijn terms, the surface language and its elaborator.

Surface grammar::

    type ::= 'o' | type '->' type | '(' type ')'          -- '->' is right-assoc
    term ::= '\\' name ':' type '.' term                   -- 'λ' also accepted
           | term term                                    -- left-assoc
           | name | '(' term ')'

Elaboration resolves every name to the nearest enclosing binder and
produces a :class:`Term` whose nodes carry their simple type.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from . import _config
from .errors import (
    IllScoped,
    IllTyped,
    NonArrowApplication,
    ParseError,
    TypeMismatch,
    UnboundVariable,
)

# ----------------------------------------------------------------------------
# Types


class Ty:
    __slots__ = ()

    def __str__(self):
        return print_type(self)


@dataclass(frozen=True, slots=True)
class Base(Ty):
    def __repr__(self):
        return "O"


@dataclass(frozen=True, slots=True)
class Arrow(Ty):
    dom: Ty
    cod: Ty

    def __repr__(self):
        return f"Arrow({self.dom!r}, {self.cod!r})"


O = Base()

Context = Tuple[Ty, ...]


def arrows(*tys):
    """``arrows(a, b, c) == Arrow(a, Arrow(b, c))``."""
    ty = tys[-1]
    for dom in reversed(tys[:-1]):
        ty = Arrow(dom, ty)
    return ty


def print_type(ty, full=False):
    if isinstance(ty, Base):
        return "o"
    dom = print_type(ty.dom, full)
    if isinstance(ty.dom, Arrow) and not full:
        dom = f"({dom})"
    text = f"{dom} -> {print_type(ty.cod, full)}"
    return f"({text})" if full else text


# ----------------------------------------------------------------------------
# De Bruijn terms
#
# Every node caches its type.  The raw constructors trust the caller; use
# lam/app/var (or elaborate) to build terms whose annotations are computed.


class Term:
    __slots__ = ()

    def __str__(self):
        return print_term(self)


@dataclass(frozen=True, slots=True)
class Var(Term):
    index: int
    ty: Ty


@dataclass(frozen=True, slots=True)
class Lam(Term):
    param_ty: Ty
    body: Term
    ty: Ty
    # binder name from the source text; printing only
    name: str = field(default="x", compare=False)


@dataclass(frozen=True, slots=True)
class App(Term):
    fun: Term
    arg: Term
    ty: Ty


def var(index, ty):
    return Var(index, ty)


def lam(param_ty, body, name="x"):
    return Lam(param_ty, body, Arrow(param_ty, body.ty), name)


def app(fun, arg):
    fty = fun.ty
    if not isinstance(fty, Arrow):
        raise IllTyped(f"cannot apply a term of type {fty}")
    if _config.DEBUG and fty.dom != arg.ty:
        raise IllTyped(f"argument of type {arg.ty} where {fty.dom} expected")
    return App(fun, arg, fty.cod)


def infer_type(term, ctx=()):
    """Recompute the type of ``term`` in ``ctx`` (innermost binder first).

    Raises IllScoped for an out-of-range index and IllTyped when an
    application does not line up or a cached annotation disagrees.
    """
    ctx = tuple(ctx)
    if isinstance(term, Var):
        if not 0 <= term.index < len(ctx):
            raise IllScoped(f"index {term.index} in a context of length {len(ctx)}")
        ty = ctx[term.index]
    elif isinstance(term, Lam):
        ty = Arrow(term.param_ty, infer_type(term.body, (term.param_ty,) + ctx))
    elif isinstance(term, App):
        fty = infer_type(term.fun, ctx)
        aty = infer_type(term.arg, ctx)
        if not isinstance(fty, Arrow):
            raise IllTyped(f"applying a term of type {fty}")
        if fty.dom != aty:
            raise IllTyped(f"argument of type {aty} where {fty.dom} expected")
        ty = fty.cod
    else:
        raise TypeError(f"not a term: {term!r}")
    if term.ty != ty:
        raise IllTyped(f"cached annotation {term.ty} disagrees with {ty}")
    return ty


def max_index_ok(term, depth=0):
    """True iff every de Bruijn index is below its binder depth."""
    if isinstance(term, Var):
        return term.index < depth
    if isinstance(term, Lam):
        return max_index_ok(term.body, depth + 1)
    return max_index_ok(term.fun, depth) and max_index_ok(term.arg, depth)


def binder_depth(term):
    if isinstance(term, Var):
        return 0
    if isinstance(term, Lam):
        return 1 + binder_depth(term.body)
    return max(binder_depth(term.fun), binder_depth(term.arg))


def term_size(term):
    if isinstance(term, Var):
        return 1
    if isinstance(term, Lam):
        return 1 + term_size(term.body)
    return 1 + term_size(term.fun) + term_size(term.arg)


# ----------------------------------------------------------------------------
# Surface syntax

Span = Tuple[int, int]


class SurfaceTerm:
    __slots__ = ()

    def __str__(self):
        return print_surface(self)


@dataclass(frozen=True, slots=True)
class SLam(SurfaceTerm):
    name: str
    ty: Ty
    body: SurfaceTerm
    span: Optional[Span] = field(default=None, compare=False)


@dataclass(frozen=True, slots=True)
class SApp(SurfaceTerm):
    fun: SurfaceTerm
    arg: SurfaceTerm
    span: Optional[Span] = field(default=None, compare=False)


@dataclass(frozen=True, slots=True)
class SVar(SurfaceTerm):
    name: str
    span: Optional[Span] = field(default=None, compare=False)


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<arrow>->|→)
  | (?P<lambda>\\|λ)
  | (?P<punct>[().:])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind == "punct":
            kind = m.group()
        if kind != "ws":
            tokens.append((kind, m.group(), m.start(), m.end()))
        pos = m.end()
    tokens.append(("end", "", len(text), len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, what=None):
        tok = self.peek()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {what or repr(kind)}, found {found}", tok[2], self.text)
        return self.advance()

    def finish(self):
        self.expect("end", "end of input")

    def type_(self):
        dom = self.type_atom()
        if self.peek()[0] == "arrow":
            self.advance()
            return Arrow(dom, self.type_())
        return dom

    def type_atom(self):
        tok = self.peek()
        if tok[0] == "ident" and tok[1] == "o":
            self.advance()
            return O
        if tok[0] == "(":
            self.advance()
            ty = self.type_()
            self.expect(")", "')'")
            return ty
        found = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"expected a type, found {found}", tok[2], self.text)

    def term(self):
        if self.peek()[0] == "lambda":
            return self.lambda_()
        start = self.peek()[2]
        head = self.atom()
        while True:
            kind = self.peek()[0]
            if kind in ("ident", "("):
                arg = self.atom()
            elif kind == "lambda":
                arg = self.lambda_()
            else:
                return head
            head = SApp(head, arg, (start, arg.span[1]))

    def lambda_(self):
        start = self.advance()[2]
        name = self.expect("ident", "a binder name")[1]
        self.expect(":", "':'")
        ty = self.type_()
        self.expect(".", "'.'")
        body = self.term()
        return SLam(name, ty, body, (start, body.span[1]))

    def atom(self):
        tok = self.peek()
        if tok[0] == "ident":
            self.advance()
            return SVar(tok[1], (tok[2], tok[3]))
        if tok[0] == "(":
            self.advance()
            inner = self.term()
            self.expect(")", "')'")
            return inner
        found = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"expected a term, found {found}", tok[2], self.text)


def parse_type(text):
    p = _Parser(text)
    ty = p.type_()
    p.finish()
    return ty


def parse_term(text):
    p = _Parser(text)
    term = p.term()
    p.finish()
    return term


def print_surface(s, full=False):
    """Render a surface term.

    ``full=True`` parenthesizes every compound term and type; otherwise only
    the parentheses the parser needs are emitted.
    """
    return _print_surface(s, full, 0)


# precedence levels: 0 lambda body / top, 1 function position, 2 argument
def _print_surface(s, full, level):
    if isinstance(s, SVar):
        return s.name
    if isinstance(s, SLam):
        text = f"\\{s.name}:{print_type(s.ty, full)}. {_print_surface(s.body, full, 0)}"
        return f"({text})" if full or level > 0 else text
    text = f"{_print_surface(s.fun, full, 1)} {_print_surface(s.arg, full, 2)}"
    return f"({text})" if full or level > 1 else text


# ----------------------------------------------------------------------------
# Elaboration


def elaborate(surface, ctx=()):
    """Elaborate ``surface`` against ``ctx``, a sequence of ``(name, type)``
    pairs with the innermost binder first."""
    return _elab(surface, tuple(ctx))


def _elab(s, ctx):
    if isinstance(s, SVar):
        for i, (name, ty) in enumerate(ctx):
            if name == s.name:
                return Var(i, ty)
        raise UnboundVariable(s.name, s.span)
    if isinstance(s, SLam):
        body = _elab(s.body, ((s.name, s.ty),) + ctx)
        return Lam(s.ty, body, Arrow(s.ty, body.ty), s.name)
    if isinstance(s, SApp):
        fun = _elab(s.fun, ctx)
        arg = _elab(s.arg, ctx)
        if not isinstance(fun.ty, Arrow):
            raise NonArrowApplication(fun.ty, s.fun.span)
        if fun.ty.dom != arg.ty:
            raise TypeMismatch(fun.ty.dom, arg.ty, s.arg.span)
        return App(fun, arg, fun.ty.cod)
    raise TypeError(f"not a surface term: {s!r}")


def read_term(text, ctx=()):
    """Parse and elaborate in one go."""
    return elaborate(parse_term(text), ctx)


def to_surface(term, names: Sequence[str] = ()):
    """Name a de Bruijn term.  ``names[i]`` names free index ``i``.

    Binder hints are kept unless they would capture a name already in
    scope, in which case a numeric suffix is appended.
    """
    return _to_surface(term, list(names))


def _fresh(hint, scope):
    if hint not in scope:
        return hint
    base = hint.rstrip("0123456789") or "x"
    n = 1
    while f"{base}{n}" in scope:
        n += 1
    return f"{base}{n}"


def _to_surface(term, names):
    if isinstance(term, Var):
        if term.index >= len(names):
            return SVar(f"?{term.index - len(names)}")
        return SVar(names[term.index])
    if isinstance(term, Lam):
        name = _fresh(term.name, names)
        return SLam(name, term.param_ty, _to_surface(term.body, [name] + names))
    return SApp(_to_surface(term.fun, names), _to_surface(term.arg, names))


def print_term(term, names: Sequence[str] = (), full=False):
    return print_surface(to_surface(term, names), full)
