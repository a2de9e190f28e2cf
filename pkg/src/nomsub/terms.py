"""Type terms: parameterized types over interval arguments, co-free atoms,
and the bottom type.

Every term is an immutable value with structural equality.  Surface syntax::

    type := "Null" | IDENT | IDENT "<" "!" ">" | IDENT "<" arg ("," arg)* ">"
    arg  := type | "?" | "? extends" type | "? super" type
          | "[" type ".." type "]"

Wildcards desugar to intervals: ``?`` is ``[Null..Root]``, ``? extends T``
is ``[Null..T]``, ``? super T`` is ``[T..Root]``, and a concrete argument
``T`` is the point interval ``[T..T]``.  Declared parameter bounds never
affect this desugaring; they matter only to the validity analysis.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._lex import TokenStream, tokenize
from .class_table import ClassTable, TypeUse
from .errors import ArityMismatch, BottomHasNoErasure, NotGeneric, ParseError


class TypeTerm:
    """Base class for all type terms."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_type(self)


@dataclass(frozen=True)
class BottomType(TypeTerm):
    """The least type (surface name ``Null``); below every other term."""

    __slots__ = ()


BOTTOM = BottomType()


@dataclass(frozen=True)
class Interval:
    """A pair of term endpoints; wildcards and concrete arguments alike.

    Endpoint order (``lo <: hi``) is relation-relative and deliberately not
    checked at construction time.
    """

    lo: TypeTerm
    hi: TypeTerm

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class Ground(TypeTerm):
    """A class applied to interval arguments (zero arguments when the class
    is not generic)."""

    cls: str
    args: tuple[Interval, ...] = ()


@dataclass(frozen=True)
class Cofree(TypeTerm):
    """The distinguished least instantiation ``C<!>`` of a generic class.

    Not encodable as an interval instantiation, so the relation gives it
    axiomatic edges instead.
    """

    cls: str


def point(term: TypeTerm) -> Interval:
    return Interval(term, term)


def root_term(table: ClassTable) -> Ground:
    return Ground(table.root)


def wildcard(table: ClassTable) -> Interval:
    return Interval(BOTTOM, root_term(table))


def nesting_depth(term: TypeTerm) -> int:
    if isinstance(term, Ground) and term.args:
        return 1 + max(max(nesting_depth(iv.lo), nesting_depth(iv.hi))
                       for iv in term.args)
    return 0


def erase(term: TypeTerm) -> str:
    """Drop type arguments, yielding the term's class name."""
    if isinstance(term, (Ground, Cofree)):
        return term.cls
    raise BottomHasNoErasure("the bottom type has no erasure")


def free_type(table: ClassTable, name: str) -> Ground:
    """The fully wildcarded instantiation C<?,...,?> of a class; for a
    non-generic class this is the class's sole type."""
    decl = table.decl(name)
    return Ground(name, (wildcard(table),) * decl.arity)


def cofree_type(table: ClassTable, name: str) -> Cofree:
    decl = table.decl(name)
    if not decl.is_generic:
        raise NotGeneric(f"class '{name}' is not generic and has no co-free type")
    return Cofree(name)


def term_from_typeuse(table: ClassTable, use: TypeUse,
                      env: dict[str, TypeTerm] | None = None) -> TypeTerm:
    """Interpret a declaration-side type expression as a term, mapping
    parameter names through ``env`` and concrete arguments to point
    intervals."""
    env = env or {}
    if use.name in env:
        return env[use.name]
    args = tuple(point(term_from_typeuse(table, a, env)) for a in use.args)
    return Ground(use.name, args)


class _NonPointOccurrence(Exception):
    pass


def super_instantiation(table: ClassTable, term: TypeTerm) -> Ground | None:
    """Push an instantiation one step up its superclass edge.

    A parameter at a direct argument position passes its whole interval
    through; a parameter nested inside a compound argument expression needs
    a point interval, and a non-point interval there makes the result absent
    (conservative skip).  Returns None for terms without a superclass.
    """
    if not isinstance(term, Ground):
        return None
    decl = table.decl(term.cls)
    if decl.superclass is None:
        return None
    slot = {p.name: term.args[i] for i, p in enumerate(decl.params)}

    def as_point_term(use: TypeUse) -> TypeTerm:
        iv = slot.get(use.name)
        if iv is not None:
            if not iv.is_point:
                raise _NonPointOccurrence
            return iv.lo
        return Ground(use.name, tuple(point(as_point_term(a)) for a in use.args))

    new_args: list[Interval] = []
    try:
        for arg in decl.superclass.args:
            if not arg.args and arg.name in slot:
                new_args.append(slot[arg.name])
            else:
                new_args.append(point(as_point_term(arg)))
    except _NonPointOccurrence:
        return None
    return Ground(decl.superclass.name, tuple(new_args))


def super_chain(table: ClassTable, term: TypeTerm) -> list[Ground]:
    """Successive super-instantiations of a term, nearest first.  The chain
    stops early where a nested occurrence meets a non-point interval."""
    chain: list[Ground] = []
    cur = super_instantiation(table, term)
    while cur is not None:
        chain.append(cur)
        cur = super_instantiation(table, cur)
    return chain


# -- printing -------------------------------------------------------------


def format_type(term: TypeTerm, table: ClassTable | None = None) -> str:
    """Canonical printed form; parse_type inverts it.  With a table the
    printer uses wildcard sugar (``?`` forms); without one, intervals that
    would need the root are spelled explicitly."""
    root = root_term(table) if table is not None else None
    return _format(term, root, table)


def _format(term: TypeTerm, root: Ground | None, table: ClassTable | None) -> str:
    if isinstance(term, BottomType):
        return "Null"
    if isinstance(term, Cofree):
        return f"{term.cls}<!>"
    assert isinstance(term, Ground)
    if not term.args:
        return term.cls
    parts = [_format_arg(iv, root, table) for iv in term.args]
    return term.cls + "<" + ", ".join(parts) + ">"


def _format_arg(iv: Interval, root: Ground | None, table: ClassTable | None) -> str:
    if iv.is_point:
        return _format(iv.lo, root, table)
    if iv.lo == BOTTOM:
        if root is not None and iv.hi == root:
            return "?"
        return "? extends " + _format(iv.hi, root, table)
    if root is not None and iv.hi == root:
        return "? super " + _format(iv.lo, root, table)
    return "[" + _format(iv.lo, root, table) + ".." + _format(iv.hi, root, table) + "]"


# -- parsing --------------------------------------------------------------


def parse_type(table: ClassTable, text: str) -> TypeTerm:
    """Parse the type surface syntax against a class table."""
    ts = TokenStream(tokenize(text))
    term = _parse_term(table, ts)
    if not ts.at_end():
        raise ts.error(f"expected end of input, found {ts.peek().describe()}")
    return term


def _parse_term(table: ClassTable, ts: TokenStream) -> TypeTerm:
    tok = ts.expect_ident("type name")
    if tok.text == "Null":
        return BOTTOM
    name = tok.text
    decl = table.decl(name)
    if not ts.matches("<"):
        if decl.is_generic:
            raise ArityMismatch(
                f"class '{name}' expects {decl.arity} argument(s), got 0")
        return Ground(name)
    ts.advance()
    if ts.accept("!"):
        ts.expect(">")
        return cofree_type(table, name)
    args = [_parse_arg(table, ts)]
    while ts.accept(","):
        args.append(_parse_arg(table, ts))
    ts.expect(">")
    if len(args) != decl.arity:
        raise ArityMismatch(
            f"class '{name}' expects {decl.arity} argument(s), got {len(args)}")
    return Ground(name, tuple(args))


def _parse_arg(table: ClassTable, ts: TokenStream) -> Interval:
    if ts.accept("?"):
        if ts.accept("extends"):
            return Interval(BOTTOM, _parse_term(table, ts))
        if ts.accept("super"):
            return Interval(_parse_term(table, ts), root_term(table))
        return wildcard(table)
    if ts.accept("["):
        lo = _parse_term(table, ts)
        ts.expect("..")
        hi = _parse_term(table, ts)
        ts.expect("]")
        return Interval(lo, hi)
    return point(_parse_term(table, ts))
