"""Coalgebra/algebra analysis of unary generic classes, and the
admittable-versus-valid split for bounded instantiations.

For a unary generic class F, the F-subtypes are the terms Ty with
``Ty <: F<Ty>`` and the F-supertypes those with ``F<Ty> <: Ty``.  Applying
F to a depth-d term lands at depth d+1, so membership is judged in a
companion relation one depth up, built lazily and cached.

Maximality/minimality diagnostics never fail a run: whether the free type
is the greatest F-subtype (and the co-free atom the least F-supertype) is
model-dependent, so the comparisons are reported as findings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .class_table import ClassTable, TypeUse
from .errors import NotUnaryGeneric
from .relation import SubtypeRelation, build_relation, is_subtype
from .terms import (
    Cofree,
    Ground,
    Interval,
    TypeTerm,
    free_type,
    point,
    term_from_typeuse,
)


def _companion(table: ClassTable, rel: SubtypeRelation) -> SubtypeRelation:
    return build_relation(table, rel.depth + 1, cap=rel.cap,
                          include_cofree=rel.include_cofree)


def _unary(table: ClassTable, cls: str) -> None:
    if table.decl(cls).arity != 1:
        raise NotUnaryGeneric(f"class '{cls}' is not a unary generic class")


def _applied(cls: str, term: TypeTerm) -> Ground:
    return Ground(cls, (point(term),))


def f_subtypes(table: ClassTable, rel: SubtypeRelation, cls: str) -> tuple[TypeTerm, ...]:
    """Terms Ty of the universe with Ty <: F<Ty> (coalgebras of F), in
    universe order."""
    _unary(table, cls)
    comp = _companion(table, rel)
    return tuple(t for t in rel.universe
                 if is_subtype(comp, t, _applied(cls, t)))


def f_supertypes(table: ClassTable, rel: SubtypeRelation, cls: str) -> tuple[TypeTerm, ...]:
    """Terms Ty of the universe with F<Ty> <: Ty (algebras of F), in
    universe order."""
    _unary(table, cls)
    comp = _companion(table, rel)
    return tuple(t for t in rel.universe
                 if is_subtype(comp, _applied(cls, t), t))


def exact_fixed_points(table: ClassTable, rel: SubtypeRelation, cls: str) -> tuple[TypeTerm, ...]:
    """Terms mutually related with their own F-application."""
    supers = set(f_supertypes(table, rel, cls))
    return tuple(t for t in f_subtypes(table, rel, cls) if t in supers)


@dataclass(frozen=True)
class FreeTypeComparison:
    is_member: bool    # free type itself satisfies Ty <: F<Ty>
    is_greatest: bool  # free type dominates every F-subtype


@dataclass(frozen=True)
class CofreeComparison:
    is_member: bool  # co-free atom satisfies F<Ty> <: Ty
    is_least: bool   # co-free atom lies below every F-supertype


@dataclass(frozen=True)
class MaximaReport:
    maxima: tuple[TypeTerm, ...]
    free_type: FreeTypeComparison


@dataclass(frozen=True)
class MinimaReport:
    minima: tuple[TypeTerm, ...]
    cofree: CofreeComparison


def maximal_f_subtypes(table: ClassTable, rel: SubtypeRelation, cls: str) -> MaximaReport:
    """Maxima of the F-subtypes under the relation, with a diagnostic
    comparison against the free type (reported, not asserted).

    The comparison runs in the companion relation, where the free type is
    always present even when the base universe is too shallow for it.
    """
    members = f_subtypes(table, rel, cls)
    maxima = tuple(_maximal(rel, members))
    ft = free_type(table, cls)
    comp = _companion(table, rel)
    comparison = FreeTypeComparison(
        is_member=ft in set(members),
        is_greatest=all(is_subtype(comp, m, ft) for m in members),
    )
    return MaximaReport(maxima, comparison)


def minimal_f_supertypes(table: ClassTable, rel: SubtypeRelation, cls: str) -> MinimaReport:
    """Minima of the F-supertypes under the relation, with a diagnostic
    comparison against the co-free atom (reported, not asserted).

    In an extension-free build the atom does not exist, so both comparison
    flags come back False.
    """
    members = f_supertypes(table, rel, cls)
    minima = tuple(_minimal(rel, members))
    atom = Cofree(cls)
    comp = _companion(table, rel)
    if atom in comp:
        comparison = CofreeComparison(
            is_member=atom in set(members),
            is_least=all(is_subtype(comp, atom, m) for m in members),
        )
    else:
        comparison = CofreeComparison(is_member=False, is_least=False)
    return MinimaReport(minima, comparison)


def _maximal(rel: SubtypeRelation, members) -> list[TypeTerm]:
    return [m for m in members
            if not any(o != m and is_subtype(rel, m, o) and not is_subtype(rel, o, m)
                       for o in members)]


def _minimal(rel: SubtypeRelation, members) -> list[TypeTerm]:
    return [m for m in members
            if not any(o != m and is_subtype(rel, o, m) and not is_subtype(rel, m, o)
                       for o in members)]


# -- validity -----------------------------------------------------------------


@dataclass(frozen=True)
class ValidityAssignment:
    """Partition of the universe's instantiations into bound-satisfying
    (valid) and not, for one mode; inductive valid sets are always contained
    in coinductive ones."""

    mode: str
    valid: frozenset[TypeTerm]
    invalid: frozenset[TypeTerm]
    depth: int
    table: ClassTable

    def __contains__(self, term: TypeTerm) -> bool:
        return term in self.valid


def check_validity(table: ClassTable, rel: SubtypeRelation,
                   mode: str = "ind") -> ValidityAssignment:
    """Classify every instantiation of the universe as valid or invalid.

    An instantiation passes its bound check when each argument's upper
    endpoint is below the declared upper bound and its lower endpoint above
    the declared lower bound, with parameters substituted by the argument
    endpoints (upper endpoints for upper bounds, lower for lower).  A bound
    that mentions parameters makes the instantiated bound term a dependency
    of the check.  Inductive mode takes the least fixpoint (a term counts
    only once its dependencies do); coinductive takes the greatest (a term
    survives until a dependency is removed).  A term is never its own
    dependency, so self-bounded instantiations with finite derivations are
    inductively valid.
    """
    if mode not in ("ind", "coind"):
        raise ValueError("mode must be 'ind' or 'coind'")
    comp = _companion(table, rel)
    grounds = [t for t in rel.universe if isinstance(t, Ground)]

    passes: dict[TypeTerm, bool] = {}
    deps: dict[TypeTerm, frozenset[TypeTerm]] = {}
    for term in grounds:
        ok, used = _bound_check(table, comp, term)
        passes[term] = ok
        deps[term] = used

    if mode == "ind":
        valid: set[TypeTerm] = set()
        changed = True
        while changed:
            changed = False
            for term in grounds:
                if term not in valid and passes[term] and deps[term] <= valid:
                    valid.add(term)
                    changed = True
    else:
        valid = {t for t in grounds if passes[t]}
        changed = True
        while changed:
            changed = False
            for term in list(valid):
                if any(d in passes and d not in valid for d in deps[term]):
                    valid.discard(term)
                    changed = True

    invalid = frozenset(t for t in grounds if t not in valid)
    return ValidityAssignment(mode, frozenset(valid), invalid, rel.depth, table)


def _bound_check(table: ClassTable, comp: SubtypeRelation,
                 term: Ground) -> tuple[bool, frozenset[TypeTerm]]:
    decl = table.decl(term.cls)
    if not decl.params:
        return True, frozenset()
    param_names = {p.name for p in decl.params}
    env_hi = {p.name: term.args[i].hi for i, p in enumerate(decl.params)}
    env_lo = {p.name: term.args[i].lo for i, p in enumerate(decl.params)}
    ok = True
    used: set[TypeTerm] = set()
    for i, p in enumerate(decl.params):
        if p.upper_bound is not None:
            bound = term_from_typeuse(table, p.upper_bound, env_hi)
            if not is_subtype(comp, term.args[i].hi, bound):
                ok = False
            if _mentions(p.upper_bound, param_names) and isinstance(bound, Ground):
                used.add(bound)
        if p.lower_bound is not None:
            low = term_from_typeuse(table, p.lower_bound, env_lo)
            if not is_subtype(comp, low, term.args[i].lo):
                ok = False
            if _mentions(p.lower_bound, param_names) and isinstance(low, Ground):
                used.add(low)
    used.discard(term)
    return ok, frozenset(used)


def _mentions(use: TypeUse, names: set[str]) -> bool:
    return any(n in names for n in use.mentioned_names())
