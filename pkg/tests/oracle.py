"""Brute-force subtyping oracle: a naive memoized recursive decision
procedure, written before (and kept independent of) the matrix-based
relation builder.

The oracle decides ``t1 <: t2`` by structural recursion:

* reflexivity, and bottom below everything;
* same-class instantiations by interval containment on the arguments
  (endpoint comparisons recurse into the oracle itself);
* different classes by climbing the superclass chain one instantiation at
  a time;
* co-free atoms by the axioms: ``D<!> <: C<!>`` when D subclasses C,
  ``C<!>`` below every enumerated instantiation of a generic superclass,
  and ``C<!>`` below the root type.

The only shared code is the term vocabulary and the single-step
super-instantiation substitution; no edge matrix, closure, or fixpoint
machinery is used here.
"""

from __future__ import annotations

from nomsub.class_table import ClassTable, subclass_of
from nomsub.terms import (
    BOTTOM,
    Cofree,
    Ground,
    TypeTerm,
    root_term,
    super_instantiation,
)


class Oracle:
    """Memoized recursive subtype decisions relative to a term universe.

    The universe matters only for co-free atoms, whose supertypes are the
    instantiations that actually exist.  Pairs currently on the recursion
    stack are answered False and not memoized (least-fixpoint reading).
    """

    def __init__(self, table: ClassTable, universe):
        self.table = table
        self.universe = tuple(universe)
        self._memo: dict[tuple[TypeTerm, TypeTerm], bool] = {}
        self._stack: set[tuple[TypeTerm, TypeTerm]] = set()

    def is_subtype(self, t1: TypeTerm, t2: TypeTerm) -> bool:
        if t1 == t2:
            return True
        key = (t1, t2)
        if key in self._memo:
            return self._memo[key]
        if key in self._stack:
            return False
        self._stack.add(key)
        try:
            result = self._decide(t1, t2)
        finally:
            self._stack.discard(key)
        self._memo[key] = result
        return result

    def _decide(self, t1: TypeTerm, t2: TypeTerm) -> bool:
        if t1 == BOTTOM:
            return True
        if t2 == BOTTOM:
            return False
        if isinstance(t1, Cofree):
            if isinstance(t2, Cofree):
                return subclass_of(self.table, t1.cls, t2.cls)
            if t2 == root_term(self.table):
                return True
            return any(
                self.is_subtype(inst, t2)
                for inst in self.universe
                if isinstance(inst, Ground)
                and self.table.decl(inst.cls).is_generic
                and subclass_of(self.table, t1.cls, inst.cls)
            )
        if isinstance(t2, Cofree):
            return False
        assert isinstance(t1, Ground) and isinstance(t2, Ground)
        if t1.cls == t2.cls and all(
            self.is_subtype(b.lo, a.lo) and self.is_subtype(a.hi, b.hi)
            for a, b in zip(t1.args, t2.args)
        ):
            return True
        parent = super_instantiation(self.table, t1)
        return parent is not None and self.is_subtype(parent, t2)
