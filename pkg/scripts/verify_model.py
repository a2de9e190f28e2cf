#!/usr/bin/env python3
"""Run the full verification battery on the shipped tables and print a
findings summary.  Exits 1 if any law is violated."""

from __future__ import annotations

import pathlib
import sys
import time

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from nomsub import (  # noqa: E402
    BOTTOM,
    build_relation,
    check_galois,
    check_monotonicity,
    check_validity,
    closure_class,
    closure_type,
    format_type,
    maximal_f_subtypes,
    minimal_f_supertypes,
    mutual_pairs,
    parse_class_table,
)

RUNS = [("sample.table", 1), ("reduced.table", 2)]


def verify(name: str, depth: int) -> bool:
    table = parse_class_table((ROOT / "tables" / name).read_text())
    started = time.monotonic()
    rel = build_relation(table, depth)
    print(f"== {name} @ depth {depth}: {len(rel.universe)} terms, "
          f"{rel.iterations} iterations, {time.monotonic() - started:.2f}s")

    ok = True
    galois = check_galois(table, rel)
    print(f"   adjunction grid: {len(galois.violations)} violations / "
          f"{galois.checked_pairs} pairs")
    ok &= galois.fully_ok

    unit_bad = [t for t in rel.universe if t != BOTTOM
                and not closure_type(table, rel, t)[1]]
    counit_bad = [c for c in table.class_names if not closure_class(table, c)[1]]
    print(f"   closure laws: {len(unit_bad)} unit violations, "
          f"{len(counit_bad)} counit violations")
    ok &= not unit_bad and not counit_bad

    mono = check_monotonicity(table, rel)
    print(f"   monotonicity: erasure {'ok' if mono.erasure_ok else 'BROKEN'}, "
          f"free type {'ok' if mono.free_type_ok else 'BROKEN'}")
    ok &= mono.erasure_ok and mono.free_type_ok

    pairs = mutual_pairs(rel)
    print(f"   mutual pairs: {len(pairs)}")
    ok &= not pairs

    ind = check_validity(table, rel, "ind")
    coind = check_validity(table, rel, "coind")
    print(f"   validity: {len(ind.valid)} inductive / {len(coind.valid)} "
          f"coinductive (agree: {ind.valid == coind.valid})")
    ok &= ind.valid <= coind.valid

    for cls in table.class_names:
        if table.arity(cls) != 1:
            continue
        mx = maximal_f_subtypes(table, rel, cls)
        mn = minimal_f_supertypes(table, rel, cls)
        print(f"   {cls}: maximal coalgebras "
              f"{[format_type(t, table) for t in mx.maxima]} "
              f"(free type member={mx.free_type.is_member}, "
              f"greatest={mx.free_type.is_greatest}); "
              f"minimal algebras {[format_type(t, table) for t in mn.minima]} "
              f"(co-free member={mn.cofree.is_member}, least={mn.cofree.is_least})")
    return ok


def main() -> int:
    all_ok = all([verify(name, depth) for name, depth in RUNS])
    print("\nverification:", "OK" if all_ok else "VIOLATIONS FOUND")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
