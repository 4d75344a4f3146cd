"""Subset predicates: subalgebras, filters, ordered variants, closedness.

All predicates accept a RawStructure so that deliberately inconsistent
fixtures can be probed; "unit <= w" is always the stored relation's unit
row.  Witness conventions: closure failures are (x, y) pairs, cone-
condition failures are (x,) singletons, and a filter missing its unit
reports the marker witness ("missing-unit",).
"""

from __future__ import annotations

from enum import Enum

from .core import (
    DEFAULT_WITNESS_CAP,
    BudgetError,
    CheckReport,
    PreconditionError,
    RawStructure,
    Subset,
    UniverseMismatchError,
)

MISSING_UNIT = "missing-unit"

DEFAULT_ENUMERATION_BUDGET = 16


class SubstructureKind(Enum):
    SUBALGEBRA = "subalgebra"
    ORDERED_SUBALGEBRA = "ordered-subalgebra"
    FILTER = "filter"
    ORDERED_FILTER = "ordered-filter"
    CLOSED_FILTER = "closed-filter"
    CLOSED_ORDERED_FILTER = "closed-ordered-filter"


def _check_universe(a: RawStructure, s: Subset) -> None:
    if s.universe != a:
        raise UniverseMismatchError(
            f"subset over {s.universe.name!r} probed against {a.name!r}"
        )


def is_subalgebra(a: RawStructure, s: Subset, *,
                  witness_cap: int | None = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Closure under the operation: x, y in s implies x->y in s."""
    _check_universe(a, s)
    op = a.op
    ms = s.members()
    viol = ((x, y) for x in ms for y in ms if op[x][y] not in s)
    return CheckReport.collect("subalgebra", viol, witness_cap)


def is_ordered_subalgebra(a: RawStructure, s: Subset, *,
                          witness_cap: int | None = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Closure under the operation for cone members of s only."""
    _check_universe(a, s)
    op = a.op
    cone = a.order[a.unit]
    ms = s.members()
    viol = ((x, y) for x in ms for y in ms
            if cone[x] and cone[y] and op[x][y] not in s)
    return CheckReport.collect("ordered-subalgebra", viol, witness_cap)


def _filter_violations(a: RawStructure, s: Subset, ordered: bool):
    if a.unit not in s:
        yield (MISSING_UNIT,)
    op = a.op
    cone = a.order[a.unit]
    n = a.n
    for x in s.members():
        for y in range(n):
            if y in s:
                continue
            if ordered:
                if cone[op[x][y]]:
                    yield (x, y)
            else:
                if op[x][y] in s:
                    yield (x, y)


def is_filter(a: RawStructure, s: Subset, *,
              witness_cap: int | None = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Contains the unit and is closed under detachment (x->y, x |- y)."""
    _check_universe(a, s)
    return CheckReport.collect("filter", _filter_violations(a, s, ordered=False), witness_cap)


def is_ordered_filter(a: RawStructure, s: Subset, *,
                      witness_cap: int | None = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Contains the unit and is closed under order detachment."""
    _check_universe(a, s)
    return CheckReport.collect("ordered-filter", _filter_violations(a, s, ordered=True), witness_cap)


def satisfies_cone_condition(a: RawStructure, s: Subset, *,
                             witness_cap: int | None = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Every member sits above the unit."""
    _check_universe(a, s)
    cone = a.order[a.unit]
    viol = ((x,) for x in s.members() if not cone[x])
    return CheckReport.collect("cone-condition", viol, witness_cap)


def is_closed(a: RawStructure, s: Subset, kind: SubstructureKind, *,
              witness_cap: int | None = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Closedness of a filter (= also a subalgebra) or an ordered filter
    (= also an ordered subalgebra).

    Raises PreconditionError when s is not a filter of the requested kind.
    """
    if kind is SubstructureKind.FILTER:
        pre = is_filter(a, s, witness_cap=witness_cap)
        if not pre.holds:
            raise PreconditionError(f"{s.member_labels()} is not a filter of {a.name!r}", pre)
        return is_subalgebra(a, s, witness_cap=witness_cap).relabeled("closed-filter")
    if kind is SubstructureKind.ORDERED_FILTER:
        pre = is_ordered_filter(a, s, witness_cap=witness_cap)
        if not pre.holds:
            raise PreconditionError(f"{s.member_labels()} is not an ordered filter of {a.name!r}", pre)
        return is_ordered_subalgebra(a, s, witness_cap=witness_cap).relabeled("closed-ordered-filter")
    raise ValueError(f"is_closed expects FILTER or ORDERED_FILTER, got {kind}")


_PLAIN_PREDICATES = {
    SubstructureKind.SUBALGEBRA: is_subalgebra,
    SubstructureKind.ORDERED_SUBALGEBRA: is_ordered_subalgebra,
    SubstructureKind.FILTER: is_filter,
    SubstructureKind.ORDERED_FILTER: is_ordered_filter,
}


def holds_for(a: RawStructure, s: Subset, kind: SubstructureKind) -> bool:
    """Verdict of the kind's predicate (closed kinds are conjunctions)."""
    if kind in _PLAIN_PREDICATES:
        return _PLAIN_PREDICATES[kind](a, s, witness_cap=1).holds
    if kind is SubstructureKind.CLOSED_FILTER:
        return (is_filter(a, s, witness_cap=1).holds
                and is_subalgebra(a, s, witness_cap=1).holds)
    if kind is SubstructureKind.CLOSED_ORDERED_FILTER:
        return (is_ordered_filter(a, s, witness_cap=1).holds
                and is_ordered_subalgebra(a, s, witness_cap=1).holds)
    raise ValueError(f"unknown substructure kind {kind!r}")


def enumerate_substructures(a: RawStructure, kind: SubstructureKind, *,
                            budget: int = DEFAULT_ENUMERATION_BUDGET) -> list[Subset]:
    """All subsets satisfying the kind's predicate, ascending by bitmask."""
    if a.n > budget:
        raise BudgetError(
            f"carrier size {a.n} exceeds the enumeration budget of {budget}"
        )
    out = []
    for mask in range(1 << a.n):
        s = Subset(a, mask)
        if holds_for(a, s, kind):
            out.append(s)
    return out
