"""Mappings between structures: classification, kernels, images.

A mapping is classified against two laws: the homomorphism law
kappa(x->y) = kappa(x)->kappa(y), and the order-map (O-map) law
unit_X <= x->y  implies  unit_Y <= kappa(x)->kappa(y).  A map satisfying
both is an O-homomorphism.  Kernels are defined for arbitrary mappings:
ker(kappa) = {x : unit_Y <= kappa(x)} under the target's stored relation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .core import (
    DEFAULT_WITNESS_CAP,
    BudgetError,
    CheckReport,
    PreconditionError,
    RawStructure,
    StructureError,
    Subset,
    UniverseMismatchError,
)

DEFAULT_MAP_BUDGET = 10_000_000


@dataclass(frozen=True)
class Mapping:
    """A total function between two carriers, as a table of target indices."""

    source: RawStructure
    target: RawStructure
    table: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.source.n:
            raise StructureError(
                f"map {self.name!r}: table has {len(self.table)} entries "
                f"for a carrier of size {self.source.n}"
            )
        for i, v in enumerate(self.table):
            if not isinstance(v, int) or not 0 <= v < self.target.n:
                raise StructureError(f"map {self.name!r}: bad image at {i}: {v!r}")

    def __call__(self, i: int) -> int:
        return self.table[i]

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target.n

    def preserves_unit(self) -> bool:
        return self.table[self.source.unit] == self.target.unit


@dataclass(frozen=True)
class MorphismClass:
    """Verdicts for the two morphism laws with exhaustive witnesses."""

    is_hom: bool
    is_omap: bool
    hom_witnesses: tuple[tuple[int, int], ...] = ()
    omap_witnesses: tuple[tuple[int, int], ...] = ()

    @property
    def is_ohom(self) -> bool:
        return self.is_hom and self.is_omap


def identity_map(a: RawStructure, name: str = "") -> Mapping:
    return Mapping(a, a, tuple(range(a.n)), name or f"id-{a.name}")


def constant_to_unit(src: RawStructure, dst: RawStructure, name: str = "") -> Mapping:
    return Mapping(src, dst, (dst.unit,) * src.n, name or f"const-{dst.name}")


def classify(m: Mapping, *, witness_cap: int | None = DEFAULT_WITNESS_CAP) -> MorphismClass:
    """Evaluate both morphism laws over all pairs of source elements."""
    op_s, op_t = m.source.op, m.target.op
    cone_s = m.source.order[m.source.unit]
    cone_t = m.target.order[m.target.unit]
    t = m.table
    hom_w: list[tuple[int, int]] = []
    omap_w: list[tuple[int, int]] = []
    for x in range(m.source.n):
        for y in range(m.source.n):
            v = op_s[x][y]
            w = op_t[t[x]][t[y]]
            if t[v] != w and (witness_cap is None or len(hom_w) < witness_cap):
                hom_w.append((x, y))
            if cone_s[v] and not cone_t[w] and (witness_cap is None or len(omap_w) < witness_cap):
                omap_w.append((x, y))
    return MorphismClass(
        is_hom=not hom_w, is_omap=not omap_w,
        hom_witnesses=tuple(hom_w), omap_witnesses=tuple(omap_w),
    )


def _require_ohom(m: Mapping, what: str) -> MorphismClass:
    cls = classify(m)
    if not cls.is_ohom:
        raise PreconditionError(
            f"{what} requires an O-homomorphism; {m.name or m.table} is "
            f"{'not a homomorphism' if not cls.is_hom else 'not an O-map'}"
        )
    return cls


def monotonicity_report(m: Mapping, *,
                        witness_cap: int | None = DEFAULT_WITNESS_CAP) -> CheckReport:
    """The three order conclusions every O-homomorphism must satisfy.

    Witnesses: ("unit-selfarrow",), ("unit-image",) or ("order", x, y).
    """
    _require_ohom(m, "monotonicity_report")
    t = m.table
    src, dst = m.source, m.target
    cone_t = dst.order[dst.unit]
    e_img = t[src.unit]

    def violations():
        if not cone_t[dst.op[e_img][e_img]]:
            yield ("unit-selfarrow",)
        if not cone_t[e_img]:
            yield ("unit-image",)
        for x in range(src.n):
            for y in range(src.n):
                if src.order[x][y] and not dst.order[t[x]][t[y]]:
                    yield ("order", x, y)

    return CheckReport.collect("monotone", violations(), witness_cap)


def kernel(m: Mapping) -> Subset:
    """Elements whose image sits above the target's unit (any mapping)."""
    cone_t = m.target.order[m.target.unit]
    return Subset.from_indices(m.source, (x for x in range(m.source.n) if cone_t[m.table[x]]))


def kernel_alt(m: Mapping) -> Subset:
    """Kernel through its existential characterization.

    {y : some x has unit_Y <= kappa(x) and unit_Y <= kappa(x)->kappa(y)};
    equality with `kernel` is a theorem for validated endpoints and is
    checked by the P-kernel-alt sweep.
    """
    cone_t = m.target.order[m.target.unit]
    op_t = m.target.op
    t = m.table
    good_x = [x for x in range(m.source.n) if cone_t[t[x]]]
    members = (
        y for y in range(m.source.n)
        if any(cone_t[op_t[t[x]][t[y]]] for x in good_x)
    )
    return Subset.from_indices(m.source, members)


def check_closed_kernel_condition(m: Mapping, *,
                                  witness_cap: int | None = DEFAULT_WITNESS_CAP) -> CheckReport:
    """kappa(unit_X) <= kappa(x) forces x->unit_X into the kernel."""
    _require_ohom(m, "check_closed_kernel_condition")
    ker = kernel(m)
    src, dst = m.source, m.target
    t = m.table
    e_img_row = dst.order[t[src.unit]]
    viol = (
        (x,) for x in range(src.n)
        if e_img_row[t[x]] and src.op[x][src.unit] not in ker
    )
    return CheckReport.collect("closed-kernel-condition", viol, witness_cap)


def check_reflection_condition(m: Mapping, *,
                               witness_cap: int | None = DEFAULT_WITNESS_CAP) -> CheckReport:
    """unit_Y <= kappa(x) reflects to unit_X <= x (no morphism law assumed)."""
    cone_s = m.source.order[m.source.unit]
    cone_t = m.target.order[m.target.unit]
    viol = ((x,) for x in range(m.source.n) if cone_t[m.table[x]] and not cone_s[x])
    return CheckReport.collect("reflection-condition", viol, witness_cap)


def image(m: Mapping, s: Subset) -> Subset:
    if s.universe != m.source:
        raise UniverseMismatchError("image: subset is not over the map's source")
    return Subset.from_indices(m.target, (m.table[x] for x in s))


def preimage(m: Mapping, t: Subset) -> Subset:
    if t.universe != m.target:
        raise UniverseMismatchError("preimage: subset is not over the map's target")
    return Subset.from_indices(m.source, (x for x in range(m.source.n) if m.table[x] in t))


class MapClass(Enum):
    ALL = "all"
    HOM = "hom"
    OMAP = "omap"
    OHOM = "ohom"


def enumerate_maps(src: RawStructure, dst: RawStructure,
                   klass: MapClass = MapClass.ALL, *,
                   surjective_only: bool = False,
                   unit_preserving_only: bool = False,
                   budget: int = DEFAULT_MAP_BUDGET) -> Iterator[Mapping]:
    """All maps src -> dst in lexicographic table order, filtered by class."""
    candidates = dst.n ** src.n
    if candidates > budget:
        raise BudgetError(
            f"{candidates} candidate maps from {src.name!r} to {dst.name!r} "
            f"exceed the budget of {budget}"
        )
    for table in itertools.product(range(dst.n), repeat=src.n):
        m = Mapping(src, dst, table)
        if surjective_only and not m.is_surjective():
            continue
        if unit_preserving_only and not m.preserves_unit():
            continue
        if klass is not MapClass.ALL:
            cls = classify(m, witness_cap=1)
            if klass is MapClass.HOM and not cls.is_hom:
                continue
            if klass is MapClass.OMAP and not cls.is_omap:
                continue
            if klass is MapClass.OHOM and not cls.is_ohom:
                continue
        yield m
