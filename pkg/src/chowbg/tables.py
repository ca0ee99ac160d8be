"""Per-degree additive output tables.

A ``ChowTable`` records, for each degree 0..bound, the free rank and the
multiset of torsion orders (prime powers).  Torsion is kept in a fixed
order, sorted by (prime, exponent), so tables compare and render
deterministically.  Tables optionally carry the group, base field,
localization and provenance of the computation that produced them.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

from ._intmath import prime_power_decompose

if TYPE_CHECKING:  # only for annotations; avoids import cycles
    from .fields import FieldDescriptor
    from .groups import GroupExpr


@dataclass(frozen=True)
class Localization:
    kind: str  # "integral" | "at_prime" | "mod_p"
    prime: int | None = None

    def __post_init__(self):
        if self.kind not in ("integral", "at_prime", "mod_p"):
            raise ValueError(f"unknown localization kind {self.kind!r}")
        if (self.prime is None) != (self.kind == "integral"):
            raise ValueError("prime required exactly for at_prime / mod_p")


INTEGRAL = Localization("integral")

# Provenance flags.  EXACT: the rows are the group's Chow groups on the nose.
# UPPER_BOUND: the rows contain the requested groups as a split summand.
# EXTRAPOLATED_FIELD: the base-field reduction rule was applied beyond the
# descriptors for which it is established.
EXACT = "exact"
UPPER_BOUND = "upper-bound"
EXTRAPOLATED_FIELD = "extrapolated-field"


def torsion_sort_key(order: int) -> tuple[int, int]:
    pe = prime_power_decompose(order)
    if pe is None:
        raise ValueError(f"torsion order must be a prime power, got {order}")
    return pe


def sort_torsion(orders) -> tuple[int, ...]:
    return tuple(sorted(orders, key=torsion_sort_key))


@dataclass(frozen=True)
class DegreeRow:
    degree: int
    free_rank: int
    torsion: tuple[int, ...]  # prime powers, sorted by (prime, exponent)

    def __post_init__(self):
        if self.degree < 0 or self.free_rank < 0:
            raise ValueError("degree and free rank must be nonnegative")
        object.__setattr__(self, "torsion", sort_torsion(self.torsion))

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion


@dataclass(frozen=True)
class ChowTable:
    rows: tuple[DegreeRow, ...]
    bound: int
    group: "GroupExpr | None" = None
    field: "FieldDescriptor | None" = None
    localization: Localization = INTEGRAL
    provenance: tuple[str, ...] = (EXACT,)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if [r.degree for r in self.rows] != list(range(self.bound + 1)):
            raise ValueError("table must have one row per degree 0..bound")

    def row(self, degree: int) -> DegreeRow:
        if not 0 <= degree <= self.bound:
            raise ValueError(f"degree {degree} outside table bound {self.bound}")
        return self.rows[degree]

    def with_metadata(self, **kw) -> "ChowTable":
        return replace(self, **kw)


def empty_rows(bound: int) -> list[DegreeRow]:
    return [DegreeRow(d, 0, ()) for d in range(bound + 1)]


def table_from_degree_data(data: dict[int, tuple[int, tuple[int, ...]]], bound: int, **meta) -> ChowTable:
    """Build a table from {degree: (free_rank, torsion_orders)}; gaps are zero rows."""
    rows = []
    for d in range(bound + 1):
        rank, tors = data.get(d, (0, ()))
        rows.append(DegreeRow(d, rank, tuple(tors)))
    return ChowTable(rows=tuple(rows), bound=bound, **meta)
