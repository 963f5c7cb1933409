"""Exhaustive enumeration of towers within given bounds.

Towers are generated in a fixed deterministic order: fiber-dimension
tuples run through the product of the sorted allowed dimensions, and for
each tuple the twist entries run through [-bound, bound] in row-major
order across stages.  Re-running an enumeration therefore always yields
the identical stream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import GbottError
from .tower import StageSpec, TowerSpec

FILTER_KEYS = ("q", "z", "chern")


@dataclass(frozen=True)
class EnumerationConfig:
    height: int
    dims: tuple[int, ...]
    coeff_bound: int
    filters: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(sorted(set(int(d) for d in self.dims))))
        object.__setattr__(self, "filters", frozenset(self.filters))
        if self.height < 1:
            raise GbottError("height must be >= 1")
        if not self.dims:
            raise GbottError("dims must be non-empty")
        if any(d < 1 for d in self.dims):
            raise GbottError("fiber dimensions must be >= 1")
        if self.coeff_bound < 0:
            raise GbottError("coeff bound must be >= 0")
        bad = self.filters - set(FILTER_KEYS)
        if bad:
            raise GbottError(f"unknown filters: {sorted(bad)}")


def enumerate_towers(
    height: int, dims: tuple[int, ...], coeff_bound: int
) -> Iterator[TowerSpec]:
    """All towers of this height with stage dimensions drawn from `dims`
    and twist entries in [-coeff_bound, coeff_bound]."""
    dims = tuple(sorted(set(dims)))
    values = range(-coeff_bound, coeff_bound + 1)
    for dim_tuple in itertools.product(dims, repeat=height):
        entry_counts = [n * (i - 1) for i, n in enumerate(dim_tuple, start=1)]
        for flat in itertools.product(values, repeat=sum(entry_counts)):
            stages = []
            pos = 0
            for i, n in enumerate(dim_tuple, start=1):
                rows = []
                for _ in range(n):
                    rows.append(tuple(flat[pos:pos + (i - 1)]))
                    pos += i - 1
                stages.append(StageSpec(n, tuple(rows)))
            yield TowerSpec(tuple(stages))


def expected_count(height: int, dims: tuple[int, ...], coeff_bound: int) -> int:
    """Closed-form size of the enumeration stream."""
    dims = tuple(sorted(set(dims)))
    width = 2 * coeff_bound + 1
    total = 0
    for dim_tuple in itertools.product(dims, repeat=height):
        entries = sum(n * (i - 1) for i, n in enumerate(dim_tuple, start=1))
        total += width ** entries
    return total
