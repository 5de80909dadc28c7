"""Leap statistics: consecutive-gap pairs, their jump sizes, and counts."""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .core import NumericalSemigroup


class Leap(NamedTuple):
    """Pair of consecutive gaps; the first leap starts at the sentinel -1."""

    lo: int
    hi: int

    @property
    def jump(self) -> int:
        return self.hi - self.lo


@dataclass(frozen=True)
class LeapProfile:
    """Counts of leaps keyed by jump size, with zero counts omitted.

    Stored as an ascending tuple of (jump, count) pairs so profiles are
    hashable and can key histograms.
    """

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> LeapProfile:
        items = []
        for jump in sorted(counts):
            count = counts[jump]
            if count == 0:
                continue
            if not isinstance(jump, int) or jump < 1 or count < 0:
                raise ValueError(f"bad profile entry {jump!r}: {count!r}")
            items.append((jump, count))
        return cls(tuple(items))

    @cached_property
    def _by_jump(self) -> dict[int, int]:
        return dict(self.counts)

    def v(self, jump: int) -> int:
        """Count of leaps with the given jump (0 when absent)."""
        return self._by_jump.get(jump, 0)

    @property
    def total(self) -> int:
        """Total leap count, which equals the genus for a semigroup profile."""
        return sum(count for _, count in self.counts)

    @property
    def max_jump(self) -> int:
        """Largest jump present; 0 for the empty profile."""
        return self.counts[-1][0] if self.counts else 0

    def count_up_to(self, kappa: int) -> int:
        """Number of leaps with jump at most ``kappa``."""
        return sum(count for jump, count in self.counts if jump <= kappa)

    def weighted_total(self, kappa: int | None = None) -> int:
        """Sum of jump * count over jumps at most ``kappa`` (all jumps if None)."""
        return sum(
            jump * count
            for jump, count in self.counts
            if kappa is None or jump <= kappa
        )

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)


def leap_set(semigroup: NumericalSemigroup) -> tuple[Leap, ...]:
    """All leaps in gap order; empty for the full naturals."""
    gaps = semigroup.gaps
    return tuple(Leap(lo, hi) for lo, hi in zip((-1,) + gaps[:-1], gaps))


def leap_profile(semigroup: NumericalSemigroup) -> LeapProfile:
    """Histogram of leap jumps."""
    return LeapProfile.from_counts(Counter(leap.jump for leap in leap_set(semigroup)))


def max_leap_jump(semigroup: NumericalSemigroup) -> int:
    """Largest difference between consecutive gaps (0 when there are no gaps)."""
    best = 0
    previous = -1
    for gap in semigroup.gaps:
        if gap - previous > best:
            best = gap - previous
        previous = gap
    return best


def frobenius_from_profile(profile: LeapProfile) -> int:
    """Weighted leap total minus one; the empty profile gives -1.

    Total on arbitrary profiles, but only meaningful when the profile comes
    from an actual semigroup, where it reproduces the Frobenius number.
    """
    return profile.weighted_total() - 1


def is_hyperelliptic(semigroup: NumericalSemigroup) -> bool:
    """Whether 2 is a member."""
    return 2 in semigroup


def is_sparse(semigroup: NumericalSemigroup) -> bool:
    """Whether every leap jump is at most 2 (true for the full naturals)."""
    return max_leap_jump(semigroup) <= 2
