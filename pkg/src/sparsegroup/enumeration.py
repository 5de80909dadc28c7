"""Exhaustive enumeration over the semigroup tree, with class pruning and census tables."""

from __future__ import annotations

import os
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from .core import LimitExceeded, NumericalSemigroup
from .ideals import is_arf_double
from .kappa import is_kappa_sparse, is_pure_kappa_sparse
from .leaps import LeapProfile, is_sparse, leap_profile

DEFAULT_GENUS_CAP = 18
GENUS_CAP_ENV = "SPARSEGROUP_MAX_GENUS"

MODES = ("all", "kappa_sparse", "pure_kappa_sparse", "arf")
EMITS = ("full", "count_only")


def genus_cap() -> int:
    """Enumeration depth cap: the environment override or the default of 18."""
    raw = os.environ.get(GENUS_CAP_ENV)
    if raw is None:
        return DEFAULT_GENUS_CAP
    try:
        value = int(raw)
    except ValueError:
        raise LimitExceeded(f"{GENUS_CAP_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise LimitExceeded(f"{GENUS_CAP_ENV} must be non-negative, got {value}")
    return value


def children(semigroup: NumericalSemigroup) -> tuple[NumericalSemigroup, ...]:
    """Tree children: remove one minimal generator above the Frobenius number.

    Each child has genus one higher and maps back to its parent by filling the
    largest gap; children come ordered by the removed generator.
    """
    frobenius = semigroup.frobenius
    return tuple(
        NumericalSemigroup(semigroup.gaps + (x,))
        for x in semigroup.minimal_generators
        if x > frobenius
    )


def _walk(
    max_genus: int,
    keep: Callable[[NumericalSemigroup], bool] | None = None,
) -> Iterator[tuple[int, NumericalSemigroup]]:
    """Depth-first preorder over the tree, truncated below ``max_genus``.

    ``keep`` prunes: a node failing it is skipped along with its whole subtree.
    """
    root = NumericalSemigroup(())
    if keep is not None and not keep(root):
        return
    stack = [(0, root)]
    while stack:
        depth, node = stack.pop()
        yield depth, node
        if depth < max_genus:
            for child in reversed(children(node)):
                if keep is None or keep(child):
                    stack.append((depth + 1, child))


def _check_genus(genus: int, cap: int | None) -> None:
    limit = genus_cap() if cap is None else cap
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    if genus > limit:
        raise LimitExceeded(f"genus {genus} exceeds the cap {limit}; raise the cap to go deeper")


def enumerate_genus(
    genus: int, *, cap: int | None = None
) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup with exactly ``genus`` gaps, each exactly once.

    Results stream in depth-first tree order, so the output is deterministic.
    """
    _check_genus(genus, cap)
    for depth, node in _walk(genus):
        if depth == genus:
            yield node


def enumerate_kappa_sparse(
    genus: int, kappa: int, *, cap: int | None = None
) -> Iterator[NumericalSemigroup]:
    """Genus-level slice of the kappa-sparse class, via sound subtree pruning.

    Filling the largest gap keeps a semigroup in the class, so every ancestor
    of a member is a member and cutting at the first non-member loses nothing.
    kappa = 1 is the degenerate class holding only the full naturals.
    """
    _check_genus(genus, cap)
    if not isinstance(kappa, int) or kappa < 1:
        raise ValueError(f"kappa must be a positive integer, got {kappa!r}")
    if kappa == 1:
        if genus == 0:
            yield NumericalSemigroup(())
        return
    for depth, node in _walk(genus, keep=lambda s: is_kappa_sparse(s, kappa)):
        if depth == genus:
            yield node


@dataclass(frozen=True)
class EnumerationRequest:
    """Parameters for a census run over genus levels 0..max_genus."""

    max_genus: int
    kappa_filter: int | None = None
    mode: str = "all"
    emit: str = "full"
    cap: int | None = None

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.emit not in EMITS:
            raise ValueError(f"emit must be one of {EMITS}, got {self.emit!r}")
        if self.max_genus < 0:
            raise ValueError(f"max_genus must be non-negative, got {self.max_genus}")
        limit = self.cap if self.cap is not None else genus_cap()
        if self.max_genus > limit:
            raise LimitExceeded(
                f"max_genus {self.max_genus} exceeds the cap {limit}"
            )
        if self.kappa_filter is not None and (
            not isinstance(self.kappa_filter, int) or self.kappa_filter < 1
        ):
            raise ValueError(f"kappa_filter must be a positive integer, got {self.kappa_filter!r}")
        if self.mode in ("kappa_sparse", "pure_kappa_sparse") and self.kappa_filter is None:
            raise ValueError(f"mode {self.mode!r} requires kappa_filter")

    @property
    def kappa(self) -> int:
        """Kappa used for the class columns; defaults to 2 (the sparse class)."""
        return self.kappa_filter if self.kappa_filter is not None else 2


@dataclass
class CensusRow:
    """Counts for a single genus level."""

    genus: int
    total: int = 0
    per_class: dict[str, int] = field(
        default_factory=lambda: {
            "arf": 0,
            "sparse": 0,
            "kappa_sparse": 0,
            "pure_kappa_sparse": 0,
        }
    )
    profile_histogram: dict[LeapProfile, int] = field(default_factory=dict)


def census(request: EnumerationRequest) -> list[CensusRow]:
    """One row per genus with totals, class counts, and the profile histogram.

    The mode selects the universe being counted (everything, a kappa-sparse
    class, its pure part, or the Arf members); class columns are evaluated
    inside that universe.  Output is deterministic across runs.
    """
    kappa = request.kappa
    rows = [CensusRow(genus=g) for g in range(request.max_genus + 1)]

    if request.mode in ("kappa_sparse", "pure_kappa_sparse") and kappa >= 2:
        nodes = _walk(request.max_genus, keep=lambda s: is_kappa_sparse(s, kappa))
    elif request.mode in ("kappa_sparse", "pure_kappa_sparse"):
        nodes = iter([(0, NumericalSemigroup(()))])  # kappa == 1
    else:
        nodes = _walk(request.max_genus)

    if request.mode == "pure_kappa_sparse":
        def selected(node):
            return is_pure_kappa_sparse(node, kappa)
    elif request.mode == "arf":
        selected = is_arf_double
    else:
        def selected(node):
            return True

    with_profiles = request.emit == "full"
    for depth, node in nodes:
        if not selected(node):
            continue
        row = rows[depth]
        row.total += 1
        if is_arf_double(node):
            row.per_class["arf"] += 1
        if is_sparse(node):
            row.per_class["sparse"] += 1
        if is_kappa_sparse(node, kappa):
            row.per_class["kappa_sparse"] += 1
        if is_pure_kappa_sparse(node, kappa):
            row.per_class["pure_kappa_sparse"] += 1
        if with_profiles:
            profile = leap_profile(node)
            row.profile_histogram[profile] = row.profile_histogram.get(profile, 0) + 1
    return rows
