"""Kappa-sparse and pure kappa-sparse decision procedures and classification."""

from __future__ import annotations

from dataclasses import dataclass

from .core import NumericalSemigroup, SemigroupError, ordinary
from .ideals import is_arf_double
from .leaps import Leap, LeapProfile, is_hyperelliptic, leap_profile, leap_set, max_leap_jump


class InvalidParameters(SemigroupError):
    """Parameters outside the defining range of the two-block family."""


def _require_kappa(kappa: int, minimum: int) -> None:
    if not isinstance(kappa, int) or kappa < minimum:
        raise ValueError(f"kappa must be an integer >= {minimum}, got {kappa!r}")


def is_kappa_sparse_profile(semigroup: NumericalSemigroup, kappa: int) -> bool:
    """Class test via the profile: leaps with jump <= kappa account for the genus."""
    _require_kappa(kappa, 1)
    return leap_profile(semigroup).count_up_to(kappa) == semigroup.genus


def is_kappa_sparse_gapdiff(semigroup: NumericalSemigroup, kappa: int) -> bool:
    """Class test via gap spacing: consecutive gaps differ by at most kappa."""
    _require_kappa(kappa, 1)
    return max_leap_jump(semigroup) <= kappa


def is_kappa_sparse(semigroup: NumericalSemigroup, kappa: int) -> bool:
    """Production decision procedure: the gap-spacing form, O(genus)."""
    return is_kappa_sparse_gapdiff(semigroup, kappa)


def is_kappa_sparse_nongap(semigroup: NumericalSemigroup, kappa: int) -> bool:
    """Class test via member spacing: kappa - 1 member steps span at least kappa.

    Only defined for kappa >= 2; the quantifier range degenerates at kappa = 1.
    """
    _require_kappa(kappa, 2)
    small = semigroup.small_elements
    span = len(small) - 1  # == conductor - genus
    return all(
        small[i + kappa - 2] - small[i - 1] >= kappa
        for i in range(1, span - kappa + 3)
    )


def is_kappa_sparse_run(semigroup: NumericalSemigroup, kappa: int) -> bool:
    """Class test via runs: no kappa consecutive members start below the conductor.

    Only the run's starting point must be a positive member below the
    conductor; the run itself may cross it.  Only defined for kappa >= 2.
    """
    _require_kappa(kappa, 2)
    return not any(
        all((x + d) in semigroup for d in range(kappa))
        for x in semigroup.small_elements[1:-1]
    )


def _has_interior_run(semigroup: NumericalSemigroup, length: int) -> bool:
    """Whether some positive member below the conductor starts ``length`` consecutive members."""
    return any(
        all((x + d) in semigroup for d in range(length))
        for x in semigroup.small_elements[1:-1]
    )


def is_pure_kappa_sparse(semigroup: NumericalSemigroup, kappa: int) -> bool:
    """Membership in the pure class: kappa-sparse with a leap of jump exactly kappa.

    kappa = 1 denotes the unit class containing only the full naturals.  For
    kappa >= 3 the profile criterion is cross-checked against the equivalent
    interior-run criterion.
    """
    _require_kappa(kappa, 1)
    if kappa == 1:
        return semigroup.genus == 0
    sparse_enough = is_kappa_sparse(semigroup, kappa)
    result = sparse_enough and leap_profile(semigroup).v(kappa) != 0
    if kappa >= 3:
        assert (sparse_enough and _has_interior_run(semigroup, kappa - 1)) == result
    return result


def sparseness_index(semigroup: NumericalSemigroup) -> int:
    """The unique kappa whose pure class contains the semigroup.

    Computed directly as the largest leap jump (1 for the full naturals)
    rather than by searching kappa upward.
    """
    return max_leap_jump(semigroup) if semigroup.genus else 1


def example_family(a: int, kappa: int) -> NumericalSemigroup:
    """The two-block semigroup {a, ..., a + kappa - 2} plus everything from 2a.

    Needs kappa >= 3 and a >= kappa; the result has genus 2a - kappa,
    multiplicity a, and is pure kappa-sparse.
    """
    if not isinstance(kappa, int) or not isinstance(a, int) or kappa < 3 or a < kappa:
        raise InvalidParameters(f"need kappa >= 3 and a >= kappa, got a={a!r}, kappa={kappa!r}")
    gaps = tuple(range(1, a)) + tuple(range(a + kappa - 1, 2 * a))
    return NumericalSemigroup(gaps)


def frobenius_identity_check(semigroup: NumericalSemigroup, kappa: int) -> bool:
    """Both truncated leap-sum identities for K = 2 * genus - frobenius.

    Equivalent to the kappa-sparse property for positive genus.
    """
    _require_kappa(kappa, 2)
    g = semigroup.genus
    if g == 0:
        raise ValueError("positive genus required")
    K = 2 * g - semigroup.frobenius
    profile = leap_profile(semigroup)
    weighted = profile.weighted_total(kappa)
    return (
        weighted == 2 * g - K + 1
        and weighted - profile.count_up_to(kappa) == g - K + 1
    )


@dataclass(frozen=True)
class SparsenessReport:
    """Sparseness index, a witnessing leap, and per-procedure results at a queried kappa."""

    kappa_index: int
    pure_witness: Leap | None
    checks: tuple[tuple[str, bool], ...]

    def checks_dict(self) -> dict[str, bool]:
        return dict(self.checks)


def sparseness_report(semigroup: NumericalSemigroup, kappa: int) -> SparsenessReport:
    """Run every decision procedure applicable at ``kappa`` and report the index."""
    _require_kappa(kappa, 1)
    index = sparseness_index(semigroup)
    witness = next((leap for leap in leap_set(semigroup) if leap.jump == index), None)
    checks = [
        ("profile_sum", is_kappa_sparse_profile(semigroup, kappa)),
        ("gap_spacing", is_kappa_sparse_gapdiff(semigroup, kappa)),
    ]
    if kappa >= 2:
        checks.append(("member_spacing", is_kappa_sparse_nongap(semigroup, kappa)))
        checks.append(("member_run", is_kappa_sparse_run(semigroup, kappa)))
    return SparsenessReport(index, witness, tuple(checks))


@dataclass(frozen=True)
class Classification:
    """Per-semigroup report of derived quantities and class memberships."""

    genus: int
    conductor: int
    frobenius: int
    multiplicity: int
    hyperelliptic: bool
    arf: bool
    sparse: bool
    sparseness_index: int
    profile: LeapProfile
    figure_class: str


def classify(semigroup: NumericalSemigroup) -> Classification:
    """Full classification, labelled by the most specific class in the chain.

    The chain runs trivial < ordinary < arf < sparse < pure-kappa-sparse, and
    every semigroup is pure for exactly one kappa, its sparseness index.
    """
    index = sparseness_index(semigroup)
    sparse = index <= 2
    arf = is_arf_double(semigroup)
    genus = semigroup.genus
    if genus == 0:
        label = "trivial"
    elif semigroup == ordinary(genus):
        label = "ordinary"
    elif arf:
        label = "arf"
    elif sparse:
        label = "sparse"
    else:
        label = f"pure-{index}-sparse"
    return Classification(
        genus=genus,
        conductor=semigroup.conductor,
        frobenius=semigroup.frobenius,
        multiplicity=semigroup.multiplicity,
        hyperelliptic=is_hyperelliptic(semigroup),
        arf=arf,
        sparse=sparse,
        sparseness_index=index,
        profile=leap_profile(semigroup),
        figure_class=label,
    )
