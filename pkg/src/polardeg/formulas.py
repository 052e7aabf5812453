"""Closed-form polar-degree and Euler-characteristic formulas.

Every operation here is exact integer arithmetic over a SingularityProfile.
The central quantity is the polar degree: the topological degree of the
gradient map of a defining polynomial, P^n minus the singular locus to P^n.
For a smooth degree-d hypersurface it equals (d-1)^n; singularities lower
it by Milnor-data corrections computed below.

Conventions:
  * chi denotes a topological Euler characteristic.
  * mu denotes a Milnor number; mu_transversal the Milnor number of a
    generic transversal slice of a 1-dimensional singular locus.
  * A profile is "inconsistent" when the formulas produce a polar degree
    outside [0, (d-1)^n]; that cannot happen for data coming from an
    actual hypersurface, so we raise instead of clamping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from polardeg.profiles import CurveComponent, IsolatedPoint, SingularityProfile, SpecialPoint


class InconsistentProfileError(ValueError):
    """Profile data cannot belong to an actual hypersurface."""


class MissingSectionalDataError(ValueError):
    """An operation needs mu_section values the profile does not carry."""


@dataclass
class PolResult:
    """A polar degree with its provenance: which formula produced it and
    the labeled integer contributions that sum to it."""

    pol: int
    method: str
    breakdown: list[tuple[str, int]]

    def to_dict(self) -> dict:
        return {
            "pol": self.pol,
            "method": self.method,
            "breakdown": [[label, value] for label, value in self.breakdown],
        }


def bezout_bound(n: int, d: int) -> int:
    """(d-1)^n, the polar degree of a smooth hypersurface and the maximal
    possible value for any degree-d hypersurface in P^n."""
    return (d - 1) ** n


def _finalize(pol: int, method: str, breakdown: list[tuple[str, int]], n: int, d: int) -> PolResult:
    assert pol == sum(v for _, v in breakdown)
    if pol < 0 or pol > bezout_bound(n, d):
        raise InconsistentProfileError(
            f"polar degree {pol} outside [0, {bezout_bound(n, d)}] for n={n}, d={d}: inconsistent profile"
        )
    return PolResult(pol=pol, method=method, breakdown=breakdown)


def pol_isolated(profile: SingularityProfile) -> PolResult:
    """Polar degree for isolated singularities only:
    (d-1)^n minus the sum of all Milnor numbers."""
    if profile.curves:
        raise ValueError("pol_isolated requires a profile without curve components")
    n, d = profile.n, profile.d
    breakdown: list[tuple[str, int]] = [("(d-1)^n", bezout_bound(n, d))]
    for k, point in enumerate(profile.isolated):
        breakdown.append((f"-mu(p{k + 1})", -point.mu))
    pol = sum(v for _, v in breakdown)
    return _finalize(pol, "isolated-formula", breakdown, n, d)


def curve_coefficient(curve: CurveComponent, d: int) -> int:
    """Weight of a curve component's transversal Milnor number:
    2*genus + gamma + (d+1)*degree - 2."""
    return 2 * curve.genus + curve.gamma + (d + 1) * curve.degree - 2


def _special_chi_sum(profile: SingularityProfile) -> int:
    return sum(p.chi_fiber - 1 for c in profile.curves for p in c.special_points)


def _pol_one_dim_raw(profile: SingularityProfile) -> tuple[int, list[tuple[str, int]]]:
    n, d = profile.n, profile.d
    breakdown: list[tuple[str, int]] = [("(d-1)^n", bezout_bound(n, d))]
    iso = -sum(p.mu for p in profile.isolated)
    breakdown.append(("-sum mu(isolated)", iso))
    for k, curve in enumerate(profile.curves):
        c = curve_coefficient(curve, d)
        breakdown.append((f"-c*mu_transversal (curve {k + 1})", -c * curve.mu_transversal))
    breakdown.append(("(-1)^n * sum (chi_fiber - 1)", (-1) ** n * _special_chi_sum(profile)))
    pol = sum(v for _, v in breakdown)
    return pol, breakdown


def pol_one_dim(profile: SingularityProfile) -> PolResult:
    """Polar degree for an at most 1-dimensional singular locus:

        (d-1)^n - sum mu_p - sum c_i * mu_transversal_i
                + (-1)^n * sum (chi_fiber(q) - 1)

    with c_i = 2*genus_i + gamma_i + (d+1)*degree_i - 2.  Reduces to
    pol_isolated when there are no curve components."""
    pol, breakdown = _pol_one_dim_raw(profile)
    return _finalize(pol, "one-dim-formula", breakdown, profile.n, profile.d)


def chi_smooth(n: int, d: int) -> int:
    """Euler characteristic of a smooth degree-d hypersurface in P^n."""
    if n < 1 or d < 1:
        raise ValueError("chi_smooth requires n >= 1 and d >= 1")
    numerator = 1 + (-1) ** n * (d - 1) ** (n + 1)
    if numerator % d:
        raise ArithmeticError(f"chi_smooth({n}, {d}): non-integer result, implementation bug")
    return n + 1 - numerator // d


def chi_hypersurface(profile: SingularityProfile) -> int:
    """Euler characteristic of the hypersurface the profile describes.

    chi_smooth(n, d) corrected by the singular data; the axis-point count
    of each curve component is d * degree."""
    n, d = profile.n, profile.d
    chi = chi_smooth(n, d)
    sign = (-1) ** n
    for curve in profile.curves:
        chi += sign * (2 * curve.genus + curve.gamma + curve.axis_points(d) - 2) * curve.mu_transversal
    chi -= _special_chi_sum(profile)
    chi += sign * sum(p.mu for p in profile.isolated)
    return chi


def chi_slice(profile: SingularityProfile) -> int:
    """Euler characteristic of the section by a generic hyperplane.

    The section has isolated singularities: degree_i points on each curve
    component, each with the transversal Milnor number."""
    n, d = profile.n, profile.d
    chi = chi_smooth(n - 1, d) if n >= 2 else 0
    chi += (-1) ** (n - 1) * sum(c.degree * c.mu_transversal for c in profile.curves)
    return chi


def consistency_check(profile: SingularityProfile) -> bool:
    """Self-test identity tying the three routes together:

        chi_hypersurface - chi_slice == 1 + (-1)^(n-1) * pol

    True for every profile; a False return means an implementation bug."""
    pol, _ = _pol_one_dim_raw(profile)
    lhs = chi_hypersurface(profile) - chi_slice(profile)
    rhs = 1 + (-1) ** (profile.n - 1) * pol
    return lhs == rhs


def union_pol(pol1: int, pol2: int, n: int, chi_affine_intersection: int) -> int:
    """Polar degree of a union of two hypersurfaces in P^n from the parts:

        pol1 + pol2 + (-1)^n * (chi(V1 and V2 minus a generic hyperplane) - 1)
    """
    result = pol1 + pol2 + (-1) ** n * (chi_affine_intersection - 1)
    if result < 0:
        raise InconsistentProfileError(f"union polar degree {result} negative: inconsistent inputs")
    return result


def alpha_jump(
    mu_section: int,
    branch_multiplicities: Sequence[int],
    mu_transversals: Sequence[int],
) -> int:
    """Milnor number jump at a point of the singular curve:

        mu(section at p) - sum over local branches of mult * mu_transversal

    Non-negative for genuine hypersurface data."""
    if len(branch_multiplicities) != len(mu_transversals) or not branch_multiplicities:
        raise ValueError("branch multiplicity and transversal Milnor lists must have equal length >= 1")
    value = mu_section - sum(m * t for m, t in zip(branch_multiplicities, mu_transversals))
    if value < 0:
        raise InconsistentProfileError(
            f"negative Milnor jump {value} (mu_section={mu_section}): inconsistent local data"
        )
    return value


def _point_alphas(profile: SingularityProfile, strict: bool = True) -> list[int]:
    """Per-point jump invariants: mu_section at isolated points, alpha_jump
    at curve special points.  strict=False skips points without data."""
    alphas: list[int] = []
    for point in profile.isolated:
        if point.mu_section is None:
            if strict:
                raise MissingSectionalDataError("isolated point lacks mu_section")
            continue
        alphas.append(point.mu_section)
    for curve in profile.curves:
        for sp in curve.special_points:
            if sp.mu_section is None:
                if strict:
                    raise MissingSectionalDataError("special point lacks mu_section")
                continue
            mults = sp.branch_multiplicities or (1,) * sp.branch_count
            alphas.append(alpha_jump(sp.mu_section, mults, (curve.mu_transversal,) * len(mults)))
    return alphas


def lower_bounds(profile: SingularityProfile) -> int:
    """Largest per-point jump invariant: a lower bound for the polar degree
    of any hypersurface with this profile that is not a cone."""
    return max(_point_alphas(profile, strict=True), default=0)


def homaloidal_filter(profile: SingularityProfile) -> bool:
    """Necessary condition for polar degree 1: every isolated point and
    every special point has jump invariant exactly 1."""
    return all(a == 1 for a in _point_alphas(profile, strict=True))


def alpha_beta_split(profile: SingularityProfile) -> tuple[int, int]:
    """Split the polar degree as (sum of point jumps, remainder).

    The remainder is carried only as the difference; it has no independent
    computation route here."""
    alpha_total = sum(_point_alphas(profile, strict=True))
    pol = pol_one_dim(profile).pol
    return alpha_total, pol - alpha_total


def yomdin_pol(profile: SingularityProfile) -> tuple[int, int]:
    """(polar degree of a generic hyperplane slice, polar degree of the
    deformation that trades the singular curve for isolated points).

    Slice: (d-1)^(n-1) - sum degree_i * mu_transversal_i, using the
    generic-slice intersection count degree_i for each component.
    Deformation: (d-1) times the slice value."""
    n, d = profile.n, profile.d
    pol_slice = bezout_bound(n - 1, d) - sum(c.degree * c.mu_transversal for c in profile.curves)
    return pol_slice, (d - 1) * pol_slice


def yomdin_inequality(profile: SingularityProfile) -> bool:
    """True iff pol <= (d-1) * pol(slice) and the slice Milnor total fits
    under (d-1)^(n-1)."""
    n, d = profile.n, profile.d
    pol = pol_one_dim(profile).pol
    _, pol_deformed = yomdin_pol(profile)
    slice_milnor = sum(c.degree * c.mu_transversal for c in profile.curves)
    return pol <= pol_deformed and slice_milnor <= bezout_bound(n - 1, d)


def yomdin_local_mu(mu_slice: int, N: int, branch_data: Sequence[tuple[int, int]]) -> int:
    """Milnor number of g + s*l^N for a germ g with 1-dimensional singular
    locus and empty polar locus relative to l:

        -mu(g restricted to l=0) + N * sum d_j * mu_transversal_j

    over the local branches (d_j = intersection multiplicity with l=0)."""
    if N < 2:
        raise ValueError("yomdin_local_mu requires N >= 2")
    value = -mu_slice + N * sum(dj * muj for dj, muj in branch_data)
    if value < 0:
        raise InconsistentProfileError(f"negative local Milnor number {value}: inconsistent data")
    return value


def yomdin_transversal_mu(mu_perp: int, d: int) -> int:
    """Specialization to a generic slice point of a smooth branch:
    one branch, multiplicity 1, slice Milnor number mu_perp, N = d."""
    return yomdin_local_mu(mu_perp, d, [(1, mu_perp)])


def cone_chi_fiber(n: int, d: int, transversal_mus: Sequence[int]) -> int:
    """Euler characteristic of the local Milnor fiber at the apex of the
    cone in P^n over a degree-d hypersurface in P^(n-1) with isolated
    singularities of the given Milnor numbers:

        1 + (-1)^(n-1) * ((d-1)^n - d * sum mu)

    (The fiber is a d-fold cyclic cover of the base complement, which
    pins the constant and the sign; with this value the one-dimensional
    formula telescopes to polar degree 0 for every cone.)"""
    return 1 + (-1) ** (n - 1) * (bezout_bound(n, d) - d * sum(transversal_mus))


def cone_profile(n: int, d: int, transversal_mus: Sequence[int]) -> SingularityProfile:
    """Profile of the cone over a hypersurface with isolated singularities.

    Each base singularity contributes a line through the apex (genus 0,
    degree 1, one branch at the apex).  The apex is one shared special
    point; its chi_fiber is recorded on the first line and neutral entries
    (chi_fiber 1) keep the branch bookkeeping on the others so the shared
    point is counted exactly once.  An empty Milnor list describes the
    cone over a smooth hypersurface, whose apex is an isolated singular
    point of Milnor number (d-1)^n."""
    mus = list(transversal_mus)
    if not mus:
        apex_mu = bezout_bound(n, d)
        if apex_mu == 0:
            return SingularityProfile.smooth(n, d)
        return SingularityProfile(n=n, d=d, isolated=(IsolatedPoint(mu=apex_mu),))
    chi_apex = cone_chi_fiber(n, d, mus)
    curves = []
    for i, mu in enumerate(mus):
        chi = chi_apex if i == 0 else 1
        curves.append(
            CurveComponent(
                genus=0,
                degree=1,
                mu_transversal=mu,
                special_points=(SpecialPoint(chi_fiber=chi, branch_count=1),),
            )
        )
    return SingularityProfile(n=n, d=d, curves=tuple(curves))


def cone_pol_check(n: int, d: int, transversal_mus: Sequence[int]) -> bool:
    """True iff the cone profile evaluates to polar degree 0."""
    profile = cone_profile(n, d, transversal_mus)
    if profile.curves:
        return pol_one_dim(profile).pol == 0
    return pol_isolated(profile).pol == 0


def semicontinuity_expectation(pol_special: int, pol_nearby: int) -> bool:
    """Polar degree can only grow under small deformations of fixed degree:
    True iff pol_nearby >= pol_special."""
    return pol_nearby >= pol_special
