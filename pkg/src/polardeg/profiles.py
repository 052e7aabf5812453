"""Declarative singularity profiles and their JSON schema.

A profile records everything the closed-form polar-degree machinery
consumes: ambient dimension n, hypersurface degree d, Milnor numbers of
isolated singular points, and for each singular-curve component its
normalization genus, degree, generic transversal Milnor number, and the
finitely many special points with their local fiber Euler characteristics
and branch data.

All invariants are enforced at construction time; loading from JSON
rejects unknown keys, non-integers, and out-of-range values with
ProfileSchemaError.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional


class ProfileSchemaError(ValueError):
    """The profile document violates the schema."""


def _check_int(value: Any, where: str, minimum: Optional[int] = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ProfileSchemaError(f"{where}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ProfileSchemaError(f"{where}: value {value} below minimum {minimum}")
    return value


@dataclass(frozen=True)
class IsolatedPoint:
    """An isolated singular point: its Milnor number, plus the Milnor number
    of a generic hyperplane section through it when known."""

    mu: int
    mu_section: Optional[int] = None

    def __post_init__(self) -> None:
        _check_int(self.mu, "isolated point mu", 1)
        if self.mu_section is not None:
            _check_int(self.mu_section, "isolated point mu_section", 1)


@dataclass(frozen=True)
class SpecialPoint:
    """A point on a singular curve where the transversal type degenerates.

    chi_fiber is the Euler characteristic of the local Milnor fiber there;
    branch_count the number of local branches of the carrying curve
    component; branch_multiplicities (optional, one per branch) feed the
    Milnor-jump computation together with mu_section, the Milnor number of
    a generic hyperplane section through the point.
    """

    chi_fiber: int
    branch_count: int = 1
    branch_multiplicities: Optional[tuple[int, ...]] = None
    mu_section: Optional[int] = None

    def __post_init__(self) -> None:
        _check_int(self.chi_fiber, "special point chi_fiber")
        _check_int(self.branch_count, "special point branch_count", 1)
        if self.branch_multiplicities is not None:
            mults = tuple(self.branch_multiplicities)
            object.__setattr__(self, "branch_multiplicities", mults)
            for m in mults:
                _check_int(m, "branch multiplicity", 1)
            if len(mults) != self.branch_count:
                raise ProfileSchemaError(
                    f"branch_multiplicities has {len(mults)} entries, expected branch_count={self.branch_count}"
                )
        if self.mu_section is not None:
            _check_int(self.mu_section, "special point mu_section", 1)


@dataclass(frozen=True)
class CurveComponent:
    """An irreducible component of the 1-dimensional singular locus."""

    genus: int
    degree: int
    mu_transversal: int
    special_points: tuple[SpecialPoint, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        _check_int(self.genus, "curve genus", 0)
        _check_int(self.degree, "curve degree", 1)
        _check_int(self.mu_transversal, "curve mu_transversal", 1)
        object.__setattr__(self, "special_points", tuple(self.special_points))

    @property
    def gamma(self) -> int:
        """Total number of local curve branches over all special points."""
        return sum(p.branch_count for p in self.special_points)

    def axis_points(self, d: int) -> int:
        """Intersection count with a generic degree-d hypersurface."""
        return d * self.degree


@dataclass(frozen=True)
class SingularityProfile:
    """Singularity data of a degree-d hypersurface in projective n-space."""

    n: int
    d: int
    isolated: tuple[IsolatedPoint, ...] = field(default_factory=tuple)
    curves: tuple[CurveComponent, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        _check_int(self.n, "profile n", 1)
        _check_int(self.d, "profile d", 1)
        object.__setattr__(self, "isolated", tuple(self.isolated))
        object.__setattr__(self, "curves", tuple(self.curves))

    @classmethod
    def smooth(cls, n: int, d: int) -> "SingularityProfile":
        return cls(n=n, d=d)

    def is_smooth(self) -> bool:
        return not self.isolated and not self.curves

    # -- JSON ---------------------------------------------------------------

    @classmethod
    def from_dict(cls, doc: Any) -> "SingularityProfile":
        if not isinstance(doc, dict):
            raise ProfileSchemaError(f"profile document must be an object, got {type(doc).__name__}")
        allowed = {"n", "d", "isolated", "curves"}
        unknown = set(doc) - allowed
        if unknown:
            raise ProfileSchemaError(f"unknown profile keys: {sorted(unknown)}")
        if "n" not in doc or "d" not in doc:
            raise ProfileSchemaError("profile requires keys 'n' and 'd'")
        n = _check_int(doc["n"], "n", 1)
        d = _check_int(doc["d"], "d", 1)
        isolated = tuple(_isolated_from_dict(item, i) for i, item in enumerate(_as_list(doc.get("isolated", []), "isolated")))
        curves = tuple(_curve_from_dict(item, i) for i, item in enumerate(_as_list(doc.get("curves", []), "curves")))
        return cls(n=n, d=d, isolated=isolated, curves=curves)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "isolated": [_isolated_to_dict(p) for p in self.isolated],
            "curves": [_curve_to_dict(c) for c in self.curves],
        }

    @classmethod
    def from_json(cls, text: str) -> "SingularityProfile":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ProfileSchemaError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(doc)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _as_list(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise ProfileSchemaError(f"{where}: expected an array")
    return value


def _isolated_from_dict(doc: Any, index: int) -> IsolatedPoint:
    where = f"isolated[{index}]"
    if not isinstance(doc, dict):
        raise ProfileSchemaError(f"{where}: expected an object")
    unknown = set(doc) - {"mu", "mu_section"}
    if unknown:
        raise ProfileSchemaError(f"{where}: unknown keys {sorted(unknown)}")
    if "mu" not in doc:
        raise ProfileSchemaError(f"{where}: missing key 'mu'")
    mu_section = doc.get("mu_section")
    if mu_section is not None:
        mu_section = _check_int(mu_section, f"{where}.mu_section", 1)
    return IsolatedPoint(mu=_check_int(doc["mu"], f"{where}.mu", 1), mu_section=mu_section)


def _isolated_to_dict(point: IsolatedPoint) -> dict:
    out: dict[str, int] = {"mu": point.mu}
    if point.mu_section is not None:
        out["mu_section"] = point.mu_section
    return out


def _special_from_dict(doc: Any, where: str) -> SpecialPoint:
    if not isinstance(doc, dict):
        raise ProfileSchemaError(f"{where}: expected an object")
    allowed = {"chi_fiber", "branch_count", "branch_multiplicities", "mu_section"}
    unknown = set(doc) - allowed
    if unknown:
        raise ProfileSchemaError(f"{where}: unknown keys {sorted(unknown)}")
    if "chi_fiber" not in doc:
        raise ProfileSchemaError(f"{where}: missing key 'chi_fiber'")
    mults = doc.get("branch_multiplicities")
    if mults is not None:
        mults = tuple(_check_int(m, f"{where}.branch_multiplicities[{k}]", 1) for k, m in enumerate(_as_list(mults, where)))
    mu_section = doc.get("mu_section")
    if mu_section is not None:
        mu_section = _check_int(mu_section, f"{where}.mu_section", 1)
    try:
        return SpecialPoint(
            chi_fiber=_check_int(doc["chi_fiber"], f"{where}.chi_fiber"),
            branch_count=_check_int(doc.get("branch_count", 1), f"{where}.branch_count", 1),
            branch_multiplicities=mults,
            mu_section=mu_section,
        )
    except ProfileSchemaError:
        raise
    except ValueError as exc:
        raise ProfileSchemaError(f"{where}: {exc}") from exc


def _special_to_dict(point: SpecialPoint) -> dict:
    out: dict[str, Any] = {"chi_fiber": point.chi_fiber, "branch_count": point.branch_count}
    if point.branch_multiplicities is not None:
        out["branch_multiplicities"] = list(point.branch_multiplicities)
    if point.mu_section is not None:
        out["mu_section"] = point.mu_section
    return out


def _curve_from_dict(doc: Any, index: int) -> CurveComponent:
    where = f"curves[{index}]"
    if not isinstance(doc, dict):
        raise ProfileSchemaError(f"{where}: expected an object")
    allowed = {"genus", "degree", "mu_transversal", "special_points"}
    unknown = set(doc) - allowed
    if unknown:
        raise ProfileSchemaError(f"{where}: unknown keys {sorted(unknown)}")
    for key in ("genus", "degree", "mu_transversal"):
        if key not in doc:
            raise ProfileSchemaError(f"{where}: missing key '{key}'")
    specials = tuple(
        _special_from_dict(item, f"{where}.special_points[{k}]")
        for k, item in enumerate(_as_list(doc.get("special_points", []), f"{where}.special_points"))
    )
    return CurveComponent(
        genus=_check_int(doc["genus"], f"{where}.genus", 0),
        degree=_check_int(doc["degree"], f"{where}.degree", 1),
        mu_transversal=_check_int(doc["mu_transversal"], f"{where}.mu_transversal", 1),
        special_points=specials,
    )


def _curve_to_dict(curve: CurveComponent) -> dict:
    return {
        "genus": curve.genus,
        "degree": curve.degree,
        "mu_transversal": curve.mu_transversal,
        "special_points": [_special_to_dict(p) for p in curve.special_points],
    }
