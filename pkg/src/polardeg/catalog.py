"""Regression catalog: named hypersurfaces with expected polar degrees.

Entries come from the classification of reduced cubic surfaces plus the
two worked line-singularity examples; each carries a profile (closed-form
route), an equation (oracle route), or both, and reducible entries also
carry their factors so the union formula can be exercised against the
oracle on the parts.  The catalog ships as versioned JSON package data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from polardeg.formulas import pol_one_dim, union_pol
from polardeg.oracle import OracleReport, TrackerConfig, solve_count
from polardeg.poly import Polynomial, parse
from polardeg.profiles import ProfileSchemaError, SingularityProfile

CATALOG_VERSION = 1
SUITES = ("cubic-surfaces", "examples", "unions")


@dataclass(frozen=True)
class UnionSpec:
    """Factors of a reducible entry and the Euler characteristic of their
    intersection minus a generic hyperplane."""

    f1: str
    f2: str
    chi_affine_intersection: int


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int
    d: int
    expected_pol: int
    suites: tuple[str, ...]
    provenance: str
    equation: Optional[str] = None
    profile: Optional[SingularityProfile] = None
    union: Optional[UnionSpec] = None
    cone: bool = False

    def poly(self) -> Optional[Polynomial]:
        if self.equation is None:
            return None
        return parse(self.equation, self.n + 1)


@dataclass
class EntryResult:
    """Outcome of running one catalog entry through every available route."""

    name: str
    expected_pol: int
    formula_pol: Optional[int]
    oracle: Optional[OracleReport]
    union_pol_value: Optional[int]
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected_pol": self.expected_pol,
            "formula_pol": self.formula_pol,
            "oracle": self.oracle.to_dict() if self.oracle is not None else None,
            "union_pol": self.union_pol_value,
            "passed": self.passed,
        }


def _entry_from_dict(doc: dict) -> CatalogEntry:
    profile = None
    if doc.get("profile") is not None:
        profile = SingularityProfile.from_dict(doc["profile"])
    union = None
    if doc.get("union") is not None:
        u = doc["union"]
        union = UnionSpec(f1=u["f1"], f2=u["f2"], chi_affine_intersection=u["chi_affine_intersection"])
    entry = CatalogEntry(
        name=doc["name"],
        n=doc["n"],
        d=doc["d"],
        expected_pol=doc["expected_pol"],
        suites=tuple(doc["suites"]),
        provenance=doc["provenance"],
        equation=doc.get("equation"),
        profile=profile,
        union=union,
        cone=doc.get("cone", False),
    )
    if entry.equation is None and entry.profile is None:
        raise ProfileSchemaError(f"catalog entry {entry.name}: needs an equation or a profile")
    bound = (entry.d - 1) ** entry.n
    if not 0 <= entry.expected_pol <= bound:
        raise ProfileSchemaError(f"catalog entry {entry.name}: expected_pol outside [0, {bound}]")
    return entry


def load_catalog() -> list[CatalogEntry]:
    text = resources.files("polardeg").joinpath("data/catalog.json").read_text(encoding="utf-8")
    doc = json.loads(text)
    if doc.get("version") != CATALOG_VERSION:
        raise ProfileSchemaError(f"unsupported catalog version {doc.get('version')!r}")
    return [_entry_from_dict(item) for item in doc["entries"]]


def suite_entries(suite: str) -> list[CatalogEntry]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose one of {', '.join(SUITES)}")
    return [e for e in load_catalog() if suite in e.suites]


def _part_pol(f: Polynomial, cfg: TrackerConfig, workers: Optional[int]) -> int:
    # a hyperplane factor has polar degree (1-1)^n = 0; the oracle only
    # handles degree >= 2
    if f.degree() < 2:
        return 0
    return solve_count(f, cfg, workers).pol_estimate


def run_entry(entry: CatalogEntry, cfg: Optional[TrackerConfig] = None, workers: Optional[int] = None) -> EntryResult:
    """Run every route the entry supports and compare against expectations.

    Passing means: the profile formula (when present), the oracle count on
    the equation (when present, with trial consensus), and the union
    formula over oracle counts of the factors (when present) all equal the
    expected polar degree.
    """
    cfg = cfg or TrackerConfig()
    checks: list[bool] = []
    formula_pol: Optional[int] = None
    if entry.profile is not None:
        formula_pol = pol_one_dim(entry.profile).pol
        checks.append(formula_pol == entry.expected_pol)
    oracle_report: Optional[OracleReport] = None
    if entry.equation is not None:
        oracle_report = solve_count(entry.poly(), cfg, workers)
        checks.append(oracle_report.pol_estimate == entry.expected_pol and oracle_report.consensus)
    union_value: Optional[int] = None
    if entry.union is not None:
        nvars = entry.n + 1
        pol1 = _part_pol(parse(entry.union.f1, nvars), cfg, workers)
        pol2 = _part_pol(parse(entry.union.f2, nvars), cfg, workers)
        union_value = union_pol(pol1, pol2, entry.n, entry.union.chi_affine_intersection)
        checks.append(union_value == entry.expected_pol)
    return EntryResult(
        name=entry.name,
        expected_pol=entry.expected_pol,
        formula_pol=formula_pol,
        oracle=oracle_report,
        union_pol_value=union_value,
        passed=bool(checks) and all(checks),
    )
