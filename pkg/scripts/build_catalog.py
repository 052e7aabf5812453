#!/usr/bin/env python3
"""Regenerate src/polardeg/data/catalog.json.

Every entry is checked on the spot: the profile must reproduce the
expected polar degree through the closed-form engine before it is written
out.  Reducible equations are expanded from their factors here so the
stored equation strings stay in the plain grammar (no parentheses).

Run from the repository root:  python scripts/build_catalog.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from polardeg.formulas import cone_profile, pol_isolated, pol_one_dim
from polardeg.poly import parse
from polardeg.profiles import (
    CurveComponent,
    IsolatedPoint,
    SingularityProfile,
    SpecialPoint,
)

N, D = 3, 3

# Simple singularity types on cubic surfaces: Milnor number and the Milnor
# number of a generic plane section through the point (A-types slice to a
# node, D/E-types to a cusp; values re-derived by tests/localmu.py).
ADE = {
    "A1": (1, 1), "A2": (2, 1), "A3": (3, 1), "A4": (4, 1), "A5": (5, 1),
    "D4": (4, 2), "D5": (5, 2), "E6": (6, 2),
}

# The complete isolated-singularity cubic-surface table: configuration of
# simple singularities -> polar degree 8 - sum(mu).
ISOLATED_ROWS = [
    ("A1", ["A1"], 7),
    ("2A1", ["A1", "A1"], 6),
    ("A2", ["A2"], 6),
    ("3A1", ["A1", "A1", "A1"], 5),
    ("A1+A2", ["A1", "A2"], 5),
    ("A3", ["A3"], 5),
    ("4A1", ["A1", "A1", "A1", "A1"], 4),
    ("A2+2A1", ["A2", "A1", "A1"], 4),
    ("A3+A1", ["A3", "A1"], 4),
    ("2A2", ["A2", "A2"], 4),
    ("A4", ["A4"], 4),
    ("D4", ["D4"], 4),
    ("A3+2A1", ["A3", "A1", "A1"], 3),
    ("2A2+A1", ["A2", "A2", "A1"], 3),
    ("A4+A1", ["A4", "A1"], 3),
    ("A5", ["A5"], 3),
    ("D5", ["D5"], 3),
    ("3A2", ["A2", "A2", "A2"], 2),
    ("A5+A1", ["A5", "A1"], 2),
    ("E6", ["E6"], 2),
]


def isolated_profile(types: list[str]) -> SingularityProfile:
    points = tuple(IsolatedPoint(mu=ADE[t][0], mu_section=ADE[t][1]) for t in types)
    return SingularityProfile(n=N, d=D, isolated=points)


def entry(name, expected, suites, provenance, *, profile=None, equation=None, union=None, cone=False):
    doc = {
        "name": name,
        "n": N,
        "d": D,
        "expected_pol": expected,
        "suites": list(suites),
        "provenance": provenance,
        "cone": cone,
    }
    if profile is not None:
        doc["profile"] = profile.to_dict()
    if equation is not None:
        doc["equation"] = equation
    if union is not None:
        doc["union"] = union
    return doc


def main() -> None:
    entries = []

    entries.append(entry(
        "smooth", 8, ["cubic-surfaces"],
        "smooth cubic surface: the full Bezout value (d-1)^n",
        profile=SingularityProfile.smooth(N, D),
        equation="x0^3+x1^3+x2^3+x3^3",
    ))

    for name, types, expected in ISOLATED_ROWS:
        entries.append(entry(
            name, expected, ["cubic-surfaces"],
            "cubic surface with this configuration of simple singularities; "
            "polar degree drops by the Milnor number total",
            profile=isolated_profile(types),
        ))

    entries.append(entry(
        "E6-tilde", 0, ["cubic-surfaces"],
        "cone over a smooth plane cubic: one singular point with mu = 8",
        profile=SingularityProfile(n=N, d=D, isolated=(IsolatedPoint(mu=8, mu_section=4),)),
        cone=True,
    ))

    # Irreducible cubics with a singular line.  Both carry transversal
    # type A1; the local fiber Euler characteristics at the special points
    # are 2 (fiber a 2-sphere) for the first and 5 (double-cover Euler
    # count of the one degenerate point) for the second.
    line_two_special = SingularityProfile(n=N, d=D, curves=(
        CurveComponent(genus=0, degree=1, mu_transversal=1, special_points=(
            SpecialPoint(chi_fiber=2, branch_count=1, branch_multiplicities=(1,), mu_section=2),
            SpecialPoint(chi_fiber=2, branch_count=1, branch_multiplicities=(1,), mu_section=2),
        )),
    ))
    entries.append(entry(
        "E1", 2, ["cubic-surfaces", "examples"],
        "singular line, transversal type A1, two special points with 2-sphere local fiber",
        profile=line_two_special,
        equation="x0^2*x2+x1^2*x3",
    ))

    line_one_special = SingularityProfile(n=N, d=D, curves=(
        CurveComponent(genus=0, degree=1, mu_transversal=1, special_points=(
            SpecialPoint(chi_fiber=5, branch_count=1, branch_multiplicities=(1,), mu_section=2),
        )),
    ))
    entries.append(entry(
        "E2", 1, ["cubic-surfaces"],
        "singular line, transversal type A1, one special point; the gradient map is birational",
        profile=line_one_special,
        equation="x0^2*x2+x0*x1*x3+x1^3",
    ))

    # Reducible cubics: quadric surface and plane factors.  Equations are
    # the expanded products; the union blocks carry the factors and the
    # Euler characteristic of (intersection minus a generic hyperplane).
    quadric = "x0*x3 - x1*x2"
    plane_generic = "x0 + x1 + x2 + 2*x3"  # not tangent to the quadric
    qp_profile = SingularityProfile(n=N, d=D, curves=(
        CurveComponent(genus=0, degree=2, mu_transversal=1),
    ))
    entries.append(entry(
        "QP", 2, ["cubic-surfaces", "unions"],
        "smooth quadric plus a transverse plane; singular along their smooth conic",
        profile=qp_profile,
        equation=str(parse(quadric, 4) * parse(plane_generic, 4)),
        union={"f1": quadric, "f2": plane_generic, "chi_affine_intersection": 0},
    ))

    # Tangent plane x3 = 0 touches the quadric at [1:0:0:0]; the
    # intersection is a pair of lines crossing there (affine chi = 1).
    qt_profile = SingularityProfile(n=N, d=D, curves=(
        CurveComponent(genus=0, degree=1, mu_transversal=1,
                       special_points=(SpecialPoint(chi_fiber=2, branch_count=1),)),
        CurveComponent(genus=0, degree=1, mu_transversal=1,
                       special_points=(SpecialPoint(chi_fiber=1, branch_count=1),)),
    ))
    entries.append(entry(
        "QT", 1, ["cubic-surfaces", "unions"],
        "smooth quadric plus a tangent plane; two singular lines crossing at the tangency "
        "point (its local fiber chi recorded once, neutral entry on the second line)",
        profile=qt_profile,
        equation=str(parse(quadric, 4) * parse("x3", 4)),
        union={"f1": quadric, "f2": "x3", "chi_affine_intersection": 1},
    ))

    cone_quadric = "x1*x3 - x2^2"
    plane_missing_apex = "x0 + x1 + x2 + x3"
    cp_profile = SingularityProfile(
        n=N, d=D,
        isolated=(IsolatedPoint(mu=1, mu_section=1),),
        curves=(CurveComponent(genus=0, degree=2, mu_transversal=1),),
    )
    entries.append(entry(
        "CP", 1, ["cubic-surfaces", "unions"],
        "quadric cone plus a plane missing the apex; smooth conic of A1 points plus the "
        "apex as an isolated node",
        profile=cp_profile,
        equation=str(parse(cone_quadric, 4) * parse(plane_missing_apex, 4)),
        union={"f1": cone_quadric, "f2": plane_missing_apex, "chi_affine_intersection": 0},
    ))

    entries.append(entry(
        "CN", 0, ["cubic-surfaces"],
        "cone over a one-node plane cubic (node checked by exact local Milnor count)",
        profile=cone_profile(N, D, [1]),
        equation="x2^2*x3 - x1^3 - x1^2*x3",
        cone=True,
    ))
    entries.append(entry(
        "CC", 0, ["cubic-surfaces"],
        "cone over a one-cusp plane cubic (cusp checked by exact local Milnor count)",
        profile=cone_profile(N, D, [2]),
        equation="x2^2*x3 - x1^3",
        cone=True,
    ))

    # Worked line-singularity example one dimension up: transversal type
    # A2, two special points with local fiber a wedge of two 3-spheres
    # (chi = -1), in projective 4-space.
    fourfold = {
        "name": "fourfold-line-A2",
        "n": 4,
        "d": 3,
        "expected_pol": 4,
        "suites": ["examples"],
        "provenance": "singular line with transversal type A2 and two special points "
                      "whose local fiber is a wedge of two 3-spheres",
        "cone": False,
        "profile": SingularityProfile(n=4, d=3, curves=(
            CurveComponent(genus=0, degree=1, mu_transversal=2, special_points=(
                SpecialPoint(chi_fiber=-1, branch_count=1, branch_multiplicities=(1,)),
                SpecialPoint(chi_fiber=-1, branch_count=1, branch_multiplicities=(1,)),
            )),
        )).to_dict(),
        "equation": "x0^2*x2 + x1^2*x3 + x4^3",
    }
    entries.append(fourfold)

    # Sanity: every stored profile must reproduce its expected value.
    for doc in entries:
        profile = SingularityProfile.from_dict(doc["profile"])
        if profile.curves:
            got = pol_one_dim(profile).pol
        else:
            got = pol_isolated(profile).pol
        assert got == doc["expected_pol"], (doc["name"], got, doc["expected_pol"])
        if doc.get("equation"):
            f = parse(doc["equation"], doc["n"] + 1)
            assert f.is_homogeneous() and f.degree() == doc["d"], doc["name"]

    out = Path(__file__).resolve().parent.parent / "src" / "polardeg" / "data" / "catalog.json"
    out.write_text(json.dumps({"version": 1, "entries": entries}, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out} with {len(entries)} entries")


if __name__ == "__main__":
    main()
