"""Command-line front end.

Subcommands: formula | oracle | verify | catalog | deform | slice-yomdin.
Exit codes are a stable contract:

    0  success
    1  a cross-check failed (catalog/verify/deform/slice-yomdin mismatch)
    2  inconsistent profile (formulas produced an impossible polar degree)
    3  input error (syntax, schema violation, non-homogeneous, bad degree)
    4  oracle trials did not reach consensus
    5  path budget exceeded

--json emits machine-readable output with sorted keys and no volatile
fields, so identical seeds give byte-identical output for any --workers.
"""

from __future__ import annotations

import json
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Optional

import click

from polardeg.catalog import SUITES, run_entry, suite_entries
from polardeg.formulas import (
    InconsistentProfileError,
    MissingSectionalDataError,
    alpha_beta_split,
    pol_one_dim,
    semicontinuity_expectation,
)
from polardeg.oracle import (
    MAX_PATHS,
    TrackerConfig,
    _sub_seed,
    generic_slice,
    random_linear_form,
    solve_count,
    verify as verify_pair,
)
from polardeg.poly import ParseError, Polynomial, deform as deform_poly, parse
from polardeg.profiles import ProfileSchemaError, SingularityProfile

EXIT_MISMATCH = 1
EXIT_INCONSISTENT = 2
EXIT_INPUT = 3
EXIT_NO_CONSENSUS = 4
EXIT_BUDGET = 5

# malformed invocations (missing options, bad flag values) are input
# errors under the exit-code contract, not click's default 2
click.UsageError.exit_code = EXIT_INPUT


def _emit_json(payload: dict) -> None:
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_profile(path: str) -> SingularityProfile:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return SingularityProfile.from_json(handle.read())
    except OSError as exc:
        _fail(EXIT_INPUT, f"cannot read profile: {exc}")
    except ProfileSchemaError as exc:
        _fail(EXIT_INPUT, f"profile schema violation: {exc}")
    raise AssertionError("unreachable")


def _parse_poly(text: str, n: int) -> Polynomial:
    if n < 1:
        _fail(EXIT_INPUT, "--n must be >= 1")
    try:
        return parse(text, n + 1)
    except ParseError as exc:
        _fail(EXIT_INPUT, f"cannot parse polynomial: {exc}")
    raise AssertionError("unreachable")


def _check_oracle_poly(f: Polynomial) -> None:
    if f.is_zero() or not f.is_homogeneous():
        _fail(EXIT_INPUT, "oracle input must be a nonzero homogeneous polynomial")
    if f.degree() < 2:
        _fail(EXIT_INPUT, "oracle input must have degree >= 2")
    budget = (f.degree() - 1) ** (f.nvars - 1)
    if budget > MAX_PATHS:
        _fail(EXIT_BUDGET, f"(d-1)^n = {budget} exceeds the supported budget of {MAX_PATHS} paths")


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError:
        pass
    try:
        return Fraction(Decimal(text))
    except (InvalidOperation, ValueError):
        _fail(EXIT_INPUT, f"cannot parse rational number {text!r}")
    raise AssertionError("unreachable")


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--seed", type=int, default=42, show_default=True, help="Seed for all randomized choices.")
@click.option("--workers", type=int, default=None, help="Oracle worker threads (never changes results).")
@click.pass_context
def main(ctx: click.Context, as_json: bool, seed: int, workers: Optional[int]) -> None:
    """Polar degrees of singular projective hypersurfaces, two ways."""
    ctx.obj = {"json": as_json, "seed": seed, "workers": workers}


@main.command("formula")
@click.argument("profile_path", type=click.Path())
@click.pass_context
def cmd_formula(ctx: click.Context, profile_path: str) -> None:
    """Evaluate the closed-form polar degree of a profile JSON file."""
    profile = _load_profile(profile_path)
    try:
        result = pol_one_dim(profile)
    except InconsistentProfileError as exc:
        _fail(EXIT_INCONSISTENT, str(exc))
        return
    split = None
    try:
        split = alpha_beta_split(profile)
    except (MissingSectionalDataError, InconsistentProfileError):
        pass
    if ctx.obj["json"]:
        payload = {"command": "formula", "pol": result.pol, "method": result.method,
                   "breakdown": [[label, value] for label, value in result.breakdown]}
        if split is not None:
            payload["alpha_total"], payload["beta_residual"] = split
        _emit_json(payload)
    else:
        click.echo(f"pol = {result.pol}")
        for label, value in result.breakdown:
            click.echo(f"  {label:<40} {value:+d}")
        if split is not None:
            click.echo(f"  point jumps total {split[0]}, residual {split[1]}")


@main.command("oracle")
@click.option("--poly", "poly_text", required=True, help="Homogeneous polynomial in x0..xn.")
@click.option("--n", "n", type=int, required=True, help="Projective ambient dimension.")
@click.option("--seed", type=int, default=None, help="Override the global seed.")
@click.option("--trials", type=int, default=5, show_default=True)
@click.option("--tol", type=float, default=1e-10, show_default=True, help="Endpoint residual tolerance.")
@click.pass_context
def cmd_oracle(ctx: click.Context, poly_text: str, n: int, seed: Optional[int], trials: int, tol: float) -> None:
    """Count a generic gradient-map fiber by homotopy continuation."""
    f = _parse_poly(poly_text, n)
    _check_oracle_poly(f)
    try:
        cfg = TrackerConfig(seed=seed if seed is not None else ctx.obj["seed"], trials=trials, newton_tol=tol)
    except ValueError as exc:
        _fail(EXIT_INPUT, str(exc))
        return
    report = solve_count(f, cfg, ctx.obj["workers"])
    if ctx.obj["json"]:
        _emit_json({"command": "oracle", "n": n, "poly": str(f), "report": report.to_dict()})
    else:
        click.echo(f"pol estimate = {report.pol_estimate}")
        click.echo(f"  per-trial counts: {report.per_trial_counts}")
        click.echo(f"  paths tracked: {report.paths_total}, discarded: {dict(sorted(report.discarded.items()))}")
        click.echo(f"  consensus: {'yes' if report.consensus else 'NO'}")
    if not report.consensus:
        sys.exit(EXIT_NO_CONSENSUS)


@main.command("verify")
@click.option("--poly", "poly_text", required=True)
@click.option("--profile", "profile_path", required=True, type=click.Path())
@click.pass_context
def cmd_verify(ctx: click.Context, poly_text: str, profile_path: str) -> None:
    """Cross-validate the formula route against the oracle route."""
    profile = _load_profile(profile_path)
    f = _parse_poly(poly_text, profile.n)
    _check_oracle_poly(f)
    try:
        report = verify_pair(f, profile, TrackerConfig(seed=ctx.obj["seed"]), ctx.obj["workers"])
    except InconsistentProfileError as exc:
        _fail(EXIT_INCONSISTENT, str(exc))
        return
    if ctx.obj["json"]:
        _emit_json({"command": "verify", "poly": str(f), **report.to_dict()})
    else:
        click.echo(f"formula pol = {report.formula.pol}")
        click.echo(f"oracle  pol = {report.oracle.pol_estimate} (trials {report.oracle.per_trial_counts})")
        click.echo("MATCH" if report.match else "MISMATCH")
    if not report.match:
        sys.exit(EXIT_MISMATCH)


@main.command("catalog")
@click.option("--suite", type=click.Choice(SUITES), default="cubic-surfaces", show_default=True)
@click.pass_context
def cmd_catalog(ctx: click.Context, suite: str) -> None:
    """Run every catalog entry of a suite through all available routes."""
    cfg = TrackerConfig(seed=ctx.obj["seed"])
    rows = [run_entry(entry, cfg, ctx.obj["workers"]) for entry in suite_entries(suite)]
    failed = [r for r in rows if not r.passed]
    if ctx.obj["json"]:
        _emit_json({"command": "catalog", "suite": suite, "rows": [r.to_dict() for r in rows],
                    "passed": len(rows) - len(failed), "failed": len(failed)})
    else:
        click.echo(f"{'name':<22} {'expected':>8} {'formula':>8} {'oracle':>7} {'union':>6}  status")
        for r in rows:
            formula = "-" if r.formula_pol is None else str(r.formula_pol)
            oracle = "-" if r.oracle is None else str(r.oracle.pol_estimate)
            union = "-" if r.union_pol_value is None else str(r.union_pol_value)
            click.echo(f"{r.name:<22} {r.expected_pol:>8} {formula:>8} {oracle:>7} {union:>6}  "
                       f"{'pass' if r.passed else 'FAIL'}")
        click.echo(f"{len(rows) - len(failed)}/{len(rows)} entries passed")
    if failed:
        sys.exit(EXIT_MISMATCH)


@main.command("deform")
@click.option("--poly", "poly_text", required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--l", "l_text", default=None, help="Linear form; seeded random when omitted.")
@click.option("--s-values", "s_values", default="1/1000,1/100,1/10", show_default=True)
@click.option("--d", "d", type=int, default=None, help="Power of the linear form; defaults to deg f.")
@click.pass_context
def cmd_deform(ctx: click.Context, poly_text: str, n: int, l_text: Optional[str], s_values: str, d: Optional[int]) -> None:
    """Sweep f + s*l^d over s and check the polar degree never drops."""
    f = _parse_poly(poly_text, n)
    _check_oracle_poly(f)
    seed = ctx.obj["seed"]
    linear = _parse_poly(l_text, n) if l_text is not None else random_linear_form(n + 1, _sub_seed(seed, 101))
    power = d if d is not None else f.degree()
    values = [_parse_fraction(part.strip()) for part in s_values.split(",") if part.strip()]
    if not values:
        _fail(EXIT_INPUT, "--s-values is empty")
    cfg = TrackerConfig(seed=seed)
    base = solve_count(f, cfg, ctx.obj["workers"])
    sweeps = []
    ok = True
    for s in values:
        try:
            deformed = deform_poly(f, linear, power, s)
        except ValueError as exc:
            _fail(EXIT_INPUT, str(exc))
            return
        report = solve_count(deformed, cfg, ctx.obj["workers"])
        holds = semicontinuity_expectation(base.pol_estimate, report.pol_estimate)
        ok = ok and holds
        sweeps.append({"s": str(s), "pol": report.pol_estimate, "consensus": report.consensus, "holds": holds})
    if ctx.obj["json"]:
        _emit_json({"command": "deform", "poly": str(f), "l": str(linear), "d": power,
                    "base_pol": base.pol_estimate, "sweep": sweeps, "semicontinuity": ok})
    else:
        click.echo(f"base pol = {base.pol_estimate}   (l = {linear})")
        for row in sweeps:
            click.echo(f"  s = {row['s']:<10} pol = {row['pol']}  {'ok' if row['holds'] else 'VIOLATION'}")
    if not ok:
        sys.exit(EXIT_MISMATCH)


@main.command("slice-yomdin")
@click.option("--poly", "poly_text", required=True)
@click.option("--n", "n", type=int, required=True)
@click.pass_context
def cmd_slice_yomdin(ctx: click.Context, poly_text: str, n: int) -> None:
    """Check pol(deformation) = (d-1) * pol(generic slice) numerically."""
    f = _parse_poly(poly_text, n)
    _check_oracle_poly(f)
    seed = ctx.obj["seed"]
    cfg = TrackerConfig(seed=seed)
    d = f.degree()
    sliced = generic_slice(f, _sub_seed(seed, 103))
    linear = random_linear_form(n + 1, _sub_seed(seed, 104))
    deformed = deform_poly(f, linear, d, Fraction(1, 8))
    base = solve_count(f, cfg, ctx.obj["workers"])
    slice_report = solve_count(sliced, cfg, ctx.obj["workers"])
    deformed_report = solve_count(deformed, cfg, ctx.obj["workers"])
    identity = deformed_report.pol_estimate == (d - 1) * slice_report.pol_estimate
    bound = base.pol_estimate <= deformed_report.pol_estimate
    if ctx.obj["json"]:
        _emit_json({"command": "slice-yomdin", "poly": str(f), "pol": base.pol_estimate,
                    "pol_slice": slice_report.pol_estimate, "pol_deformed": deformed_report.pol_estimate,
                    "factor": d - 1, "identity_holds": identity, "upper_bound_holds": bound})
    else:
        click.echo(f"pol(V) = {base.pol_estimate}")
        click.echo(f"pol(slice) = {slice_report.pol_estimate}, pol(deformation) = {deformed_report.pol_estimate}"
                   f" (factor {d - 1})")
        click.echo("identity holds" if identity else "IDENTITY FAILS")
        click.echo("upper bound holds" if bound else "UPPER BOUND FAILS")
    if not (identity and bound):
        sys.exit(EXIT_MISMATCH)


if __name__ == "__main__":
    main()
