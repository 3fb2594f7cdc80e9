"""Command-line interface.

Usage:
    qunivalent classify --params P.json --class C.json --function F.json
    qunivalent weights --params P.json --n 16
    qunivalent extremal --params P.json --class C.json --n 3
    qunivalent distortion --params P.json --class C.json --r 0.5 [--as-stated] [--sweep]
    qunivalent neighborhood --params P.json --class C.json [--f F.json --g G.json] [--gamma 0.5]
    qunivalent hadamard --params P.json --class C.json --f F.json --g G.json
    qunivalent integral --kind bernardi --q 1 --function F.json
    qunivalent verify --params P.json --class C.json --function F.json [--radii 0.5 --radii 0.9] [--slack-factor 5]
    qunivalent selfcheck --seed 0 --count 50

JSON goes to stdout; errors go to stderr with exit status 2. ``verify`` and
``selfcheck`` exit with status 1 when a cross-check is inconsistent.
"""

from __future__ import annotations

import csv
import json
import math
import sys
from pathlib import Path

import click

from . import classify as cls_
from . import geometry, operators, verify
from .errors import QUnivalentError
from .functions import TFunction, hadamard as hadamard_product
from .randomized import random_member, random_nonmember, random_setup, rng_from

DEFAULT_TRUNC = 16


def _load(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise click.BadParameter(f"cannot read JSON from {path}: {exc}") from exc


def _params(path: str) -> operators.OperatorParams:
    return operators.OperatorParams.from_dict(_load(path))


def _class(path: str) -> cls_.ClassParams:
    return cls_.ClassParams.from_dict(_load(path))


def _function(path: str) -> TFunction:
    return TFunction.from_dict(_load(path))


def _emit(obj) -> None:
    click.echo(json.dumps(obj, indent=2))


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (QUnivalentError, ValueError) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(2)


@click.group(cls=_Group)
def cli():
    """Coefficient criteria and sampling checks for S_m^{s,c}(mu, beta, delta)."""


params_opt = click.option("--params", "params_path", required=True, type=click.Path(exists=True),
                          help="OperatorParams JSON.")
class_opt = click.option("--class", "class_path", required=True, type=click.Path(exists=True),
                         help="ClassParams JSON {mu, beta, delta}.")


@cli.command()
@params_opt
@class_opt
@click.option("--function", "function_path", required=True, type=click.Path(exists=True))
@click.option("--tol", default=cls_.DEFAULT_TOL, show_default=True, type=float)
def classify(params_path, class_path, function_path, tol):
    """Membership report from the coefficient criterion."""
    f = _function(function_path)
    w = operators.lambda_weights(_params(params_path), f.trunc)
    _emit(cls_.theorem1_test(f, w, _class(class_path), tol).to_dict())


@cli.command()
@params_opt
@click.option("--n", "trunc", required=True, type=int, help="Highest index N.")
def weights(params_path, trunc):
    """CSV rows (n, Lambda_n) for n = 2..N."""
    w = operators.lambda_weights(_params(params_path), trunc)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "lambda"])
    for n, lam in enumerate(w.weights, start=2):
        writer.writerow([n, repr(lam)])


@cli.command()
@params_opt
@class_opt
@click.option("--n", "index", required=True, type=int)
def extremal(params_path, class_path, index):
    """The sharp single-term function z - A_n z^n."""
    if index < 2:
        raise click.BadParameter("--n must be >= 2")
    w = operators.lambda_weights(_params(params_path), index)
    _emit(cls_.extremal_function(index, w, _class(class_path)).to_dict())


@cli.command()
@params_opt
@class_opt
@click.option("--r", "radius", type=float, default=None)
@click.option("--as-stated", is_flag=True, help="Use the literal statement instead of the proof form.")
@click.option("--sweep", is_flag=True, help="Emit CSV over r = 0.05, 0.10, ..., 0.95.")
@click.option("--trunc", default=DEFAULT_TRUNC, show_default=True, type=int,
              help="Working range 2..N for the extremum over n.")
def distortion(params_path, class_path, radius, as_stated, sweep, trunc):
    """Distortion envelope for |Hf| and |(Hf)'| on |z| = r."""
    w = operators.lambda_weights(_params(params_path), trunc)
    cp = _class(class_path)
    if sweep:
        radii = [round(0.05 * k, 10) for k in range(1, 20)]
        click.echo(geometry.envelopes_to_csv(geometry.distortion_sweep(w, cp, radii, as_stated)), nl=False)
        return
    if radius is None:
        raise click.BadParameter("--r is required unless --sweep is given")
    _emit(geometry.distortion_envelope(radius, w, cp, as_stated).to_dict())


@cli.command()
@params_opt
@class_opt
@click.option("--f", "f_path", type=click.Path(exists=True))
@click.option("--g", "g_path", type=click.Path(exists=True))
@click.option("--gamma", type=float, default=None, help="Radius for zeta; defaults to d(f, g).")
@click.option("--trunc", default=DEFAULT_TRUNC, show_default=True, type=int)
def neighborhood(params_path, class_path, f_path, g_path, gamma, trunc):
    """Neighborhood distance, containment radius and proximity parameter."""
    cp = _class(class_path)
    f = _function(f_path) if f_path else None
    g = _function(g_path) if g_path else None
    if (f is None) != (g is None):
        raise click.BadParameter("--f and --g go together")
    if f is not None:
        trunc = max(f.trunc, 2)
    w = operators.lambda_weights(_params(params_path), trunc)
    out = {"theorem6_gamma": geometry.theorem6_radius(w, cp)}
    if f is not None:
        out["distance"] = geometry.neighborhood_distance(f, g)
        if gamma is None:
            gamma = out["distance"]
    if gamma is not None:
        out["gamma"] = gamma
        out["theorem7_zeta"] = geometry.theorem7_zeta(gamma, w, cp)
    _emit(out)


@cli.command()
@params_opt
@class_opt
@click.option("--f", "f_path", required=True, type=click.Path(exists=True))
@click.option("--g", "g_path", required=True, type=click.Path(exists=True))
def hadamard(params_path, class_path, f_path, g_path):
    """Hadamard product and the class parameter mu2 it is guaranteed to reach."""
    f, g = _function(f_path), _function(g_path)
    h = hadamard_product(f, g)
    cp = _class(class_path)
    w = operators.lambda_weights(_params(params_path), max(h.trunc, 2))
    oracle = geometry.hadamard_mu2_oracle(w, cp)
    _emit({
        "product": h.to_dict(),
        "mu2_formula": geometry.hadamard_mu2(w, cp),
        "mu2_oracle": None if math.isnan(oracle) else oracle,
        "mu2_terms": geometry.hadamard_mu2_terms(w, cp),
    })


@cli.command()
@click.option("--kind", type=click.Choice(["bernardi", "alpha"]), required=True)
@click.option("--q", type=float, default=None)
@click.option("--alpha", type=float, default=None)
@click.option("--function", "function_path", required=True, type=click.Path(exists=True))
def integral(kind, q, alpha, function_path):
    """Bernardi or alpha integral operator image."""
    f = _function(function_path)
    if kind == "bernardi":
        if q is None:
            raise click.BadParameter("--kind bernardi needs --q")
        out = operators.bernardi_integral(f, q)
    else:
        if alpha is None:
            raise click.BadParameter("--kind alpha needs --alpha")
        out = operators.alpha_integral(f, alpha)
    _emit(out.to_dict())


@cli.command(name="verify")
@params_opt
@class_opt
@click.option("--function", "function_path", required=True, type=click.Path(exists=True))
@click.option("--radii", type=float, multiple=True, help="Repeat for each radius.")
@click.option("--angles", type=int, default=verify.DEFAULT_ANGLES, show_default=True)
@click.option("--workers", type=int, default=None)
@click.option("--slack-factor", type=float, default=verify.DEFAULT_SLACK_FACTOR, show_default=True,
              help="Non-member slack is this times (1 - largest radius).")
def verify_cmd(params_path, class_path, function_path, radii, angles, workers, slack_factor):
    """Sample the defining inequality and cross-check it with the coefficient test."""
    f = _function(function_path)
    w = operators.lambda_weights(_params(params_path), f.trunc)
    cp = _class(class_path)
    grid = verify.sample_grid_from(radii, angles)
    check = verify.crosscheck(f, w, cp, grid, slack_factor=slack_factor, workers=workers)
    out = check.sample.to_dict() if check.sample else {}
    out.update(verdict=check.verdict, membership=check.membership.to_dict(),
               boundary_modulus=check.boundary_modulus, diagnostics=check.diagnostics)
    _emit(out)
    if not check.consistent:
        sys.exit(1)


@cli.command()
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--count", type=int, default=50, show_default=True)
def selfcheck(seed, count):
    """Randomized cross-checks: sampled members, non-members and sharpness."""
    rng = rng_from(seed)
    failures = []
    for i in range(count):
        _, w, cp = random_setup(rng)
        for label, f in (("member", random_member(rng, w, cp)), ("non-member", random_nonmember(rng, w, cp))):
            check = verify.crosscheck(f, w, cp)
            if not check.consistent:
                failures.append({"case": i, "kind": label, "diagnostics": check.diagnostics})
        for n in range(2, w.trunc + 1):
            rep = cls_.theorem1_test(cls_.extremal_function(n, w, cp), w, cp)
            if abs(rep.margin) / rep.rhs >= 1e-12:
                failures.append({"case": i, "kind": f"sharpness n={n}", "margin": rep.margin})
    _emit({"seed": seed, "count": count, "failures": failures})
    if failures:
        sys.exit(1)


def main():  # pragma: no cover
    cli()


if __name__ == "__main__":  # pragma: no cover
    main()
