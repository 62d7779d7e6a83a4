"""Command-line front end: run verification suites and write a JSON report.

Exit status is 0 when every check passes, 1 when a check fails (the report
holds the witness) and 2 for usage or configuration errors.
"""

import argparse
import json
import os
import sys
import tempfile

from . import checks
from ._kernels import BACKEND
from .catalogue import CATALOGUE, cochain
from .cohomology import ADJOINT, differential
from .sampling import SamplingPlan
from .symbols import momentum_degree_part, momentum_signature, reduce_at_r_zero

SCHEMA = "antibracket-report/1"


def _add_common(p):
    p.add_argument("--n", type=int, default=None, help="number of even/odd coordinate pairs")
    p.add_argument("--order", type=int, default=6, help="hbar truncation order")
    p.add_argument("--seed", type=int, default=7, help="random seed")
    p.add_argument("--trials", type=int, default=None, help="trials per check (default: acceptance size)")
    p.add_argument("--smoothness", type=int, default=4, help="spline smoothness class C^k of random bumps")
    p.add_argument("--Q", type=int, default=3, help="derivative order bound of the local ansatz")
    p.add_argument("--D", type=int, default=3, help="coefficient degree bound of the local ansatz")
    p.add_argument("--out", default="-", help="report path, '-' for standard output")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="antibracket", description="Exact verification of the antibracket superalgebra and its deformations."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-jacobi", help="Jacobi identity of a bracket")
    p.add_argument("bracket", choices=["classical", "even", "odd", "mixed"])
    p.add_argument("--with-even-term", action="store_true", help="mixed bracket: include the even deformation")
    _add_common(p)

    p = sub.add_parser("verify-cocycle", help="cocycle condition of a catalogue 2-form")
    p.add_argument("name", choices=sorted(CATALOGUE))
    p.add_argument("--plan", default=None, help="JSON sampling plan file (overrides --n/--seed/--trials)")
    _add_common(p)

    for name, text in (
        ("verify-d-squared", "nilpotency of the differential"),
        ("verify-decomposition", "component formulas of 1-form coboundaries"),
        ("verify-prop2", "obstruction polynomial and the second-order slice"),
        ("cohomology-local", "bounded local second cohomology"),
        ("verify-compactness", "non-compact values of the nonlocal cocycles"),
        ("report-all", "every acceptance suite"),
    ):
        _add_common(sub.add_parser(name, help=text))
    return parser


def _cocycle_with_plan(name, plan):
    M = cochain(name)

    def run():
        return checks._first_failure(
            checks._plan_cases(plan, 3, plan.kind), lambda *a: differential(M, ADJOINT, *a)
        ) + ({"plan": json.loads(plan.to_json())},)

    return [checks._timed(f"cocycle-{name}-plan", "the listed 2-forms are nontrivial cocycles", run)]


def _prop2_extras():
    sig = momentum_signature(1)
    residual = momentum_degree_part(reduce_at_r_zero(lambda p, q: sig.zero(), 1, sig), 2)
    return {"second_order_residual_F0_c1": residual.format()}


def run_command(args, cfg):
    cmd = args.command
    if cmd == "verify-jacobi":
        if args.bracket == "classical":
            return checks.jacobi_classical(cfg)
        if args.bracket == "even":
            return checks.even_deformation(cfg)
        if args.bracket == "odd":
            return [r for r in checks.odd_deformation(cfg) if r.name.startswith("jacobi-odd")]
        return checks.jacobi_mixed(cfg, args.with_even_term)
    if cmd == "verify-cocycle":
        if args.plan:
            with open(args.plan) as fh:
                return _cocycle_with_plan(args.name, SamplingPlan.from_json(fh.read()))
        return checks.cocycles(cfg, [args.name])
    if cmd == "verify-d-squared":
        return checks.run_suite("nilpotency", cfg)
    if cmd == "verify-decomposition":
        return checks.decomposition(cfg)
    if cmd == "verify-prop2":
        results = checks.prop2(cfg)
        results[0].details.update(_prop2_extras())
        return results
    if cmd == "cohomology-local":
        return checks.cohomology_local(cfg)
    if cmd == "verify-compactness":
        return checks.compactness(cfg)
    if cmd == "report-all":
        out = []
        for number in sorted(checks.CRITERIA):
            out.extend(checks.run_suite(checks.CRITERIA[number][0], cfg))
        return out
    raise ValueError(f"unknown command {cmd}")


def _write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".report-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def make_report(args, cfg, results):
    config = {
        "n": cfg.n,
        "order": cfg.order,
        "seed": cfg.seed,
        "trials": cfg.trials,
        "smoothness": cfg.smoothness,
        "Q": cfg.Q,
        "D": cfg.D,
    }
    command = {"name": args.command}
    labels = {"bracket": "bracket", "name": "cocycle", "with_even_term": "with_even_term", "plan": "plan"}
    for key, label in labels.items():
        if hasattr(args, key):
            command[label] = getattr(args, key)
    return {
        "schema": SCHEMA,
        "command": command,
        "config": config,
        "backend": BACKEND,
        "passed": all(r.passed for r in results),
        "checks": [r.to_dict() for r in results],
    }


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = checks.RunConfig(args.n, args.order, args.seed, args.trials, args.smoothness, args.Q, args.D)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        results = run_command(args, cfg)
    except (OSError, ValueError, KeyError) as exc:
        print(f"antibracket: error: {exc}", file=sys.stderr)
        return 2
    report = make_report(args, cfg, results)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        _write_atomic(args.out, text)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checked} checked, {r.seconds:.2f}s)", file=sys.stderr)
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
