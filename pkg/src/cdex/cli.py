"""
Command-line toolkit.

Commands: solve, verify, oracle alpha, oracle props, dv, simulate, gen,
bench.  Instances are JSON files: {"L": 7, "has_sets": [[1,3,4,6,7], ...]}.

Exit codes: 0 all requested checks passed; 1 invalid instance or arguments;
2 a verification/check failed; 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bench, dv, im, model, oracle, rlnc
from .model import EvalContext, InstanceError
from .sumrate import local_recovery, lower_bound

EXIT_OK = 0
EXIT_BAD_INSTANCE = 1
EXIT_CHECK_FAILED = 2
EXIT_INTERNAL = 3


def _default_seed() -> int:
    return int(os.environ.get("CDEX_SEED", "0"))


def _parse_rates(text: str, K: int):
    rates = tuple(int(x) for x in text.split(","))
    if len(rates) != K or any(r < 0 for r in rates):
        raise InstanceError("need %d comma-separated nonnegative rates" % K)
    return rates


def _parse_range(text: str):
    if ".." in text:
        a, b = text.split("..", 1)
        return range(int(a), int(b) + 1)
    k = int(text)
    return range(k, k + 1)


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def _jsonable(value):
    if isinstance(value, frozenset):
        return sorted(value)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _tie_config(name: str) -> im.TieBreakConfig:
    return im.PAPER_TRACE_CONFIG if name == "paper-trace" else im.DEFAULT_CONFIG


def cmd_solve(args) -> int:
    inst = model.load(args.file)
    result = im.solve(inst, alpha0=args.alpha, cfg=_tie_config(args.tie_break),
                      k_cap=args.k_cap, seed=args.seed)
    payload = {"alpha": result.alpha, "rates": list(result.rates),
               "gamma": result.gamma}
    if args.trace:
        payload["trace"] = [_jsonable(ev) for ev in result.trace.events]
    code = EXIT_OK
    if args.verify:
        ctx = EvalContext()
        check = oracle.verify_optimal(ctx, inst, result.rates) \
            if inst.num_clients <= oracle.ENUMERATION_MAX_K else \
            {"optimal": None,
             "feasible": oracle.is_feasible(ctx, inst, result.rates).feasible}
        payload["verify"] = {k: v for k, v in check.items() if k != "violated"}
        passed = check["feasible"] and check.get("optimal") is not False
        if not passed:
            code = EXIT_CHECK_FAILED
    _emit(args, payload, "alpha=%d rates=%s" % (
        result.alpha, ",".join(map(str, result.rates))))
    if args.trace and not args.json:
        for line in result.trace.lines():
            print(line)
    if args.verify and not args.json:
        print("verify: %s" % ("ok" if code == EXIT_OK else "FAILED"))
    return code


def cmd_verify(args) -> int:
    inst = model.load(args.file)
    rates = _parse_rates(args.rates, inst.num_clients)
    report = oracle.is_feasible(EvalContext(), inst, rates)
    if report.feasible:
        _emit(args, {"feasible": True}, "feasible")
        return EXIT_OK
    x, required, actual = report.violated
    _emit(args, {"feasible": False, "violated": sorted(x),
                 "required": required, "actual": actual},
          "infeasible: X={%s} required %d actual %d"
          % (",".join(map(str, sorted(x))), required, actual))
    return EXIT_CHECK_FAILED


def cmd_oracle_alpha(args) -> int:
    inst = model.load(args.file)
    res = local_recovery(EvalContext(), inst, sorted(inst.clients))
    _emit(args, {"alpha_star": res.alpha_star,
                 "alpha_frac": [res.alpha_frac.numerator, res.alpha_frac.denominator]},
          "alpha_star=%d" % res.alpha_star)
    return EXIT_OK


def cmd_oracle_props(args) -> int:
    seeds = _parse_range(args.seed_range)
    failures = []
    for s in seeds:
        inst = model.random_instance(args.clients, args.packets, args.density, s)
        result = im.solve(inst, seed=s)
        ctx = EvalContext()
        truth = local_recovery(ctx, inst, sorted(inst.clients)).alpha_star
        feas = oracle.is_feasible(ctx, inst, result.rates).feasible
        if result.alpha != truth or not feas or sum(result.rates) != result.alpha:
            failures.append({"seed": s, "alpha": result.alpha,
                             "alpha_star": truth, "feasible": feas})
    _emit(args, {"checked": len(seeds), "failures": failures},
          "checked %d seeds, %d failures%s"
          % (len(seeds), len(failures),
             "" if not failures else ": " + ", ".join(str(f["seed"]) for f in failures)))
    return EXIT_OK if not failures else EXIT_CHECK_FAILED


def cmd_dv(args) -> int:
    inst = model.load(args.file)
    result = dv.dv_solve(inst, excess_rule=args.excess_rule)
    text = "rates=%s integral=%s" % (
        ",".join(str(r) for r in result.rates), str(result.integral).lower())
    _emit(args, {"rates": [[r.numerator, r.denominator] for r in result.rates],
                 "alpha_frac": [result.alpha_frac.numerator,
                                result.alpha_frac.denominator],
                 "integral": result.integral}, text)
    if args.trace:
        def walk(call, depth):
            print("%smac(%s) budget=%s alpha=%s delta_r=%s absorbed=%s"
                  % ("  " * depth, sorted(call.members), call.budget,
                     call.alpha_frac, call.delta_r,
                     sorted(call.absorbed_by) if call.absorbed_by else None))
            for child in call.children:
                walk(child, depth + 1)
        walk(result.call_tree, 0)
    return EXIT_OK


def cmd_simulate(args) -> int:
    inst = model.load(args.file)
    rates = _parse_rates(args.rates, inst.num_clients)
    report = rlnc.simulate(inst, rates, q=args.q, trials=args.trials,
                           seed=args.seed)
    ok = report.successes == report.trials
    payload = {"successes": report.successes, "trials": report.trials}
    text = "successes=%d/%d" % (report.successes, report.trials)
    if not ok:
        trial, client, r = report.worst()
        payload["worst"] = {"trial": trial, "client": client, "rank": r}
        text += " worst: client %d rank %d (trial %d)" % (client, r, trial)
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_gen(args) -> int:
    inst = model.random_instance(args.clients, args.packets, args.density,
                                 args.seed)
    text = model.to_json(inst)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    records = bench.write_csv(
        bench.run(args.packets, _parse_range(args.clients), args.reps,
                  density=args.density, seed=args.seed, k_cap=args.k_cap),
        args.out)
    slope = bench.loglog_slope(records) if len({r.K for r in records}) >= 2 else None
    _emit(args, {"rows": len(records), "slope": slope},
          "wrote %d rows to %s%s" % (
              len(records), args.out,
              "" if slope is None else "; log-log slope of mean gamma vs K = %.3f" % slope))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdex",
        description="Minimum sum-rate solvers and verifiers for cooperative "
                    "data exchange without packet splitting")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")

    p = sub.add_parser("solve", help="run the iterative-merging solver")
    p.add_argument("file")
    p.add_argument("--alpha", type=int, default=0, help="initial alpha")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--verify", action="store_true",
                   help="check the result against the brute-force oracle")
    p.add_argument("--tie-break", choices=["lex", "paper-trace"], default="lex")
    p.add_argument("--k-cap", type=int, default=None,
                   help="cap merge-candidate subset size (benchmarking only)")
    p.add_argument("--seed", type=int, default=_default_seed())
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="cut-condition feasibility of a rate vector")
    p.add_argument("file")
    p.add_argument("--rates", required=True)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("alpha", help="exhaustive minimum sum-rate")
    q.add_argument("file")
    common(q)
    q.set_defaults(func=cmd_oracle_alpha)
    q = osub.add_parser("props", help="solver-vs-oracle property sweep")
    q.add_argument("--seed-range", required=True, help="e.g. 0..99")
    q.add_argument("--clients", type=int, default=5)
    q.add_argument("--packets", type=int, default=8)
    q.add_argument("--density", type=float, default=0.5)
    common(q)
    q.set_defaults(func=cmd_oracle_props)

    p = sub.add_parser("dv", help="divide-and-conquer fractional comparator")
    p.add_argument("file")
    p.add_argument("--excess-rule", choices=["lowest-block", "prefer-singletons"],
                   default="lowest-block")
    p.add_argument("--trace", action="store_true")
    common(p)
    p.set_defaults(func=cmd_dv)

    p = sub.add_parser("simulate", help="random linear coding verifier")
    p.add_argument("file")
    p.add_argument("--rates", required=True)
    p.add_argument("--q", type=int, default=rlnc.DEFAULT_Q)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=_default_seed())
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--clients", type=int, required=True)
    p.add_argument("--packets", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="gamma-count complexity benchmark")
    p.add_argument("--packets", type=int, default=50)
    p.add_argument("--clients", default="5..60", help="K range, e.g. 5..60")
    p.add_argument("--reps", type=int, default=20)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--k-cap", type=int, default=bench.DEFAULT_K_CAP)
    p.add_argument("--out", required=True)
    common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceError, FileNotFoundError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INSTANCE
    except (im.InfeasibleResultError, im.NoExcessBlockError,
            dv.DvInvariantError) as exc:
        print("internal invariant breach: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
