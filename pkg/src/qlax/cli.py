"""Command line front end: ``qlax verify | orbit | params``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from qlax import degen, suites
from qlax.core import ParamsE8, State, evolve, evolve_inverse
from qlax.exact import (NonGeneric, Rng, bitsize, format_rational, parse_rational,
                        sample_distinct, sample_rational, sampling_bound)
from qlax.lax import sample_e8_draw

SYSTEMS = ("e8",) + degen.SYSTEMS
SUITE_CHOICES = suites.SUITES + ("all",)


class ConfigError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qlax", description="Exact checks for the E8 q-Painleve Lax pair.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--system", default="e8", type=str.lower, choices=SYSTEMS)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="output file (default: stdout)")

    v = sub.add_parser("verify", help="run verification suites")
    common(v)
    v.add_argument("--suite", default="all", choices=SUITE_CHOICES)
    v.add_argument("--trials", type=int, default=1)
    v.add_argument("--target", type=str.lower, choices=degen.SYSTEMS, default=None,
                   help="restrict the degeneration suite to one target system")
    v.add_argument("--epsilons", default=None, help="e.g. 1e-3,1e-4,1e-5,1e-6")

    o = sub.add_parser("orbit", help="iterate the evolution and write JSON lines")
    common(o)
    o.add_argument("--params", default=None, help="parameter file (default: random from --seed)")
    o.add_argument("--steps", type=int, default=10)

    p = sub.add_parser("params", help="emit a random generic parameter file")
    common(p)
    return parser


# parameter files --------------------------------------------------------------

def params_to_dict(params, s: State | None = None) -> dict:
    if isinstance(params, ParamsE8):
        d = {"system": "e8", "h1": format_rational(params.h1), "h2": format_rational(params.h2),
             "u": [format_rational(x) for x in params.u]}
    else:
        d = {"system": params.system, "b": [format_rational(x) for x in params.b],
             "t": format_rational(params.t)}
    if s is not None:
        d["f"] = format_rational(s.f)
        d["g"] = format_rational(s.g)
    return d


def params_from_dict(d: dict):
    """Parse a parameter file.  Returns (params, state or None)."""
    try:
        system = str(d.get("system", "e8")).lower()
        if system == "e8":
            params = ParamsE8(parse_rational(d["h1"]), parse_rational(d["h2"]),
                              [parse_rational(x) for x in d["u"]])
        elif system in degen.SYSTEMS:
            params = degen.ParamsDeg(system, [parse_rational(x) for x in d["b"]], parse_rational(d["t"]))
        else:
            raise ConfigError(f"unknown system {system!r}")
        state = None
        if "f" in d or "g" in d:
            state = State(parse_rational(d["f"]), parse_rational(d["g"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad parameter file: {exc!r}") from exc
    return params, state


def random_params(system: str, rng: Rng, attempts: int = 1000):
    """Random parameters and state passing the guards and one evolution step."""
    for _ in range(attempts):
        try:
            if system == "e8":
                params, s, _ = sample_e8_draw(rng)
                evolve(params, s)
            else:
                params, s, _ = degen.sample_deg_draw(system, rng)
                degen.deg_evolve(params, s)
            return params, s
        except NonGeneric:
            continue
    raise NonGeneric(f"no generic {system} parameters in {attempts} attempts")


# commands -------------------------------------------------------------------------

def _open_out(path):
    return open(path, "w") if path else sys.stdout


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise ConfigError("--trials must be >= 1")
    epsilons = degen.DEFAULT_EPSILONS
    if args.epsilons:
        try:
            epsilons = degen.parse_epsilons(args.epsilons)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"bad --epsilons: {exc}") from exc
        if len(epsilons) < 2:
            raise ConfigError("--epsilons needs at least two values")
    names = suites.SUITES if args.suite == "all" else (args.suite,)
    systems = degen.SYSTEMS
    if args.system != "e8":
        if args.suite not in ("degeneration", "all"):
            raise ConfigError(f"suite {args.suite!r} is only defined for e8")
        names = ("degeneration",)
        systems = (args.system,)
    if args.target:
        systems = (args.target,)
    rng = Rng(args.seed)
    results = {}
    for name in names:
        results[name] = [r.to_dict() for r in
                         suites.run_suite(name, args.trials, rng.child(name), systems, epsilons)]
    ok = all(r["ok"] for reps in results.values() for r in reps)
    report = {
        "seed": args.seed,
        "system": args.system,
        "suite": args.suite,
        "trials": args.trials,
        "bound": sampling_bound(),
        "epsilons": [format_rational(e) for e in epsilons],
        "suites": results,
        "ok": ok,
    }
    out = _open_out(args.out)
    try:
        out.write(json.dumps(report, sort_keys=True, indent=1) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0 if ok else 1


def orbit_record(k: int, params, s: State) -> dict:
    values = [s.f, s.g] + ([params.h1, params.h2, *params.u] if isinstance(params, ParamsE8)
                           else [*params.b, params.t])
    return {"step": k, "params": params_to_dict(params), "f": format_rational(s.f),
            "g": format_rational(s.g), "bitsize": max(bitsize(x) for x in values)}


def cmd_orbit(args) -> int:
    if args.params:
        try:
            with open(args.params) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read parameter file: {exc}") from exc
        params, s = params_from_dict(data)
        if s is None:
            s = State(sample_rational(Rng(args.seed)), sample_rational(Rng(args.seed)))
    else:
        params, s = random_params(args.system, Rng(args.seed))
    if isinstance(params, ParamsE8):
        forward, backward = evolve, evolve_inverse
    else:
        forward, backward = degen.deg_evolve, degen.deg_evolve_inverse
    move = forward if args.steps >= 0 else backward
    sign = 1 if args.steps >= 0 else -1
    out = _open_out(args.out)
    try:
        out.write(json.dumps(orbit_record(0, params, s), sort_keys=True) + "\n")
        for k in range(1, abs(args.steps) + 1):
            try:
                params, s = move(params, s)
            except NonGeneric as exc:
                print(f"non-generic at step {sign * k}: {exc.where}; last good step {sign * (k - 1)}",
                      file=sys.stderr)
                return 1
            out.write(json.dumps(orbit_record(sign * k, params, s), sort_keys=True) + "\n")
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_params(args) -> int:
    try:
        params, s = random_params(args.system, Rng(args.seed))
    except NonGeneric as exc:
        print(f"error: {exc.where}", file=sys.stderr)
        return 1
    d = params_to_dict(params, s)
    d["seed"] = args.seed
    out = _open_out(args.out)
    try:
        out.write(json.dumps(d, sort_keys=True, indent=1) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


COMMANDS = {"verify": cmd_verify, "orbit": cmd_orbit, "params": cmd_params}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        sampling_bound()
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        parser.print_usage(sys.stderr)
        print(f"qlax: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"qlax: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
