"""Command line entry point: ``ratbern verify | sweep-beta | norm | gen``.

Exit codes: 0 all non-quarantined checks passed, 1 some check failed,
2 bad configuration, unreadable input or unwritable output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import List, Optional, Sequence

import numpy as np

from .engine import Case, Tolerances, check_beta, run_suite
from .generators import InstanceSpec, extremal_instance, gen_batch
from .norms import norm_pair
from .rational import HypothesisError, RationalFn
from .suites import SUITES, run_named_suites

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """``"re,im"``, ``"mod@deg"`` or a plain real number."""
    text = text.strip()
    try:
        if "@" in text:
            mod, deg = text.split("@")
            return complex(float(mod) * np.exp(1j * math.radians(float(deg))))
        if "," in text:
            re, im = text.split(",")
            return complex(float(re), float(im))
        return complex(float(text))
    except ValueError as exc:
        raise ConfigError(f"cannot parse complex value {text!r}") from exc


def parse_floats(text: str) -> List[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise ConfigError(f"cannot parse number list {text!r}") from exc


def parse_ints(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise ConfigError(f"cannot parse integer list {text!r}") from exc


def _betas(values: Optional[Sequence[str]]) -> List[complex]:
    out = []
    for chunk in values or []:
        for item in chunk.split(";"):
            if item.strip():
                b = parse_complex(item)
                try:
                    check_beta(b)
                except HypothesisError as exc:
                    raise ConfigError(str(exc)) from exc
                out.append(b)
    return out


def _ks(text: str) -> List[float]:
    ks = parse_floats(text)
    if not ks or any(not k >= 1.0 for k in ks):
        raise ConfigError(f"every k must be >= 1, got {text!r}")
    return ks


def _load_instances(path: str) -> List[RationalFn]:
    try:
        with open(path) as fh:
            data = json.load(fh)
        if isinstance(data, dict) and "instances" in data:
            data = data["instances"]
        if isinstance(data, dict):
            data = [data]
        return [RationalFn.from_json(d) for d in data]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"cannot read instances from {path}: {exc}") from exc


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write {out}: {exc}") from exc


def _tolerances(args) -> Tolerances:
    kw = {}
    if args.tol_slack is not None:
        kw["slack"] = args.tol_slack
    if args.tol_identity is not None:
        kw["identity"] = args.tol_identity
    if any(v <= 0 for v in kw.values()):
        raise ConfigError("tolerances must be positive")
    return Tolerances(**kw)


def _echo(args) -> dict:
    skip = {"func", "out", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    betas = _betas(args.beta) or [0.0]
    ks = _ks(args.k)
    ns = parse_ints(args.n)
    a_values = parse_floats(args.a)
    if not ns or min(ns) < 1 or max(ns) > 30:
        raise ConfigError("n values must lie in 1..30")
    if not a_values or min(a_values) <= 1.0:
        raise ConfigError("pole values a must exceed 1")
    if args.instances < 0 or args.grid < 1:
        raise ConfigError("--instances must be >= 0 and --grid >= 1")
    instances = _load_instances(args.inp) if args.inp else None
    report = run_named_suites(
        names,
        grid_size=args.grid,
        tolerances=_tolerances(args),
        seed=args.seed,
        config=_echo(args),
        count=args.instances,
        ks=ks,
        betas=betas,
        ns=ns,
        a_values=a_values,
        max_n=max(ns) if args.suite == "sharpness" else args.max_n,
        instances=instances,
    )
    text = report.dumps() + "\n" if args.format == "json" else report.to_csv()
    _emit(text, args.out)
    c = report.counts
    print(
        f"{c['total']} reports: {c['pass']} pass, {c['fail']} fail, "
        f"{c['hypothesis_violations']} hypothesis violations, "
        f"{c['quarantined']} quarantined, {c['skipped']} skipped, "
        f"{c['equalities']} equalities",
        file=sys.stderr,
    )
    return report.exit_code


def default_beta_grid(moduli: int = 8, phases: int = 16) -> List[complex]:
    out = [0j]
    for m in np.linspace(0.0, 1.0, moduli)[1:]:
        for ph in range(phases):
            out.append(complex(m * np.exp(2j * math.pi * ph / phases)))
    return out


def cmd_sweep_beta(args) -> int:
    betas = _betas(args.beta) or default_beta_grid()
    ks = _ks(args.k)
    if args.inp:
        instances = [(i, r, k) for k in ks for i, r in enumerate(_load_instances(args.inp))]
    else:
        ns, a_values = parse_ints(args.n), parse_floats(args.a)
        if not a_values or min(a_values) <= 1.0:
            raise ConfigError("pole values a must exceed 1")
        instances = []
        for n in ns:
            for k in ks:
                for a in a_values:
                    instances.append((len(instances), extremal_instance(n, k, a), k))
    rows = []
    tol = _tolerances(args)
    for idx, r, k in instances:
        cases = [Case(r, k, b, idx) for b in betas]
        rep = run_suite(cases, ["thm21", "cor24"], args.grid, tol, args.seed)
        for ci, b in enumerate(betas):
            for cid in ("thm21", "cor24"):
                vals = [x.slack for x in rep.reports if x.case == ci and x.check_id == cid]
                rows.append(
                    {
                        "instance": idx,
                        "k": k,
                        "beta_mod": abs(b),
                        "beta_arg_deg": math.degrees(math.atan2(b.imag, b.real)) % 360.0 if b != 0 else 0.0,
                        "check_id": cid,
                        "min_slack": min(vals) if vals else None,
                    }
                )
    if args.format == "json":
        text = json.dumps({"seed": args.seed, "rows": rows}, indent=1) + "\n"
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["instance"], lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: (f"{v:.17g}" if isinstance(v, float) else v) for k, v in row.items()})
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def cmd_norm(args) -> int:
    if not args.inp:
        raise ConfigError("norm needs --in FILE")
    out = []
    for i, r in enumerate(_load_instances(args.inp)):
        nr, np_ = norm_pair(r)
        out.append({"instance": i, "r": nr.to_json(), "p": np_.to_json()})
    if args.format == "json":
        text = json.dumps(out, indent=1) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["instance", "which", "value", "argmax_theta", "samples_used", "refined"])
        for row in out:
            for which in ("r", "p"):
                e = row[which]
                w.writerow([row["instance"], which, f"{e['value']:.17g}",
                            f"{e['argmax_theta']:.17g}", e["samples_used"], e["refined"]])
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    ns = parse_ints(args.n)
    if len(ns) != 1:
        raise ConfigError("gen takes a single --n")
    ks = parse_floats(args.k)
    if len(ks) != 1:
        raise ConfigError("gen takes a single --k")
    try:
        spec = InstanceSpec(n=ns[0], k=ks[0], seed=args.seed, on_circle_prob=args.on_circle)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    insts = gen_batch(spec, args.instances)
    doc = {"spec": spec.to_json(), "instances": [r.to_json() for r in insts]}
    _emit(json.dumps(doc, indent=1) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--tol-slack", type=float, default=None)
    common.add_argument("--tol-identity", type=float, default=None)
    common.add_argument("--grid", type=int, default=128, help="circle points per instance")
    common.add_argument("--instances", type=int, default=10)

    parser = argparse.ArgumentParser(
        prog="ratbern",
        description="Verify Bernstein-type inequalities for rational functions with prescribed poles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--k", default="1,2", help="comma list of k >= 1")
    v.add_argument("--beta", action="append", help='"re,im" or "mod@deg"; repeat or separate with ";"')
    v.add_argument("--n", default="1,2,3", help="degrees of the extremal family (sharpness)")
    v.add_argument("--a", default="2,3", help="pole positions of the extremal family")
    v.add_argument("--max-n", type=int, default=8, help="largest degree of random instances")
    v.add_argument("--in", dest="inp", default=None, help="instance file written by gen")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep-beta", parents=[common], help="min slack over a grid of beta")
    s.add_argument("--k", default="1,2")
    s.add_argument("--beta", action="append")
    s.add_argument("--n", default="1,2,3")
    s.add_argument("--a", default="2,3")
    s.add_argument("--in", dest="inp", default=None)
    s.set_defaults(func=cmd_sweep_beta)

    nm = sub.add_parser("norm", parents=[common], help="circle norms of r and its numerator")
    nm.add_argument("--in", dest="inp", default=None)
    nm.set_defaults(func=cmd_norm)

    g = sub.add_parser("gen", parents=[common], help="write seeded random instances")
    g.add_argument("--n", default="5")
    g.add_argument("--k", default="1")
    g.add_argument("--on-circle", type=float, default=0.0, help="probability a zero sits on |z|=k")
    g.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"ratbern: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
