"""Batch experiment runner: every pipeline as a subcommand.

Forms are passed as comma-separated coefficients, highest degree first
(three numbers for a quadratic, five for a quartic).  Every run emits a
JSON summary carrying the version, the seed, and a hash of the effective
configuration (timestamps excluded), so identical configurations yield
byte-identical artifacts.

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 resource exhaustion.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import sys
import time

from . import classes, counting, forms, oracle, verify

VERSION = "0.1.0"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_RESOURCE = 3


class ConfigError(Exception):
    pass


def parse_quartic(text: str) -> forms.QuarticForm:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 5:
        raise ConfigError(f"quartic needs 5 coefficients, got {len(parts)}")
    try:
        return forms.QuarticForm(*(int(p) for p in parts))
    except ValueError as e:
        raise ConfigError(f"bad quartic {text!r}: {e}")


def parse_quadratic(text: str) -> forms.QuadraticForm:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ConfigError(f"quadratic needs 3 coefficients, got {len(parts)}")
    try:
        return forms.QuadraticForm(*(int(p) for p in parts))
    except ValueError as e:
        raise ConfigError(f"bad quadratic {text!r}: {e}")


def parse_ladder(text: str) -> list[int]:
    try:
        out = [int(float(p)) for p in text.split(",") if p.strip()]
    except ValueError as e:
        raise ConfigError(f"bad ladder {text!r}: {e}")
    if not out or any(b <= a for a, b in zip(out, out[1:])):
        raise ConfigError("ladder must be non-empty and strictly increasing")
    return out


def load_config_file(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"bad config line: {line!r}")
            k, v = line.split("=", 1)
            out[k.strip()] = v.strip()
    return out


def config_hash(cfg: dict) -> str:
    clean = {k: v for k, v in cfg.items() if k != "timestamp"}
    return hashlib.sha256(
        json.dumps(clean, sort_keys=True).encode()
    ).hexdigest()[:16]


def emit_summary(args, payload: dict, outfile=None) -> dict:
    cfg = {k: str(v) for k, v in vars(args).items() if k != "func"}
    doc = {
        "version": VERSION,
        "seed": getattr(args, "seed", None),
        "config": cfg,
        "config_hash": config_hash(cfg),
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
        **payload,
    }
    text = json.dumps(doc, indent=2, default=str)
    if outfile:
        with open(outfile, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return doc


def _policy(args) -> counting.HeightPolicy:
    return counting.HeightPolicy(args.policy)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_invariants(args) -> int:
    F = parse_quartic(args.form)
    t = forms.invariants(F)
    payload = {"form": str(F), "I": t.I, "J": t.J, "disc": t.disc}
    res = forms.hessian_sqrt(F)
    if res is not None:
        f, c = res
        payload["hessian_divisor"] = f.coeffs()
        payload["hessian_scale"] = c
    payload["splitting_type"] = forms.splitting_type(F).value
    if not F.is_zero():
        payload["irreducible_over_Q"] = forms.is_irreducible_Q(F)
    emit_summary(args, payload, args.out)
    return EXIT_OK


def cmd_reduce(args) -> int:
    f = parse_quadratic(args.form)
    g, T = classes.reduce_form(f)
    emit_summary(
        args,
        {"form": f.coeffs(), "reduced": g.coeffs(), "transform": T.entries()},
        args.out,
    )
    return EXIT_OK


def cmd_classgroup(args) -> int:
    D = args.D
    G = classes.ClassGroup(D)
    els = [c.rep.coeffs() for c in G.elements]
    table = {}
    for c1 in G.elements:
        for c2 in G.elements:
            table[f"{c1.rep.coeffs()}*{c2.rep.coeffs()}"] = G.compose(c1, c2).rep.coeffs()
    emit_summary(
        args,
        {"disc": -D, "h2": len(G), "classes": els, "composition": table},
        args.out,
    )
    return EXIT_OK


def cmd_family(args) -> int:
    f = parse_quadratic(args.form)
    fc = counting.count_Nf(f, args.ibound)
    rows = []
    from .counting import ellipse_points
    from .families import family_coefficients, family_invariant, FamilyPoint

    for (A, B) in ellipse_points(f, args.ibound):
        coeffs = family_coefficients(f, A, B)
        I, _ = family_invariant(FamilyPoint(f, A, B))
        F = forms.QuarticForm(*coeffs)
        rows.append([A, B, *coeffs, I, forms.is_irreducible_Q(F)])
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["A", "B", "a4", "a3", "a2", "a1", "a0", "I", "irreducible"])
            w.writerows(rows)
    emit_summary(
        args,
        {
            "form": f.coeffs(),
            "ibound": args.ibound,
            "points": fc.points,
            "irreducible_points": fc.irreducible_points,
            "primitive_points": fc.primitive_points,
            "irreducible_orbits": fc.irreducible_orbits,
        },
        args.out,
    )
    return EXIT_OK


def _run_ladder(args, kind: str) -> int:
    ladder = parse_ladder(args.ladder)
    policy = _policy(args)
    reports = []
    counter = counting.count_N if kind == "N" else counting.count_M
    for X in ladder:
        if kind == "N":
            reports.append(counter(X, policy, workers=args.threads))
        else:
            reports.append(counter(X, policy))
    lad = counting.LadderReport(
        kind,
        policy.mode,
        reports,
        *(counting.fit_ladder(reports) if len(reports) >= 2 else (0.0, 0.0)),
        counting.C1_STATED if kind == "N" else counting.C2_STATED,
    )
    if args.csv:
        counting.write_count_csv(args.csv, reports)
    emit_summary(args, counting.ladder_summary_json(lad), args.out)
    return EXIT_OK


def cmd_count_n(args) -> int:
    return _run_ladder(args, "N")


def cmd_count_m(args) -> int:
    return _run_ladder(args, "M")


def cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "oracle-equivalence" and args.xmax:
        xs = tuple(x for x in (2000, 10000, 20000) if x <= args.xmax)
        kwargs["xs"] = xs or (args.xmax,)
    if args.suite == "identities":
        kwargs["seed"] = args.seed
        kwargs["trials"] = args.trials
    res = verify.run_suite(args.suite, **kwargs)
    payload = {
        "suite": res.name,
        "passed": res.passed,
        "checks": res.checks,
        "failures": res.failures[:50],
        "findings": res.findings[:50],
        "stats": res.stats,
    }
    emit_summary(args, payload, args.out)
    print(res.summary(), file=sys.stderr)
    return EXIT_OK if res.passed else EXIT_VERIFY_FAILED


def cmd_audit_constants(args) -> int:
    ladder = parse_ladder(args.ladder)
    res = verify.suite_constants(
        ladder=tuple(ladder), audit_ladder=tuple(ladder[-3:])
    )
    payload = {
        "suite": res.name,
        "passed": res.passed,
        "failures": res.failures[:50],
        "findings": res.findings[:50],
        "stats": res.stats,
    }
    emit_summary(args, payload, args.out)
    return EXIT_OK if res.passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value config file")
    common.add_argument("--seed", type=int, default=20260809)
    common.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("JZERO_THREADS", "1")),
    )
    common.add_argument("--out", help="write the JSON summary here instead of stdout")
    ap = argparse.ArgumentParser(
        prog="jzero",
        description="Enumerate, classify and count GL2(Z)-orbits of integral "
        "binary quartic forms with vanishing J-invariant.",
        parents=[common],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    p = add("invariants", "I, J, disc and Hessian data of a quartic")
    p.add_argument("form")
    p.set_defaults(func=cmd_invariants)

    p = add("reduce", "Gauss-reduce a positive definite quadratic")
    p.add_argument("form")
    p.set_defaults(func=cmd_reduce)

    p = add("classgroup", "class group of discriminant -D")
    p.add_argument("D", type=int)
    p.set_defaults(func=cmd_classgroup)

    p = add("family", "enumerate one family inside the I-bound")
    p.add_argument("form")
    p.add_argument("--ibound", type=int, required=True)
    p.add_argument("--csv", help="write per-point CSV here")
    p.set_defaults(func=cmd_family)

    for name, fn in (("count-n", cmd_count_n), ("count-m", cmd_count_m)):
        p = add(name, f"orbit counts over an X ladder ({name})")
        p.add_argument("--ladder", required=True, help="comma separated X values")
        p.add_argument("--policy", choices=["disc", "absI"], default="disc")
        p.add_argument("--csv", help="write X,D,points,orbits CSV here")
        p.set_defaults(func=fn)

    p = add("verify", "run a named verification suite")
    p.add_argument(
        "suite",
        choices=sorted(verify.SUITES),
    )
    p.add_argument("--xmax", type=int, help="cap the oracle-equivalence ladder")
    p.add_argument("--trials", type=int, default=10000)
    p.set_defaults(func=cmd_verify)

    p = add("audit-constants", "asymptotic constants over a ladder")
    p.add_argument("--ladder", required=True)
    p.set_defaults(func=cmd_audit_constants)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if args.config:
            cfg = load_config_file(args.config)
            for k, v in cfg.items():
                if hasattr(args, k) and f"--{k}" not in (argv or sys.argv):
                    cur = getattr(args, k)
                    setattr(args, k, type(cur)(v) if cur is not None else v)
        return args.func(args)
    except ConfigError as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except (MemoryError, RecursionError) as e:
        print(f"resource exhaustion: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
