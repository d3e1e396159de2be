"""Command line: x1p <subcommand> --p P [...]. Exit 0 = verified, 1 = a claim failed, 2 = usage error."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import claims
from .eisenstein import s_series_all, t_series_all
from .export import KAPPA_MIN_ORDER, ConfigError, ReportLog, RunConfig, cas_script, export_equations, export_json
from .ideal import determine_kappa
from .series import series_to_json

THREADS_ENV = "X1P_THREADS"
SUBCOMMANDS = ("series", "verify-ideal", "kappa", "cusps", "fricke", "ode", "hilbert", "tangent", "export", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _tau(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _common(sp, order=True):
    sp.add_argument("--p", type=int, default=7)
    if order:
        sp.add_argument("--order", "--q-order", dest="order", type=int, default=30)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="x1p", description="Verify the Eisenstein-series equations of X_1(p).")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    sp = sub.add_parser("series", help="print the s_a, t_a q-expansions")
    _common(sp)
    sp.add_argument("--json", action="store_true", help="same as --format json")

    sp = sub.add_parser("verify-ideal", help="check every quadric generator on the q-expansions")
    _common(sp)

    sp = sub.add_parser("kappa", help="decide the kappa of the t-free quadrics")
    _common(sp)

    sp = sub.add_parser("cusps", help="cusp orbit and the t-free quadrics at the cusps")
    _common(sp)
    sp.add_argument("--json", action="store_true", help="same as --format json")
    sp.add_argument("--kappa", type=Fraction, default=None)

    sp = sub.add_parser("fricke", help="Fricke involution checks")
    _common(sp, order=False)
    sp.add_argument("--check", choices=("involution", "membership", "points"), default=None)

    sp = sub.add_parser("ode", help="standard solutions and the r-relations")
    _common(sp, order=False)
    sp.add_argument("--z-order", type=int, default=8)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--at", choices=("cusp",), default=None)
    g.add_argument("--tau", type=_tau, default=None)
    g.add_argument("--q-order", type=int, default=None)

    sp = sub.add_parser("hilbert", help="Hilbert function table (n, w, dim)")
    _common(sp, order=False)
    sp.add_argument("--max-degree", type=int, default=3)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--at", type=int, default=None, metavar="CUSP_INDEX")
    g.add_argument("--tau", type=_tau, default=None)

    sp = sub.add_parser("tangent", help="tangent-space nullity at the cusps or at tau")
    _common(sp, order=False)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--at", type=int, default=None, metavar="CUSP_INDEX")
    g.add_argument("--tau", type=_tau, default=None)

    sp = sub.add_parser("export", help="export the equations")
    sp.add_argument("--p", type=int, default=7)
    sp.add_argument("--order", "--q-order", dest="order", type=int, default=30)
    sp.add_argument("--format", choices=("json", "cas-script"), default="json")
    sp.add_argument("--kappa", type=Fraction, default=None)
    sp.add_argument("--output", "-o", default=None)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("all", help="run every check at one level")
    _common(sp)
    sp.add_argument("--z-order", type=int, default=8)
    sp.add_argument("--max-degree", type=int, default=3)
    return ap


def _config(args) -> RunConfig:
    try:
        return RunConfig(
            p=args.p,
            q_order=getattr(args, "order", None) or getattr(args, "q_order", None) or 30,
            z_order=getattr(args, "z_order", 8),
            max_degree=getattr(args, "max_degree", 3),
            tau=getattr(args, "tau", None),
            output="json" if getattr(args, "json", False) else args.format,
            seed=args.seed,
            kappa=getattr(args, "kappa", None),
        )
    except ConfigError as e:
        raise UsageError(str(e)) from None


def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be an integer") from None


def _fan_out(log: ReportLog, jobs: list):
    """Run (claim, fn) pairs; reports are sorted by claim id on output either way."""
    n = _threads()
    if n == 1:
        for claim, fn in jobs:
            log.run(claim, fn)
        return
    with ThreadPoolExecutor(max_workers=n) as ex:
        for f in [ex.submit(log.run, c, fn) for c, fn in jobs]:
            f.result()


def _emit_reports(log: ReportLog, fmt: str, out) -> int:
    if fmt == "json":
        json.dump({"ok": log.ok, "reports": [r.to_dict() for r in log.reports]}, out, sort_keys=True, indent=2)
        out.write("\n")
    else:
        for r in log.reports:
            out.write(r.line() + "\n")
    return 0 if log.ok else 1


def _series_cmd(cfg, args, out) -> int:
    lvl = cfg.level
    s = s_series_all(lvl, cfg.q_order)
    t = t_series_all(lvl, cfg.q_order)
    if args.json or cfg.output == "json":
        doc = {
            "p": lvl.p,
            "order": cfg.q_order,
            "s": {str(a): series_to_json(s[a]) for a in lvl.units()},
            "t": {str(a): series_to_json(t[a]) for a in lvl.units()},
        }
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        for a in lvl.units():
            out.write(f"s_{a} = {s[a]}\n")
        for a in lvl.units():
            out.write(f"t_{a} = {t[a]}\n")
    return 0


def _check_cusp_index(lvl, at):
    if at is not None and not 0 <= at < lvl.p - 1:
        raise UsageError(f"cusp index must lie in 0..{lvl.p - 2}")


def _jobs(cfg, args) -> list:
    lvl = cfg.level
    N = cfg.q_order
    cmd = args.cmd
    if cmd in ("kappa", "cusps", "all") and N < KAPPA_MIN_ORDER:
        raise UsageError(f"{cmd} needs --order at least {KAPPA_MIN_ORDER}")
    if cmd == "verify-ideal":
        return [("quad.rel", lambda: claims.claim_quad_rel(lvl, N)), ("sum-s", lambda: claims.claim_sum_s(lvl, N))]
    if cmd == "kappa":
        return [("kappa", lambda: claims.claim_kappa(lvl, N))]
    if cmd == "cusps":
        kappa = cfg.kappa if cfg.kappa is not None else determine_kappa(lvl, N)
        return [
            ("cusps", lambda: claims.claim_cusps(lvl)),
            (f"cusp-quadrics kappa={kappa}", lambda: claims.claim_cusp_quadrics(lvl, kappa)),
        ]
    if cmd == "fricke":
        table = {
            "involution": ("fricke-involution", lambda: claims.claim_fricke_involution(lvl)),
            "membership": ("fricke-membership", lambda: claims.claim_fricke_membership(lvl)),
            "points": ("fricke-points", lambda: claims.claim_fricke_points(lvl)),
        }
        return [table[args.check]] if args.check else list(table.values())
    if cmd == "ode":
        P = claims.ode_point(lvl, q_order=args.q_order, tau=args.tau)
        where = "tau" if args.tau is not None else ("q-series" if args.q_order else "cusp")
        return [(f"standard-solution {where} M={cfg.z_order}", lambda: claims.claim_standard_solution(P, cfg.z_order))]
    if cmd == "hilbert":
        _check_cusp_index(lvl, args.at)
        P = claims.hilbert_point(lvl, args.at, args.tau)
        return [(f"hilbert n<={cfg.max_degree}", lambda: claims.claim_hilbert(P, cfg.max_degree))]
    if cmd == "tangent":
        _check_cusp_index(lvl, args.at)
        return [("tangent", lambda: claims.claim_tangent(lvl, cfg.tau, args.at))]
    if cmd == "all":
        P = claims.ode_point(lvl)
        Q = claims.ode_point(lvl, q_order=12)
        return [
            ("quad.rel", lambda: claims.claim_quad_rel(lvl, N)),
            ("sum-s", lambda: claims.claim_sum_s(lvl, N)),
            ("elim.t", lambda: claims.claim_elim_t(lvl, N)),
            ("kappa", lambda: claims.claim_kappa(lvl, N)),
            ("cusps", lambda: claims.claim_cusps(lvl)),
            ("cusp-quadrics", lambda: claims.claim_cusp_quadrics(lvl, determine_kappa(lvl, N))),
            ("fricke-membership", lambda: claims.claim_fricke_membership(lvl)),
            ("fricke-involution", lambda: claims.claim_fricke_involution(lvl)),
            ("fricke-points", lambda: claims.claim_fricke_points(lvl)),
            ("standard-solution cusp", lambda: claims.claim_standard_solution(P, cfg.z_order)),
            ("standard-solution q-series", lambda: claims.claim_standard_solution(Q, cfg.z_order)),
            (f"hilbert n<={cfg.max_degree}", lambda: claims.claim_hilbert(P, cfg.max_degree)),
            ("tangent", lambda: claims.claim_tangent(lvl)),
            ("span-rank", lambda: claims.claim_span_rank(lvl, N)),
            ("theta", lambda: claims.claim_theta(lvl)),
        ]
    raise UsageError(f"unknown subcommand {cmd!r}")


def _export_cmd(cfg, args, out) -> int:
    doc = export_equations(cfg)
    text = export_json(doc) if args.format == "json" else cas_script(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def run_subcommand(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.cmd == "export":
            cfg = RunConfig(p=args.p, q_order=args.order, seed=args.seed, kappa=args.kappa, output=args.format)
            return _export_cmd(cfg, args, out)
        cfg = _config(args)
        if args.cmd == "series":
            return _series_cmd(cfg, args, out)
        log = ReportLog()
        _fan_out(log, _jobs(cfg, args))
        return _emit_reports(log, cfg.output, out)
    except (UsageError, ConfigError) as e:
        err.write(f"usage error: {e}\n")
        return 2


def main():
    sys.exit(run_subcommand())


if __name__ == "__main__":
    main()
