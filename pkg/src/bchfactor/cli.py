"""Command-line front end: ``bchfactor <subcommand> [flags]``.

Every subcommand builds a report ``{config, entries}``; each entry is
``{name, anchor, status, details}``.  Text output renders the same data.
Exit codes: 0 when every check passes, 1 when some check fails, 2 for usage
or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .brackets import format_lie
from .chi import ChiVariant, chi, magnus_omega
from .core import bch, inverse
from .errors import AlgebraError
from .free_operated import FreeOperated, formal_p
from .hopf import (
    MAX_DEGREE, birkhoff_decompose, character_from_json, compose_antipode, even_odd_chi,
    even_odd_decompose, format_tree, grading_involution,
    is_pole_free, phi_plus_direct, pole_lift, rbar_map,
)
from .operators import formal_p_operator
from .polar import polar_series
from .sampling import resolve_seed
from . import verify as V

SUBCOMMANDS = ("bch", "chi", "factorize", "spitzer", "magnus", "evenodd", "birkhoff", "polar",
               "uniformize", "verify-all")


class UsageError(Exception):
    pass


def _lines(entry_lines, checks=None, name="", anchor="", **extra):
    checks = checks or V.Checks()
    return V.make_entry(name, anchor, checks, lines=entry_lines, **extra)


def _components(poly, start=1):
    return {d: poly.component(d) for d in range(start, poly.order + 1) if not poly.component(d).is_zero()}


# -- subcommands ---------------------------------------------------------------

def cmd_bch(args, cfg):
    A = FreeOperated("x y", order=cfg.degree)
    x, y = A.gens
    value = bch(x, y)
    lines = [f"degree {d}: {format_lie(c)}" for d, c in _components(value, 2).items()]
    lines.append(f"BCH(x,y) = {format_lie(value)}")
    return [_lines(lines, name="bch", anchor=f"BCH(x,y) through degree {cfg.degree}")]


def cmd_chi(args, cfg):
    if args.symbolic:
        A = FreeOperated("a", order=cfg.order)
        variant = ChiVariant(args.variant)
        theta = 0 if variant is ChiVariant.WEIGHT_ZERO else 1
        value = chi(A["a"], formal_p_operator(weight=theta), variant, theta=theta)
        lines = [f"chi^({d - 1})(a) = {format_lie(c)}" for d, c in _components(value).items()]
        return [_lines(lines, name="chi", anchor=f"chi({args.variant}) through degree {cfg.order}")]
    return [V.defining_identity(cfg), V.variant_agreement(cfg)]


def cmd_factorize(args, cfg):
    if args.symbolic:
        A = FreeOperated("a", order=cfg.order)
        g = chi(A["a"], formal_p_operator())
        minus, plus = formal_p(g), g - formal_p(g)
        lines = [f"P(chi(a)) = {format_lie(minus)}", f"P~(chi(a)) = {format_lie(plus)}"]
        return [_lines(lines, name="factorize", anchor="exp(a) = exp(P chi(a)) exp(P~ chi(a))")]
    return [V.factorization(cfg)]


def cmd_spitzer(args, cfg):
    return [V.atkinson(cfg), V.classical_spitzer(cfg), V.nc_spitzer(cfg), V.bogoliubov(cfg),
            V.multiplicative_idempotent(cfg)]


def cmd_magnus(args, cfg):
    if args.symbolic:
        A = FreeOperated("a", order=cfg.order)
        omega = magnus_omega(A["a"], formal_p_operator(weight=0))
        lines = [f"Omega^({d}) = {format_lie(c)}" for d, c in _components(omega).items()]
        return [_lines(lines, name="magnus", anchor=f"Omega[a] through degree {cfg.order}")]
    return [V.magnus(cfg)]


def _read_character(args, cfg, laurent: bool):
    if args.input:
        try:
            data = json.loads(Path(args.input).read_text())
            return character_from_json(data, cfg.degree, laurent=laurent)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read character from {args.input}: {exc}") from exc
    gen = V._gen(cfg, 100)
    if laurent:
        return V.random_laurent_character(gen, cfg.degree)
    return V.random_rational_character(gen, cfg.degree)


def _tree_lines(label, f):
    return [f"{label}({format_tree(t)}) = {v}" for t, v in f.tree_values().items()]


def cmd_evenodd(args, cfg):
    phi = _read_character(args, cfg, laurent=False)
    pm, pp = even_odd_decompose(phi)
    checks = V.Checks()
    checks.add("phi = phi- * phi+", pm * pp == phi)
    checks.add("phi-bar- = phi-^-1", grading_involution(pm) == inverse(pm))
    checks.add("phi-bar+ = phi+", grading_involution(pp) == pp)
    data = even_odd_chi(phi)
    checks.add("closed form = fixed-point chi", data["closed_form"] == data["fixed_point"])
    om, op, consistent = V.even_odd_by_degree(phi)
    checks.add("degree-by-degree solve agrees", om == pm and op == pp and consistent)
    lines = _tree_lines("phi", phi) + _tree_lines("phi-", pm) + _tree_lines("phi+", pp)
    return [_lines(lines, checks, name="evenodd", anchor="phi = phi- * phi+ (odd times even)")]


def cmd_birkhoff(args, cfg):
    phi = _read_character(args, cfg, laurent=True)
    sm, sp = birkhoff_decompose(phi)
    bm, bp = birkhoff_decompose(phi, method="bogoliubov")
    xm, xp = birkhoff_decompose(phi, method="exponential")
    R = pole_lift()
    e = phi.one()
    rbar = rbar_map(phi)
    checks = V.Checks()
    checks.add("three routes agree", sm == bm == xm and sp == bp == xp)
    checks.add("phi = phi-^-1 * phi+", compose_antipode(sm) * sp == phi)
    checks.add("phi+ pole free", is_pole_free(sp))
    checks.add("R~(Rbar) = 2e - phi+ and R(Rbar) = phi- - e",
               R.complement(rbar) == 2 * e - sp and R(rbar) == sm - e)
    checks.add("phi+ = e - R~(phi+ * (phi^-1 - e))", phi_plus_direct(phi) == sp)
    lines = _tree_lines("phi", phi) + _tree_lines("phi-", sm) + _tree_lines("phi+", sp)
    return [_lines(lines, checks, name="birkhoff", anchor="phi = phi-^-1 * phi+ with R = pole part")]


def cmd_polar(args, cfg):
    xm, xp = polar_series(order=cfg.order)
    lines = []
    for k, (a, b) in enumerate(zip(xm, xp), start=1):
        lines.append(f"X-^({k}) = {format_lie(a)}")
        lines.append(f"X+^({k}) = {format_lie(b)}")
    entries = [_lines(lines, name="polar-terms", anchor=f"X-(t), X+(t) through t^{cfg.order}")]
    if not args.symbolic:
        entries.append(V.polar(cfg))
    return entries


def cmd_uniformize(args, cfg):
    return [V.uniformization(cfg)]


def cmd_verify_all(args, cfg):
    return V.run_all(cfg)


COMMANDS = {
    "bch": cmd_bch, "chi": cmd_chi, "factorize": cmd_factorize, "spitzer": cmd_spitzer,
    "magnus": cmd_magnus, "evenodd": cmd_evenodd, "birkhoff": cmd_birkhoff, "polar": cmd_polar,
    "uniformize": cmd_uniformize, "verify-all": cmd_verify_all,
}


# -- plumbing -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--order", type=int, default=5, help="truncation order N (default 5)")
    common.add_argument("-d", "--degree", type=int, default=None,
                        help="degree cap D for trees / BCH degree (default 5)")
    common.add_argument("--seed", type=int, default=None, help="random seed (default 0; BCHFACTOR_SEED wins)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--symbolic", action="store_true", help="print symbolic expansions")
    parser = argparse.ArgumentParser(prog="bchfactor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "chi":
            p.add_argument("--variant", choices=[v.value for v in ChiVariant], default="two-sided")
        if name in ("evenodd", "birkhoff"):
            p.add_argument("--input", help="JSON map from tree literals to values")
    return parser


def make_config(args) -> V.RunConfig:
    degree = 5 if args.degree is None else args.degree
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    if not 1 <= degree <= MAX_DEGREE:
        raise UsageError(f"--degree must be between 1 and {MAX_DEGREE}")
    return V.RunConfig(order=args.order, degree=degree, seed=resolve_seed(args.seed))


def report_config(args, cfg) -> dict:
    out = {"subcommand": args.command, **cfg.to_dict(), "format": args.format,
           "symbolic": args.symbolic}
    for extra in ("variant", "input"):
        if getattr(args, extra, None) is not None:
            out[extra] = getattr(args, extra)
    return out


def render_text(report: dict) -> str:
    cfg = report["config"]
    head = " ".join(f"{k}={v}" for k, v in cfg.items() if k not in ("subcommand", "format"))
    out = [f"bchfactor {cfg['subcommand']} ({head})"]
    for e in report["entries"]:
        out.append(f"[{e['status']}] {e['name']}: {e['anchor']}")
        details = e["details"]
        for line in details.get("lines", []):
            out.append(f"    {line}")
        for row in details.get("checks", []):
            mark = "ok  " if row["passed"] == row["total"] else "FAIL"
            out.append(f"    {mark} {row['check']} ({row['passed']}/{row['total']})")
        for note in details.get("notes", []):
            out.append(f"    note: {note}")
        if "computed" in details:
            out.append(f"    computed: {details['computed']}")
    failed = sum(e["status"] != V.PASS for e in report["entries"])
    out.append(f"{len(report['entries'])} entries, {failed} failed")
    return "\n".join(out) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False) + "\n"
    return render_text(report)


def run(argv=None) -> tuple[int, dict | None]:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        if args.command == "bch" and args.degree is None:
            cfg = V.RunConfig(order=cfg.order, degree=cfg.order, seed=cfg.seed)
        entries = COMMANDS[args.command](args, cfg)
    except (UsageError, AlgebraError) as exc:
        print(f"bchfactor: error: {exc}", file=sys.stderr)
        return 2, None
    report = {"config": report_config(args, cfg), "entries": entries}
    text = render(report, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return (0 if all(e["status"] == V.PASS for e in entries) else 1), report


def main(argv=None) -> int:
    try:
        code, _ = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    return code


if __name__ == "__main__":
    sys.exit(main())
