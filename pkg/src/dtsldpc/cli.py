"""Command-line front end.

Every subcommand takes a code either from ``--descriptor PATH`` (JSON) or from
inline parameters (``--n``, ``--k``, ``--p``, ``--ext``, ``--sets``, ...).
Randomized value assignment is driven by ``--seed`` (default 0), so identical
invocations give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, cycles, io
from .analysis import analyze, default_budget
from .construction import CodeDescriptor, build_base, random_values, sliding
from .dts import MODES, DifferenceTriangleSet, search_min_scope
from .field import make_field


class CLIError(Exception):
    pass


def parse_sets(text: str) -> tuple[tuple[int, ...], ...]:
    """``"1,2,6;1,2,4"`` -> ``((1, 2, 6), (1, 2, 4))``."""
    try:
        return tuple(tuple(int(x) for x in part.split(",")) for part in text.split(";") if part.strip())
    except ValueError as exc:
        raise CLIError(f"cannot parse sets {text!r}: {exc}") from None


def load_config_descriptor(args) -> CodeDescriptor:
    if args.descriptor:
        try:
            desc = io.load_descriptor(args.descriptor)
        except (OSError, json.JSONDecodeError) as exc:
            raise CLIError(f"cannot read descriptor: {exc}") from None
    else:
        needed = [name for name in ("n", "k", "p", "sets") if getattr(args, name) is None]
        if needed:
            raise CLIError("give --descriptor or inline --" + ", --".join(needed))
        F = make_field(args.p, args.ext)
        dts = DifferenceTriangleSet(parse_sets(args.sets), args.mode, args.d)
        values = args.value
        desc = CodeDescriptor(args.n, args.k, F, dts, args.variant, args.P, values)
    if args.random_values:
        if desc.variant != "support":
            raise CLIError("--random-values needs the support variant")
        desc = CodeDescriptor(
            desc.n, desc.k, desc.field, desc.dts, "support", None, random_values(desc.field, desc.dts, args.seed)
        )
    return desc


def emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def as_json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def budget_of(args) -> int:
    return args.budget if args.budget is not None else default_budget()


def cmd_construct(args) -> int:
    desc = load_config_descriptor(args)
    base = build_base(desc)
    dumps = io.matrix_dumps(base)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "descriptor.json").write_text(io.dump_descriptor(desc))
        for name, text in dumps.items():
            (out / name).write_text(text)
        return 0
    if args.format == "json":
        data = {"descriptor": desc.to_dict(), "hash": io.descriptor_hash(desc), "mu": base.mu}
        data.update({name[:-4]: text.splitlines() for name, text in dumps.items()})
        sys.stdout.write(as_json(data))
    else:
        for name, text in dumps.items():
            sys.stdout.write(f"# {name[:-4]}\n{text}")
    return 0


def cmd_analyze(args) -> int:
    base = build_base(load_config_descriptor(args))
    report = analyze(base, N=args.length, horizon=args.j, budget=budget_of(args))
    if args.format == "text":
        f = report.free
        lines = [
            f"(n,k,delta) = ({report.n},{report.k},{report.delta}), mu = {report.mu}",
            f"reduced: {report.reduced}, basic: {report.basic}",
            "column distances: " + " ".join(str(d) for d in f.profile),
            f"free distance: {f.value} ({f.status})",
            f"density at N={report.density_length}: {report.density}",
        ]
        emit("\n".join(lines) + "\n", args.out)
    else:
        emit(as_json(report.to_dict()), args.out)
    return 0


def cmd_cycles(args) -> int:
    base = build_base(load_config_descriptor(args))
    j = base.mu if args.j is None else args.j
    H = sliding(base, j).matrix
    enum = cycles.enumerate_cycles(H, lmax=args.lmax, budget=budget_of(args))
    report = cycles.cycle_report(H, enum)
    report["j"] = j
    if args.audit:
        report["minor_audits"] = [
            cycles.audit_minors(H, size, budget=budget_of(args)).to_dict() for size in (2, 3)
        ]
    if args.format == "text":
        lines = [f"window {H.rows}x{H.cols}, girth {report['girth']}"]
        for ell, info in report["by_length"].items():
            lines.append(f"ell={ell}: {info['count']} cycles, {info['frc_violations']} FRC violations")
        if report["budget_exceeded"]:
            lines.append("budget exceeded; enumeration incomplete")
        emit("\n".join(lines) + "\n", args.out)
    else:
        emit(as_json(report), args.out)
    return 0


def cmd_bounds(args) -> int:
    desc = load_config_descriptor(args)
    report = bounds.certify(desc, ell_cap=args.lmax or 8)
    if args.format == "text":
        lines = [
            f"{e.theorem}: {e.quantity} > {e.threshold} -> {'satisfied' if e.satisfied else 'not satisfied'}"
            for e in report.entries
        ]
        emit("\n".join(lines) + "\n", args.out)
    else:
        emit(as_json(report.to_dict()), args.out)
    return 0


def cmd_search_dts(args) -> int:
    if args.k is None or args.w is None:
        raise CLIError("search-dts needs --k and --w")
    found = search_min_scope(args.k, args.w, args.mode, args.scope_cap, args.d)
    if found is None:
        raise CLIError(f"no set collection with scope <= {args.scope_cap}")
    if args.format == "text":
        text = "{" + ", ".join("{" + ",".join(map(str, s)) + "}" for s in found.sets) + "}"
        emit(f"{text} scope {found.scope}\n", args.out)
    else:
        emit(as_json(dict(found.to_dict(), scope=found.scope)), args.out)
    return 0


def cmd_export(args) -> int:
    base = build_base(load_config_descriptor(args))
    j = base.mu if args.j is None else args.j
    H = sliding(base, j).matrix
    fmt = args.format or "alist"
    if fmt == "alist":
        emit(io.to_alist(H), args.out)
        if args.out:
            Path(args.out + ".values").write_text(io.alist_values(H))
    elif fmt == "text":
        emit(H.to_text(), args.out)
    else:
        emit(as_json({"j": j, "rows": H.rows, "cols": H.cols, "matrix": H.to_text().splitlines()}), args.out)
    return 0


COMMANDS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "cycles": cmd_cycles,
    "bounds": cmd_bounds,
    "search-dts": cmd_search_dts,
    "export": cmd_export,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("code")
    g.add_argument("--descriptor", help="descriptor JSON file")
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--p", type=int, help="field characteristic")
    g.add_argument("--ext", type=int, default=1, help="extension degree (q = p^ext)")
    g.add_argument("--sets", help='set collection, e.g. "1,2,6;1,2,4"')
    g.add_argument("--mode", choices=MODES, default="weak")
    g.add_argument("--d", type=int, help="modulus for the relaxed mode")
    g.add_argument("--variant", choices=("support", "alpha", "alphaP"), default="support")
    g.add_argument("--P", type=int, help="prime for the alphaP variant")
    g.add_argument("--value", type=int, help="constant value on every support position")
    g.add_argument("--random-values", action="store_true", help="seeded random support values")
    o = common.add_argument_group("run")
    o.add_argument("--out", help="output file (directory for construct)")
    o.add_argument("--format", choices=("json", "text", "alist"))
    o.add_argument("--lmax", type=int)
    o.add_argument("--budget", type=int, help="node budget (default: $DTSLDPC_BUDGET or 10^7)")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--j", type=int, help="truncation index")

    parser = argparse.ArgumentParser(prog="dtsldpc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "analyze":
            sp.add_argument("--length", type=int, help="codeword length N for the density")
        if name == "cycles":
            sp.add_argument("--audit", action="store_true", help="also audit 2x2 and 3x3 minors")
        if name == "search-dts":
            sp.add_argument("--w", type=int)
            sp.add_argument("--scope-cap", type=int, default=30)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "alist" and args.command != "export":
        parser.error("--format alist only applies to export")
    try:
        return COMMANDS[args.command](args)
    except (CLIError, ValueError, KeyError, TypeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"dtsldpc {args.command}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
