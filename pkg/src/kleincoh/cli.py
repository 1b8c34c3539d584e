"""Command-line interface.

Exit status: 0 on success, 1 on invalid input, 2 when a verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .f2 import BitMatrix, DimensionError, MatrixFormatError, NotInvolutionError, adapted_basis, dickson_invariant, inverse
from .klein import InvariantError, classify, model_matrix
from .moduli import em_column_series, moduli_report, rankr_presentation, stack_series
from .series import DEFAULT_TRUNCATION, PoincareSeries, render, series_of
from .steenrod import height_table, omega_bso_presentation, s_set
from .verify import Grid, run_all

MAX_CAP = 512

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _cap(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cap must be an integer, got {text!r}") from None
    if not 0 <= value <= MAX_CAP:
        raise argparse.ArgumentTypeError(f"cap must lie in 0..{MAX_CAP}")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_matrix(path: str) -> BitMatrix:
    if path == "-":
        return BitMatrix.loads(sys.stdin.read())
    try:
        with open(path) as fh:
            return BitMatrix.loads(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def cmd_classify(args, out) -> int:
    info = classify(args.g, args.n, args.a)
    if args.format == "json":
        print(_dump(info.to_json_obj()), file=out)
    else:
        print(f"type {info.curve_type.value} curve (g={args.g}, n={args.n}, a={args.a})", file=out)
        print(f"  g' = {info.g_prime}, c = {info.c}", file=out)
        print(f"  Dickson invariant D = {'undefined' if info.dickson is None else info.dickson}", file=out)
        print(f"  M-curve: {'yes' if info.is_m_curve else 'no'}", file=out)
    return EXIT_OK


def cmd_dickson(args, out) -> int:
    have_curve = None not in (args.g, args.n, args.a)
    if not have_curve and any(v is not None for v in (args.g, args.n, args.a)):
        raise UsageError("--g, --n and --a must be given together")
    if not have_curve and args.matrix is None:
        raise UsageError("give --g/--n/--a or --matrix")

    routes: dict[str, int | None] = {}
    if have_curve:
        routes["formula"] = classify(args.g, args.n, args.a).dickson
        model = model_matrix(args.g, args.n, args.a)
        if model is not None:
            routes["model"] = dickson_invariant(model)
    if args.matrix is not None:
        routes["matrix"] = dickson_invariant(_read_matrix(args.matrix))

    values = {v for v in routes.values() if v is not None}
    agree = len(values) <= 1
    if args.format == "json":
        print(_dump({"dickson": values.pop() if len(values) == 1 else None, "routes": routes, "agree": agree}), file=out)
    elif agree:
        print(values.pop() if values else "undefined", file=out)
    else:
        print(f"disagreement between routes: {routes}", file=out)
    return EXIT_OK if agree else EXIT_VERIFY


def cmd_basis(args, out) -> int:
    sigma = _read_matrix(args.matrix)
    basis = adapted_basis(sigma)
    c = basis.change_of_basis
    conj = c @ sigma @ inverse(c)
    if args.format == "json":
        obj = basis.to_json_obj()
        obj["normal_form"] = conj.to_json_obj()
        print(_dump(obj), file=out)
    else:
        print(f"D = {basis.dickson}, g = {basis.g}", file=out)
        for (tag, idx), k in zip(basis.roles, range(c.n_rows)):
            print(f"{tag}_{idx}: {''.join(map(str, c.row(k)))}", file=out)
        print("normal form:", file=out)
        print(conj, file=out)
    return EXIT_OK


def cmd_present(args, out) -> int:
    report = moduli_report(args.g_prime, args.n, args.rank, args.d, args.cap)
    if args.format == "json":
        print(_dump(report), file=out)
    else:
        pres = rankr_presentation(args.g_prime, args.n, args.rank, args.d)
        p = report["params"]
        print(f"curve (g={p['g']}, n={p['n']}, a=0), g'={p['g_prime']}, rank {p['r']}, degree {p['d']}", file=out)
        print(render(pres), file=out)
        print(f"P(t) = {PoincareSeries.from_json_obj(report['poincare'])}", file=out)
        print(f"checks: {report['checks']}", file=out)
    return EXIT_OK if report["checks"]["passed"] else EXIT_VERIFY


def cmd_omega_bso(args, out) -> int:
    pres = omega_bso_presentation(args.rank)
    table = height_table(args.rank)
    s = s_set(args.rank) if args.rank >= 2 else []
    series = series_of(pres, args.cap)
    if args.format == "json":
        obj = {
            "rank": args.rank,
            "presentation": pres.to_json_obj(),
            "heights": table,
            "S": s,
            "poincare": series.to_json_obj(),
        }
        print(_dump(obj), file=out)
    else:
        print(render(pres), file=out)
        for row in table:
            print(f"  w{row['k']}: degree {row['degree']}, nu = {row['nu']}, truncation exponent {row['exponent']}", file=out)
        print(f"S = {{{', '.join(f'w{k}' for k in s)}}}", file=out)
        print(f"P(t) = {series}", file=out)
    return EXIT_OK


def cmd_series(args, out) -> int:
    if args.preset == "so":
        series = series_of(omega_bso_presentation(args.rank), args.cap)
    else:
        if args.g_prime is None or args.n is None:
            raise UsageError(f"preset {args.preset} needs --g-prime and --n")
        fn = em_column_series if args.preset == "em" else stack_series
        series = fn(args.g_prime, args.n, args.rank, args.cap)
    if args.format == "json":
        print(_dump(series.to_json_obj()), file=out)
    else:
        print(series, file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    grid = Grid(args.max_gprime, args.max_n, args.max_rank, args.cap)
    results = run_all(grid)
    if args.format == "json":
        print(_dump([r.to_json_obj() for r in results]), file=out)
    else:
        for r in results:
            print(r.line(), file=out)
        print(f"{sum(r.ok for r in results)}/{len(results)} criteria passed", file=out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def cmd_sweep(args, out) -> int:
    status = EXIT_OK
    for gp in range(args.max_gprime + 1):
        for n in range(1, args.max_n + 1):
            if 2 * gp + n - 1 < 2:
                continue
            for r in range(1, args.max_rank + 1):
                report = moduli_report(gp, n, r, args.d, args.cap)
                if not report["checks"]["passed"]:
                    status = EXIT_VERIFY
                print(_dump(report), file=out)
    return status


def _add_format(p: argparse.ArgumentParser, default: str = "json") -> None:
    # one action per subcommand: parents=[...] would share it, and set_defaults leaks
    p.add_argument("--format", choices=("json", "text"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kleincoh", description="Mod-2 cohomology of moduli of real bundles on Klein surfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="type and derived invariants of (g, n, a)")
    _add_format(p)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("dickson", help="Dickson invariant from invariants or a matrix")
    _add_format(p)
    p.add_argument("--g", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--matrix", metavar="FILE", help="matrix JSON file, '-' for stdin")
    p.set_defaults(func=cmd_dickson)

    p = sub.add_parser("basis", help="adapted basis of an involution matrix")
    _add_format(p)
    p.add_argument("--matrix", metavar="FILE", required=True)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("present", help="cohomology presentation and Poincare series")
    _add_format(p)
    p.add_argument("--g-prime", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--cap", type=_cap, default=DEFAULT_TRUNCATION)
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("omega-bso", help="H*(Omega BSO(r)) with cup-one heights")
    _add_format(p)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--cap", type=_cap, default=DEFAULT_TRUNCATION)
    p.set_defaults(func=cmd_omega_bso)

    p = sub.add_parser("series", help="raw Poincare series")
    _add_format(p)
    p.add_argument("--preset", choices=("em", "stack", "so"), required=True)
    p.add_argument("--g-prime", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--cap", type=_cap, default=DEFAULT_TRUNCATION)
    p.set_defaults(func=cmd_series)

    for name, helptext, func in (
        ("check", "run the acceptance grid", cmd_check),
        ("sweep", "presentations over a grid as JSON lines", cmd_sweep),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_format(p, "text" if name == "check" else "json")
        p.add_argument("--max-gprime", type=int, default=4)
        p.add_argument("--max-n", type=int, default=6)
        p.add_argument("--max-rank", type=int, default=8)
        p.add_argument("--cap", type=_cap, default=DEFAULT_TRUNCATION)
        if name == "sweep":
            p.add_argument("--d", type=int, default=0)
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InvariantError, MatrixFormatError, NotInvolutionError, DimensionError, UsageError) as exc:
        print(f"kleincoh {args.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"kleincoh {args.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
