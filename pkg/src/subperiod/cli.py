"""Command-line interface: ``subperiod {seq,period,theorem,table,scan,move}``.

Exit codes: 0 success (or every theorem record matched), 1 usage or
computation error, 2 a theorem check found a mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import lab, records
from .family import FamilyExpression, FamilyParseError, parse_range
from .game import SubtractionSet, best_move, grundy_sequence, outcome_sequence
from .periodicity import HorizonExhausted, default_horizon_cap, find_period, initial_horizon
from .tables import TABLES

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2

THEOREM_IDS = {"1": lab.Family.T1, "2": lab.Family.T2, "3": lab.Family.T3, "4": lab.Family.T4, "eq1": lab.Family.EQ1}
DEFAULT_K = {lab.Family.T1: "3..15", lab.Family.T2: "4..18", lab.Family.T3: "2..14"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _global_options(defaults: bool) -> argparse.ArgumentParser:
    # Accepted before or after the subcommand; SUPPRESS keeps the subparser
    # from overwriting a value given at the top level.
    opt = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    opt.add_argument("--format", choices=("text", "csv", "json"), default=d("text"))
    opt.add_argument("--horizon-cap", type=int, default=d(None), metavar="N",
                     help="largest horizon tried (env SUBPERIOD_HORIZON_CAP; default 2**20)")
    opt.add_argument("--out", default=d(None), metavar="PATH", help="write output here instead of stdout")
    return opt


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="subperiod", description=__doc__.splitlines()[0],
                     parents=[_global_options(True)])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    local = [_global_options(False)]

    p = sub.add_parser("seq", parents=local, help="print an outcome or Grundy sequence")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("mode", nargs="?", choices=("outcome", "grundy"), default="outcome")

    p = sub.add_parser("period", parents=local, help="certified preperiod and period of one set")
    p.add_argument("--set", required=True)
    p.add_argument("--grundy", action="store_true", help="use the Grundy sequence instead of P/N")

    p = sub.add_parser("theorem", parents=local, help="check a period formula against computation")
    p.add_argument("--id", required=True, choices=sorted(THEOREM_IDS))
    p.add_argument("--k", help="LO..HI for families 1-3")
    p.add_argument("--s", help="LO..HI for family 4 (default 1..10)")
    p.add_argument("--selectors", help="family 4 selector bits, e.g. 1 or 1,0,1; default: all masks")
    p.add_argument("--n", type=int, default=4, help="family 4 selector count when enumerating (default 4)")
    p.add_argument("--s1", help="LO..HI for eq1 (default 1..20)")
    p.add_argument("--s2", help="LO..HI for eq1 (default 2..40)")
    p.add_argument("--variant", help="formula variant (stated/tabulated/derived)")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("table", parents=local, help="reproduce one of the four reference tables")
    p.add_argument("--id", required=True, type=int, choices=sorted(TABLES))

    p = sub.add_parser("scan", parents=local, help="periods across a one-parameter family")
    p.add_argument("--family", required=True, help='e.g. "1,4,5k" or "k,2k+1"')
    p.add_argument("--range", required=True, dest="krange", metavar="LO..HI")

    p = sub.add_parser("move", parents=local, help="optimal move from a position")
    p.add_argument("--set", required=True)
    p.add_argument("--pos", type=int, required=True)
    return parser


def _resolve_cap(args) -> int:
    return args.horizon_cap if args.horizon_cap is not None else default_horizon_cap()


def _check_cap(cap: int, moves: SubtractionSet) -> None:
    if cap < initial_horizon(moves):
        raise UsageError(f"--horizon-cap {cap} is below the minimum {initial_horizon(moves)} for {{{moves}}}")


def _render(rows: list[dict], fmt: str, text_lines) -> str:
    if fmt == "csv":
        return records.to_csv(rows)
    if fmt == "json":
        return records.to_json(rows)
    return "".join(line + "\n" for line in text_lines)


def _period_line(report) -> str:
    return (f"set={report.set} preperiod={report.preperiod} period={report.period} "
            f"block={report.block} notation={report.notation}")


def cmd_seq(args) -> tuple[str, int]:
    moves = SubtractionSet.parse(args.set)
    if args.mode == "outcome":
        values = [int(b) for b in outcome_sequence(moves, args.n).bits]
        text = "".join(map(str, values))
    else:
        values = [int(v) for v in grundy_sequence(moves, args.n).values]
        text = " ".join(map(str, values))
    if args.format == "json":
        doc = {"set": list(moves.elements), "mode": args.mode, "length": args.n, "values": values}
        return json.dumps(doc) + "\n", EXIT_OK
    if args.format == "csv":
        lines = ["position;value"] + [f"{i};{v}" for i, v in enumerate(values)]
        return "\n".join(lines) + "\n", EXIT_OK
    return text + "\n", EXIT_OK


def cmd_period(args) -> tuple[str, int]:
    moves = SubtractionSet.parse(args.set)
    cap = _resolve_cap(args)
    _check_cap(cap, moves)
    report = find_period(moves, cap, kind="grundy" if args.grundy else "outcome")
    return _render([report.as_record()], args.format, [_period_line(report)]), EXIT_OK


def _parse_selectors(text: str) -> tuple[int, ...]:
    bits = text.replace(",", "").strip()
    if not bits or any(c not in "01" for c in bits):
        raise UsageError(f"--selectors must be a string of 0/1 bits, got {text!r}")
    return tuple(int(c) for c in bits)


def _theorem_parameters(family, args) -> list:
    if family is lab.Family.T4:
        s_values = parse_range(args.s or "1..10")
        if args.selectors is not None:
            return [(s, _parse_selectors(args.selectors)) for s in s_values]
        if args.n < 0:
            raise UsageError("--n must be >= 0")
        return lab.t4_parameters(s_values, args.n)
    if family is lab.Family.EQ1:
        return lab.eq1_parameters(parse_range(args.s1 or "1..20"), parse_range(args.s2 or "2..40"))
    return list(parse_range(args.k or DEFAULT_K[family]))


def _theorem_line(rec: lab.VerificationRecord) -> str:
    pred = rec.prediction
    params = " ".join(pred.describe_parameters().split(","))
    if rec.computed is None:
        tail = f"computed=- preperiod=- ({rec.message})"
    else:
        tail = f"computed={rec.computed.period} preperiod={rec.computed.preperiod}"
    return f"{pred.family.value} {params} set={pred.set} {rec.status} predicted={pred.predicted_period} {tail}"


def cmd_theorem(args) -> tuple[str, int]:
    family = THEOREM_IDS[args.id]
    cap = _resolve_cap(args)
    params = _theorem_parameters(family, args)
    predictions = [lab.predict(family, p, args.variant) for p in params]
    for pred in predictions:
        _check_cap(cap, pred.set)
    recs = lab.verify_family(family, params, variant=args.variant, horizon_cap=cap, workers=args.workers)
    counts = lab.summarize(recs)
    print(f"{len(recs)} records: " + ", ".join(f"{v} {k}" for k, v in counts.items()), file=sys.stderr)
    out = _render([r.as_record() for r in recs], args.format, [_theorem_line(r) for r in recs])
    return out, EXIT_OK if counts[lab.MATCH] == len(recs) else EXIT_MISMATCH


def cmd_table(args) -> tuple[str, int]:
    cap = _resolve_cap(args)
    rows, lines = [], []
    for pub in TABLES[args.id]:
        _check_cap(cap, pub.set)
        report = find_period(pub.set, cap)
        row = report.as_record()
        row.update(notation=report.notation, published_notation=pub.notation, published_period=pub.period)
        rows.append(row)
        line = f"{pub.set} {report.notation} {report.period}"
        if (report.notation, report.period) != (pub.notation, pub.period):
            line += f" [published {pub.notation} {pub.period}]"
        lines.append(line)
    return _render(rows, args.format, lines), EXIT_OK


def cmd_scan(args) -> tuple[str, int]:
    expr = FamilyExpression.parse(args.family)
    values = parse_range(args.krange)
    cap = _resolve_cap(args)
    for k in values:
        try:
            _check_cap(cap, expr.instantiate(k))
        except ValueError:
            pass
    recs = lab.scan_family(expr, values, cap)
    lines = []
    for rec in recs:
        if rec.report is not None:
            lines.append(f"k={rec.parameter} {_period_line(rec.report)} horizon={rec.report.horizon}")
        else:
            lines.append(f"k={rec.parameter} status={rec.status} {rec.message}")
    rows = [dict(rec.as_record(), parameter=rec.parameter) for rec in recs]
    failed = any(rec.status == "horizon-exhausted" for rec in recs)
    return _render(rows, args.format, lines), EXIT_ERROR if failed else EXIT_OK


def cmd_move(args) -> tuple[str, int]:
    moves = SubtractionSet.parse(args.set)
    if args.pos < 0:
        raise UsageError(f"--pos must be >= 0, got {args.pos}")
    move = best_move(moves, args.pos)
    after = None if move is None else args.pos - move
    if args.format == "json":
        doc = {"set": list(moves.elements), "position": args.pos, "move": move, "to": after}
        return json.dumps(doc) + "\n", EXIT_OK
    if args.format == "csv":
        return f"set;position;move;to\n{moves};{args.pos};{move or ''};{'' if after is None else after}\n", EXIT_OK
    return ("P-position" if move is None else f"take {move} → {after}") + "\n", EXIT_OK


COMMANDS = {
    "seq": cmd_seq,
    "period": cmd_period,
    "theorem": cmd_theorem,
    "table": cmd_table,
    "scan": cmd_scan,
    "move": cmd_move,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        output, code = COMMANDS[args.command](args)
    except FamilyParseError as exc:
        print(f"subperiod: parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except HorizonExhausted as exc:
        print(f"subperiod: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (UsageError, ValueError) as exc:
        print(f"subperiod: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
