"""Command-line front end.

Exit status carries errors only; every decision (member or not, MCS or not,
C1P or not) is in the printed payload and exits 0.

    c1pmcs check --fixture cyc4 --row 0 --format json
    c1pmcs enumerate --fixture fig2:3
    c1pmcs verify --fixture fig1:4 --rows 0,1,2,3
    c1pmcs gen random --m 5 --n 5 --density 0.4 --seed 42 -o m.txt
    c1pmcs c1p --matrix m.txt
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .c1p import OracleBoundError, is_c1p
from .cascade import CertificateRejected, MembershipAnswer, mcs_membership
from .fixtures import fixture, parse_fixture_spec
from .matrix import BinaryMatrix, ParseError, detect_format, parse_matrix, serialize
from .oracle import DEFAULT_MAX_ROWS, OracleReport, enumerate_mcs, random_matrix
from .verify import explain

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_RANGE = 3
EXIT_REJECTED = 4
EXIT_REFUSED = 5

GEN_KINDS = ("fig1", "fig2", "cyc4", "v3", "iv3", "ii4", "nest", "random")


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _fmt_set(rows: Sequence[int]) -> str:
    return "{" + ",".join(map(str, rows)) + "}"


def _fmt_cols(cols: Sequence[int]) -> str:
    return " ".join(f"c{c}" for c in cols)


def _load(args: argparse.Namespace) -> BinaryMatrix:
    if (args.matrix is None) == (args.fixture is None):
        raise CliError("give exactly one of --matrix or --fixture", EXIT_PARSE)
    try:
        if args.fixture is not None:
            return parse_fixture_spec(args.fixture)
        text = Path(args.matrix).read_text(encoding="utf-8")
        return parse_matrix(text, detect_format(text))
    except ParseError as e:
        raise CliError(f"{args.matrix}: {e}", EXIT_PARSE) from None
    except (OSError, ValueError) as e:
        raise CliError(str(e), EXIT_PARSE) from None


def _row_list(spec: Optional[str], matrix: BinaryMatrix) -> Optional[list[int]]:
    if spec is None:
        return None
    try:
        rows = [int(t) for t in spec.replace(",", " ").split()]
    except ValueError:
        raise CliError(f"bad row list {spec!r}", EXIT_RANGE) from None
    bad = [r for r in rows if not 0 <= r < matrix.m]
    if bad or not rows:
        raise CliError(f"row ids {bad or spec!r} out of range for m={matrix.m}", EXIT_RANGE)
    return sorted(set(rows))


# ---------------------------------------------------------------------------
# subcommands; each returns the text to print


def _check_text(ans: MembershipAnswer) -> str:
    if not ans.member:
        return f"row {ans.row}: not in any MCS\n"
    cert = ans.certificate
    assert cert is not None
    lines = [f"row {ans.row}: in MCS {_fmt_set(cert.rows)}"]
    fields = [("form", cert.form), ("role", cert.role), ("stage", ans.stage or "")]
    if cert.witness_columns is not None:
        fields.append(("witness", _fmt_cols(cert.witness_columns)))
    lines += [f"  {k:<8}{v}" for k, v in fields]
    return "\n".join(lines) + "\n"


def cmd_check(args: argparse.Namespace) -> str:
    matrix = _load(args)
    if not 0 <= args.row < matrix.m:
        raise CliError(f"row {args.row} out of range for m={matrix.m}", EXIT_RANGE)
    try:
        ans = mcs_membership(matrix, args.row)
    except CertificateRejected as e:
        raise CliError(f"internal error: {e}", EXIT_REJECTED) from None
    return ans.to_json() + "\n" if args.format == "json" else _check_text(ans)


def cmd_enumerate(args: argparse.Namespace) -> str:
    matrix = _load(args)
    try:
        report = enumerate_mcs(matrix, max_rows=args.max_rows, force=args.force)
    except OracleBoundError as e:
        raise CliError(str(e), EXIT_REFUSED) from None
    if args.format == "json":
        return report.to_json() + "\n"
    return _enumerate_text(report)


def _enumerate_text(report: OracleReport) -> str:
    lines = [f"{len(report.mcs)} MCS"]
    lines += [f"  {_fmt_set(s)}" for s in report.mcs]
    members = [i for i, b in enumerate(report.membership) if b]
    lines.append(f"rows in some MCS: {_fmt_set(members)}")
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> str:
    matrix = _load(args)
    rows = _row_list(args.rows, matrix) or list(range(matrix.m))
    v = explain(matrix, rows)
    if args.format == "json":
        out: dict = {"rows": rows, "is_mcs": v.is_mcs, "reason": v.reason}
        if v.witness is not None:
            out["witness"] = list(v.witness)
        if v.conflicting_subset is not None:
            out["conflicting_subset"] = list(v.conflicting_subset)
        return json.dumps(out, separators=(",", ":")) + "\n"
    if v.is_mcs:
        return "MCS: yes\n"
    if v.witness is not None:
        return f"MCS: no — set is C1P, witness: {_fmt_cols(v.witness)}\n"
    if v.conflicting_subset is not None:
        return f"MCS: no — proper subset {_fmt_set(v.conflicting_subset)} is non-C1P\n"
    return f"MCS: no — {v.reason}\n"


def _generate(args: argparse.Namespace) -> BinaryMatrix:
    kind = args.kind
    try:
        if kind == "fig1":
            return fixture("F_FIG1", args.m if args.m is not None else 4)
        if kind == "fig2":
            return fixture("F_FIG2", args.k if args.k is not None else 3)
        if kind == "random":
            if args.m is None or args.n is None:
                raise CliError("gen random needs --m and --n", EXIT_PARSE)
            return random_matrix(args.m, args.n, args.density, args.seed)
        return fixture(kind)
    except ValueError as e:
        raise CliError(str(e), EXIT_PARSE) from None


def cmd_gen(args: argparse.Namespace) -> str:
    text = serialize(_generate(args), "dense")
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8", newline="\n")
        return ""
    return text


def cmd_c1p(args: argparse.Namespace) -> str:
    matrix = _load(args)
    rows = _row_list(args.rows, matrix)
    res = is_c1p(matrix, rows)
    if args.format == "json":
        out: dict = {"holds": res.holds}
        if res.witness is not None:
            out["witness"] = list(res.witness)
        return json.dumps(out, separators=(",", ":")) + "\n"
    if res.holds:
        return f"C1P: yes, witness: {_fmt_cols(res.witness or ())}\n"
    return "C1P: no\n"


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--matrix", metavar="PATH", help="matrix file, dense or sparse")
    common.add_argument("--fixture", metavar="SPEC", help="named fixture, e.g. cyc4 or fig2:3")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--force", action="store_true", help="lift the oracle row bound")

    p = argparse.ArgumentParser(prog="c1pmcs", description="MCS membership for the consecutive ones property")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="is a row in some MCS")
    s.add_argument("--row", type=int, required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("enumerate", parents=[common], help="list every MCS (exhaustive)")
    s.add_argument("--max-rows", type=int, default=DEFAULT_MAX_ROWS)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", parents=[common], help="is a row set an MCS")
    s.add_argument("--rows", help="comma separated row ids (default: all rows)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", parents=[common], help="write a fixture or random matrix")
    s.add_argument("kind", choices=GEN_KINDS)
    s.add_argument("--k", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--density", type=float, default=0.4)
    s.add_argument("-o", "--output", metavar="PATH")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("c1p", parents=[common], help="test the consecutive ones property")
    s.add_argument("--rows", help="comma separated row ids (default: all rows)")
    s.set_defaults(func=cmd_c1p)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8", newline="\n")
    sys.stdout.write(out)
    sys.stdout.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
