"""Command line front end: single-knot queries and batch catalog reports.

Subcommands are thin wrappers over the library modules.  Report output is
TSV or JSON with every floating-point number fixed at 20 significant
digits, so identical inputs produce byte-identical reports.  When a
report is written with --out, a matching figure is rendered next to it
(same stem, .png); --plot picks the figure path explicitly or enables the
figure for stdout runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import torus as torus_mod
from .braid import BraidWord, seifert_matrix
from .invariants import (
    DegenerateEvaluation,
    JumpDivisor,
    alexander,
    jump_divisor,
    signature_at,
    signature_samples,
)
from .qjump import CatalogError, KnotCheck, check_conjecture, jj_divisor, load_catalog
from .skein import SearchExhausted, make_good, skein_jump
from .sympoly import SymPoly, mp_context, theta_sign

DIGITS = 20
PASS_STATUSES = frozenset({"MATCH", "VACUOUS"})


def _usage_error(message: str) -> "SystemExit":
    print(f"error: {message}", file=sys.stderr)
    return SystemExit(2)


def _parse_braid(text: str) -> BraidWord:
    try:
        word = BraidWord.parse(text)
    except ValueError as exc:
        raise _usage_error(str(exc)) from exc
    if not word.is_knot_closure():
        parts = word.closure_components()
        raise _usage_error(
            f"braid {text!r}: closure has {parts} components, need a knot"
        )
    return word


def _parse_poly(text: str, label: str) -> SymPoly:
    try:
        return SymPoly.parse(text)
    except ValueError as exc:
        raise _usage_error(f"{label} {text!r}: {exc}") from exc


def _parse_turn(text: str) -> Fraction | float:
    try:
        if "/" in text:
            return Fraction(text)
        if "." in text or "e" in text or "E" in text:
            return float(text)
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise _usage_error(f"turn {text!r}: {exc}") from exc


def _fmt(ctx, value) -> str:
    return ctx.nstr(ctx.mpf(float(value)), DIGITS, strip_zeros=False)


def _turn_cell(root) -> str:
    exact = root.turn_exact()
    return str(exact) if exact is not None else root.turn_str(DIGITS)


def _divisor_lines(div: JumpDivisor) -> str:
    return "".join(f"{_turn_cell(e.root)}\t{e.jump}\n" for e in div.entries)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _figure_path(args) -> Path | None:
    if getattr(args, "plot", None):
        return Path(args.plot)
    if getattr(args, "out", None):
        return Path(args.out).with_suffix(".png")
    return None


# --- single-knot commands -------------------------------------------------


def cmd_alex(args) -> int:
    word = _parse_braid(args.braid)
    print(alexander(seifert_matrix(word)))
    return 0


def cmd_sig(args) -> int:
    word = _parse_braid(args.braid)
    turn = _parse_turn(args.turn)
    try:
        print(signature_at(seifert_matrix(word), turn))
    except DegenerateEvaluation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_jump(args) -> int:
    word = _parse_braid(args.braid)
    _emit(_divisor_lines(jump_divisor(seifert_matrix(word))), args.out)
    return 0


def cmd_jjump(args) -> int:
    delta = _parse_poly(args.delta, "--delta")
    p1 = _parse_poly(args.p, "--p")
    try:
        div = jj_divisor(delta, p1, dps=args.precision)
    except ValueError as exc:
        raise _usage_error(str(exc)) from exc
    _emit(_divisor_lines(div), args.out)
    return 0


def cmd_skein(args) -> int:
    word = _parse_braid(args.braid)
    div = jump_divisor(seifert_matrix(word))
    if not div.entries:
        print("error: the Alexander polynomial has no roots on the unit circle",
              file=sys.stderr)
        return 1
    if not 0 <= args.root_index < len(div.entries):
        raise _usage_error(
            f"--root-index {args.root_index} out of range "
            f"({len(div.entries)} roots, indices 0..{len(div.entries) - 1})"
        )
    root = div.entries[args.root_index].root
    try:
        good = make_good(word, root)
    except SearchExhausted as exc:
        print(f"status: SEARCH_EXHAUSTED ({exc})", file=sys.stderr)
        return 1
    k_order, k_sign = theta_sign(good.delta, root)
    f_order, f_sign = theta_sign(good.flipped_delta, root)
    ins = ", ".join(f"({p}, {g})" for p, g in good.insertions) or "none"
    print(f"word: {list(good.braid.letters)}")
    print(f"root {args.root_index}: turn {_turn_cell(root)}, "
          f"multiplicity {root.multiplicity}")
    print(f"good crossing: position {good.pos}, sign {good.epsilon:+d}, "
          f"insertions: {ins}")
    print(f"theta-sign of the knot: order {k_order}, sign {k_sign:+d}")
    print(f"theta-sign of the flip: order {f_order}, sign {f_sign:+d}")
    print(f"skein jump: {skein_jump(good)}")
    return 0


def cmd_samples(args) -> int:
    word = _parse_braid(args.braid)
    if args.count < 1:
        raise _usage_error(f"--count {args.count}: need at least one sample")
    matrix = seifert_matrix(word)
    points = signature_samples(matrix, args.count)
    ctx = mp_context(args.precision)
    text = "# s\tsigma\n" + "".join(
        f"{_fmt(ctx, s)}\t{sig}\n" for s, sig in points
    )
    _emit(text, args.out)
    figure = _figure_path(args)
    if figure:
        from .plots import save_signature_plot

        roots = [float(e.root.turn(17)) for e in jump_divisor(matrix).entries]
        save_signature_plot(points, roots, f"closure of {list(word.letters)}",
                            figure)
    return 0


# --- batch reports --------------------------------------------------------


@dataclass(frozen=True)
class ReportRow:
    turn: str
    multiplicity: int
    j: int
    jj: int | None
    skein: int | None
    numeric_c: str | None
    note: str


@dataclass(frozen=True)
class ReportRecord:
    name: str
    status: str
    sigma_classical: int | None
    sigma_from_jj: int | None
    rows: tuple[ReportRow, ...]


@dataclass(frozen=True)
class Report:
    records: tuple[ReportRecord, ...]
    verdict: str


def _skein_column(record, check: KnotCheck) -> tuple[str, list[int | None]]:
    """Per-root skein jumps for one catalog record; may flip the status."""
    status = check.status
    jumps: list[int | None] = []
    for row in check.rows:
        if row.root.multiplicity != 1:
            jumps.append(None)
            continue
        try:
            good = make_good(record.braid, row.root)
        except SearchExhausted:
            status = "SEARCH_EXHAUSTED"
            jumps.append(None)
            continue
        jumps.append(skein_jump(good))
    return status, jumps


def _check_record(record, dps: int) -> ReportRecord:
    check = check_conjecture(record, dps=dps)
    status, skein_jumps = _skein_column(record, check)
    rows = []
    ctx = mp_context(dps)
    for row, skein in zip(check.rows, skein_jumps):
        numeric_c = ctx.nstr(row.numeric_c, DIGITS, strip_zeros=False) \
            if row.numeric_c is not None else None
        rows.append(ReportRow(
            turn=row.root.turn_str(DIGITS),
            multiplicity=row.multiplicity,
            j=row.j,
            jj=row.jj,
            skein=skein,
            numeric_c=numeric_c,
            note=row.note,
        ))
    return ReportRecord(
        name=record.name,
        status=status,
        sigma_classical=check.sigma_classical,
        sigma_from_jj=check.sigma_from_jj,
        rows=tuple(rows),
    )


def build_report(records, dps: int) -> Report:
    workers = min(8, max(1, len(records)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        checked = list(pool.map(lambda rec: _check_record(rec, dps), records))
    verdict = "PASS" if all(r.status in PASS_STATUSES for r in checked) else "FAIL"
    return Report(records=tuple(checked), verdict=verdict)


def _cell(value) -> str:
    if value is None or value == "":
        return "-"
    return str(value)


def report_tsv(report: Report) -> str:
    lines = ["# knot\tstatus\tturn\tmult\tj\tjj\tskein\tnumeric_c\tnote"]
    for rec in report.records:
        if not rec.rows:
            lines.append(f"{rec.name}\t{rec.status}\t-\t-\t-\t-\t-\t-\t-")
            continue
        for row in rec.rows:
            lines.append("\t".join([
                rec.name, rec.status, row.turn, str(row.multiplicity),
                str(row.j), _cell(row.jj), _cell(row.skein),
                _cell(row.numeric_c), _cell(row.note),
            ]))
    lines.append(f"# verdict: {report.verdict}")
    return "\n".join(lines) + "\n"


def report_json(report: Report) -> str:
    payload = {
        "records": [
            {
                "name": rec.name,
                "status": rec.status,
                "sigma_classical": rec.sigma_classical,
                "sigma_from_jj": rec.sigma_from_jj,
                "rows": [
                    {
                        "turn": row.turn,
                        "multiplicity": row.multiplicity,
                        "j": row.j,
                        "jj": row.jj,
                        "skein": row.skein,
                        "numeric_c": row.numeric_c,
                        "note": row.note,
                    }
                    for row in rec.rows
                ],
            }
            for rec in report.records
        ],
        "verdict": report.verdict,
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_check(args) -> int:
    try:
        records = load_catalog(args.catalog)
    except (OSError, CatalogError) as exc:
        raise _usage_error(str(exc)) from exc
    report = build_report(records, args.precision)
    text = report_tsv(report) if args.format == "tsv" else report_json(report)
    _emit(text, args.out)
    figure = _figure_path(args)
    if figure:
        from .plots import save_signature_grid

        panels = []
        for rec in records:
            matrix = seifert_matrix(rec.braid)
            roots = [float(e.root.turn(17)) for e in jump_divisor(matrix).entries]
            panels.append((rec.name, signature_samples(matrix, 160), roots))
        save_signature_grid(panels, figure)
    return 0 if report.verdict == "PASS" else 1


def cmd_torus(args) -> int:
    if args.max_ab < 6:
        raise _usage_error(f"max product {args.max_ab}: smallest torus knot is T(2,3)")
    sweeps = torus_mod.sweep(args.max_ab, dps=args.precision)
    lines = ["# a\tb\troot\tj\tjj\tstatus"]
    spectrum = []
    all_ok = True
    for ver in sweeps:
        all_ok = all_ok and ver.all_match()
        for row in ver.rows:
            status = "MATCH" if row.agree else "MISMATCH"
            lines.append(f"{ver.knot.a}\t{ver.knot.b}\t{row.turn}\t"
                         f"{row.j_braid}\t{row.jj_exact}\t{status}")
            spectrum.append((str(ver.knot), float(row.turn), row.j_braid))
    lines.append(f"# verdict: {'PASS' if all_ok else 'FAIL'}")
    _emit("\n".join(lines) + "\n", args.out)
    figure = _figure_path(args)
    if figure:
        from .plots import save_torus_spectrum

        save_torus_spectrum(spectrum, figure)
    return 0 if all_ok else 1


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotjump",
        description="Signature jumps and Jones jump divisors of knots.",
    )
    parser.add_argument("--precision", type=int, default=30, metavar="DIGITS",
                        help="working decimal precision (default 30)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alex", help="Alexander polynomial of a braid closure")
    p.add_argument("braid", help="braid word, e.g. \"[1,1,1]\"")
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("sig", help="signature at one point of the circle")
    p.add_argument("braid")
    p.add_argument("turn", help="evaluation point as a turn, e.g. 1/4 or 0.3")
    p.set_defaults(func=cmd_sig)

    p = sub.add_parser("jump", help="signature jump divisor of a braid closure")
    p.add_argument("braid")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_jump)

    p = sub.add_parser("jjump", help="Jones jump divisor from polynomial data")
    p.add_argument("--delta", required=True, help="Alexander polynomial")
    p.add_argument("--p", required=True, help="first Euler series coefficient")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_jjump)

    p = sub.add_parser("check", help="batch conjecture report over a catalog")
    p.add_argument("catalog", nargs="?", default=None,
                   help="catalog JSON path (default: shipped catalog)")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--plot", metavar="PATH",
                   help="write a signature-grid figure to this path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("torus", help="sweep all torus knots with ab <= N")
    p.add_argument("max_ab", type=int, help="largest strand product ab")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--plot", metavar="PATH",
                   help="write a root-spectrum figure to this path")
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("skein", help="good projection and skein jump at one root")
    p.add_argument("braid")
    p.add_argument("--root-index", type=int, default=0, metavar="K",
                   help="index into the jump divisor roots (default 0)")
    p.set_defaults(func=cmd_skein)

    p = sub.add_parser("samples", help="sampled signature steps as TSV")
    p.add_argument("braid")
    p.add_argument("-n", "--count", type=int, default=200,
                   help="number of grid samples (default 200)")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--plot", metavar="PATH",
                   help="write a signature step plot to this path")
    p.set_defaults(func=cmd_samples)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.precision < 15:
        raise _usage_error(f"--precision {args.precision}: need at least 15 digits")
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
