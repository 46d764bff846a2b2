"""Command-line interface: ``gdd3 {check,build,verify,decompose,survey}``.

Exit codes: 0 success; 1 verification failed; 2 rejected or infeasible;
3 open, or (for build) anything not constructible; 4 search budget exhausted; 64 usage error;
65 unparseable design file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .builder import NotConstructible, build
from .decomp import (
    BUDGET_ENV,
    InfeasibleParameters,
    NoFeasibleSplit,
    SearchExhausted,
    decompose_mixed,
)
from .feasibility import (
    OutOfScope,
    Verdict,
    check_necessary,
    classify,
    gamma_set,
    lambda_max,
)
from .fileformat import DesignFile, ParseError, parse, to_json, to_text
from .verify import MalformedBlock, verify_gdd

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_REJECTED = 2
EXIT_OPEN = 3
EXIT_EXHAUSTED = 4
EXIT_USAGE = 64
EXIT_DATA = 65

_VERDICT_EXIT = {
    Verdict.CONSTRUCTIBLE: EXIT_OK,
    Verdict.REJECTED: EXIT_REJECTED,
    Verdict.OPEN: EXIT_OPEN,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _out(text: str) -> None:
    sys.stdout.write(text)


def _err(text: str) -> None:
    print(text, file=sys.stderr)


# ---------------------------------------------------------------------------
# check


def cmd_check(args) -> int:
    m, n, lam = args.m, args.n, args.lam
    try:
        c = classify(m, n, lam)
    except OutOfScope as exc:
        raise _UsageError(str(exc)) from None
    info = {
        "m": m,
        "n": n,
        "lambda": lam,
        "classification": str(c),
        "verdict": c.verdict.value,
        "violated": sorted(x.value for x in check_necessary(m, n, lam)),
        "method": c.method.value if c.method else None,
        "open_tag": c.open_tag.value if c.open_tag else None,
        "lambda_max": lambda_max(m, n),
        "gamma": sorted(gamma_set(m, n)),
    }
    if args.format == "json":
        _out(json.dumps(info, sort_keys=True) + "\n")
    else:
        _out(
            f"GDD({m},{n};3,{lam}): {c}\n"
            f"violated: {', '.join(info['violated']) or 'none'}\n"
            f"lambda_max({m},{n}) = {info['lambda_max']}\n"
            f"Gamma({m},{n}) = {{{', '.join(map(str, info['gamma']))}}}\n"
        )
        if c.open_tag:
            _out(f"open case: {c.open_tag.value}\n")
    return _VERDICT_EXIT[c.verdict]


# ---------------------------------------------------------------------------
# build / verify


def cmd_build(args) -> int:
    try:
        design = build(args.m, args.n, args.lam, seed=args.seed)
    except OutOfScope as exc:
        raise _UsageError(str(exc)) from None
    except NotConstructible as exc:
        _err(str(exc))
        return EXIT_OPEN
    except (SearchExhausted, NoFeasibleSplit) as exc:
        _err(f"search failed: {exc}")
        return EXIT_EXHAUSTED
    report = verify_gdd(design)
    if not report.ok:  # never expected; refuse to emit an uncertified design
        _err(f"internal error, built design does not verify: {report.summary()}")
        return EXIT_FAILED
    df = DesignFile(design, args.seed)
    _out(to_json(df) if args.format == "json" else to_text(df))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(args.path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        _err(str(exc))
        return EXIT_DATA
    try:
        df = parse(data)
    except ParseError as exc:
        _err(f"parse error: {exc}")
        return EXIT_DATA
    try:
        report = verify_gdd(df.design)
    except MalformedBlock as exc:
        _err(f"malformed block: {exc}")
        return EXIT_FAILED
    names = df.design.points.labels()
    for (x, y), expected, observed in report.violations:
        _out(f"pair {names[x]} {names[y]}: expected {expected}, observed {observed}\n")
    _out(report.summary() + "\n")
    return EXIT_OK if report.ok else EXIT_FAILED


# ---------------------------------------------------------------------------
# decompose


def cmd_decompose(args) -> int:
    if args.v < 3:
        raise _UsageError("v must be at least 3")
    try:
        dec = decompose_mixed(args.v, args.k, args.factor, seed=args.seed)
    except InfeasibleParameters as exc:
        _err(str(exc))
        return EXIT_REJECTED
    except SearchExhausted as exc:
        _err(str(exc))
        return EXIT_EXHAUSTED
    if args.format == "json":
        doc = {
            "v": dec.v,
            "cycles": [list(c) for c in dec.cycles],
            "one_factor": None if dec.one_factor is None else [list(e) for e in dec.one_factor],
            "triangles": [list(t) for t in dec.triangles],
        }
        _out(json.dumps(doc, sort_keys=True) + "\n")
        return EXIT_OK
    lines = [f"cycle {' '.join(map(str, c))}" for c in dec.cycles]
    if dec.one_factor is not None:
        lines.append("factor " + " ".join(f"{a}-{b}" for a, b in dec.one_factor))
    lines += [f"triangle {a} {b} {c}" for a, b, c in dec.triangles]
    _out("\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# survey

SURVEY_FIELDS = ["m", "n", "lambda", "verdict", "detail", "lambda_max"]


def survey_rows(m_max: int, n_max: int, policy: str) -> list[tuple[int, int, int]]:
    """Parameter triples listed by ``survey``, sorted.

    ``all-feasible``: every lambda >= 4 passing all necessary conditions.
    ``up-to-lambda-max``: every lambda from 4 to lambda_max, rejected ones included.
    """
    out = []
    for m in range(2, m_max + 1):
        for n in range(1, min(m - 1, n_max) + 1):
            top = lambda_max(m, n)
            if top is None:
                continue
            for lam in range(4, top + 1):
                if policy == "up-to-lambda-max" or not check_necessary(m, n, lam):
                    out.append((m, n, lam))
    return out


def _survey_row(job) -> dict:
    (m, n, lam), certify, seed = job
    c = classify(m, n, lam)
    row = {
        "m": m,
        "n": n,
        "lambda": lam,
        "verdict": c.verdict.value,
        "detail": c.detail,
        "lambda_max": lambda_max(m, n),
    }
    if certify:
        if c.verdict is Verdict.CONSTRUCTIBLE:
            try:
                row["verified"] = "true" if verify_gdd(build(m, n, lam, seed)).ok else "false"
            except (SearchExhausted, NoFeasibleSplit):
                row["verified"] = "exhausted"
        else:
            row["verified"] = ""
    return row


def _render_csv(rows, fields) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _render_markdown(rows, fields) -> str:
    lines = ["| " + " | ".join(fields) + " |", "|" + "---|" * len(fields)]
    lines += ["| " + " | ".join(str(r[f]) for f in fields) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def cmd_survey(args) -> int:
    if args.m_max < 2:
        raise _UsageError("m_max must be at least 2")
    jobs = [(t, args.certify, args.seed) for t in survey_rows(args.m_max, args.n_max, args.policy)]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_survey_row, jobs, chunksize=8))
    else:
        rows = [_survey_row(j) for j in jobs]
    rows.sort(key=lambda r: (r["m"], r["n"], r["lambda"]))
    fields = SURVEY_FIELDS + (["verified"] if args.certify else [])
    counts = Counter(r["verdict"] for r in rows)
    summary = ", ".join(f"{v.value}: {counts.get(v.value, 0)}" for v in Verdict)
    if args.format == "markdown":
        _out(_render_markdown(rows, fields) + f"\n{len(rows)} rows; {summary}\n")
    else:
        _out(_render_csv(rows, fields))
        _err(f"{len(rows)} rows; {summary}")
    if args.certify and any(r.get("verified") not in ("true", "") for r in rows):
        return EXIT_FAILED
    return EXIT_OK


# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="gdd3",
        description="Existence, construction and verification of GDD(m,n;3,lambda).",
        epilog=f"Search budget per decomposition: environment variable {BUDGET_ENV}.",
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def triple(sp):
        sp.add_argument("m", type=_positive)
        sp.add_argument("n", type=_positive)
        sp.add_argument("lam", metavar="lambda", type=_positive)

    sp = sub.add_parser("check", help="classify (m, n, lambda)")
    triple(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("build", help="construct and print a design")
    triple(sp)
    sp.add_argument("--seed", type=_nonnegative, default=0)
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("verify", help="check pair counts of a design file ('-' for stdin)")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("decompose", help="K_v into k Hamiltonian cycles (+ 1-factor) and triangles")
    sp.add_argument("v", type=_positive)
    sp.add_argument("k", type=_nonnegative)
    sp.add_argument("--factor", action="store_true", help="include a 1-factor (even v)")
    sp.add_argument("--seed", type=_nonnegative, default=0)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("survey", help="classify every triple in a range")
    sp.add_argument("m_max", type=_positive)
    sp.add_argument("n_max", type=_positive)
    sp.add_argument(
        "--policy", choices=["all-feasible", "up-to-lambda-max"], default="all-feasible"
    )
    sp.add_argument("--format", choices=["csv", "markdown"], default="csv")
    sp.add_argument("--certify", action="store_true", help="build and verify constructible rows")
    sp.add_argument("--seed", type=_nonnegative, default=0)
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.set_defaults(func=cmd_survey)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        _err(f"gdd3: error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
