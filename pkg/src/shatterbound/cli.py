"""Command-line front end: calculators, solvers, curve emission, verification.

Every subcommand emits one self-describing record; --format json prints it
as JSON whose parse reproduces the record, --format plain prints the same
values as key: value text. Identical invocations produce byte-identical
output: no timestamps, no hidden entropy, all randomness behind --seed.

Exit codes: 0 success/PASS, 1 usage error, 2 verification FAIL,
3 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .bounds import (
    DEFAULT_CEILING,
    NoBracketError,
    bound_report,
    emit_epsilon_curve,
    max_eps_report,
    min_n_report,
)
from .oracle import MAX_ENUM_POINTS, PRNG_ID, verify_formula
from .shattering import HypothesisSpec, shatter_value

__all__ = ["OutputRecord", "main", "entrypoint"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAIL = 2
EXIT_NO_CONVERGENCE = 3

_LN10 = math.log(10.0)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; the contract here is exit 1
    def error(self, message):
        raise UsageError(message)


@dataclass
class OutputRecord:
    """One machine-readable result; JSON serialization round-trips."""

    command: str
    inputs: dict
    result: object
    flags: list
    provenance: dict

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "inputs": self.inputs,
                "result": self.result,
                "flags": self.flags,
                "provenance": self.provenance,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls(**json.loads(text))


def sci_from_log(log_value: float, digits: int = 6) -> str:
    """Scientific-notation string for exp(log_value), no matter how extreme."""
    if log_value == float("-inf"):
        return "0"
    l10 = log_value / _LN10
    exp10 = math.floor(l10)
    mant = round(10.0 ** (l10 - exp10), digits - 1)
    if mant >= 10.0:
        mant /= 10.0
        exp10 += 1
    return f"{mant:.{digits - 1}f}e{exp10:+03d}"


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def log_spaced_grid(n_start: int, n_end: int, n_points: int) -> list[int]:
    """Ascending integers, logarithmically spaced; duplicates collapse."""
    ratio = n_end / n_start
    grid: list[int] = []
    for i in range(n_points):
        v = round(n_start * ratio ** (i / (n_points - 1)))
        v = max(n_start, min(n_end, v))
        if not grid or v > grid[-1]:
            grid.append(v)
    return grid


def _spec_from(args) -> HypothesisSpec:
    try:
        return HypothesisSpec(h=args.h, p=getattr(args, "p", 1) or 1)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def cmd_coef(args) -> tuple[OutputRecord, int]:
    _require(args.n >= 1, f"--n must be positive, got {args.n}")
    spec = _spec_from(args)
    sv = shatter_value(args.n, spec)
    record = OutputRecord(
        command="coef",
        inputs={"n": args.n, "h": spec.h, "p": spec.p},
        result={"count": sv.exact, "log": sv.log.log_value},
        flags=["saturated"] if sv.saturated else [],
        provenance={"path": "exact"},
    )
    return record, EXIT_OK


def cmd_bound(args) -> tuple[OutputRecord, int]:
    _require(args.n >= 1, f"--n must be positive, got {args.n}")
    _require(0.0 < args.eps < 1.0, f"--eps must lie in (0, 1), got {args.eps}")
    spec = _spec_from(args)
    rep = bound_report(args.n, args.eps, spec)
    flags = []
    if rep.vacuous:
        flags.append("vacuous")
    delta_log = rep.delta_log.log_value
    if args.clamp and delta_log > 0.0:
        delta_log = 0.0
        flags.append("clamped")
    record = OutputRecord(
        command="bound",
        inputs={"n": args.n, "eps": args.eps, "h": spec.h, "p": spec.p,
                "clamp": bool(args.clamp)},
        result={"delta": sci_from_log(delta_log), "delta_log": delta_log},
        flags=flags,
        provenance={"path": "log"},
    )
    return record, EXIT_OK


def cmd_solve_n(args) -> tuple[OutputRecord, int]:
    _require(0.0 < args.delta < 1.0, f"--delta must lie in (0, 1), got {args.delta}")
    _require(0.0 < args.eps < 1.0, f"--eps must lie in (0, 1), got {args.eps}")
    spec = _spec_from(args)
    rep = min_n_report(args.delta, args.eps, spec, ceiling=args.ceiling)
    trace = rep.trace
    record = OutputRecord(
        command="solve-n",
        inputs={"delta": args.delta, "eps": args.eps, "h": spec.h, "p": spec.p,
                "ceiling": args.ceiling},
        result={
            "n": rep.solved_n,
            "delta_log_at_n": rep.delta_log.log_value,
            "trace": {
                "expansion": [[n, v] for n, v in trace.expansion],
                "bracket": list(trace.bracket),
                "bisection_steps": trace.bisection_steps,
                "tail_probes": [[n, v] for n, v in trace.tail_probes],
            },
        },
        flags=["saturated"] if rep.saturated else [],
        provenance={"path": "log"},
    )
    return record, EXIT_OK


def cmd_solve_eps(args) -> tuple[OutputRecord, int]:
    _require(args.n >= 1, f"--n must be positive, got {args.n}")
    _require(0.0 < args.delta < 1.0, f"--delta must lie in (0, 1), got {args.delta}")
    spec = _spec_from(args)
    rep = max_eps_report(args.n, args.delta, spec)
    flags = []
    if rep.vacuous:
        flags.append("vacuous")
    if rep.saturated:
        flags.append("saturated")
    record = OutputRecord(
        command="solve-eps",
        inputs={"n": args.n, "delta": args.delta, "h": spec.h, "p": spec.p},
        result={"epsilon": rep.solved_eps,
                "delta_log_target": rep.delta_log.log_value},
        flags=flags,
        provenance={"path": "log"},
    )
    return record, EXIT_OK


def cmd_curve(args) -> tuple[OutputRecord, int]:
    _require(args.n_start >= 2, f"--n-start must be >= 2, got {args.n_start}")
    _require(args.n_end > args.n_start, "--n-end must exceed --n-start")
    _require(args.n_points >= 2, f"--n-points must be >= 2, got {args.n_points}")
    h_list = _int_list(args.h_list)
    p_list = _int_list(args.p_list)
    _require(bool(h_list) and bool(p_list), "--h-list and --p-list must be nonempty")
    try:
        specs = [HypothesisSpec(h=h, p=p) for h in h_list for p in p_list]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    grid = log_spaced_grid(args.n_start, args.n_end, args.n_points)
    rows = emit_epsilon_curve(grid, specs)
    csv_lines = ["n,h,p,epsilon"]
    csv_lines += [f"{r.n},{r.h},{r.p},{r.epsilon:.10g}" for r in rows]
    csv_text = "\n".join(csv_lines) + "\n"
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(csv_text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    record = OutputRecord(
        command="curve",
        inputs={
            "n_start": args.n_start,
            "n_end": args.n_end,
            "n_points": args.n_points,
            "h_list": h_list,
            "p_list": p_list,
            "out": args.out,
        },
        result={"rows": len(rows), "families": len(specs),
                "grid_points": len(grid), "out": args.out},
        flags=[],
        provenance={"path": "log"},
    )
    if args.format == "csv":
        sys.stdout.write(csv_text)
        return record, EXIT_OK
    return record, EXIT_OK


def cmd_verify(args) -> tuple[OutputRecord, int]:
    _require(
        1 <= args.n <= MAX_ENUM_POINTS,
        f"size guard: --n must lie in 1..{MAX_ENUM_POINTS}, got {args.n}",
    )
    _require(1 <= args.h <= 4, f"size guard: --h must lie in 1..4, got {args.h}")
    _require(args.trials >= 1, f"--trials must be positive, got {args.trials}")
    _require(args.workers >= 1, f"--workers must be positive, got {args.workers}")
    rep = verify_formula(args.n, args.h, args.trials, args.seed, workers=args.workers)
    record = OutputRecord(
        command="verify",
        inputs={"n": args.n, "h": args.h, "trials": args.trials,
                "seed": args.seed, "workers": args.workers},
        result={
            "formula_count": rep.formula_count,
            "trials": [
                {"seed": t.seed, "resamples": t.resamples, "count": t.count}
                for t in rep.results
            ],
            "passed": rep.passed,
        },
        flags=[] if rep.passed else ["mismatch"],
        provenance={"path": "exact", "seed": args.seed, "prng": rep.prng},
    )
    return record, EXIT_OK if rep.passed else EXIT_VERIFY_FAIL


def _plain_lines(record: OutputRecord) -> list[str]:
    lines = [f"command: {record.command}"]
    for key in record.inputs:
        lines.append(f"{key}: {record.inputs[key]}")
    res = record.result
    if record.command == "coef":
        lines.append(f"count: {res['count']}")
        lines.append(f"log: {res['log']!r}")
    elif record.command == "bound":
        lines.append(f"delta: {res['delta']}")
        lines.append(f"delta_log: {res['delta_log']!r}")
    elif record.command == "solve-n":
        lines.append(f"n: {res['n']}")
        lines.append(f"delta_log_at_n: {res['delta_log_at_n']!r}")
        tr = res["trace"]
        lines.append(f"bracket: {tr['bracket'][0]}..{tr['bracket'][1]}")
        lines.append(f"bisection_steps: {tr['bisection_steps']}")
        lines.append(
            "expansion: "
            + " ".join(f"{n}:{v:.6g}" for n, v in tr["expansion"])
        )
        lines.append(
            "tail_probes: "
            + " ".join(f"{n}:{v:.6g}" for n, v in tr["tail_probes"])
        )
    elif record.command == "solve-eps":
        lines.append(f"epsilon: {res['epsilon']!r}")
        lines.append(f"delta_log_target: {res['delta_log_target']!r}")
    elif record.command == "curve":
        lines.append(f"rows: {res['rows']}")
        lines.append(f"families: {res['families']}")
        lines.append(f"grid_points: {res['grid_points']}")
        lines.append(f"out: {res['out']}")
    elif record.command == "verify":
        for i, t in enumerate(res["trials"], start=1):
            lines.append(
                f"trial {i}: seed={t['seed']} resamples={t['resamples']} "
                f"count={t['count']}"
            )
        lines.append(f"formula: {res['formula_count']}")
        lines.append("result: PASS" if res["passed"] else "result: FAIL")
    if record.flags:
        lines.append("flags: " + ",".join(record.flags))
    prov = record.provenance
    lines.append("provenance: " + " ".join(f"{k}={prov[k]}" for k in sorted(prov)))
    return lines


def _render(record: OutputRecord, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(record.to_json() + "\n")
    elif fmt == "plain":
        sys.stdout.write("\n".join(_plain_lines(record)) + "\n")
    # csv handled inside cmd_curve, which is the only command carrying a table


def build_parser() -> _Parser:
    parser = _Parser(prog="shatterbound", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, csv_ok=False):
        choices = ["plain", "json"] + (["csv"] if csv_ok else [])
        p.add_argument("--format", choices=choices, default="plain")

    p = sub.add_parser("coef", help="shattering count for (n, h, p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--p", type=int, default=1)
    add_format(p)

    p = sub.add_parser("bound", help="divergence probability bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--clamp", action="store_true",
                   help="report 1.0 instead of a vacuous value above 1")
    add_format(p)

    p = sub.add_parser("solve-n", help="minimal sample size for (delta, eps)")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    add_format(p)

    p = sub.add_parser("solve-eps", help="maximal divergence for (n, delta)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--p", type=int, default=1)
    add_format(p)

    p = sub.add_parser("curve", help="divergence-vs-n table for (h, p) families")
    p.add_argument("--n-start", type=int, required=True)
    p.add_argument("--n-end", type=int, required=True)
    p.add_argument("--n-points", type=int, required=True)
    p.add_argument("--h-list", type=str, required=True)
    p.add_argument("--p-list", type=str, required=True)
    p.add_argument("--out", type=str, required=True)
    add_format(p, csv_ok=True)

    p = sub.add_parser("verify", help="brute-force oracle vs the counting formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    add_format(p)

    return parser


_HANDLERS = {
    "coef": cmd_coef,
    "bound": cmd_bound,
    "solve-n": cmd_solve_n,
    "solve-eps": cmd_solve_eps,
    "curve": cmd_curve,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        record, code = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoBracketError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _render(record, args.format)
    return code


def entrypoint() -> None:
    raise SystemExit(main())
