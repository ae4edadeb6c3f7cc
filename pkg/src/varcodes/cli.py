"""Command-line front end: build, measure, predict, bound, compare.

All stdout output is deterministic (timings go to stderr).  Exit codes:
0 success, 2 bad input, 3 budget exceeded, 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import bounds
from .codes import (
    DEFAULT_BUDGET,
    LinearCode,
    code_from_descriptor,
    ghw,
    min_distance,
    weight_distribution,
)
from .errors import BudgetExceeded, InputError, InternalError
from .gf import GF, field_from_order
from .predict import applicable_bounds, lower_bound_value, predict
from .varieties import VarietyDescriptor, build_point_set

BOUND_COMMANDS = {
    "elementary": bounds.elementary_bound,
    "covering-family": bounds.covering_family_bound,
    "cayley-bacharach": bounds.cayley_bacharach_bound,
    "weil-hypersurface": bounds.weil_hypersurface_interval,
    "lachaud-sections": bounds.lachaud_section_bounds,
    "griesmer": bounds.griesmer,
    "singleton": bounds.singleton,
    "sorensen": bounds.sorensen_bound,
    "hermitian-ch": bounds.hermitian_ch_bound,
    "ruled-surface": bounds.ruled_surface_bound,
    "dl-a24": bounds.dl_a24_params,
    "counts": None,  # special-cased: family plus keyword params
}


def _load_json_arg(arg: str):
    """Inline JSON, or @path to read it from a file."""
    if arg.startswith("@"):
        with open(arg[1:], "r", encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(arg)


def _emit(payload, out_path: str | None):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _field_for(q: int) -> GF:
    return field_from_order(q)


def cmd_field(args) -> int:
    fld = GF(args.p, args.e)
    payload = fld.to_dict()
    payload["generator"] = fld.generator
    if args.tables:
        payload["exp"] = list(fld.exp)
    _emit(payload, args.out)
    return 0


def cmd_points(args) -> int:
    desc = VarietyDescriptor.from_dict(_load_json_arg(args.descriptor))
    points = build_point_set(desc, _field_for(args.q))
    payload = points.to_dict()
    payload["descriptor"] = desc.to_dict()
    _emit(payload, args.out)
    return 0


def cmd_build(args) -> int:
    desc = VarietyDescriptor.from_dict(_load_json_arg(args.descriptor))
    code = code_from_descriptor(desc, args.h, _field_for(args.q))
    if args.out:
        _emit(code.to_dict(), args.out)
    _emit({"n": code.n, "k": code.k, "kernel_dim": code.kernel_dim}, None)
    return 0


def _load_code(path: str) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        return LinearCode.from_dict(json.load(fh))


def cmd_analyze(args) -> int:
    code = _load_code(args.artifact)
    report = {"n": code.n, "k": code.k, "q": code.field.q}
    for task in args.tasks.split(","):
        task = task.strip()
        t0 = time.perf_counter()
        if task == "d":
            report["d"] = min_distance(code, args.budget, args.workers)
        elif task == "wdist":
            report["weight_distribution"] = weight_distribution(
                code, args.budget, args.workers
            ).to_dict()
        elif task.startswith("ghw:"):
            r = int(task.split(":", 1)[1])
            report.setdefault("ghw", {})[str(r)] = ghw(
                code, r, args.budget, args.workers
            )
        else:
            raise InputError(f"unknown analysis task {task!r}")
        print(f"{task}: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    _emit(report, args.out)
    return 0


def cmd_bound(args) -> int:
    params = _load_json_arg(args.params)
    if not isinstance(params, dict):
        raise InputError("bound parameters must be a JSON object")
    if args.name == "counts":
        report = bounds.counts(**params)
    else:
        fn = BOUND_COMMANDS[args.name]
        report = fn(**params)
    _emit(report.to_dict(), args.out)
    return 0


def cmd_predict(args) -> int:
    desc = VarietyDescriptor.from_dict(_load_json_arg(args.descriptor))
    _emit(predict(desc, args.h, args.q).to_dict(), args.out)
    return 0


def _compare_row(entry: dict, budget: int, workers: int) -> dict:
    desc = VarietyDescriptor.from_dict(entry["descriptor"])
    h = int(entry.get("h", 1))
    q = int(entry["q"])
    row = {"family": desc.label(), "q": q, "h": h}
    code = code_from_descriptor(desc, h, _field_for(q))
    row["n"], row["k"] = code.n, code.k
    row["d"] = min_distance(code, budget, workers)
    try:
        pred = predict(desc, h, q)
        row["d_predicted"] = pred.d
        row["d_status"] = pred.d_status
        if pred.d_options:
            row["d_options"] = list(pred.d_options)
    except InputError as exc:
        row["d_predicted"] = None
        row["d_status"] = f"no prediction ({exc})"
    row["griesmer_max_d"] = bounds.griesmer(code.n, code.k, q).value
    row["singleton"] = code.n - code.k + 1
    row["attains_griesmer"] = row["d"] == row["griesmer_max_d"]
    lows = applicable_bounds(desc, h, q, code.n)
    row["lower_bounds"] = {rep.name: lower_bound_value(rep) for rep in lows}
    return row


_COMPARE_COLUMNS = [
    "family", "q", "h", "n", "k", "d", "d_predicted", "d_status",
    "griesmer_max_d", "singleton", "attains_griesmer", "lower_bounds",
]


def _cell(row: dict, column: str) -> str:
    value = row.get(column, "")
    if column == "lower_bounds" and isinstance(value, dict):
        return ";".join(f"{name}>={v}" for name, v in sorted(value.items()))
    return str(value)


def cmd_compare(args) -> int:
    entries = _load_json_arg(args.specs)
    if not isinstance(entries, list):
        raise InputError("compare expects a JSON list of {descriptor, h, q} entries")
    rows = []
    for entry in entries:
        try:
            rows.append(_compare_row(entry, args.budget, args.workers))
        except (InputError, BudgetExceeded) as exc:
            rows.append({"family": str(entry.get("descriptor")), "error": str(exc)})
    if args.format == "json":
        _emit(rows, args.out)
    elif args.format == "csv":
        lines = [",".join(_COMPARE_COLUMNS)]
        for row in rows:
            lines.append(",".join(_cell(row, c) for c in _COMPARE_COLUMNS))
        _write_text("\n".join(lines) + "\n", args.out)
    else:
        widths = {
            c: max(len(c), *(len(_cell(r, c)) for r in rows))
            for c in _COMPARE_COLUMNS
        }
        lines = ["  ".join(c.ljust(widths[c]) for c in _COMPARE_COLUMNS)]
        for row in rows:
            if "error" in row:
                lines.append(f"{row['family']}: ERROR {row['error']}")
            else:
                lines.append(
                    "  ".join(_cell(row, c).ljust(widths[c]) for c in _COMPARE_COLUMNS)
                )
        _write_text("\n".join(lines) + "\n", args.out)
    return 0


def _write_text(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_export(args) -> int:
    code = _load_code(args.artifact)
    if args.format == "csv":
        _write_text(code.to_csv(), args.out)
    else:
        _emit(code.to_dict(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varcodes",
        description="evaluation codes from varieties: build, measure, predict, bound, compare",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="print a field description")
    p.add_argument("p", type=int)
    p.add_argument("e", type=int, nargs="?", default=1)
    p.add_argument("--tables", action="store_true", help="include the exp table")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_field)

    p = sub.add_parser("points", help="enumerate the evaluation point set")
    p.add_argument("descriptor", help="descriptor JSON (inline or @file)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_points)

    p = sub.add_parser("build", help="build a code artifact")
    p.add_argument("descriptor", help="descriptor JSON (inline or @file)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--out", help="artifact path (JSON)")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("analyze", help="measure d / weights / GHW of an artifact")
    p.add_argument("artifact")
    p.add_argument("--tasks", default="d", help="comma list: d, wdist, ghw:R")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("bound", help="run a bound calculator")
    p.add_argument("name", choices=sorted(BOUND_COMMANDS))
    p.add_argument("params", help="parameter JSON object (inline or @file)")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("predict", help="closed-form expected parameters")
    p.add_argument("descriptor", help="descriptor JSON (inline or @file)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_predict)

    p = sub.add_parser("compare", help="measured vs predicted vs bounds table")
    p.add_argument("specs", help="JSON list of {descriptor, h, q} (inline or @file)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv", "table"], default="table")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("export", help="export an artifact (csv generator or json)")
    p.add_argument("artifact")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (InputError, json.JSONDecodeError, OSError, KeyError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
