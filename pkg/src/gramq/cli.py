"""Command-line surface.

Subcommands: ensembles, eval, sweep, table1, crossings, verify. Exit codes
are fixed for scripting: 0 success, 1 verify failure, 2 bad input,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .coherence import AlphaZ, OptimizerConfig
from .curves import SweepSpec, find_crossings, records_to_csv, sweep_records
from .ensembles import CANONICAL_NAMES, Ensemble, canonical, gram, parse_ensemble
from .errors import GramqError, NoConvergence
from .quantifiers import (
    QuantumnessRecord,
    evaluate_quantumness,
    holevo_chi,
    q_commutator,
    q_commutator_weighted,
    q_hol,
    q_l1,
    reference_constants,
)
from .verify import run_all

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_NO_CONVERGENCE = 3

_INPUT_ERRORS = GramqError  # every domain error signals bad input unless it is NoConvergence


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _resolve_ensemble(ref: str, x: float | None) -> Ensemble:
    if ref.lower() in CANONICAL_NAMES:
        return canonical(ref, x)
    path = Path(ref)
    if not path.exists():
        raise GramqError(f"{ref!r} is neither a canonical ensemble name nor an existing file")
    e = parse_ensemble(path.read_bytes())
    return e if e.label else e.relabel(path.stem)


def _print_records(records: list[QuantumnessRecord], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([r.to_dict() for r in records], indent=2))
    elif fmt == "csv":
        sys.stdout.write(records_to_csv(records))
    else:
        for r in records:
            alpha = "" if r.alpha is None else f" alpha={r.alpha:g}"
            z = "" if r.z is None else f" z={r.z:g}"
            print(f"{r.ensemble_label:10s} {r.quantifier:15s}{alpha}{z} "
                  f"value={r.value:.10g} [{r.method}]")


def _cmd_ensembles(args) -> int:
    np.set_printoptions(precision=6, suppress=True, linewidth=120)
    for name in CANONICAL_NAMES:
        e = canonical(name)
        print(f"{name}: n={e.size}, dim={e.dim}")
        print(gram(e).matrix)
        print()
    return EXIT_OK


def _cmd_eval(args) -> int:
    e = _resolve_ensemble(args.ensemble, args.x)
    config = OptimizerConfig(restarts=args.restarts or 16, seed=args.seed)
    wanted = args.quantifier
    records: list[QuantumnessRecord] = []
    all_converged = True

    if wanted in ("qaz", "qaz-normalized", "all") and args.alpha is None and wanted != "all":
        raise GramqError(f"--alpha is required for quantifier {wanted!r}")

    if args.alpha is not None and wanted in ("qaz", "qaz-normalized", "all"):
        params = AlphaZ(args.alpha, args.z)
        if not params.is_valid:
            _warn(f"(alpha={params.alpha:g}, z={params.z:g}) lies outside the validity cases; "
                  "the value is exploratory")
        evaluation = evaluate_quantumness(e, params, config)
        all_converged &= evaluation.converged
        if wanted in ("qaz", "all"):
            records.append(evaluation.record)
        if wanted in ("qaz-normalized", "all"):
            r = evaluation.record
            records.append(QuantumnessRecord(
                r.ensemble_label, "Qaz_normalized", r.alpha, r.z, r.value / e.size, r.method))

    plain = {
        "ql1": ("Ql1", q_l1, "closed_form"),
        "qcomm": ("Qcomm", q_commutator, "closed_form"),
        "qbig": ("Qbig", q_commutator_weighted, "closed_form"),
    }
    for key, (quant, fn, method) in plain.items():
        if wanted in (key, "all"):
            records.append(QuantumnessRecord(
                e.label or "ensemble", quant, None, None, fn(e), method))
    if wanted in ("qhol", "all"):
        records.append(QuantumnessRecord(
            e.label or "ensemble", "QHol", None, None, q_hol(e, config=config), "optimizer"))

    if not records:
        raise GramqError("nothing to evaluate: pass --alpha for the qaz quantifiers")
    _print_records(records, args.format)
    if not all_converged:
        _warn("optimizer did not converge; values are best-so-far")
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def _cmd_sweep(args) -> int:
    ensembles = [_resolve_ensemble(ref, args.x) for ref in args.ensembles]
    spec = SweepSpec(args.alpha_start, args.alpha_end, args.alpha_step, z=args.z)
    if args.alpha_end > 2.0 and abs(args.z - 1.0) <= 1e-12:
        _warn("alpha > 2 at z = 1 lies outside the validity cases")
    config = OptimizerConfig(restarts=args.restarts or 16, seed=args.seed)
    csv_text = records_to_csv(sweep_records(ensembles, spec, config))
    if args.out:
        Path(args.out).write_text(csv_text, encoding="utf-8")
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def _cmd_table1(args) -> int:
    config = OptimizerConfig(restarts=args.restarts or 32, seed=args.seed)
    computed_fns = {
        "Ql1": q_l1,
        "Qcomm": q_commutator,
        "Qbig": q_commutator_weighted,
        "QHol": lambda e: q_hol(e, config=config),
    }
    rows = []
    for name in CANONICAL_NAMES:
        e = canonical(name)
        ref = reference_constants(name)
        row = {"ensemble": name}
        for quant, fn in computed_fns.items():
            value = fn(e)
            row[quant] = {"computed": value, "table": ref[quant],
                          "deviation": abs(value - ref[quant])}
        row["QFS_ref"] = {"table": ref["QFS_ref"]}
        row["Qclon_ref"] = {"table": ref["Qclon_ref"]}
        rows.append(row)

    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    header = (f"{'ensemble':8s} {'Ql1':>7s} {'Qcomm':>7s} {'Qbig':>7s} {'QHol':>7s} "
              f"{'|dev|max':>9s} {'QFS*':>6s} {'Qclon*':>7s}")
    print(header)
    print("-" * len(header))
    for row in rows:
        dev = max(row[q]["deviation"] for q in computed_fns)
        print(f"{row['ensemble']:8s} "
              f"{row['Ql1']['computed']:7.4f} {row['Qcomm']['computed']:7.4f} "
              f"{row['Qbig']['computed']:7.4f} {row['QHol']['computed']:7.4f} "
              f"{dev:9.4f} {row['QFS_ref']['table']:6.2f} {row['Qclon_ref']['table']:7.2f}")
    print("columns 2-5 computed here; * columns are literature reference constants")
    return EXIT_OK


def _cmd_crossings(args) -> int:
    results, notes = find_crossings()
    if args.format == "json":
        print(json.dumps({"crossings": [r.to_dict() for r in results], "notes": notes}, indent=2))
        return EXIT_OK
    print(f"{'ensemble':12s} {'lhs':10s} {'rhs':18s} {'rhs_value':>10s} {'alpha_root':>11s} {'residual':>10s}")
    for r in results:
        print(f"{r.ensemble:12s} {r.lhs:10s} {r.rhs:18s} {r.rhs_value:10.6f} "
              f"{r.alpha_root:11.6f} {r.residual:10.2e}")
    for note in notes:
        print(f"note: {note}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    for ref in args.files:
        parse_ensemble(Path(ref).read_bytes())  # bad files abort before the suites run
    results = run_all(seed=args.seed, quick=args.quick)
    failed = 0
    for res in results:
        status = "pass" if res.passed else "FAIL"
        print(f"{res.name:16s} {res.cases:5d} checks  {status}")
        for detail in res.failures[:10]:
            print(f"    {detail}", file=sys.stderr)
        failed += len(res.failures)
    print(f"total: {sum(r.cases for r in results)} checks, {failed} failures")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gramq",
        description="Quantumness of pure-state ensembles via coherence of the Gram matrix.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("ensembles", help="list canonical ensembles and their Gram matrices")

    p_eval = sub.add_parser("eval", help="evaluate quantifiers for one ensemble")
    p_eval.add_argument("ensemble", help="canonical name or ensemble file path")
    p_eval.add_argument("--quantifier", default="all",
                        choices=["all", "qaz", "qaz-normalized", "ql1", "qcomm", "qbig", "qhol"])
    p_eval.add_argument("--alpha", type=float, default=None)
    p_eval.add_argument("--z", type=float, default=1.0)
    p_eval.add_argument("--x", type=float, default=None, help="b92 overlap parameter")

    p_sweep = sub.add_parser("sweep", help="sweep alpha and emit CSV curve data")
    p_sweep.add_argument("ensembles", nargs="+", help="canonical names or file paths")
    p_sweep.add_argument("--alpha-start", type=float, default=0.05)
    p_sweep.add_argument("--alpha-end", type=float, default=2.0)
    p_sweep.add_argument("--alpha-step", type=float, default=0.05)
    p_sweep.add_argument("--z", type=float, default=1.0)
    p_sweep.add_argument("--x", type=float, default=None, help="b92 overlap parameter")
    p_sweep.add_argument("--out", default=None, help="CSV output path (default stdout)")

    p_table = sub.add_parser("table1", help="reproduce the quantifier comparison table")

    p_cross = sub.add_parser("crossings", help="locate curve/constant crossing points")

    p_verify = sub.add_parser("verify", help="run the randomized property suites")
    p_verify.add_argument("files", nargs="*", help="extra ensemble files to validate first")
    p_verify.add_argument("--quick", action="store_true", help="reduced counts, no oracle suite")

    for p in (p_eval, p_sweep, p_table, p_cross):
        p.add_argument("--format", default=None, choices=["json", "csv", "text"])
    for p in (p_eval, p_sweep, p_table, p_cross, p_verify):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--restarts", type=int, default=None)
    return parser


_DEFAULT_FORMATS = {"eval": "json", "table1": "text", "crossings": "text"}

_COMMANDS = {
    "ensembles": _cmd_ensembles,
    "eval": _cmd_eval,
    "sweep": _cmd_sweep,
    "table1": _cmd_table1,
    "crossings": _cmd_crossings,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if hasattr(args, "format") and args.format is None:
        args.format = _DEFAULT_FORMATS.get(args.command, "text")
    try:
        return _COMMANDS[args.command](args)
    except NoConvergence as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
