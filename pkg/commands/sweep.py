# sweep: build the corpus, run every check, write the reports
from argparse import Namespace
from pathlib import Path

from commands.common import EXIT_CHECK_FAILED, EXIT_OK, add_json_flag, print_json
from harness.runconfig import BACKENDS, FORMATS, load_run_config
from harness.sweep import run_all


def register(subparsers) -> None:
    parser = subparsers.add_parser("sweep", help="verify every check over the configured corpus")
    parser.add_argument("--config", type=Path, help="KEY=value run configuration file")
    parser.add_argument("--max-n", dest="max_exhaustive_n", type=int, help="largest exhaustive tier (at most 7)")
    parser.add_argument("--out", dest="output_dir", type=Path, help="report directory (default $INDSET_OUTPUT_DIR or reports)")
    parser.add_argument("--format", dest="formats", action="append", choices=FORMATS, help="report format; repeatable")
    parser.add_argument("--workers", type=int, help="parallelism width (default: physical cores)")
    parser.add_argument("--backend", choices=BACKENDS)
    parser.add_argument("--tolerance", type=float)
    parser.add_argument("--no-named", dest="include_named", action="store_const", const=False)
    parser.add_argument("--no-regular", dest="include_regular", action="store_const", const=False)
    parser.add_argument("--input", dest="input_files", type=Path, action="append", help="extra corpus file; repeatable")
    add_json_flag(parser)
    parser.set_defaults(func=run)


def run(args: Namespace) -> int:
    config = load_run_config(
        args.config,
        max_exhaustive_n=args.max_exhaustive_n,
        output_dir=args.output_dir,
        formats=tuple(args.formats) if args.formats else None,
        workers=args.workers,
        backend=args.backend,
        tolerance=args.tolerance,
        include_named=args.include_named,
        include_regular=args.include_regular,
        input_files=tuple(args.input_files) if args.input_files else None,
    )
    summary = run_all(config)

    if args.json:
        print_json(summary.to_dict())
    else:
        print(f"{'check':<16} {'checked':>9} {'passed':>9} {'failed':>7} {'skipped':>9} {'equality':>9}")
        for name, t in sorted(summary.totals.items()):
            print(f"{name:<16} {t.checked:>9} {t.passed:>9} {t.failed:>7} {t.skipped:>9} {t.equality_cases:>9}")
        for failure in summary.failures:
            print(f"FAILED {failure['check']} on {failure['graph_id']} (graph6 {failure['graph6']})")
        for path in summary.report_paths:
            print(f"report: {path}")
    return EXIT_OK if summary.ok else EXIT_CHECK_FAILED
