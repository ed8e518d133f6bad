# verify <check> <input>: one named check with its full witness output
from argparse import Namespace

from commands.common import EXIT_CHECK_FAILED, EXIT_OK, add_input_argument, print_json
from harness.checks import FAILED, SKIPPED, CheckContext, check_names, run_check
from harness.corpus import CorpusEntry
from harness.inputs import resolve_graph
from harness.runconfig import DEFAULT_LAMBDAS, DEFAULT_TOLERANCE, DEFAULT_WEIGHT_GRID, parse_rational_list, parse_weight_grid
from indset.errors import DomainError


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="run one named check on one graph")
    parser.add_argument("check", choices=check_names())
    add_input_argument(parser)
    parser.add_argument("--lambdas", type=parse_rational_list, default=DEFAULT_LAMBDAS,
                        help="comma-separated fugacities, e.g. 1/2,1,2")
    parser.add_argument("--weights", type=parse_weight_grid, default=DEFAULT_WEIGHT_GRID,
                        help="comma-separated lambda:mu pairs, e.g. 1:1,1/2:2")
    parser.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    parser.set_defaults(func=run)


def run(args: Namespace) -> int:
    graph_id, g = resolve_graph(args.input)
    ctx = CheckContext(lambdas=tuple(args.lambdas), weight_grid=tuple(args.weights), tolerance=args.tolerance)
    results = run_check(CorpusEntry(graph_id, g, "cli"), args.check, ctx)

    skipped = [r for r in results if r.result == SKIPPED]
    if skipped:
        raise DomainError(f"Check {args.check} does not apply to {graph_id}: {skipped[0].detail['reason']}")
    print_json([r.to_dict() for r in results])
    return EXIT_CHECK_FAILED if any(r.result == FAILED for r in results) else EXIT_OK
