# bounds <input> [--lambda r] [--mu r]: every applicable bound against the exact count
from argparse import Namespace

from commands.common import EXIT_CHECK_FAILED, EXIT_OK, add_input_argument, add_json_flag, bits, print_json, rational
from harness.inputs import resolve_graph
from indset.bounds import DEFAULT_TOLERANCE, bound_holds, bound_report
from indset.errors import DomainError


def register(subparsers) -> None:
    parser = subparsers.add_parser("bounds", help="compare log2 i(G) (and P_G) with the upper and lower bounds")
    add_input_argument(parser)
    parser.add_argument("--lambda", dest="lam", type=rational, help="fugacity for the weighted bounds")
    parser.add_argument("--mu", type=rational, help="second fugacity for the bigraph bound (needs --lambda)")
    parser.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    add_json_flag(parser)
    parser.set_defaults(func=run)


def run(args: Namespace) -> int:
    if args.mu is not None and args.lam is None:
        raise DomainError("--mu needs --lambda")
    graph_id, g = resolve_graph(args.input)
    report = bound_report(g, graph_id, args.lam, args.mu, args.tolerance)

    failed = [
        e for e in report.entries
        if not bound_holds(e, args.tolerance) or (e.biconditional and e.numeric_equality != e.structural_equality)
    ]
    if args.json:
        print_json(report.to_dict())
    else:
        print(f"{graph_id}: n={g.n} m={g.m} log2 i(G) = {bits(report.log2_count)}")
        print(f"{'bound':<24} {'kind':<6} {'bound bits':>12} {'value bits':>12} {'slack':>12}  equality")
        for e in report.entries:
            equality = "yes" if e.numeric_equality else "no"
            if e.biconditional:
                equality += f" (structural {'yes' if e.structural_equality else 'no'})"
            print(f"{e.name:<24} {e.kind:<6} {bits(e.log2_bound):>12} {bits(e.log2_value):>12} {bits(e.slack):>12}  {equality}")
    return EXIT_CHECK_FAILED if failed else EXIT_OK
