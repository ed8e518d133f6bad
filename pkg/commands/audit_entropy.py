# audit-entropy <input> -d <d>: the stepwise entropy chain table
from argparse import Namespace

from commands.common import EXIT_CHECK_FAILED, EXIT_OK, add_input_argument, add_json_flag, bits, print_json
from harness.inputs import resolve_graph
from indset.bounds import DEFAULT_TOLERANCE
from indset.entropy import audit_kahn_chain
from indset.errors import DomainError
from indset.graph import bipartition


def register(subparsers) -> None:
    parser = subparsers.add_parser("audit-entropy", help="audit every step of the entropy proof on a regular bipartite graph")
    add_input_argument(parser)
    parser.add_argument("-d", "--degree", dest="d", type=int, required=True)
    parser.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    add_json_flag(parser)
    parser.set_defaults(func=run)


def run(args: Namespace) -> int:
    graph_id, g = resolve_graph(args.input)
    bg = bipartition(g)
    if bg is None:
        raise DomainError(f"{graph_id} is not bipartite")
    audit = audit_kahn_chain(bg, args.d, args.tolerance)

    if args.json:
        print_json(audit.to_dict())
    else:
        print(f"{graph_id}: n={audit.n} d={audit.d} log2 i(G) = {bits(audit.log2_count)}")
        print(f"{'step':<22} {'parts':<5} {'lhs bits':>12} {'rel':^4} {'rhs bits':>12} {'slack':>12}  pass")
        for s in audit.steps:
            print(f"{s.name:<22} {s.orientation:<5} {bits(s.lhs):>12} {s.relation:^4} {bits(s.rhs):>12} {bits(s.slack):>12}  {'yes' if s.passed else 'NO'}")
    return EXIT_OK if audit.passed else EXIT_CHECK_FAILED
