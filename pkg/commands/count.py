# count <input>: i(G) and the independence polynomial
from argparse import Namespace

from commands.common import EXIT_OK, add_input_argument, add_json_flag, print_json
from harness.inputs import resolve_graph
from indset.counting import independence_polynomial


def register(subparsers) -> None:
    parser = subparsers.add_parser("count", help="count independent sets and print the independence polynomial")
    add_input_argument(parser)
    add_json_flag(parser)
    parser.set_defaults(func=run)


def run(args: Namespace) -> int:
    graph_id, g = resolve_graph(args.input)
    poly = independence_polynomial(g)
    if args.json:
        print_json({"graph_id": graph_id, "n": g.n, "m": g.m, "count": str(poly.count), "polynomial": poly.to_json()})
    else:
        print(poly.count)
        print(f"P(λ) = {poly}")
    return EXIT_OK
