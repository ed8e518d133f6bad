# layers <input> -w <v>: distance layers around a vertex
from argparse import Namespace

from commands.common import EXIT_OK, add_input_argument, print_json
from harness.inputs import resolve_graph
from indset.graph import layer_decomposition


def register(subparsers) -> None:
    parser = subparsers.add_parser("layers", help="dump the layer decomposition around a vertex")
    add_input_argument(parser)
    parser.add_argument("-w", "--vertex", dest="w", type=int, required=True)
    parser.set_defaults(func=run)


def run(args: Namespace) -> int:
    graph_id, g = resolve_graph(args.input)
    layers = layer_decomposition(g, args.w)
    print_json({"graph_id": graph_id} | layers.to_dict())
    return EXIT_OK
