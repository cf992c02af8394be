import argparse

from invlimits import __version__ as VERSION
from invlimits.config import config
from invlimits.cmd import (
    empty,
    validate,
    threads,
    decompose,
    model,
    game,
    good
)


def main(argv=None) -> int:
    default_options = argparse.ArgumentParser(add_help=False)
    default_options.add_argument("--version", "-v", action="store_true", help="Returns the module version")
    default_options.add_argument("--verbose", "-V", action="store_true", help="Activate extended output and progress bars.")
    default_options.add_argument("--quiet", '-q', action="store_true", help="Suppress any kind of output.")
    default_options.add_argument("--dev", action="store_true", help="Development mode.\nUnexpected errors will not be handled and the full traceback is printed to the screen.")
    default_options.add_argument("--logfile", type=str, help="If a file is given, output will be written to that file instead of printed to StdOut.")
    default_options.add_argument("--out", "-o", type=str, default=None, help="Write the JSON run report to this path.")
    default_options.add_argument("--seed", type=int, default=0, help="Seed of all randomized choices. Defaults to 0.")
    default_options.add_argument("--limit", "-L", type=int, default=config.display_limit, help="Maximum number of listed items.")

    # build the main Argument parser
    parser = argparse.ArgumentParser(description="invlimits inverse limit workbench CLI", add_help=True, parents=[default_options])
    parser.set_defaults(func=empty)

    # add subparsers
    subparsers = parser.add_subparsers(title="Commands", description="CLI commands")

    # validate parser
    validate_parser = subparsers.add_parser('validate', parents=[default_options], add_help=True, help="Load any input file and run all load-time checks.")
    validate_parser.add_argument('path', type=str, help="Poset, system, group system, element or tree file.")
    validate_parser.set_defaults(func=validate)

    # threads parser
    threads_parser = subparsers.add_parser('threads', parents=[default_options], add_help=True, help="Enumerate the threads of an inverse system.")
    threads_parser.add_argument('path', type=str, help="System or tree file.")
    threads_parser.set_defaults(func=threads)

    # decompose parser
    decompose_parser = subparsers.add_parser('decompose', parents=[default_options], add_help=True, help="Decompose a limit element into basis elements.")
    decompose_parser.add_argument('system', type=str, help="System file.")
    decompose_parser.add_argument('element', type=str, help="Element file holding one word (or vector) per point.")
    decompose_parser.set_defaults(func=decompose)

    # model parser
    model_parser = subparsers.add_parser('model', parents=[default_options], add_help=True, help="Build the model of a finite group system and compare its automorphisms with the inverse limit.")
    model_parser.add_argument('path', type=str, help="Finite group system file.")
    model_parser.set_defaults(func=model)

    # game parser
    game_parser = subparsers.add_parser('game', parents=[default_options], add_help=True, help="Play the Player I bound strategy against a seeded random Player II.")
    game_parser.add_argument('path', type=str, help="Poset file. The poset of a system file is used as well.")
    game_parser.add_argument('--rounds', '-r', type=int, default=8, help="Number of rounds. Defaults to 8.")
    game_parser.set_defaults(func=game)

    # good parser
    good_parser = subparsers.add_parser('good', parents=[default_options], add_help=True, help="Check whether a system is (lam, nu)-good.")
    good_parser.add_argument('path', type=str, help="System or tree file.")
    good_parser.add_argument('lam', type=int, help="Bound on the size of the base and of every fiber.")
    good_parser.add_argument('nu', type=int, help="Size of the inverse limit.")
    good_parser.set_defaults(func=good)

    # parse the arguments
    args = parser.parse_args(argv)
    args.argv = argv

    #-------------------
    # RUN THE TOOL
    #-------------------
    # print version
    if args.version:
        print(VERSION)
        return 0

    return args.func(args)
