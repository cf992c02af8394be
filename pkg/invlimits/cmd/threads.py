from tabulate import tabulate

from invlimits import api
from ._util import cprint, load_carrier, run


def _threads(args, report) -> bool:
    system, tree = load_carrier(args.path)
    threads = api.enumerate_threads(system, verbose=args.verbose)

    limit = args.limit
    report.details['count'] = len(threads)
    report.details['threads'] = [t.to_dict() for t in threads[:limit]]

    cprint(args, f"{len(threads)} threads")
    elements = list(system.base.elements)
    cprint(args, tabulate([t.key(system.base) for t in threads[:limit]], headers=elements))
    if len(threads) > limit:
        cprint(args, f"... {len(threads) - limit} more")

    if tree is not None:
        branches = api.cofinal_branches(tree)
        report.details['branches'] = len(branches)
        cprint(args, f"{len(branches)} cofinal branches")
        return len(branches) == len(threads)
    return True


def threads(args):
    return run(args, [args.path], _threads)
