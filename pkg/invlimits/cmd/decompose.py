import json

from invlimits import api
from ._util import cprint, load_element, run


def _decompose(args, report) -> bool:
    system = api.load_system(args.system)
    g = load_element(args.element, system)
    G = g.system
    d = api.decompose(g)

    same = api.recompose(G, d) == g
    report.details['decomposition'] = d.to_dict()
    report.details['recomposed'] = same

    cprint(args, json.dumps(d.to_dict(), indent=4))
    cprint(args, f"recompose reproduces the element: {same}")
    return same


def decompose(args):
    return run(args, [args.system, args.element], _decompose)
