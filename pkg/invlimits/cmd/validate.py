
from invlimits import api
from ._util import cprint, load_element, run



def _validate(args, report) -> bool:
    data = api.from_json(args.path)
    kind = api.file_kind(data)
    report.details['kind'] = kind

    if kind == 'poset':
        D = api.load_directed_set(data)
        report.details['elements'] = len(D)
        report.details['symbolic'] = not D.is_finite
    elif kind == 'system':
        system = api.load_system(data)
        report.details['elements'] = len(system.base)
        report.details['fibers'] = {p: len(system.fiber(p)) for p in system.base}
    elif kind == 'groups':
        G = api.load_finite_group_system(data)
        report.details['orders'] = {p: len(group) for p, group in G.groups.items()}
    elif kind == 'element':
        g = load_element(args.path)
        report.details['variant'] = g.system.variant
        report.details['lengths'] = {p: g.length(p) for p in g.system.base}
    else:
        T = api.load_tree(data)
        report.details['nodes'] = len(T.nodes)
        report.details['height'] = T.height

    cprint(args, f"{args.path}: valid {kind} file.")
    return True


def validate(args):
    return run(args, [args.path], _validate)
