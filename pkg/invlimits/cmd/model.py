from tabulate import tabulate

from invlimits import api
from ._util import cprint, run


def _model(args, report) -> bool:
    G = api.load_finite_group_system(args.path)
    phi = api.verify_phi_isomorphism(G, verbose=args.verbose)
    report.details['phi'] = phi.model_dump()

    cprint(args, tabulate([
        ['|M|', phi.domain_size],
        ['|Aut(M)|', phi.automorphisms],
        ['|G_I|', phi.limit_size],
        ['translation form', phi.translation_form],
        ['injective', phi.injective],
        ['surjective', phi.surjective],
        ['homomorphism', phi.homomorphism],
        ['round trip', phi.round_trip],
        ['group', phi.group_closed]
    ]))
    for note in phi.notes:
        cprint(args, note)
    return phi.passed


def model(args):
    return run(args, [args.path], _model)
