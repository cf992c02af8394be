from invlimits import api
from ._util import cprint, load_carrier, run


def _good(args, report) -> bool:
    system, _ = load_carrier(args.path)
    goodness = api.check_good(system, args.lam, args.nu)
    report.details['goodness'] = goodness.model_dump()

    cprint(args, f"game condition: {goodness.game_condition}")
    if goodness.witness:
        cprint(args, f"  {goodness.witness}")
    cprint(args, f"|D| = {goodness.base_size}, max |A_p| = {goodness.max_fiber}, lam = {goodness.lam}: {goodness.clause_two}")
    cprint(args, f"|A_I| = {goodness.limit_cardinality}, nu = {goodness.nu}: {goodness.clause_three}")
    if args.verbose:
        for note in goodness.notes:
            cprint(args, note)
    cprint(args, f"({goodness.lam}, {goodness.nu})-good: {goodness.good}" + (
        f", failing clauses {goodness.failing_clauses}" if not goodness.good else ''
    ))
    return goodness.good


def good(args):
    return run(args, [args.path], _good)
