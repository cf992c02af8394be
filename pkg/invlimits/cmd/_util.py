import os
import sys
import json
import time
import traceback
from datetime import datetime
from typing import Any, Callable, Dict, List, Literal

from pydantic import BaseModel

from invlimits import __version__ as VERSION
from invlimits import api
from invlimits.models.files import ElementFile, validate
from invlimits.util.dict_functions import serialize
from invlimits.util.exceptions import InputError, InvariantViolation, MalformedInput
from invlimits.util.logging import get_logger


EXIT_CODES = {'pass': 0, 'fail': 1, 'error': 2}


class RunReport(BaseModel):
    command: List[str]
    inputs: Dict[str, str] = {}
    outcome: Literal['pass', 'fail', 'error'] = 'error'
    artifacts: List[str] = []
    duration: float = 0.0
    details: Dict[str, Any] = {}
    messages: List[Dict[str, str]] = []

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.outcome]


def welcome():
    print("invlimits inverse limit workbench CLI (v%s)" % VERSION)


def empty(args=None):
    welcome()
    print("Nothing to do.\nRun with -h flag to get options.")
    return 0


def cprint(args, *print_args, **kwargs):
    """
    Wrapper around builtin print function. There is a bit of parameter name
    overloads that might be renamed in the future.

    Parameters
    ----------
    args : argparse.NameSpace
        The argepase namespace to look for printing options
    print_args : list
        These are the args given to the builtin function for print
    kwargs : keyword arguments
        Overwrite print options. They will be passed to the
        builtin print function.
        **Do not overwrite the ``file`` argument.**
    """
    # if quiet was passed, but logfile not, do not print anything
    if args.quiet and not args.logfile:
        return

    # if logfile is given
    if args.logfile:
        cmds = ['[{date}]:\t'.format(date=datetime.utcnow().isoformat()), *print_args]
        with open(args.logfile, 'a') as lf:
            print(*cmds, file=lf, **kwargs)
    else:
        print(*print_args, file=sys.stdout, **kwargs)


def run(args, paths: List[str], body: Callable[[Any, RunReport], bool]) -> int:
    """
    Run a command body and emit exactly one run report.

    The body fills ``report.details`` and returns whether the run
    passed. Invariant violations end the run with outcome ``fail``,
    input errors and missing or broken files with outcome ``error``.
    Unexpected errors are reported as ``error`` as well and their
    traceback is written to ``error.log``, unless ``--dev`` is set.
    """
    argv = args.argv if args.argv is not None else sys.argv[1:]
    report = RunReport(command=['invlimits', *argv])
    get_logger(report, level=10 if args.verbose else 20)
    start = time.perf_counter()

    try:
        for path in paths:
            if path is not None and os.path.isfile(path):
                report.inputs[path] = api.digest(path)
        report.outcome = 'pass' if body(args, report) else 'fail'
    except InvariantViolation as e:
        report.outcome = 'fail'
        report.details['error'] = {'type': type(e).__name__, 'message': str(e)}
        for attr in ('pair', 'triple'):
            if hasattr(e, attr):
                report.details['error'][attr] = list(getattr(e, attr))
    except (InputError, FileNotFoundError) as e:
        report.outcome = 'error'
        report.details['error'] = {'type': type(e).__name__, 'message': str(e)}
    except Exception as e:
        if args.dev:
            raise e
        report.outcome = 'error'
        report.details['error'] = {'type': type(e).__name__, 'message': str(e)}
        if not args.quiet:
            print("An unexpected error occured:\n{msg}\nFull error traceback in 'error.log'".format(msg=str(e)))
        with open('error.log', 'w') as f:
            traceback.print_tb(e.__traceback__, file=f)

    report.duration = time.perf_counter() - start
    if args.out:
        report.artifacts.append(args.out)
        with open(args.out, 'w') as f:
            json.dump(serialize(report), f, indent=4)

    if 'error' in report.details:
        cprint(args, f"{report.details['error']['type']}: {report.details['error']['message']}")
    cprint(args, f"outcome: {report.outcome} ({report.duration:.3f}s)")
    return report.exit_code


def load_carrier(path: str):
    """
    Load an inverse system of sets from a system file or the tree
    system of a tree file.
    """
    data = api.from_json(path)
    kind = api.file_kind(data)
    if kind == 'tree':
        tree = api.load_tree(data)
        return api.tree_system(tree), tree
    if kind == 'system':
        return api.load_system(data), None
    raise MalformedInput(f"'{path}' is a {kind} file, expected a system or tree file.")


def load_element(path: str, system=None):
    """
    Load the eager limit element of an element file. Without ``system``
    the system named in the file is loaded, relative to the file.
    """
    desc = validate(ElementFile, api.from_json(path))
    if system is None:
        if desc.system is None:
            raise MalformedInput(f"The element file '{path}' does not name its system.")
        system = api.load_system(os.path.join(os.path.dirname(os.path.abspath(path)), desc.system))
    G = api.induced_system(system, desc.variant)
    return api.limit_element_eager(G, desc.words)
