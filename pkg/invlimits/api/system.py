"""SYSTEM API

Inverse systems of sets, their threads and the two generated families:

* restriction systems: the powerset of ``{0, ..., n-1}`` with all
  bit-functions on ``u`` as fiber ``A_u`` and restriction as connecting
  maps
* tree systems: the levels of a finite tree over the chain of its ranks,
  connected by taking ancestors

"""
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union
import itertools
import logging

import networkx as nx
import numpy as np
from tqdm import tqdm

from invlimits.config import config
from invlimits.models.files import SystemFile, TreeFile, split_pair_key, validate
from invlimits.models.poset import DirectedSet
from invlimits.models.system import GoodnessReport, InverseSystem, Thread, Tree
from invlimits.util.exceptions import (
    CoherenceViolation,
    EmptyFiber,
    EmptyLevel,
    InputError,
    MalformedInput,
    NoBound,
    NonTotalMap,
    NotCofinal,
    SizeLimit,
    SymbolicUnsupported,
    UnknownElement
)
from .io import from_json
from .poset import (
    all_sequence_strategies,
    chain,
    load_directed_set,
    maximum_of,
    play_bounded,
    player_one_bound_strategy,
    powerset
)


logger = logging.getLogger(__name__)

# Player II move sequences played against the bound strategy in check_good
WITNESS_RUNS = 4096


def load_system(source: Union[str, dict, SystemFile]) -> InverseSystem:
    """
    Load an inverse system from a system description.

    The ``maps`` section only needs to cover a generating set of the
    order. All other connecting maps are composed along paths of the given
    pairs. Afterwards, the full system is checked for coherence.

    Parameters
    ----------
    source : str, dict
        File name, JSON content or parsed dictionary of the form
        ``{"poset": ..., "fibers": {"p": [...]}, "maps": {"p<q": {...}}}``.

    Returns
    -------
    system : InverseSystem

    Raises
    ------
    EmptyFiber
        If a fiber is empty.
    NonTotalMap
        If a map is not defined on its whole domain, leaves its
        codomain, or a comparable pair is not connected by given maps.
    CoherenceViolation
        If a composed map differs from a direct one. The exception
        carries the failing triple.

    """
    if isinstance(source, str):
        source = from_json(source)
    desc = validate(SystemFile, source)

    D = load_directed_set(desc.poset)
    if not D.is_finite:
        logger.warning(f"{D} is symbolic, coherence is only checked on the probe chain.")

    # fibers
    for p in desc.fibers:
        D.index(p)
    fibers: Dict[str, Tuple[str, ...]] = {}
    for p in D:
        if p not in desc.fibers or len(desc.fibers[p]) == 0:
            raise EmptyFiber(f"The fiber A_{p} is empty.")
        fibers[p] = tuple(sorted(set(desc.fibers[p])))

    # given maps
    given: Dict[Tuple[str, str], Dict[str, str]] = {}
    graph = nx.DiGraph()
    graph.add_nodes_from(D.elements)
    for key, f in desc.maps.items():
        p, q = split_pair_key(key)
        if not D.leq(p, q):
            raise MalformedInput(f"The map '{key}' is given, but {p} <= {q} does not hold.")
        _check_total(p, q, f, fibers)
        if p == q:
            for a, b in f.items():
                if a != b:
                    raise CoherenceViolation(p, p, p, f"f_{{{p},{p}}} is not the identity at '{a}'.")
            continue
        given[(p, q)] = dict(f)
        graph.add_edge(p, q)

    # compose the remaining maps along paths of given pairs
    table: Dict[Tuple[str, str], Dict[str, str]] = {}
    for p, q in D.comparable_pairs():
        if p == q:
            continue
        if (p, q) in given:
            table[(p, q)] = given[(p, q)]
            continue
        try:
            path = nx.shortest_path(graph, p, q)
        except nx.NetworkXNoPath:
            raise NonTotalMap(f"{p} <= {q}, but no given maps connect A_{q} to A_{p}.")
        table[(p, q)] = {a: _push_along(path, given, a) for a in fibers[q]}

    system = InverseSystem(D, fibers, table, name=D.name)
    n = system.check_coherence()
    logger.info(f"Loaded {system} with {len(table)} connecting maps, {n} coherent triples.")
    return system


def _check_total(p: str, q: str, f: Mapping[str, str], fibers: Mapping[str, Sequence[str]]) -> None:
    domain, target = set(fibers[q]), set(fibers[p])
    for a in domain:
        if a not in f:
            raise NonTotalMap(f"f_{{{p},{q}}} is not defined on '{a}' of A_{q}.")
    for a, b in f.items():
        if a not in domain:
            raise NonTotalMap(f"f_{{{p},{q}}} is defined on '{a}', which is not in A_{q}.")
        if b not in target:
            raise NonTotalMap(f"f_{{{p},{q}}}({a}) = '{b}' is not in A_{p}.")


def _push_along(path: Sequence[str], given: Mapping[Tuple[str, str], Mapping[str, str]], a: str) -> str:
    # path runs upwards from p to q, a lives in A_q
    for lower, upper in reversed(list(zip(path, path[1:]))):
        a = given[(lower, upper)][a]
    return a


def restriction_id(assignment: Mapping[int, int]) -> str:
    """Fiber id of a bit-function, like ``'{0=1,2=0}'``."""
    return '{' + ','.join(f"{i}={assignment[i]}" for i in sorted(assignment)) + '}'


def members_of(subset: str) -> Tuple[int, ...]:
    """Inverse of :func:`invlimits.api.subset_id`."""
    content = subset[1:-1]
    return tuple(int(m) for m in content.split(',')) if content else ()


def restriction_system(n: int) -> InverseSystem:
    """
    Finite restriction system over the powerset of ``{0, ..., n-1}``.
    The fiber ``A_u`` holds all functions ``u -> {0, 1}`` and
    ``f_{u,v}`` restricts a function on ``v`` to ``u``. The threads
    correspond to the ``2^n`` functions on the whole set.

    Raises
    ------
    SizeLimit
        If ``n`` is not in ``1 .. Config.max_restriction``.

    """
    if not 1 <= n <= config.max_restriction:
        raise SizeLimit(f"Restriction systems are built for 1 <= n <= {config.max_restriction}, got {n}.")
    D = powerset(n)

    def fibers(u: str) -> List[str]:
        dom = members_of(u)
        return [restriction_id(dict(zip(dom, bits))) for bits in itertools.product((0, 1), repeat=len(dom))]

    def maps(u: str, v: str) -> Dict[str, str]:
        keep = set(members_of(u))
        return {s: restriction_id({i: b for i, b in _parse_assignment(s).items() if i in keep}) for s in fibers(v)}

    return InverseSystem(D, fibers, maps, name=f"restriction({n})")


def _parse_assignment(s: str) -> Dict[int, int]:
    content = s[1:-1]
    if content == '':
        return {}
    return {int(i): int(b) for i, b in (item.split('=') for item in content.split(','))}


def load_tree(source: Union[str, dict, TreeFile]) -> Tree:
    """Load a tree from ``{"nodes": [...], "parent": {"child": "parent"}}``."""
    if isinstance(source, str):
        source = from_json(source)
    desc = validate(TreeFile, source)
    T = Tree(desc.nodes, desc.parent)
    logger.info(f"Loaded {T}.")
    return T


def full_binary_tree(height: int) -> Tree:
    """
    Full binary tree. The root is ``'r'``, the children of ``t`` are
    ``t + '0'`` and ``t + '1'``.
    """
    if height < 1:
        raise InputError("A tree has at least height 1.")
    nodes = ['r' + ''.join(bits) for k in range(height) for bits in itertools.product('01', repeat=k)]
    parent = {t: t[:-1] for t in nodes if t != 'r'}
    return Tree(nodes, parent)


def random_tree(size: int, seed: int = 0) -> Tree:
    """
    Random recursive tree on the nodes ``'n0', ..., 'n<size-1>'``. Each
    node picks its parent uniformly among the nodes before it.
    """
    if size < 1:
        raise InputError("A tree has at least one node.")
    if seed < 0:
        raise InputError(f"The seed has to be non-negative, got {seed}.")
    rng = np.random.default_rng(seed)
    nodes = [f"n{i}" for i in range(size)]
    parent = {nodes[i]: nodes[int(rng.integers(i))] for i in range(1, size)}
    return Tree(nodes, parent)


def levels_of(T: Tree) -> List[Tuple[str, ...]]:
    return [T.level(alpha) for alpha in range(T.height)]


def cofinal_branches(T: Tree) -> List[Tuple[str, ...]]:
    return T.branches()


def rank_of(T: Tree, t: str) -> int:
    return T.rank(t)


def height_of(T: Tree) -> int:
    return T.height


def tree_system(T: Tree) -> InverseSystem:
    """
    Inverse system of the levels of ``T`` over the chain of ranks below
    its height. ``f_{alpha,beta}`` maps a node of rank ``beta`` to its
    ancestor of rank ``alpha``. Base element ids are ``'0', '1', ...``.
    """
    levels = levels_of(T)
    for alpha, level in enumerate(levels):
        if len(level) == 0:
            raise EmptyLevel(f"The tree has no nodes of rank {alpha}.")

    def maps(alpha: str, beta: str) -> Dict[str, str]:
        return {t: T.restrict(t, int(alpha)) for t in levels[int(beta)]}

    return InverseSystem(chain(len(levels)), lambda alpha: levels[int(alpha)], maps, name=f"tree({T.root})")


def enumerate_threads(system: InverseSystem, verbose: bool = False) -> List[Thread]:
    """
    Enumerate the inverse limit of a system over a finite base.

    Every thread is determined by its value at a maximum ``m``, so the
    threads are exactly the elements of ``A_m`` pushed down along the
    connecting maps.

    Returns
    -------
    threads : list
        All threads in lexicographic order of their values, taken in
        canonical element order.

    Raises
    ------
    SizeLimit
        If there are more than ``Config.max_threads`` threads.

    """
    D = system.base
    if not D.is_finite:
        raise SymbolicUnsupported("Threads can only be enumerated over finite directed sets.")
    m = maximum_of(D)
    if m is None:
        raise NoBound(f"{D} has no maximum.")

    top = system.fiber(m)
    if len(top) > config.max_threads:
        raise SizeLimit(f"A_{m} has {len(top)} elements, more than {config.max_threads} threads.")

    gen = tqdm(top) if verbose else top
    threads = [Thread({p: system.push(p, m, a) for p in D}) for a in gen]
    threads.sort(key=lambda t: t.key(D))
    logger.debug(f"{system}: {len(threads)} threads, pushed down from {m}.")
    return threads


def _check_branch(T: Tree, nodes: Sequence[str]) -> Tuple[str, ...]:
    if len(nodes) != T.height:
        raise NotCofinal(f"A cofinal branch has {T.height} nodes, got {len(nodes)}.")
    top = nodes[-1]
    if T.rank(top) != T.height - 1:
        raise NotCofinal(f"'{top}' does not have the maximal rank {T.height - 1}.")
    if tuple(nodes) != T.path_to(top):
        raise NotCofinal(f"{list(nodes)} is not the set of predecessors of '{top}'.")
    return tuple(nodes)


def thread_from_branch(T: Tree, branch: Iterable[str]) -> Thread:
    """
    Thread of the tree system picking the node of rank ``alpha`` of the
    branch at ``alpha``. The branch nodes may be given in any order.
    """
    nodes = sorted(branch, key=T.rank)
    _check_branch(T, nodes)
    return Thread({str(alpha): t for alpha, t in enumerate(nodes)})


def branch_from_thread(T: Tree, thread: Thread) -> Tuple[str, ...]:
    """Inverse of :func:`thread_from_branch`, the branch from the root upwards."""
    try:
        nodes = [thread[str(alpha)] for alpha in range(T.height)]
    except UnknownElement:
        raise NotCofinal(f"The thread is not defined on all {T.height} ranks.")
    for alpha, t in enumerate(nodes):
        if T.rank(t) != alpha:
            raise NotCofinal(f"The thread picks '{t}' at {alpha}, but its rank is {T.rank(t)}.")
    return _check_branch(T, nodes)


def _witness_rounds(D: DirectedSet) -> int:
    rounds = 1
    while rounds < 3 and len(D) ** (rounds + 1) <= WITNESS_RUNS:
        rounds += 1
    return rounds


def check_good(system: InverseSystem, lam: int, nu: int) -> GoodnessReport:
    """
    Check whether the system is ``(lam, nu)``-good at finite scale:

    1. Player II has no winning strategy in the game on the base. This
       is witnessed by the Player I bound strategy, which is played
       against every Player II move sequence of a few rounds.
    2. ``|D| <= lam`` and ``|A_p| <= lam`` for all ``p``.
    3. The inverse limit has exactly ``nu`` elements.

    Failing clauses are listed in the report, nothing is raised.
    """
    if lam < 0 or nu < 0:
        raise InputError("lam and nu have to be non-negative.")
    D = system.base
    notes = []

    max_fiber = max(len(system.fiber(p)) for p in D)
    clause_two = len(D) <= lam and max_fiber <= lam

    if not D.is_finite:
        logger.warning(f"{D} is symbolic, the game condition and |A_I| are unknown.")
        notes.append("The base is symbolic: no Player I witness is constructed and the limit is not enumerated.")
        failing = [1, 3] if clause_two else [1, 2, 3]
        return GoodnessReport(
            game_condition='unknown', base_size=len(D), max_fiber=max_fiber, lam=lam,
            clause_two=clause_two, nu=nu, clause_three=False, good=False,
            failing_clauses=failing, notes=notes
        )

    # clause 1
    witness = player_one_bound_strategy(D)
    rounds = _witness_rounds(D)
    runs, lost = 0, 0
    for opponent in all_sequence_strategies(D, rounds):
        runs += 1
        if not play_bounded(D, witness, opponent, rounds).player_one_wins:
            lost += 1
    if lost == 0:
        game_condition = 'holds-with-witness'
        witness_text = f"Player I bound strategy won all {runs} runs of {rounds} round(s)."
    else:
        game_condition = 'unknown'
        witness_text = None
        notes.append(f"The Player I bound strategy lost {lost} of {runs} runs.")

    # clause 3
    threads = enumerate_threads(system)
    clause_three = len(threads) == nu
    notes.append(
        "Clause 3 is checked as the equality |A_I| = nu. Infinite constructions "
        "only bound |A_I| from both sides, so a mismatch here does not refute an infinite analogue."
    )

    failing = [i for i, ok in ((1, lost == 0), (2, clause_two), (3, clause_three)) if not ok]
    report = GoodnessReport(
        game_condition=game_condition, witness=witness_text, base_size=len(D), max_fiber=max_fiber,
        lam=lam, clause_two=clause_two, limit_cardinality=len(threads), nu=nu,
        clause_three=clause_three, good=len(failing) == 0, failing_clauses=failing, notes=notes
    )
    logger.debug(f"{system} ({lam}, {nu})-good: {report.good}, failing {failing}.")
    return report
