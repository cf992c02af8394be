"""POSET API

Loading directed sets, upper bounds and the game on directed sets.

The game is played in rounds. In round ``i`` Player I chooses ``p_2i``
and Player II answers with ``p_2i+1``. Player I wins a run if Player II
ever plays ``p_2i+1`` not above ``p_2i``, or if Player I always plays
above the previous move and the whole run has an upper bound.
Only finite prefixes can be played here, so apart from the first case the
verdicts are provisional.

"""
from typing import FrozenSet, Iterable, Iterator, Literal, Optional, Sequence, Union
import itertools
import logging

import numpy as np

from invlimits.models.poset import DirectedSet, GameStrategy, GameTranscript, Verdict
from invlimits.models.files import PosetFile, FinitePosetFile, validate
from invlimits.util.exceptions import (
    InputError,
    MalformedTranscript,
    NoBound,
    NotDirected,
    SymbolicUnsupported,
    UnknownElement
)
from .io import from_json


logger = logging.getLogger(__name__)


def subset_id(members: Iterable[int]) -> str:
    """Element id of a finite set of integers, like ``'{0,2}'``."""
    return '{' + ','.join(str(m) for m in sorted(members)) + '}'


def powerset(n: int) -> DirectedSet:
    """
    The powerset of ``{0, ..., n-1}`` ordered by inclusion. Elements are
    loaded in lexicographic order of their sorted member tuples, i.e.
    ``{}``, ``{0}``, ``{0,1}``, ``{1}`` for ``n=2``.
    """
    if n < 0:
        raise InputError("The powerset parameter has to be non-negative.")
    subsets = sorted(
        (tuple(c) for k in range(n + 1) for c in itertools.combinations(range(n), k))
    )
    masks = {subset_id(s): sum(1 << i for i in s) for s in subsets}

    def leq(p: str, q: str) -> bool:
        return masks[p] & ~masks[q] == 0

    return DirectedSet(
        'finite',
        [subset_id(s) for s in subsets],
        leq=leq,
        top=subset_id(range(n)),
        name=f"powerset({n})"
    )


def chain(n: int) -> DirectedSet:
    """The chain ``0 < 1 < ... < n-1`` with element ids ``'0'`` to ``'n-1'``."""
    if n < 1:
        raise InputError("A chain needs at least one element.")
    return DirectedSet(
        'finite',
        [str(i) for i in range(n)],
        leq=lambda p, q: int(p) <= int(q),
        top=str(n - 1),
        name=f"chain({n})"
    )


def symbolic_chain(length: int) -> DirectedSet:
    """
    The natural numbers as a symbolic directed set. The probe chain
    holds the first ``length`` numbers, the bound oracle returns the
    maximum of a finite set.
    """
    if length < 1:
        raise InputError("A probe chain needs at least one element.")

    def bound(members: FrozenSet[str]) -> Optional[str]:
        return str(max(int(m) for m in members))

    return DirectedSet.symbolic(
        leq=lambda p, q: int(p) <= int(q),
        probe_chain=[str(i) for i in range(length)],
        bound_oracle=bound,
        name=f"omega({length})"
    )


def load_directed_set(source: Union[str, dict, PosetFile]) -> DirectedSet:
    """
    Load a directed set from a poset description.

    Parameters
    ----------
    source : str, dict
        Either a file name, JSON content or the parsed dictionary. Finite
        descriptions list ``elements`` and ``leq`` pairs; builtin
        descriptions name one of ``'powerset'``, ``'chain'`` or
        ``'omega'`` together with a ``param``.

    Returns
    -------
    D : DirectedSet
        Finite descriptions are checked for directedness.

    Raises
    ------
    NotDirected
        If two elements of a finite description have no upper bound.

    """
    if isinstance(source, str):
        source = from_json(source)
    desc = validate(PosetFile, source)

    if isinstance(desc, FinitePosetFile):
        D = DirectedSet.from_pairs(desc.elements, desc.leq)
        p, q = _unbounded_pair(D) or (None, None)
        if p is not None:
            raise NotDirected(p, q)
    elif desc.name == 'powerset':
        D = powerset(desc.param)
    elif desc.name == 'chain':
        D = chain(desc.param)
    else:
        D = symbolic_chain(desc.param)

    logger.info(f"Loaded {D}.")
    return D


def _unbounded_pair(D: DirectedSet):
    if D.order is not None:
        # common[i, j] counts the common upper bounds of elements i and j
        order = D.order.astype(np.int64)
        common = order @ order.T
        missing = np.argwhere(common == 0)
        if len(missing) > 0:
            i, j = missing[0]
            return D.elements[i], D.elements[j]
        return None

    for i, p in enumerate(D.elements):
        for q in D.elements[i + 1:]:
            if not any(D.leq(p, r) and D.leq(q, r) for r in D.elements):
                return p, q
    return None


def is_directed(D: DirectedSet) -> bool:
    """
    Check that every pair of loaded elements has an upper bound among
    the loaded elements.

    Symbolic directed sets can only be checked if a bound oracle is
    present. In that case every pair of the probe chain is checked.
    """
    if D.kind == 'symbolic':
        if D.bound_oracle is None:
            raise SymbolicUnsupported(f"{D} has no bound oracle, directedness cannot be decided.")
        for i, p in enumerate(D.elements):
            for q in D.elements[i:]:
                try:
                    upper_bound(D, {p, q})
                except NoBound:
                    return False
        return True

    return _unbounded_pair(D) is None


def upper_bound(D: DirectedSet, S: Iterable[str]) -> str:
    """
    Return the first loaded element in canonical load order that is
    above every member of ``S``. Symbolic directed sets consult their
    bound oracle first.

    Raises
    ------
    NoBound
        If no loaded element bounds ``S``.

    """
    S = frozenset(S)
    if len(S) == 0:
        raise InputError("Upper bounds are only searched for nonempty sets.")
    idx = [D.index(s) for s in S]

    if D.bound_oracle is not None:
        r = D.bound_oracle(S)
        if r is not None and r in D and all(D.leq(s, r) for s in S):
            return r

    if D.order is not None:
        candidates = np.flatnonzero(np.all(D.order[idx, :], axis=0))
        if len(candidates) > 0:
            return D.elements[candidates[0]]
    else:
        for r in D.elements:
            if all(D.leq(s, r) for s in S):
                return r

    raise NoBound(f"No loaded element of {D.name} is above {sorted(S)}.")


def maximum_of(D: DirectedSet) -> Optional[str]:
    """
    Return the first element that is above all others, if any.
    Finite directed sets always have one.
    """
    if D.kind != 'finite':
        raise SymbolicUnsupported("Maxima are only searched in finite directed sets.")

    if D.order is not None:
        candidates = np.flatnonzero(np.all(D.order, axis=0))
        return D.elements[candidates[0]] if len(candidates) > 0 else None

    # verify the maximum known from the construction
    if D.top is not None and all(D.leq(p, D.top) for p in D.elements):
        return D.top
    for r in D.elements:
        if all(D.leq(p, r) for p in D.elements):
            return r
    return None


def judge_transcript(D: DirectedSet, moves: Sequence[str]) -> GameTranscript:
    """
    Judge a finite run of the game.

    The verdict is ``I-immediate`` at the least round ``i`` in which
    Player II played ``p_2i+1`` not above ``p_2i``. Otherwise it is
    ``II-provisional`` if Player I broke ``p_2i+1 <= p_2i+2`` somewhere,
    ``I-provisional`` if all moves have an upper bound and
    ``undecided`` if they have none.
    """
    moves = tuple(moves)
    if len(moves) == 0:
        raise MalformedTranscript("An empty transcript cannot be judged.")
    for m in moves:
        if m not in D:
            raise MalformedTranscript(f"The move '{m}' is not a loaded element of {D.name}.")

    # Player II has to play above Player I
    for j in range(1, len(moves), 2):
        if not D.leq(moves[j - 1], moves[j]):
            return GameTranscript(moves=moves, verdict=Verdict.I_IMMEDIATE, round=j // 2)

    # Player I has to play above Player II
    for j in range(2, len(moves), 2):
        if not D.leq(moves[j - 1], moves[j]):
            return GameTranscript(moves=moves, verdict=Verdict.II_PROVISIONAL, round=j // 2)

    last_round = (len(moves) - 1) // 2
    try:
        upper_bound(D, moves)
    except NoBound:
        return GameTranscript(moves=moves, verdict=Verdict.UNDECIDED, round=last_round)
    return GameTranscript(moves=moves, verdict=Verdict.I_PROVISIONAL, round=last_round)


def play_bounded(D: DirectedSet, strategy_one: GameStrategy, strategy_two: GameStrategy, rounds: int) -> GameTranscript:
    """
    Let both strategies play ``rounds`` rounds and judge the result.
    The run stops early once Player II has lost immediately.
    """
    if rounds < 1:
        raise InputError("At least one round has to be played.")
    if strategy_one.side != 'I' or strategy_two.side != 'II':
        raise InputError("The first strategy has to belong to Player I, the second one to Player II.")

    moves = []
    for _ in range(rounds):
        p = strategy_one(moves)
        moves.append(p)
        q = strategy_two(moves)
        moves.append(q)
        if p not in D or q not in D:
            break
        if not D.leq(p, q):
            break

    transcript = judge_transcript(D, moves)
    logger.debug(f"{strategy_one.name} vs. {strategy_two.name}: {transcript.verdict.value} in round {transcript.round}")
    return transcript


def player_one_bound_strategy(D: DirectedSet) -> GameStrategy:
    """
    Player I answers every prefix with the upper bound of all moves
    played so far and opens with the first loaded element. On finite
    directed sets every run played by this strategy is won by Player I.
    """
    if D.kind == 'symbolic' and D.bound_oracle is None:
        raise SymbolicUnsupported(f"{D} has no bound oracle to play upper bounds.")

    def respond(prefix):
        if len(prefix) == 0:
            return D.elements[0]
        return upper_bound(D, prefix)

    return GameStrategy('I', respond, name='bound')


def constant_strategy(element: str, side: Literal['I', 'II'] = 'II') -> GameStrategy:
    return GameStrategy(side, lambda prefix: element, name=f"constant({element})")


def sequence_strategy(moves: Sequence[str], side: Literal['I', 'II'] = 'II') -> GameStrategy:
    """
    Play the given moves in order, one per round, repeating the last
    one once the sequence is used up.
    """
    moves = tuple(moves)
    if len(moves) == 0:
        raise InputError("A sequence strategy needs at least one move.")

    def respond(prefix):
        turn = len(prefix) // 2
        return moves[min(turn, len(moves) - 1)]

    return GameStrategy(side, respond, name=f"sequence({','.join(moves)})")


def random_strategy(D: DirectedSet, side: Literal['I', 'II'] = 'II', seed: int = 0) -> GameStrategy:
    """
    Play a random loaded element. The choice is drawn from a generator
    seeded with ``seed`` and the prefix, so equal prefixes give
    equal moves.
    """
    if seed < 0:
        raise InputError(f"The seed has to be non-negative, got {seed}.")

    def respond(prefix):
        rng = np.random.default_rng([seed, len(prefix), *[D.index(m) for m in prefix]])
        return D.elements[int(rng.integers(len(D)))]

    return GameStrategy(side, respond, name=f"random({seed})")


def all_sequence_strategies(D: DirectedSet, rounds: int, side: Literal['I', 'II'] = 'II') -> Iterator[GameStrategy]:
    """
    Enumerate one sequence strategy per sequence of ``rounds`` moves.
    Against a deterministic opponent these cover every strategy.
    """
    for moves in itertools.product(D.elements, repeat=rounds):
        yield sequence_strategy(moves, side=side)
