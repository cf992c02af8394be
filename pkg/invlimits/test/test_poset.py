"""
Directed sets, upper bounds and the game.

"""
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from invlimits import api
from invlimits.models import DirectedSet, Verdict
from invlimits.util.exceptions import (
    InputError,
    MalformedInput,
    MalformedTranscript,
    NoBound,
    NotDirected,
    SymbolicUnsupported,
    UnknownElement
)
from ._util import fixture


FINITE_FIXTURES = ['poset_singleton.json', 'poset_powerset2.json', 'poset_vee.json', 'poset_diamond.json']


def finite_directed_sets():
    sets = [api.load_directed_set(fixture(name)) for name in FINITE_FIXTURES]
    sets.extend([api.chain(4), api.powerset(3)])
    return sets


def closure(elements, pairs):
    # Warshall on plain sets
    leq = {(e, e) for e in elements} | set(pairs)
    for k in elements:
        for i in elements:
            for j in elements:
                if (i, k) in leq and (k, j) in leq:
                    leq.add((i, j))
    return leq


def check_load():
    D = api.load_directed_set(fixture('poset_singleton.json'))
    assert len(D) == 1 and D.is_finite
    assert api.maximum_of(D) == 'p'

    D = api.load_directed_set(fixture('poset_powerset2.json'))
    assert D.elements == ('{}', '{0}', '{0,1}', '{1}')
    assert api.is_directed(D)
    assert api.maximum_of(D) == '{0,1}'
    assert D.leq('{1}', '{0,1}') and not D.leq('{0}', '{1}')

    # file name, JSON content and dict are equivalent
    content = '{"kind": "finite", "elements": ["x", "y"], "leq": [["x", "y"]]}'
    assert api.load_directed_set(content).elements == ('x', 'y')
    assert api.maximum_of(api.load_directed_set({'kind': 'builtin', 'name': 'chain', 'param': 3})) == '2'

    with pytest.raises(NotDirected) as e:
        api.load_directed_set(fixture('poset_antichain.json'))
    assert set(e.value.pair) == {'a', 'b'}

    with pytest.raises(UnknownElement):
        api.load_directed_set({'kind': 'finite', 'elements': ['a'], 'leq': [['a', 'b']]})
    with pytest.raises(MalformedInput):
        api.load_directed_set({'kind': 'finite', 'elements': []})
    with pytest.raises(MalformedInput):
        api.load_directed_set({'kind': 'finite', 'elements': ['a', 'a']})
    return True


def check_cycles_are_kept():
    # antisymmetry is not required, a and b stay distinct
    D = api.load_directed_set({'kind': 'finite', 'elements': ['a', 'b'], 'leq': [['a', 'b'], ['b', 'a']]})
    assert len(D) == 2
    assert D.leq('a', 'b') and D.leq('b', 'a')
    assert api.maximum_of(D) == 'a'
    return True


def check_upper_bounds():
    D = api.load_directed_set(fixture('poset_vee.json'))
    assert api.upper_bound(D, {'p', 'q'}) == 'r'
    assert api.upper_bound(D, {'p'}) == 'p'

    broken = DirectedSet.from_pairs(['a', 'b'], [])
    assert not api.is_directed(broken)
    with pytest.raises(NoBound):
        api.upper_bound(broken, {'a', 'b'})
    with pytest.raises(InputError):
        api.upper_bound(D, set())
    with pytest.raises(UnknownElement):
        api.upper_bound(D, {'x'})
    return True


def check_symbolic():
    D = api.symbolic_chain(5)
    assert not D.is_finite
    assert D.probe_chain == ('0', '1', '2', '3', '4')
    assert api.is_directed(D)
    assert api.upper_bound(D, {'1', '3'}) == '3'
    with pytest.raises(SymbolicUnsupported):
        api.maximum_of(D)

    blind = DirectedSet.symbolic(leq=lambda p, q: int(p) <= int(q), probe_chain=['0', '1'])
    with pytest.raises(SymbolicUnsupported):
        api.is_directed(blind)
    with pytest.raises(MalformedInput):
        DirectedSet.symbolic(leq=lambda p, q: int(p) <= int(q), probe_chain=['1', '0'])
    return True


def check_judge():
    D = api.chain(3)
    t = api.judge_transcript(D, ['1', '0'])
    assert t.verdict == Verdict.I_IMMEDIATE and t.round == 0

    t = api.judge_transcript(D, ['0', '1', '0', '2'])
    assert t.verdict == Verdict.II_PROVISIONAL and t.round == 1
    assert not t.player_one_wins

    t = api.judge_transcript(D, ['0', '1', '2', '2'])
    assert t.verdict == Verdict.I_PROVISIONAL and t.round == 1
    assert t.rounds() == [('0', '1'), ('2', '2')]

    # Player II loses immediately even if Player I broke the ascent before
    t = api.judge_transcript(D, ['0', '2', '1', '0'])
    assert t.verdict == Verdict.I_IMMEDIATE and t.round == 1

    with pytest.raises(MalformedTranscript):
        api.judge_transcript(D, [])
    with pytest.raises(MalformedTranscript):
        api.judge_transcript(D, ['0', 'x'])
    return True


def check_play():
    D = api.chain(3)
    bound = api.player_one_bound_strategy(D)

    t = api.play_bounded(D, bound, api.sequence_strategy(['2', '0']), 5)
    assert t.verdict == Verdict.I_IMMEDIATE and t.round == 1
    assert len(t.moves) == 4

    t = api.play_bounded(D, bound, api.constant_strategy('2'), 3)
    assert t.verdict == Verdict.I_PROVISIONAL
    assert t.moves == ('0', '2', '2', '2', '2', '2')

    with pytest.raises(InputError):
        api.play_bounded(D, bound, api.constant_strategy('2'), 0)
    with pytest.raises(InputError):
        api.play_bounded(D, api.constant_strategy('2', side='II'), bound, 3)
    return True


def check_random_strategy_is_deterministic():
    D = api.powerset(3)
    s = api.random_strategy(D, seed=42)
    prefix = ['{}', '{0}', '{0,1}']
    assert s(prefix) == s(list(prefix))

    bound = api.player_one_bound_strategy(D)
    a = api.play_bounded(D, bound, api.random_strategy(D, seed=7), 8)
    b = api.play_bounded(D, bound, api.random_strategy(D, seed=7), 8)
    assert a == b

    with pytest.raises(InputError):
        api.random_strategy(D, seed=-1)
    return True


def check_bound_strategy_wins(D: DirectedSet):
    bound = api.player_one_bound_strategy(D)
    for seed in range(100):
        t = api.play_bounded(D, bound, api.random_strategy(D, side='II', seed=seed), 8)
        assert t.verdict in (Verdict.I_PROVISIONAL, Verdict.I_IMMEDIATE)

    if len(D) <= 3:
        runs = 0
        for opponent in api.all_sequence_strategies(D, 3):
            assert api.play_bounded(D, bound, opponent, 3).player_one_wins
            runs += 1
        assert runs == len(D) ** 3
    return True


def check_immediate_verdict_is_final(D: DirectedSet, max_moves: int = 5):
    # one-move extensions suffice, longer ones follow by induction
    n = 0
    for length in range(1, max_moves + 1):
        for moves in itertools.product(D.elements, repeat=length):
            t = api.judge_transcript(D, moves)
            if t.verdict != Verdict.I_IMMEDIATE:
                continue
            for m in D.elements:
                longer = api.judge_transcript(D, [*moves, m])
                assert longer.verdict == Verdict.I_IMMEDIATE
                assert longer.round == t.round
            n += 1
    return n


@pytest.mark.depends(name='poset')
def test_directed_sets():
    assert check_load()
    assert check_cycles_are_kept()
    assert check_upper_bounds()
    assert check_symbolic()


def test_game():
    assert check_judge()
    assert check_play()
    assert check_random_strategy_is_deterministic()

    # the diamond has immediate losses of Player II from the first round on
    assert check_immediate_verdict_is_final(api.load_directed_set(fixture('poset_diamond.json'))) > 0
    assert check_immediate_verdict_is_final(api.chain(3)) > 0


def test_bound_strategy_wins_on_fixtures():
    """
    Player I answering with upper bounds wins against 100 random Player
    II strategies over 8 rounds on every finite fixture, and against
    every Player II strategy over 3 rounds on fixtures of size <= 3.
    """
    for D in finite_directed_sets():
        assert check_bound_strategy_wins(D)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=8))
def test_directedness_against_closure(raw_pairs):
    elements = [f"e{i}" for i in range(5)]
    pairs = [(f"e{i}", f"e{j}") for i, j in raw_pairs]
    leq = closure(elements, pairs)

    def bounded(p, q):
        return any((p, r) in leq and (q, r) in leq for r in elements)

    source = {'kind': 'finite', 'elements': elements, 'leq': [list(pair) for pair in pairs]}
    try:
        D = api.load_directed_set(source)
    except NotDirected as e:
        assert not bounded(*e.pair)
        return

    for p, q in itertools.product(elements, repeat=2):
        assert bounded(p, q)
        assert D.leq(p, q) == ((p, q) in leq)
