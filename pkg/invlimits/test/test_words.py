"""
Word reduction, group laws and literal syntax.

"""
import pytest
from hypothesis import given, settings, strategies as st

from invlimits import api
from invlimits.config import config
from invlimits.models import AbelianVector, Word
from invlimits.util.exceptions import ExponentOverflow, MalformedInput, UnmappedFiber
from ._util import raw_words, rewrite_normal_forms


syllables = st.tuples(st.sampled_from(['a', 'b', 'c']), st.integers(min_value=-2, max_value=2))
raw = st.lists(syllables, max_size=6)
words = raw.map(api.reduce_word)
vectors = st.dictionaries(st.sampled_from(['a', 'b', 'c']), st.integers(min_value=-3, max_value=3)).map(AbelianVector)

# two generator maps and their composite
FIRST = {'a': 'x', 'b': 'x', 'c': 'y'}
SECOND = {'x': 'z', 'y': 'x'}
COMPOSED = {a: SECOND[b] for a, b in FIRST.items()}


def check_against_rewriting(alphabet, exponents, max_length):
    n = 0
    for w in raw_words(alphabet, exponents, max_length):
        forms = rewrite_normal_forms(w)
        assert len(forms) == 1, f"{w} has the normal forms {forms}"
        assert api.reduce_word(w).syllables == forms.pop()
        n += 1
    return n


def check_reduce_idempotent(alphabet, exponents, max_length):
    n = 0
    for w in raw_words(alphabet, exponents, max_length):
        once = api.reduce_word(w)
        assert api.reduce_word(once.syllables) == once
        n += 1
    return n


def check_reduce_examples():
    assert api.reduce_word([('a', 1), ('a', -1)]).is_identity()
    assert api.reduce_word([('a', 2), ('b', 0), ('a', -1)]) == Word([('a', 1)])
    assert api.reduce_word([('a', 1), ('b', 1), ('b', -1), ('a', 1)]) == Word([('a', 2)])
    assert api.syllable_length(api.reduce_word([('a', 1), ('b', 2), ('a', -1)])) == 3

    # constructor only wraps reduced input
    with pytest.raises(MalformedInput):
        Word([('a', 1), ('a', 1)])
    with pytest.raises(MalformedInput):
        Word([('a', 0)])
    return True


def check_map_generators():
    collapse = {'a': 'c', 'b': 'c'}
    w = api.parse_word('a.b')
    assert api.map_generators(w, collapse) == Word([('c', 2)])
    assert api.map_generators(api.parse_word('a.b^-1'), collapse).is_identity()

    # callables work as well
    assert api.map_generators(w, lambda a: a.upper()) == api.parse_word('A.B')

    with pytest.raises(UnmappedFiber):
        api.map_generators(api.parse_word('d'), collapse)
    return True


def check_abelian():
    u = api.parse_vector('{a:2,b:-1}')
    v = api.parse_vector('{b:1,c:3}')
    assert api.ab_add(u, v) == AbelianVector({'a': 2, 'c': 3})
    assert api.ab_add(u, api.ab_negate(u)).is_identity()
    assert api.ab_map_generators(u, {'a': 'c', 'b': 'c'}) == AbelianVector({'c': 1})
    assert api.ab_map_generators(u, {'a': 'c', 'b': 'c'}).support_size == 1
    assert (u * 3)['a'] == 6
    assert AbelianVector({'a': 0}).is_identity()
    return True


def check_literals():
    w = api.parse_word('a^2.b^-1.c')
    assert w.syllables == (('a', 2), ('b', -1), ('c', 1))
    assert api.format_word(w) == 'a^2.b^-1.c'
    assert api.parse_word('').is_identity()
    assert api.parse_word('a.a^-1').is_identity()

    # fiber ids of restriction systems contain dots and commas only inside braces
    w = api.parse_word('{0=1,1=0}^2.{0=0,1=0}')
    assert w.generators == ('{0=1,1=0}', '{0=0,1=0}')
    assert api.parse_word(api.format_word(w)) == w

    v = api.parse_vector('{a:2, b:-1}')
    assert api.format_vector(v) == '{a:2,b:-1}'
    assert api.parse_vector('{}').is_identity()

    for bad in ('a^x', '^2', 'a..b'):
        with pytest.raises(MalformedInput):
            api.parse_word(bad)
    for bad in ('a:2', '{a}', '{a:two}'):
        with pytest.raises(MalformedInput):
            api.parse_vector(bad)
    return True


def check_overflow(monkeypatch):
    monkeypatch.setattr(config, 'exponent_bound', 10)
    with pytest.raises(ExponentOverflow):
        Word.generator('a', 8) * Word.generator('a', 8)
    with pytest.raises(ExponentOverflow):
        Word.generator('a', 4) ** 3
    with pytest.raises(ExponentOverflow):
        AbelianVector({'a': 6}) + AbelianVector({'a': 6})
    assert (Word.generator('a', 5) ** 2).exponents == (10, )
    return True


@pytest.mark.depends(name='words')
def test_reduce_matches_rewriting():
    """
    Free reduction agrees with exhaustive single-step rewriting: every
    raw word of length <= 4 with exponents -2..2 and every raw word of
    length <= 6 with exponents +-1 over two letters.
    """
    assert check_against_rewriting(['a', 'b'], range(-2, 3), 4) == sum(10 ** n for n in range(5))
    assert check_against_rewriting(['a', 'b'], (-1, 1), 6) == sum(4 ** n for n in range(7))
    assert check_reduce_idempotent(['a', 'b'], range(-2, 3), 4) == sum(10 ** n for n in range(5))


@settings(max_examples=300, deadline=None)
@given(raw)
def test_reduce_random_long_words(w):
    forms = rewrite_normal_forms(tuple(w))
    assert forms == {api.reduce_word(w).syllables}


@settings(max_examples=200, deadline=None)
@given(words, words, words)
def test_group_laws(u, v, w):
    e = Word.identity()
    assert api.multiply(api.multiply(u, v), w) == api.multiply(u, api.multiply(v, w))
    assert api.multiply(u, e) == u == api.multiply(e, u)
    assert api.multiply(u, api.invert(u)) == e
    assert api.invert(api.multiply(u, v)) == api.multiply(api.invert(v), api.invert(u))
    assert u ** 3 == u * u * u
    assert u ** -2 == api.invert(u) * api.invert(u)


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_map_generators_is_homomorphism(u, v):
    f = {'a': 'x', 'b': 'x', 'c': 'y'}
    assert api.map_generators(u * v, f) == api.map_generators(u, f) * api.map_generators(v, f)
    assert api.syllable_length(api.map_generators(u, f)) <= api.syllable_length(u)


@settings(max_examples=200, deadline=None)
@given(words)
def test_map_generators_is_functorial(w):
    assert api.map_generators(w, COMPOSED) == api.map_generators(api.map_generators(w, FIRST), SECOND)


@settings(max_examples=200, deadline=None)
@given(vectors, vectors)
def test_abelian_map_generators(u, v):
    assert api.ab_map_generators(api.ab_add(u, v), FIRST) == api.ab_add(api.ab_map_generators(u, FIRST), api.ab_map_generators(v, FIRST))
    assert api.ab_map_generators(u, COMPOSED) == api.ab_map_generators(api.ab_map_generators(u, FIRST), SECOND)
    assert api.ab_map_generators(u, FIRST).support_size <= u.support_size
    assert api.ab_add(u, api.ab_negate(u)).is_identity()


def test_word_operations(monkeypatch):
    assert check_reduce_examples()
    assert check_map_generators()
    assert check_abelian()
    assert check_literals()
    assert check_overflow(monkeypatch)
