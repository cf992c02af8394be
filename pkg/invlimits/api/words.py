"""WORDS API

Functional interface to free group words and free abelian vectors,
including the literal syntax used by element files and the CLI:

* words: ``a^2.b^-1.c`` (dot separated syllables, ``^k`` optional for
  ``k=1``, the empty string is the identity)
* vectors: ``{a:2,b:-1}`` (``{}`` is the identity)

"""
from typing import Iterable, List, Tuple

from invlimits.models.words import AbelianVector, GeneratorMap, Syllable, Word
from invlimits.util.exceptions import MalformedInput


def reduce_word(raw: Iterable[Syllable]) -> Word:
    """
    Freely reduce a raw syllable sequence. Zero exponents are allowed
    in the input.
    """
    return Word.reduce(raw)


def multiply(u: Word, v: Word) -> Word:
    return u * v


def invert(w: Word) -> Word:
    return ~w


def syllable_length(w: Word) -> int:
    return w.syllable_length


def map_generators(w: Word, f: GeneratorMap) -> Word:
    """
    Apply the homomorphism of free groups determined by ``a -> f(a)``
    on generators. The result is reduced again, so the syllable length
    never grows.
    """
    return w.map_generators(f)


def ab_add(u: AbelianVector, v: AbelianVector) -> AbelianVector:
    return u + v


def ab_negate(v: AbelianVector) -> AbelianVector:
    return -v


def ab_map_generators(v: AbelianVector, f: GeneratorMap) -> AbelianVector:
    """
    Push the vector forward along ``f``. Coefficients of generators
    with the same image are summed, zeros are dropped.
    """
    return v.map_generators(f)


def _split_top_level(content: str, sep: str) -> List[str]:
    # fiber ids may contain braces, only split outside of them
    parts, depth, current = [], 0, []
    for char in content:
        if char == '{':
            depth += 1
        elif char == '}':
            depth -= 1
        if char == sep and depth == 0:
            parts.append(''.join(current))
            current = []
        else:
            current.append(char)
    parts.append(''.join(current))
    return parts


def _parse_exponent(token: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise MalformedInput(f"'{raw}' in '{token}' is not an integer exponent.")


def parse_word(literal: str) -> Word:
    """
    Parse a word literal like ``'a^2.b^-1.c'``. The literal does not
    need to be reduced.
    """
    literal = literal.strip()
    if literal == '':
        return Word()

    raw: List[Tuple[str, int]] = []
    for token in _split_top_level(literal, '.'):
        if '^' in token:
            a, k = token.rsplit('^', 1)
            k = _parse_exponent(token, k)
        else:
            a, k = token, 1
        if a == '':
            raise MalformedInput(f"Empty generator in word literal '{literal}'.")
        raw.append((a, k))
    return Word.reduce(raw)


def format_word(w: Word) -> str:
    return w.to_literal()


def parse_vector(literal: str) -> AbelianVector:
    """Parse a vector literal like ``'{a:2,b:-1}'``."""
    literal = literal.strip()
    if not (literal.startswith('{') and literal.endswith('}')):
        raise MalformedInput(f"Vector literal '{literal}' has to be enclosed in braces.")
    content = literal[1:-1].strip()
    if content == '':
        return AbelianVector()

    entries = []
    for token in _split_top_level(content, ','):
        if ':' not in token:
            raise MalformedInput(f"Vector entry '{token}' is not of the form 'a:k'.")
        a, k = token.rsplit(':', 1)
        if a.strip() == '':
            raise MalformedInput(f"Empty generator in vector literal '{literal}'.")
        entries.append((a.strip(), _parse_exponent(token, k.strip())))
    return AbelianVector(entries)


def format_vector(v: AbelianVector) -> str:
    return v.to_literal()
