"""
Reduced words and finite-support integer vectors.

A :class:`Word` is stored in syllable normal form: a tuple of
``(generator, exponent)`` pairs with nonzero exponents and distinct
adjacent generators. Every free group element has exactly one such form.
The number of syllables is the *syllable length*.

An :class:`AbelianVector` is a finite map from generators to nonzero
integers, the normal form of an element of a free abelian group.

Generators (fiber ids) are opaque strings. Exponent arithmetic is
checked against :attr:`Config.exponent_bound <invlimits.config.Config>`.

"""
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple, Union

from invlimits.config import config
from invlimits.util.exceptions import ExponentOverflow, MalformedInput, UnmappedFiber


Syllable = Tuple[str, int]
GeneratorMap = Union[Mapping[str, str], Callable[[str], str]]


def checked(k: int) -> int:
    if abs(k) > config.exponent_bound:
        raise ExponentOverflow(f"Exponent {k} exceeds the bound {config.exponent_bound}.")
    return k


def apply_map(f: GeneratorMap, a: str) -> str:
    try:
        if isinstance(f, Mapping):
            return f[a]
        return f(a)
    except KeyError:
        raise UnmappedFiber(f"The generator map is not defined on '{a}'.")


class Word:
    __slots__ = ('syllables', )

    def __init__(self, syllables: Iterable[Syllable] = ()):
        """
        Wrap an already reduced syllable sequence. Use
        :meth:`reduce` for arbitrary input.
        """
        syllables = tuple((a, int(k)) for a, k in syllables)
        for i, (a, k) in enumerate(syllables):
            if k == 0:
                raise MalformedInput(f"Syllable {i} of {syllables} has exponent zero.")
            if i > 0 and syllables[i - 1][0] == a:
                raise MalformedInput(f"Syllables {i - 1} and {i} of {syllables} share the generator '{a}'.")
            checked(k)
        self.syllables: Tuple[Syllable, ...] = syllables

    @classmethod
    def identity(cls) -> 'Word':
        return cls()

    @classmethod
    def generator(cls, a: str, k: int = 1) -> 'Word':
        return cls([(a, k)]) if k != 0 else cls()

    @classmethod
    def reduce(cls, raw: Iterable[Syllable]) -> 'Word':
        """
        Merge adjacent syllables with equal generators and drop zero
        exponents until nothing changes.
        """
        stack = []
        for a, k in raw:
            k = checked(int(k))
            if k == 0:
                continue
            if stack and stack[-1][0] == a:
                s = checked(stack[-1][1] + k)
                if s == 0:
                    stack.pop()
                else:
                    stack[-1] = (a, s)
            else:
                stack.append((a, k))

        word = cls.__new__(cls)
        word.syllables = tuple(stack)
        return word

    @property
    def syllable_length(self) -> int:
        return len(self.syllables)

    @property
    def generators(self) -> Tuple[str, ...]:
        return tuple(a for a, _ in self.syllables)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(k for _, k in self.syllables)

    def is_identity(self) -> bool:
        return len(self.syllables) == 0

    def __mul__(self, other: 'Word') -> 'Word':
        return Word.reduce(self.syllables + other.syllables)

    def __invert__(self) -> 'Word':
        return Word((a, -k) for a, k in reversed(self.syllables))

    def __pow__(self, n: int) -> 'Word':
        if n == 0 or self.is_identity():
            return Word()
        if n < 0:
            return (~self) ** -n
        # powers of a single syllable only change the exponent
        if len(self.syllables) == 1:
            a, k = self.syllables[0]
            return Word([(a, checked(k * n))])
        half = self ** (n // 2)
        return half * half * self if n % 2 else half * half

    def map_generators(self, f: GeneratorMap) -> 'Word':
        return Word.reduce((apply_map(f, a), k) for a, k in self.syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self) -> int:
        return hash(('Word', self.syllables))

    def __repr__(self) -> str:
        return f"Word({self.to_literal()!r})"

    def to_literal(self) -> str:
        return '.'.join(a if k == 1 else f"{a}^{k}" for a, k in self.syllables)

    def to_dict(self) -> list:
        return [[a, k] for a, k in self.syllables]


class AbelianVector:
    __slots__ = ('entries', )

    def __init__(self, entries: Union[Mapping[str, int], Iterable[Tuple[str, int]]] = ()):
        """
        Sum up the given coefficients. Zero entries are dropped.
        """
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: Dict[str, int] = {}
        for a, k in items:
            acc[a] = checked(acc.get(a, 0) + int(k))
        self.entries: Dict[str, int] = {a: acc[a] for a in sorted(acc) if acc[a] != 0}

    @classmethod
    def identity(cls) -> 'AbelianVector':
        return cls()

    @classmethod
    def generator(cls, a: str, k: int = 1) -> 'AbelianVector':
        return cls({a: k})

    @property
    def support(self) -> Tuple[str, ...]:
        return tuple(self.entries)

    @property
    def support_size(self) -> int:
        return len(self.entries)

    def is_identity(self) -> bool:
        return len(self.entries) == 0

    def __add__(self, other: 'AbelianVector') -> 'AbelianVector':
        return AbelianVector(list(self.entries.items()) + list(other.entries.items()))

    def __neg__(self) -> 'AbelianVector':
        return AbelianVector({a: -k for a, k in self.entries.items()})

    def __sub__(self, other: 'AbelianVector') -> 'AbelianVector':
        return self + (-other)

    def __mul__(self, n: int) -> 'AbelianVector':
        return AbelianVector({a: checked(k * n) for a, k in self.entries.items()})

    __rmul__ = __mul__

    def map_generators(self, f: GeneratorMap) -> 'AbelianVector':
        return AbelianVector([(apply_map(f, a), k) for a, k in self.entries.items()])

    def __getitem__(self, a: str) -> int:
        return self.entries.get(a, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, AbelianVector) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(('AbelianVector', tuple(self.entries.items())))

    def __repr__(self) -> str:
        return f"AbelianVector({self.to_literal()!r})"

    def to_literal(self) -> str:
        return '{' + ','.join(f"{a}:{k}" for a, k in self.entries.items()) + '}'

    def to_dict(self) -> dict:
        return dict(self.entries)
