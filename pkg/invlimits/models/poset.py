"""
Directed sets and the game on them.

A :class:`DirectedSet` is a preorder in which every two elements have a
common upper bound. Two kinds are supported:

* ``'finite'``: an explicit list of elements together with the
  reflexive-transitive closure of a set of order pairs. The closure is
  materialized as a boolean matrix.
* ``'symbolic'``: an order oracle together with a *probe chain*, a finite
  increasing list of elements standing in for a cofinal chain of a larger
  (usually infinite) directed set. Optionally, a bound oracle proposes
  upper bounds for finite sets.

Antisymmetry is not required. Elements that are mutually below each other
are kept distinct.

"""
from typing import Callable, Iterable, Iterator, Literal, Optional, Sequence, Tuple, FrozenSet
from enum import Enum

import numpy as np
import networkx as nx
from pydantic import BaseModel, ConfigDict

from invlimits.util.exceptions import UnknownElement, MalformedInput



BoundOracle = Callable[[FrozenSet[str]], Optional[str]]


class DirectedSet:
    def __init__(
        self,
        kind: Literal['finite', 'symbolic'],
        elements: Sequence[str],
        leq: Callable[[str, str], bool],
        bound_oracle: Optional[BoundOracle] = None,
        order: Optional[np.ndarray] = None,
        top: Optional[str] = None,
        name: str = None
    ):
        """
        Use :meth:`from_pairs` or :meth:`symbolic` instead of calling
        the constructor directly.

        Parameters
        ----------
        kind : str
            Either ``'finite'`` or ``'symbolic'``.
        elements : list
            The loaded elements in canonical load order. For the symbolic
            kind, this is the probe chain.
        leq : callable
            Order oracle ``leq(p, q) -> bool``.
        bound_oracle : callable
            Symbolic kind only. Maps a frozenset of elements to an upper
            bound or ``None``.
        order : numpy.ndarray
            Finite kind only. Boolean matrix with ``order[i, j]`` iff
            ``elements[i] <= elements[j]``.
        top : str
            Optional maximum known from the construction. It is
            verified, not trusted, by :func:`invlimits.api.maximum_of`.

        """
        if kind not in ('finite', 'symbolic'):
            raise MalformedInput(f"Unknown directed set kind '{kind}'.")
        if len(elements) == 0:
            raise MalformedInput("A directed set needs at least one element.")
        for e in elements:
            if not isinstance(e, str) or e == '':
                raise MalformedInput(f"Element ids have to be nonempty strings, got {e!r}.")

        self.kind = kind
        self.elements: Tuple[str, ...] = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise MalformedInput("Element ids have to be unique.")

        self._leq = leq
        self.bound_oracle = bound_oracle
        self.order = order
        self.top = top
        self.name = name or kind

        # a probe chain has to increase
        if kind == 'symbolic':
            for p, q in zip(self.elements, self.elements[1:]):
                if not leq(p, q):
                    raise MalformedInput(f"The probe chain is not increasing at {p}, {q}.")

    @classmethod
    def from_pairs(cls, elements: Sequence[str], pairs: Iterable[Tuple[str, str]], name: str = 'finite') -> 'DirectedSet':
        """
        Build a finite directed set from the reflexive-transitive
        closure of the given order pairs. Directedness is **not**
        checked here, see :func:`invlimits.api.load_directed_set`.
        """
        elements = tuple(elements)
        graph = nx.DiGraph()
        graph.add_nodes_from(elements)
        for p, q in pairs:
            if p not in graph or q not in graph:
                missing = p if p not in graph else q
                raise UnknownElement(f"Order pair ({p}, {q}) uses the unknown element '{missing}'.")
            graph.add_edge(p, q)

        closure = nx.transitive_closure(graph, reflexive=True)
        index = {e: i for i, e in enumerate(elements)}
        order = np.zeros((len(elements), len(elements)), dtype=bool)
        for p, q in closure.edges:
            order[index[p], index[q]] = True

        return cls(
            'finite',
            elements,
            leq=lambda p, q: bool(order[index[p], index[q]]),
            order=order,
            name=name
        )

    @classmethod
    def symbolic(cls, leq: Callable[[str, str], bool], probe_chain: Sequence[str], bound_oracle: Optional[BoundOracle] = None, name: str = 'symbolic') -> 'DirectedSet':
        return cls('symbolic', probe_chain, leq=leq, bound_oracle=bound_oracle, name=name)

    @property
    def is_finite(self) -> bool:
        return self.kind == 'finite'

    @property
    def probe_chain(self) -> Optional[Tuple[str, ...]]:
        if self.kind == 'symbolic':
            return self.elements
        return None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return p in self._index

    def __repr__(self) -> str:
        return f"<DirectedSet {self.name} kind={self.kind} |D|={len(self)}>"

    def index(self, p: str) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise UnknownElement(f"'{p}' is not a loaded element of {self.name}.")

    def leq(self, p: str, q: str) -> bool:
        self.index(p)
        self.index(q)
        return self._leq(p, q)

    def upper_set(self, p: str) -> Tuple[str, ...]:
        """All loaded elements above p, in load order."""
        return tuple(q for q in self.elements if self.leq(p, q))

    def comparable_pairs(self) -> Iterator[Tuple[str, str]]:
        """Iterate all pairs ``p <= q`` of loaded elements in load order."""
        if self.order is not None:
            for i, j in zip(*np.nonzero(self.order)):
                yield self.elements[i], self.elements[j]
        else:
            for p in self.elements:
                for q in self.elements:
                    if self._leq(p, q):
                        yield p, q

    def comparable_triples(self) -> Iterator[Tuple[str, str, str]]:
        """Iterate all triples ``p <= q <= r`` of loaded elements."""
        for p, q in self.comparable_pairs():
            for r in self.upper_set(q):
                yield p, q, r

    def to_dict(self) -> dict:
        pairs = [[p, q] for p, q in self.comparable_pairs() if p != q]
        return {'kind': 'finite', 'elements': list(self.elements), 'leq': pairs}


class Verdict(str, Enum):
    I_IMMEDIATE = 'I-immediate'
    I_PROVISIONAL = 'I-provisional'
    II_PROVISIONAL = 'II-provisional'
    UNDECIDED = 'undecided'


class GameTranscript(BaseModel):
    """
    Finite run of the game. Moves with even index belong to Player I,
    moves with odd index to Player II. ``round`` is the index of the
    round in which the verdict was fixed.
    """
    model_config = ConfigDict(frozen=True)

    moves: Tuple[str, ...]
    verdict: Verdict
    round: int

    @property
    def player_one_wins(self) -> bool:
        return self.verdict in (Verdict.I_IMMEDIATE, Verdict.I_PROVISIONAL)

    def rounds(self) -> list:
        return [tuple(self.moves[i:i + 2]) for i in range(0, len(self.moves), 2)]


class GameStrategy:
    def __init__(self, side: Literal['I', 'II'], respond: Callable[[Tuple[str, ...]], str], name: str = 'strategy'):
        """
        A strategy maps a transcript prefix to the next move. The
        respond function has to be deterministic.
        """
        if side not in ('I', 'II'):
            raise MalformedInput(f"A strategy belongs to Player 'I' or 'II', not '{side}'.")
        self.side = side
        self.respond = respond
        self.name = name

    def __call__(self, prefix: Sequence[str]) -> str:
        return self.respond(tuple(prefix))

    def __repr__(self) -> str:
        return f"<GameStrategy {self.name} for Player {self.side}>"
