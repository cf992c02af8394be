"""
Inverse systems of sets, threads and trees.

An :class:`InverseSystem` over a directed set ``D`` assigns a nonempty
fiber ``A_p`` to every ``p`` in ``D`` and a connecting map
``f_{p,q}: A_q -> A_p`` to every pair ``p <= q``, such that
``f_{p,p}`` is the identity and ``f_{p,q} o f_{q,r} = f_{p,r}``.
A :class:`Thread` is a coherent choice ``(a_p)`` of fiber elements, i.e.
an element of the inverse limit.

Fibers and maps are either tables (loaded systems) or rules
(generated systems). Rule maps are memoized on first use.

"""
from typing import Callable, Dict, Iterator, List, Literal, Mapping, Optional, Sequence, Tuple, Union
from collections.abc import Mapping as MappingABC
import logging

import networkx as nx
from pydantic import BaseModel

from invlimits.models.poset import DirectedSet
from invlimits.util.exceptions import (
    CoherenceViolation,
    EmptyFiber,
    InputError,
    InvalidTree,
    NonTotalMap,
    UnknownElement
)


logger = logging.getLogger(__name__)

FiberRule = Union[Mapping[str, Sequence[str]], Callable[[str], Sequence[str]]]
MapRule = Union[Mapping[Tuple[str, str], Mapping[str, str]], Callable[[str, str], Mapping[str, str]]]


class InverseSystem:
    def __init__(self, base: DirectedSet, fibers: FiberRule, maps: MapRule, name: str = 'system'):
        self.base = base
        self.name = name
        self._fibers = fibers
        self._maps = maps
        self._fiber_cache: Dict[str, Tuple[str, ...]] = {}
        self._map_cache: Dict[Tuple[str, str], Mapping[str, str]] = {}

    def __repr__(self) -> str:
        return f"<InverseSystem {self.name} over {self.base}>"

    def fiber(self, p: str) -> Tuple[str, ...]:
        """The fiber ``A_p`` in canonical (lexicographic) order."""
        if p not in self._fiber_cache:
            self.base.index(p)
            raw = self._fibers[p] if isinstance(self._fibers, MappingABC) else self._fibers(p)
            fiber = tuple(sorted(set(raw)))
            if len(fiber) == 0:
                raise EmptyFiber(f"The fiber A_{p} is empty.")
            self._fiber_cache[p] = fiber
        return self._fiber_cache[p]

    def connect(self, p: str, q: str) -> Mapping[str, str]:
        """The connecting map ``f_{p,q}: A_q -> A_p`` for ``p <= q``."""
        key = (p, q)
        if key not in self._map_cache:
            if not self.base.leq(p, q):
                raise InputError(f"{p} <= {q} does not hold, there is no connecting map.")
            if p == q:
                f = {a: a for a in self.fiber(p)}
            elif isinstance(self._maps, MappingABC):
                try:
                    f = self._maps[key]
                except KeyError:
                    raise NonTotalMap(f"There is no connecting map for {p} <= {q}.")
            else:
                f = self._maps(p, q)
            self._map_cache[key] = f
        return self._map_cache[key]

    def push(self, p: str, q: str, a: str) -> str:
        """Map ``a`` in ``A_q`` down to ``A_p``."""
        try:
            return self.connect(p, q)[a]
        except KeyError:
            raise NonTotalMap(f"f_{{{p},{q}}} is not defined on '{a}'.")

    def check_maps(self) -> None:
        """
        Check that every connecting map is a total function ``A_q -> A_p``
        and that ``f_{p,p}`` is the identity.
        """
        for p, q in self.base.comparable_pairs():
            f = self.connect(p, q)
            target = set(self.fiber(p))
            for a in self.fiber(q):
                if a not in f:
                    raise NonTotalMap(f"f_{{{p},{q}}} is not defined on '{a}' of A_{q}.")
                if f[a] not in target:
                    raise NonTotalMap(f"f_{{{p},{q}}}({a}) = '{f[a]}' is not in A_{p}.")
                if p == q and f[a] != a:
                    raise CoherenceViolation(p, p, p, f"f_{{{p},{p}}} is not the identity at '{a}'.")

    def check_coherence(self) -> int:
        """
        Check ``f_{p,q} o f_{q,r} = f_{p,r}`` for all ``p <= q <= r``.
        Returns the number of checked triples.
        """
        self.check_maps()
        n = 0
        for p, q, r in self.base.comparable_triples():
            f_pq, f_qr, f_pr = self.connect(p, q), self.connect(q, r), self.connect(p, r)
            for a in self.fiber(r):
                if f_pq[f_qr[a]] != f_pr[a]:
                    raise CoherenceViolation(p, q, r, f"'{a}' maps to '{f_pq[f_qr[a]]}' via {q} but to '{f_pr[a]}' directly.")
            n += 1
        logger.debug(f"{self}: {n} comparable triples are coherent.")
        return n

    def to_dict(self) -> dict:
        """Serialize to the system file format."""
        return {
            'poset': self.base.to_dict(),
            'fibers': {p: list(self.fiber(p)) for p in self.base},
            'maps': {f"{p}<{q}": dict(self.connect(p, q)) for p, q in self.base.comparable_pairs() if p != q}
        }


class Thread(MappingABC):
    __slots__ = ('choice', )

    def __init__(self, choice: Mapping[str, str]):
        self.choice: Dict[str, str] = dict(choice)

    def __getitem__(self, p: str) -> str:
        try:
            return self.choice[p]
        except KeyError:
            raise UnknownElement(f"The thread has no value at '{p}'.")

    def __iter__(self) -> Iterator[str]:
        return iter(self.choice)

    def __len__(self) -> int:
        return len(self.choice)

    def __eq__(self, other) -> bool:
        return isinstance(other, MappingABC) and dict(self.items()) == dict(other.items())

    def __hash__(self) -> int:
        return hash(frozenset(self.choice.items()))

    def __repr__(self) -> str:
        return f"Thread({self.choice})"

    def key(self, base: DirectedSet) -> Tuple[str, ...]:
        """Sort key: the values in canonical element order."""
        return tuple(self.choice[p] for p in base.elements)

    def is_coherent(self, system: InverseSystem) -> bool:
        return all(
            system.push(p, q, self.choice[q]) == self.choice[p]
            for p, q in system.base.comparable_pairs()
        )

    def to_dict(self) -> dict:
        return dict(self.choice)


class Tree:
    def __init__(self, nodes: Sequence[str], parent: Mapping[str, str]):
        """
        Finite rooted tree. ``parent`` maps every node except the root
        to its parent. The tree order is the ancestor relation.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(nodes)
        for child, par in parent.items():
            if child not in graph or par not in graph:
                raise InvalidTree(f"The parent link {child} -> {par} uses an unknown node.")
            graph.add_edge(par, child)
        if len(graph) != len(nodes):
            raise InvalidTree("Node ids have to be unique.")
        if not nx.is_arborescence(graph):
            raise InvalidTree("The parent links do not form a tree with a unique root.")

        self.graph = graph
        self.nodes: Tuple[str, ...] = tuple(nodes)
        self.parent: Dict[str, str] = dict(parent)
        self.root: str = next(n for n in graph if graph.in_degree(n) == 0)
        self._paths: Dict[str, List[str]] = nx.single_source_shortest_path(graph, self.root)

    def __repr__(self) -> str:
        return f"<Tree root={self.root} |T|={len(self.nodes)} height={self.height}>"

    def _node(self, t: str) -> str:
        if t not in self._paths:
            raise UnknownElement(f"'{t}' is not a node of the tree.")
        return t

    def rank(self, t: str) -> int:
        """Number of proper ancestors."""
        return len(self._paths[self._node(t)]) - 1

    @property
    def height(self) -> int:
        return max(len(path) for path in self._paths.values())

    def level(self, alpha: int) -> Tuple[str, ...]:
        return tuple(sorted(t for t, path in self._paths.items() if len(path) == alpha + 1))

    def restrict(self, t: str, alpha: int) -> str:
        """``t`` restricted to ``alpha``: the ancestor of ``t`` of rank ``alpha``."""
        path = self._paths[self._node(t)]
        if not 0 <= alpha < len(path):
            raise InputError(f"'{t}' has rank {len(path) - 1}, it cannot be restricted to {alpha}.")
        return path[alpha]

    def path_to(self, t: str) -> Tuple[str, ...]:
        return tuple(self._paths[self._node(t)])

    def branches(self) -> List[Tuple[str, ...]]:
        """All cofinal branches, from the root upwards, sorted."""
        top = self.height - 1
        return sorted(tuple(path) for path in self._paths.values() if len(path) - 1 == top)

    def to_dict(self) -> dict:
        return {'nodes': list(self.nodes), 'parent': dict(self.parent)}


class GoodnessReport(BaseModel):
    game_condition: Literal['holds-with-witness', 'unknown']
    witness: Optional[str] = None
    base_size: int
    max_fiber: int
    lam: int
    clause_two: bool
    limit_cardinality: Optional[int] = None
    nu: int
    clause_three: bool
    good: bool
    failing_clauses: List[int] = []
    notes: List[str] = []
