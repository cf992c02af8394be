"""
Finite inverse systems of groups and their relational model.

Groups are given by Cayley tables, group elements are indices into the
element list and homomorphisms are index arrays. The model built from a
system has the domain ``{<g, q, i> : q in D, g in G_q, i < 2}`` with

* a constant ``c_{g,q} = <g, q, 1>`` for every ``g`` in ``G_q``
* ``P_q = {<g, q, 0>}``
* ``H_{q,r} = {(<g, r, 0>, <h_{q,r}(g), q, 0>)}`` for ``q <= r``
* ``F_q = {(<g, q, 0>, <h, q, 1>, <g*h, q, 0>)}``

Only the interpretations are stored, never the language.

"""
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from invlimits.models.poset import DirectedSet
from invlimits.util.exceptions import NotAGroup


class FiniteGroup:
    def __init__(self, elements: Sequence[str], table, identity: int, name: str = 'G'):
        self.name = name
        self.elements: Tuple[str, ...] = tuple(elements)
        self.table = np.asarray(table, dtype=np.int64)
        self.identity = int(identity)
        self.check()
        # row g holds the identity in the column of g^-1
        self.inverses = np.argmax(self.table == self.identity, axis=1)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name} of order {len(self)}>"

    def check(self) -> None:
        """
        Check the group axioms on the whole table.

        Raises
        ------
        NotAGroup

        """
        n = len(self.elements)
        T = self.table
        if len(set(self.elements)) != n:
            raise NotAGroup(f"{self.name}: element names have to be unique.")
        if T.shape != (n, n):
            raise NotAGroup(f"{self.name}: the table has shape {T.shape}, expected {(n, n)}.")
        if T.size and (T.min() < 0 or T.max() >= n):
            raise NotAGroup(f"{self.name}: the table has entries outside 0..{n - 1}.")
        if not 0 <= self.identity < n:
            raise NotAGroup(f"{self.name}: the identity index {self.identity} is out of range.")

        e, idx = self.identity, np.arange(n)
        if not (np.array_equal(T[e, :], idx) and np.array_equal(T[:, e], idx)):
            raise NotAGroup(f"{self.name}: '{self.elements[e]}' is not an identity.")

        # left[a, b, c] = (ab)c, right[a, b, c] = a(bc)
        left = T[T]
        right = T[idx[:, None, None], T[None, :, :]]
        bad = np.argwhere(left != right)
        if len(bad) > 0:
            a, b, c = (self.elements[i] for i in bad[0])
            raise NotAGroup(f"{self.name}: ({a}*{b})*{c} != {a}*({b}*{c}).")

        has_inverse = np.any(T == e, axis=1)
        if not has_inverse.all():
            raise NotAGroup(f"{self.name}: '{self.elements[int(np.argmin(has_inverse))]}' has no inverse.")

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise NotAGroup(f"'{name}' is not an element of {self.name}.")


class FiniteGroupSystem:
    def __init__(self, base: DirectedSet, groups: Mapping[str, FiniteGroup], homs: Mapping[Tuple[str, str], np.ndarray]):
        """
        Inverse system of finite groups. ``homs`` holds the index array of
        ``h_{p,q}: G_q -> G_p`` for every comparable pair ``p <= q``,
        identities included. Use :func:`invlimits.api.load_finite_group_system`
        to build and check one.
        """
        self.base = base
        self.groups: Dict[str, FiniteGroup] = dict(groups)
        self.homs: Dict[Tuple[str, str], np.ndarray] = dict(homs)

    def __repr__(self) -> str:
        return f"<FiniteGroupSystem over {self.base.name}: {', '.join(f'|G_{p}|={len(G)}' for p, G in self.groups.items())}>"

    def hom(self, p: str, q: str, g: int) -> int:
        return int(self.homs[(p, q)][g])

    @property
    def order_sum(self) -> int:
        return sum(len(G) for G in self.groups.values())


DomainElement = Tuple[int, str, int]


class Structure:
    def __init__(self, system: FiniteGroupSystem):
        """Build the relational model of ``system``. See the module docs."""
        self.system = system
        D = system.base

        self.domain: List[DomainElement] = [
            (g, q, i) for q in D for g in range(len(system.groups[q])) for i in (0, 1)
        ]
        self.index: Dict[DomainElement, int] = {x: n for n, x in enumerate(self.domain)}

        self.constants: Dict[Tuple[int, str], int] = {
            (g, q): self.index[(g, q, 1)] for q in D for g in range(len(system.groups[q]))
        }
        self.unary: Dict[str, FrozenSet[int]] = {
            q: frozenset(self.index[(g, q, 0)] for g in range(len(system.groups[q]))) for q in D
        }
        self.binary: Dict[Tuple[str, str], FrozenSet[Tuple[int, int]]] = {
            (q, r): frozenset(
                (self.index[(g, r, 0)], self.index[(system.hom(q, r, g), q, 0)])
                for g in range(len(system.groups[r]))
            )
            for q, r in D.comparable_pairs()
        }
        self.ternary: Dict[str, FrozenSet[Tuple[int, int, int]]] = {}
        for q in D:
            G = system.groups[q]
            self.ternary[q] = frozenset(
                (self.index[(g, q, 0)], self.index[(h, q, 1)], self.index[(G.mul(g, h), q, 0)])
                for g in range(len(G)) for h in range(len(G))
            )

    def __len__(self) -> int:
        return len(self.domain)

    def __repr__(self) -> str:
        return f"<Structure |M|={len(self)} over {self.system.base.name}>"

    def relations(self) -> Dict[str, FrozenSet[tuple]]:
        """All non-unary relations by name, like ``'H[p,q]'`` and ``'F[q]'``."""
        rels = {f"H[{q},{r}]": rel for (q, r), rel in self.binary.items()}
        rels.update({f"F[{q}]": rel for q, rel in self.ternary.items()})
        return rels


class Automorphism:
    __slots__ = ('perm', 'coefficients')

    def __init__(self, perm: Sequence[int], coefficients: Optional[Mapping[str, int]] = None):
        self.perm: Tuple[int, ...] = tuple(int(x) for x in perm)
        self.coefficients: Optional[Dict[str, int]] = dict(coefficients) if coefficients is not None else None

    def __call__(self, x: int) -> int:
        return self.perm[x]

    def __len__(self) -> int:
        return len(self.perm)

    def compose(self, other: 'Automorphism') -> 'Automorphism':
        """``self o other``: apply ``other`` first."""
        return Automorphism([self.perm[x] for x in other.perm])

    def inverse(self) -> 'Automorphism':
        inv = [0] * len(self.perm)
        for x, y in enumerate(self.perm):
            inv[y] = x
        return Automorphism(inv)

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.perm))

    def __eq__(self, other) -> bool:
        return isinstance(other, Automorphism) and self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)

    def __repr__(self) -> str:
        return f"Automorphism({list(self.perm)})"


class PhiReport(BaseModel):
    domain_size: int
    automorphisms: int
    limit_size: int
    translation_form: bool
    injective: bool
    surjective: bool
    homomorphism: bool
    round_trip: bool
    group_closed: bool
    passed: bool
    notes: List[str] = []
