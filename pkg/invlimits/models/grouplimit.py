"""
Free and free abelian group systems induced by an inverse system of sets.

Over every point ``p`` the group ``G_p`` is the free (or free abelian)
group on the fiber ``A_p``. The homomorphisms ``h_{p,q}`` rename
generators along the connecting maps ``f_{p,q}``. An element of the
inverse limit is a :class:`LimitElement`, either stored for every loaded
point (eager) or evaluated on demand (lazy).

"""
from typing import Callable, Dict, List, Literal, Mapping, Optional, Tuple, Union
import threading

from pydantic import BaseModel

from invlimits.models.system import GoodnessReport, InverseSystem, Thread
from invlimits.util.exceptions import Incoherent, InputError, MalformedInput, UnknownElement, UnmappedFiber
from invlimits.models.words import AbelianVector, Word


Element = Union[Word, AbelianVector]
Variant = Literal['free', 'abelian']


class GroupSystem:
    def __init__(self, carrier: InverseSystem, variant: Variant = 'free'):
        if variant not in ('free', 'abelian'):
            raise MalformedInput(f"Unknown group variant '{variant}'. Use 'free' or 'abelian'.")
        self.carrier = carrier
        self.variant = variant

    def __repr__(self) -> str:
        return f"<GroupSystem {self.variant} over {self.carrier.name}>"

    @property
    def base(self):
        return self.carrier.base

    @property
    def element_type(self) -> type:
        return Word if self.variant == 'free' else AbelianVector

    def identity(self) -> Element:
        return self.element_type.identity()

    def generator(self, p: str, a: str, k: int = 1) -> Element:
        if a not in self.carrier.fiber(p):
            raise UnmappedFiber(f"'{a}' is not a generator of G_{p}.")
        return self.element_type.generator(a, k)

    def check_member(self, p: str, g: Element) -> Element:
        if not isinstance(g, self.element_type):
            raise MalformedInput(f"G_{p} is {self.variant}, got {type(g).__name__}.")
        fiber = set(self.carrier.fiber(p))
        gens = g.generators if self.variant == 'free' else g.support
        for a in gens:
            if a not in fiber:
                raise UnmappedFiber(f"'{a}' is not a generator of G_{p}.")
        return g

    def hom(self, p: str, q: str, g: Element) -> Element:
        """Apply ``h_{p,q}: G_q -> G_p``."""
        return g.map_generators(self.carrier.connect(p, q))

    def multiply(self, g: Element, h: Element) -> Element:
        return g * h if self.variant == 'free' else g + h

    def invert(self, g: Element) -> Element:
        return ~g if self.variant == 'free' else -g

    def power(self, g: Element, k: int) -> Element:
        return g ** k if self.variant == 'free' else g * k

    def length(self, g: Element) -> int:
        """Syllable length of a word, support size of a vector."""
        return g.syllable_length if self.variant == 'free' else g.support_size


class LimitElement:
    def __init__(
        self,
        system: GroupSystem,
        values: Optional[Mapping[str, Element]] = None,
        evaluator: Optional[Callable[[str], Element]] = None
    ):
        """
        Coherent family ``(g_p)`` with ``h_{p,q}(g_q) = g_p``. Pass
        either ``values`` (eager mode) or ``evaluator`` (lazy mode).
        Eager families are checked on construction, lazy families on
        every probe against all points probed before.

        Results on lazy elements are only as good as the evaluator: the
        family is coherent on all probed points, nothing is claimed
        beyond.
        """
        if (values is None) == (evaluator is None):
            raise InputError("A limit element needs either values or an evaluator.")
        self.system = system
        self._evaluator = evaluator
        self._memo: Dict[str, Element] = {}
        self._probed: List[str] = []
        self._lock = threading.Lock()

        if values is not None:
            self.mode = 'eager'
            for p in values:
                system.base.index(p)
            for p in system.base:
                if p not in values:
                    raise MalformedInput(f"The family has no value at '{p}'.")
                self._memo[p] = system.check_member(p, values[p])
            self._probed = list(system.base.elements)
            self.check_coherence()
        else:
            self.mode = 'lazy'

    def __repr__(self) -> str:
        return f"<LimitElement {self.mode} {self.system}>"

    @property
    def is_eager(self) -> bool:
        return self.mode == 'eager'

    @property
    def probed(self) -> Tuple[str, ...]:
        return tuple(self._probed)

    def evaluate(self, p: str) -> Element:
        """The coordinate ``g_p``."""
        with self._lock:
            if p in self._memo:
                return self._memo[p]
            if self.is_eager:
                raise UnknownElement(f"'{p}' is not a loaded element of {self.system.base.name}.")
            self.system.base.index(p)
            g = self.system.check_member(p, self._evaluator(p))
            self._check_against_probed(p, g)
            self._memo[p] = g
            self._probed.append(p)
            return g

    def _check_against_probed(self, p: str, g: Element) -> None:
        D, G = self.system.base, self.system
        for q in self._probed:
            h = self._memo[q]
            if D.leq(q, p) and G.hom(q, p, g) != h:
                raise Incoherent(q, p, f"h_{{{q},{p}}}({g.to_literal()}) != {h.to_literal()}")
            if D.leq(p, q) and G.hom(p, q, h) != g:
                raise Incoherent(p, q, f"h_{{{p},{q}}}({h.to_literal()}) != {g.to_literal()}")

    def check_coherence(self) -> None:
        """Check ``h_{p,q}(g_q) = g_p`` on all comparable probed pairs."""
        D, G = self.system.base, self.system
        probed = set(self._probed)
        for p, q in D.comparable_pairs():
            if p in probed and q in probed and G.hom(p, q, self._memo[q]) != self._memo[p]:
                raise Incoherent(p, q, f"h_{{{p},{q}}}({self._memo[q].to_literal()}) != {self._memo[p].to_literal()}")

    def length(self, p: str) -> int:
        return self.system.length(self.evaluate(p))

    def values(self) -> Dict[str, Element]:
        """All coordinates computed so far."""
        return {p: self._memo[p] for p in self._probed}

    def equals_at(self, other: 'LimitElement', points) -> bool:
        return all(self.evaluate(p) == other.evaluate(p) for p in points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LimitElement) or other.system is not self.system:
            return False
        return self.equals_at(other, self.system.base.elements)

    __hash__ = None

    def to_dict(self) -> dict:
        return {
            'variant': self.system.variant,
            'words': {p: g.to_literal() for p, g in self.values().items()}
        }


class Decomposition:
    def __init__(self, terms, stabilizer: str, variant: Variant = 'free'):
        """
        Basis decomposition ``g = g_{t_1}^{k_1} ... g_{t_n}^{k_n}``.
        ``terms`` is a sequence of ``(Thread, exponent)`` pairs.
        """
        self.terms: Tuple[Tuple[Thread, int], ...] = tuple((t, int(k)) for t, k in terms)
        self.stabilizer = stabilizer
        self.variant = variant

    @property
    def length(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Decomposition)
            and self.variant == other.variant
            and self.stabilizer == other.stabilizer
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"<Decomposition {self.variant} at {self.stabilizer} with {self.length} terms>"

    def to_dict(self) -> dict:
        return {
            'stabilizer': self.stabilizer,
            'length': self.length,
            'variant': self.variant,
            'terms': [{'thread': t.to_dict(), 'exp': k} for t, k in self.terms]
        }


class FreeLimitReport(BaseModel):
    goodness: GoodnessReport
    free_rank: int
    abelian_rank: int
    checked_words: int
    free: bool
