"""GROUPLIMIT API

Limit elements of induced free and free abelian group systems and their
decomposition into basis elements.

Every element ``g`` of the limit has a *stabilization point* ``p_g``: above
it the syllable length (support size) of ``g_p`` is constant. The
syllables of ``g`` at points above ``p_g`` line up along the connecting
maps, so they can be read off as threads. This makes the basis elements
``g_t = (x_{t(p)})_p``, one per thread ``t``, a free basis of the limit.

"""
from typing import Callable, List, Mapping, Optional, Sequence, Tuple, Union
import itertools
import logging

from invlimits.config import config
from invlimits.models.grouplimit import Decomposition, Element, FreeLimitReport, GroupSystem, LimitElement, Variant
from invlimits.models.poset import GameStrategy
from invlimits.models.system import InverseSystem, Thread
from invlimits.util.exceptions import (
    Incoherent,
    InputError,
    NotSeparable,
    SymbolicUnsupported,
    Unstable
)
from .poset import maximum_of, upper_bound
from .system import check_good, enumerate_threads
from .words import parse_vector, parse_word


logger = logging.getLogger(__name__)


def induced_system(system: InverseSystem, variant: Variant = 'free') -> GroupSystem:
    """
    Free (``variant='free'``) or free abelian (``variant='abelian'``)
    group system on the fibers of ``system``.
    """
    return GroupSystem(system, variant=variant)


def parse_element(G: GroupSystem, literal: Union[str, Element]) -> Element:
    if not isinstance(literal, str):
        return literal
    return parse_word(literal) if G.variant == 'free' else parse_vector(literal)


def limit_element_eager(G: GroupSystem, words: Mapping[str, Union[str, Element]]) -> LimitElement:
    """
    Build a limit element from one element (or literal) per loaded
    point.

    Raises
    ------
    Incoherent
        If ``h_{p,q}(g_q) != g_p`` for some ``p <= q``. The exception
        carries the failing pair.

    """
    values = {p: parse_element(G, w) for p, w in words.items()}
    return LimitElement(G, values=values)


def limit_element_lazy(G: GroupSystem, evaluator: Callable[[str], Union[str, Element]]) -> LimitElement:
    """
    Wrap an evaluator ``p -> g_p`` over a symbolic base. Each probe is
    checked for coherence against all points probed before and raises
    :class:`Incoherent <invlimits.util.exceptions.Incoherent>` at probe
    time.
    """
    if G.base.is_finite:
        raise InputError("Lazy limit elements need a symbolic base, use limit_element_eager.")
    return LimitElement(G, evaluator=lambda p: parse_element(G, evaluator(p)))


def basis_element(G: GroupSystem, thread: Thread) -> LimitElement:
    """The basis element ``g_t``: the single generator ``t(p)`` at every ``p``."""
    if not thread.is_coherent(G.carrier):
        raise Incoherent(*_incoherent_pair(G.carrier, thread))
    return LimitElement(G, values={p: G.generator(p, thread[p]) for p in G.base})


def _incoherent_pair(system: InverseSystem, thread: Thread) -> Tuple[str, str]:
    return next(
        (p, q) for p, q in system.base.comparable_pairs()
        if system.push(p, q, thread[q]) != thread[p]
    )


def free_basis(G: GroupSystem) -> List[LimitElement]:
    """All basis elements, in thread order."""
    return [basis_element(G, t) for t in enumerate_threads(G.carrier)]


def _same_system(*elements: LimitElement) -> GroupSystem:
    G = elements[0].system
    for g in elements[1:]:
        if g.system is not G:
            raise InputError("Limit elements of different group systems cannot be combined.")
    return G


def multiply_limit(g1: LimitElement, g2: LimitElement) -> LimitElement:
    """Pointwise product (abelian: sum)."""
    G = _same_system(g1, g2)
    if g1.is_eager and g2.is_eager:
        return LimitElement(G, values={p: G.multiply(g1.evaluate(p), g2.evaluate(p)) for p in G.base})
    return LimitElement(G, evaluator=lambda p: G.multiply(g1.evaluate(p), g2.evaluate(p)))


def invert_limit(g: LimitElement) -> LimitElement:
    """Pointwise inverse (abelian: negation)."""
    G = g.system
    if g.is_eager:
        return LimitElement(G, values={p: G.invert(g.evaluate(p)) for p in G.base})
    return LimitElement(G, evaluator=lambda p: G.invert(g.evaluate(p)))


def stabilization_point(g: LimitElement, window: Optional[int] = None, budget: Optional[int] = None) -> Tuple[str, int]:
    """
    Find a point ``p_g`` above which the length of ``g`` is constant.

    On finite bases this is the maximum, the length never decreases
    upwards. On symbolic bases the probe chain is walked until the length
    was equal on ``window`` consecutive probes. The first of these probes
    is returned.

    Parameters
    ----------
    g : LimitElement
    window : int
        Confirmation window. Defaults to ``Config.stabilization_window``.
    budget : int
        Maximum number of probes. Defaults to ``Config.probe_budget``.

    Returns
    -------
    point : str
    length : int

    Raises
    ------
    Unstable
        If no window was found within the budget or the probe chain.

    """
    D = g.system.base
    if window is None:
        window = config.stabilization_window
    if budget is None:
        budget = config.probe_budget
    if window < 1 or budget < 1:
        raise InputError(f"Window and budget have to be positive, got {window} and {budget}.")
    if D.is_finite:
        m = maximum_of(D)
        return m, g.length(m)

    lengths: List[int] = []
    for k, p in enumerate(D.probe_chain[:budget]):
        lengths.append(g.length(p))
        if k >= window - 1 and len(set(lengths[k - window + 1:])) == 1:
            point = D.probe_chain[k - window + 1]
            logger.debug(f"Length {lengths[k]} stable from {point}, confirmed after {k + 1} probes.")
            return point, lengths[k]

    raise Unstable(
        f"The length did not stabilize for {window} probes within {len(lengths)} probes "
        f"(budget {budget}, probe chain {len(D.probe_chain)})."
    )


def _lift(G: GroupSystem, g: LimitElement, s: str, n: int, p: str) -> List[str]:
    # generators of g at an upper bound of p and s, pushed down to p
    bar = upper_bound(G.base, {p, s})
    upper = g.evaluate(bar)
    if G.length(upper) != n:
        raise Unstable(f"The length at {bar} is {G.length(upper)}, but {n} at the stabilization point {s}.")

    if G.variant == 'free':
        gens = list(upper.generators)
        if [G.carrier.push(s, bar, a) for a in gens] != list(g.evaluate(s).generators):
            raise Unstable(f"The syllables at {bar} do not map onto the syllables at {s}.")
    else:
        # match the support at bar with the support at s
        below = {G.carrier.push(s, bar, a): a for a in upper.support}
        at_s = g.evaluate(s)
        if len(below) != n or any(b not in below or upper[below[b]] != at_s[b] for b in at_s.support):
            raise Unstable(f"The support at {bar} does not map bijectively onto the support at {s}.")
        gens = [below[b] for b in at_s.support]

    return [G.carrier.push(p, bar, a) for a in gens]


def decompose(g: LimitElement, window: Optional[int] = None, budget: Optional[int] = None) -> Decomposition:
    """
    Decompose ``g`` into a product of basis elements.

    The ``i``-th syllable of ``g`` at the stabilization point ``s`` gives
    the exponent ``k_i``. The thread ``t_i`` takes at ``p`` the image of
    the ``i``-th generator at ``upper_bound({p, s})``. Abelian terms are
    ordered by the value of their thread at ``s``.

    Raises
    ------
    Unstable
        If the stabilization point cannot be found or the syllables do
        not line up above it.

    """
    G = g.system
    s, n = stabilization_point(g, window=window, budget=budget)
    at_s = g.evaluate(s)
    exponents = list(at_s.exponents) if G.variant == 'free' else [at_s[a] for a in at_s.support]

    columns = {p: _lift(G, g, s, n, p) for p in G.base}
    terms = [(Thread({p: columns[p][i] for p in G.base}), exponents[i]) for i in range(n)]

    d = Decomposition(terms, stabilizer=s, variant=G.variant)
    logger.debug(f"Decomposed into {d.length} basis elements, stable from {s}.")
    return d


def recompose(G: GroupSystem, d: Decomposition) -> LimitElement:
    """The product of ``g_t^k`` over the terms of ``d``, in order."""
    values = {}
    for p in G.base:
        acc = G.identity()
        for t, k in d.terms:
            acc = G.multiply(acc, G.generator(p, t[p], k))
        values[p] = acc
    for t, _ in d.terms:
        if not t.is_coherent(G.carrier):
            raise Incoherent(*_incoherent_pair(G.carrier, t))
    return LimitElement(G, values=values)


def freeness_certificate(G: GroupSystem, word: Sequence[Tuple[Thread, int]]) -> str:
    """
    Find a point at which the product ``g_{t_1}^{k_1} ... g_{t_n}^{k_n}``
    is not the identity.

    For every pair of adjacent threads (abelian: every pair of threads)
    the first point separating them is taken. An upper bound of these
    points separates all pairs, so the product has ``n`` syllables there.

    Raises
    ------
    NotSeparable
        If two adjacent (abelian: any two) threads are equal.

    """
    D = G.base
    if not D.is_finite:
        raise SymbolicUnsupported("Freeness certificates are only computed over finite bases.")
    word = [(t, int(k)) for t, k in word]
    if G.variant == 'abelian':
        word = [(t, k) for t, k in word if k != 0]
        if len(word) == 0:
            raise InputError("At least one exponent has to be nonzero.")
    if len(word) == 0:
        raise InputError("The empty word is the identity.")
    if any(k == 0 for _, k in word):
        raise InputError("All exponents have to be nonzero.")

    if G.variant == 'free':
        pairs = [(i, i + 1) for i in range(len(word) - 1)]
    else:
        pairs = list(itertools.combinations(range(len(word)), 2))

    points = []
    for i, j in pairs:
        s, t = word[i][0], word[j][0]
        p = next((p for p in D if s[p] != t[p]), None)
        if p is None:
            raise NotSeparable(f"The threads of the terms {i} and {j} are equal.")
        points.append(p)
    witness = upper_bound(D, points) if points else D.elements[0]

    value = G.identity()
    for t, k in word:
        value = G.multiply(value, G.generator(witness, t[witness], k))
    if G.length(value) != len(word):
        raise NotSeparable(f"The product has length {G.length(value)} at {witness}, expected {len(word)}.")
    return witness


def length_growth_strategy(g: LimitElement) -> GameStrategy:
    """
    Player II strategy answering ``p`` with the first ``q >= p`` at
    which ``g`` is strictly longer, or with ``p`` itself.
    """
    D = g.system.base

    def respond(prefix):
        p = prefix[-1]
        n = g.length(p)
        return next((q for q in D.upper_set(p) if g.length(q) > n), p)

    return GameStrategy('II', respond, name='length-growth')


def certify_free_limit(system: InverseSystem, lam: int, nu: int) -> FreeLimitReport:
    """
    Check goodness and spot check the free basis: every basis word of
    length one and two (distinct threads, exponents +1 or -1) needs a
    freeness certificate.
    """
    goodness = check_good(system, lam, nu)
    threads = enumerate_threads(system)
    G = induced_system(system, 'free')

    words = [[(t, k)] for t in threads for k in (1, -1)]
    words.extend(
        [(s, k), (t, l)] for s, t in itertools.permutations(threads, 2) for k in (1, -1) for l in (1, -1)
    )
    free = True
    for word in words:
        try:
            freeness_certificate(G, word)
        except NotSeparable as e:
            logger.warning(str(e))
            free = False

    return FreeLimitReport(
        goodness=goodness,
        free_rank=len(threads),
        abelian_rank=len(threads),
        checked_words=len(words),
        free=free
    )
