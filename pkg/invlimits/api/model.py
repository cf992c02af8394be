"""MODEL API

Finite inverse systems of groups, the relational model built from them
and its automorphism group.

Every automorphism of the model turns out to be a translation
``<g, q, 0> -> <c_q * g, q, 0>`` by a coherent family ``(c_q)``, i.e. by an
element of the inverse limit. :func:`automorphisms` searches the
automorphisms without using this, so :func:`verify_phi_isomorphism` can
check that coefficient extraction is a group isomorphism onto the limit.

"""
from typing import Dict, List, Mapping, Optional, Sequence, Union
import itertools
import logging

import numpy as np
from tqdm import tqdm

from invlimits.config import config
from invlimits.models.files import GroupSystemFile, split_pair_key, validate
from invlimits.models.structure import Automorphism, FiniteGroup, FiniteGroupSystem, PhiReport, Structure
from invlimits.util.exceptions import (
    Incoherent,
    InvariantViolation,
    MalformedInput,
    NotAHomomorphism,
    SizeLimit,
    SymbolicUnsupported,
    TranslationFormViolated
)
from .io import from_json
from .poset import load_directed_set, maximum_of
from .system import load_system


logger = logging.getLogger(__name__)


def load_finite_group_system(source: Union[str, dict, GroupSystemFile]) -> FiniteGroupSystem:
    """
    Load an inverse system of finite groups.

    Parameters
    ----------
    source : str, dict
        File name, JSON content or parsed dictionary of the form
        ``{"poset": ..., "groups": {"p": {"elements": [...], "mul": [[...]], "id": 0}},
        "homs": {"p<q": [...]}}``. A hom lists the index of the image of
        every element of ``G_q`` in ``G_p``.

    Raises
    ------
    NotAGroup
        If a table violates a group axiom.
    NotAHomomorphism
        If a given hom does not preserve products or the identity.
    CoherenceViolation
        If composed homs differ from given ones.

    """
    if isinstance(source, str):
        source = from_json(source)
    desc = validate(GroupSystemFile, source)

    D = load_directed_set(desc.poset)
    if not D.is_finite:
        raise SymbolicUnsupported("Group systems can only be loaded over finite directed sets.")
    for p in desc.groups:
        D.index(p)
    groups: Dict[str, FiniteGroup] = {}
    for p in D:
        if p not in desc.groups:
            raise MalformedInput(f"There is no group at '{p}'.")
        table = desc.groups[p]
        groups[p] = FiniteGroup(table.elements, table.mul, table.id, name=f"G_{p}")

    maps = {}
    for key, h in desc.homs.items():
        p, q = split_pair_key(key)
        D.index(p)
        D.index(q)
        h = _check_hom(groups[p], groups[q], np.asarray(h, dtype=np.int64), key)
        maps[key] = {groups[q].elements[i]: groups[p].elements[j] for i, j in enumerate(h)}

    # compose and check coherence on the element names
    carrier = load_system({
        'poset': desc.poset.model_dump(),
        'fibers': {p: list(G.elements) for p, G in groups.items()},
        'maps': maps
    })
    homs = {}
    for p, q in carrier.base.comparable_pairs():
        f = carrier.connect(p, q)
        homs[(p, q)] = np.array([groups[p].index(f[a]) for a in groups[q].elements], dtype=np.int64)

    system = FiniteGroupSystem(carrier.base, groups, homs)
    logger.info(f"Loaded {system}.")
    return system


def _check_hom(G_p: FiniteGroup, G_q: FiniteGroup, h: np.ndarray, key: str) -> np.ndarray:
    if h.shape != (len(G_q), ):
        raise MalformedInput(f"The hom '{key}' has {h.size} entries, but |{G_q.name}| = {len(G_q)}.")
    if h.min() < 0 or h.max() >= len(G_p):
        raise MalformedInput(f"The hom '{key}' has entries outside 0..{len(G_p) - 1}.")
    if h[G_q.identity] != G_p.identity:
        raise NotAHomomorphism(f"The hom '{key}' does not map the identity to the identity.")

    # h(ab) == h(a)h(b) on the whole table
    bad = np.argwhere(h[G_q.table] != G_p.table[h[:, None], h[None, :]])
    if len(bad) > 0:
        a, b = (G_q.elements[i] for i in bad[0])
        raise NotAHomomorphism(f"The hom '{key}' does not preserve the product {a}*{b}.")
    return h


def build_model(G: FiniteGroupSystem) -> Structure:
    """
    Build the relational model of ``G``. Its domain has
    ``2 * sum(|G_q|)`` elements.

    Raises
    ------
    SizeLimit
        If the domain exceeds ``Config.max_domain``.

    """
    size = 2 * G.order_sum
    if size > config.max_domain:
        raise SizeLimit(f"The model would have {size} elements, more than {config.max_domain}.")
    M = Structure(G)
    logger.info(f"Built {M} with {len(M.constants)} constants and {len(M.relations())} relations.")
    return M


def _search(M: Structure, verbose: bool = False) -> List[Automorphism]:
    # plain backtracking, constants pinned first, then the P_q blocks
    N = len(M)
    if N > config.max_domain:
        raise SizeLimit(f"The model has {N} elements, more than {config.max_domain}.")

    sigma = [-1] * N
    used = [False] * N
    for c in M.constants.values():
        sigma[c] = c
        used[c] = True

    incident: Dict[int, list] = {x: [] for x in range(N)}
    for rel in M.relations().values():
        for tup in rel:
            for x in set(tup):
                incident[x].append((rel, tup))

    order = [x for q in M.system.base for x in sorted(M.unary[q])]
    block = {x: sorted(M.unary[q]) for q in M.system.base for x in M.unary[q]}
    found: List[Automorphism] = []

    def consistent(x: int) -> bool:
        for rel, tup in incident[x]:
            image = tuple(sigma[z] for z in tup)
            if -1 not in image and image not in rel:
                return False
        return True

    def assign(i: int):
        if i == len(order):
            found.append(Automorphism(sigma))
            return
        x = order[i]
        candidates = block[x]
        if i == 0 and verbose:
            candidates = tqdm(candidates)
        for y in candidates:
            if used[y]:
                continue
            sigma[x], used[y] = y, True
            if consistent(x):
                assign(i + 1)
            sigma[x], used[y] = -1, False

    assign(0)
    found.sort(key=lambda a: a.perm)
    logger.debug(f"{M}: {len(found)} automorphisms found by backtracking.")
    return found


def automorphisms(M: Structure, verbose: bool = False) -> List[Automorphism]:
    """
    All permutations of the domain fixing every constant and preserving
    every relation, sorted by their permutation.

    The search does not assume the translation form. Afterwards the
    coefficients of every automorphism are extracted, which asserts it.

    Raises
    ------
    SizeLimit
        If the domain exceeds ``Config.max_domain``.
    TranslationFormViolated
        If an automorphism is not a translation.

    """
    auts = _search(M, verbose=verbose)
    return [Automorphism(a.perm, extract_coefficients(M, a)) for a in auts]


def extract_coefficients(M: Structure, sigma: Union[Automorphism, Sequence[int]]) -> Dict[str, int]:
    """
    Return ``c_q``, the first component of ``sigma(<1, q, 0>)``, for
    every ``q`` and check ``sigma(<g, q, 0>) = <c_q * g, q, 0>``.
    """
    perm = sigma.perm if isinstance(sigma, Automorphism) else tuple(sigma)
    G = M.system
    coefficients = {}
    for q in G.base:
        group = G.groups[q]
        c, r, i = M.domain[perm[M.index[(group.identity, q, 0)]]]
        if r != q or i != 0:
            raise TranslationFormViolated(f"<1, {q}, 0> is mapped to <{c}, {r}, {i}>.")
        for g in range(len(group)):
            if perm[M.index[(g, q, 0)]] != M.index[(group.mul(c, g), q, 0)]:
                raise TranslationFormViolated(f"<{group.elements[g]}, {q}, 0> is not translated by {group.elements[c]}.")
            if perm[M.index[(g, q, 1)]] != M.index[(g, q, 1)]:
                raise TranslationFormViolated(f"The constant for ({group.elements[g]}, {q}) is moved.")
        coefficients[q] = c
    return coefficients


def _family_indices(G: FiniteGroupSystem, family: Mapping[str, Union[int, str]]) -> Dict[str, int]:
    out = {}
    for q in G.base:
        if q not in family:
            raise MalformedInput(f"The family has no value at '{q}'.")
        g = family[q]
        out[q] = G.groups[q].index(g) if isinstance(g, str) else int(g)
    return out


def sigma_from_limit(M: Structure, family: Mapping[str, Union[int, str]]) -> Automorphism:
    """
    The automorphism translating ``<g, q, 0>`` by ``family[q]`` and
    fixing all constants. Family values are element indices or names.

    Raises
    ------
    Incoherent
        If ``h_{q,r}(family[r]) != family[q]`` for some ``q <= r``.

    """
    G = M.system
    family = _family_indices(G, family)
    for q, r in G.base.comparable_pairs():
        if G.hom(q, r, family[r]) != family[q]:
            raise Incoherent(q, r)

    perm = [
        M.index[(G.groups[q].mul(family[q], g), q, 0)] if i == 0 else n
        for n, (g, q, i) in enumerate(M.domain)
    ]
    if not is_automorphism(M, perm):
        raise InvariantViolation(f"The translation by {family} is not an automorphism.")
    return Automorphism(perm, coefficients=family)


def is_automorphism(M: Structure, perm: Union[Automorphism, Sequence[int]]) -> bool:
    """
    Check that ``perm`` is a permutation of the domain fixing every
    constant and mapping every relation onto itself.
    """
    perm = perm.perm if isinstance(perm, Automorphism) else tuple(perm)
    if sorted(perm) != list(range(len(M))):
        return False
    if any(perm[c] != c for c in M.constants.values()):
        return False
    if any(frozenset(perm[x] for x in P) != P for P in M.unary.values()):
        return False
    for rel in M.relations().values():
        if frozenset(tuple(perm[x] for x in tup) for tup in rel) != rel:
            return False
    return True


def limit_families(G: FiniteGroupSystem) -> List[Dict[str, int]]:
    """
    All coherent families ``(g_q)``, i.e. the inverse limit of ``G``.
    They are the elements of the group at the maximum pushed down.
    """
    m = maximum_of(G.base)
    families = [{q: G.hom(q, m, c) for q in G.base} for c in range(len(G.groups[m]))]
    families.sort(key=lambda f: tuple(f[q] for q in G.base))
    return families


def verify_phi_isomorphism(G: FiniteGroupSystem, verbose: bool = False) -> PhiReport:
    """
    Check that coefficient extraction is a group isomorphism from the
    automorphisms of the model onto the inverse limit.

    The automorphisms are searched by :func:`automorphisms` and the limit
    is enumerated by :func:`limit_families`. Nothing is raised on
    failure; the report names the failing checks.
    """
    M = build_model(G)
    D = G.base
    auts = _search(M, verbose=verbose)
    notes = []

    def key(c: Mapping[str, int]) -> tuple:
        return tuple(c[q] for q in D)

    # translation form
    coefficients: List[Optional[Dict[str, int]]] = []
    for sigma in auts:
        try:
            coefficients.append(extract_coefficients(M, sigma))
        except TranslationFormViolated as e:
            notes.append(str(e))
            coefficients.append(None)
    translation_form = all(c is not None for c in coefficients)
    extracted = [key(c) for c in coefficients if c is not None]

    families = limit_families(G)
    injective = translation_form and len(set(extracted)) == len(auts)
    surjective = set(extracted) == {key(f) for f in families}

    # c_{s1 o s0} = c_{s1} * c_{s0}
    homomorphism = translation_form
    if translation_form:
        for (s1, c1), (s0, c0) in itertools.product(zip(auts, coefficients), repeat=2):
            try:
                c = extract_coefficients(M, s1.compose(s0))
            except TranslationFormViolated:
                homomorphism = False
                break
            if any(c[q] != G.groups[q].mul(c1[q], c0[q]) for q in D):
                homomorphism = False
                notes.append(f"Coefficients of {s1} o {s0} are not the product.")
                break

    round_trip = translation_form and all(sigma_from_limit(M, c) == s for s, c in zip(auts, coefficients))
    round_trip = round_trip and all(extract_coefficients(M, sigma_from_limit(M, f)) == f for f in families)

    found = set(auts)
    group_closed = (
        any(a.is_identity() for a in auts)
        and all(a.inverse() in found for a in auts)
        and all(a.compose(b) in found for a in auts for b in auts)
    )

    passed = translation_form and injective and surjective and homomorphism and round_trip and group_closed
    if len(auts) != len(families):
        notes.append(f"|Aut| = {len(auts)}, but the limit has {len(families)} elements.")
    report = PhiReport(
        domain_size=len(M), automorphisms=len(auts), limit_size=len(families),
        translation_form=translation_form, injective=injective, surjective=surjective,
        homomorphism=homomorphism, round_trip=round_trip, group_closed=group_closed,
        passed=passed, notes=notes
    )
    logger.info(f"Aut(M) -> G_I: {len(auts)} automorphisms, {len(families)} limit elements, passed: {passed}.")
    return report
