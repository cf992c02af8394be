import os
import itertools
from typing import List, Sequence, Set, Tuple

import numpy as np

from invlimits import DATAPATH, api
from invlimits.models import InverseSystem, Thread, Word


def fixture(name: str) -> str:
    """Absolute path of a shipped fixture."""
    path = os.path.join(DATAPATH, name)
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    return path


def rewrite_normal_forms(raw: Sequence[Tuple[str, int]]) -> Set[tuple]:
    """
    Apply every single rewriting step (drop a zero exponent, merge two
    adjacent syllables of the same generator) in every possible order
    and return all irreducible results.
    """
    terminals, seen = set(), set()
    stack = [tuple(raw)]
    while stack:
        w = stack.pop()
        if w in seen:
            continue
        seen.add(w)
        successors = [w[:i] + w[i + 1:] for i, (_, k) in enumerate(w) if k == 0]
        successors.extend(
            w[:i] + ((w[i][0], w[i][1] + w[i + 1][1]), ) + w[i + 2:]
            for i in range(len(w) - 1) if w[i][0] == w[i + 1][0]
        )
        if successors:
            stack.extend(successors)
        else:
            terminals.add(w)
    return terminals


def raw_words(alphabet: Sequence[str], exponents: Sequence[int], max_length: int):
    """All raw syllable sequences up to the given length."""
    for n in range(max_length + 1):
        for letters in itertools.product(alphabet, repeat=n):
            for ks in itertools.product(exponents, repeat=n):
                yield tuple(zip(letters, ks))


def brute_force_threads(system: InverseSystem) -> List[Thread]:
    """Filter all choice functions for coherence."""
    D = system.base
    threads = []
    for choice in itertools.product(*[system.fiber(p) for p in D]):
        t = Thread(dict(zip(D.elements, choice)))
        if t.is_coherent(system):
            threads.append(t)
    return threads


def random_decomposition_terms(threads: Sequence[Thread], rng: np.random.Generator, max_terms: int = 5, canonical: str = None, top: str = None):
    """
    Random sequence of (thread, exponent) terms. With ``canonical='free'``
    adjacent threads differ, with ``canonical='abelian'`` all threads
    differ and are sorted by their value at ``top``.
    """
    n = int(rng.integers(0, max_terms + 1))
    if canonical == 'abelian':
        n = min(n, len(threads))
        picked = [threads[i] for i in rng.choice(len(threads), size=n, replace=False)]
        picked.sort(key=lambda t: t[top])
    else:
        picked = []
        for _ in range(n):
            options = [t for t in threads if not (canonical == 'free' and picked and picked[-1] == t)]
            picked.append(options[int(rng.integers(len(options)))])
    exps = [int(k) for k in rng.choice([-3, -2, -1, 1, 2, 3], size=len(picked))]
    return list(zip(picked, exps))


def random_limit_element(G, threads: Sequence[Thread], rng: np.random.Generator, max_terms: int = 5):
    """Random eager element as a product of basis elements."""
    g = api.limit_element_eager(G, {p: G.identity() for p in G.base})
    for t, k in random_decomposition_terms(threads, rng, max_terms=max_terms):
        b = api.basis_element(G, t)
        for _ in range(abs(k)):
            g = api.multiply_limit(g, b if k > 0 else api.invert_limit(b))
    return g


def planted_system(length: int = 64) -> InverseSystem:
    """
    System over the symbolic chain of naturals with ``A_n = {x0, ..., xn}``
    and ``f_{m,n}(x_i) = x_min(i, m)``.
    """
    D = api.symbolic_chain(length)

    def fibers(n: str) -> List[str]:
        return [f"x{i}" for i in range(int(n) + 1)]

    def maps(m: str, n: str) -> dict:
        return {f"x{i}": f"x{min(i, int(m))}" for i in range(int(n) + 1)}

    return InverseSystem(D, fibers, maps, name='planted')


def planted_word(n: str, stable_from: int = 10) -> Word:
    """
    Product of the basis elements of the threads ``t_j(n) = x_min(j, n)``
    for ``j <= stable_from``. Its syllable length is ``n + 1`` below
    ``stable_from`` and constant from there on.
    """
    return Word.reduce((f"x{min(j, int(n))}", 1) for j in range(stable_from + 1))
