"""
Finite group systems, their model and its automorphisms.

"""
import pytest

from invlimits import api
from invlimits.config import config
from invlimits.models import Automorphism
from invlimits.util.exceptions import (
    Incoherent,
    MalformedInput,
    NotAGroup,
    NotAHomomorphism,
    SizeLimit,
    SymbolicUnsupported,
    TranslationFormViolated
)
from ._util import fixture


# fixture name, |M|, |Aut(M)|
INSTANCES = [
    ('groups_z2.json', 4, 2),
    ('groups_z3.json', 6, 3),
    ('groups_z4_z2.json', 12, 4),
    ('groups_vee.json', 16, 4),
    ('groups_trivial_top.json', 10, 1)
]


def check_load():
    G = api.load_finite_group_system(fixture('groups_z4_z2.json'))
    assert G.order_sum == 6
    assert G.hom('p', 'q', 3) == 1
    assert list(G.homs[('q', 'q')]) == [0, 1, 2, 3]
    assert G.groups['q'].mul(3, 2) == 1
    assert list(G.groups['q'].inverses) == [0, 3, 2, 1]

    # composed homs of the vee come from the carrier
    G = api.load_finite_group_system(fixture('groups_vee.json'))
    assert list(G.homs[('p', 'r')]) == [0, 0, 1, 1]

    with pytest.raises(NotAGroup):
        api.load_finite_group_system(fixture('groups_not_a_group.json'))
    with pytest.raises(NotAHomomorphism):
        api.load_finite_group_system(fixture('groups_bad_hom.json'))

    raw = api.from_json(fixture('groups_z4_z2.json'))
    with pytest.raises(MalformedInput):
        api.load_finite_group_system({**raw, 'homs': {'p<q': [0, 1]}})
    with pytest.raises(MalformedInput):
        api.load_finite_group_system({**raw, 'homs': {'p<q': [0, 1, 0, 2]}})
    with pytest.raises(MalformedInput):
        api.load_finite_group_system({**raw, 'groups': {'p': raw['groups']['p']}})
    with pytest.raises(SymbolicUnsupported):
        api.load_finite_group_system({**raw, 'poset': {'kind': 'builtin', 'name': 'omega', 'param': 2}})
    return True


def check_structure():
    M = api.build_model(api.load_finite_group_system(fixture('groups_z2.json')))
    assert len(M) == 4
    assert len(M.relations()['F[p]']) == 4
    assert M.unary['p'] == frozenset({M.index[(0, 'p', 0)], M.index[(1, 'p', 0)]})
    assert M.constants[(1, 'p')] == M.index[(1, 'p', 1)]

    M = api.build_model(api.load_finite_group_system(fixture('groups_z4_z2.json')))
    assert len(M) == 12
    assert len(M.relations()['H[p,q]']) == 4
    assert set(M.relations()) == {'H[p,p]', 'H[p,q]', 'H[q,q]', 'F[p]', 'F[q]'}
    return True


def check_size_limit(monkeypatch):
    G = api.load_finite_group_system(fixture('groups_z4_z2.json'))
    monkeypatch.setattr(config, 'max_domain', 10)
    with pytest.raises(SizeLimit):
        api.build_model(G)
    return True


def check_automorphisms(name, domain_size, n_auts):
    G = api.load_finite_group_system(fixture(name))
    M = api.build_model(G)
    assert len(M) == domain_size

    auts = api.automorphisms(M)
    families = api.limit_families(G)
    assert len(auts) == n_auts == len(families)
    assert all(api.is_automorphism(M, a) for a in auts)
    assert sorted(tuple(a.coefficients[q] for q in G.base) for a in auts) == [tuple(f[q] for q in G.base) for f in families]
    return True


def check_sigma_from_limit():
    G = api.load_finite_group_system(fixture('groups_z4_z2.json'))
    M = api.build_model(G)

    sigma = api.sigma_from_limit(M, {'p': 1, 'q': 1})
    assert api.is_automorphism(M, sigma)
    assert not sigma.compose(sigma).is_identity()
    square = sigma.compose(sigma)
    assert square.compose(square).is_identity()
    assert sigma.inverse() == api.sigma_from_limit(M, {'p': 1, 'q': 3})

    # names work as well as indices
    assert api.sigma_from_limit(M, {'p': '1', 'q': '3'}) == sigma.inverse()

    with pytest.raises(Incoherent) as e:
        api.sigma_from_limit(M, {'p': 0, 'q': 1})
    assert e.value.pair == ('p', 'q')
    with pytest.raises(MalformedInput):
        api.sigma_from_limit(M, {'p': 0})

    for f in api.limit_families(G):
        assert api.extract_coefficients(M, api.sigma_from_limit(M, f)) == f
    return True


def check_translation_form():
    M = api.build_model(api.load_finite_group_system(fixture('groups_z2.json')))
    # domain order: <0,p,0>, <0,p,1>, <1,p,0>, <1,p,1>
    assert api.is_automorphism(M, [2, 1, 0, 3])
    assert api.extract_coefficients(M, [2, 1, 0, 3]) == {'p': 1}

    moved = Automorphism([0, 3, 2, 1])
    assert not api.is_automorphism(M, moved)
    with pytest.raises(TranslationFormViolated):
        api.extract_coefficients(M, moved)
    with pytest.raises(TranslationFormViolated):
        api.extract_coefficients(M, [1, 0, 3, 2])
    assert not api.is_automorphism(M, [0, 0, 2, 3])
    return True


@pytest.mark.depends(name='model')
def test_load_and_build(monkeypatch):
    assert check_load()
    assert check_structure()
    assert check_size_limit(monkeypatch)


@pytest.mark.depends(on=['model'])
def test_automorphisms():
    for name, domain_size, n_auts in INSTANCES:
        assert check_automorphisms(name, domain_size, n_auts)


def test_limit_translations():
    assert check_sigma_from_limit()
    assert check_translation_form()


@pytest.mark.depends(on=['model'])
def test_phi_isomorphism():
    """
    Coefficient extraction is a group isomorphism from the automorphisms
    of the model onto the inverse limit on every shipped instance.
    """
    for name, domain_size, n_auts in INSTANCES:
        report = api.verify_phi_isomorphism(api.load_finite_group_system(fixture(name)))
        assert report.passed, report.notes
        assert report.domain_size == domain_size
        assert report.automorphisms == report.limit_size == n_auts
