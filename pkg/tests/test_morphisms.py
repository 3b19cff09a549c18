import itertools

import pytest

from hilbert_ext import Morphism, chain, enrich, identity
from hilbert_ext.duality import phi
from hilbert_ext.enumeration import enumerate_algebras
from hilbert_ext.extensions import big_phi, extend_ghey, extend_is
from hilbert_ext.filters import PreconditionError
from hilbert_ext.morphisms import (
    compose,
    enumerate_morphisms,
    hat_g,
    image_law_holds,
    lift,
    validate_morphism,
    verify_functor_laws,
    verify_naturality,
    verify_universal_property,
)


def test_fixture_morphism_is_valid(f, H3, G4):
    assert validate_morphism(f)
    homs = enumerate_morphisms(H3, G4)
    assert f in homs
    assert len(homs) == 9
    # f(x v y) = 1 while f(x) v f(y) = c
    assert not validate_morphism(Morphism(enrich(H3, "hils"), enrich(G4, "hils"), f.map, "hils"))


def test_constant_one_map_is_a_morphism():
    for A, B in itertools.product(enumerate_algebras("hil", 4), repeat=2):
        assert validate_morphism(Morphism(A, B, (B.one,) * A.size))


def test_morphism_shape_errors(H3, G4):
    with pytest.raises(ValueError):
        Morphism(H3, G4, (0, 1))
    with pytest.raises(ValueError):
        Morphism(H3, G4, (0, 1, 9))
    with pytest.raises(ValueError):
        compose(identity(H3), Morphism(H3, G4, (0, 0, 0)))


def test_hat_g_fails_joins_for_fixture_morphism(f, H3, G4):
    g = hat_g(f)
    XH, imH = phi(H3)
    XG, imG = phi(G4)
    Px, Py = imH[H3.element("x")], imH[H3.element("y")]
    assert g(Px) == imG[G4.element("a")]
    assert g(Py) == imG[G4.element("b")]
    assert g(Px | Py) == XG.full
    assert g(Px) | g(Py) != g(Px | Py)
    assert not g.preserves("join")
    assert (Px, Py) in g.failures("join")
    assert all(g.preserves(op) for op in ("top", "meet", "arrow"))


def test_hat_g_of_identity(H3):
    g = hat_g(identity(H3))
    assert g.values == tuple(range(len(g.source)))


def test_hat_g_preserves_joins_for_hils_morphisms():
    algs = list(enumerate_algebras("hils", 4))
    for A, B in itertools.product(algs, repeat=2):
        for m in enumerate_morphisms(A, B, "hils"):
            assert hat_g(m).preserves("join"), (A.name, B.name, m.map)


def test_is_lift_of_fixture_morphism(f, H3, G4):
    L = lift(f, "is")
    assert len(L.source_ext) == 4 and len(L.target_ext) == 5
    assert L.map[0] == 0  # the empty upset goes to the empty upset
    assert L.map == (0, 1, 2, 4)
    assert L.intertwines()
    assert validate_morphism(L.as_morphism())


def test_lift_of_identity_is_identity(H3):
    for tag in ("is", "dagger"):
        L = lift(identity(H3), tag)
        assert L.map == tuple(range(len(L.map)))


def test_dagger_lift_sends_phi_to_phi(f, H3, G4):
    L = lift(f, "dagger")
    PhiH, PhiG = big_phi(H3), big_phi(G4)
    for a in H3.elements:
        src = L.source_ext.family.index(PhiH[a])
        assert L.target_ext.members[L.map[src]] == PhiG[f(a)]


def test_lift_rejects_non_morphisms(H3, G4):
    bad = Morphism(H3, G4, (0, 2, 2))
    assert not validate_morphism(bad)
    with pytest.raises(PreconditionError):
        lift(bad, "is")
    with pytest.raises(PreconditionError):
        lift(Morphism(H3, G4, (0, 2, 3)), "ghey")


def test_composition_instances(f, G4):
    assert lift(compose(identity(G4), f), "is").map == lift(f, "is").map
    gf = compose(identity(G4), f)
    assert lift(gf, "is").map == tuple(lift(identity(G4), "is").map[v] for v in lift(f, "is").map)


def test_image_law(f):
    assert image_law_holds(f)


@pytest.mark.parametrize("tag", ["is", "ghey", "dagger"])
def test_functor_laws_small(tag):
    variety = {"is": "hil", "ghey": "hils", "dagger": "hil"}[tag]
    algs = list(enumerate_algebras(variety, 3))
    assert verify_functor_laws(algs, tag).ok
    assert verify_naturality(algs, tag).ok


def test_universal_property_instances(H3, G4):
    ext = extend_is(H3)
    assert verify_universal_property(H3, [ext.presented], "is").ok
    assert verify_universal_property(H3, [chain(2, "is")], "is").ok
    G = enrich(G4, "hils")
    assert verify_universal_property(G, [extend_ghey(G).presented], "ghey").ok
    with pytest.raises(PreconditionError):
        verify_universal_property(H3, [], "dagger")


def test_universal_property_counts_factorizations(H3):
    report = verify_universal_property(H3, [chain(2, "is")], "is")
    assert report.checked == len(enumerate_morphisms(H3, chain(2)))
