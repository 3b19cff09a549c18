import pytest

from hilbert_ext import identity, trivial
from hilbert_ext import _bits
from hilbert_ext.duality import (
    box,
    compose,
    d_of_x,
    epsilon,
    functional_check,
    h_r,
    h_space_check,
    has_lifting_property,
    implies,
    membership_transfer_holds,
    phi,
    relation_of,
    upset_algebra,
)
from hilbert_ext.enumeration import enumerate_algebras
from hilbert_ext.morphisms import compose as compose_maps, enumerate_morphisms, subpreserving_maps, validate_morphism

HIL3 = list(enumerate_algebras("hil", 3))
HIL5 = list(enumerate_algebras("hil", 5))


def names(X, points):
    return {X.show(i) for i in _bits.members(points)}


def test_phi_of_fixtures(H3, G4):
    X, im = phi(H3)
    assert names(X, im[H3.element("x")]) == {"{1,x}"}
    assert names(X, im[H3.element("y")]) == {"{1,y}"}
    assert im[H3.one] == X.full
    X, im = phi(G4)
    assert names(X, im[G4.element("c")]) == {"{1,c,a}", "{1,c,b}"}
    assert names(X, im[G4.element("a")]) == {"{1,c,a}"}
    assert names(X, im[G4.element("b")]) == {"{1,c,b}"}
    assert im[G4.one] == X.full == 0b111


def test_phi_of_trivial_algebra():
    X, im = phi(trivial())
    assert len(X) == 0 and im == (0,)
    assert h_space_check(trivial()).ok
    assert epsilon(trivial()).ok


def test_upset_algebra_sizes_and_arrow(H3, G4):
    X, im = phi(H3)
    up = upset_algebra(X)
    assert len(up.members) == 4
    Px, Py = im[H3.element("x")], im[H3.element("y")]
    assert implies(X, Px, Py) == Py
    for U in up.members:
        assert implies(X, U, U) == X.full
    X, im = phi(G4)
    assert len(upset_algebra(X).members) == 5
    Pa, Pb = im[G4.element("a")], im[G4.element("b")]
    assert implies(X, Pa, 0) == Pb


def test_h_space_and_round_trip(H3, G4):
    for alg in (H3, G4):
        assert h_space_check(alg).ok
        assert epsilon(alg).ok
    assert len(d_of_x(H3).members) == 3
    assert len(d_of_x(G4).members) == 4


def test_relation_of_fixture_morphism(f, H3, G4):
    R = relation_of(f)
    XG, XH = R.source, R.target
    pairs = {(XG.show(i), XH.show(j)) for i, j in R.pairs()}
    assert pairs == {
        ("{1}", "{1,x}"),
        ("{1}", "{1,y}"),
        ("{1,c,a}", "{1,x}"),
        ("{1,c,b}", "{1,y}"),
    }
    assert functional_check(R)
    assert membership_transfer_holds(f)
    assert has_lifting_property(f)


def test_identity_relation_is_inclusion(H3, G4):
    for alg in (H3, G4):
        R = relation_of(identity(alg))
        X = R.source
        assert set(R.pairs()) == {(i, j) for i in range(len(X)) for j in range(len(X)) if X.leq(i, j)}
        assert functional_check(R)


def test_box_gives_h_r(f):
    R = relation_of(f)
    fam = upset_algebra(R.target)
    assert h_r(R, fam) == tuple(box(R, U) for U in fam.members)


@pytest.mark.parametrize("alg", HIL5, ids=lambda a: a.name)
def test_round_trip_exhaustive(alg):
    assert h_space_check(alg).ok
    assert epsilon(alg).ok


def test_relation_composition_exhaustive():
    for A in HIL3:
        for B in HIL3:
            for g1 in enumerate_morphisms(A, B):
                for C in HIL3:
                    for g2 in enumerate_morphisms(B, C):
                        lhs = relation_of(compose_maps(g2, g1))
                        rhs = compose(relation_of(g2), relation_of(g1))
                        assert lhs.image == rhs.image


def test_lifting_property_characterizes_morphisms():
    seen = {True: 0, False: 0}
    for A in HIL3:
        for B in HIL3:
            for m in subpreserving_maps(A, B):
                hom = validate_morphism(m)
                seen[hom] += 1
                assert has_lifting_property(m) == hom
    assert seen[True] and seen[False]
