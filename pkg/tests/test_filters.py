import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hilbert_ext import identity, trivial
from hilbert_ext.enumeration import enumerate_algebras
from hilbert_ext.extensions import x_star
from hilbert_ext.filters import (
    PreconditionError,
    all_filters,
    extend_along,
    extend_along_star,
    generated_filter,
    generated_filter_by_chains,
    irreducible_filters,
    irreducible_filters_by_definition,
    is_implicative_filter,
    is_order_ideal,
    prime_filters,
    proper_filters,
    separate,
    separate_arrow,
    separate_pair,
    separate_point,
)
from hilbert_ext.algebra import enrich

HIL4 = list(enumerate_algebras("hil", 4))


def sets(family, alg):
    return {alg.show(F) for F in family}


def test_filter_membership(H3):
    assert is_implicative_filter(H3, H3.mask("1"))
    assert is_implicative_filter(H3, H3.mask("1x"))
    assert not is_implicative_filter(H3, H3.mask("x"))


def test_generated_filters(H3, G4):
    assert H3.show(generated_filter(H3, 0)) == "{1}"
    assert H3.show(generated_filter(H3, H3.mask("x"))) == "{1,x}"
    assert G4.show(generated_filter(G4, G4.mask("a"))) == "{1,c,a}"


def test_irreducible_filters_of_fixtures(H3, G4):
    assert sets(irreducible_filters(H3), H3) == {"{1,x}", "{1,y}"}
    assert H3.mask("1") in all_filters(H3)
    assert sets(irreducible_filters(G4), G4) == {"{1}", "{1,c,a}", "{1,c,b}"}


def test_prime_equals_irreducible_with_joins(G4):
    J = enrich(G4, "hils")
    assert prime_filters(J).filters == irreducible_filters(J).filters
    with pytest.raises(PreconditionError):
        prime_filters(G4)


def test_order_ideals(H3, G4):
    assert is_order_ideal(G4, G4.mask("abc"))
    assert not is_order_ideal(H3, H3.mask("xy"))
    assert not is_order_ideal(H3, 0)
    assert not is_order_ideal(G4, G4.mask("c"))  # not down-closed


def test_separation_examples(H3, G4):
    assert H3.show(separate(H3, H3.mask("1"), H3.mask("x"))) == "{1,y}"
    assert G4.show(separate(G4, G4.mask("1"), G4.mask("abc"))) == "{1}"


def test_separation_preconditions(H3):
    with pytest.raises(PreconditionError):
        separate(H3, H3.mask("1x"), H3.mask("x"))
    with pytest.raises(PreconditionError):
        separate(H3, H3.mask("x"), H3.mask("y"))
    with pytest.raises(PreconditionError):
        separate(H3, H3.mask("1"), H3.mask("xy"))
    with pytest.raises(PreconditionError):
        separate_pair(H3, H3.element("x"), H3.element("1"))


def test_separation_wrappers(G4):
    a, b, c = (G4.element(s) for s in "abc")
    P = separate_point(G4, G4.mask("1"), c)
    assert not P >> c & 1
    P = separate_pair(G4, a, b)
    assert P >> a & 1 and not P >> b & 1
    assert separate_arrow(G4, G4.mask("1"), a, c) is None  # a -> c = 1
    P = separate_arrow(G4, G4.mask("1"), c, a)
    assert P >> c & 1 and not P >> a & 1


def test_extend_along_examples(f, H3, G4):
    assert G4.show(extend_along(f, G4.mask("1"), H3.mask("1x"))) == "{1,c,a}"
    i = identity(H3)
    assert H3.show(extend_along(i, H3.mask("1x"), H3.mask("1x"))) == "{1,x}"


def test_extend_along_star_example(f, H3, G4):
    # componentwise: {1,x} -> {1,c,a}, {1,y} -> {1,c,b}; their intersection
    K = extend_along_star(f, G4.mask("1"), H3.mask("1"))
    assert G4.show(K) == "{1,c}"
    assert K in x_star(G4)
    assert f.preimage(K) == H3.mask("1")


def test_extend_along_preconditions(f, H3, G4):
    with pytest.raises(PreconditionError):
        extend_along(f, G4.mask("1a"), H3.mask("1x"))  # not a filter
    with pytest.raises(PreconditionError):
        extend_along(f, G4.mask("1"), H3.mask("1"))  # not irreducible
    with pytest.raises(PreconditionError):
        extend_along(f, G4.mask("1cb"), H3.mask("1x"))  # f^-1(I) not inside J


def test_trivial_algebra_has_no_points():
    assert len(irreducible_filters(trivial())) == 0
    assert len(proper_filters(trivial())) == 0


@pytest.mark.parametrize("alg", HIL4, ids=lambda a: a.name)
def test_irreducible_rules_agree(alg):
    assert irreducible_filters(alg).filters == irreducible_filters_by_definition(alg).filters


@pytest.mark.parametrize("alg", HIL4, ids=lambda a: a.name)
def test_every_filter_is_an_upset_closed_under_mp(alg):
    for F in all_filters(alg):
        assert alg.upset(F) == F
        assert is_implicative_filter(alg, F)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_generated_filter_is_a_closure_operator(data):
    alg = data.draw(st.sampled_from(list(enumerate_algebras("hil", 5))))
    full = (1 << alg.size) - 1
    X = data.draw(st.integers(0, full))
    Y = data.draw(st.integers(0, full)) | X
    FX = generated_filter(alg, X)
    assert X & ~FX == 0
    assert generated_filter(alg, FX) == FX
    assert FX & ~generated_filter(alg, Y) == 0
    assert FX == generated_filter_by_chains(alg, X)
    assert FX in all_filters(alg)


@pytest.mark.parametrize("alg", HIL4, ids=lambda a: a.name)
def test_separation_over_all_pairs(alg):
    ideals = [I for I in range(1, 1 << alg.size) if is_order_ideal(alg, I)]
    X = irreducible_filters(alg)
    for F, I in itertools.product(all_filters(alg), ideals):
        if F & I:
            continue
        P = separate(alg, F, I)
        assert P in X and F & ~P == 0 and not P & I


def test_extend_along_matches_brute_force(f, H3, G4):
    X = irreducible_filters(G4)
    for I in all_filters(G4):
        for J in irreducible_filters(H3):
            if f.preimage(I) & ~J:
                continue
            K = extend_along(f, I, J)
            valid = [P for P in X if I & ~P == 0 and f.preimage(P) == J]
            assert K in valid
