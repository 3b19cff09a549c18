import pytest
from hypothesis import given, settings, strategies as st

from hilbert_ext import Variety, chain, h3, trivial, validate
from hilbert_ext.enumeration import (
    HARD_CAP,
    are_isomorphic,
    canonical_form,
    enumerate_algebras,
    naive_catalog,
)


def test_smallest_catalogs():
    one = enumerate_algebras("hil", 1)
    assert len(one) == 1 and are_isomorphic(one.members[0], trivial())
    two = enumerate_algebras("hil", 2).of_size(2)
    assert len(two) == 1 and are_isomorphic(two[0], chain(2))


def test_size_three_contains_fixtures():
    three = enumerate_algebras("hil", 3).of_size(3)
    assert any(are_isomorphic(a, h3()) for a in three)
    assert any(are_isomorphic(a, chain(3)) for a in three)
    assert len(three) == len(naive_catalog("hil", 3).of_size(3))


@pytest.mark.parametrize("variety", list(Variety))
def test_catalog_members_validate_and_are_distinct(variety):
    cat = enumerate_algebras(variety, 4)
    for alg in cat:
        assert validate(alg, variety).ok
    keys = {canonical_form(a) for a in cat}
    assert len(keys) == len(cat)


@pytest.mark.parametrize("variety", list(Variety))
def test_matches_naive_oracle(variety):
    fast = enumerate_algebras(variety, 4)
    slow = naive_catalog(variety, 4)
    assert fast.counts == slow.counts
    assert [canonical_form(a) for a in fast] == [canonical_form(a) for a in slow]


def test_caps():
    with pytest.raises(ValueError):
        enumerate_algebras("hil", HARD_CAP[Variety.HIL] + 1)
    with pytest.raises(ValueError):
        naive_catalog("hil", 5)


def test_isomorphism_examples():
    H = h3()
    swapped = H.relabel([0, 2, 1])
    assert canonical_form(swapped) == canonical_form(H)
    assert not are_isomorphic(H, chain(3))
    assert are_isomorphic(H, H)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_canonical_form_ignores_labeling(data):
    variety = data.draw(st.sampled_from(list(Variety)))
    alg = data.draw(st.sampled_from(list(enumerate_algebras(variety, 5))))
    perm = data.draw(st.permutations(range(alg.size)))
    copy = alg.relabel(perm)
    assert canonical_form(copy) == canonical_form(alg)
    assert validate(copy, variety).ok
