import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hilbert_ext import FiniteAlgebra, StructureError, Variety, chain, enrich, natural_order, trivial, validate
from hilbert_ext.algebra import derived_law_suite, order_joins, order_meets
from hilbert_ext.enumeration import are_isomorphic, enumerate_algebras


def test_h3_and_trivial_pass(H3):
    assert validate(H3, "hil").ok
    assert validate(trivial(), "hil").ok
    assert H3.arrow[H3.element("x")][H3.element("y")] == H3.element("y")


def _with_arrow(alg, **entries):
    rows = [list(r) for r in alg.arrow]
    for key, value in entries.items():
        a, b = key
        rows[alg.element(a)][alg.element(b)] = alg.element(value)
    return FiniteAlgebra(size=alg.size, arrow=rows, one=alg.one, labels=alg.labels)


def test_setting_x_to_y_to_one_gives_the_three_chain(H3):
    # the only changed entry puts x below y; the result is the 3-element chain
    changed = _with_arrow(H3, xy="1")
    assert validate(changed).ok
    assert are_isomorphic(changed, chain(3))


def test_broken_arrow_names_the_axiom(H3):
    bad = _with_arrow(H3, xy="1", yx="1")
    report = validate(bad)
    assert not report.ok
    text = report.failures[0].describe(bad)
    assert "x" in text and "y" in text


def test_out_of_range_entry_is_a_structure_error():
    with pytest.raises(StructureError, match=r"arrow\[0\]\[1\]"):
        FiniteAlgebra(size=2, arrow=[[0, 2], [0, 0]], one=0)


def test_missing_tables_are_reported(H3):
    with pytest.raises(StructureError):
        validate(H3, "ghey")


def test_natural_order_of_fixtures(H3, G4):
    one, x, y = (H3.element(s) for s in "1xy")
    pairs = {(a, b) for a in H3.elements for b in H3.elements if H3.leq[a][b]}
    assert pairs == {(one, one), (x, x), (y, y), (x, one), (y, one)}
    assert natural_order(trivial()).tolist() == [[True]]
    o = natural_order(G4)
    a, b, c = (G4.element(s) for s in "abc")
    assert o[a, c] and o[b, c] and o[c, G4.one] and not o[a, b] and not o[b, a]
    assert int(o.sum()) == 4 + 5


def test_derived_laws_on_fixtures(H3, G4):
    assert derived_law_suite(H3).ok and derived_law_suite(G4).ok
    for alg in enumerate_algebras("hil", 5):
        assert derived_law_suite(alg).ok, alg.name


def test_g4_has_joins_but_not_meets(G4, H3):
    assert order_joins(G4) is not None
    assert order_meets(G4) is None
    # x v y = 1 exists, so H3 also has all joins
    assert order_joins(H3) is not None
    assert validate(enrich(H3, "hils"), "hils").ok
    assert validate(enrich(G4, "hils"), "hils").ok
    with pytest.raises(ValueError):
        enrich(G4, "is")
    with pytest.raises(ValueError):
        enrich(G4, "hils0")


@pytest.mark.parametrize("variety", list(Variety))
@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_chains_validate_in_every_variety(n, variety):
    assert validate(chain(n, variety), variety).ok


def test_reduct_drops_tables():
    c = chain(3, "hey")
    r = c.reduct("hil")
    assert r.join is None and r.meet is None and r.zero is None
    assert r.arrow == c.arrow
    with pytest.raises(StructureError):
        r.reduct("is")


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_validation_is_invariant_under_relabeling(data):
    algs = list(enumerate_algebras("hil", 4))
    alg = data.draw(st.sampled_from(algs))
    perm = data.draw(st.permutations(range(alg.size)))
    copy = alg.relabel(perm)
    assert validate(copy).ok
    o, p = natural_order(alg), natural_order(copy)
    inv = np.argsort(perm)
    assert (p[np.ix_(perm, perm)] == o).all() or (p == o[np.ix_(inv, inv)]).all()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_natural_order_is_a_partial_order_with_top(data):
    alg = data.draw(st.sampled_from(list(enumerate_algebras("hil", 5))))
    o = natural_order(alg)
    assert o.diagonal().all()
    assert not (o & o.T & ~np.eye(alg.size, dtype=bool)).any()
    assert (((o.astype(int) @ o.astype(int)) > 0) <= o).all()
    assert o[:, alg.one].all()
