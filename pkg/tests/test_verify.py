import pytest

from hilbert_ext import FiniteAlgebra, Morphism, chain
from hilbert_ext.duality import phi
from hilbert_ext.enumeration import enumerate_algebras
from hilbert_ext.verify import (
    SUITES,
    check_axioms,
    check_hat_g,
    check_separation,
    find_meet_counterexample,
)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_at_size_three(name):
    for report in SUITES[name](max_size=3):
        assert report.ok, (report.name, report.failures)
        assert report.checked > 0 or report.notes


def test_meet_counterexample_is_genuine():
    alg, a, b = find_meet_counterexample(enumerate_algebras("hil", 4))
    common = alg.down[a] & alg.down[b]
    meet = max((c for c in alg.elements if common >> c & 1), key=lambda c: bin(alg.down[c]).count("1"))
    assert alg.down[meet] == common
    _, im = phi(alg)
    assert im[meet] != im[a] & im[b]


def test_failing_instances_are_reported():
    bad = FiniteAlgebra(size=2, arrow=[[0, 0], [0, 0]], one=0)
    report = check_axioms([chain(2), bad])
    assert not report.ok and report.witnesses == [bad]
    assert report.checked == 2


def test_hat_g_join_check_finds_the_fixture_counterexample(f, H3, G4):
    report = check_hat_g([H3, G4], ops=("join",))
    assert not report.ok
    assert any(isinstance(w, Morphism) for w in report.witnesses)


def test_separation_check_counts_pairs(H3):
    report = check_separation([H3])
    # filters {1},{1,x},{1,y},H against ideals {x},{y}
    assert report.ok and report.checked == 4
