"""Exhaustive checks of filter, duality and adjunction laws over enumerated algebras.

Each ``check_*`` function takes a list of algebras and returns a
:class:`~hilbert_ext.morphisms.LawReport`.  The ``*_suite`` functions bundle
them the way the command line ``verify`` runs them.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import _bits
from .algebra import FiniteAlgebra, Variety, derived_law_suite, order_joins, validate
from .duality import (
    compose as compose_relations,
    epsilon,
    functional_check,
    h_space_check,
    has_lifting_property,
    implies,
    membership_transfer_holds,
    phi,
    relation_of,
    upset_algebra,
)
from .enumeration import HARD_CAP, enumerate_algebras
from .extensions import (
    CertificationError,
    Construction,
    big_phi,
    extend_dagger,
    extend_ghey,
    extend_hey,
    extend_is,
    fc,
    is_envelope,
    x_star,
)
from .filters import (
    all_filters,
    extend_along,
    extend_along_star,
    irreducible_filters,
    irreducible_filters_by_definition,
    is_order_ideal,
    prime_filters,
    proper_filters,
    separate,
    separate_arrow,
    separate_pair,
    separate_point,
    star_components,
)
from .morphisms import (
    LawReport,
    Morphism,
    compose,
    enumerate_morphisms,
    hat_g,
    image_law_holds,
    lift,
    subpreserving_maps,
    validate_morphism,
    verify_functor_laws,
    verify_naturality,
    verify_universal_property,
)


def catalog(variety: "Variety | str", max_size: int) -> list[FiniteAlgebra]:
    return list(enumerate_algebras(variety, max_size))


def morphisms_between(algebras: Sequence[FiniteAlgebra], variety: Variety = Variety.HIL) -> Iterator[Morphism]:
    for A, B in itertools.product(algebras, repeat=2):
        yield from enumerate_morphisms(A, B, variety)


def order_ideals(alg: FiniteAlgebra) -> list[int]:
    return [I for I in range(1, 1 << alg.size) if is_order_ideal(alg, I)]


# --------------------------------------------------------------- algebra


def check_axioms(algebras: Iterable[FiniteAlgebra], variety: Variety = Variety.HIL) -> LawReport:
    report = LawReport(f"axioms and derived laws ({variety.value})")
    for alg in algebras:
        ok = validate(alg, variety).ok and derived_law_suite(alg).ok
        report.record(ok, alg.name, alg)
    return report


# ----------------------------------------------------------------- filters


def check_irreducible_characterizations(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("irreducible filters: unique upper cover = defining condition")
    for alg in algebras:
        report.record(irreducible_filters(alg) == irreducible_filters_by_definition(alg), alg.name, alg)
    return report


def check_prime_equals_irreducible(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("prime filters = irreducible filters (with supremum)")
    for alg in algebras:
        if alg.join is None:
            joins = order_joins(alg)
            if joins is None:
                continue
            alg = FiniteAlgebra(size=alg.size, arrow=alg.arrow, one=alg.one, join=joins, name=alg.name)
        report.record(prime_filters(alg).filters == irreducible_filters(alg).filters, alg.name, alg)
    return report


def check_filters_are_meets_of_irreducibles(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("every proper filter is the intersection of the irreducible filters above it")
    for alg in algebras:
        for F in proper_filters(alg):
            meet = alg.carrier
            for P in star_components(alg, F):
                meet &= P
            report.record(meet == F, f"{alg.name}: {alg.show(F)}", alg)
    return report


def check_separation(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    """A disjoint filter and order-ideal are always separated by an irreducible filter."""
    report = LawReport("separation: disjoint filter and order-ideal")
    for alg in algebras:
        ideals = order_ideals(alg)
        for F in all_filters(alg):
            for I in ideals:
                if F & I:
                    continue
                try:
                    P = separate(alg, F, I)
                    ok = _bits.is_subset(F, P) and not (P & I) and P in irreducible_filters(alg)
                except Exception:  # any failure is a counterexample
                    ok = False
                report.record(ok, f"{alg.name}: F={alg.show(F)} I={alg.show(I)}", alg)
    return report


def check_separation_corollaries(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("separation corollaries (point, pair, implication)")
    for alg in algebras:
        X = irreducible_filters(alg)
        for F in all_filters(alg):
            for a in alg.elements:
                if not _bits.contains(F, a):
                    P = separate_point(alg, F, a)
                    report.record(_bits.is_subset(F, P) and not _bits.contains(P, a), f"{alg.name}: point", alg)
                for b in alg.elements:
                    witness = separate_arrow(alg, F, a, b)
                    exists = any(
                        _bits.is_subset(F, P) and _bits.contains(P, a) and not _bits.contains(P, b) for P in X
                    )
                    in_F = _bits.contains(F, alg.arrow[a][b])
                    ok = (not in_F) == exists and (witness is None) == in_F
                    if witness is not None:
                        ok = ok and _bits.contains(witness, a) and not _bits.contains(witness, b)
                    report.record(ok, f"{alg.name}: arrow a={a} b={b} F={alg.show(F)}", alg)
        for a, b in itertools.product(alg.elements, repeat=2):
            if not alg.leq[a][b]:
                P = separate_pair(alg, a, b)
                report.record(_bits.contains(P, a) and not _bits.contains(P, b), f"{alg.name}: pair", alg)
    return report


# ---------------------------------------------------------------- duality


def check_phi_morphism(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("phi is an injective implication-preserving map into X(H)^+")
    for alg in algebras:
        X, images = phi(alg)
        ok = (
            len(set(images)) == alg.size
            and images[alg.one] == X.full
            and all(X.is_upset(U) for U in images)
            and all(
                images[alg.arrow[a][b]] == implies(X, images[a], images[b])
                for a in alg.elements
                for b in alg.elements
            )
        )
        report.record(ok, alg.name, alg)
    return report


def check_phi_joins(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    """``phi(a v b) = phi(a) | phi(b)`` wherever the join exists in the natural order."""
    report = LawReport("phi preserves existing joins")
    for alg in algebras:
        _, images = phi(alg)
        for a, b in itertools.product(alg.elements, repeat=2):
            common = alg.up[a] & alg.up[b]
            least = [c for c in _bits.members(common) if common & ~alg.up[c] == 0]
            if least:
                c = least[0]
                report.record(images[c] == images[a] | images[b], f"{alg.name}: {a} v {b}", alg)
    return report


def find_meet_counterexample(algebras: Iterable[FiniteAlgebra]) -> Optional[tuple[FiniteAlgebra, int, int]]:
    """First ``(H, a, b)`` where ``a ^ b`` exists in the natural order but ``phi`` does not preserve it."""
    for alg in algebras:
        _, images = phi(alg)
        for a, b in itertools.combinations(alg.elements, 2):
            common = alg.down[a] & alg.down[b]
            greatest = [c for c in _bits.members(common) if common & ~alg.down[c] == 0]
            if greatest and images[greatest[0]] != images[a] & images[b]:
                return alg, a, b
    return None


def check_upset_residuation(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("X(H)^+ is residuated: U & W <= V iff W <= U => V")
    for alg in algebras:
        X, _ = phi(alg)
        ups = upset_algebra(X).members
        ok = all(
            _bits.is_subset(U & W, V) == _bits.is_subset(W, implies(X, U, V)) for U in ups for V in ups for W in ups
        )
        ok = ok and validate(upset_algebra(X).algebra(Variety.HEY), Variety.HEY).ok
        report.record(ok, alg.name, alg)
    return report


def check_h_space(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("dual space conditions")
    for alg in algebras:
        rep = h_space_check(alg)
        report.record(rep.ok, f"{alg.name}: {'; '.join(rep.notes)}", alg)
    return report


def check_round_trip(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("phi: H = D(X(H)) and epsilon is an order bijection")
    for alg in algebras:
        cert = epsilon(alg)
        report.record(cert.ok, f"{alg.name}: {cert}", alg)
    return report


def check_membership_transfer(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    report = LawReport("f(a) in P iff R_f(P) <= phi(a)")
    for f in morphisms_between(algebras):
        report.record(membership_transfer_holds(f), f"{f.dom.name}->{f.cod.name}: {f.map}", f)
    return report


def check_functional_relations(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    report = LawReport("R_f is an H-functional relation")
    for f in morphisms_between(algebras):
        report.record(functional_check(relation_of(f)), f"{f.dom.name}->{f.cod.name}: {f.map}", f)
    return report


def check_relation_composition(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    report = LawReport("R_(g o f) = R_g o R_f")
    homs = {(A, B): enumerate_morphisms(A, B) for A in algebras for B in algebras}
    for A, B, C in itertools.product(algebras, repeat=3):
        for f in homs[A, B]:
            Rf = relation_of(f)
            for g in homs[B, C]:
                lhs = relation_of(compose(g, f))
                rhs = compose_relations(relation_of(g), Rf)
                report.record(lhs.image == rhs.image, f"{A.name}->{B.name}->{C.name}: {f.map} {g.map}", f)
    return report


def check_lifting_equivalence(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    """Among maps with ``f(1)=1`` and ``f(a->b) <= f(a)->f(b)``: morphism iff the lifting property."""
    report = LawReport("subpreserving map is a morphism iff R_f has the lifting property")
    homs = non_homs = 0
    for A, B in itertools.product(algebras, repeat=2):
        for f in subpreserving_maps(A, B):
            is_hom = validate_morphism(f)
            homs += is_hom
            non_homs += not is_hom
            report.record(is_hom == has_lifting_property(f), f"{A.name}->{B.name}: {f.map}", f)
    report.notes.append(f"{homs} morphisms, {non_homs} non-morphisms")
    return report


# -------------------------------------------------------------- extensions


def check_is_extension(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("H^IS = FC(H) and is an envelope")
    for alg in algebras:
        try:
            ext = extend_is(alg)
            ok = ext.members == fc(alg) and is_envelope(ext) and validate(ext.presented, Variety.IS).ok
        except CertificationError:
            ok = False
        report.record(ok, alg.name, alg)
    return report


def check_ghey_extension(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("H^GHey = X(H)^+ and its IS-reduct = FC(H)")
    for alg in algebras:
        try:
            ext = extend_ghey(alg)
            X, _ = phi(alg)
            ok = (
                ext.members == upset_algebra(X).members
                and ext.members == fc(alg)
                and validate(ext.presented, Variety.GHEY).ok
            )
        except CertificationError:
            ok = False
        report.record(ok, alg.name, alg)
    return report


def check_hey_extension(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("H^Hey = X(H)^+ (with supremum and minimum)")
    for alg in algebras:
        try:
            ext = extend_hey(alg)
            X, _ = phi(alg)
            ok = ext.members == upset_algebra(X).members and validate(ext.presented, Variety.HEY).ok
        except CertificationError:
            ok = False
        report.record(ok, alg.name, alg)
    return report


def check_dagger_extension(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("H^dagger = (X*(H))^+")
    for alg in algebras:
        try:
            ext = extend_dagger(alg)
            Xs = x_star(alg)
            ok = (
                ext.members == upset_algebra(Xs).members
                and Xs.filters == proper_filters(alg).filters
                and validate(ext.presented, Variety.GHEY).ok
            )
        except CertificationError:
            ok = False
        report.record(ok, alg.name, alg)
    return report


def check_big_phi(algebras: Iterable[FiniteAlgebra]) -> LawReport:
    report = LawReport("Phi is an injective morphism into X*(H)^+")
    for alg in algebras:
        Xs = x_star(alg)
        images = big_phi(alg)
        ok = (
            len(set(images)) == alg.size
            and images[alg.one] == Xs.full
            and all(Xs.is_upset(U) for U in images)
            and all(
                images[alg.arrow[a][b]] == implies(Xs, images[a], images[b])
                for a in alg.elements
                for b in alg.elements
            )
        )
        report.record(ok, alg.name, alg)
    return report


# -------------------------------------------------------------- morphisms


def check_hat_g(algebras: Sequence[FiniteAlgebra], ops=("top", "meet", "arrow"), variety=Variety.HIL) -> LawReport:
    report = LawReport(f"hat g preserves {', '.join(ops)} ({variety.value} morphisms)")
    for f in morphisms_between(algebras, variety):
        g = hat_g(f)
        report.record(all(g.preserves(op) for op in ops), f"{f.dom.name}->{f.cod.name}: {f.map}", f)
    return report


def check_image_law(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    report = LawReport("hat g maps H^IS onto the IS-subalgebra generated by phi[f[H]]")
    for f in morphisms_between(algebras):
        report.record(image_law_holds(f), f"{f.dom.name}->{f.cod.name}: {f.map}", f)
    return report


def check_preimage_of_points(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    """For morphisms preserving joins, ``f^-1(P)`` is irreducible or everything."""
    report = LawReport("f^-1(P) is irreducible or the whole domain (join-preserving f)")
    for f in morphisms_between(algebras, Variety.HILS):
        XH = irreducible_filters(f.dom)
        ok = all(f.preimage(P) in XH or f.preimage(P) == f.dom.carrier for P in irreducible_filters(f.cod))
        report.record(ok, f"{f.dom.name}->{f.cod.name}: {f.map}", f)
    return report


def check_prime_relation_images(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    """``R_f(P) <= U | V`` implies ``R_f(P) <= U`` or ``R_f(P) <= V``, for join-preserving f."""
    report = LawReport("R_f(P) inside a union of upsets lies inside one of them (join-preserving f)")
    for f in morphisms_between(algebras, Variety.HILS):
        R = relation_of(f)
        ups = upset_algebra(R.target).members
        ok = all(
            _bits.is_subset(m, U) or _bits.is_subset(m, V)
            for m in R.image
            for U in ups
            for V in ups
            if _bits.is_subset(m, U | V)
        )
        report.record(ok, f"{f.dom.name}->{f.cod.name}: {f.map}", f)
    return report


def check_filter_extension(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    """Given a filter I of the codomain and irreducible J of the domain with f^-1(I) <= J."""
    report = LawReport("filter extension along a morphism")
    for f in morphisms_between(algebras):
        XG = irreducible_filters(f.cod)
        for I in all_filters(f.cod):
            for J in irreducible_filters(f.dom):
                if not _bits.is_subset(f.preimage(I), J):
                    continue
                K = extend_along(f, I, J)
                ok = K in XG and _bits.is_subset(I, K) and f.preimage(K) == J
                report.record(ok, f"{f.dom.name}->{f.cod.name}: {f.map} I={f.cod.show(I)} J={f.dom.show(J)}", f)
    return report


def check_star_filter_extension(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    report = LawReport("filter extension for intersections of irreducible filters")
    for f in morphisms_between(algebras):
        XsG = x_star(f.cod)
        for I in XsG:
            for J in x_star(f.dom):
                if not _bits.is_subset(f.preimage(I), J):
                    continue
                K = extend_along_star(f, I, J)
                ok = K in XsG and _bits.is_subset(I, K) and f.preimage(K) == J
                report.record(ok, f"{f.dom.name}->{f.cod.name}: {f.map} I={f.cod.show(I)} J={f.dom.show(J)}", f)
    return report


def check_star_transfer(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    """``Phi(f(a)) = {F : R*_f(F) <= Phi(a)}`` for every element."""
    report = LawReport("Phi(f(a)) = {F in X*(G) : R*_f(F) <= Phi(a)}")
    for f in morphisms_between(algebras):
        XsG, XsH = x_star(f.cod), x_star(f.dom)
        R = relation_of(f, XsG, XsH)
        PhiG, PhiH = big_phi(f.cod), big_phi(f.dom)
        ok = all(
            PhiG[f.map[a]] == _bits.mask_of(i for i, m in enumerate(R.image) if _bits.is_subset(m, PhiH[a]))
            for a in f.dom.elements
        )
        report.record(ok, f"{f.dom.name}->{f.cod.name}: {f.map}", f)
    return report


def check_star_map(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    """The map on ``X*`` upsets preserves top, meets, joins and implication for every morphism."""
    report = LawReport("g on X*(H)^+ is a gH-morphism for every Hilbert morphism")
    for f in morphisms_between(algebras):
        g = hat_g(f, star=True)
        ok = all(g.preserves(op) for op in ("top", "meet", "join", "arrow"))
        report.record(ok, f"{f.dom.name}->{f.cod.name}: {f.map}", f)
    return report


def check_star_intertwining(algebras: Sequence[FiniteAlgebra]) -> LawReport:
    report = LawReport("g(Phi(a)) = Phi(f(a)) and f^dagger lands in G^dagger")
    for f in morphisms_between(algebras):
        g = hat_g(f, star=True)
        PhiG, PhiH = big_phi(f.cod), big_phi(f.dom)
        ok = all(g(PhiH[a]) == PhiG[f.map[a]] for a in f.dom.elements)
        try:
            lift(f, Construction.DAGGER)
        except CertificationError:
            ok = False
        report.record(ok, f"{f.dom.name}->{f.cod.name}: {f.map}", f)
    return report


def check_universal_property(
    sources: Sequence[FiniteAlgebra], targets: Sequence[FiniteAlgebra], tag: Construction
) -> LawReport:
    report = LawReport(f"unique factorization through the embedding ({tag.value})")
    for H in sources:
        sub = verify_universal_property(H, targets, tag)
        report.checked += sub.checked
        report.failures.extend(sub.failures)
        report.witnesses.extend(sub.witnesses)
    return report


# ------------------------------------------------------------------ suites

Suite = Callable[..., list[LawReport]]

# checks over composable pairs grow with the cube of the morphism count;
# past this size they are run on the smaller catalog only
PAIR_CAP = 4


def _capped(report: LawReport, size: int, max_size: int) -> LawReport:
    if size < max_size:
        report.notes.append(f"run up to size {size}")
    return report


def duality_suite(max_size: int = 4, lifting_size: int = 3) -> list[LawReport]:
    hil = catalog(Variety.HIL, max_size)
    pair_size, lift_size = min(PAIR_CAP, max_size), min(lifting_size, max_size)
    return [
        check_axioms(hil),
        check_irreducible_characterizations(hil),
        check_prime_equals_irreducible(hil),
        check_filters_are_meets_of_irreducibles(hil),
        check_separation(hil),
        check_separation_corollaries(hil),
        check_phi_morphism(hil),
        check_phi_joins(hil),
        check_upset_residuation(hil),
        check_h_space(hil),
        check_round_trip(hil),
        check_membership_transfer(hil),
        check_functional_relations(hil),
        _capped(check_relation_composition(catalog(Variety.HIL, pair_size)), pair_size, max_size),
        _capped(check_lifting_equivalence(catalog(Variety.HIL, lift_size)), lift_size, max_size),
    ]


def _meet_search(max_size: int) -> LawReport:
    report = LawReport("search: phi need not preserve existing meets")
    witness = find_meet_counterexample(catalog(Variety.HIL, max(max_size, 4)))
    if witness is None:
        report.notes.append("no instance found at this size")
    else:
        alg, a, b = witness
        report.notes.append(
            f"{alg.name}: phi({alg.label(a)} ^ {alg.label(b)}) != phi({alg.label(a)}) & phi({alg.label(b)})"
        )
    return report


def adjunction_is_suite(max_size: int = 3, max_target_size: Optional[int] = None) -> list[LawReport]:
    max_target_size = max_target_size if max_target_size is not None else max_size + 1
    pair_size = min(PAIR_CAP, max_size)
    hil = catalog(Variety.HIL, max_size)
    small = catalog(Variety.HIL, pair_size)
    targets = catalog(Variety.IS, min(max_target_size, HARD_CAP[Variety.IS]))
    return [
        check_is_extension(hil),
        check_hat_g(hil),
        check_image_law(hil),
        verify_naturality(hil, Construction.IS),
        _capped(verify_functor_laws(small, Construction.IS), pair_size, max_size),
        _capped(check_universal_property(small, targets, Construction.IS), pair_size, max_size),
        _meet_search(max_size),
    ]


def adjunction_ghey_suite(max_size: int = 3, max_target_size: Optional[int] = None) -> list[LawReport]:
    max_target_size = min(max_target_size if max_target_size is not None else max_size + 1, HARD_CAP[Variety.GHEY])
    pair_size = min(PAIR_CAP, max_size)
    hils = catalog(Variety.HILS, max_size)
    hils0 = catalog(Variety.HILS0, max_size)
    small, small0 = catalog(Variety.HILS, pair_size), catalog(Variety.HILS0, pair_size)
    return [
        check_ghey_extension(hils),
        check_hey_extension(hils0),
        check_preimage_of_points(hils),
        check_prime_relation_images(hils),
        check_hat_g(hils, ops=("top", "meet", "join", "arrow"), variety=Variety.HILS),
        verify_naturality(hils, Construction.GHEY),
        _capped(verify_functor_laws(small, Construction.GHEY), pair_size, max_size),
        _capped(verify_functor_laws(small0, Construction.HEY), pair_size, max_size),
        _capped(
            check_universal_property(small, catalog(Variety.GHEY, max_target_size), Construction.GHEY),
            pair_size,
            max_size,
        ),
        _capped(
            check_universal_property(small0, catalog(Variety.HEY, max_target_size), Construction.HEY),
            pair_size,
            max_size,
        ),
    ]


def dagger_suite(max_size: int = 4) -> list[LawReport]:
    hil = catalog(Variety.HIL, max_size)
    functor_size = min(PAIR_CAP, max_size)
    return [
        check_dagger_extension(hil),
        check_big_phi(hil),
        check_filter_extension(hil),
        check_star_filter_extension(hil),
        check_star_transfer(hil),
        check_star_map(hil),
        check_star_intertwining(hil),
        _capped(verify_functor_laws(catalog(Variety.HIL, functor_size), Construction.DAGGER), functor_size, max_size),
    ]


SUITES: dict[str, Suite] = {
    "duality": duality_suite,
    "adjunction-is": adjunction_is_suite,
    "adjunction-ghey": adjunction_ghey_suite,
    "dagger": dagger_suite,
}
