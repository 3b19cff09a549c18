"""Implicative filters, order-ideals, irreducible filters and separation.

Subsets of a carrier are bitmask ints (see ``_bits``).  Families of filters
are kept in the canonical order of ``_bits.sort_key``; since that order
sorts by cardinality first, index order is a linear extension of inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import TYPE_CHECKING, Iterable, Iterator, Optional

from . import _bits
from .algebra import FiniteAlgebra

if TYPE_CHECKING:
    from .morphisms import Morphism


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


class SeparationFailure(RuntimeError):
    """No separating irreducible filter exists; impossible for a valid Hilbert algebra."""


@dataclass(frozen=True)
class FilterPoset:
    """A duplicate-free, canonically sorted family of filters ordered by inclusion."""

    base: FiniteAlgebra
    filters: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.filters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.filters)

    def __getitem__(self, i: int) -> int:
        return self.filters[i]

    def index(self, mask: int) -> int:
        return self._index[mask]

    def __contains__(self, mask: int) -> bool:
        return mask in self._index

    @cached_property
    def _index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.filters)}

    @property
    def full(self) -> int:
        """Bitmask of all points."""
        return _bits.full(len(self.filters))

    def leq(self, i: int, j: int) -> bool:
        return _bits.is_subset(self.filters[i], self.filters[j])

    @cached_property
    def up(self) -> tuple[int, ...]:
        """``up[i]``: bitmask of the points containing point ``i``."""
        fs = self.filters
        return tuple(_bits.mask_of(j for j, g in enumerate(fs) if _bits.is_subset(f, g)) for f in fs)

    @cached_property
    def down(self) -> tuple[int, ...]:
        fs = self.filters
        return tuple(_bits.mask_of(j for j, g in enumerate(fs) if _bits.is_subset(g, f)) for f in fs)

    def upset(self, points: int) -> int:
        out = 0
        for i in _bits.members(points):
            out |= self.up[i]
        return out

    def downset(self, points: int) -> int:
        out = 0
        for i in _bits.members(points):
            out |= self.down[i]
        return out

    def is_upset(self, points: int) -> bool:
        return self.upset(points) == points

    def containing(self, a: int) -> int:
        """Points (as a bitmask) whose filter contains element ``a``."""
        return _bits.mask_of(i for i, f in enumerate(self.filters) if _bits.contains(f, a))

    def show(self, i: int) -> str:
        return self.base.show(self.filters[i])

    def show_points(self, points: int) -> str:
        return "{" + ", ".join(self.show(i) for i in _bits.members(points)) + "}"


# ------------------------------------------------------------------ filters


def is_implicative_filter(alg: FiniteAlgebra, F: int) -> bool:
    if not _bits.contains(F, alg.one):
        return False
    imp = alg.arrow
    for a in _bits.members(F):
        row = imp[a]
        for b in alg.elements:
            if _bits.contains(F, row[b]) and not _bits.contains(F, b):
                return False
    # every filter is an upset
    assert alg.upset(F) == F, "implicative filter that is not an upset"
    return True


def generated_filter(alg: FiniteAlgebra, X: int = 0) -> int:
    """Least implicative filter containing ``X`` (modus-ponens closure)."""
    F = X | (1 << alg.one)
    imp = alg.arrow
    changed = True
    while changed:
        changed = False
        for a in list(_bits.members(F)):
            row = imp[a]
            for b in alg.elements:
                if not _bits.contains(F, b) and _bits.contains(F, row[b]):
                    F |= 1 << b
                    changed = True
    return F


def generated_filter_by_chains(alg: FiniteAlgebra, X: int = 0) -> int:
    """``F(X)`` as the elements ``x`` with ``a1->(a2->...(an->x)) = 1`` for some ``ai`` in X.

    For each ``x`` this saturates the set of values reachable from ``x`` by
    prefixing ``a->`` with ``a`` in X, so chains of any length and with
    repetitions are covered.
    """
    imp = alg.arrow
    gens = list(_bits.members(X))
    out = 0
    for x in alg.elements:
        seen = {x}
        frontier = [x]
        while frontier:
            t = frontier.pop()
            for a in gens:
                v = imp[a][t]
                if v not in seen:
                    seen.add(v)
                    frontier.append(v)
        if alg.one in seen:
            out |= 1 << x
    return out


@lru_cache(maxsize=None)
def all_filters(alg: FiniteAlgebra) -> FilterPoset:
    """Every implicative filter, generated from every subset of the carrier."""
    found: set[int] = set()
    for X in range(1 << alg.size):
        if X in found:
            continue
        found.add(generated_filter(alg, X))
    return FilterPoset(alg, _bits.canonical(found))


def upper_covers(family: FilterPoset, i: int) -> list[int]:
    above = [j for j in _bits.members(family.up[i]) if j != i]
    return [j for j in above if not any(k != j and family.leq(k, j) for k in above)]


@lru_cache(maxsize=None)
def irreducible_filters(alg: FiniteAlgebra) -> FilterPoset:
    """Proper filters with exactly one upper cover in the lattice of filters."""
    fils = all_filters(alg)
    whole = alg.carrier
    keep = [F for i, F in enumerate(fils) if F != whole and len(upper_covers(fils, i)) == 1]
    return FilterPoset(alg, tuple(keep))


def irreducible_filters_by_definition(alg: FiniteAlgebra) -> FilterPoset:
    """Proper filters ``F`` such that ``F = F1 & F2`` forces ``F = F1`` or ``F = F2``."""
    fils = all_filters(alg).filters
    whole = alg.carrier
    keep = []
    for F in fils:
        if F == whole:
            continue
        if any(F1 & F2 == F and F1 != F and F2 != F for F1 in fils for F2 in fils):
            continue
        keep.append(F)
    return FilterPoset(alg, tuple(keep))


def prime_filters(alg: FiniteAlgebra) -> FilterPoset:
    if alg.join is None:
        raise PreconditionError("prime filters need a join table")
    join, whole = alg.join, alg.carrier
    keep = []
    for F in all_filters(alg):
        if F == whole:
            continue
        if all(
            _bits.contains(F, a) or _bits.contains(F, b)
            for a in alg.elements
            for b in alg.elements
            if _bits.contains(F, join[a][b])
        ):
            keep.append(F)
    return FilterPoset(alg, tuple(keep))


def proper_filters(alg: FiniteAlgebra) -> FilterPoset:
    whole = alg.carrier
    return FilterPoset(alg, tuple(F for F in all_filters(alg) if F != whole))


# ------------------------------------------------------------- order ideals


def is_order_ideal(alg: FiniteAlgebra, I: int) -> bool:
    """Nonempty, down-closed and up-directed."""
    if I == 0 or alg.downset(I) != I:
        return False
    elems = list(_bits.members(I))
    return all(I & alg.up[a] & alg.up[b] != 0 for a in elems for b in elems)


def principal_downset(alg: FiniteAlgebra, a: int) -> int:
    return alg.down[a]


# --------------------------------------------------------------- separation


def separate(alg: FiniteAlgebra, F: int, I: int) -> int:
    """The canonically least irreducible filter containing ``F`` and missing ``I``."""
    if F & I:
        raise PreconditionError(f"filter {alg.show(F)} meets ideal {alg.show(I)}")
    if not is_implicative_filter(alg, F):
        raise PreconditionError(f"{alg.show(F)} is not an implicative filter")
    if not is_order_ideal(alg, I):
        raise PreconditionError(f"{alg.show(I)} is not an order-ideal")
    for P in irreducible_filters(alg):
        if _bits.is_subset(F, P) and not (P & I):
            return P
    raise SeparationFailure(f"no irreducible filter separates {alg.show(F)} from {alg.show(I)}")


def separate_point(alg: FiniteAlgebra, F: int, a: int) -> int:
    """Irreducible ``P`` with ``F <= P`` and ``a`` not in ``P``."""
    return separate(alg, F, principal_downset(alg, a))


def separate_pair(alg: FiniteAlgebra, a: int, b: int) -> int:
    """Irreducible ``P`` with ``a`` in ``P`` and ``b`` not in ``P`` (needs ``a`` not below ``b``)."""
    if alg.leq[a][b]:
        raise PreconditionError(f"{alg.label(a)} <= {alg.label(b)}")
    return separate(alg, generated_filter(alg, 1 << a), principal_downset(alg, b))


def separate_arrow(alg: FiniteAlgebra, F: int, a: int, b: int) -> Optional[int]:
    """A witness ``P >= F`` with ``a`` in ``P`` and ``b`` not in ``P``; None exactly when ``a->b`` is in ``F``."""
    if _bits.contains(F, alg.arrow[a][b]):
        return None
    return separate(alg, generated_filter(alg, F | (1 << a)), principal_downset(alg, b))


# ------------------------------------------------------ extension of filters


def extend_along(f: "Morphism", I: int, J: int) -> int:
    """Irreducible ``K`` of the codomain with ``I <= K`` and ``f^-1(K) = J``.

    ``I`` is a filter of the codomain, ``J`` an irreducible filter of the
    domain with ``f^-1(I) <= J``.  Separates the ideal generated by the image
    of the complement of ``J`` from the filter generated by ``I`` and ``f(J)``.
    """
    H, G = f.dom, f.cod
    if not is_implicative_filter(G, I):
        raise PreconditionError(f"{G.show(I)} is not a filter of the codomain")
    if J not in irreducible_filters(H):
        raise PreconditionError(f"{H.show(J)} is not an irreducible filter of the domain")
    if not _bits.is_subset(f.preimage(I), J):
        raise PreconditionError("f^-1(I) is not contained in J")
    ideal = G.downset(f.image(H.carrier & ~J))
    start = generated_filter(G, I | f.image(J))
    return separate(G, start, ideal)


def star_components(alg: FiniteAlgebra, F: int) -> tuple[int, ...]:
    """The irreducible filters above a proper filter ``F`` (their intersection is ``F``)."""
    return tuple(P for P in irreducible_filters(alg) if _bits.is_subset(F, P))


def extend_along_star(f: "Morphism", I: int, J: int) -> int:
    """Intersection-of-irreducibles analogue of :func:`extend_along`.

    ``J`` is a finite intersection of irreducible filters of the domain; each
    irreducible component is extended separately and the witnesses are
    intersected.
    """
    H, G = f.dom, f.cod
    comps = star_components(H, J)
    if not comps or _intersect(comps, H.carrier) != J:
        raise PreconditionError(f"{H.show(J)} is not an intersection of irreducible filters")
    if not _bits.is_subset(f.preimage(I), J):
        raise PreconditionError("f^-1(I) is not contained in J")
    return _intersect((extend_along(f, I, Q) for Q in comps), G.carrier)


def _intersect(masks: Iterable[int], start: int) -> int:
    out = start
    for m in masks:
        out &= m
    return out
