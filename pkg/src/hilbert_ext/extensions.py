"""Free extensions of a finite Hilbert algebra inside algebras of upsets.

Each construction saturates the images of the algebra under a set of
operations inside the full upset algebra of a point set, then re-encodes
the result as a :class:`FiniteAlgebra` whose elements are the members in
canonical order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from . import _bits
from .algebra import FiniteAlgebra, Variety
from .duality import UpsetFamily, family, implies, phi, upset_algebra
from .filters import FilterPoset, PreconditionError, irreducible_filters


class CertificationError(AssertionError):
    """A construction disagreed with an identity it is supposed to satisfy."""


class Construction(str, enum.Enum):
    IS = "is"
    GHEY = "ghey"
    HEY = "hey"
    DAGGER = "dagger"

    @property
    def variety(self) -> Variety:
        return {
            Construction.IS: Variety.IS,
            Construction.GHEY: Variety.GHEY,
            Construction.HEY: Variety.HEY,
            Construction.DAGGER: Variety.GHEY,
        }[self]


@dataclass(frozen=True)
class ExtensionResult:
    source: FiniteAlgebra
    points: FilterPoset
    family: UpsetFamily
    tag: Construction
    presented: FiniteAlgebra

    @property
    def embedding(self) -> tuple[int, ...]:
        """Element of the source -> element (member index) of ``presented``."""
        return self.family.embedding

    @property
    def members(self) -> tuple[int, ...]:
        return self.family.members

    def __len__(self) -> int:
        return len(self.family)


def saturate(
    points: FilterPoset,
    seeds: Iterable[int],
    meet: bool = True,
    join: bool = False,
    arrow: bool = True,
    bottom: bool = False,
) -> tuple[int, ...]:
    """Close ``seeds`` plus the top upset under the chosen operations, round by round."""
    current = set(seeds) | {points.full}
    if bottom:
        current.add(0)
    fresh = set(current)
    while fresh:
        found = set()
        items = list(current)
        for U in fresh:
            for V in items:
                candidates = []
                if meet:
                    candidates.append(U & V)
                if join:
                    candidates.append(U | V)
                if arrow:
                    candidates.append(implies(points, U, V))
                    candidates.append(implies(points, V, U))
                found.update(c for c in candidates if c not in current)
        current |= found
        fresh = found
    return _bits.canonical(current)


def meet_closure(points: FilterPoset, seeds: Iterable[int]) -> tuple[int, ...]:
    """All intersections of finitely many seeds (the empty intersection is the top)."""
    out = {points.full}
    for U in seeds:
        out |= {U & V for V in out}
    return _bits.canonical(out)


def fc(alg: FiniteAlgebra) -> tuple[int, ...]:
    """Finite intersections of ``phi`` images, as upsets of ``X(H)``."""
    X, images = phi(alg)
    return meet_closure(X, images)


def _result(points, members, images, alg, tag: Construction) -> ExtensionResult:
    fam = family(points, members, embedding_masks=images, source=alg)
    presented = fam.algebra(tag.variety, name=f"{alg.name or 'H'}^{tag.value}")
    return ExtensionResult(alg, points, fam, tag, presented)


@lru_cache(maxsize=None)
def extend_is(alg: FiniteAlgebra) -> ExtensionResult:
    """Implicative-semilattice subalgebra of ``X(H)^+`` generated by the ``phi`` images."""
    X, images = phi(alg)
    members = saturate(X, images, meet=True, arrow=True)
    if members != fc(alg):
        raise CertificationError(f"{alg.name}: generated IS-subalgebra differs from FC(H)")
    return _result(X, members, images, alg, Construction.IS)


@lru_cache(maxsize=None)
def extend_ghey(alg: FiniteAlgebra) -> ExtensionResult:
    """gH-subalgebra of ``X(H)^+`` generated by the ``phi`` images."""
    X, images = phi(alg)
    members = saturate(X, images, meet=True, join=True, arrow=True)
    if alg.join is not None:
        if members != upset_algebra(X).members:
            raise CertificationError(f"{alg.name}: H^GHey differs from X(H)^+")
        if members != fc(alg):
            raise CertificationError(f"{alg.name}: H^GHey differs from FC(H)")
    return _result(X, members, images, alg, Construction.GHEY)


@lru_cache(maxsize=None)
def extend_hey(alg: FiniteAlgebra) -> ExtensionResult:
    """Heyting subalgebra of ``X(H)^+`` generated by the ``phi`` images; needs join and zero."""
    if alg.join is None or alg.zero is None:
        raise PreconditionError(f"{alg.name or 'algebra'} is not a Hilbert algebra with supremum and minimum")
    X, images = phi(alg)
    if images[alg.zero] != 0:
        raise CertificationError(f"{alg.name}: phi(0) is not empty")
    members = saturate(X, images, meet=True, join=True, arrow=True, bottom=True)
    return _result(X, members, images, alg, Construction.HEY)


@lru_cache(maxsize=None)
def x_star(alg: FiniteAlgebra) -> FilterPoset:
    """Intersections of nonempty finite sets of irreducible filters."""
    X = irreducible_filters(alg)
    found = set(X.filters)
    fresh = set(found)
    while fresh:
        new = {F & G for F in fresh for G in found} - found
        found |= new
        fresh = new
    return FilterPoset(alg, _bits.canonical(found))


def big_phi(alg: FiniteAlgebra) -> tuple[int, ...]:
    """``Phi(a)``: the points of ``X*(H)`` containing ``a``, as bitmasks."""
    Xs = x_star(alg)
    return tuple(Xs.containing(a) for a in alg.elements)


@lru_cache(maxsize=None)
def extend_dagger(alg: FiniteAlgebra) -> ExtensionResult:
    """gH-subalgebra of ``X*(H)^+`` generated by the ``Phi`` images."""
    Xs = x_star(alg)
    images = big_phi(alg)
    members = saturate(Xs, images, meet=True, join=True, arrow=True)
    if members != upset_algebra(Xs).members:
        raise CertificationError(f"{alg.name}: H^dagger differs from X*(H)^+")
    return _result(Xs, members, images, alg, Construction.DAGGER)


def extend(alg: FiniteAlgebra, target: "Construction | str") -> ExtensionResult:
    target = Construction(target)
    return {
        Construction.IS: extend_is,
        Construction.GHEY: extend_ghey,
        Construction.HEY: extend_hey,
        Construction.DAGGER: extend_dagger,
    }[target](alg)


def envelope_decomposition(ext: ExtensionResult, U: int) -> Optional[tuple[int, ...]]:
    """Source elements whose images intersect to ``U``, or None if there are none.

    The intersection of all images above ``U`` is the only candidate worth
    trying: any decomposition uses a subset of those images.
    """
    above = [a for a in ext.source.elements if _bits.is_subset(U, ext.family.image(a))]
    cover = ext.points.full
    for a in above:
        cover &= ext.family.image(a)
    return tuple(above) if cover == U else None


def is_envelope(ext: ExtensionResult) -> bool:
    """Every member is a finite meet of embedded elements and the embedding is injective."""
    if ext.tag is not Construction.IS:
        raise PreconditionError("envelope check applies to implicative-semilattice extensions")
    if len(set(ext.embedding)) != ext.source.size:
        return False
    return all(envelope_decomposition(ext, U) is not None for U in ext.members)
