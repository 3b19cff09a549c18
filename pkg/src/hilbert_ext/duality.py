"""Finite fragment of the filter duality for Hilbert algebras.

Points are irreducible filters ordered by inclusion; a bigger filter is a
higher point.  Closed sets of the dual space are the upsets of that order
and open sets the downsets, so no topology is stored anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import TYPE_CHECKING, Iterator, Optional, Sequence

from . import _bits
from .algebra import FiniteAlgebra, Table, Variety
from .filters import FilterPoset, irreducible_filters

if TYPE_CHECKING:
    from .morphisms import Morphism


# ---------------------------------------------------------- upset arithmetic


def implies(points: FilterPoset, U: int, V: int) -> int:
    """``U => V``: the complement of the downset generated by ``U - V``."""
    return points.full & ~points.downset(U & ~V)


def all_upsets(points: FilterPoset) -> Iterator[int]:
    """Every upset of ``points``; points are decided from the top of the order down."""
    n = len(points)
    strict_up = [points.up[i] & ~(1 << i) for i in range(n)]

    def walk(i: int, acc: int) -> Iterator[int]:
        if i < 0:
            yield acc
            return
        yield from walk(i - 1, acc)
        if _bits.is_subset(strict_up[i], acc):
            yield from walk(i - 1, acc | (1 << i))

    # canonical order lists bigger filters later, so strict_up[i] only mentions indices > i
    yield from walk(n - 1, 0)


@dataclass(frozen=True)
class UpsetFamily:
    """A family of upsets of ``points`` with its operation tables.

    ``arrow`` is always present (the family is closed under ``=>``);
    ``meet``/``join`` are present exactly when the family is closed under
    intersection/union.  ``embedding[a]`` is the member index of the image of
    element ``a`` of ``source``.
    """

    points: FilterPoset
    members: tuple[int, ...]
    arrow: Table
    meet: Optional[Table] = None
    join: Optional[Table] = None
    embedding: Optional[tuple[int, ...]] = None
    source: Optional[FiniteAlgebra] = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.members)}

    def index(self, U: int) -> int:
        return self._index[U]

    def __contains__(self, U: int) -> bool:
        return U in self._index

    @property
    def top(self) -> int:
        return self._index[self.points.full]

    @property
    def bottom(self) -> Optional[int]:
        return self._index.get(0)

    def image(self, a: int) -> int:
        """The upset that element ``a`` of the source is sent to."""
        return self.members[self.embedding[a]]

    def algebra(self, variety: "Variety | str" = Variety.HIL, name: str = "") -> FiniteAlgebra:
        """The family re-encoded as a :class:`FiniteAlgebra` on member indices."""
        variety = Variety.parse(variety)
        zero = None
        if variety.needs_zero:
            zero = self.bottom
            if zero is None:
                raise ValueError("family has no empty upset to serve as zero")
        labels = tuple(self.points.show_points(U) for U in self.members)
        return FiniteAlgebra(
            size=len(self.members),
            arrow=self.arrow,
            one=self.top,
            join=self.join if variety.needs_join else None,
            meet=self.meet if variety.needs_meet else None,
            zero=zero,
            name=name,
            labels=labels,
        )


def family(
    points: FilterPoset,
    members,
    embedding_masks: Optional[Sequence[int]] = None,
    source: Optional[FiniteAlgebra] = None,
) -> UpsetFamily:
    """Build an :class:`UpsetFamily`; raises ValueError unless closed under ``=>`` with top."""
    ms = _bits.canonical(members)
    index = {m: i for i, m in enumerate(ms)}
    for U in ms:
        if not points.is_upset(U):
            raise ValueError(f"{points.show_points(U)} is not an upset")
    if points.full not in index:
        raise ValueError("family lacks the top upset")
    try:
        arrow = tuple(tuple(index[implies(points, U, V)] for V in ms) for U in ms)
    except KeyError:
        raise ValueError("family is not closed under =>") from None

    def table(op):
        try:
            return tuple(tuple(index[op(U, V)] for V in ms) for U in ms)
        except KeyError:
            return None

    emb = None
    if embedding_masks is not None:
        emb = tuple(index[m] for m in embedding_masks)
    return UpsetFamily(
        points=points,
        members=ms,
        arrow=arrow,
        meet=table(lambda U, V: U & V),
        join=table(lambda U, V: U | V),
        embedding=emb,
        source=source,
    )


@lru_cache(maxsize=None)
def upset_algebra(points: FilterPoset) -> UpsetFamily:
    """All upsets of ``points``: a Heyting algebra with bottom the empty set."""
    return family(points, all_upsets(points))


# ------------------------------------------------------------------- phi


@lru_cache(maxsize=None)
def phi(alg: FiniteAlgebra) -> tuple[FilterPoset, tuple[int, ...]]:
    """The dual points ``X(H)`` and, per element ``a``, the points containing ``a``."""
    X = irreducible_filters(alg)
    return X, tuple(X.containing(a) for a in alg.elements)


def kappa(alg: FiniteAlgebra) -> tuple[int, ...]:
    """Basic open sets: complements of the ``phi`` images."""
    X, images = phi(alg)
    return _bits.canonical(X.full & ~U for U in images)


@dataclass
class HSpaceReport:
    base_is_alexandrov: bool
    closed_under_difference: bool
    sober: bool
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.base_is_alexandrov and self.closed_under_difference and self.sober

    def __bool__(self) -> bool:
        return self.ok


def h_space_check(alg: FiniteAlgebra) -> HSpaceReport:
    """Check the finite, order-theoretic form of the three space axioms on ``X(H)``.

    * the basic opens generate, by unions, exactly the downsets of ``X(H)``
      and form a base for them (compactness is automatic);
    * ``(U - V]`` stays a basic open for basic opens ``U, V``;
    * every irreducible closed set (upset) is ``[x)`` for exactly one point.
    """
    X, _ = phi(alg)
    K = set(kappa(alg))
    notes = []

    downsets = {X.full & ~U for U in all_upsets(X)}
    unions = set()
    for r in range(len(K) + 1):
        for combo in itertools.combinations(sorted(K), r):
            u = 0
            for m in combo:
                u |= m
            unions.add(u)
    base_ok = unions == downsets
    if base_ok:
        for W in downsets:
            for x in _bits.members(W):
                if not any(_bits.contains(B, x) and _bits.is_subset(B, W) for B in K):
                    base_ok = False
                    notes.append(f"no basic open around {X.show(x)} inside {X.show_points(W)}")
    else:
        notes.append("unions of basic opens differ from the downsets")

    diff_ok = True
    for U in K:
        for V in K:
            if X.downset(U & ~V) not in K:
                diff_ok = False
                notes.append(f"({X.show_points(U)} - {X.show_points(V)}] is not basic")

    closed = list(all_upsets(X))
    sober = True
    for Y in closed:
        if Y == 0:
            continue
        irreducible = all(
            _bits.is_subset(Y, Z) or _bits.is_subset(Y, W)
            for Z in closed
            for W in closed
            if _bits.is_subset(Y, Z | W)
        )
        if not irreducible:
            continue
        generators = [x for x in range(len(X)) if X.up[x] == Y]
        if len(generators) != 1:
            sober = False
            notes.append(f"irreducible closed {X.show_points(Y)} has {len(generators)} generic points")
    return HSpaceReport(base_ok, diff_ok, sober, notes)


@lru_cache(maxsize=None)
def d_of_x(alg: FiniteAlgebra) -> UpsetFamily:
    """``D(X(H))``: the family of complements of basic opens, i.e. the ``phi`` images."""
    X, images = phi(alg)
    return family(X, images, embedding_masks=images, source=alg)


@dataclass(frozen=True)
class EpsilonCertificate:
    """``eps: X(H) -> X(D(X(H)))`` together with the round-trip checks."""

    mapping: tuple[int, ...]
    lands_in_points: bool
    bijective: bool
    order_isomorphism: bool
    phi_isomorphism: bool

    @property
    def ok(self) -> bool:
        return self.lands_in_points and self.bijective and self.order_isomorphism and self.phi_isomorphism

    def __bool__(self) -> bool:
        return self.ok


def epsilon(alg: FiniteAlgebra) -> EpsilonCertificate:
    X, images = phi(alg)
    D = d_of_x(alg)
    DH = D.algebra(Variety.HIL)
    XD = irreducible_filters(DH)

    eps_masks = [_bits.mask_of(k for k, U in enumerate(D.members) if _bits.contains(U, i)) for i in range(len(X))]
    lands = all(m in XD for m in eps_masks)
    mapping = tuple(XD.index(m) if m in XD else -1 for m in eps_masks)
    bijective = lands and sorted(mapping) == list(range(len(XD)))
    order_iso = bijective and all(
        X.leq(i, j) == _bits.is_subset(eps_masks[i], eps_masks[j]) for i in range(len(X)) for j in range(len(X))
    )

    emb = D.embedding
    phi_iso = (
        len(set(emb)) == alg.size == len(D)
        and emb[alg.one] == D.top
        and all(emb[alg.arrow[a][b]] == D.arrow[emb[a]][emb[b]] for a in alg.elements for b in alg.elements)
    )
    return EpsilonCertificate(mapping, lands, bijective, order_iso, phi_iso)


# ------------------------------------------------------------- relations


@dataclass(frozen=True)
class FilterRelation:
    """A relation between two point sets; ``image[i]`` is ``R(x_i)`` as a bitmask of target points."""

    source: FilterPoset
    target: FilterPoset
    image: tuple[int, ...]

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, m in enumerate(self.image) for j in _bits.members(m)]

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        return _bits.contains(self.image[i], j)

    def preimage(self, U: int) -> int:
        """``R^-1(U)``: source points related to something in ``U``."""
        return _bits.mask_of(i for i, m in enumerate(self.image) if m & U)


def relation_of(
    f: "Morphism",
    source: Optional[FilterPoset] = None,
    target: Optional[FilterPoset] = None,
) -> FilterRelation:
    """``R_f``: ``(P, Q)`` related iff ``f^-1(P) <= Q``, from points of the codomain to points of the domain.

    ``source``/``target`` default to the irreducible filters of codomain and
    domain; passing other filter families gives the same relation on them.
    """
    source = source if source is not None else irreducible_filters(f.cod)
    target = target if target is not None else irreducible_filters(f.dom)
    image = []
    for P in source:
        pre = f.preimage(P)
        image.append(_bits.mask_of(j for j, Q in enumerate(target) if _bits.is_subset(pre, Q)))
    return FilterRelation(source, target, tuple(image))


def box(R: FilterRelation, U: int) -> int:
    """``h_R(U)``: source points whose whole ``R``-image lies in ``U``."""
    return _bits.mask_of(i for i, m in enumerate(R.image) if _bits.is_subset(m, U))


def h_r(R: FilterRelation, target_family: UpsetFamily) -> tuple[int, ...]:
    """``h_R`` on every member of a family of upsets of the relation's target."""
    return tuple(box(R, U) for U in target_family.members)


def compose(R: FilterRelation, S: FilterRelation) -> FilterRelation:
    """Relational product: ``(x, z)`` iff ``(x, y)`` in ``R`` and ``(y, z)`` in ``S`` for some ``y``."""
    image = []
    for m in R.image:
        out = 0
        for y in _bits.members(m):
            out |= S.image[y]
        image.append(out)
    return FilterRelation(R.source, S.target, tuple(image))


def functional_check(R: FilterRelation) -> bool:
    """Finite form of the H-relation and H-functional conditions.

    Basic opens on both sides come from the ``phi`` images of the base
    algebras of ``R.source`` and ``R.target``.
    """
    K1 = set(kappa(R.source.base))
    K2 = kappa(R.target.base)
    T = R.target
    if any(R.preimage(U) not in K1 for U in K2):
        return False
    if any(not T.is_upset(m) for m in R.image):
        return False
    for x, m in enumerate(R.image):
        for y in _bits.members(m):
            if not any(R.image[z] == T.up[y] for z in _bits.members(R.source.up[x])):
                return False
    return True


def has_lifting_property(f: "Morphism") -> bool:
    """Whenever ``(P, Q)`` is in ``R_f`` there is a point ``F >= P`` of the codomain with ``f^-1(F) = Q``."""
    XG = irreducible_filters(f.cod)
    XH = irreducible_filters(f.dom)
    R = relation_of(f, XG, XH)
    pre = [f.preimage(F) for F in XG]
    for i, m in enumerate(R.image):
        for j in _bits.members(m):
            Q = XH[j]
            if not any(pre[k] == Q for k in _bits.members(XG.up[i])):
                return False
    return True


def membership_transfer_holds(f: "Morphism") -> bool:
    """``f(a)`` is in ``P`` iff ``R_f(P)`` lies inside ``phi(a)``, for every element and point."""
    R = relation_of(f)
    _, images = phi(f.dom)
    return all(
        _bits.contains(P, f.map[a]) == _bits.is_subset(R.image[i], images[a])
        for i, P in enumerate(R.source)
        for a in f.dom.elements
    )
