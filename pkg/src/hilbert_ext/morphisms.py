"""Morphisms, their enumeration, lifts to the free extensions, and the functor/adjunction checks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from . import _bits
from .algebra import FiniteAlgebra, Variety, validate
from .duality import UpsetFamily, box, phi, relation_of, upset_algebra
from .extensions import (
    CertificationError,
    Construction,
    ExtensionResult,
    extend,
    saturate,
    x_star,
)
from .filters import PreconditionError


@dataclass(frozen=True)
class Morphism:
    """A total map between carriers, with the signature it is meant to preserve."""

    dom: FiniteAlgebra
    cod: FiniteAlgebra
    map: tuple[int, ...]
    variety: Variety = Variety.HIL

    def __post_init__(self) -> None:
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))
        object.__setattr__(self, "variety", Variety.parse(self.variety))
        if len(self.map) != self.dom.size:
            raise ValueError(f"map has {len(self.map)} entries for a domain of size {self.dom.size}")
        if any(not 0 <= v < self.cod.size for v in self.map):
            raise ValueError("map value out of range of the codomain")

    def __call__(self, a: int) -> int:
        return self.map[a]

    def preimage(self, S: int) -> int:
        return _bits.mask_of(a for a, v in enumerate(self.map) if _bits.contains(S, v))

    def image(self, S: int) -> int:
        return _bits.mask_of(self.map[a] for a in _bits.members(S))

    def then(self, g: "Morphism") -> "Morphism":
        return compose(g, self)


def identity(alg: FiniteAlgebra, variety: "Variety | str" = Variety.HIL) -> Morphism:
    return Morphism(alg, alg, tuple(alg.elements), Variety.parse(variety))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g o f`` (apply ``f`` first)."""
    if f.cod != g.dom:
        raise ValueError("morphisms are not composable")
    return Morphism(f.dom, g.cod, tuple(g.map[v] for v in f.map), f.variety)


def _operations(dom: FiniteAlgebra, cod: FiniteAlgebra, variety: Variety):
    ops = [(dom.arrow, cod.arrow)]
    if variety.needs_join:
        ops.append((dom.join, cod.join))
    if variety.needs_meet:
        ops.append((dom.meet, cod.meet))
    return ops


def validate_morphism(f: Morphism) -> bool:
    """Check every preservation equation of ``f.variety`` pointwise.

    Implicative-semilattice morphisms are required to preserve implication
    as well as meet and top.
    """
    v = f.variety
    if not (f.dom.has(v) and f.cod.has(v)):
        return False
    m = f.map
    if m[f.dom.one] != f.cod.one:
        return False
    if v.needs_zero and m[f.dom.zero] != f.cod.zero:
        return False
    for td, tc in _operations(f.dom, f.cod, v):
        for a in f.dom.elements:
            row_d, row_c = td[a], tc[m[a]]
            for b in f.dom.elements:
                if m[row_d[b]] != row_c[m[b]]:
                    return False
    return True


def enumerate_morphisms(dom: FiniteAlgebra, cod: FiniteAlgebra, variety: "Variety | str" = Variety.HIL) -> list[Morphism]:
    """Every morphism ``dom -> cod`` of the given signature, in lexicographic order of maps.

    Backtracks over the elements from the top down, rejecting a partial map
    as soon as an equation with all its arguments assigned fails.
    """
    return list(_enumerate(dom, cod, Variety.parse(variety)))


@lru_cache(maxsize=None)
def _enumerate(dom: FiniteAlgebra, cod: FiniteAlgebra, variety: Variety) -> tuple[Morphism, ...]:
    if not (dom.has(variety) and cod.has(variety)):
        raise PreconditionError(f"both algebras need the tables of {variety.value}")
    n = dom.size
    ops = _operations(dom, cod, variety)
    val = [-1] * n
    val[dom.one] = cod.one
    if variety.needs_zero:
        if dom.zero == dom.one:
            if cod.zero != cod.one:
                return ()
        else:
            val[dom.zero] = cod.zero
    order = sorted((a for a in dom.elements if val[a] < 0), key=lambda a: (dom.height[a], a))
    found: list[tuple[int, ...]] = []

    def consistent(a: int) -> bool:
        for td, tc in ops:
            for x in dom.elements:
                vx = val[x]
                if vx < 0:
                    continue
                for y in dom.elements:
                    vy = val[y]
                    if vy < 0:
                        continue
                    z = td[x][y]
                    if val[z] < 0 or a not in (x, y, z):
                        continue
                    if val[z] != tc[vx][vy]:
                        return False
        return True

    def walk(k: int) -> None:
        if k == len(order):
            found.append(tuple(val))
            return
        a = order[k]
        for v in cod.elements:
            val[a] = v
            if consistent(a):
                walk(k + 1)
        val[a] = -1

    if consistent(dom.one) and (not variety.needs_zero or consistent(dom.zero)):
        walk(0)
    return tuple(Morphism(dom, cod, m, variety) for m in sorted(found))


def is_subpreserving(f: Morphism) -> bool:
    """``f(1) = 1`` and ``f(a->b) <= f(a)->f(b)`` for all ``a, b``."""
    H, G, m = f.dom, f.cod, f.map
    if m[H.one] != G.one:
        return False
    return all(G.leq[m[H.arrow[a][b]]][G.arrow[m[a]][m[b]]] for a in H.elements for b in H.elements)


def subpreserving_maps(dom: FiniteAlgebra, cod: FiniteAlgebra) -> Iterator[Morphism]:
    others = [a for a in dom.elements if a != dom.one]
    for values in itertools.product(cod.elements, repeat=len(others)):
        m = [cod.one] * dom.size
        for a, v in zip(others, values):
            m[a] = v
        f = Morphism(dom, cod, tuple(m), Variety.HIL)
        if is_subpreserving(f):
            yield f


# ------------------------------------------------------------ upset maps


@dataclass(frozen=True)
class UpsetMap:
    """A map between two families of upsets, ``values[i]`` indexing ``target.members``."""

    source: UpsetFamily
    target: UpsetFamily
    values: tuple[int, ...]

    def __call__(self, U: int) -> int:
        return self.target.members[self.values[self.source.index(U)]]

    def preserves(self, op: str) -> bool:
        S, T, v = self.source, self.target, self.values
        idx = range(len(S))
        if op == "top":
            return v[S.top] == T.top
        if op == "bottom":
            return S.bottom is None or v[S.bottom] == T.bottom
        table_s, table_t = getattr(S, op), getattr(T, op)
        if table_s is None or table_t is None:
            raise ValueError(f"{op} is not defined on both families")
        return all(v[table_s[i][j]] == table_t[v[i]][v[j]] for i in idx for j in idx)

    def failures(self, op: str) -> list[tuple[int, int]]:
        """Pairs of source members (as upsets) on which ``op`` is not preserved."""
        S, T, v = self.source, self.target, self.values
        table_s, table_t = getattr(S, op), getattr(T, op)
        return [
            (S.members[i], S.members[j])
            for i in range(len(S))
            for j in range(len(S))
            if v[table_s[i][j]] != table_t[v[i]][v[j]]
        ]


def hat_g(f: Morphism, star: bool = False) -> UpsetMap:
    """``U -> {P : R_f(P) <= U}`` from all upsets of the domain's points to those of the codomain's.

    With ``star`` the points are intersections of irreducible filters
    instead of irreducible filters.
    """
    if star:
        src_pts, tgt_pts = x_star(f.dom), x_star(f.cod)
    else:
        src_pts, tgt_pts = phi(f.dom)[0], phi(f.cod)[0]
    R = relation_of(f, tgt_pts, src_pts)
    S, T = upset_algebra(src_pts), upset_algebra(tgt_pts)
    return UpsetMap(S, T, tuple(T.index(box(R, U)) for U in S.members))


# ------------------------------------------------------------ lifted maps

_BASE = {
    Construction.IS: Variety.HIL,
    Construction.DAGGER: Variety.HIL,
    Construction.GHEY: Variety.HILS,
    Construction.HEY: Variety.HILS0,
}


@dataclass(frozen=True)
class LiftedMorphism:
    base: Morphism
    source_ext: ExtensionResult
    target_ext: ExtensionResult
    map: tuple[int, ...]

    def as_morphism(self) -> Morphism:
        return Morphism(self.source_ext.presented, self.target_ext.presented, self.map, self.source_ext.tag.variety)

    def intertwines(self) -> bool:
        """``lift(f)(embed(a)) = embed(f(a))`` for every element ``a``."""
        e_s, e_t = self.source_ext.embedding, self.target_ext.embedding
        return all(self.map[e_s[a]] == e_t[self.base.map[a]] for a in self.base.dom.elements)


def lift(f: Morphism, tag: "Construction | str") -> LiftedMorphism:
    """``f^IS``, ``f^GHey``, ``f^Hey`` or ``f^dagger``: ``U -> {P : R_f(P) <= U}`` on the extension."""
    tag = Construction(tag)
    base = _BASE[tag]
    if not validate_morphism(Morphism(f.dom, f.cod, f.map, base)):
        raise PreconditionError(f"map is not a {base.value} morphism")
    src, tgt = extend(f.dom, tag), extend(f.cod, tag)
    R = relation_of(f, tgt.points, src.points)
    values = []
    for U in src.members:
        V = box(R, U)
        if V not in tgt.family:
            raise CertificationError(f"lift of {tgt.points.show_points(U)} leaves the target extension")
        values.append(tgt.family.index(V))
    lifted = LiftedMorphism(f, src, tgt, tuple(values))
    if not lifted.intertwines():
        raise CertificationError("lift does not commute with the embeddings")
    return lifted


def image_law_holds(f: Morphism) -> bool:
    """The image of ``H^IS`` under ``hat_g`` is the IS-subalgebra generated by the image of ``phi[H]``."""
    g = hat_g(f)
    src = extend(f.dom, Construction.IS)
    image = _bits.canonical(g(U) for U in src.members)
    XG, phiG = phi(f.cod)
    generated = saturate(XG, (phiG[f.map[a]] for a in f.dom.elements), meet=True, arrow=True)
    return image == generated


# ------------------------------------------------------------ verification


@dataclass
class LawReport:
    """Outcome of checking one law over many instances.

    ``witnesses`` keeps the algebras or morphisms behind the first failures
    so they can be written out and re-run.
    """

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def record(self, passed: bool, what: str, witness=None) -> None:
        self.checked += 1
        if not passed and len(self.failures) < 20:
            self.failures.append(what)
            if witness is not None:
                self.witnesses.append(witness)


def _morphism_catalog(algebras: Sequence[FiniteAlgebra], variety: Variety) -> dict:
    return {(i, j): enumerate_morphisms(A, B, variety) for i, A in enumerate(algebras) for j, B in enumerate(algebras)}


def verify_functor_laws(algebras: Sequence[FiniteAlgebra], tag: "Construction | str") -> LawReport:
    """Identity and composition preservation of the lift over all composable pairs."""
    tag = Construction(tag)
    base = _BASE[tag]
    report = LawReport(f"functor laws ({tag.value})")
    algebras = [A for A in algebras if A.has(base)]
    homs = _morphism_catalog(algebras, base)
    lifts = {key: [lift(f, tag) for f in fs] for key, fs in homs.items()}
    for i, A in enumerate(algebras):
        L = lift(identity(A, base), tag)
        report.record(L.map == tuple(range(len(L.map))), f"identity on {A.name}")
    n = len(algebras)
    for i, j, k in itertools.product(range(n), repeat=3):
        for f, lf in zip(homs[i, j], lifts[i, j]):
            for g, lg in zip(homs[j, k], lifts[j, k]):
                gf = lift(compose(g, f), tag)
                expected = tuple(lg.map[v] for v in lf.map)
                report.record(
                    gf.map == expected,
                    f"{algebras[i].name}->{algebras[j].name}->{algebras[k].name}: f={f.map} g={g.map}",
                    f,
                )
    return report


def verify_naturality(algebras: Sequence[FiniteAlgebra], tag: "Construction | str") -> LawReport:
    """The embeddings commute with every morphism and its lift."""
    tag = Construction(tag)
    base = _BASE[tag]
    report = LawReport(f"naturality of the embedding ({tag.value})")
    algebras = [A for A in algebras if A.has(base)]
    for A, B in itertools.product(algebras, repeat=2):
        for f in enumerate_morphisms(A, B, base):
            try:
                report.record(lift(f, tag).intertwines(), f"{A.name}->{B.name}: {f.map}")
            except CertificationError as exc:
                report.record(False, f"{A.name}->{B.name}: {f.map}: {exc}")
    return report


def _phi_inverse(G: FiniteAlgebra, tag: Construction) -> Optional[tuple[int, ...]]:
    """Inverse of the embedding ``G -> extension of U(G)``, None if it is not a bijection."""
    ext = extend(G.reduct(_BASE[tag]), tag)
    emb = ext.embedding
    if sorted(emb) != list(range(len(ext))):
        return None
    inv = [0] * len(ext)
    for a, k in enumerate(emb):
        inv[k] = a
    return tuple(inv)


def verify_universal_property(
    H: FiniteAlgebra,
    catalog: Iterable[FiniteAlgebra],
    tag: "Construction | str" = Construction.IS,
) -> LawReport:
    """Every base-category morphism ``H -> U(G)`` factors uniquely through the embedding.

    The mediating map is built as ``phi_G^-1 o f^tag``; uniqueness is checked
    by enumerating all morphisms from the extension to ``G``.
    """
    tag = Construction(tag)
    if tag is Construction.DAGGER:
        raise PreconditionError("no universal property is claimed for the dagger construction")
    base, target = _BASE[tag], tag.variety
    report = LawReport(f"universal property ({tag.value}) for {H.name or 'H'}")
    ext = extend(H.reduct(base), tag)
    psi = ext.embedding
    for G in catalog:
        if not validate(G, target):
            report.record(False, f"{G.name} does not validate as {target.value}")
            continue
        UG = G.reduct(base)
        inv = _phi_inverse(G, tag)
        if inv is None:
            report.record(False, f"phi is not a bijection onto the extension of {G.name}")
            continue
        candidates = enumerate_morphisms(ext.presented, G, target)
        for f in enumerate_morphisms(H.reduct(base), UG, base):
            lifted = lift(f, tag)
            h = tuple(inv[k] for k in lifted.map)
            h_ok = validate_morphism(Morphism(ext.presented, G, h, target))
            factors = all(h[psi[a]] == f.map[a] for a in H.elements)
            matching = [c for c in candidates if all(c.map[psi[a]] == f.map[a] for a in H.elements)]
            unique = len(matching) == 1 and matching[0].map == h
            report.record(
                h_ok and factors and unique,
                f"{H.name}->{G.name} f={f.map}: morphism={h_ok} factors={factors} factorizations={len(matching)}",
                f,
            )
    return report
