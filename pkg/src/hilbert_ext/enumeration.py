"""Isomorph-free generation of small algebras of each variety.

Hilbert algebras are generated poset by poset: the natural order fixes
which implications equal the top, and every other entry ``a->b`` ranges
over the elements strictly below the top and above ``b``.  The lattice
varieties are order-determined and come straight from the posets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .algebra import (
    FiniteAlgebra,
    Variety,
    enrich,
    order_algebra,
    order_bottom,
    order_joins,
    order_meets,
    validate,
)

HARD_CAP = {Variety.HIL: 6, Variety.HILS: 6, Variety.HILS0: 6, Variety.IS: 7, Variety.GHEY: 7, Variety.HEY: 7}
NAIVE_CAP = 4


# ---------------------------------------------------------------- canonical


@lru_cache(maxsize=None)
def _permutations(n: int, one: int) -> tuple[np.ndarray, np.ndarray]:
    """All relabelings sending ``one`` to 0, with their inverses."""
    rest = [a for a in range(n) if a != one]
    rows = []
    for p in itertools.permutations(range(1, n)):
        s = [0] * n
        for a, v in zip(rest, p):
            s[a] = v
        rows.append(s)
    S = np.array(rows, dtype=np.int64).reshape(-1, n)
    return S, np.argsort(S, axis=1)


def _keys(alg: FiniteAlgebra) -> tuple[np.ndarray, np.ndarray]:
    n = alg.size
    S, Sinv = _permutations(n, alg.one)
    m = S.shape[0]
    cols = []
    if alg.zero is not None:
        cols.append(S[:, [alg.zero]])
    for t in (alg.arrow, alg.meet, alg.join):
        if t is None:
            continue
        T = np.asarray(t, dtype=np.int64)
        idx = T[Sinv[:, :, None], Sinv[:, None, :]].reshape(m, n * n)
        cols.append(np.take_along_axis(S, idx, axis=1))
    return S, np.concatenate(cols, axis=1)


def canonical_form(alg: FiniteAlgebra) -> FiniteAlgebra:
    """The relabeling with the lexicographically least tables, top placed at 0."""
    S, keys = _keys(alg)
    best = np.lexsort(keys.T[::-1])[0]
    return alg.relabel([int(v) for v in S[best]])


def canonical_key(alg: FiniteAlgebra) -> tuple:
    c = canonical_form(alg)
    return (
        c.size,
        c.zero is not None,
        c.meet is not None,
        c.join is not None,
        c.zero if c.zero is not None else -1,
        c.arrow,
        c.meet or (),
        c.join or (),
    )


def are_isomorphic(a: FiniteAlgebra, b: FiniteAlgebra) -> bool:
    if a.size != b.size:
        return False
    if (a.join is None) != (b.join is None) or (a.meet is None) != (b.meet is None):
        return False
    if (a.zero is None) != (b.zero is None):
        return False
    return canonical_form(a) == canonical_form(b)


# ------------------------------------------------------------------ catalog


@dataclass(frozen=True)
class AlgebraCatalog:
    variety: Variety
    max_size: int
    members: tuple[FiniteAlgebra, ...]

    @property
    def counts(self) -> dict[int, int]:
        out = {n: 0 for n in range(1, self.max_size + 1)}
        for a in self.members:
            out[a.size] += 1
        return out

    def of_size(self, n: int) -> list[FiniteAlgebra]:
        return [a for a in self.members if a.size == n]

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _dedupe(algebras, variety: Variety, max_size: int) -> AlgebraCatalog:
    seen: dict[tuple, FiniteAlgebra] = {}
    for alg in algebras:
        key = canonical_key(alg)
        if key not in seen:
            seen[key] = canonical_form(alg)
    ordered = [seen[k] for k in sorted(seen)]
    tag = variety.value
    named = []
    counters: dict[int, int] = {}
    for alg in ordered:
        counters[alg.size] = counters.get(alg.size, 0) + 1
        named.append(_renamed(alg, f"{tag}{alg.size}_{counters[alg.size]}"))
    return AlgebraCatalog(variety, max_size, tuple(named))


def _renamed(alg: FiniteAlgebra, name: str) -> FiniteAlgebra:
    return FiniteAlgebra(
        size=alg.size, arrow=alg.arrow, one=alg.one, join=alg.join, meet=alg.meet, zero=alg.zero, name=name
    )


# ------------------------------------------------------------------ posets


def posets_with_top(n: int) -> Iterator[FiniteAlgebra]:
    """One order-induced Hilbert algebra per isomorphism type of ``n``-element poset with top.

    Element 0 is the top; below it, only relations ``i < j`` with ``i > j``
    as integers are generated (every finite poset has such a labeling).
    """
    below = list(range(1, n))
    pairs = [(i, j) for i in below for j in below if i > j]
    seen = set()
    for bits in range(1 << len(pairs)):
        rel = {p for k, p in enumerate(pairs) if bits >> k & 1}
        if any((i, k) not in rel for (i, j) in rel for (j2, k) in rel if j == j2):
            continue
        covers = list(rel) + [(a, 0) for a in below]
        alg = order_algebra(n, covers)
        key = canonical_key(alg)
        if key in seen:
            continue
        seen.add(key)
        yield alg


def _hilbert_arrows(order: FiniteAlgebra) -> Iterator[FiniteAlgebra]:
    """Every Hilbert algebra whose natural order is that of ``order``."""
    n, one, leq = order.size, order.one, order.leq
    arrow = [[one if leq[a][b] else -1 for b in range(n)] for a in range(n)]
    cells = [(a, b) for a in range(n) for b in range(n) if not leq[a][b]]
    options = {(a, b): [c for c in range(n) if leq[b][c] and c != one] for a, b in cells}
    R = range(n)

    def ok_partial() -> bool:
        for a, b in itertools.product(R, R):
            ba = arrow[b][a]
            if ba >= 0 and arrow[a][ba] >= 0 and arrow[a][ba] != one:
                return False
        for a, b, c in itertools.product(R, R, R):
            bc, ab, ac = arrow[b][c], arrow[a][b], arrow[a][c]
            if min(bc, ab, ac) < 0:
                continue
            lhs, rhs = arrow[a][bc], arrow[ab][ac]
            if lhs < 0 or rhs < 0:
                continue
            if not leq[lhs][rhs]:
                return False
        return True

    def walk(k: int) -> Iterator[FiniteAlgebra]:
        if k == len(cells):
            alg = FiniteAlgebra(size=n, arrow=arrow, one=one)
            if validate(alg, Variety.HIL, cap=1).ok:
                yield alg
            return
        a, b = cells[k]
        for c in options[a, b]:
            arrow[a][b] = c
            if ok_partial():
                yield from walk(k + 1)
        arrow[a][b] = -1

    yield from walk(0)


def _hilbert_algebras(n: int) -> Iterator[FiniteAlgebra]:
    for order in posets_with_top(n):
        yield from _hilbert_arrows(order)


def _lattice_algebras(n: int, variety: Variety) -> Iterator[FiniteAlgebra]:
    for order in posets_with_top(n):
        meet = order_meets(order)
        if meet is None:
            continue
        arrow = _residual(order, meet)
        if arrow is None:
            continue
        alg = FiniteAlgebra(size=n, arrow=arrow, one=order.one, meet=meet)
        alg = enrich(alg, variety)
        if validate(alg, variety, cap=1).ok:
            yield alg


def _residual(order: FiniteAlgebra, meet) -> Optional[list[list[int]]]:
    n, leq = order.size, order.leq
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            below = [c for c in range(n) if leq[meet[a][c]][b]]
            tops = [c for c in below if all(leq[d][c] for d in below)]
            if not tops:
                return None
            row.append(tops[0])
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def enumerate_algebras(variety: "Variety | str", max_size: int) -> AlgebraCatalog:
    """All algebras of ``variety`` with at most ``max_size`` elements, one per isomorphism class."""
    variety = Variety.parse(variety)
    if max_size > HARD_CAP[variety]:
        raise ValueError(f"max_size {max_size} exceeds the cap {HARD_CAP[variety]} for {variety.value}")
    if max_size < 1:
        return AlgebraCatalog(variety, max_size, ())
    found = []
    for n in range(1, max_size + 1):
        if variety in (Variety.HIL, Variety.HILS, Variety.HILS0):
            for alg in _hilbert_algebras(n):
                if variety is Variety.HIL:
                    found.append(alg)
                    continue
                if order_joins(alg) is None:
                    continue
                if variety is Variety.HILS0 and order_bottom(alg) is None:
                    continue
                found.append(enrich(alg, variety))
        else:
            found.extend(_lattice_algebras(n, variety))
    return _dedupe(found, variety, max_size)


# ------------------------------------------------------------ naive oracle


def _free_tables(n: int, fixed) -> Iterator[list[list[int]]]:
    """All ``n x n`` tables agreeing with ``fixed`` (None = free cell)."""
    free = [(i, j) for i in range(n) for j in range(n) if fixed[i][j] is None]
    for values in itertools.product(range(n), repeat=len(free)):
        t = [list(row) for row in fixed]
        for (i, j), v in zip(free, values):
            t[i][j] = v
        yield t


def _symmetric_tables(n: int, unit_absorbs: bool) -> Iterator[list[list[int]]]:
    """Idempotent commutative tables on ``{0..n-1}`` where 0 is absorbing (join) or neutral (meet)."""
    pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
    for values in itertools.product(range(n), repeat=len(pairs)):
        t = [[0] * n for _ in range(n)]
        for i in range(n):
            t[i][i] = i
            t[0][i] = t[i][0] = 0 if unit_absorbs else i
        for (i, j), v in zip(pairs, values):
            t[i][j] = t[j][i] = v
        yield t


def _naive_hilbert_tables(n: int) -> list[FiniteAlgebra]:
    # top placed at 0; a->a = 1, 1->a = a and a->1 = 1 hold in every Hilbert algebra
    fixed = [[None] * n for _ in range(n)]
    for a in range(n):
        fixed[a][a] = 0
        fixed[0][a] = a
        fixed[a][0] = 0
    out = []
    for t in _free_tables(n, fixed):
        alg = FiniteAlgebra(size=n, arrow=t, one=0)
        if validate(alg, Variety.HIL, cap=1).ok:
            out.append(alg)
    return out


def naive_catalog(variety: "Variety | str", max_size: int) -> AlgebraCatalog:
    """Brute-force catalog: filter every admissible table (top at 0) through :func:`validate`.

    Independent of the poset-based generator; meant for completeness checks
    at sizes up to 4.
    """
    variety = Variety.parse(variety)
    if max_size > NAIVE_CAP:
        raise ValueError(f"naive enumeration is limited to size {NAIVE_CAP}")
    found = []
    for n in range(1, max_size + 1):
        hil = _naive_hilbert_tables(n)
        if variety is Variety.HIL:
            found.extend(hil)
            continue
        stage = hil
        if variety.needs_meet:
            stage = [
                FiniteAlgebra(size=n, arrow=a.arrow, one=0, meet=m)
                for a in stage
                for m in _symmetric_tables(n, unit_absorbs=False)
            ]
            stage = [a for a in stage if validate(a, Variety.IS, cap=1).ok]
        if variety.needs_join:
            stage = [
                FiniteAlgebra(size=n, arrow=a.arrow, one=0, meet=a.meet, join=j)
                for a in stage
                for j in _symmetric_tables(n, unit_absorbs=True)
            ]
        if variety.needs_zero:
            stage = [
                FiniteAlgebra(size=n, arrow=a.arrow, one=0, meet=a.meet, join=a.join, zero=z)
                for a in stage
                for z in range(n)
            ]
        found.extend(a for a in stage if validate(a, variety, cap=1).ok)
    return _dedupe(found, variety, max_size)
