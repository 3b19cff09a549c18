"""Finite algebras of the six signatures used throughout the package.

Every algebra lives on the carrier ``{0, ..., size-1}``.  The implication
table is always present; join, meet and a bottom constant are optional and
their presence is what a :class:`Variety` asks for.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _bits

Table = tuple[tuple[int, ...], ...]


class StructureError(ValueError):
    """A table is malformed (wrong shape, entry out of range, missing table)."""


class Variety(str, enum.Enum):
    HIL = "hil"
    HILS = "hils"
    HILS0 = "hils0"
    IS = "is"
    GHEY = "ghey"
    HEY = "hey"

    @classmethod
    def parse(cls, text: "str | Variety") -> "Variety":
        if isinstance(text, Variety):
            return text
        try:
            return cls(text.strip().lower())
        except ValueError:
            names = ", ".join(v.value for v in cls)
            raise ValueError(f"unknown variety {text!r} (expected one of {names})") from None

    @property
    def needs_join(self) -> bool:
        return self in (Variety.HILS, Variety.HILS0, Variety.GHEY, Variety.HEY)

    @property
    def needs_meet(self) -> bool:
        return self in (Variety.IS, Variety.GHEY, Variety.HEY)

    @property
    def needs_zero(self) -> bool:
        return self in (Variety.HILS0, Variety.HEY)


def _as_table(name: str, rows, size: int) -> Table:
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except TypeError:
        raise StructureError(f"{name}: not a square table") from None
    if len(table) != size or any(len(row) != size for row in table):
        raise StructureError(f"{name}: expected a {size}x{size} table")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not 0 <= v < size:
                raise StructureError(f"{name}[{i}][{j}] = {v} is out of range 0..{size - 1}")
    return table


@dataclass(frozen=True)
class FiniteAlgebra:
    """An implication table on ``{0..size-1}`` plus optional lattice data.

    ``name`` and ``labels`` are cosmetic and do not take part in equality.
    """

    size: int
    arrow: Table
    one: int
    join: Optional[Table] = None
    meet: Optional[Table] = None
    zero: Optional[int] = None
    name: str = field(default="", compare=False)
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = self.size
        if not isinstance(n, int) or n < 1:
            raise StructureError(f"size must be a positive integer, got {n!r}")
        object.__setattr__(self, "arrow", _as_table("arrow", self.arrow, n))
        for name in ("join", "meet"):
            t = getattr(self, name)
            if t is not None:
                object.__setattr__(self, name, _as_table(name, t, n))
        for name in ("one", "zero"):
            v = getattr(self, name)
            if v is None:
                continue
            if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise StructureError(f"{name} = {v!r} is out of range 0..{n - 1}")
            object.__setattr__(self, name, int(v))
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != n:
                raise StructureError(f"labels: expected {n} labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def show(self, mask: int) -> str:
        return "{" + ",".join(self.label(a) for a in _bits.members(mask)) + "}"

    def mask(self, labels: Iterable[str]) -> int:
        """Subset bitmask from element labels (handy for fixtures and tests)."""
        names = self.labels or tuple(str(i) for i in range(self.size))
        return _bits.mask_of(names.index(s) for s in labels)

    def element(self, label: str) -> int:
        names = self.labels or tuple(str(i) for i in range(self.size))
        return names.index(label)

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def carrier(self) -> int:
        return _bits.full(self.size)

    # natural order, derived once from the implication table
    @cached_property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(self.arrow[a][b] == self.one for b in self.elements) for a in self.elements)

    @cached_property
    def up(self) -> tuple[int, ...]:
        return tuple(_bits.mask_of(b for b in self.elements if self.leq[a][b]) for a in self.elements)

    @cached_property
    def down(self) -> tuple[int, ...]:
        return tuple(_bits.mask_of(b for b in self.elements if self.leq[b][a]) for a in self.elements)

    def upset(self, mask: int) -> int:
        out = 0
        for a in _bits.members(mask):
            out |= self.up[a]
        return out

    def downset(self, mask: int) -> int:
        out = 0
        for a in _bits.members(mask):
            out |= self.down[a]
        return out

    @cached_property
    def height(self) -> tuple[int, ...]:
        """Length of the longest chain from each element up to the top."""
        h = [0] * self.size
        order = sorted(self.elements, key=lambda a: -self.up[a].bit_count())
        for a in reversed(order):
            above = [b for b in _bits.members(self.up[a]) if b != a]
            h[a] = 1 + max((h[b] for b in above), default=-1)
        return tuple(h)

    def has(self, variety: Variety) -> bool:
        """Whether the tables demanded by ``variety`` are present."""
        variety = Variety.parse(variety)
        return not (
            (variety.needs_join and self.join is None)
            or (variety.needs_meet and self.meet is None)
            or (variety.needs_zero and self.zero is None)
        )

    def reduct(self, variety: Variety) -> "FiniteAlgebra":
        """Drop every table the target signature does not use (the forgetful functor)."""
        variety = Variety.parse(variety)
        if not self.has(variety):
            raise StructureError(f"{self.name or 'algebra'} lacks the tables of {variety.value}")
        return replace(
            self,
            join=self.join if variety.needs_join else None,
            meet=self.meet if variety.needs_meet else None,
            zero=self.zero if variety.needs_zero else None,
        )

    def relabel(self, perm: Sequence[int]) -> "FiniteAlgebra":
        """The isomorphic copy in which element ``a`` is renamed ``perm[a]``."""
        n = self.size
        inv = [0] * n
        for a, p in enumerate(perm):
            inv[p] = a

        def move(t):
            if t is None:
                return None
            return tuple(tuple(perm[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n))

        labels = None
        if self.labels:
            labels = tuple(self.labels[inv[i]] for i in range(n))
        return FiniteAlgebra(
            size=n,
            arrow=move(self.arrow),
            one=perm[self.one],
            join=move(self.join),
            meet=move(self.meet),
            zero=None if self.zero is None else perm[self.zero],
            name=self.name,
            labels=labels,
        )


# ---------------------------------------------------------------- validation


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    elements: tuple[int, ...]

    def describe(self, alg: Optional[FiniteAlgebra] = None) -> str:
        names = [alg.label(e) if alg else str(e) for e in self.elements]
        return f"{self.axiom} fails at ({', '.join(names)})"


@dataclass
class ValidationReport:
    variety: Variety
    failures: list[AxiomFailure] = field(default_factory=list)
    cap: int = 10

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    @property
    def full(self) -> bool:
        return len(self.failures) >= self.cap

    def fail(self, axiom: str, *elements: int) -> None:
        if not self.full:
            self.failures.append(AxiomFailure(axiom, tuple(elements)))


def _check_hilbert(alg: FiniteAlgebra, rep: ValidationReport) -> None:
    n, imp, one = alg.size, alg.arrow, alg.one
    R = range(n)
    for a, b in itertools.product(R, R):
        if imp[a][imp[b][a]] != one:
            rep.fail("a->(b->a) = 1", a, b)
            if rep.full:
                return
    for a, b, c in itertools.product(R, R, R):
        lhs = imp[a][imp[b][c]]
        rhs = imp[imp[a][b]][imp[a][c]]
        if imp[lhs][rhs] != one:
            rep.fail("(a->(b->c))->((a->b)->(a->c)) = 1", a, b, c)
            if rep.full:
                return
    for a in R:
        for b in range(a + 1, n):
            if imp[a][b] == one and imp[b][a] == one:
                rep.fail("a->b = b->a = 1 implies a = b", a, b)
                if rep.full:
                    return


def _check_semilattice(t: Table, name: str, n: int, rep: ValidationReport) -> None:
    R = range(n)
    for a in R:
        if t[a][a] != a:
            rep.fail(f"{name} idempotent", a)
    for a, b in itertools.product(R, R):
        if t[a][b] != t[b][a]:
            rep.fail(f"{name} commutative", a, b)
    for a, b, c in itertools.product(R, R, R):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            rep.fail(f"{name} associative", a, b, c)
            if rep.full:
                return


def _check_join(alg: FiniteAlgebra, rep: ValidationReport) -> None:
    n, j, imp, one = alg.size, alg.join, alg.arrow, alg.one
    _check_semilattice(j, "join", n, rep)
    for a in range(n):
        if j[a][one] != one:
            rep.fail("a v 1 = 1", a)
    for a, b in itertools.product(range(n), range(n)):
        if (imp[a][b] == one) != (j[a][b] == b):
            rep.fail("a->b = 1 iff a v b = b", a, b)


def _check_residuated_meet(alg: FiniteAlgebra, rep: ValidationReport) -> None:
    n, m, imp, one = alg.size, alg.meet, alg.arrow, alg.one
    R = range(n)
    _check_semilattice(m, "meet", n, rep)
    for a in R:
        if m[a][one] != a:
            rep.fail("a ^ 1 = a", a)

    def le(x, y):
        return m[x][y] == x

    for a, b, c in itertools.product(R, R, R):
        if le(m[a][b], c) != le(a, imp[b][c]):
            rep.fail("a ^ b <= c iff a <= b->c", a, b, c)
            if rep.full:
                return
    # cross-check: the stored arrow is the largest c with a ^ c <= b
    for a, b in itertools.product(R, R):
        below = [c for c in R if le(m[a][c], b)]
        tops = [c for c in below if all(le(d, c) for d in below)]
        if tops != [imp[a][b]]:
            rep.fail("a->b = max{c : a ^ c <= b}", a, b)


def validate(alg: FiniteAlgebra, variety: "Variety | str" = Variety.HIL, cap: int = 10) -> ValidationReport:
    """Check every axiom instance of ``variety``; collect up to ``cap`` failures.

    Raises :class:`StructureError` when a table the variety needs is absent.
    """
    variety = Variety.parse(variety)
    if not alg.has(variety):
        missing = [
            name
            for name, need, have in (
                ("join", variety.needs_join, alg.join),
                ("meet", variety.needs_meet, alg.meet),
                ("zero", variety.needs_zero, alg.zero),
            )
            if need and have is None
        ]
        raise StructureError(f"variety {variety.value} needs {', '.join(missing)}")
    rep = ValidationReport(variety, cap=cap)
    _check_hilbert(alg, rep)
    if variety.needs_join and not rep.full:
        _check_join(alg, rep)
    if variety.needs_meet and not rep.full:
        _check_residuated_meet(alg, rep)
        if variety.needs_join and not rep.full:
            m, j = alg.meet, alg.join
            for a, b in itertools.product(alg.elements, alg.elements):
                if m[a][j[a][b]] != a or j[a][m[a][b]] != a:
                    rep.fail("absorption", a, b)
    if variety.needs_zero and not rep.full:
        for a in alg.elements:
            if alg.arrow[alg.zero][a] != alg.one:
                rep.fail("0 <= a", a)
    return rep


def natural_order(alg: FiniteAlgebra) -> np.ndarray:
    """Boolean matrix ``M`` with ``M[a, b]`` iff ``a -> b = 1``."""
    return np.array(alg.leq, dtype=bool).reshape(alg.size, alg.size)


def derived_law_suite(alg: FiniteAlgebra, cap: int = 10) -> ValidationReport:
    """Exhaustively check the elementary consequences of the Hilbert axioms."""
    rep = ValidationReport(Variety.HIL, cap=cap)
    imp, one, leq = alg.arrow, alg.one, alg.leq
    R = alg.elements
    for a in R:
        if imp[a][a] != one:
            rep.fail("a->a = 1", a)
        if imp[one][a] != a:
            rep.fail("1->a = a", a)
    for a, b, c in itertools.product(R, R, R):
        if imp[a][imp[b][c]] != imp[b][imp[a][c]]:
            rep.fail("a->(b->c) = b->(a->c)", a, b, c)
        if imp[a][imp[b][c]] != imp[imp[a][b]][imp[a][c]]:
            rep.fail("a->(b->c) = (a->b)->(a->c)", a, b, c)
        if leq[a][b]:
            if not leq[imp[c][a]][imp[c][b]]:
                rep.fail("a <= b implies c->a <= c->b", a, b, c)
            if not leq[imp[b][c]][imp[a][c]]:
                rep.fail("a <= b implies b->c <= a->c", a, b, c)
        if rep.full:
            break
    return rep


# --------------------------------------------------------- order-derived data


def _bound_table(alg: FiniteAlgebra, upper: bool) -> Optional[Table]:
    """Join (``upper``) or meet table of the natural order, None if some bound is missing."""
    cone = alg.up if upper else alg.down
    rows = []
    for a in alg.elements:
        row = []
        for b in alg.elements:
            common = cone[a] & cone[b]
            best = [c for c in _bits.members(common) if common & ~cone[c] == 0]
            if not best:
                return None
            row.append(best[0])
        rows.append(tuple(row))
    return tuple(rows)


def order_joins(alg: FiniteAlgebra) -> Optional[Table]:
    return _bound_table(alg, upper=True)


def order_meets(alg: FiniteAlgebra) -> Optional[Table]:
    return _bound_table(alg, upper=False)


def order_bottom(alg: FiniteAlgebra) -> Optional[int]:
    for a in alg.elements:
        if alg.up[a] == alg.carrier:
            return a
    return None


def enrich(alg: FiniteAlgebra, variety: "Variety | str") -> FiniteAlgebra:
    """Attach the join/meet/zero that ``variety`` needs, derived from the natural order.

    Raises ValueError when the order lacks the required bounds.  The result
    is not validated; call :func:`validate` for that.
    """
    variety = Variety.parse(variety)
    join, meet, zero = alg.join, alg.meet, alg.zero
    if variety.needs_join and join is None:
        join = order_joins(alg)
        if join is None:
            raise ValueError(f"{alg.name or 'algebra'}: some binary join does not exist")
    if variety.needs_meet and meet is None:
        meet = order_meets(alg)
        if meet is None:
            raise ValueError(f"{alg.name or 'algebra'}: some binary meet does not exist")
    if variety.needs_zero and zero is None:
        zero = order_bottom(alg)
        if zero is None:
            raise ValueError(f"{alg.name or 'algebra'}: no least element")
    return replace(
        alg,
        join=join if variety.needs_join else None,
        meet=meet if variety.needs_meet else None,
        zero=zero if variety.needs_zero else None,
    )


# ------------------------------------------------------------ constructors


def order_algebra(
    size: int,
    covers: Iterable[tuple[int, int]],
    name: str = "",
    labels: Optional[Sequence[str]] = None,
) -> FiniteAlgebra:
    """Hilbert algebra induced by a finite poset with a top element.

    ``covers`` lists pairs ``(a, b)`` with ``a < b``; the order is their
    reflexive-transitive closure.  Implication is ``a->b = 1`` if ``a <= b``
    and ``b`` otherwise.
    """
    leq = [[a == b for b in range(size)] for a in range(size)]
    for a, b in covers:
        leq[a][b] = True
    for k in range(size):
        for i in range(size):
            if leq[i][k]:
                for j in range(size):
                    if leq[k][j]:
                        leq[i][j] = True
    tops = [t for t in range(size) if all(leq[a][t] for a in range(size))]
    if len(tops) != 1:
        raise StructureError("the order needs a greatest element")
    for a in range(size):
        for b in range(a + 1, size):
            if leq[a][b] and leq[b][a]:
                raise StructureError(f"covers form a cycle through {a} and {b}")
    top = tops[0]
    arrow = [[top if leq[a][b] else b for b in range(size)] for a in range(size)]
    return FiniteAlgebra(size=size, arrow=arrow, one=top, name=name, labels=labels)


def trivial() -> FiniteAlgebra:
    return FiniteAlgebra(size=1, arrow=[[0]], one=0, name="1", labels=("1",))


def chain(n: int, variety: "Variety | str" = Variety.HIL) -> FiniteAlgebra:
    """The ``n``-element chain ``0 < 1 < ... < n-1`` with order-induced implication."""
    alg = order_algebra(n, [(i, i + 1) for i in range(n - 1)], name=f"chain{n}")
    if n == 2:
        alg = replace(alg, labels=("0", "1"))
    return enrich(alg, variety)


def h3() -> FiniteAlgebra:
    """Two incomparable atoms ``x, y`` below the top."""
    return order_algebra(3, [(1, 0), (2, 0)], name="H3", labels=("1", "x", "y"))


def g4() -> FiniteAlgebra:
    """``a, b < c < 1`` with order-induced implication; has all binary joins."""
    return order_algebra(4, [(1, 0), (2, 1), (3, 1)], name="G4", labels=("1", "c", "a", "b"))
