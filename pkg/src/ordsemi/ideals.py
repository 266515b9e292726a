"""Ideals of ordered semigroups: principal ideals, classification, enumeration."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .core import (ElementSet, EmptyInput, OrderedSemigroup, SemigroupError,
                   canonical_sort, iter_bits)

DEFAULT_BUDGET = 5_000_000


class IdealKind(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"
    BI = "bi"
    SUBIDEMPOTENT_BI = "subidempotent-bi"


class BadKind(SemigroupError):
    pass


class BudgetExceeded(SemigroupError):
    def __init__(self, count: int):
        self.count = count
        super().__init__(f"down-set budget exceeded after visiting {count} down-sets")


@dataclass(frozen=True)
class IdealFamily:
    """All ideals of one kind, duplicate-free, in canonical (size, members) order."""

    kind: IdealKind
    members: tuple[ElementSet, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[ElementSet]:
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def __contains__(self, A):
        return A in self._lookup

    def index(self, A: ElementSet) -> int:
        return self._lookup[A]

    @property
    def _lookup(self):
        d = self.__dict__.get("_lookup_cache")
        if d is None:
            d = {A: i for i, A in enumerate(self.members)}
            object.__setattr__(self, "_lookup_cache", d)
        return d


def _principal_bits(S: OrderedSemigroup, a: int, kind: IdealKind) -> int:
    g = S.sgp
    bit = 1 << a
    if kind is IdealKind.LEFT:
        gen = bit | g.left_bits[a]
    elif kind is IdealKind.RIGHT:
        gen = bit | g.right_bits[a]
    elif kind is IdealKind.TWO_SIDED:
        aS = g.right_bits[a]
        gen = bit | aS | g.left_bits[a] | g.product_bits(g.full_bits, aS)
    elif kind is IdealKind.BI:
        gen = bit | g.sandwich_bits(a, a)
    else:
        raise BadKind(f"no principal ideal of kind {kind.value!r}")
    return S.close_bits(gen)


def principal_ideal(S: OrderedSemigroup, a: int, kind: IdealKind) -> ElementSet:
    """L(a), R(a), I(a) or B(a): the generating set a∪Sa, a∪aS, a∪Sa∪aS∪SaS or a∪aSa, closed downward."""
    if not 0 <= a < S.n:
        raise SemigroupError(f"element {a} out of range")
    return ElementSet(S.n, _principal_bits(S, a, kind))


@dataclass(frozen=True)
class IdealFlags:
    left: bool
    right: bool
    two_sided: bool
    bi: bool
    subidempotent_bi: bool

    def holds(self, kind: IdealKind) -> bool:
        return getattr(self, kind.name.lower())


def _holds(S: OrderedSemigroup, A: int, kind: IdealKind) -> bool:
    """Definition check for one kind on the bit-set ``A``."""
    g = S.sgp
    if S.close_bits(A) != A:
        return False
    if kind is IdealKind.LEFT:
        return g.left_of(A) & ~A == 0
    if kind is IdealKind.RIGHT:
        return g.right_of(A) & ~A == 0
    if kind is IdealKind.TWO_SIDED:
        return (g.left_of(A) | g.right_of(A)) & ~A == 0
    if g.product_bits(g.right_of(A), A) & ~A:
        return False
    return kind is IdealKind.BI or g.product_bits(A, A) & ~A == 0


def _flags(S: OrderedSemigroup, A: int) -> IdealFlags:
    left = _holds(S, A, IdealKind.LEFT)
    right = _holds(S, A, IdealKind.RIGHT)
    bi = _holds(S, A, IdealKind.BI)
    return IdealFlags(left=left, right=right, two_sided=left and right, bi=bi,
                      subidempotent_bi=bi and _holds(S, A, IdealKind.SUBIDEMPOTENT_BI))


def classify_subset(S: OrderedSemigroup, A: ElementSet) -> IdealFlags:
    if not A:
        raise EmptyInput()
    return _flags(S, A.bits)


def is_ideal(S: OrderedSemigroup, A: ElementSet, kind: IdealKind) -> bool:
    return classify_subset(S, A).holds(kind)


def _growth(S: OrderedSemigroup, kind: IdealKind):
    """Bits forced into an ideal of ``kind`` when ``a`` joins the partial set ``cur``."""
    g = S.sgp
    lb, rb, sand, t = g.left_bits, g.right_bits, g.sandwich_bits, g.table

    if kind is IdealKind.LEFT:
        return lambda cur, a: lb[a]
    if kind is IdealKind.RIGHT:
        return lambda cur, a: rb[a]
    if kind is IdealKind.TWO_SIDED:
        return lambda cur, a: lb[a] | rb[a]

    sub = kind is IdealKind.SUBIDEMPOTENT_BI

    def grow(cur, a):
        out = sand(a, a)
        if sub:
            out |= 1 << t[a][a]
        for b in iter_bits(cur):
            out |= sand(a, b) | sand(b, a)
            if sub:
                out |= 1 << t[a][b] | 1 << t[b][a]
        return out

    return grow


def enumerate_family(S: OrderedSemigroup, kind: IdealKind, *, budget: int = DEFAULT_BUDGET,
                     prune: bool = True) -> IdealFamily:
    """Every nonempty ideal of ``kind``, found by walking the down-sets of (S, <=).

    Elements are decided in a linear extension of the order, so each partial
    set is a down-set of the decided prefix.  With ``prune`` the multiplicative
    condition is tracked incrementally: the products forced by the current
    partial set only grow, so hitting an already excluded element kills the
    branch.  Without it, completed down-sets are filtered by the definition.

    ``budget`` caps the number of visited (partial) down-sets.
    """
    n = S.n
    below = S.order.below
    order = sorted(range(n), key=lambda a: (below[a].bit_count(), a))
    strict_below = [below[a] & ~(1 << a) for a in range(n)]
    grow = _growth(S, kind)
    found: list[int] = []
    visited = 0

    def walk(i, cur, excl, forced):
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded(visited)
        if i == n:
            if cur and (prune or _holds(S, cur, kind)):
                found.append(cur)
            return
        a = order[i]
        bit = 1 << a
        if not (prune and forced & bit):
            walk(i + 1, cur, excl | bit, forced)
        if strict_below[a] & ~cur == 0:
            if prune:
                nf = forced | grow(cur, a)
                if nf & excl:
                    return
            else:
                nf = forced
            walk(i + 1, cur | bit, excl, nf)

    walk(0, 0, 0, 0)
    members = canonical_sort(ElementSet(n, b) for b in found)
    return IdealFamily(kind, tuple(members))


@dataclass(frozen=True)
class Regularity:
    regular: bool
    intra_regular: bool


def is_regular_element(S: OrderedSemigroup, a: int) -> bool:
    """a ∈ (aSa]."""
    return bool(S.close_bits(S.sgp.sandwich_bits(a, a)) >> a & 1)


def is_intra_regular_element(S: OrderedSemigroup, a: int) -> bool:
    """a ∈ (S a² S]."""
    g = S.sgp
    sq = g.table[a][a]
    return bool(S.close_bits(g.product_bits(g.left_bits[sq], g.full_bits)) >> a & 1)


def regularity(S: OrderedSemigroup) -> Regularity:
    return Regularity(
        regular=all(is_regular_element(S, a) for a in range(S.n)),
        intra_regular=all(is_intra_regular_element(S, a) for a in range(S.n)),
    )
