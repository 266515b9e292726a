"""Finite (ordered) semigroups, element sets, downward closure and subset products.

Elements are the integers ``0..n-1``.  Subsets are stored as Python ints used
as bit-vectors, wrapped in :class:`ElementSet` at the public boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np


class SemigroupError(ValueError):
    """Base class for structures that fail validation."""


class BadTable(SemigroupError):
    pass


class NotAssociative(SemigroupError):
    def __init__(self, i: int, j: int, k: int, names: Sequence[str] | None = None):
        self.triple = (i, j, k)
        a, b, c = (names[t] for t in self.triple) if names else self.triple
        super().__init__(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class NotAntisymmetric(SemigroupError):
    def __init__(self, i: int, j: int, names: Sequence[str] | None = None):
        self.pair = (i, j)
        a, b = (names[t] for t in self.pair) if names else self.pair
        super().__init__(f"order is not antisymmetric: {a}<={b} and {b}<={a}")


class NotCompatible(SemigroupError):
    def __init__(self, a: int, b: int, x: int, side: str, names: Sequence[str] | None = None):
        self.witness = (a, b, x, side)
        p, q, r = (names[t] for t in (a, b, x)) if names else (a, b, x)
        if side == "left":
            msg = f"{p}<={q} but not {r}*{p} <= {r}*{q}"
        else:
            msg = f"{p}<={q} but not {p}*{r} <= {q}*{r}"
        super().__init__(f"order not compatible ({side}): {msg}")


class EmptyInput(SemigroupError):
    def __init__(self, what: str = "subset"):
        super().__init__(f"{what} must be nonempty")


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def to_bits(members: Iterable[int]) -> int:
    bits = 0
    for i in members:
        bits |= 1 << i
    return bits


def byte_tables(images: Sequence[int]) -> list[list[int]]:
    """Lookup tables for the union of ``images[i]`` over the members of a bit-set.

    ``tables[c][byte]`` covers members ``8c..8c+7``; see :func:`union_of`.
    """
    n = len(images)
    tables = []
    for base in range(0, n, 8):
        tab = [0] * 256
        width = min(8, n - base)
        for byte in range(1, 1 << width):
            low = byte & -byte
            tab[byte] = tab[byte ^ low] | images[base + low.bit_length() - 1]
        tables.append(tab)
    return tables


def union_of(tables: list[list[int]], bits: int) -> int:
    out = 0
    for tab in tables:
        if not bits:
            break
        out |= tab[bits & 255]
        bits >>= 8
    return out


@dataclass(frozen=True, slots=True)
class ElementSet:
    """A subset of ``range(n)``; ``bits`` has bit ``i`` set iff ``i`` is a member."""

    n: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise BadTable(f"element set {self.bits:#x} exceeds carrier of size {self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "ElementSet":
        members = list(members)
        for i in members:
            if not 0 <= i < n:
                raise BadTable(f"element {i} out of range for carrier of size {n}")
        return cls(n, to_bits(members))

    @classmethod
    def full(cls, n: int) -> "ElementSet":
        return cls(n, (1 << n) - 1)

    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __iter__(self):
        return iter_bits(self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __bool__(self):
        return self.bits != 0

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def _same(self, other: "ElementSet"):
        if self.n != other.n:
            raise BadTable("element sets over different carriers")

    def __or__(self, other):
        self._same(other)
        return ElementSet(self.n, self.bits | other.bits)

    def __and__(self, other):
        self._same(other)
        return ElementSet(self.n, self.bits & other.bits)

    def __sub__(self, other):
        self._same(other)
        return ElementSet(self.n, self.bits & ~other.bits)

    def __le__(self, other):
        self._same(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    def sort_key(self):
        """Canonical family order: by cardinality, then member list."""
        return (len(self), self.members())

    def __repr__(self):
        return f"ElementSet({self.n}, {set(self.members()) or '{}'})"


def canonical_sort(sets: Iterable[ElementSet]) -> list[ElementSet]:
    return sorted(sets, key=ElementSet.sort_key)


@dataclass(frozen=True)
class PlainSemigroup:
    """Cayley table over ``range(n)``: ``table[i][j]`` is the product ``i*j``.

    Use :func:`validate_semigroup` to build one from untrusted data.
    """

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no element named {name!r}") from None

    @cached_property
    def _index(self):
        return {s: i for i, s in enumerate(self.names)}

    @cached_property
    def right_bits(self) -> tuple[int, ...]:
        """``right_bits[a]`` is the set aS."""
        return tuple(to_bits(row) for row in self.table)

    @cached_property
    def left_bits(self) -> tuple[int, ...]:
        """``left_bits[a]`` is the set Sa."""
        n = self.n
        return tuple(to_bits(self.table[x][a] for x in range(n)) for a in range(n))

    @cached_property
    def _sandwich(self) -> dict:
        return {}

    def sandwich_bits(self, a: int, b: int) -> int:
        """The set aSb."""
        key = (a, b)
        cache = self._sandwich
        got = cache.get(key)
        if got is None:
            t = self.table
            got = cache[key] = to_bits(t[y][b] for y in iter_bits(self.right_bits[a]))
        return got

    @cached_property
    def full_bits(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _row_tables(self) -> list:
        return [None] * self.n

    def times_bits(self, a: int, B: int) -> int:
        """The set aB."""
        tabs = self._row_tables[a]
        if tabs is None:
            tabs = self._row_tables[a] = byte_tables([1 << v for v in self.table[a]])
        return union_of(tabs, B)

    def product_bits(self, A: int, B: int) -> int:
        out = 0
        for a in iter_bits(A):
            out |= self.times_bits(a, B)
        return out

    @cached_property
    def _left_tables(self):
        return byte_tables(self.left_bits)

    @cached_property
    def _right_tables(self):
        return byte_tables(self.right_bits)

    def left_of(self, A: int) -> int:
        """The set SA."""
        return union_of(self._left_tables, A)

    def right_of(self, A: int) -> int:
        """The set AS."""
        return union_of(self._right_tables, A)

    def is_idempotent(self, a: int) -> bool:
        return self.table[a][a] == a


def _as_table(table) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(v) for v in row) for row in table)
    n = len(rows)
    if n == 0:
        raise BadTable("a semigroup needs at least one element")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise BadTable(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise BadTable(f"entry ({i},{j}) = {v} is not an element index")
    return rows


def find_nonassociative(table) -> tuple[int, int, int] | None:
    """First triple (i,j,k) in lexicographic order with (ij)k != i(jk), or None."""
    t = np.asarray(table, dtype=np.int64)
    for i in range(len(t)):
        # [j,k]: (ij)k vs i(jk)
        bad = t[t[i]] != t[i][t]
        if bad.any():
            j, k = np.argwhere(bad)[0]
            return i, int(j), int(k)
    return None


def validate_semigroup(table, names: Sequence[str] | None = None) -> PlainSemigroup:
    rows = _as_table(table)
    n = len(rows)
    names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
    if len(names) != n or len(set(names)) != n:
        raise BadTable("element names must be distinct and one per row")
    bad = find_nonassociative(rows)
    if bad:
        raise NotAssociative(*bad, names=names)
    return PlainSemigroup(names, rows)


@dataclass(frozen=True)
class PartialOrder:
    """Partial order on ``range(n)``; ``below[a]`` is the bit-set {x : x <= a}."""

    below: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.below)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    @cached_property
    def above(self) -> tuple[int, ...]:
        n = self.n
        return tuple(to_bits(j for j in range(n) if self.below[j] >> i & 1) for i in range(n))

    @property
    def rel(self) -> tuple[tuple[bool, ...], ...]:
        n = self.n
        return tuple(tuple(self.leq(i, j) for j in range(n)) for i in range(n))

    def pairs(self, strict: bool = False) -> list[tuple[int, int]]:
        """All (i, j) with i <= j, sorted; reflexive pairs dropped if ``strict``."""
        return [(i, j) for i in range(self.n) for j in range(self.n)
                if self.leq(i, j) and not (strict and i == j)]

    def is_discrete(self) -> bool:
        return all(b == 1 << a for a, b in enumerate(self.below))

    @classmethod
    def discrete(cls, n: int) -> "PartialOrder":
        return cls(tuple(1 << a for a in range(n)))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]],
                   names: Sequence[str] | None = None) -> "PartialOrder":
        """Reflexive-transitive closure of ``pairs``; raises if not antisymmetric."""
        below = [1 << a for a in range(n)]
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise BadTable(f"order pair ({i},{j}) out of range")
            below[j] |= 1 << i
        for k in range(n):
            bk = below[k]
            for i in range(n):
                if below[i] >> k & 1:
                    below[i] |= bk
        for i in range(n):
            for j in iter_bits(below[i]):
                if j > i and below[j] >> i & 1:
                    raise NotAntisymmetric(min(i, j), max(i, j), names=names)
        return cls(tuple(below))


def find_incompatibility(sgp: PlainSemigroup, order: PartialOrder):
    """First (a, b, x, side) with a <= b but x*a !<= x*b (left) or a*x !<= b*x (right)."""
    t, n = sgp.table, sgp.n
    for a, b in order.pairs(strict=True):
        for x in range(n):
            if not order.leq(t[x][a], t[x][b]):
                return (a, b, x, "left")
            if not order.leq(t[a][x], t[b][x]):
                return (a, b, x, "right")
    return None


@dataclass(frozen=True)
class OrderedSemigroup:
    """A semigroup with a partial order on the same carrier.

    ``incompatibility`` is None for a genuine ordered semigroup; it holds the
    first violating (a, b, x, side) when the structure was built with
    ``require_compatible=False``.
    """

    sgp: PlainSemigroup
    order: PartialOrder
    name: str = ""
    incompatibility: tuple | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.sgp.n

    @property
    def names(self):
        return self.sgp.names

    @property
    def table(self):
        return self.sgp.table

    @property
    def compatible(self) -> bool:
        return self.incompatibility is None

    def mul(self, i, j):
        return self.sgp.table[i][j]

    def index(self, name):
        return self.sgp.index(name)

    def leq(self, i, j):
        return self.order.leq(i, j)

    @cached_property
    def _below_tables(self):
        return byte_tables(self.order.below)

    def close_bits(self, bits: int) -> int:
        return union_of(self._below_tables, bits)

    def product_bits(self, A: int, B: int) -> int:
        return self.sgp.product_bits(A, B)

    def elements(self, *names: str) -> ElementSet:
        return ElementSet.of(self.n, (self.index(s) for s in names))

    def full(self) -> ElementSet:
        return ElementSet.full(self.n)

    def format_set(self, A: ElementSet) -> str:
        return "{" + ", ".join(self.names[i] for i in A) + "}"

    def __repr__(self):
        return f"OrderedSemigroup({self.name or '?'}, n={self.n})"


def validate_ordered_semigroup(table, pairs: Iterable[tuple[int, int]] = (),
                               names: Sequence[str] | None = None, *,
                               name: str = "",
                               require_compatible: bool = True) -> OrderedSemigroup:
    """Validate a Cayley table and order generators into an :class:`OrderedSemigroup`.

    The order is the reflexive-transitive closure of ``pairs``.  With
    ``require_compatible=False`` an incompatible order is kept and the first
    violation is recorded on the result instead of raising.
    """
    sgp = validate_semigroup(table, names)
    order = PartialOrder.from_pairs(sgp.n, pairs, names=sgp.names)
    bad = find_incompatibility(sgp, order)
    if bad and require_compatible:
        raise NotCompatible(*bad, names=sgp.names)
    return OrderedSemigroup(sgp, order, name=name, incompatibility=bad)


def with_discrete_order(sgp: PlainSemigroup, name: str = "") -> OrderedSemigroup:
    return OrderedSemigroup(sgp, PartialOrder.discrete(sgp.n), name=name)


def _check_nonempty(*sets: ElementSet):
    for A in sets:
        if not A:
            raise EmptyInput()


def downward_closure(S: OrderedSemigroup, A: ElementSet) -> ElementSet:
    """(A]: every element below some member of A."""
    _check_nonempty(A)
    return ElementSet(S.n, S.close_bits(A.bits))


def subset_product(S: OrderedSemigroup | PlainSemigroup, A: ElementSet, B: ElementSet) -> ElementSet:
    """AB = {ab : a in A, b in B}."""
    _check_nonempty(A, B)
    return ElementSet(S.n, S.product_bits(A.bits, B.bits))
