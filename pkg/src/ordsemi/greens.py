"""Green's relations, regular-case witnesses and egg-box arrangement."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Hashable, Iterator, Sequence

from .core import OrderedSemigroup, PartialOrder, PlainSemigroup, SemigroupError, iter_bits
from .ideals import regularity


class GreensMode(enum.Enum):
    ORDERED = "ordered"
    PLAIN = "plain"


class MissingOrder(SemigroupError):
    pass


class NotRegular(SemigroupError):
    pass


@dataclass(frozen=True)
class EquivalencePartition:
    """``class_of[i]`` is the class id of ``i``; ids are numbered by smallest member."""

    class_of: tuple[int, ...]

    @classmethod
    def from_keys(cls, keys: Sequence[Hashable]) -> "EquivalencePartition":
        ids: dict = {}
        return cls(tuple(ids.setdefault(k, len(ids)) for k in keys))

    @classmethod
    def from_relation(cls, rel: Sequence[int]) -> "EquivalencePartition":
        """From ``rel[i]`` = bit-set of elements related to ``i``; must be an equivalence."""
        n = len(rel)
        for i in range(n):
            if not rel[i] >> i & 1:
                raise ValueError(f"relation not reflexive at {i}")
            for j in iter_bits(rel[i]):
                if rel[j] != rel[i]:
                    raise ValueError(f"relation not symmetric/transitive at ({i},{j})")
        return cls.from_keys(rel)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(len(self))]
        for i, c in enumerate(self.class_of):
            out[c].append(i)
        return tuple(tuple(c) for c in out)

    def __len__(self):
        return max(self.class_of, default=-1) + 1

    def related(self, i: int, j: int) -> bool:
        return self.class_of[i] == self.class_of[j]

    def class_bits(self) -> tuple[int, ...]:
        """Per element, the bit-set of its class."""
        masks = [0] * len(self)
        for i, c in enumerate(self.class_of):
            masks[c] |= 1 << i
        return tuple(masks[c] for c in self.class_of)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Related pairs (i, j) with i < j, in lexicographic order."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.class_of[i] == self.class_of[j]:
                    yield i, j

    def refines(self, other: "EquivalencePartition") -> bool:
        """True iff self ⊆ other as relations."""
        seen: dict[int, int] = {}
        return all(seen.setdefault(c, d) == d for c, d in zip(self.class_of, other.class_of))

    def meet(self, other: "EquivalencePartition") -> "EquivalencePartition":
        return EquivalencePartition.from_keys(list(zip(self.class_of, other.class_of)))


def transitive_join(p: EquivalencePartition, q: EquivalencePartition) -> EquivalencePartition:
    """Smallest equivalence containing both, by transitive closure of p ∪ q."""
    pb, qb = p.class_bits(), q.class_bits()
    rel = [a | b for a, b in zip(pb, qb)]
    n = len(rel)
    for k in range(n):
        rk = rel[k]
        for i in range(n):
            if rel[i] >> k & 1:
                rel[i] |= rk
    return EquivalencePartition.from_relation(rel)


@dataclass(frozen=True)
class GreensPartitions:
    L: EquivalencePartition
    R: EquivalencePartition
    J: EquivalencePartition
    H: EquivalencePartition
    D: EquivalencePartition
    mode: GreensMode

    @property
    def d_equals_j(self) -> bool:
        return self.D == self.J


def _split(S, order):
    if isinstance(S, OrderedSemigroup):
        return S.sgp, order if order is not None else S.order
    return S, order


def principal_bits(sgp: PlainSemigroup, order: PartialOrder | None):
    """Per-element principal left, right and two-sided ideals (closed if ``order``)."""
    if order is None:
        close = lambda b: b
    else:
        below = order.below

        def close(b):
            out = 0
            for a in iter_bits(b):
                out |= below[a]
            return out

    full = sgp.full_bits
    L, R, J = [], [], []
    for a in range(sgp.n):
        bit, Sa, aS = 1 << a, sgp.left_bits[a], sgp.right_bits[a]
        L.append(close(bit | Sa))
        R.append(close(bit | aS))
        J.append(close(bit | Sa | aS | sgp.product_bits(full, aS)))
    return L, R, J


def greens_partitions(S: PlainSemigroup | OrderedSemigroup, order: PartialOrder | None = None,
                      mode: GreensMode = GreensMode.ORDERED) -> GreensPartitions:
    """Green's L, R, J, H, D.

    Ordered mode compares downward-closed principal ideals and needs an order
    (taken from ``S`` when it is an :class:`OrderedSemigroup`).  Plain mode
    ignores any order.
    """
    sgp, order = _split(S, order)
    if mode is GreensMode.ORDERED:
        if order is None:
            raise MissingOrder("ordered Green's relations need a partial order")
    else:
        order = None
    Lb, Rb, Jb = principal_bits(sgp, order)
    L = EquivalencePartition.from_keys(Lb)
    R = EquivalencePartition.from_keys(Rb)
    J = EquivalencePartition.from_keys(Jb)
    return GreensPartitions(L=L, R=R, J=J, H=L.meet(R), D=transitive_join(L, R), mode=mode)


def _require_regular(S: OrderedSemigroup):
    if not regularity(S).regular:
        raise NotRegular(f"{S.name or 'semigroup'} is not regular")


def l_witness_regular(S: OrderedSemigroup, a: int, b: int) -> tuple[int, int] | None:
    """First (x, y) in index order with a <= xb and b <= ya, or None."""
    _require_regular(S)
    t, leq = S.table, S.leq
    x = next((x for x in range(S.n) if leq(a, t[x][b])), None)
    y = next((y for y in range(S.n) if leq(b, t[y][a])), None)
    return None if x is None or y is None else (x, y)


def r_witness_regular(S: OrderedSemigroup, a: int, b: int) -> tuple[int, int] | None:
    """First (u, v) in index order with a <= bu and b <= av, or None."""
    _require_regular(S)
    t, leq = S.table, S.leq
    u = next((u for u in range(S.n) if leq(a, t[b][u])), None)
    v = next((v for v in range(S.n) if leq(b, t[a][v])), None)
    return None if u is None or v is None else (u, v)


@dataclass(frozen=True)
class DClass:
    members: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]      # R-classes
    columns: tuple[tuple[int, ...], ...]   # L-classes
    cells: tuple[tuple[tuple[int, ...], ...], ...]  # cells[r][c] = H-class or ()

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)


@dataclass(frozen=True)
class EggBox:
    dclasses: tuple[DClass, ...]
    names: tuple[str, ...] | None = None

    def sizes(self) -> list[int]:
        return [len(d.members) for d in self.dclasses]

    def label(self, i: int) -> str:
        return self.names[i] if self.names else str(i)


def egg_box(p: GreensPartitions, names: Sequence[str] | None = None) -> EggBox:
    """D-classes sorted by (size, smallest member); rows and columns by smallest member."""
    out = []
    for dmembers in p.D.classes:
        rows = sorted({p.R.classes[p.R.class_of[x]] for x in dmembers})
        cols = sorted({p.L.classes[p.L.class_of[x]] for x in dmembers})
        cells = tuple(tuple(tuple(sorted(set(r) & set(c))) for c in cols) for r in rows)
        out.append(DClass(dmembers, tuple(rows), tuple(cols), cells))
    out.sort(key=lambda d: (len(d.members), d.members[0]))
    return EggBox(tuple(out), tuple(names) if names is not None else None)
