"""The semigroup of bi-ideals under A*B = (AB], and the induced relations L', R'."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (ElementSet, EmptyInput, OrderedSemigroup, PlainSemigroup, SemigroupError,
                   validate_semigroup)
from .greens import EquivalencePartition, GreensMode, GreensPartitions, greens_partitions
from .ideals import DEFAULT_BUDGET, IdealFamily, IdealKind, enumerate_family


class NotClosed(SemigroupError):
    def __init__(self, i: int, j: int, product: ElementSet):
        self.pair = (i, j)
        self.product = product
        super().__init__(f"B{i + 1} * B{j + 1} = {set(product.members())} is not a bi-ideal")


class CarrierMismatch(SemigroupError):
    pass


def star(S: OrderedSemigroup, A: ElementSet, B: ElementSet) -> ElementSet:
    """A * B = (AB]."""
    if not A or not B:
        raise EmptyInput()
    return ElementSet(S.n, S.close_bits(S.product_bits(A.bits, B.bits)))


def biideal_names(m: int) -> tuple[str, ...]:
    return tuple(f"B{i + 1}" for i in range(m))


@dataclass(frozen=True)
class BiIdealSemigroup:
    base: OrderedSemigroup
    family: IdealFamily
    table: PlainSemigroup

    def __len__(self):
        return len(self.family)

    @property
    def names(self):
        return self.table.names

    def index(self, A: ElementSet) -> int:
        return self.family.index(A)

    def describe(self, i: int) -> str:
        return f"{self.names[i]} = {self.base.format_set(self.family[i])}"


def build_biideal_semigroup(S: OrderedSemigroup, *, budget: int = DEFAULT_BUDGET,
                            family: IdealFamily | None = None) -> BiIdealSemigroup:
    """Cayley table of B(S) over the canonical bi-ideal family, named B1..Bm.

    Raises :class:`NotClosed` if some (AB] is not a bi-ideal, and
    NotAssociative if * fails associativity; both would falsify B(S) being a
    semigroup.
    """
    if family is None:
        family = enumerate_family(S, IdealKind.BI, budget=budget)
    bits = [A.bits for A in family]
    lookup = {b: i for i, b in enumerate(bits)}
    rows = []
    for i, a in enumerate(bits):
        row = []
        for j, b in enumerate(bits):
            p = S.close_bits(S.product_bits(a, b))
            k = lookup.get(p)
            if k is None:
                raise NotClosed(i, j, ElementSet(S.n, p))
            row.append(k)
        rows.append(row)
    table = validate_semigroup(rows, biideal_names(len(bits)))
    return BiIdealSemigroup(S, family, table)


@dataclass(frozen=True)
class BandRegular:
    band: bool
    regular: bool


def band_and_regular(T: PlainSemigroup) -> BandRegular:
    """Band: every element idempotent.  Regular: every a has x with a = axa."""
    t, n = T.table, T.n
    band = all(t[a][a] == a for a in range(n))
    regular = all(any(t[t[a][x]][a] == a for x in range(n)) for a in range(n))
    return BandRegular(band, regular)


class InducedKind(enum.Enum):
    L_PRIME = "L'"
    R_PRIME = "R'"


@dataclass(frozen=True)
class InducedRelation:
    kind: InducedKind
    partition: EquivalencePartition


def induced_relation(S: OrderedSemigroup, B: BiIdealSemigroup, kind: InducedKind,
                     greens: GreensPartitions | None = None) -> InducedRelation:
    """A ~ B iff every element of A is L_S (R_S) related to one of B and vice versa.

    ``greens`` defaults to the ordered Green's relations of ``S``.  Raises
    ValueError if the resulting relation is not an equivalence.
    """
    if greens is None:
        greens = greens_partitions(S, mode=GreensMode.ORDERED)
    base = greens.L if kind is InducedKind.L_PRIME else greens.R
    # classes met by each bi-ideal, as a bit-set of class ids
    met = []
    for A in B.family:
        m = 0
        for a in A:
            m |= 1 << base.class_of[a]
        met.append(m)
    m = len(met)
    covers = [[met[i] & ~met[j] == 0 for j in range(m)] for i in range(m)]
    rel = [sum(1 << j for j in range(m) if covers[i][j] and covers[j][i]) for i in range(m)]
    return InducedRelation(kind, EquivalencePartition.from_relation(rel))


@dataclass(frozen=True)
class RelationComparison:
    subset: bool
    equal: bool
    witness: tuple[int, int] | None     # first pair related in r2 but not r1
    violation: tuple[int, int] | None   # first pair related in r1 but not r2


def relation_compare(r1: EquivalencePartition, r2: EquivalencePartition) -> RelationComparison:
    if r1.n != r2.n:
        raise CarrierMismatch(f"carriers differ: {r1.n} vs {r2.n}")
    witness = next((p for p in r2.pairs() if not r1.related(*p)), None)
    violation = next((p for p in r1.pairs() if not r2.related(*p)), None)
    return RelationComparison(subset=violation is None,
                              equal=violation is None and witness is None,
                              witness=witness, violation=violation)
