"""Full transformation semigroups T_n with their natural partial order.

Products follow the row-first convention: ``(f*g)(x) = g(f(x))``.
Points are 1-based in names and in :func:`image_of`/:func:`kernel_of`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .core import OrderedSemigroup, PartialOrder, PlainSemigroup, SemigroupError, find_incompatibility

MAX_DEGREE = 4


class TooLarge(SemigroupError):
    pass


@dataclass(frozen=True, order=True)
class Transformation:
    images: tuple[int, ...]   # 0-based: point k goes to images[k]

    @classmethod
    def parse(cls, text: str) -> "Transformation":
        body = text.strip().strip("()")
        return cls(tuple(int(p) - 1 for p in body.split(",")))

    @property
    def n(self):
        return len(self.images)

    def then(self, g: "Transformation") -> "Transformation":
        """Apply self first, then g."""
        return Transformation(tuple(g.images[i] for i in self.images))

    def __str__(self):
        return "(" + ",".join(str(i + 1) for i in self.images) + ")"


def image_of(f: Transformation) -> frozenset[int]:
    return frozenset(i + 1 for i in f.images)


def kernel_of(f: Transformation) -> tuple[frozenset[int], ...]:
    """Blocks of the preimage partition, ordered by smallest point."""
    blocks: dict[int, set[int]] = {}
    for x, y in enumerate(f.images):
        blocks.setdefault(y, set()).add(x + 1)
    return tuple(sorted((frozenset(b) for b in blocks.values()), key=min))


def rank(f: Transformation) -> int:
    return len(set(f.images))


@dataclass(frozen=True)
class TnSemigroup:
    n: int
    elements: tuple[Transformation, ...]
    sgp: PlainSemigroup

    def __len__(self):
        return len(self.elements)

    def index(self, f: Transformation | str) -> int:
        if isinstance(f, str):
            f = Transformation.parse(f)
        return self._index[f]

    @cached_property
    def _index(self):
        return {f: i for i, f in enumerate(self.elements)}

    @cached_property
    def order(self) -> PartialOrder:
        return natural_partial_order(self)

    def ordered(self) -> OrderedSemigroup:
        """(T_n, <=).  The natural order is not compatible for n >= 2; the
        first violation is recorded on the result rather than raised."""
        return OrderedSemigroup(self.sgp, self.order, name=f"T{self.n}",
                                incompatibility=find_incompatibility(self.sgp, self.order))


def build_full_transformation(n: int) -> TnSemigroup:
    """All n^n maps in lexicographic order of image tuples."""
    if not 1 <= n <= MAX_DEGREE:
        raise TooLarge(f"T_n supported for 1 <= n <= {MAX_DEGREE}, got {n}")
    elements = tuple(Transformation(t) for t in itertools.product(range(n), repeat=n))
    # index of an image tuple in lexicographic order, as base-n digits
    weights = np.array([n ** (n - 1 - k) for k in range(n)])
    imgs = np.array([f.images for f in elements], dtype=np.int64)   # [f, x] = f(x)
    # composite[f, g, x] = g(f(x))
    composite = imgs[np.arange(len(elements))[None, :, None], imgs[:, None, :]]
    table = composite @ weights
    names = tuple(str(f) for f in elements)
    sgp = PlainSemigroup(names, tuple(tuple(int(v) for v in row) for row in table))
    return TnSemigroup(n, elements, sgp)


def natural_partial_order(T: TnSemigroup) -> PartialOrder:
    """f <= g iff R(f) ⊆ R(g) and some a has a*f = f and a*g = f.

    R(f) is the plain right ideal {f} ∪ f T_n.
    """
    sgp = T.sgp
    N = sgp.n
    tab = np.array(sgp.table, dtype=np.int64)
    right = [sgp.right_bits[f] | 1 << f for f in range(N)]
    below = [0] * N
    for f in range(N):
        fixes = tab[:, f] == f                     # a with a*f = f
        hits = (tab[fixes] == f).any(axis=0)        # g with a*g = f for such an a
        for g in np.flatnonzero(hits):
            g = int(g)
            if right[f] & ~right[g] == 0:
                below[g] |= 1 << f
    return PartialOrder(tuple(below))
