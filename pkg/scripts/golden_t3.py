#!/usr/bin/env python3
"""Brute-force golden values for (T_3, <=), written without the ordsemi package.

Maps are tuples of images (0-based); the product f*g applies f first.

    python scripts/golden_t3.py            # print the values
    python scripts/golden_t3.py --write    # refresh tests/golden/t3.json
"""

import itertools
import json
import sys
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "golden" / "t3.json"


def mul(f, g):
    return tuple(g[x] for x in f)


def natural_order(elems):
    """All (f, g) with R(f) ⊆ R(g) and some a with a*f = f = a*g, by trying every triple."""
    right = {f: {f} | {mul(f, h) for h in elems} for f in elems}
    pairs = set()
    for f, g, a in itertools.product(elems, repeat=3):
        if mul(a, f) == f and mul(a, g) == f and right[f] <= right[g]:
            pairs.add((f, g))
    return pairs


def compute(n=3):
    elems = list(itertools.product(range(n), repeat=n))
    order = natural_order(elems)

    def down(A):
        return frozenset(x for x in elems for a in A if (x, a) in order)

    def unions(gens):
        gens = sorted(set(gens), key=sorted)
        out = set()
        for r in range(1, len(gens) + 1):
            for combo in itertools.combinations(gens, r):
                out.add(frozenset().union(*combo))
        return out

    # every left (right) ideal is the union of the principal ones it contains
    left = unions(down({a} | {mul(x, a) for x in elems}) for a in elems)
    right = unions(down({a} | {mul(a, x) for x in elems}) for a in elems)
    assert all(down(L) == L and {mul(x, a) for x in elems for a in L} <= L for L in left)
    assert all(down(R) == R and {mul(a, x) for x in elems for a in R} <= R for R in right)

    def is_bi(A):
        return down(A) == A and {mul(mul(a, x), b) for a in A for x in elems for b in A} <= A

    meets = {R & L for R in right for L in left if R & L}
    assert all(is_bi(B) for B in meets)
    return {
        "n": n,
        "elements": len(elems),
        "order_pairs": len(order),
        "left_ideals": len(left),
        "right_ideals": len(right),
        "bi_ideals": len(meets),
    }


if __name__ == "__main__":
    values = compute()
    print(json.dumps(values, indent=2))
    if "--write" in sys.argv:
        OUT.write_text(json.dumps(values, indent=2) + "\n")
