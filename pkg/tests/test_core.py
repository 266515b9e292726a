import pytest
from hypothesis import given, strategies as st

from ordsemi.core import (BadTable, ElementSet, EmptyInput, NotAntisymmetric, NotAssociative,
                          NotCompatible, PartialOrder, downward_closure, find_nonassociative,
                          subset_product, validate_ordered_semigroup, validate_semigroup)

from reference import EX26_NAMES, EX26_PAIRS, EX26_TABLE
from strategies import ordered_semigroups, subsets
import oracles


def ex26_args(extra=()):
    pos = {s: i for i, s in enumerate(EX26_NAMES)}
    table = [[pos[s] for s in row.split()] for row in EX26_TABLE]
    pairs = [(pos[a], pos[b]) for a, b in list(EX26_PAIRS) + list(extra)]
    return table, pairs


def test_example26_validates():
    table, pairs = ex26_args()
    S = validate_ordered_semigroup(table, pairs, EX26_NAMES)
    assert S.n == 5 and S.compatible
    assert len(S.order.pairs(strict=True)) == 6


def test_extra_pair_breaks_antisymmetry():
    table, pairs = ex26_args([("a", "c")])
    with pytest.raises(NotAntisymmetric) as exc:
        validate_ordered_semigroup(table, pairs, EX26_NAMES)
    assert exc.value.pair == (0, 2)


def test_nonassociative_triple():
    # x*y = y+1 mod 3 is not associative: (0*0)*0 = 1, 0*(0*0) = 2
    table = [[(j + 1) % 3 for j in range(3)] for _ in range(3)]
    assert find_nonassociative(table) == (0, 0, 0)
    with pytest.raises(NotAssociative) as exc:
        validate_semigroup(table)
    assert exc.value.triple == (0, 0, 0)


@pytest.mark.parametrize("table", [[], [[0, 1], [0]], [[0, 2], [0, 0]], [[0, -1], [0, 0]]])
def test_bad_tables(table):
    with pytest.raises(BadTable):
        validate_semigroup(table)


def test_incompatible_order_rejected_or_recorded():
    # Z2 with 1 <= g: 1*g = g but g*g = 1, so g <= 1 would be forced
    table = [[0, 1], [1, 0]]
    with pytest.raises(NotCompatible):
        validate_ordered_semigroup(table, [(0, 1)], ["1", "g"])
    S = validate_ordered_semigroup(table, [(0, 1)], ["1", "g"], require_compatible=False)
    assert not S.compatible
    a, b, x, side = S.incompatibility
    assert S.leq(a, b)
    if side == "left":
        lhs, rhs = S.mul(x, a), S.mul(x, b)
    else:
        lhs, rhs = S.mul(a, x), S.mul(b, x)
    assert not S.leq(lhs, rhs)


def test_partial_order_closure():
    P = PartialOrder.from_pairs(4, [(0, 1), (1, 2)])
    assert P.leq(0, 2) and not P.leq(2, 0) and P.leq(3, 3)
    assert P.pairs(strict=True) == [(0, 1), (0, 2), (1, 2)]
    with pytest.raises(NotAntisymmetric):
        PartialOrder.from_pairs(3, [(0, 1), (1, 2), (2, 0)])


def test_closure_examples(ex26):
    c = lambda *xs: downward_closure(ex26, ex26.elements(*xs))
    assert c("c") == ex26.elements("c")
    assert c("a") == ex26.elements("a", "c")
    assert c("b") == ex26.elements("b", "c", "e")
    assert c("d") == ex26.elements("c", "d", "e")
    assert c("a", "d") == ex26.elements("a", "c", "d", "e")


def test_product_examples(ex26):
    E = ex26.elements
    assert subset_product(ex26, E("a"), E("a", "b")) == E("a", "b")
    assert subset_product(ex26, E("d"), ex26.full()) == E("d")
    assert subset_product(ex26, ex26.full(), E("c")) == E("c", "d")
    with pytest.raises(EmptyInput):
        subset_product(ex26, ElementSet(5, 0), E("a"))
    with pytest.raises(EmptyInput):
        downward_closure(ex26, ElementSet(5, 0))


def test_element_set_ops():
    A, B = ElementSet.of(5, [0, 2]), ElementSet.of(5, [2, 4])
    assert (A | B).members() == (0, 2, 4)
    assert (A & B).members() == (2,)
    assert (A - B).members() == (0,)
    assert A & B <= A and not A <= B
    with pytest.raises(ValueError):
        A | ElementSet.of(4, [0])


@given(st.data())
def test_closure_laws(data):
    S = data.draw(ordered_semigroups())
    table, leq = oracles.raw(S)
    A = frozenset(data.draw(subsets(S.n)))
    B = frozenset(data.draw(subsets(S.n)))
    cl = lambda X: frozenset(downward_closure(S, ElementSet.of(S.n, X)).members())
    assert cl(A) == oracles.down(leq, A)
    assert A <= cl(A)
    assert cl(cl(A)) == cl(A)
    assert cl(A) <= cl(A | B)


@given(st.data())
def test_product_laws(data):
    S = data.draw(ordered_semigroups())
    A, B, C = (ElementSet.of(S.n, data.draw(subsets(S.n))) for _ in range(3))
    cl = lambda X: downward_closure(S, X)
    mul = lambda X, Y: subset_product(S, X, Y)
    # AB is contained in (A](B], and (A](B] in (AB] by compatibility
    assert mul(A, B) <= mul(cl(A), cl(B))
    assert cl(mul(cl(A), cl(B))) == cl(mul(A, B))
    assert cl(mul(cl(mul(A, B)), C)) == cl(mul(A, cl(mul(B, C))))
