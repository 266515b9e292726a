import pytest
from hypothesis import given, settings

from ordsemi.core import ElementSet, EmptyInput
from ordsemi.ideals import (BadKind, BudgetExceeded, IdealKind, classify_subset, enumerate_family,
                            is_ideal, principal_ideal, regularity)

import oracles
from strategies import ordered_semigroups

KINDS = list(IdealKind)


def names(S, fam):
    return ["".join(S.names[i] for i in A) for A in fam]


def test_principal_examples(ex26):
    d, c = ex26.index("d"), ex26.index("c")
    assert principal_ideal(ex26, d, IdealKind.BI) == ex26.elements("c", "d", "e")
    assert principal_ideal(ex26, c, IdealKind.LEFT) == ex26.elements("c", "d", "e")
    assert principal_ideal(ex26, c, IdealKind.RIGHT) == ex26.elements("c")
    assert principal_ideal(ex26, ex26.index("a"), IdealKind.TWO_SIDED) == ex26.full()
    with pytest.raises(BadKind):
        principal_ideal(ex26, c, IdealKind.SUBIDEMPOTENT_BI)


def test_principal_ideals_are_ideals(ex26):
    for a in range(ex26.n):
        for kind in (IdealKind.LEFT, IdealKind.RIGHT, IdealKind.TWO_SIDED, IdealKind.BI):
            P = principal_ideal(ex26, a, kind)
            assert a in P and is_ideal(ex26, P, kind)


def test_classify_ce(ex26):
    f = classify_subset(ex26, ex26.elements("c", "e"))
    # Sc contains d, but {c,e}S = {c}
    assert (f.left, f.right, f.two_sided, f.bi, f.subidempotent_bi) == (False, True, False, True, True)
    f = classify_subset(ex26, ex26.elements("d"))
    assert not f.bi   # not downward closed
    with pytest.raises(EmptyInput):
        classify_subset(ex26, ElementSet(5, 0))


def test_example26_families(ex26):
    fam = lambda k: names(ex26, enumerate_family(ex26, k))
    assert fam(IdealKind.BI) == ["c", "ce", "cde", "acde", "bcde", "abcde"]
    assert fam(IdealKind.LEFT) == ["cde", "acde", "bcde", "abcde"]
    # aS = bS = S, so a right ideal containing a or b is S
    assert fam(IdealKind.RIGHT) == ["c", "ce", "cde", "abcde"]
    assert fam(IdealKind.TWO_SIDED) == ["cde", "abcde"]


def test_family_lookup(ex26):
    fam = enumerate_family(ex26, IdealKind.BI)
    assert fam.index(ex26.elements("c", "e")) == 1
    assert ex26.elements("d") not in fam
    assert len(fam) == 6 and fam[5] == ex26.full()


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_against_naive_oracle_on_corpus(law_corpus, kind):
    for S in law_corpus.values():
        if S.n > 5:
            continue
        table, leq = oracles.raw(S)
        got = [A.members() for A in enumerate_family(S, kind)]
        assert got == oracles.naive_family(table, leq, kind.value), S.name


@settings(max_examples=80)
@given(ordered_semigroups())
def test_against_naive_oracle_random(S):
    table, leq = oracles.raw(S)
    for kind in KINDS:
        want = oracles.naive_family(table, leq, kind.value)
        assert [A.members() for A in enumerate_family(S, kind)] == want
        assert [A.members() for A in enumerate_family(S, kind, prune=False)] == want


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_pruned_matches_unpruned_t2(t2, kind):
    S = t2.ordered()
    assert enumerate_family(S, kind) == enumerate_family(S, kind, prune=False)


def test_pruned_matches_unpruned_t3_bi(t3):
    S = t3.ordered()
    fam = enumerate_family(S, IdealKind.BI)
    assert len(fam) == 78
    assert fam == enumerate_family(S, IdealKind.BI, prune=False)


def test_t3_family_sizes(t3):
    S = t3.ordered()
    sizes = {k: len(enumerate_family(S, k)) for k in KINDS}
    assert sizes[IdealKind.LEFT] == 18
    assert sizes[IdealKind.RIGHT] == 9
    assert sizes[IdealKind.TWO_SIDED] == 3


def test_budget(t3):
    with pytest.raises(BudgetExceeded) as exc:
        enumerate_family(t3.ordered(), IdealKind.BI, budget=10, prune=False)
    assert exc.value.count == 11


def test_regularity_examples(ex26, t2, t3, law_corpus):
    r = regularity(ex26)
    assert (r.regular, r.intra_regular) == (False, True)
    r = regularity(t2.ordered())
    assert (r.regular, r.intra_regular) == (True, True)
    r = regularity(t3.ordered())
    # (2,3,3) squares to the constant (3,3,3), and S c S stays among constants
    assert (r.regular, r.intra_regular) == (True, False)
    assert regularity(law_corpus["brandt"]).regular
    assert not regularity(law_corpus["null3"]).regular


@given(ordered_semigroups())
def test_regularity_discrete_matches_plain(S):
    if S.order.is_discrete():
        table, _ = oracles.raw(S)
        assert regularity(S).regular == oracles.is_regular_plain(table)
