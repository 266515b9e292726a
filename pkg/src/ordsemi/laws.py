"""Law harness: check the structure theorems on one concrete ordered semigroup."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from math import comb, factorial
from typing import Any

from .biideals import (BiIdealSemigroup, InducedKind, band_and_regular, build_biideal_semigroup,
                       induced_relation, relation_compare, star)
from .core import ElementSet, OrderedSemigroup
from .greens import GreensMode, egg_box, greens_partitions
from .ideals import (DEFAULT_BUDGET, IdealKind, _principal_bits, enumerate_family,
                     regularity)
from .transform import TooLarge, build_full_transformation, kernel_of, image_of, rank


class Verdict(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


@dataclass
class LawResult:
    id: str
    statement: str
    verdict: Verdict
    witness: dict[str, Any] | None = None

    def to_dict(self):
        return {"id": self.id, "statement": self.statement,
                "verdict": self.verdict.value, "witness": self.witness}


@dataclass
class LawReport:
    instance: str
    laws: list[LawResult]
    diagnostics: dict[str, Any] = field(default_factory=dict)

    @property
    def failures(self) -> list[LawResult]:
        return [r for r in self.laws if r.verdict is Verdict.FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __getitem__(self, law_id: str) -> LawResult:
        for r in self.laws:
            if r.id == law_id:
                return r
        raise KeyError(law_id)

    def to_dict(self):
        return {"instance": self.instance, "laws": [r.to_dict() for r in self.laws],
                "diagnostics": self.diagnostics}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


def report_schema() -> dict:
    """JSON schema that :meth:`LawReport.to_json` output conforms to."""
    text = resources.files("ordsemi").joinpath("data", "report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


INSTANCE_LAWS = {
    "1": "S is regular iff B(S) is regular",
    "2": "B(S) is a band iff S is regular and intra-regular",
    "3": "L_B(S) is contained in L' and R_B(S) is contained in R'",
    "4": "regular S: the bi-ideals are exactly the nonempty sets R∩L, R right ideal, L left ideal",
    "5": "regular S: B(a) = R(a) ∩ L(a) for every a",
    "6": "regular S: (RL] = R ∩ L for every right ideal R and left ideal L",
    "7": "regular S: X*X = X for every left ideal and every right ideal X",
}

TN_LAWS = {
    "a": "ordered L and R on (T_n,<=) equal plain L and R, i.e. equal image and equal kernel",
    "b": "f L g iff B(f) L' B(g), and f R g iff B(f) R' B(g)",
    "c": "L' = L_B(T_n) and R' = R_B(T_n)",
    "d": "B(T_n) is a regular semigroup",
    "e": "egg-box of T_n: rank-k D-class is S(n,k) rows by C(n,k) columns of H-cells of size k!",
}


class Instance:
    """Lazily computed structures shared by the laws of one ordered semigroup."""

    def __init__(self, S: OrderedSemigroup, budget: int = DEFAULT_BUDGET):
        self.S = S
        self.budget = budget

    def fam(self, kind: IdealKind):
        return enumerate_family(self.S, kind, budget=self.budget)

    @cached_property
    def left(self):
        return self.fam(IdealKind.LEFT)

    @cached_property
    def right(self):
        return self.fam(IdealKind.RIGHT)

    @cached_property
    def bsg(self) -> BiIdealSemigroup:
        return build_biideal_semigroup(self.S, family=self.fam(IdealKind.BI))

    @cached_property
    def reg(self):
        return regularity(self.S)

    @cached_property
    def greens(self):
        return greens_partitions(self.S, mode=GreensMode.ORDERED)

    @cached_property
    def plain_greens(self):
        return greens_partitions(self.S.sgp, mode=GreensMode.PLAIN)

    @cached_property
    def bsg_greens(self):
        return greens_partitions(self.bsg.table, mode=GreensMode.PLAIN)

    @cached_property
    def l_prime(self):
        return induced_relation(self.S, self.bsg, InducedKind.L_PRIME, self.greens).partition

    @cached_property
    def r_prime(self):
        return induced_relation(self.S, self.bsg, InducedKind.R_PRIME, self.greens).partition

    def set_str(self, A: ElementSet | int) -> str:
        if isinstance(A, int):
            A = ElementSet(self.S.n, A)
        return self.S.format_set(A)

    def bname(self, i: int) -> str:
        return self.bsg.names[i]


def _law(law_id, table, verdict, witness=None):
    return LawResult(law_id, table[law_id], verdict, witness)


def _iff(law_id, lhs: bool, rhs: bool, witness):
    v = Verdict.PASS if lhs == rhs else Verdict.FAIL
    return _law(law_id, INSTANCE_LAWS, v, witness)


def law_regular(I: Instance):
    b = band_and_regular(I.bsg.table)
    return _iff("1", I.reg.regular, b.regular,
                {"S_regular": I.reg.regular, "B_regular": b.regular})


def law_band(I: Instance):
    b = band_and_regular(I.bsg.table)
    both = I.reg.regular and I.reg.intra_regular
    w = {"B_band": b.band, "S_regular": I.reg.regular, "S_intra_regular": I.reg.intra_regular}
    if not b.band:
        t = I.bsg.table.table
        i = next(i for i in range(len(t)) if t[i][i] != i)
        w["non_idempotent"] = [I.bname(i), I.bname(t[i][i])]
    return _iff("2", b.band, both, w)


def law_inclusion(I: Instance):
    names = I.bsg.names
    pair = lambda p: None if p is None else [names[p[0]], names[p[1]]]
    cl = relation_compare(I.bsg_greens.L, I.l_prime)
    cr = relation_compare(I.bsg_greens.R, I.r_prime)
    w = {"L_equal": cl.equal, "R_equal": cr.equal,
         "L_strict_pair": pair(cl.witness), "R_strict_pair": pair(cr.witness)}
    if not cl.subset:
        w["L_violation"] = pair(cl.violation)
    if not cr.subset:
        w["R_violation"] = pair(cr.violation)
    v = Verdict.PASS if cl.subset and cr.subset else Verdict.FAIL
    return _law("3", INSTANCE_LAWS, v, w)


def law_bi_is_rl(I: Instance):
    if not I.reg.regular:
        return _law("4", INSTANCE_LAWS, Verdict.NOT_APPLICABLE)
    bis = {A.bits for A in I.bsg.family}
    meets = {R.bits & L.bits for R in I.right for L in I.left} - {0}
    w = {"bi_ideals": len(bis), "intersections": len(meets)}
    missing = sorted(bis - meets)
    extra = sorted(meets - bis)
    if missing:
        w["bi_ideal_not_intersection"] = I.set_str(missing[0])
    if extra:
        w["intersection_not_bi_ideal"] = I.set_str(extra[0])
    v = Verdict.FAIL if missing or extra else Verdict.PASS
    return _law("4", INSTANCE_LAWS, v, w)


def law_principal(I: Instance):
    if not I.reg.regular:
        return _law("5", INSTANCE_LAWS, Verdict.NOT_APPLICABLE)
    S = I.S
    for a in range(S.n):
        b = _principal_bits(S, a, IdealKind.BI)
        rl = _principal_bits(S, a, IdealKind.RIGHT) & _principal_bits(S, a, IdealKind.LEFT)
        if b != rl:
            return _law("5", INSTANCE_LAWS, Verdict.FAIL,
                        {"element": S.names[a], "B(a)": I.set_str(b), "R(a)∩L(a)": I.set_str(rl)})
    return _law("5", INSTANCE_LAWS, Verdict.PASS, {"checked": S.n})


def law_rl_closure(I: Instance):
    if not I.reg.regular:
        return _law("6", INSTANCE_LAWS, Verdict.NOT_APPLICABLE)
    S = I.S
    for R in I.right:
        for L in I.left:
            rl = star(S, R, L)
            if rl != R & L:
                return _law("6", INSTANCE_LAWS, Verdict.FAIL,
                            {"R": I.set_str(R), "L": I.set_str(L), "(RL]": I.set_str(rl),
                             "R∩L": I.set_str(R & L)})
    return _law("6", INSTANCE_LAWS, Verdict.PASS, {"checked": len(I.right) * len(I.left)})


def law_idempotent_ideals(I: Instance):
    """X*X = X on left and right ideals.

    Evaluated on every instance; when S is not regular a counterexample only
    shows the hypothesis matters, so it is reported as not-applicable.
    """
    S = I.S
    bad = None
    for kind, fam in (("left", I.left), ("right", I.right)):
        for X in fam:
            XX = star(S, X, X)
            if XX != X:
                bad = {"kind": kind, "X": I.set_str(X), "X*X": I.set_str(XX)}
                break
        if bad:
            break
    checked = {"checked": len(I.left) + len(I.right)}
    if bad is None:
        return _law("7", INSTANCE_LAWS, Verdict.PASS, checked)
    if not I.reg.regular:
        return _law("7", INSTANCE_LAWS, Verdict.NOT_APPLICABLE, {"counterexample": bad})
    return _law("7", INSTANCE_LAWS, Verdict.FAIL, bad)


INSTANCE_CHECKS = (law_regular, law_band, law_inclusion, law_bi_is_rl, law_principal,
                   law_rl_closure, law_idempotent_ideals)


def _diagnostics(I: Instance) -> dict[str, Any]:
    S = I.S
    d: dict[str, Any] = {
        "order": S.n,
        "compatible": S.compatible,
        "regular": I.reg.regular,
        "intra_regular": I.reg.intra_regular,
        "left_ideals": len(I.left),
        "right_ideals": len(I.right),
        "bi_ideals": len(I.bsg),
        "D_equals_J": I.greens.d_equals_j,
        "B_D_equals_J": I.bsg_greens.d_equals_j,
    }
    if not S.compatible:
        a, b, x, side = S.incompatibility
        d["incompatibility"] = {"a": S.names[a], "b": S.names[b], "x": S.names[x], "side": side}
    return d


def verify_instance(S: OrderedSemigroup, name: str | None = None, *,
                    budget: int = DEFAULT_BUDGET, _instance: Instance | None = None) -> LawReport:
    I = _instance or Instance(S, budget)
    laws = [check(I) for check in INSTANCE_CHECKS]
    return LawReport(name or S.name or "S", laws, _diagnostics(I))


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k blocks."""
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


def _tn_image_kernel(T, I: Instance):
    g, p = I.greens, I.plain_greens
    n = len(T)
    by_image = [image_of(f) for f in T.elements]
    by_kernel = [kernel_of(f) for f in T.elements]
    for i in range(n):
        for j in range(n):
            lo, lp, li = g.L.related(i, j), p.L.related(i, j), by_image[i] == by_image[j]
            ro, rp, rk = g.R.related(i, j), p.R.related(i, j), by_kernel[i] == by_kernel[j]
            if not (lo == lp == li and ro == rp == rk):
                return _law("a", TN_LAWS, Verdict.FAIL, {
                    "f": T.sgp.names[i], "g": T.sgp.names[j],
                    "L": [lo, lp, li], "R": [ro, rp, rk]})
    return _law("a", TN_LAWS, Verdict.PASS, {"checked_pairs": n * n})


def _tn_principal(T, I: Instance):
    S, B = I.S, I.bsg
    pb = [B.index(ElementSet(S.n, _principal_bits(S, f, IdealKind.BI))) for f in range(S.n)]
    for i in range(S.n):
        for j in range(S.n):
            for rel, prime, label in ((I.greens.L, I.l_prime, "L"), (I.greens.R, I.r_prime, "R")):
                if rel.related(i, j) != prime.related(pb[i], pb[j]):
                    return _law("b", TN_LAWS, Verdict.FAIL, {
                        "relation": label, "f": S.names[i], "g": S.names[j],
                        "B(f)": B.names[pb[i]], "B(g)": B.names[pb[j]]})
    return _law("b", TN_LAWS, Verdict.PASS, {"checked_pairs": S.n * S.n})


def _tn_equal(I: Instance):
    names = I.bsg.names
    cl = relation_compare(I.bsg_greens.L, I.l_prime)
    cr = relation_compare(I.bsg_greens.R, I.r_prime)
    w = {"L_classes": len(I.l_prime), "R_classes": len(I.r_prime)}
    for label, c in (("L", cl), ("R", cr)):
        if not c.equal:
            p = c.witness or c.violation
            w[f"{label}_differs_at"] = [names[p[0]], names[p[1]]]
    return _law("c", TN_LAWS, Verdict.PASS if cl.equal and cr.equal else Verdict.FAIL, w)


def _tn_bregular(I: Instance):
    br = band_and_regular(I.bsg.table)
    return _law("d", TN_LAWS, Verdict.PASS if br.regular else Verdict.FAIL,
                {"bi_ideals": len(I.bsg), "band": br.band})


def _tn_eggbox(T, I: Instance):
    n = T.n
    box = egg_box(I.greens)
    seen = {}
    for d in box.dclasses:
        k = rank(T.elements[d.members[0]])
        want = (stirling2(n, k), comb(n, k))
        cells_ok = all(len(c) == factorial(k) for row in d.cells for c in row)
        if k in seen or d.shape != want or not cells_ok:
            return _law("e", TN_LAWS, Verdict.FAIL,
                        {"rank": k, "shape": list(d.shape), "expected": list(want)})
        seen[k] = list(d.shape)
    if sorted(seen) != list(range(1, n + 1)):
        return _law("e", TN_LAWS, Verdict.FAIL, {"ranks": sorted(seen)})
    w = {"shapes": {str(k): s for k, s in sorted(seen.items())}}
    if n == 2:
        # B(T_2): one row of three singletons, and {B4} alone
        bbox = egg_box(I.bsg_greens)
        shapes = [(d.shape, len(d.members)) for d in bbox.dclasses]
        w["B_shapes"] = [list(s) for s, _ in shapes]
        if sorted(shapes) != [((1, 1), 1), ((1, 3), 3)]:
            return _law("e", TN_LAWS, Verdict.FAIL, w)
    return _law("e", TN_LAWS, Verdict.PASS, w)


def verify_transformation(n: int, *, budget: int = DEFAULT_BUDGET) -> LawReport:
    """Instance laws on (T_n, <=), plus the T_n-specific checks a-e."""
    if n > 3:
        raise TooLarge(f"law verification is limited to n <= 3, got {n}")
    T = build_full_transformation(n)
    I = Instance(T.ordered(), budget)
    report = verify_instance(I.S, f"T{n}", _instance=I)
    report.laws += [_tn_image_kernel(T, I), _tn_principal(T, I), _tn_equal(I), _tn_bregular(I),
                    _tn_eggbox(T, I)]
    return report
