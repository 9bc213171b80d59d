"""Verification suite shared by the command line and the acceptance tests.

A check is a zero-argument callable returning (ok, value); value is a short
JSON-friendly summary (a residual size, a number, or a formatted expression).
"""
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import bar as B
from . import motivic as M
from . import numeric as N
from .colored import verify_gamma_equals_L
from .cycles import CycleSum, anharmonic_normal, boundary, fiber, lemma_L0L1_product
from .forests import Forest, d_cy, random_forest, t_dual, verify_EDT
from .lyndon import lyndon_words
from .table import CycleTable, li_cy_residual

# reference list for weight <= 5 in its displayed order, where 00101 precedes 001
EXPECTED_LYNDON_5 = ["0", "00001", "0001", "00011", "00101", "001", "0011", "00111",
                    "01", "01011", "011", "0111", "01111", "1"]

EXPECTED_BETA = {"011": {("1", "01"): 1}, "0011": {("1", "001"): 1, ("01", "01"): 1},
                "01011": {("011", "01"): 2}}

# expected closed bar elements in short notation; ~w is L1_w
_H, _Q = Fraction(-1, 2), Fraction(1, 4)
EXPECTED_BAR = {
    "01": [(1, "01"), (_H, "0|1"), (-_H, "1|0")],
    "001": [(1, "001"), (_H, "0|01"), (-_H, "01|0"), (_Q, "0|0|1"), (-_Q, "0|1|0"), (_Q, "1|0|0")],
    "011": [(1, "011"), (_H, "~01|1"), (-_H, "1|~01"), (_Q, "0|1|1"), (-_Q, "1|0|1"), (_Q, "1|1|0")],
    "0011": [(1, "0011")]
    + [(_H * s, x) for s, x in [(1, "0|011"), (-1, "011|0"), (1, "~001|1"), (-1, "1|~001"),
                                (-1, "01|~01"), (1, "~01|01")]]
    + [(_Q * s, x) for s, x in [(-1, "0|1|~01"), (1, "0|1|01"), (-1, "01|0|1"), (1, "~01|0|1"),
                                (-1, "~01|1|0"), (1, "01|1|0"), (-1, "1|0|01"), (1, "1|0|~01"),
                                (1, "1|~01|0"), (1, "1|01|0"), (1, "0|~01|1"), (1, "0|01|1")]]
    + [(_H, "0|0|1|1"), (-_H, "1|1|0|0")],
}

# expected cobracket of L_0011: 0^011 + ~001^1 - 01^~01
EXPECTED_COBRACKET_0011 = [(1, "L_0", "L_011"), (1, "L1_001", "L_1"), (-1, "L_01", "L1_01")]

# one global sign relates the computed cobracket to the expected one
COBRACKET_SIGN = -1

EXPECTED_DI3 = "I(0;0,x;1)(x)I(0;x;1) + I(0;x;1)(x)I(0;0,1;1)"
EXPECTED_DI4 = ("I(0;0,x,x;1)(x)I(0;0;x) + I(0;0,0,x;1)(x)I(0;x;1) "
               "+ I(0;x;1)(x)I(0;0,0,1;1) + I(0;0,x;1)(x)I(0;0,1;1)")

CORRECTION_CYCLES = {
    "01": "-[t; x2, (x2-(x1-t)/x1)/(x2-(x1-1)/x1), x1, 1-x1]",
    "001": "-[t; x3, (x3-(x2-t)/x2)/(x3-(x2-1)/x2), x2, 1-x2/x1, x1, 1-x1]",
    "011": "[t; x3, (x3-(x2-t)/x2)/(x3-(x2-1)/x2), 1-x2, (x1-x2)/(x1-1), x1, 1-x1]",
}


@dataclass
class Check:
    id: str
    anchor: str
    status: str = "fail"
    value: object = None
    runtime_ms: float = 0.0
    error: str = field(default="")

    def to_json(self, timings=True):
        out = {"id": self.id, "anchor": self.anchor, "status": self.status, "value": self.value}
        if self.error:
            out["error"] = self.error
        if timings:
            out["runtime_ms"] = round(self.runtime_ms, 3)
        return out


def run_check(cid, anchor, fn):
    c = Check(cid, anchor)
    t0 = time.perf_counter()
    try:
        ok, value = fn()
        c.status = "pass" if ok else "fail"
        c.value = value
    except Exception as exc:  # a crashing check is a failing check
        c.error = f"{type(exc).__name__}: {exc}"
    c.runtime_ms = (time.perf_counter() - t0) * 1e3
    return c


@lru_cache(maxsize=4)
def cycle_table(max_weight=5):
    return CycleTable(max_weight)


def _size(x):
    return len(x.terms) if hasattr(x, "terms") else len(x)


# individual checks --------------------------------------------------------------------------

def check_lyndon(max_weight=5):
    words = lyndon_words(max_weight)
    ok = words == sorted(words) and all(w < w[i:] for w in words for i in range(1, len(w)))
    if max_weight == 5:
        ok = ok and sorted(words) == sorted(EXPECTED_LYNDON_5) and len(words) == 14
    return ok, words


def reference_order_swaps():
    """Adjacent swaps turning the reference list into the computed one."""
    a, b = list(EXPECTED_LYNDON_5), lyndon_words(5)
    swaps = []
    for i in range(len(a) - 1):
        if a[i] != b[i] and a[i + 1] == b[i] and a[i] == b[i + 1]:
            swaps.append((a[i], a[i + 1]))
            a[i], a[i + 1] = a[i + 1], a[i]
    return swaps if a == b else None


def check_edt(w):
    rep = verify_EDT(w)
    ok = rep.ok
    for k, c in EXPECTED_BETA.get(w, {}).items():
        ok = ok and rep.beta_terms.get(k) == c
    return ok, rep.to_json()["beta"]


def check_dcy_squared_tw(w):
    r = d_cy(d_cy(t_dual(w)))
    return not r, _size(r)


def check_dcy_squared_random(n=100, seed=7, max_edges=9):
    rng = random.Random(seed)
    bad = 0
    for _ in range(n):
        lts = random_forest(rng, max_edges)
        f = Forest.from_ltrees(lts)
        if d_cy(d_cy(f)):
            bad += 1
    return bad == 0, bad


def check_boundary(w, kind, max_weight=5):
    r = cycle_table(max_weight).boundary_residual(w, kind)
    return not r, _size(r)


def check_dd(w, max_weight=5):
    tab = cycle_table(max_weight)
    r = boundary(boundary(tab.L(w))) + boundary(boundary(tab.L1(w)))
    return not r, _size(r)


def check_li_cy(n):
    r = li_cy_residual(n)
    return not r, _size(r)


def check_fibers(w, max_weight=5):
    f0, f1 = cycle_table(max_weight).fiber_residuals(w)
    return not f0 and not f1, _size(f0) + _size(f1)


def check_lemma_L0L1(w, max_weight=5):
    tab = cycle_table(max_weight)
    bad = 0
    for c in (tab.L(w, "A1"), tab.L1(w, "A1")):
        for eps in (0, 1):
            lhs, rhs = lemma_L0L1_product(c, eps)
            bad += bool(lhs - rhs)
    # L_W has empty fiber at 0
    return bad == 0 and not fiber(tab.L(w, "A1"), 0), bad


def check_gamma(w, variant, max_weight=5):
    rep = verify_gamma_equals_L(w, cycle_table(max_weight), variant)
    return rep.ok, _size(rep.residual)


def check_correction_cycle(w, max_weight=5):
    tab = cycle_table(max_weight)
    r = boundary(CycleSum.parse(CORRECTION_CYCLES[w])) - (tab.L(w) - tab.L_at_1(w).restrict() - tab.L1(w))
    r = anharmonic_normal(r)
    return not r, _size(r)


def check_bar_element(w):
    alg = B.default_algebra(5)
    u = B.parse_bar(EXPECTED_BAR[w])
    closed = not B.d_bar(alg, u)
    diff = B.bar_add(u, B.bar_lift(alg, f"L_{w}"), coeffs=[1, -1])
    member, _ = B.shuffle_span_membership(alg, diff)
    return closed and member, {"closed": closed, "lift_difference_decomposable": member}


def check_bar_lift(name):
    alg = B.default_algebra(5)
    u = B.bar_lift(alg, name)
    return not B.d_bar(alg, u), len(u)


def check_bar_lift_01():
    """Tensor-degree-2 part of the lift of L_01 equals -1/2([0|1] - [1|0]) modulo shuffles."""
    alg = B.default_algebra(5)
    u = B.bar_lift(alg, "L_01")
    two = {w: c for w, c in u.items() if len(w) == 2}
    want = B.parse_bar([(_H, "0|1"), (-_H, "1|0")])
    member, _ = B.shuffle_span_membership(alg, B.bar_add(two, want, coeffs=[1, -1]))
    return member, B.format_bar(u)


def check_cobracket_0011():
    alg = B.default_algebra(5)
    cob = B.cobracket(alg, B.parse_bar(EXPECTED_BAR["0011"]))
    want = B.wedge_from_terms(EXPECTED_COBRACKET_0011, sign=COBRACKET_SIGN)
    return cob == want, B.format_wedge(cob)


def check_relation(w):
    r = B.relation_L1_equals_difference(B.default_algebra(5), w)
    return not r, len(r)


def check_bar_random(n=200, seed=11):
    alg = B.default_algebra(5)
    els = B.random_elements(alg, n, seed)
    bad_dd = bad_anti = bad_hopf = 0
    for i, u in enumerate(els):
        if B.d_bar(alg, B.d_bar(alg, u)):
            bad_dd += 1
        if B.bar_add(B.D1(alg, B.D2(alg, u)), B.D2(alg, B.D1(alg, u))):
            bad_anti += 1
        v = els[(i + 1) % n]
        lhs = B.deconcatenate(B.shuffle(alg, u, v))
        rhs = B.tensor_shuffle(alg, B.deconcatenate(u), B.deconcatenate(v))
        if B.bar_add(lhs, rhs, coeffs=[1, -1]):
            bad_hopf += 1
    ok = bad_dd == bad_anti == bad_hopf == 0
    return ok, {"d2": bad_dd, "D1D2": bad_anti, "hopf": bad_hopf}


def check_motivic(expr, expected):
    got = M.reduced_coproduct_mod_products(M.parse_symbol(expr))
    return got == M.parse_tensor(expected), M.format_tensor(got)


def check_motivic_vs_bar(expr, word):
    alg = B.default_algebra(5)
    rules = {f"L1_{v}": {f"L_{v}": Fraction(1), f"L_{v}(1)": Fraction(-1)} for v in ("01", "001", "011")}
    bar_side = B.substitute_wedge(B.cobracket(alg, B.bar_lift(alg, f"L_{word}")), rules)
    mot = M.motivic_wedge(M.reduced_coproduct_mod_products(M.parse_symbol(expr)))
    return mot == {k: COBRACKET_SIGN * v for k, v in bar_side.items()}, B.format_wedge(mot)


def check_zeta2():
    r = N.zeta((2,))
    return abs(r.value - math.pi ** 2 / 6) < 1e-8, r.value


def check_zeta21():
    a, b = N.zeta((2, 1)).value, N.zeta((3,)).value
    return abs(a - b) < 1e-8, a


def check_i01():
    v = N.integral_I01(1.0)
    return abs(v - N.zeta((2,)).value) < 1e-6, v


def check_i011():
    import mpmath
    v = N.integral_I011_limit_at_1()
    return abs(v + 2 * float(mpmath.zeta(3))) < 5e-3, v


def check_stuffle():
    r = N.stuffle_residual(0.5)
    return abs(r) < 1e-10, r


def check_shuffle():
    r = N.shuffle_residual(0.5)
    return abs(r) < 1e-10, r


# the suite -------------------------------------------------------------------------------------

def suite(max_weight=5):
    """[(id, anchor, callable)] for every check up to the given weight."""
    words = [w for w in lyndon_words(max_weight) if len(w) > 1]
    S = [("lyndon.enumeration", "Lyndon words up to the given weight", lambda: check_lyndon(max_weight))]
    for w in words:
        S.append((f"forest.edt.{w}", f"tree differential equation for T_{w}", lambda w=w: check_edt(w)))
        S.append((f"forest.dcy2.{w}", f"d_cy squared on T_{w}", lambda w=w: check_dcy_squared_tw(w)))
    S.append(("forest.dcy2.random", "d_cy squared on 100 random forests", check_dcy_squared_random))
    for w in words:
        S.append((f"cycle.boundary.{w}.L", f"boundary of L_{w}", lambda w=w: check_boundary(w, "A", max_weight)))
        S.append((f"cycle.boundary.{w}.L1", f"boundary of L1_{w}", lambda w=w: check_boundary(w, "A1", max_weight)))
        S.append((f"cycle.dd.{w}", f"boundary squared on L_{w} and L1_{w}", lambda w=w: check_dd(w, max_weight)))
        S.append((f"cycle.fiber.{w}", f"empty fibers of L_{w} at 0 and L1_{w} at 1",
                  lambda w=w: check_fibers(w, max_weight)))
        S.append((f"gamma.{w}.plain", f"tree parametrization of L_{w}",
                  lambda w=w: check_gamma(w, "plain", max_weight)))
        S.append((f"gamma.{w}.barred", f"tree parametrization of L1_{w}",
                  lambda w=w: check_gamma(w, "barred", max_weight)))
    for w in ("01", "011", "0011"):
        if len(w) <= max_weight:
            S.append((f"cycle.lemma_L0L1.{w}", f"fiber lemma on L_{w}", lambda w=w: check_lemma_L0L1(w, max_weight)))
    for n in range(2, 9):
        S.append((f"cycle.li_cy.{n}", f"boundary of the polylogarithm cycle of weight {n}", lambda n=n: check_li_cy(n)))
    for w in CORRECTION_CYCLES:
        if len(w) <= max_weight:
            S.append((f"cycle.correction.{w}", f"boundary of C_{w}", lambda w=w: check_correction_cycle(w, max_weight)))
    if max_weight >= 5:
        for w in EXPECTED_BAR:
            S.append((f"bar.element.{w}", f"closed bar element for L_{w}", lambda w=w: check_bar_element(w)))
        for g in ("L_0001", "L_0111", "L_01011", "L1_01011", "L_00101"):
            S.append((f"bar.lift.{g}", f"lift of {g} to a closed bar element", lambda g=g: check_bar_lift(g)))
        S.append(("bar.lift.L_01.degree2", "tensor-degree-2 part of the lift of L_01", check_bar_lift_01))
        S.append(("bar.cobracket.0011", "cobracket of L_0011 (global sign -1)", check_cobracket_0011))
        for w in ("01", "001", "011"):
            S.append((f"bar.relation.{w}", f"L1_{w} = L_{w} - L_{w}(1) up to d_B C_{w}", lambda w=w: check_relation(w)))
        S.append(("bar.random", "d_B squared, D1 D2 anticommutation, Hopf compatibility", check_bar_random))
        S.append(("motivic.coproduct.0xx", "reduced coproduct of I(0;0,x,x;1)",
                  lambda: check_motivic("I(0;0,x,x;1)", EXPECTED_DI3)))
        S.append(("motivic.coproduct.00xx", "reduced coproduct of I(0;0,0,x,x;1)",
                  lambda: check_motivic("I(0;0,0,x,x;1)", EXPECTED_DI4)))
        S.append(("motivic.bar.011", "coproduct of I(0;0,x,x;1) against the cobracket of L_011",
                  lambda: check_motivic_vs_bar("I(0;0,x,x;1)", "011")))
        S.append(("motivic.bar.0011", "coproduct of I(0;0,0,x,x;1) against the cobracket of L_0011",
                  lambda: check_motivic_vs_bar("I(0;0,0,x,x;1)", "0011")))
    S += [
        ("numeric.zeta2", "zeta(2) = pi^2/6", check_zeta2),
        ("numeric.zeta21", "zeta(2,1) = zeta(3)", check_zeta21),
        ("numeric.i01", "fiber integral of L_01 at 1 equals zeta(2)", check_i01),
        ("numeric.i011", "fiber integral of L_011 tends to -2 zeta(3)", check_i011),
        ("numeric.stuffle", "Li_1 Li_2 stuffle expansion at 1/2", check_stuffle),
        ("numeric.shuffle", "Li_1 Li_2 shuffle expansion at 1/2", check_shuffle),
    ]
    return sorted(S, key=lambda s: s[0])


def run_suite(max_weight=5):
    return [run_check(cid, anchor, fn) for cid, anchor, fn in suite(max_weight)]
