"""Acceptance criteria: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""
import time

import pytest

from mzcycles import checks as C
from mzcycles.lyndon import lyndon_words

SUITE = {cid: fn for cid, _, fn in C.suite(5)}
LINES = []


def _select(*prefixes):
    return [cid for cid in SUITE if cid.startswith(prefixes)]


def _run(ids):
    t0 = time.perf_counter()
    failed = [cid for cid in ids if not C.run_check(cid, "", SUITE[cid]).status == "pass"]
    return failed, time.perf_counter() - t0


def _report(n, title, ok, elapsed, limit, detail=""):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"criterion {n}: {status}  {title}  {elapsed * 1000:.1f} ms (limit {limit * 1000:.0f} ms){detail}"
    LINES.append(line)
    print("\n" + line)
    assert ok, line
    assert elapsed < limit, line


def test_criterion_1_lyndon():
    t0 = time.perf_counter()
    words = lyndon_words(5)
    elapsed = time.perf_counter() - t0
    ok = C.check_lyndon(5)[0] and len(words) == 14
    swaps = C.reference_order_swaps()
    note = f"; reference list differs by adjacent swaps {swaps}" if swaps else ""
    _report(1, "Lyndon words of weight <= 5 (14 words, lexicographic)", ok and swaps is not None, elapsed, 1e-3,
            note)


def test_criterion_2_edt():
    ids = _select("forest.edt.")
    failed, elapsed = _run(ids)
    beta_0011, beta_01011 = C.check_edt("0011")[1], C.check_edt("01011")[1]
    ok = not failed and len(ids) == 12
    _report(2, f"tree differential equation on {len(ids)} words, beta {beta_0011} {beta_01011}", ok, elapsed, 1.0)


def test_criterion_3_dcy_squared():
    ids = _select("forest.dcy2.")
    failed, elapsed = _run(ids)
    _report(3, f"d_cy squared zero on {len(ids) - 1} T_W and 100 random forests", not failed, elapsed, 5.0)


def test_criterion_4_cycle_table():
    C.cycle_table.cache_clear()
    t0 = time.perf_counter()
    C.cycle_table(5)
    build = time.perf_counter() - t0
    ids = _select("cycle.boundary.", "cycle.dd.", "cycle.li_cy.", "cycle.correction.")
    failed, elapsed = _run(ids)
    _report(4, f"cycle table and {len(ids)} boundary checks", not failed, build + elapsed, 30.0,
            f"; failed {failed}" if failed else "")


def test_criterion_5_fibers():
    ids = _select("cycle.fiber.", "cycle.lemma_L0L1.")
    failed, elapsed = _run(ids)
    _report(5, f"fiber checks ({len(ids)})", not failed and len(_select("cycle.lemma_L0L1.")) == 3, elapsed, 5.0)


def test_criterion_6_gamma():
    ids = _select("gamma.")
    failed, elapsed = _run(ids)
    _report(6, f"tree parametrization matches cycle table ({len(ids)})", not failed, elapsed, 10.0)


def test_criterion_7_bar():
    ids = _select("bar.")
    failed, elapsed = _run(ids)
    _report(7, f"bar suite ({len(ids)} checks, cobracket sign {C.COBRACKET_SIGN})", not failed, elapsed, 60.0,
            f"; failed {failed}" if failed else "")


def test_criterion_8_motivic():
    ids = ["motivic.coproduct.0xx", "motivic.coproduct.00xx"]
    failed, elapsed = _run(ids)
    _report(8, "reduced coproducts of I(0;0,x,x;1) and I(0;0,0,x,x;1)", not failed, elapsed, 1.0)


def test_criterion_9_numeric():
    ids = ["numeric.zeta2", "numeric.zeta21", "numeric.i01", "numeric.i011", "numeric.stuffle"]
    failed, elapsed = _run(ids)
    from mzcycles import numeric as N
    one_var = N.li_one_var((1,), 0.5).value * N.li_one_var((2,), 0.5).value - sum(
        N.li_one_var(k, 0.5).value for k in ((1, 2), (2, 1), (3,)))
    _report(9, "numeric values and stuffle identity at 1/2", not failed, elapsed, 60.0,
            f"; one-variable stuffle form residual {one_var:.4f} (not an identity)")


@pytest.fixture(scope="module", autouse=True)
def _summary():
    yield
    print("\n" + "\n".join(LINES))
