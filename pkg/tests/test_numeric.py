import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from mzcycles import numeric as N


def test_log_oracle():
    r = N.li_one_var((1,), 0.5)
    assert abs(r.value - math.log(2)) <= max(r.error_bound, 1e-15)


def test_li2_large_N_near_pi2_over_6():
    r = N.li_one_var((2,), 1 - 1e-12, N=10 ** 6)
    assert abs(r.value - math.pi ** 2 / 6) < 2e-6


def test_zeta2():
    r = N.zeta((2,))
    assert abs(r.value - math.pi ** 2 / 6) < 1e-8
    assert abs(r.value - math.pi ** 2 / 6) <= r.error_bound


def test_zeta3_and_euler():
    z3 = float(mpmath.zeta(3))
    assert abs(N.zeta((3,)).value - z3) < 1e-10
    assert abs(N.zeta((2, 1)).value - z3) < 1e-8


@pytest.mark.parametrize("k,exact", [((3, 1), math.pi ** 4 / 360), ((2, 1, 1), math.pi ** 4 / 90),
                                     ((4,), math.pi ** 4 / 90), ((2, 2), math.pi ** 4 / 120)])
def test_known_mzvs(k, exact):
    r = N.zeta(k)
    assert abs(r.value - exact) < 1e-8


def test_divergent():
    with pytest.raises(N.DivergentError):
        N.zeta((1, 2))
    with pytest.raises(N.DivergentError):
        N.li_one_var((1,), 1.0)


def test_bad_input():
    with pytest.raises(ValueError):
        N.li_one_var((0,), 0.5)
    with pytest.raises(ValueError):
        N.li_one_var((2,), 1.5)


def test_li_at_zero():
    assert N.li_one_var((2, 1), 0).value == 0


def test_integral_I01():
    assert abs(N.integral_I01(1.0) - math.pi ** 2 / 6) < 1e-6
    assert abs(N.integral_I01(0.5) - (math.pi ** 2 / 12 - math.log(2) ** 2 / 2)) < 1e-9
    assert abs(N.integral_I01(1e-9)) < 1e-8


def test_integral_I01bar():
    assert abs(N.integral_I01bar(1.0)) < 1e-9
    assert abs(N.integral_I01bar(0.5) + 1.0626935) < 1e-6
    assert abs(N.integral_I01bar(1e-9) + math.pi ** 2 / 6) < 1e-8


@pytest.mark.parametrize("t0", [0.05, 0.1, 0.2, 0.3, 0.45, 0.6, 0.75, 0.9, 0.99, 1.0])
def test_quadrature_vs_series_and_mpmath(t0):
    q = N.simplex_dilog_integral(t0)
    assert abs(q - N.li_one_var((2,), t0).value if t0 < 1 else q - N.zeta((2,)).value) < 1e-6
    assert abs(q - float(mpmath.polylog(2, t0))) < 1e-6


def test_i011_value_at_zero():
    assert N.i011_integrand_value(0) == 0


def test_i011_limit():
    v = N.integral_I011_limit_at_1()
    assert abs(v + 2 * float(mpmath.zeta(3))) < 5e-3


def test_i011_integrand_against_double_sum():
    t = 0.75
    # direct double sum as oracle
    tot, inner = 0.0, 0.0
    for n in range(1, 400):
        tot += t ** n / n * inner
        inner += 1.0 / n ** 2
    f = tot + math.log(1 - t) * math.pi ** 2 / 6
    assert abs(N.i011_integrand_value(t) - f) < 1e-12


def test_stuffle_identity():
    assert abs(N.stuffle_residual(0.5)) < 1e-10


def test_shuffle_identity():
    assert abs(N.shuffle_residual(0.5)) < 1e-10


def _double_sums(t, n=200):
    li1 = sum(t ** a / a for a in range(1, n))
    li2 = sum(t ** b / b ** 2 for b in range(1, n))
    prod = sum(t ** (a + b) / (a * b * b) for a in range(1, n) for b in range(1, n))
    li12 = sum(t ** a / a * sum(1 / b ** 2 for b in range(1, a)) for a in range(1, n))
    li21 = sum(t ** a / a ** 2 * sum(1 / b for b in range(1, a)) for a in range(1, n))
    li12tt = sum(t ** a / a * sum(t ** b / b ** 2 for b in range(1, a)) for a in range(1, n))
    li21tt = sum(t ** a / a ** 2 * sum(t ** b / b for b in range(1, a)) for a in range(1, n))
    li3sq = sum(t ** (2 * a) / a ** 3 for a in range(1, n))
    li3 = sum(t ** a / a ** 3 for a in range(1, n))
    return dict(li1=li1, li2=li2, prod=prod, li12=li12, li21=li21, li12tt=li12tt, li21tt=li21tt,
                li3sq=li3sq, li3=li3)


def test_brute_force_oracle():
    d = _double_sums(0.5)
    assert abs(d["prod"] - d["li1"] * d["li2"]) < 1e-14
    assert abs(d["prod"] - (d["li12tt"] + d["li21tt"] + d["li3sq"])) < 1e-14
    assert abs(N.li_one_var((1,), 0.5).value * N.li_one_var((2,), 0.5).value - d["prod"]) < 1e-14
    assert abs(N.li_multi((1, 2), (0.5, 0.5)).value - d["li12tt"]) < 1e-14


def test_one_variable_stuffle_form_fails():
    # Li_1 Li_2 = Li_{1,2} + Li_{2,1} + Li_3 with one-variable functions is not an identity
    d = _double_sums(0.5)
    assert abs(d["prod"] - (d["li12"] + d["li21"] + d["li3"])) > 0.1


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.floats(0.05, 0.97))
def test_tail_bound_honest(k, z):
    n = 300
    a = N.li_one_var(tuple(k), z, N=n)
    b = N.li_one_var(tuple(k), z, N=2 * n)
    assert abs(a.value - b.value) <= a.error_bound


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.floats(0.01, 0.9), st.floats(0.01, 0.09))
def test_monotone_in_z(k, z, dz):
    assert N.li_one_var(tuple(k), z).value < N.li_one_var(tuple(k), z + dz).value


@pytest.mark.parametrize("k,z", [((2,), 0.3), ((1, 2), 0.7), ((2, 1, 1), 0.5), ((3, 1), 0.9)])
def test_backends_agree(k, z):
    a = N.li_one_var(k, z, N=5000, backend="python").value
    b = N.li_one_var(k, z, N=5000, backend="compiled" if N.BACKEND == "compiled" else "python").value
    assert abs(a - b) < 1e-14


@pytest.mark.parametrize("k,z", [((2,), 0.3), ((1, 2), 0.7), ((2, 1), 0.5)])
def test_double_vs_multiprecision_series(k, z):
    a = N.li_one_var(k, z, N=400).value
    b = float(N.li_series_mp(k, z, 400))
    assert abs(a - b) < 1e-14


def test_precision_env(monkeypatch):
    monkeypatch.setenv("MZCYCLES_PRECISION", "30")
    assert N.precision() == 30
    assert abs(N.zeta((2,)).value - math.pi ** 2 / 6) < 1e-8
