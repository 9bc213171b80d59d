"""One-variable multiple polylogarithms, multiple zeta values and the
integrals attached to the fibers of L_01, L1_01 and L_011.

Li_{k_1..k_m}(z) = sum_{n_1 > ... > n_m >= 1} z^{n_1} / (n_1^{k_1} ... n_m^{k_m}).

The nested sums run in double precision with compensated summation in the
compiled kernel (pure-Python fallback otherwise).  At z = 1 the partial sums
are extrapolated in N.  The (2 i pi)^{-w} normalizations are dropped.
"""
import math
import os
from dataclasses import dataclass

import mpmath
import numpy as np

try:
    from ._kernels import li_checkpoints
    BACKEND = "compiled"
except ImportError:  # extension not built
    from ._kernels_py import li_checkpoints
    BACKEND = "python"

from . import _kernels_py


class DivergentError(ValueError):
    pass


class CrossCheckError(ArithmeticError):
    pass


class ExtrapolationError(ArithmeticError):
    pass


@dataclass
class EvalResult:
    value: float
    terms_used: int
    error_bound: float

    def __float__(self):
        return float(self.value)


def precision():
    """Decimal digits for the extrapolation solves (env MZCYCLES_PRECISION, default 50)."""
    return int(os.environ.get("MZCYCLES_PRECISION", "50"))


def _kernel(backend):
    if backend is None:
        return li_checkpoints
    return {"compiled": li_checkpoints, "python": _kernels_py.li_checkpoints}[backend]


def _check(k):
    k = tuple(int(x) for x in k)
    if not k or min(k) < 1:
        raise ValueError(f"composition must be a nonempty tuple of positive integers: {k}")
    return k


def _tail_bound(k, z, N):
    """Upper bound of sum_{n > N} z^n (1 + log n)^{m-1} / n^{k_1}, which majorizes the tail."""
    m = len(k)
    lead = z ** (N + 1) * (1 + math.log(N + 1)) ** (m - 1) / (N + 1) ** k[0]
    r = z * (1 + (m - 1) / ((N + 1) * (1 + math.log(N + 1))))
    if r >= 1:
        return math.inf
    return lead / (1 - r)


def _default_N(z):
    if z <= 0:
        return 1
    n = math.ceil(math.log(1e-18 * (1 - z)) / math.log(z)) + 16
    return int(min(max(n, 64), 20_000_000))


def li_one_var(k, z, N=None, backend=None):
    """EvalResult for Li_k(z), 0 <= z <= 1 (z = 1 needs k_1 >= 2)."""
    k = _check(k)
    z = float(z)
    if not 0 <= z <= 1:
        raise ValueError("z must lie in [0, 1]")
    if z == 1:
        if k[0] < 2:
            raise DivergentError(f"Li_{k}(1) diverges")
        return _at_one(k, N or 2 ** 20, backend)
    if z == 0:
        return EvalResult(0.0, 0, 0.0)
    N = N or _default_N(z)
    value = _kernel(backend)(k, (z,) + (1.0,) * (len(k) - 1), N, [N])[0]
    bound = _tail_bound(k, z, N) + 4e-16 * abs(value)
    return EvalResult(value, N, bound)


def li_multi(k, zs, N=None, backend=None):
    """EvalResult for Li_k(z_1, ..., z_m) = sum prod z_i^{n_i} / n_i^{k_i}, 0 <= z_i <= 1, z_1 < 1."""
    k = _check(k)
    zs = tuple(float(z) for z in zs)
    if len(zs) != len(k) or not all(0 <= z <= 1 for z in zs) or zs[0] >= 1:
        raise ValueError("need one argument per index, in [0, 1] with z_1 < 1")
    if zs[0] == 0:
        return EvalResult(0.0, 0, 0.0)
    N = N or _default_N(zs[0])
    value = _kernel(backend)(k, zs, N, [N])[0]
    return EvalResult(value, N, _tail_bound(k, zs[0], N) + 4e-16 * abs(value))


def _fit_limit(xs, ys, basis):
    """Least-squares coefficients of ys ~ sum_j c_j basis_j(x); exact solve in mpmath."""
    with mpmath.workdps(precision()):
        A = mpmath.matrix([[f(mpmath.mpf(x)) for f in basis] for x in xs])
        b = mpmath.matrix([mpmath.mpf(y) for y in ys])
        sol = mpmath.qr_solve(A, b)[0]
        return [float(c) for c in sol]


def _at_one(k, N, backend, levels=10):
    """Partial sums at N / 2^j, fitted by c_0 + sum_{p,q} c_{pq} log(N)^q / N^p."""
    m = len(k)
    cps = sorted({max(N >> j, 1) for j in range(levels)})
    sums = _kernel(backend)(k, (1.0,) * m, N, cps)

    def fit(P):
        basis = [lambda n: mpmath.mpf(1)]
        for p in range(1, P + 1):
            for q in range(m):
                basis.append(lambda n, p=p, q=q: mpmath.log(n) ** q / (n / cps[0]) ** p)
        if len(basis) > len(cps):
            return None
        return _fit_limit(cps, sums, basis)[0]

    P = max(1, min(4, (len(cps) - 1) // m - 1))
    hi, lo = fit(P), fit(P - 1) if P > 1 else sums[-1]
    if hi is None:
        raise ExtrapolationError("too few checkpoints for the fit")
    bound = 10 * abs(hi - lo) + 1e-14 * abs(hi)
    return EvalResult(hi, N, bound)


def zeta(k, N=None, backend=None):
    k = _check(k)
    if k[0] < 2:
        raise DivergentError(f"zeta{k} diverges")
    return li_one_var(k, 1, N, backend)


def li_series_mp(k, z, N):
    """Plain truncated nested sum in mpmath at the configured precision (reference use)."""
    k = _check(k)
    with mpmath.workdps(precision()):
        z = mpmath.mpf(z)
        m = len(k)
        inner = [mpmath.mpf(0)] * m
        inner[m - 1] = mpmath.mpf(1)
        total, zn = mpmath.mpf(0), mpmath.mpf(1)
        for n in range(1, N + 1):
            zn *= z
            term = [inner[i] / mpmath.mpf(n) ** k[i] for i in range(m)]
            total += zn * term[0]
            for i in range(1, m):
                inner[i - 1] += term[i]
        return total


# quadrature ----------------------------------------------------------------------------

def _graded_rule(levels=24, order=12):
    """Gauss rule on [0, 1] on a mesh graded geometrically towards 0."""
    x, w = np.polynomial.legendre.leggauss(order)
    edges = [0.0] + [2.0 ** -j for j in range(levels, -1, -1)]
    pts, wts = [], []
    for a, b in zip(edges, edges[1:]):
        pts.append((b - a) / 2 * x + (a + b) / 2)
        wts.append((b - a) / 2 * w)
    return np.concatenate(pts), np.concatenate(wts)


def simplex_dilog_integral(t0):
    """int_{0 <= s1 <= s2 <= 1} ds1/(1/t0 - s1) ds2/s2 as a 2-dimensional quadrature.

    With s1 = u s2 the form becomes du ds2 / (1/t0 - u s2) on the unit square, and
    u = 1 - a^2, s2 = 1 - b^2 moves the corner singularity at t0 = 1 to the origin."""
    t0 = float(t0)
    if not 0 <= t0 <= 1:
        raise ValueError("t0 must lie in [0, 1]")
    p, w = _graded_rule()
    a, b = np.meshgrid(p, p, indexing="ij")
    wa, wb = np.meshgrid(w, w, indexing="ij")
    a2, b2 = a * a, b * b
    f = 4 * a * b * t0 / ((1 - t0) + t0 * (a2 + b2 - a2 * b2))
    return float(np.sum(f * wa * wb))


def integral_I01(t0, tol=1e-6):
    """Li_2(t0) from the fiber integral of L_01 (quadrature, checked against the series)."""
    if not 0 < t0 <= 1:
        raise ValueError("t0 must lie in (0, 1]")
    quad = simplex_dilog_integral(t0)
    series = li_one_var((2,), t0).value
    if abs(quad - series) > tol:
        raise CrossCheckError(f"quadrature {quad} vs series {series}")
    return quad


def integral_I01bar(t0, tol=1e-6):
    """Li_2(t0) - zeta(2): the two-term fiber integral of L1_01."""
    if not 0 < t0 <= 1:
        raise ValueError("t0 must lie in (0, 1]")
    quad = simplex_dilog_integral(t0) - simplex_dilog_integral(1.0)
    series = li_one_var((2,), t0).value - zeta((2,)).value
    if abs(quad - series) > tol:
        raise CrossCheckError(f"quadrature {quad} vs series {series}")
    return quad


def i011_integrand_value(t, backend=None):
    """f(t) = Li_{1,2}(t) - Li_1(t) zeta(2), the fiber integral of L_011 at t < 1."""
    if t == 0:
        return 0.0
    return (li_one_var((1, 2), t, backend=backend).value
            - li_one_var((1,), t, backend=backend).value * zeta((2,), backend=backend).value)


def i011_samples(js=range(8, 15), backend=None):
    return [(1 - 2.0 ** -j, i011_integrand_value(1 - 2.0 ** -j, backend)) for j in js]


def integral_I011_limit_at_1(js=range(8, 15), backend=None, tol=5e-3):
    """Limit of f(t) at t = 1 from f(1 - 2^-j), fitted by a + b e log(e)^2 + c e with e = 1 - t."""
    samples = i011_samples(js, backend)
    es = [2.0 ** -j for j in js]
    basis = [lambda e: mpmath.mpf(1), lambda e: e * mpmath.log(e) ** 2, lambda e: e]
    a, b, c = _fit_limit(es, [y for _, y in samples], basis)
    a2 = _fit_limit(es[-3:], [y for _, y in samples][-3:], basis)[0]
    if abs(a - a2) > tol:
        raise ExtrapolationError(f"fit unstable: {a} vs {a2}")
    target = -2 * zeta((2, 1), backend=backend).value
    if abs(a - target) > tol:
        raise CrossCheckError(f"limit {a} vs -2 zeta(2,1) = {target}")
    return a


def stuffle_residual(t=0.5, backend=None):
    """Li_1(t) Li_2(t) - (Li_{1,2}(t, t) + Li_{2,1}(t, t) + Li_3(t^2)), multi-variable series."""
    prod = li_one_var((1,), t, backend=backend).value * li_one_var((2,), t, backend=backend).value
    rhs = (li_multi((1, 2), (t, t), backend=backend).value
           + li_multi((2, 1), (t, t), backend=backend).value
           + li_one_var((3,), t * t, backend=backend).value)
    return prod - rhs


def shuffle_residual(t=0.5, backend=None):
    """Li_1(t) Li_2(t) - (Li_{1,2}(t) + 2 Li_{2,1}(t)) for the one-variable functions."""
    L = lambda k: li_one_var(k, t, backend=backend).value
    return L((1,)) * L((2,)) - (L((1, 2)) + 2 * L((2, 1)))
