"""Inductive construction of the cycles L_W and L1_W for Lyndon words W.

Over A^1 one forms the combination A_W of products of lower cycles, checks
that it is closed with empty fiber at 0 (resp. A1_W with empty fiber at 1),
and sets  L_W = mu^*(A_W),  L1_W = nu^*(A1_W).  The cycles over X are the
restrictions.
"""
import json
import time
from fractions import Fraction
from importlib import resources

from .cycles import (CycleSum, L0_bar, L1_bar, PreconditionError, boundary, fiber,
                     mu_star, nu_star, specialize)
from .dictionary import derived_A, derived_A1
from .lyndon import lyndon_words


def load_coefficients():
    text = resources.files("mzcycles").joinpath("data/coefficients.json").read_text()
    doc = json.loads(text)
    out = {}
    for w, e in doc["words"].items():
        out[w] = {
            "A": [(Fraction(c), a, b) for c, a, b in e["A"]],
            "A1": [(Fraction(c), a, b) for c, a, b in e["A1"]],
            "source": e["source"],
            "anchor": e["anchor"],
        }
    return out


def _antisym_normal(terms):
    """Combination of products of odd symbols, with factors ordered (ab = -ba)."""
    out = {}
    for c, a, b in terms:
        if a > b:
            a, b, c = b, a, -c
        if a == b:
            continue
        out[(a, b)] = out.get((a, b), 0) + Fraction(c)
    return {k: v for k, v in out.items() if v}


def table_vs_dictionary(coeffs=None):
    """Mismatches between the stored table and the rule applied to the tree coefficients."""
    coeffs = coeffs or load_coefficients()
    diffs = {}
    for w, e in coeffs.items():
        for kind, rule in (("A", derived_A), ("A1", derived_A1)):
            lhs, rhs = _antisym_normal(e[kind]), _antisym_normal(rule(w))
            if lhs != rhs:
                diffs[(w, kind)] = (lhs, rhs)
    return diffs


class TableError(RuntimeError):
    pass


class CycleTable:
    def __init__(self, max_weight=5, coeffs=None, check=True):
        self.max_weight = max_weight
        self.coeffs = coeffs or load_coefficients()
        self.bar = {"L_0": L0_bar(), "L_1": L1_bar()}
        self.A_bar, self.A1_bar = {}, {}
        self.log = []
        words = sorted((w for w in lyndon_words(max_weight) if len(w) > 1), key=lambda w: (len(w), w))
        for w in words:
            t0 = time.perf_counter()
            self._build(w, check)
            self.log.append((w, time.perf_counter() - t0))

    def combo(self, terms, bars=None):
        bars = bars or self.bar
        out = CycleSum("A1")
        for c, a, b in terms:
            out = out + (bars[a] * bars[b]).scale(c)
        return out

    def _build(self, w, check):
        if w not in self.coeffs:
            raise TableError(f"no coefficient entry for {w}")
        e = self.coeffs[w]
        A = self.combo(e["A"])
        A1 = self.combo(e["A1"])
        try:
            self.bar[f"L_{w}"] = mu_star(A, check=check)
            self.bar[f"L1_{w}"] = nu_star(A1, check=check)
        except PreconditionError as exc:
            raise TableError(f"word {w}: {exc}") from exc
        self.A_bar[w], self.A1_bar[w] = A, A1

    # accessors -------------------------------------------------------------------
    def L(self, w, over="X"):
        c = self.bar["L_" + w]
        return c.restrict() if over == "X" else c

    def L1(self, w, over="X"):
        key = "L1_" + w if len(w) > 1 else "L_" + w
        c = self.bar[key]
        return c.restrict() if over == "X" else c

    def L_at_1(self, w):
        """The constant cycle L_W(1) over A^1."""
        return specialize(self.bar["L_" + w], 1)

    def symbol(self, name, over="X"):
        if name.endswith("(1)"):
            c = self.L_at_1(name[2:-3])
        else:
            c = self.bar[name] if name in self.bar else self.bar["L_" + name.split("_", 1)[1]]
        return c.restrict() if over == "X" else c

    def expression(self, terms, over="X"):
        bars = {k: (v.restrict() if over == "X" else v) for k, v in self.bar.items()}
        out = CycleSum(over)
        for c, a, b in terms:
            out = out + (bars[a] * bars[b]).scale(c)
        return out

    # verification -----------------------------------------------------------------
    def boundary_residual(self, w, kind="A", over="X"):
        lhs = boundary(self.L(w, over) if kind == "A" else self.L1(w, over))
        e = self.coeffs[w]
        return lhs - self.expression(e[kind], over)

    def fiber_residuals(self, w):
        return fiber(self.bar["L_" + w], 0), fiber(self.bar["L1_" + w], 1)


def li_cy(n):
    """The polylogarithm cycle [t; 1-t/x_{n-1}, x_{n-1}, 1-x_{n-1}/x_{n-2}, ..., x_1, 1-x_1] over A^1."""
    from .ratfun import T, X
    if n == 1:
        return L1_bar()
    coords = [1 - T / X[n - 1], X[n - 1]]
    for k in range(n - 1, 1, -1):
        coords += [1 - X[k] / X[k - 1], X[k - 1]]
    coords.append(1 - X[1])
    return CycleSum.cycle(coords, "A1")


def li_cy_residual(n, over="X"):
    lhs = li_cy(n)
    rhs = L0_bar() * li_cy(n - 1)
    if over == "X":
        lhs, rhs = lhs.restrict(), rhs.restrict()
    return boundary(lhs) - rhs
