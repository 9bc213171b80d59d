"""Passage from the tree coefficients (alpha, beta) of d_cy(T_W) to the
right-hand sides A_W, A^1_W of the cycle equations.

Terms are triples (coefficient, left symbol, right symbol) with symbols
'L_U' or 'L1_V'.  The rule:
  a_{U,V} = alpha_{U,V} + beta_{U,V} - beta_{V,U}   (U < V)
  b_{U,V} = -beta_{U,V}
and A^1_W keeps every L_0 L_V and L_U L1_V term while each L_U L_V with
U, V != 0 becomes  -L1_U L1_V + L_U L1_V - L_V L1_U  (this removes exactly the
constant part at t = 1, using L_V = L1_V + L_V(1)).
"""
from fractions import Fraction
from functools import lru_cache

from .forests import verify_EDT


@lru_cache(maxsize=None)
def ab_coefficients(w):
    rep = verify_EDT(w)
    if not rep.ok:
        raise ArithmeticError(f"ED-T residual for {w}")
    al, be = rep.alpha_terms, rep.beta_terms
    a = {}
    pairs = set(al) | {(u, v) if u < v else (v, u) for (u, v) in be if u != v}
    for u, v in pairs:
        c = al.get((u, v), 0) + be.get((u, v), 0) - be.get((v, u), 0)
        if c:
            a[(u, v)] = Fraction(c)
    b = {k: -Fraction(c) for k, c in be.items() if c}
    return a, b


def _sym(kind, w):
    if len(w) == 1:
        kind = "L"  # L1_0 = L_0 and L1_1 = L_1
    return f"{kind}_{w}"


def derived_A(w):
    a, b = ab_coefficients(w)
    out = [(c, _sym("L", u), _sym("L", v)) for (u, v), c in sorted(a.items())]
    out += [(c, _sym("L", u), _sym("L1", v)) for (u, v), c in sorted(b.items())]
    return out


def derived_A1(w):
    out = []
    a, b = ab_coefficients(w)
    for (u, v), c in sorted(a.items()):
        if u == "0" or v == "0":
            out.append((c, _sym("L", u), _sym("L", v)))
        else:
            out += [(-c, _sym("L1", u), _sym("L1", v)),
                    (c, _sym("L", u), _sym("L1", v)),
                    (-c, _sym("L", v), _sym("L1", u))]
    out += [(c, _sym("L", u), _sym("L1", v)) for (u, v), c in sorted(b.items())]
    return out
