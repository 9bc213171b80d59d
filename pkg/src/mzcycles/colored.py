"""Colored rooted binary trees and the twisted forest cycling map Gamma.

A colored tree is ``(edge, body)``: ``edge`` is the type of the edge above the
subtree ('plain' or 'barred'), and ``body`` is a leaf letter '0'/'1' or a pair
``(left, right)`` of colored trees.  The whole tree hangs from a root
decorated t.  Edge functions, for an edge from value a down to value b:
    plain   1 - a/b
    barred  (b - a)/(b - 1)
"""
from fractions import Fraction
from functools import lru_cache

from . import ratfun as rf
from .cycles import CycleSum
from .lyndon import is_lyndon
from .ratfun import T, X

PLAIN, BARRED = "plain", "barred"


def graft_plain(t1, t2):
    return (PLAIN, (t1, t2))


def graft_barred(t1, t2):
    return (BARRED, (t1, t2))


FRAK0 = (BARRED, "0")
FRAK1 = (PLAIN, "1")


def n_leaves(tree):
    body = tree[1]
    return 1 if isinstance(body, str) else n_leaves(body[0]) + n_leaves(body[1])


def _orient(c, a, b):
    """Order factors as in the tree sums: L before L1, and smaller word first within a kind."""
    ka, wa = a.split("_")
    kb, wb = b.split("_")
    swap = (ka == "L1" and kb == "L") or (ka == kb and wa > wb)
    return (-c, b, a) if swap else (c, a, b)


def combine(pairs):
    out = {}
    for c, tree in pairs:
        out[tree] = out.get(tree, 0) + c
    return tuple((c, t) for t, c in out.items() if c)


@lru_cache(maxsize=None)
def frak_tree(w, variant="plain", coeffs=None):
    """Combination of colored trees dual to W; variant 'one' gives the barred family."""
    if not is_lyndon(w):
        raise ValueError(f"{w!r} is not a Lyndon word")
    if len(w) == 1:
        return ((Fraction(1), FRAK0 if w == "0" else FRAK1),)
    from .table import load_coefficients
    table = load_coefficients() if coeffs is None else dict(coeffs)
    if w not in table:
        raise KeyError(f"no coefficient entry for {w}")
    terms = table[w]["A" if variant == "plain" else "A1"]
    graft = graft_plain if variant == "plain" else graft_barred
    out = []
    for c, a, b in (_orient(*t) for t in terms):
        for ca, ta in _frak_symbol(a):
            for cb, tb in _frak_symbol(b):
                out.append((c * ca * cb, graft(ta, tb)))
    return combine(out)


def _frak_symbol(name):
    kind, w = name.split("_")
    return frak_tree(w, "plain" if kind == "L" or len(w) == 1 else "one")


# Gamma ------------------------------------------------------------------------

def _walk(tree):
    """Edges in canonical order as (edge type, parent vertex, child vertex)."""
    edges, internal = [], []

    def go(sub, parent):
        etype, body = sub
        if isinstance(body, str):
            edges.append((etype, parent, body))
            return
        me = ("v", len(internal))
        internal.append(me)
        edges.append((etype, parent, me))
        go(body[0], me)
        go(body[1], me)

    go(tree, "t")
    return edges, internal


def _edge_text(etype, a, b):
    if etype == PLAIN:
        return f"1-{a}" if b == "1" else f"1-{a}/{b}"
    if b == "0":
        return a
    return f"({b}-{a})/({b}-1)"


def gamma_coords(tree):
    edges, internal = _walk(tree)
    p = len(internal) + 1
    value = {"t": T, "0": rf.ZERO, "1": rf.ONE}
    name = {"t": "t", "0": "0", "1": "1"}
    for k, v in enumerate(internal):
        value[v] = X[p - 1 - k]
        name[v] = f"x{p - 1 - k}"
    coords, texts = [], []
    for etype, a, b in edges:
        va, vb = value[a], value[b]
        coords.append(1 - va / vb if etype == PLAIN else (vb - va) / (vb - 1))
        texts.append(_edge_text(etype, name[a], name[b]))
    return coords, texts


def gamma(tree, base="X", coeff=1):
    coords, _ = gamma_coords(tree)
    return CycleSum.cycle(coords, base, coeff)


def gamma_text(tree):
    _, texts = gamma_coords(tree)
    return "[t; " + ", ".join(texts) + "]"


def gamma_combo(combo, base="X"):
    out = CycleSum(base)
    for c, tree in combo:
        out = out + gamma(tree, base, c)
    return out


def combo_text(combo):
    parts = []
    for c, tree in combo:
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{abs(c)}"
        parts.append(f"{sign}{mag}{gamma_text(tree)}")
    s = " ".join(parts)
    return s[1:] if s.startswith("+") else s


def tree_to_json(tree):
    etype, body = tree
    if isinstance(body, str):
        return {"type": etype, "leaf": int(body)}
    return {"type": etype, "left": tree_to_json(body[0]), "right": tree_to_json(body[1])}


class GammaReport:
    def __init__(self, word, variant, n_trees, residual):
        self.word, self.variant, self.n_trees, self.residual = word, variant, n_trees, residual

    @property
    def ok(self):
        return not self.residual


def verify_gamma_equals_L(w, table, variant="plain"):
    combo = frak_tree(w, variant)
    image = gamma_combo(combo)
    target = table.L(w) if variant == "plain" else table.L1(w)
    return GammaReport(w, variant, len(combo), image - target)
