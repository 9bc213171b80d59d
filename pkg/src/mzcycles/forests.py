"""Decorated rooted forests with edge numberings, the quotient F_Q and d_cy.

A tree is a nested tuple ``(deco, children)``.  The root carries 't', '0' or
'1' and has exactly one child; leaves carry '0'/'1' and no children; internal
vertices carry '*'.  Children tuples are planar on construction, but forests
are stored up to isomorphism: a canonical forest is a sorted tuple of trees
whose children are sorted, numbered depth-first.  Equality in F_Q is then a
dict lookup, and the numbering sign is folded into the coefficient.

Working (labelled) trees replace each child by a pair ``(label, subtree)``.
"""
import random
from fractions import Fraction
from functools import lru_cache

from .lyndon import alpha_table, is_lyndon, lyndon_words_of_weight

INTERNAL = "*"


def leaf(d):
    return (d, ())


def single_edge(root, d):
    return (root, (leaf(d),))


def n_edges(tree):
    return sum(1 + n_edges(c) for c in tree[1])


def perm_sign(seq):
    seq = list(seq)
    sign = 1
    seen = [False] * len(seq)
    order = sorted(range(len(seq)), key=lambda i: seq[i])
    pos = {i: k for k, i in enumerate(order)}
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = pos[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# labelled trees -------------------------------------------------------------

def label_dfs(tree, start=1):
    """Attach depth-first edge labels in planar order (the canonical orientation)."""
    counter = [start]

    def go(node):
        deco, kids = node
        out = []
        for c in kids:
            lab = counter[0]
            counter[0] += 1
            out.append((lab, go(c)))
        return (deco, tuple(out))

    return go(tree), counter[0]


def strip(ltree):
    deco, kids = ltree
    return (deco, tuple(strip(c) for _, c in kids))


def labels(ltree):
    out = []
    for lab, c in ltree[1]:
        out.append(lab)
        out.extend(labels(c))
    return out


def canonical_orientation(tree):
    """Edge list in depth-first planar order as (parent path, child index)."""
    out = []

    def go(node, path):
        for i, c in enumerate(node[1]):
            out.append(path + (i,))
            go(c, path + (i,))

    go(tree, ())
    return out


def _sort_ltree(ltree):
    """Sort children by structural key; returns (key, labels in dfs order, zero flag)."""
    deco, kids = ltree
    parts = []
    zero = False
    for lab, c in kids:
        key, labs, z = _sort_ltree(c)
        zero = zero or z
        parts.append((key, [lab] + labs))
    parts.sort(key=lambda p: p[0])
    for a, b in zip(parts, parts[1:]):
        # identical siblings carrying an odd number of edges: odd automorphism
        if a[0] == b[0] and len(a[1]) % 2 == 1:
            zero = True
    key = (deco, tuple(p[0] for p in parts))
    labs = [x for p in parts for x in p[1]]
    return key, labs, zero


def is_killed(tree):
    """Relations of F_Q: trees rooted at 0, and the edge rooted at 1 with leaf 0."""
    if tree[0] == "0":
        return True
    return tree == single_edge("1", "0")


def canonicalize(ltrees):
    """Labelled forest -> (sign, canonical key), sign 0 when the forest vanishes."""
    if any(not t[1] for t in ltrees):
        raise ValueError("a tree needs at least one edge")
    parts = []
    for lt in ltrees:
        key, labs, zero = _sort_ltree(lt)
        if zero or is_killed(key):
            return 0, None
        parts.append((key, labs))
    parts.sort(key=lambda p: p[0])
    for a, b in zip(parts, parts[1:]):
        if a[0] == b[0] and len(a[1]) % 2 == 1:
            return 0, None
    seq = [x for p in parts for x in p[1]]
    return perm_sign(seq), tuple(p[0] for p in parts)


def key_to_ltrees(key):
    out, nxt = [], 1
    for tree in key:
        lt, nxt = label_dfs(tree, nxt)
        out.append(lt)
    return out


# contraction -----------------------------------------------------------------

def _replace(ltree, lab, fn):
    """Rebuild ltree with the child edge labelled ``lab`` handled by fn(parent_kids, i)."""
    deco, kids = ltree
    for i, (l, c) in enumerate(kids):
        if l == lab:
            return fn(ltree, i)
    new = []
    hit = None
    for l, c in kids:
        r = _replace(c, lab, fn) if hit is None else None
        if r is not None:
            hit = r
            new.append((l, r[0]))
        else:
            new.append((l, c))
    if hit is None:
        return None
    return (deco, tuple(new)), hit[1]


def contract_edge(ltree, lab):
    """Contract the edge labelled ``lab``; returns a list of labelled trees or None (empty)."""
    root, kids = ltree
    if n_edges(strip(ltree)) == 1:
        return None
    if kids[0][0] == lab:
        # root edge: merge then split at the merged vertex
        _, w = kids[0]
        return [(root, ((l, c),)) for l, c in w[1]]

    def act(parent, i):
        pdeco, pkids = parent
        l, child = pkids[i]
        if not child[1]:
            # leaf edge: the parent takes the leaf decoration and splits
            r = child[0]
            extra = [(r, (pkids[j],)) for j in range(len(pkids)) if j != i]
            return (r, ()), extra
        merged = pkids[:i] + child[1] + pkids[i + 1:]
        return (pdeco, merged), []

    res = _replace(ltree, lab, act)
    if res is None:
        raise KeyError(lab)
    main, extra = res
    return [main] + extra


def _relabel(ltree, gone):
    deco, kids = ltree
    return (deco, tuple((l - 1 if l > gone else l, _relabel(c, gone)) for l, c in kids))


# the algebra -------------------------------------------------------------------

class Forest:
    """Element of F_Q: canonical forest key -> Fraction. The empty key () is the unit."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def from_ltrees(cls, ltrees, coeff=1):
        s, key = canonicalize(ltrees)
        return cls({key: s * Fraction(coeff)} if s else {})

    @classmethod
    def tree(cls, tree, coeff=1):
        lt, _ = label_dfs(tree)
        return cls.from_ltrees([lt], coeff)

    @classmethod
    def one(cls):
        return cls({(): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Forest(out)

    def __neg__(self):
        return Forest({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Forest({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(Fraction(c))

    def __mul__(self, other):
        if not isinstance(other, Forest):
            return self.scale(Fraction(other))
        out = Forest()
        for k1, c1 in self.terms.items():
            lt1 = key_to_ltrees(k1)
            n1 = sum(n_edges(t) for t in k1)
            for k2, c2 in other.terms.items():
                lt2 = [_shift(t, n1) for t in key_to_ltrees(k2)]
                out = out + Forest.from_ltrees(lt1 + lt2, c1 * c2)
        return out

    def __eq__(self, other):
        return isinstance(other, Forest) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{forest_str(k)}" for k, c in sorted(self.terms.items()))


def _shift(ltree, n):
    deco, kids = ltree
    return (deco, tuple((l + n, _shift(c, n)) for l, c in kids))


def d_cy(f):
    """Sum over all edges of the forest of (-1)^(w(e)-1) times the contraction.

    On a canonical forest with its global numbering this is the Leibniz
    extension of the tree formula, the sign (-1)^{e(F1)} being absorbed in the
    global position of the edge.
    """
    out = Forest()
    for key, c in f.terms.items():
        ltrees = key_to_ltrees(key)
        for ti, lt in enumerate(ltrees):
            for lab in labels(lt):
                res = contract_edge(lt, lab)
                if res is None:
                    continue
                rest = ltrees[:ti] + res + ltrees[ti + 1:]
                rest = [_relabel(t, lab) for t in rest]
                out = out + Forest.from_ltrees(rest, c * (-1) ** (lab - 1))
    return out


# dual trees ------------------------------------------------------------------------

def graft(t1, t2, root="t"):
    """Join the roots of t1 and t2 into a new vertex under a new root edge (t1 left)."""
    return (root, ((INTERNAL, (t1[1][0], t2[1][0])),))


@lru_cache(maxsize=None)
def planar_dual(w):
    """T_W as a tuple of (coefficient, planar tree) pairs."""
    if not is_lyndon(w):
        raise ValueError(f"{w!r} is not a Lyndon word")
    if len(w) == 1:
        return ((Fraction(1), single_edge("t", w)),)
    out = []
    for (u, v), a in sorted(alpha_table(w).items()):
        for cu, tu in planar_dual(u):
            for cv, tv in planar_dual(v):
                out.append((a * cu * cv, graft(tu, tv)))
    return tuple(out)


def reroot(tree, deco):
    return (deco, tree[1])


def t_dual(w, root="t"):
    out = Forest()
    for c, tree in planar_dual(w):
        out = out + Forest.tree(reroot(tree, root), c)
    return out


def forest_str(key):
    def go(node):
        deco, kids = node
        if not kids:
            return deco
        inner = ",".join(go(c) for c in kids)
        return f"{deco}({inner})" if deco != INTERNAL else f"({inner})"

    return "·".join(go(t) for t in key) if key else "1"


# ED-T verification ------------------------------------------------------------------

class TreeDiffReport:
    def __init__(self, word, lhs, alpha_terms, beta_terms, residual):
        self.word = word
        self.lhs = lhs
        self.alpha_terms = alpha_terms
        self.beta_terms = beta_terms
        self.residual = residual

    @property
    def ok(self):
        return not self.residual

    def to_json(self):
        return {
            "word": self.word,
            "alpha": {f"{u},{v}": str(c) for (u, v), c in sorted(self.alpha_terms.items())},
            "beta": {f"{u},{v}": str(c) for (u, v), c in sorted(self.beta_terms.items())},
            "residual_terms": len(self.residual.terms),
            "pass": self.ok,
        }


def _solve_combination(target, columns):
    """Exact solve target = sum x_j columns[j]; returns (solution dict, residual Forest)."""
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    names = list(columns)
    keys = sorted(set(target.terms).union(*(c.terms for c in columns.values())))
    if not keys or not names:
        return {}, target
    idx = {k: i for i, k in enumerate(keys)}
    rows = [[QQ(0)] * (len(names) + 1) for _ in keys]
    for j, n in enumerate(names):
        for k, c in columns[n].terms.items():
            rows[idx[k]][j] = QQ(c.numerator, c.denominator)
    for k, c in target.terms.items():
        rows[idx[k]][-1] = QQ(c.numerator, c.denominator)
    m = DomainMatrix(rows, (len(keys), len(names) + 1), QQ)
    rref, pivots = m.rref()
    sol = {}
    dense = rref.to_Matrix()
    if len(names) in pivots:
        return None, target
    for r, pcol in enumerate(pivots):
        val = dense[r, len(names)]
        if val != 0:
            sol[names[pcol]] = Fraction(int(val.p), int(val.q))
    resid = target
    for n, x in sol.items():
        resid = resid - columns[n].scale(x)
    return sol, resid


def verify_EDT(w):
    if not is_lyndon(w) or len(w) < 2:
        raise ValueError("verify_EDT needs a Lyndon word of weight >= 2")
    lhs = d_cy(t_dual(w))
    atab = alpha_table(w)
    rest = lhs
    for (u, v), a in atab.items():
        rest = rest - (t_dual(u) * t_dual(v)).scale(a)
    cols = {}
    n = len(w)
    for k in range(1, n):
        for u in lyndon_words_of_weight(k):
            for v in lyndon_words_of_weight(n - k):
                col = t_dual(u) * t_dual(v, root="1")
                if col:
                    cols[(u, v)] = col
    sol, resid = _solve_combination(rest, cols)
    if sol is None:
        sol, resid = {}, rest
    return TreeDiffReport(w, lhs, dict(atab), sol, resid)


# random forests for property tests --------------------------------------------------

def random_tree(rng, max_edges, root=None):
    """Random decorated rooted tree with at most max_edges edges (root valency one)."""
    root = root or rng.choice("t1")

    def grow(budget):
        # returns (subtree, edges used below it)
        if budget < 2 or rng.random() < 0.35:
            return leaf(rng.choice("01")), 0
        k = rng.choice([2, 2, 2, 3])
        kids, used = [], 0
        for i in range(k):
            left = budget - used - (k - i)
            if left < 0:
                break
            sub, u = grow(rng.randint(0, left))
            kids.append(sub)
            used += u + 1
        if len(kids) < 2:
            return leaf(rng.choice("01")), 0
        return (INTERNAL, tuple(kids)), used

    sub, _ = grow(max_edges - 1)
    return (root, (sub,))


def random_forest(rng, max_edges=9):
    trees, budget = [], max_edges
    while budget > 0:
        t = random_tree(rng, budget)
        trees.append(t)
        budget -= n_edges(t)
        if rng.random() < 0.5:
            break
    # arbitrary numbering, not the canonical one
    lts, nxt = [], 1
    for t in trees:
        lt, nxt = label_dfs(t, nxt)
        lts.append(lt)
    perm = list(range(1, nxt))
    rng.shuffle(perm)
    lts = [_permute(t, perm) for t in lts]
    return lts


def _permute(ltree, perm):
    deco, kids = ltree
    return (deco, tuple((perm[l - 1], _permute(c, perm)) for l, c in kids))


def forest_to_json(f):
    return [{"forest": forest_str(k), "coeff": str(c)} for k, c in sorted(f.terms.items())]
