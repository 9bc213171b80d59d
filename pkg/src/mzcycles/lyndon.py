"""Lyndon words over 0 < 1 and the Lyndon bracket basis of the free Lie algebra.

Words are plain strings of '0'/'1'.  A bracket expression is either a letter
string of length one (a leaf) or a pair ``(left, right)``.  Lie polynomials are
expanded in the free associative algebra (dicts word -> Fraction) and read
back in the Lyndon basis by leading-term elimination.
"""
from fractions import Fraction
from functools import lru_cache


def check_word(w):
    if not isinstance(w, str) or not w or set(w) - {"0", "1"}:
        raise ValueError(f"not a word over {{0,1}}: {w!r}")
    return w


def is_lyndon(w):
    check_word(w)
    return all(w < w[i:] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def _lyndon_upto(n):
    # Duval's generation, already in lexicographic order
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        out.append("".join(map(str, w)))
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()
    return tuple(out)


def lyndon_words(max_weight):
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    return list(_lyndon_upto(max_weight))


def lyndon_words_of_weight(n):
    return [w for w in _lyndon_upto(n) if len(w) == n]


def standard_factorization(w):
    """Split W = UV with V the lexicographically smallest proper suffix."""
    if not is_lyndon(w) or len(w) < 2:
        raise ValueError(f"standard factorization needs a Lyndon word of weight >= 2, got {w!r}")
    i = min(range(1, len(w)), key=lambda k: w[k:])
    return w[:i], w[i:]


@lru_cache(maxsize=None)
def lyndon_bracket(w):
    if not is_lyndon(w):
        raise ValueError(f"{w!r} is not a Lyndon word")
    if len(w) == 1:
        return w
    u, v = standard_factorization(w)
    return (lyndon_bracket(u), lyndon_bracket(v))


def bracket_str(e):
    if isinstance(e, str):
        return "X" + e
    return f"[{bracket_str(e[0])},{bracket_str(e[1])}]"


# free associative algebra -------------------------------------------------

def _assoc_mul(p, q):
    out = {}
    for a, ca in p.items():
        for b, cb in q.items():
            out[a + b] = out.get(a + b, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def _assoc_add(p, q, s=1):
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, 0) + s * c
    return {k: c for k, c in out.items() if c}


def to_associative(e):
    if isinstance(e, str):
        return {e: Fraction(1)}
    a, b = to_associative(e[0]), to_associative(e[1])
    return _assoc_add(_assoc_mul(a, b), _assoc_mul(b, a), -1)


@lru_cache(maxsize=None)
def _lyndon_poly(w):
    return to_associative(lyndon_bracket(w))


def bracket_to_lie(e):
    """Coordinates of a bracket expression in the Lyndon bracket basis."""
    p = to_associative(e)
    out = {}
    while p:
        m = min(p)  # leading monomial; always a Lyndon word for a Lie polynomial
        c = p[m]
        if not is_lyndon(m):
            raise ArithmeticError(f"leading monomial {m} is not Lyndon; input is not a Lie element")
        out[m] = c
        p = _assoc_add(p, _lyndon_poly(m), -c)
    return out


def lie_bracket_words(u, v):
    return bracket_to_lie((lyndon_bracket(u), lyndon_bracket(v)))


def alpha(u, v, w):
    """Coefficient of [w] in [[u],[v]]."""
    if len(u) + len(v) != len(w):
        return Fraction(0)
    return lie_bracket_words(u, v).get(w, Fraction(0))


@lru_cache(maxsize=None)
def alpha_table(w):
    """All pairs (U, V), U < V Lyndon, with alpha_{U,V}^W != 0."""
    out = {}
    n = len(w)
    for k in range(1, n):
        for u in lyndon_words_of_weight(k):
            for v in lyndon_words_of_weight(n - k):
                if u < v:
                    c = alpha(u, v, w)
                    if c:
                        out[(u, v)] = c
    return out


def lie_to_json(vec):
    return {w: str(c) for w, c in sorted(vec.items())}
