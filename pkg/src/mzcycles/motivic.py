"""Motivic iterated integrals I(a_0; a_1..a_n; a_{n+1}) with arguments in {0, 1, x}.

Modulo products every symbol is rewritten into the basis of I(0; w; 1) with w
a Lyndon word for the letter order 0 < 1 < x, together with the logarithm
I(0; 0; x).  Rules, tried in this order on each symbol:
  unit        I(a; b) = 1
  neutral     I(a; w; a) = 0
  regularize  I(0; 0; 1) = I(0; 1; 1) = 0
  rescale     I(0; w; x) = I(0; w/x; 1) if some letter is nonzero
  inversion   I(b; w; 0) = (-1)^n I(0; reversed w; b)
  path        I(a; w; b) = I(a; w; 0) + I(0; w; b) for a, b nonzero
  shuffle     a non-Lyndon middle word is a shuffle product plus smaller words
"""
import itertools
import re
from collections import namedtuple
from fractions import Fraction

ARGS = ("0", "1", "x")


class UnreducibleTerm(ValueError):
    pass


class IISymbol(namedtuple("IISymbol", "left middle right")):
    __slots__ = ()

    def __new__(cls, left, middle, right):
        middle = tuple(middle)
        for a in (left, right, *middle):
            if a not in ARGS:
                raise ValueError(f"argument {a!r} not in {ARGS}")
        return super().__new__(cls, left, middle, right)

    @property
    def depth(self):
        return len(self.middle)

    def __str__(self):
        if not self.middle:
            return f"I({self.left};{self.right})"
        return f"I({self.left};{','.join(self.middle)};{self.right})"


_SYM = re.compile(r"I\(\s*([^;()]*?)\s*;\s*([^;()]*?)\s*(?:;\s*([^;()]*?)\s*)?\)")


def parse_symbol(text):
    m = _SYM.fullmatch(text.strip())
    if not m:
        raise ValueError(f"cannot parse {text!r}")
    a, mid, b = m.groups()
    if b is None:
        return IISymbol(a, (), mid)
    return IISymbol(a, [s.strip() for s in mid.split(",")] if mid else (), b)


def parse_expr(text):
    """'I(0;x;1) - 2*I(0;0,x;1)*I(0;x;1)' -> IIExpr."""
    out = {}
    text = text.replace(" ", "")
    for sign, body in re.findall(r"([+-]?)((?:[^+\-()]|\([^()]*\))+)", text):
        coeff, factors = Fraction(1), []
        for part in re.findall(r"I\([^()]*\)|[0-9/]+", body):
            if part.startswith("I("):
                factors.append(parse_symbol(part))
            else:
                coeff *= Fraction(part)
        if sign == "-":
            coeff = -coeff
        _add(out, tuple(sorted(factors)), coeff)
    return out


def _add(out, k, c):
    v = out.get(k, 0) + c
    if v:
        out[k] = v
    else:
        out.pop(k, None)


def format_expr(e):
    if not e:
        return "0"
    parts = []
    for k, c in sorted(e.items(), key=lambda kv: (len(kv[0]), [str(s) for s in kv[0]])):
        body = "*".join(str(s) for s in k) or "1"
        coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
        parts.append(coef + body)
    return " + ".join(parts).replace("+ -", "- ")


def format_tensor(t):
    if not t:
        return "0"
    parts = []
    for (a, b), c in sorted(t.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]))):
        coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
        parts.append(f"{coef}{a}(x){b}")
    return " + ".join(parts).replace("+ -", "- ")


# Lyndon words over 0 < 1 < x ---------------------------------------------------------------

def _is_lyndon(w):
    return bool(w) and all(w < w[i:] for i in range(1, len(w)))


def cfl_factorization(w):
    """Chen-Fox-Lyndon factorization w = l_1 ... l_k with l_1 >= ... >= l_k (Duval)."""
    w = tuple(w)
    out, i, n = [], 0, len(w)
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            out.append(w[i:i + j - k])
            i += j - k
    return out


def shuffle_words(u, v):
    out = {}
    n, m = len(u), len(v)
    for pos in itertools.combinations(range(n + m), n):
        word, iu, iv = [], 0, 0
        ps = set(pos)
        for k in range(n + m):
            if k in ps:
                word.append(u[iu])
                iu += 1
            else:
                word.append(v[iv])
                iv += 1
        _add(out, tuple(word), 1)
    return out


def _shuffle_all(factors):
    acc = {(): Fraction(1)}
    for f in factors:
        nxt = {}
        for w, c in acc.items():
            for v, d in shuffle_words(w, f).items():
                _add(nxt, v, c * d)
        acc = nxt
    return acc


# rewriting ------------------------------------------------------------------------------------

def _rule(s):
    """(rule name, [(coeff, symbol or None for the unit)]) or None if s is canonical."""
    a, w, b = s
    n = len(w)
    if n == 0:
        return "unit", [(Fraction(1), None)]
    if a == b:
        return "neutral", []
    if (a, w, b) in (("0", ("0",), "1"), ("0", ("1",), "1")):
        return "regularize", []
    if a == "0" and b == "x":
        if any(c != "0" for c in w):
            if "1" in w:
                raise UnreducibleTerm(f"{s}: rescaling gives the argument 1/x")
            return "rescale", [(Fraction(1), IISymbol("0", ["1" if c == "x" else "0" for c in w], "1"))]
    elif b == "0":
        return "inversion", [(Fraction((-1) ** n), IISymbol("0", w[::-1], a))]
    elif a != "0":
        return "path", [(Fraction(1), IISymbol(a, w, "0")), (Fraction(1), IISymbol("0", w, b))]
    if not _is_lyndon(w):
        fs = cfl_factorization(w)
        if len(fs) == 1:  # a power of a letter-free word cannot occur for nonempty w
            raise UnreducibleTerm(str(s))
        sh = _shuffle_all(fs)
        lead = sh.pop(w)
        return "shuffle", [(-c / lead, IISymbol(a, v, b)) for v, c in sorted(sh.items())]
    if (a, b) == ("0", "1") or (a, b, w) == ("0", "x", ("0",)):
        return None
    raise UnreducibleTerm(str(s))


def normalize_symbol(s, log=None):
    """Linear combination {symbol or None: coeff} of basis symbols, modulo products."""
    out = {}
    todo = [(Fraction(1), s)]
    while todo:
        c, t = todo.pop()
        if t is None:
            _add(out, None, c)
            continue
        r = _rule(t)
        if r is None:
            _add(out, t, c)
            continue
        name, terms = r
        if log is not None:
            log.append((name, str(t), format_expr({(() if u is None else (u,)): k for k, u in terms})))
        todo += [(c * k, u) for k, u in terms]
    return out


def normalize_mod_products(e, log=None):
    """IIExpr -> IIExpr whose keys are single basis symbols (or () for the unit)."""
    out = {}
    for factors, c in e.items():
        pos = [f for f in factors if f.depth > 0]
        if len(pos) >= 2:
            if log is not None:
                log.append(("product", "*".join(map(str, factors)), "0"))
            continue
        if not pos:
            _add(out, (), c)
            continue
        for t, k in normalize_symbol(pos[0], log).items():
            _add(out, () if t is None else (t,), c * k)
    return out


def coproduct_full(s):
    """Goncharov's coproduct: {(left factors, right factors): coeff}, 2^n terms."""
    a = (s.left,) + s.middle + (s.right,)
    n = s.depth
    out = {}
    for r in range(n + 1):
        for ks in itertools.combinations(range(1, n + 1), r):
            left = IISymbol(a[0], [a[k] for k in ks], a[n + 1])
            bounds = (0,) + ks + (n + 1,)
            right = tuple(sorted(IISymbol(a[p], a[p + 1:q], a[q]) for p, q in zip(bounds, bounds[1:])))
            _add(out, ((left,), right), Fraction(1))
    return out


def cords(n):
    return [(k, l) for k in range(n + 1) for l in range(k + 2, n + 2) if (k, l) != (0, n + 1)]


def reduced_coproduct_mod_products(s, log=None):
    """Sum over nontrivial cords (k, l) of I(a_0; a_1..a_k, a_l..a_n; a_{n+1}) (x) I(a_k; ..; a_l),
    legs normalized modulo products; {(left basis symbol, right basis symbol): coeff}."""
    a = (s.left,) + s.middle + (s.right,)
    n = s.depth
    out = {}
    for k, l in cords(n):
        left = IISymbol(a[0], a[1:k + 1] + a[l:n + 1], a[n + 1])
        right = IISymbol(a[k], a[k + 1:l], a[l])
        if log is not None:
            log.append(("cord", f"({k},{l})", f"{left}(x){right}"))
        nl = normalize_symbol(left, log)
        nr = normalize_symbol(right, log)
        for u, cu in nl.items():
            for v, cv in nr.items():
                if u is None or v is None:
                    continue
                _add(out, (u, v), cu * cv)
    return out


def shuffle_product(s1, s2):
    """I(a; u; b) I(a; v; b) as the shuffle sum of symbols."""
    if (s1.left, s1.right) != (s2.left, s2.right):
        raise ValueError("shuffle needs equal boundaries")
    out = {}
    for w, c in shuffle_words(s1.middle, s2.middle).items():
        _add(out, (IISymbol(s1.left, w, s1.right),), Fraction(c))
    return out


def invert(s):
    return Fraction((-1) ** s.depth), IISymbol(s.right, s.middle[::-1], s.left)


def parse_tensor(text):
    """'I(0;0,x;1)(x)I(0;x;1) + ...' -> {(left, right): coeff}."""
    out = {}
    for sign, coef, l, r in re.findall(r"([+-]?)\s*(?:([0-9/]+)\*)?(I\([^()]*\))\(x\)(I\([^()]*\))",
                                       text.replace(" ", "")):
        c = Fraction(coef) if coef else Fraction(1)
        _add(out, (parse_symbol(l), parse_symbol(r)), -c if sign == "-" else c)
    return out


# dictionary to the bar-construction generators ------------------------------------------------

def to_bar_generator(s):
    """(coeff, generator name) for a basis symbol: I(0;w;1) with x in w -> L_{w, x->1},
    I(0;w;1) over {0,1} -> L_w(1), I(0;0;x) -> -L_0."""
    if s == IISymbol("0", ("0",), "x"):
        return Fraction(-1), "L_0"
    if (s.left, s.right) != ("0", "1") or not _is_lyndon(s.middle):
        raise UnreducibleTerm(f"{s} is not a basis symbol")
    word = "".join("1" if c == "x" else c for c in s.middle)
    if "x" in s.middle:
        return Fraction(1), f"L_{word}"
    return Fraction(1), f"L_{word}(1)"


def motivic_wedge(t):
    """Antisymmetrize a reduced coproduct {(u, v): c} into {(g, h): c} with g < h, g^h = -h^g."""
    out = {}
    for (u, v), c in t.items():
        cu, g = to_bar_generator(u)
        cv, h = to_bar_generator(v)
        if g == h:
            continue
        k = c * cu * cv
        if g > h:
            g, h, k = h, g, -k
        _add(out, (g, h), k)
    return out
