"""Bar construction over a free graded-commutative algebra of cycle symbols.

Generators are the odd symbols L_W, L1_W, L_W(1) (degree 1) and the even
correction symbols C_W (degree 0), each with a differential read off the
cycle table.  Algebra elements are dicts monomial -> Fraction, a monomial
being a tuple of generator names sorted by name.  Bar elements are dicts
word -> Fraction, a word being a tuple of non-unit monomials.
"""
import itertools
import random
from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .lyndon import lyndon_words


class InfeasibleLift(ArithmeticError):
    pass


class ProjectionError(ArithmeticError):
    pass


class SymbolTableError(ValueError):
    pass


def _add(out, k, c):
    v = out.get(k, 0) + c
    if v:
        out[k] = v
    else:
        out.pop(k, None)


# symbol algebra --------------------------------------------------------------------

class SymbolAlgebra:
    def __init__(self, gens, diff):
        """gens: name -> (weight, degree); diff: name -> element."""
        self.gens = dict(gens)
        self.diff = {k: dict(v) for k, v in diff.items()}
        for name in self.gens:
            self.diff.setdefault(name, {})
        bad = [g for g in self.gens if self.d(self.diff[g])]
        if bad:
            raise SymbolTableError(f"d^2 != 0 on {bad}")

    def deg(self, mono):
        return sum(self.gens[g][1] for g in mono)

    def weight(self, mono):
        return sum(self.gens[g][0] for g in mono)

    def mono_mul(self, a, b):
        """(sign, monomial) of a*b; sign 0 when an odd generator repeats."""
        seq = list(a) + list(b)
        sign = 1
        odd = [self.gens[g][1] % 2 for g in seq]
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                if seq[i] > seq[j] and odd[i] and odd[j]:
                    sign = -sign
                if seq[i] == seq[j] and odd[i]:
                    return 0, None
        return sign, tuple(sorted(seq))

    def mul(self, x, y):
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                s, m = self.mono_mul(a, b)
                if s:
                    _add(out, m, s * ca * cb)
        return out

    def d(self, x):
        out = {}
        for mono, c in x.items():
            sign = 1
            for i, g in enumerate(mono):
                dg = self.diff[g]
                if dg:
                    term = self.mul(self.mul({mono[:i]: Fraction(sign)}, dg), {mono[i + 1:]: Fraction(1)})
                    for m, v in term.items():
                        _add(out, m, c * v)
                if self.gens[g][1] % 2:
                    sign = -sign
        return out

    def odd_generators(self):
        return sorted(g for g, (_, k) in self.gens.items() if k == 1)

    def to_json(self):
        return [{"name": g, "weight": w, "degree": k,
                 "differential": [[str(c), list(m)] for m, c in sorted(self.diff[g].items())]}
                for g, (w, k) in sorted(self.gens.items())]


def symbol_algebra(coeffs=None, max_weight=5, corrections=("01", "001", "011")):
    """The symbol table of the cycles L_W, L1_W, L_W(1) and the correction symbols C_W."""
    if coeffs is None:
        from .table import load_coefficients
        coeffs = load_coefficients()
    gens = {"L_0": (1, 1), "L_1": (1, 1)}
    diff = {}
    for w in lyndon_words(max_weight):
        if len(w) < 2:
            continue
        n = len(w)
        gens.update({f"L_{w}": (n, 1), f"L1_{w}": (n, 1), f"L_{w}(1)": (n, 1)})
        e = coeffs[w]
        diff[f"L_{w}"] = _pair_element(e["A"])
        diff[f"L1_{w}"] = _pair_element(e["A1"])
        at1 = [(c, a + "(1)", b + "(1)") for c, a, b in e["A"]
               if a.startswith("L_") and b.startswith("L_") and len(a) > 3 and len(b) > 3]
        diff[f"L_{w}(1)"] = _pair_element(at1)
    for w in corrections:
        if len(w) <= max_weight:
            gens[f"C_{w}"] = (len(w), 0)
            diff[f"C_{w}"] = {(f"L_{w}",): Fraction(1), (f"L_{w}(1)",): Fraction(-1),
                              (f"L1_{w}",): Fraction(-1)}
    return SymbolAlgebra(gens, diff)


def _pair_element(terms):
    out = {}
    for c, a, b in terms:
        if a == b:
            continue
        s = 1 if a < b else -1
        _add(out, tuple(sorted((a, b))), s * Fraction(c))
    return out


@lru_cache(maxsize=4)
def default_algebra(max_weight=5):
    return symbol_algebra(max_weight=max_weight)


# short notation ---------------------------------------------------------------------

def short_name(g):
    if g.startswith("L1_"):
        return "~" + g[3:]
    if g.startswith("C_"):
        return "C" + g[2:]
    return g[2:]


def long_name(s):
    if s.startswith("~"):
        w = s[1:]
        return "L_" + w if len(w) == 1 else "L1_" + w
    if s.startswith("C"):
        return "C_" + s[1:]
    return "L_" + s


def format_mono(m):
    return "*".join(short_name(g) for g in m)


def format_bar(u):
    if not u:
        return "0"
    parts = []
    for word, c in sorted(u.items(), key=lambda kv: (len(kv[0]), kv[0])):
        body = "[" + "|".join(format_mono(m) for m in word) + "]"
        coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
        parts.append(coef + body)
    return " + ".join(parts).replace("+ -", "- ")


def parse_bar(terms):
    """[(coeff, "0|~01|1"), ...] in short notation -> bar element."""
    out = {}
    for c, text in terms:
        word = []
        for slot in text.split("|"):
            word.append(tuple(sorted(long_name(s) for s in slot.split("*"))))
        _add(out, tuple(word), Fraction(c))
    return out


def gen(name):
    return {((name,),): Fraction(1)}


# bar operations -----------------------------------------------------------------------

def bar_degree(alg, word):
    return sum(alg.deg(m) - 1 for m in word)


def bar_add(*us, coeffs=None):
    out = {}
    coeffs = coeffs or [1] * len(us)
    for u, k in zip(us, coeffs):
        for w, c in u.items():
            _add(out, w, k * c)
    return out


def bar_scale(u, k):
    return {w: Fraction(k) * c for w, c in u.items() if k}


def _shuffle_words(alg, a, b):
    n, m = len(a), len(b)
    sa = [alg.deg(x) - 1 for x in a]
    sb = [alg.deg(x) - 1 for x in b]
    out = {}
    for pos in itertools.combinations(range(n + m), n):
        word, ia, ib, sign = [], 0, 0, 0
        posset = set(pos)
        for k in range(n + m):
            if k in posset:
                # a_ia jumps over the remaining b's already placed
                sign += sa[ia] * sum(sb[:ib])
                word.append(a[ia])
                ia += 1
            else:
                word.append(b[ib])
                ib += 1
        _add(out, tuple(word), Fraction(-1 if sign % 2 else 1))
    return out


def shuffle(alg, u, v):
    out = {}
    for a, ca in u.items():
        for b, cb in v.items():
            for w, s in _shuffle_words(alg, a, b).items():
                _add(out, w, s * ca * cb)
    return out


def deconcatenate(u, reduced=False):
    out = {}
    for w, c in u.items():
        rng = range(1, len(w)) if reduced else range(len(w) + 1)
        for i in rng:
            _add(out, (w[:i], w[i:]), c)
    return out


def D1(alg, u):
    out = {}
    for w, c in u.items():
        eta = 0
        for i, a in enumerate(w):
            sign = -1 if eta % 2 == 0 else 1
            for m, v in alg.d({a: Fraction(1)}).items():
                _add(out, w[:i] + (m,) + w[i + 1:], sign * c * v)
            eta += alg.deg(a) - 1
    return out


def D2(alg, u):
    out = {}
    for w, c in u.items():
        eta = 0
        for i in range(len(w) - 1):
            eta += alg.deg(w[i]) - 1
            s, m = alg.mono_mul(w[i], w[i + 1])
            if s:
                sign = -1 if eta % 2 == 0 else 1
                _add(out, w[:i] + (m,) + w[i + 2:], sign * s * c)
    return out


def d_bar(alg, u):
    return bar_add(D1(alg, u), D2(alg, u))


def tensor_shuffle(alg, x, y):
    """Product on B (x) B: (a(x)b)(c(x)d) = (-1)^{|b||c|} (a sh c) (x) (b sh d)."""
    out = {}
    for (a, b), cx in x.items():
        for (c, d), cy in y.items():
            s = -1 if (bar_degree(alg, b) * bar_degree(alg, c)) % 2 else 1
            left = _shuffle_words(alg, a, c)
            right = _shuffle_words(alg, b, d)
            for l, cl in left.items():
                for r, cr in right.items():
                    _add(out, (l, r), s * cx * cy * cl * cr)
    return out


def random_bar_element(alg, rng, max_len=4, n_terms=3):
    gs = sorted(alg.gens)
    out = {}
    for _ in range(n_terms):
        word = tuple(tuple(sorted(rng.sample(gs, rng.choice((1, 1, 1, 2)))))
                     for _ in range(rng.randint(1, max_len)))
        _add(out, word, Fraction(rng.randint(-3, 3) or 1))
    return out


# linear algebra ---------------------------------------------------------------------------

def _solve(columns, rhs):
    """Solution x of sum_j x_j columns[j] = rhs, free variables 0, or None."""
    rows = sorted(set().union(rhs, *columns), key=repr)
    ri = {r: i for i, r in enumerate(rows)}
    n = len(columns)
    data = {}
    for j, col in enumerate(columns):
        for r, v in col.items():
            data.setdefault(ri[r], {})[j] = QQ(v.numerator, v.denominator)
    for r, v in rhs.items():
        data.setdefault(ri[r], {})[n] = QQ(v.numerator, v.denominator)
    if not rows:
        return [Fraction(0)] * n
    M = DomainMatrix(data, (len(rows), n + 1), QQ)
    R, pivots = M.rref()
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    rep = R.rep.to_sdm() if hasattr(R.rep, "to_sdm") else R.rep
    for i, p in enumerate(pivots):
        v = rep.get(i, {}).get(n, QQ(0))
        x[p] = Fraction(int(v.numerator), int(v.denominator))
    return x


def _closure(alg, names):
    seen, todo = set(), list(names)
    while todo:
        g = todo.pop()
        for m in alg.diff[g]:
            for h in m:
                if h not in seen:
                    seen.add(h)
                    todo.append(h)
    return seen


def _compositions(gs, weights, total, min_len):
    def rec(rest, prefix):
        if rest == 0:
            if len(prefix) >= min_len:
                yield tuple(prefix)
            return
        for g in gs:
            if weights[g] <= rest:
                yield from rec(rest - weights[g], prefix + [g])
    return rec(total, [])


@lru_cache(maxsize=None)
def _lift_cached(alg_id, name):
    alg = _ALGEBRAS[alg_id]
    w0, k = alg.gens[name]
    if k != 1:
        raise ValueError(f"{name} has degree {k}, lifts are for degree 1 symbols")
    lead = gen(name)
    gs = sorted(g for g in _closure(alg, [name]) if alg.gens[g][1] == 1)
    weights = {g: alg.gens[g][0] for g in gs}
    words = sorted(_compositions(gs, weights, w0, 2), key=lambda ws: (len(ws), ws))
    words = [tuple((g,) for g in ws) for ws in words]
    columns = [d_bar(alg, {w: Fraction(1)}) for w in words]
    x = _solve(columns, bar_scale(d_bar(alg, lead), -1))
    if x is None:
        raise InfeasibleLift(name)
    out = dict(lead)
    for w, c in zip(words, x):
        if c:
            out[w] = c
    return out


_ALGEBRAS = {}


def bar_lift(alg, name):
    """Closed bar-degree 0 element [name] + (tensor degree >= 2), by exact linear solving."""
    _ALGEBRAS[id(alg)] = alg
    return dict(_lift_cached(id(alg), name))


# indecomposables ----------------------------------------------------------------------------

def _letters_key(word):
    return tuple(sorted(word))


@lru_cache(maxsize=None)
def _decomposables(alg_id, letters):
    """Spanning shuffles and the rref basis of decomposables on one letter multiset."""
    alg = _ALGEBRAS[alg_id]
    n = len(letters)
    spans = []
    seen = set()
    for k in range(1, n // 2 + 1):
        for idx in itertools.combinations(range(n), k):
            left = tuple(letters[i] for i in idx)
            right = tuple(letters[i] for i in range(n) if i not in idx)
            for a in sorted(set(itertools.permutations(left))):
                for b in sorted(set(itertools.permutations(right))):
                    if (a, b) in seen or (b, a) in seen:
                        continue
                    seen.add((a, b))
                    spans.append((a, b, _shuffle_words(alg, a, b)))
    words = sorted(set(itertools.permutations(letters)))
    wi = {w: i for i, w in enumerate(words)}
    data = {}
    for r, (_, _, v) in enumerate(spans):
        for w, c in v.items():
            data.setdefault(r, {})[wi[w]] = QQ(c.numerator, c.denominator)
    basis = []
    if spans:
        R, pivots = DomainMatrix(data, (len(spans), len(words)), QQ).rref()
        rep = R.rep.to_sdm() if hasattr(R.rep, "to_sdm") else R.rep
        for i, p in enumerate(pivots):
            row = {words[j]: Fraction(int(v.numerator), int(v.denominator)) for j, v in rep.get(i, {}).items()}
            basis.append((words[p], row))
    return spans, basis


def normal_form(alg, u):
    """Representative of u modulo the span of shuffle products."""
    _ALGEBRAS[id(alg)] = alg
    out = dict(u)
    groups = {}
    for w in u:
        groups.setdefault(_letters_key(w), []).append(w)
    for letters in groups:
        if len(letters) < 2:
            continue
        _, basis = _decomposables(id(alg), letters)
        for p, row in basis:
            c = out.get(p, 0)
            if c:
                for w, v in row.items():
                    _add(out, w, -c * v)
    return out


def shuffle_span_membership(alg, u):
    """(True, certificate) with u = sum c (a sh b), or (False, None)."""
    _ALGEBRAS[id(alg)] = alg
    if not u:
        return True, []
    cert = []
    groups = {}
    for w, c in u.items():
        groups.setdefault(_letters_key(w), {})[w] = c
    for letters, part in sorted(groups.items()):
        if len(letters) < 2:
            return False, None
        spans, _ = _decomposables(id(alg), letters)
        x = _solve([v for _, _, v in spans], part)
        if x is None:
            return False, None
        cert += [(c, a, b) for (a, b, _), c in zip(spans, x) if c]
    return True, cert


# cobracket -------------------------------------------------------------------------------------

def _tensor_nf(alg, t):
    """(pi x pi)(t): project both legs modulo shuffles."""
    by_right = {}
    for (a, b), c in t.items():
        by_right.setdefault(b, {})[a] = c
    half = {}
    for b, left in by_right.items():
        for a, c in normal_form(alg, left).items():
            half.setdefault(a, {})[b] = c
    out = {}
    for a, right in half.items():
        for b, c in normal_form(alg, right).items():
            _add(out, (a, b), c)
    return out


def _tau(alg, t):
    out = {}
    for (a, b), c in t.items():
        s = -1 if (bar_degree(alg, a) * bar_degree(alg, b)) % 2 else 1
        _add(out, (b, a), s * c)
    return out


def _tensor(x, y):
    return {(a, b): ca * cb for a, ca in x.items() for b, cb in y.items()}


def cobracket(alg, u, generators=None):
    """(Delta' - tau Delta')(u) modulo products, as {(g, h): c} meaning sum c * g^h,
    where g^h = g(x)h - h(x)g on the lifts of the generators g < h."""
    dlt = deconcatenate(u, reduced=True)
    cob = bar_add(dlt, _tau(alg, dlt), coeffs=[1, -1])
    target = _tensor_nf(alg, cob)
    if generators is None:
        generators = sorted({m[0] for w in u for m in w if len(m) == 1 and alg.gens[m[0]][1] == 1})
    total = max((sum(alg.weight(m) for m in w) for w in u), default=0)
    gs = [g for g in generators if alg.gens[g][0] < total]
    lifts = {g: normal_form(alg, bar_lift(alg, g)) for g in gs}
    pairs = [(g, h) for g, h in itertools.combinations(sorted(gs), 2)
             if alg.gens[g][0] + alg.gens[h][0] == total]
    cols = []
    for g, h in pairs:
        cols.append(bar_add(_tensor(lifts[g], lifts[h]), _tensor(lifts[h], lifts[g]), coeffs=[1, -1]))
    x = _solve(cols, target)
    if x is None:
        raise ProjectionError("a coproduct leg is not a combination of lifted generators")
    return {p: c for p, c in zip(pairs, x) if c}


def wedge_from_terms(terms, sign=1):
    """{(g, h): c} from (coefficient, g, h) products with g^h = -h^g."""
    out = {}
    for c, a, b in terms:
        if a == b:
            continue
        if a > b:
            a, b, c = b, a, -Fraction(c)
        _add(out, (a, b), sign * Fraction(c))
    return out


def substitute_wedge(w, rules):
    """Apply linear substitutions g -> {h: c} to both wedge factors."""
    out = {}
    for (a, b), c in w.items():
        for ga, ca in rules.get(a, {a: Fraction(1)}).items():
            for gb, cb in rules.get(b, {b: Fraction(1)}).items():
                if ga == gb:
                    continue
                if ga < gb:
                    _add(out, (ga, gb), c * ca * cb)
                else:
                    _add(out, (gb, ga), -c * ca * cb)
    return out


def format_wedge(w):
    if not w:
        return "0"
    parts = []
    for (a, b), c in sorted(w.items()):
        coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
        parts.append(f"{coef}{short_name(a)}^{short_name(b)}")
    return " + ".join(parts).replace("+ -", "- ")


def relation_L1_equals_difference(alg, w):
    """Residual of  L^B_w - L^B_w(1) - L1^B_w + d_B([C_w])  in the bar complex."""
    if f"C_{w}" not in alg.gens:
        raise KeyError(f"no correction symbol C_{w}")
    lhs = bar_add(bar_lift(alg, f"L_{w}"), bar_lift(alg, f"L_{w}(1)"), bar_lift(alg, f"L1_{w}"),
                  coeffs=[1, -1, -1])
    return bar_add(lhs, d_bar(alg, gen(f"C_{w}")))


def random_elements(alg, n, seed=0):
    rng = random.Random(seed)
    return [random_bar_element(alg, rng) for _ in range(n)]
