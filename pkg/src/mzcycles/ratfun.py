"""Exact rational functions in t, x1, x2, ... over Q.

Arithmetic and gcd cancellation come from sympy's sparse fraction field; this
module adds a canonical encoding (stable under renaming of the x's),
projective substitution and degree-one face solving.
"""
import re
from fractions import Fraction

from sympy import QQ
from sympy.polys.fields import field

NVARS = 10
VARNAMES = ["t"] + [f"x{i}" for i in range(1, NVARS + 1)]
K, *_GENS = field(",".join(VARNAMES), QQ)
R = K.ring
T = _GENS[0]
X = {i: _GENS[i] for i in range(1, NVARS + 1)}
ONE = K.one
ZERO = K.zero


class Indeterminate(ArithmeticError):
    pass


class NonlinearFace(ArithmeticError):
    pass


class Infinity:
    """The point at infinity of P^1."""
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "oo"


INF = Infinity()


def var(i):
    return T if i == 0 else X[i]


def const(q):
    q = Fraction(q)
    return K(QQ(q.numerator, q.denominator))


def variables(f):
    """Indices of the generators occurring in f (0 stands for t)."""
    out = set()
    for poly in (f.numer, f.denom):
        for mon in poly.monoms():
            out.update(i for i, e in enumerate(mon) if e)
    return out


def params(f):
    return variables(f) - {0}


def is_const(f, value=None):
    if variables(f):
        return False
    return value is None or f == const(value)


def degree(poly, i):
    return poly.degree(R.gens[i]) if poly else -1


# canonical encoding -------------------------------------------------------------

def _lead(terms):
    return max(terms, key=lambda mc: (sum(e for _, e in mc[0]), mc[0]))


def _sparse(mon):
    return tuple((i, e) for i, e in enumerate(mon) if e)


def encode(f, rename=None):
    """Hashable normal form of f, after renaming generator i to rename[i].

    Numerator and denominator are coprime (sympy cancels), and scaled so the
    leading coefficient of the denominator is 1 (graded order, t < x1 < ...).
    """
    if rename:
        def rn(mon):
            return tuple(sorted((rename.get(i, i), e) for i, e in enumerate(mon) if e))
    else:
        rn = _sparse
    num = [(rn(m), c) for m, c in f.numer.terms()]
    den = [(rn(m), c) for m, c in f.denom.terms()]
    lc = _lead(den)[1]
    num = tuple(sorted((m, c / lc) for m, c in num))
    den = tuple(sorted((m, c / lc) for m, c in den))
    return (num, den)


def _dense(sp):
    m = [0] * (NVARS + 1)
    for i, e in sp:
        m[i] = e
    return tuple(m)


def decode(code):
    num, den = code
    n = R.from_dict({_dense(m): c for m, c in num})
    d = R.from_dict({_dense(m): c for m, c in den})
    return K(n) / K(d)


def code_complexity(code):
    return sum(sum(e for _, e in m) for part in code for m, _ in part)


def rename_vars(f, mapping):
    return decode(encode(f, mapping))


# substitution -------------------------------------------------------------------

def _pw(p, k):
    return p ** k if k else R.one


def _subs_poly(poly, i, p, q, d):
    """q^d * poly(x_i := p/q) as a polynomial, d >= deg_i(poly)."""
    g = R.gens[i]
    out = R.zero
    for k in range(degree(poly, i) + 1):
        ck = poly.coeff_wrt(g, k)
        if ck:
            out += ck * _pw(p, k) * _pw(q, d - k)
    return out


def substitute(f, i, value):
    """f with generator i := value; value is a field element or INF.

    Returns a field element or INF.  Raises Indeterminate on 0/0.
    """
    num, den = f.numer, f.denom
    if value is INF:
        dn, dd = degree(num, i), degree(den, i)
        if dn > dd:
            return INF
        if dn < dd:
            return ZERO
        g = R.gens[i]
        return K(num.coeff_wrt(g, dn)) / K(den.coeff_wrt(g, dd))
    if i not in variables(f):
        return f
    p, q = value.numer, value.denom
    e = max(degree(num, i), degree(den, i))
    n = _subs_poly(num, i, p, q, e)
    d = _subs_poly(den, i, p, q, e)
    if d == 0:
        if n == 0:
            raise Indeterminate(f"0/0 substituting {VARNAMES[i]} in {f}")
        return INF
    return K.new(n, d)


def solve_face(f, target):
    """Components of {f = 0} (target 'zero') or {f = oo} (target 'inf').

    Returns a list of (var index, value, multiplicity); value is a field element
    or INF.  A component is solved for a parameter when one occurs with degree
    one; only components free of parameters are solved for t.  Each candidate
    variable is offered, the caller chooses.  Returned as a list of lists of
    alternative solutions, one inner list per component.
    """
    poly = f.numer if target == "zero" else f.denom
    comps = []
    if any(any(m) for m in poly.monoms()):
        _, factors = poly.factor_list()
        for q, mult in factors:
            qv = {i for mon in q.monoms() for i, e in enumerate(mon) if e}
            ps = sorted(i for i in qv if i != 0)
            alts = []
            cands = [i for i in ps if q.degree(R.gens[i]) == 1]
            if not ps:
                cands = [0] if q.degree(R.gens[0]) == 1 else []
            for i in cands:
                g = R.gens[i]
                a, b = q.coeff_wrt(g, 1), q.coeff_wrt(g, 0)
                alts.append((i, -K(b) / K(a), mult))
            if not alts:
                raise NonlinearFace(f"cannot solve {q} = 0 linearly")
            comps.append(alts)
    # components at infinity of the parameters
    for i in sorted(params(f)):
        dn, dd = degree(f.numer, i), degree(f.denom, i)
        if (target == "zero" and dn < dd) or (target == "inf" and dn > dd):
            comps.append([(i, INF, abs(dn - dd))])
    return comps


# text form ------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z]\w*)|(.))")


def parse(text):
    """Parse strings such as '1-t/x2' or '(x1-x2)/(x1-1)'."""
    from sympy import sympify, Symbol
    names = {n: Symbol(n) for n in VARNAMES}
    if "y" in text or "s" in text:
        raise ValueError("only t and x1..xN are accepted")
    expr = sympify(text, locals=names)
    return K.from_expr(expr)


def to_str(f):
    return str(f.as_expr()).replace("**", "^").replace(" ", "")
