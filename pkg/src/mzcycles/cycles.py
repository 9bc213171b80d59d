"""Parametrized cycles over A^1 and X = P^1 - {0,1,oo}.

A term is a tuple of coordinate functions in t and parameters x_i, read as
the image of (t, x) -> (t, f_1, ..., f_n) in base x cube^n.  A fiber term
Fiber(c, Z) lives over the point t = c and has no t in its coordinates.

The Alt projector is modelled by its consequences only: coordinates are
sorted with the permutation sign, parameters are renamed canonically, and
terms with repeated coordinates (or an odd automorphism) vanish.
"""
import itertools
import random
from fractions import Fraction

from . import ratfun as rf
from .ratfun import INF, K, T, X, Indeterminate


class UnsupportedBaseConstraint(ValueError):
    pass


class Degenerate(ArithmeticError):
    pass


class PreconditionError(ValueError):
    pass


def _is_one(f):
    return f is not INF and f == rf.ONE


def _is_bad(f):
    return f is INF or f == rf.ZERO


def _eval_poly(poly, point):
    total = Fraction(0)
    for mon, c in poly.terms():
        v = Fraction(int(c.numerator), int(c.denominator))
        for i, e in enumerate(mon):
            if e:
                v *= point[i] ** e
        total += v
    return total


def _rank(rows):
    rows = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                q = rows[r][col] / rows[rank][col]
                rows[r] = [a - q * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _value_and_grad(poly, point, ps):
    val = Fraction(0)
    grad = [Fraction(0)] * len(ps)
    for mon, c in poly.terms():
        v = Fraction(int(c.numerator), int(c.denominator))
        for i, e in enumerate(mon):
            if e:
                v *= point[i] ** e
        val += v
        for j, p in enumerate(ps):
            e = mon[p]
            if e:
                grad[j] += v * e / point[p]
    return val, grad


def _full_rank(coords, ps):
    """Generic rank of the Jacobian in the parameters (exact, random rational point)."""
    if not ps:
        return True
    rng = random.Random(len(coords) * 7919 + len(ps))
    for _ in range(6):
        point = [Fraction(rng.randint(2, 97), rng.randint(2, 97)) for _ in range(rf.NVARS + 1)]
        rows = []
        for f in coords:
            n, dn = _value_and_grad(f.numer, point, ps)
            d, dd = _value_and_grad(f.denom, point, ps)
            if d == 0:
                break
            rows.append([(a * d - n * b) / (d * d) for a, b in zip(dn, dd)])
        else:
            return _rank(rows) == len(ps)
    return True


def normalize_coords(coords):
    """Canonical form of one term.

    Returns (sign, key) with sign 0 for a vanishing term.  Raises Degenerate
    when no coordinate is 1 but some coordinate is 0 or oo.
    """
    if any(_is_one(f) for f in coords):
        return 0, None
    if any(_is_bad(f) for f in coords):
        raise Degenerate("coordinate identically 0 or oo")
    ps = sorted(set().union(*(rf.params(f) for f in coords))) if coords else []
    if not _full_rank(coords, ps):
        return 0, None
    best, signs = None, set()
    targets = list(range(1, len(ps) + 1))
    for perm in itertools.permutations(targets):
        mapping = dict(zip(ps, perm))
        codes = [rf.encode(f, mapping) for f in coords]
        order = sorted(range(len(codes)), key=lambda i: codes[i])
        key = tuple(codes[i] for i in order)
        if any(a == b for a, b in zip(key, key[1:])):
            return 0, None
        s = _perm_parity(order)
        if best is None or key < best:
            best, signs = key, {s}
        elif key == best:
            signs.add(s)
    if len(signs) > 1:
        return 0, None
    return signs.pop(), best


def _perm_parity(order):
    sign, seen = 1, [False] * len(order)
    for i in range(len(order)):
        if seen[i]:
            continue
        j, n = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            n += 1
        if n % 2 == 0:
            sign = -sign
    return sign


class CycleSum:
    """Formal Q-combination of canonical parametrized cycles over a base."""

    def __init__(self, base="X", terms=None, flags=None):
        if base not in ("X", "A1"):
            raise ValueError(base)
        self.base = base
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}
        self.flags = list(flags or [])

    # construction ---------------------------------------------------------------
    @classmethod
    def cycle(cls, coords, base="X", coeff=1, point=None):
        out = cls(base)
        out._add_coords(coords, Fraction(coeff), point)
        return out

    @classmethod
    def parse(cls, text, base="X", coeff=1):
        """'[t; 1-t/x1, x1, 1-x1]' style input, optionally prefixed by '-'."""
        text = text.strip()
        if text.startswith("-"):
            coeff, text = -Fraction(coeff), text[1:].strip()
        body = text.strip("[]")
        head, _, rest = body.partition(";")
        coords = [rf.parse(s) for s in _split_top(rest)]
        return cls.cycle(coords, base, coeff)

    def _add_coords(self, coords, coeff, point=None):
        try:
            s, key = normalize_coords(list(coords))
        except Degenerate as exc:
            self.flags.append(("degenerate", str(exc)))
            return
        if s:
            k = (point, key)
            v = self.terms.get(k, 0) + s * coeff
            if v:
                self.terms[k] = v
            else:
                self.terms.pop(k, None)

    def copy(self, base=None):
        return CycleSum(base or self.base, dict(self.terms), self.flags)

    # vector space ------------------------------------------------------------------
    def _check(self, other):
        if self.base != other.base:
            raise ValueError(f"base mismatch {self.base} / {other.base}")

    def __add__(self, other):
        self._check(other)
        out = self.copy()
        for k, c in other.terms.items():
            v = out.terms.get(k, 0) + c
            if v:
                out.terms[k] = v
            else:
                out.terms.pop(k, None)
        out.flags += other.flags
        return out

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return CycleSum(self.base, {k: Fraction(c) * v for k, v in self.terms.items()}, self.flags)

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, CycleSum):
            return self.scale(other)
        return product(self, other)

    def __eq__(self, other):
        return isinstance(other, CycleSum) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        for (point, key), c in sorted(self.terms.items(), key=lambda kv: repr(kv[0])):
            yield point, [rf.decode(code) for code in key], c

    def restrict(self):
        """Restriction to X: fiber terms at 0 and 1 lie outside X."""
        return CycleSum("X", {k: c for k, c in self.terms.items() if k[0] is None}, self.flags)

    def __repr__(self):
        return format_cyclesum(self)


def _split_top(s):
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return out


def format_term(point, coords):
    head = "t" if point is None else f"t={point}"
    return "[" + head + "; " + ", ".join(rf.to_str(f) for f in coords) + "]"


def format_cyclesum(c):
    if not c.terms:
        return "0"
    return " + ".join(f"({coef})*{format_term(p, cs)}" for p, cs, coef in c.items())


# products -------------------------------------------------------------------------

def _fresh_mapping(coords, used):
    ps = sorted(set().union(*(rf.params(f) for f in coords))) if coords else []
    free = (i for i in range(1, rf.NVARS + 1) if i not in used)
    return {p: next(free) for p in ps}


def _used(coords):
    return set().union(*(rf.params(f) for f in coords)) if coords else set()


def _at(coords, point):
    return [rf.substitute(f, 0, rf.const(point)) for f in coords]


def product(a, b):
    a._check(b)
    out = CycleSum(a.base, flags=a.flags + b.flags)
    for pa, ca, xa in a.items():
        for pb, cb, xb in b.items():
            mapping = _fresh_mapping(cb, _used(ca))
            cb = [rf.rename_vars(f, mapping) for f in cb]
            if pa is not None and pb is not None and pa != pb:
                continue
            point = pa if pa is not None else pb
            try:
                if point is not None:
                    ca, cb = _at(ca, point), _at(cb, point)
            except Indeterminate as exc:
                out.flags.append(("degenerate", str(exc)))
                continue
            out._add_coords(ca + cb, xa * xb, point)
    return out


# boundary ------------------------------------------------------------------------

def _face_options(coords, i, target, point, base):
    """Alternative candidate (new coords, new point) lists for each face component."""
    f = coords[i]
    others = coords[:i] + coords[i + 1:]
    comps = rf.solve_face(f, target)
    result = []
    for alts in comps:
        options = []
        for var, value, mult in alts:
            if var == 0:
                if value is INF:
                    continue
                if rf.variables(value):
                    continue
                c = Fraction(str(value.numer.LC)) / Fraction(str(value.denom.LC)) if value.numer else Fraction(0)
                if base == "X":
                    if c in (0, 1):
                        continue
                    raise UnsupportedBaseConstraint(f"face forces t = {c}")
                options.append((_subst_all(others, 0, value), c, mult))
            else:
                options.append((_subst_all(others, var, value), point, mult))
        if options:
            result.append(options)
    return result


def _subst_all(coords, var, value):
    out = []
    for f in coords:
        try:
            out.append(rf.substitute(f, var, value))
        except Indeterminate:
            return None
    return out


def _choose(options):
    """Among alternative parametrizations of one face, keep the simplest."""
    scored = []
    for new, point, mult in options:
        if new is None:
            scored.append(((1, 0, ()), new, point, mult, 0, None))
            continue
        try:
            s, key = normalize_coords(new)
        except Degenerate:
            scored.append(((2, 0, ()), new, point, mult, 0, None))
            continue
        if s == 0:
            return new, point, mult, 0, None
        cx = sum(rf.code_complexity(c) for c in key)
        scored.append(((0, cx, key), new, point, mult, s, key))
    scored.sort(key=lambda r: r[0])
    _, new, point, mult, s, key = scored[0]
    return new, point, mult, s, key


def boundary(c):
    out = CycleSum(c.base, flags=list(c.flags))
    for point, coords, coeff in c.items():
        for i in range(len(coords)):
            for target, tsign in (("zero", 1), ("inf", -1)):
                for options in _face_options(coords, i, target, point, c.base):
                    new, npoint, mult, s, key = _choose(options)
                    if new is None:
                        out.flags.append(("degenerate", f"0/0 on face {i + 1} {target}"))
                        continue
                    if key is None:
                        if s == 0 and any(_is_one(f) for f in new):
                            continue
                        try:
                            normalize_coords(new)
                        except Degenerate as exc:
                            out.flags.append(("degenerate", f"face {i + 1} {target}: {exc}"))
                        continue
                    k = (npoint, key)
                    v = out.terms.get(k, 0) + coeff * s * tsign * mult * (-1) ** i
                    if v:
                        out.terms[k] = v
                    else:
                        out.terms.pop(k, None)
    return out


# fibers and pullbacks ------------------------------------------------------------

def fiber(c, point):
    if c.base != "A1":
        raise ValueError("fibers are taken over A1")
    out = CycleSum("A1", flags=list(c.flags))
    for p, coords, coeff in c.items():
        if p is not None:
            continue
        try:
            new = _at(coords, point)
        except Indeterminate as exc:
            out.flags.append(("degenerate", str(exc)))
            continue
        out._add_coords(new, coeff, Fraction(point))
    return out


def pullback_const(c):
    """p^*: fiber terms become constant cycles over A1."""
    out = CycleSum("A1", flags=list(c.flags))
    for p, coords, coeff in c.items():
        if p is None:
            raise ValueError("p^* applies to fiber terms")
        out._add_coords(coords, coeff)
    return out


def specialize(c, point=1):
    """L(1) = p^* i_1^* L: the constant cycle given by the fiber at a point."""
    return pullback_const(fiber(c, point))


def _anharmonic(x):
    return [x, 1 - x, 1 / x, 1 / (1 - x), x / (x - 1), (x - 1) / x]


def anharmonic_normal(c):
    """Identify one-parameter terms under the six automorphisms of P^1 - {0,1,oo}
    acting on the parameter.  The image of a term does not change, so this is a
    finer normal form for comparing cycles given by different parametrizations."""
    out = CycleSum(c.base, flags=list(c.flags))
    for p, coords, coeff in c.items():
        ps = _used(coords)
        if len(ps) != 1:
            out._add_coords(coords, coeff, p)
            continue
        i = ps.pop()
        best = None
        for value in _anharmonic(X[i]):
            s, key = normalize_coords([rf.substitute(f, i, value) for f in coords])
            if best is None or key < best[1]:
                best = (s, key)
        k = (p, best[1])
        v = out.terms.get(k, 0) + best[0] * coeff
        if v:
            out.terms[k] = v
        else:
            out.terms.pop(k, None)
    return out


def _pull(c, kind):
    out = CycleSum("A1", flags=list(c.flags))
    for p, coords, coeff in c.items():
        used = _used(coords)
        if p is None:
            n = next(i for i in range(1, rf.NVARS + 1) if i not in used)
            moved = [rf.rename_vars(f, {0: n}) for f in coords]
            x = X[n]
            head = 1 - T / x if kind == "mu" else (x - T) / (x - 1)
            out._add_coords([head] + moved, coeff)
        else:
            # the fiber over t = p sits over x_new = p
            if kind == "mu":
                if p == 0:
                    continue
                head = 1 - T / rf.const(p)
            else:
                if p == 1:
                    continue
                head = (rf.const(p) - T) / (rf.const(p) - 1)
            out._add_coords([head] + coords, coeff)
    return out


def mu_star(c, check=True):
    if c.base != "A1":
        raise ValueError("mu* acts on cycles over A1")
    if check:
        _require_zero(fiber(c, 0), "fiber at 0")
        _require_zero(boundary(c), "boundary")
    return _pull(c, "mu")


def nu_star(c, check=True):
    if c.base != "A1":
        raise ValueError("nu* acts on cycles over A1")
    if check:
        _require_zero(fiber(c, 1), "fiber at 1")
        _require_zero(boundary(c), "boundary")
    return _pull(c, "nu")


def _require_zero(c, what):
    if c:
        raise PreconditionError(f"{what} is nonzero: {c}")


def homotopy_check(c, kind="mu"):
    """Residual of  d pull(c) + pull(d c) - (c - p^* i^* c)  (zero when the identity holds)."""
    point = 0 if kind == "mu" else 1
    pull = (lambda z: _pull(z, kind))
    lhs = boundary(pull(c)) + pull(boundary(c))
    rhs = c - pullback_const(fiber(c, point))
    return lhs - rhs


def lemma_L0L1_product(c, eps):
    """Fiber of c at eps, checked against d(L_eps) c = d(L_eps c) + L_eps d(c)."""
    le = L0_bar() if eps == 0 else L1_bar()
    lhs = fiber(c, eps)
    rhs = boundary(le * c) + le * boundary(c)
    return lhs, rhs


def L0_bar():
    return CycleSum.cycle([T], "A1")


def L1_bar():
    return CycleSum.cycle([1 - T], "A1")
