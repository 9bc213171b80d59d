import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mzcycles import ratfun as rf
from mzcycles.ratfun import INF, T, X, Indeterminate, NonlinearFace, const, encode, solve_face, substitute


def test_substitute_forced_cancellation():
    assert substitute(1 - T / X[1], 1, T) == rf.ZERO


def test_substitute_infinity_degree_comparison():
    assert substitute(1 - T / X[1], 1, INF) == rf.ONE
    assert substitute(X[1], 1, INF) is INF
    assert substitute(T / X[1], 1, INF) == rf.ZERO
    assert substitute((2 * X[1] - T) / (X[1] - 1), 1, INF) == const(2)


def test_substitute_pole():
    assert substitute((X[1] - T) / (X[1] - 1), 1, rf.ONE) is INF


def test_solve_face_examples():
    (sol,), = solve_face(1 - T / X[1], "zero")
    assert sol[0] == 1 and sol[1] == T
    (sol,), = solve_face(X[1], "zero")
    assert sol[:2] == (1, rf.ZERO)
    (sol,), = solve_face(1 - X[1], "inf")
    assert sol[:2] == (1, INF)


def test_solve_face_constant_has_no_solution():
    assert solve_face(const(3), "zero") == []


def test_solve_face_for_t():
    (sol,), = solve_face(1 - T, "zero")
    assert sol[:2] == (0, rf.ONE)


def test_nonlinear_face():
    with pytest.raises(NonlinearFace):
        solve_face(1 - X[1] ** 2 - X[2] ** 2, "zero")


def test_parse_shapes():
    assert rf.parse("1-t/x2") == 1 - T / X[2]
    assert rf.parse("(x1-x2)/(x1-1)") == (X[1] - X[2]) / (X[1] - 1)


def test_encoding_is_rename_stable():
    f = 1 - T / X[1]
    g = 1 - T / X[3]
    assert encode(f, {1: 2}) == encode(g, {3: 2})


def _random_f(rng):
    terms = [T, X[1], X[2], const(1), const(2)]
    num = sum(rng.choice([-1, 1, 2]) * rng.choice(terms) for _ in range(2))
    den = sum(rng.choice([-1, 1, 3]) * rng.choice(terms) for _ in range(2))
    if den == 0:
        den = X[1] + 1
    if num == 0:
        num = T + 2
    return num / den


def _eval(f, point):
    from sympy import Rational
    return f.as_expr().subs({rf.K.symbols[i]: Rational(v) for i, v in enumerate(point)})


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_substitute_is_multiplicative(seed):
    rng = random.Random(seed)
    f, g = _random_f(rng), _random_f(rng)
    v = const(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
    try:
        a, b = substitute(f, 1, v), substitute(g, 1, v)
        fg = substitute(f * g, 1, v)
    except Indeterminate:
        return
    if a is INF or b is INF or fg is INF:
        return
    assert fg == a * b


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_zero_face_solutions_vanish(seed):
    rng = random.Random(seed)
    f = _random_f(rng)
    try:
        comps = solve_face(f, "zero")
    except NonlinearFace:
        return
    for alts in comps:
        for i, val, _ in alts:
            try:
                assert substitute(f, i, val) == rf.ZERO
            except Indeterminate:
                pass


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_normal_form_agrees_with_evaluation(seed):
    rng = random.Random(seed)
    f, g = _random_f(rng), _random_f(rng)
    same = encode(f) == encode(g)
    pts = [[Fraction(rng.randint(-50, 50), rng.randint(1, 7)) + Fraction(1, 97) for _ in range(rf.NVARS + 1)]
           for _ in range(20)]
    vals = []
    for p in pts:
        try:
            vals.append(_eval(f, p) == _eval(g, p))
        except ZeroDivisionError:
            continue
    agree = all(vals) and vals
    assert same == bool(agree)
