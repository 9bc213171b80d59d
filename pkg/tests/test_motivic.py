import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mzcycles import bar as B
from mzcycles import motivic as M
from mzcycles.checks import COBRACKET_SIGN, EXPECTED_DI3, EXPECTED_DI4

S = M.parse_symbol
args = st.sampled_from(M.ARGS)
words = st.lists(args, min_size=0, max_size=4)


def nf(text):
    return M.normalize_mod_products(M.parse_expr(text))


def test_parse_and_str():
    s = S("I(0;0,x,x;1)")
    assert s.depth == 3 and str(s) == "I(0;0,x,x;1)"
    assert S("I(0;1)").depth == 0


def test_reject_unknown_argument():
    with pytest.raises(ValueError):
        S("I(0;y;1)")


def test_unit_rule():
    assert nf("I(0;1)") == {(): 1}


def test_neutral_rule():
    assert nf("I(1;0,x;1)") == {}


def test_path_then_inversion():
    assert nf("I(x;x;1)") == {(S("I(0;x;1)"),): 1}


def test_rescaling():
    assert nf("I(0;0,x;x)") == {(S("I(0;0,1;1)"),): 1}


def test_rescaling_with_letter_one_is_unreducible():
    with pytest.raises(M.UnreducibleTerm):
        nf("I(0;1,x;x)")


def test_regularization():
    assert nf("I(0;0;1)") == {} and nf("I(0;1;1)") == {}


def test_products_vanish():
    assert nf("I(0;0,x;1)*I(0;x;1)") == {}


def test_log_records_rules():
    log = []
    M.normalize_mod_products(M.parse_expr("I(x;x;1)"), log)
    assert [r for r, _, _ in log] == ["path", "inversion", "rescale", "regularize"]


def test_coproduct_counts():
    assert len(M.coproduct_full(S("I(0;0,x,x;1)"))) == 8
    assert len(M.coproduct_full(S("I(0;x;1)"))) == 2
    assert M.coproduct_full(S("I(0;1)")) == {((S("I(0;1)"),), (S("I(0;1)"),)): 1}


def test_reduced_coproduct_depth_one():
    assert M.reduced_coproduct_mod_products(S("I(0;x;1)")) == {}


def test_DI3():
    got = M.reduced_coproduct_mod_products(S("I(0;0,x,x;1)"))
    assert got == M.parse_tensor(EXPECTED_DI3) and len(got) == 2


def test_DI4():
    got = M.reduced_coproduct_mod_products(S("I(0;0,0,x,x;1)"))
    assert got == M.parse_tensor(EXPECTED_DI4) and len(got) == 4


@given(args, words, args)
def test_inversion_involution(a, w, b):
    s = M.IISymbol(a, w, b)
    c1, s1 = M.invert(s)
    c2, s2 = M.invert(s1)
    assert s2 == s and c1 * c2 == 1


@given(st.lists(st.sampled_from("01x"), min_size=1, max_size=2),
       st.lists(st.sampled_from("01x"), min_size=1, max_size=2))
def test_shuffle_sum_vanishes_modulo_products(u, v):
    s1, s2 = M.IISymbol("0", u, "1"), M.IISymbol("0", v, "1")
    try:
        assert M.normalize_mod_products(M.shuffle_product(s1, s2)) == {}
    except M.UnreducibleTerm:
        pass


@pytest.mark.parametrize("n", range(1, 5))
def test_reduced_coproduct_legs_have_smaller_depth(n):
    for w in itertools.product("01x", repeat=n):
        s = M.IISymbol("0", w, "1")
        if not M._is_lyndon(w):
            continue
        try:
            cop = M.reduced_coproduct_mod_products(s)
        except M.UnreducibleTerm:
            continue
        for u, v in cop:
            assert u.depth < n and v.depth < n


def test_cfl_factorization():
    assert M.cfl_factorization("xx0") == [("x",), ("x",), ("0",)]
    assert M.cfl_factorization("0101x0") == [("0", "1", "0", "1", "x"), ("0",)]


def test_dictionary():
    assert M.to_bar_generator(S("I(0;0,x;1)")) == (1, "L_01")
    assert M.to_bar_generator(S("I(0;0,1;1)")) == (1, "L_01(1)")
    assert M.to_bar_generator(S("I(0;0;x)")) == (-1, "L_0")


@pytest.mark.parametrize("expr,word", [("I(0;0,x,x;1)", "011"), ("I(0;0,0,x,x;1)", "0011")])
def test_coproduct_matches_bar_cobracket(expr, word):
    alg = B.default_algebra(5)
    rules = {f"L1_{v}": {f"L_{v}": Fraction(1), f"L_{v}(1)": Fraction(-1)} for v in ("01", "001")}
    bar_side = B.substitute_wedge(B.cobracket(alg, B.bar_lift(alg, f"L_{word}")), rules)
    mot = M.motivic_wedge(M.reduced_coproduct_mod_products(S(expr)))
    assert mot == {k: COBRACKET_SIGN * v for k, v in bar_side.items()}
