import random

import pytest
from hypothesis import given, settings, strategies as st

from mzcycles.forests import (Forest, _permute, canonical_orientation, contract_edge, d_cy, label_dfs,
                              leaf, n_edges, perm_sign, planar_dual, random_forest, single_edge,
                              strip, t_dual, verify_EDT)
from mzcycles.lyndon import lyndon_words

WORDS = [w for w in lyndon_words(5) if len(w) > 1]


def T(w, root="t"):
    return t_dual(w, root)


def test_canonical_orientation_T01():
    tree = planar_dual("01")[0][1]
    # root edge first, then the 0 leaf, then the 1 leaf
    assert canonical_orientation(tree) == [(0,), (0, 0), (0, 1)]
    lt, _ = label_dfs(tree)
    inner = lt[1][0][1]
    assert lt[1][0][0] == 1 and [l for l, _ in inner[1]] == [2, 3]
    assert [c[0] for _, c in inner[1]] == ["0", "1"]


def test_single_edge_orientation():
    lt, nxt = label_dfs(single_edge("t", "0"))
    assert nxt == 2 and lt[1][0][0] == 1


def test_contract_single_edge_is_zero():
    lt, _ = label_dfs(single_edge("t", "0"))
    assert contract_edge(lt, 1) is None


def three_child_tree():
    return ("t", (("*", (leaf("0"), leaf("1"), leaf("1"))),))


def test_root_edge_contraction_splits_into_t_rooted_trees():
    lt, _ = label_dfs(three_child_tree())
    parts = contract_edge(lt, 1)
    assert len(parts) == 3 and all(p[0] == "t" for p in parts)


def test_leaf_edge_contraction():
    lt, _ = label_dfs(three_child_tree())
    parts = contract_edge(lt, 2)  # the 0 leaf
    assert [p[0] for p in parts] == ["t", "0", "0"]
    assert sum(n_edges(strip(p)) for p in parts) == 3


def test_dcy_single_edges():
    assert not d_cy(T("0")) and not d_cy(T("1"))


def test_dcy_T01():
    assert d_cy(T("01")) == T("0") * T("1")


def test_dcy_T0011():
    rhs = T("0") * T("011") + T("001") * T("1") + T("1") * T("001", "1") + T("01") * T("01", "1")
    assert d_cy(T("0011")) == rhs


def test_t_dual_0011_has_two_grafts():
    assert len(planar_dual("0011")) == 2


def test_t_dual_00101_is_a_difference():
    cs = sorted(c for c, _ in planar_dual("00101"))
    assert len(cs) == 2 and cs[0] < 0 < cs[1]


def test_t_dual_rejects_non_lyndon():
    with pytest.raises(ValueError):
        t_dual("10")


@pytest.mark.parametrize("w", WORDS)
def test_edt_all_words(w):
    assert verify_EDT(w).ok


@pytest.mark.parametrize("w,beta", [("011", {("1", "01"): 1}),
                                    ("0011", {("1", "001"): 1, ("01", "01"): 1}),
                                    ("01011", {("011", "01"): 2})])
def test_edt_beta(w, beta):
    rep = verify_EDT(w)
    for k, c in beta.items():
        assert rep.beta_terms[k] == c


def test_edt_report_json():
    doc = verify_EDT("0011").to_json()
    assert doc["pass"] and doc["beta"]["01,01"] == "1"


@pytest.mark.parametrize("w", WORDS)
def test_dcy_squared_on_T(w):
    assert not d_cy(d_cy(T(w)))


def test_dcy_squared_random():
    rng = random.Random(3)
    for _ in range(100):
        f = Forest.from_ltrees(random_forest(rng, 9))
        assert not d_cy(d_cy(f))


seeds = st.integers(0, 10 ** 6)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_leibniz(seed):
    rng = random.Random(seed)
    f1 = Forest.from_ltrees(random_forest(rng, 5))
    f2 = Forest.from_ltrees(random_forest(rng, 4))
    if not f1:
        return
    e1 = sum(n_edges(t) for t in next(iter(f1.terms)))
    assert d_cy(f1 * f2) == d_cy(f1) * f2 + f1 * d_cy(f2) * (-1) ** e1


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_renumbering_sign(seed):
    rng = random.Random(seed)
    lts = random_forest(rng, 9)
    n = sum(n_edges(strip(t)) for t in lts)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    moved = [_permute(t, perm) for t in lts]
    assert Forest.from_ltrees(moved) == Forest.from_ltrees(lts) * perm_sign(perm)


@pytest.mark.parametrize("u,v", [("0", "1"), ("01", "011"), ("001", "1"), ("0011", "01")])
def test_odd_forests_anticommute(u, v):
    assert T(u) * T(v) == -(T(v) * T(u))


def test_relation_trees_vanish():
    assert not Forest.tree(single_edge("1", "0"))
    assert not Forest.tree(("0", (("*", (leaf("0"), leaf("1"))),)))
    assert Forest.tree(single_edge("1", "1"))
