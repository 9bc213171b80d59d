import pytest

from mzcycles.colored import (FRAK0, FRAK1, combo_text, frak_tree, gamma, gamma_coords, gamma_text,
                              graft_barred, graft_plain, n_leaves, verify_gamma_equals_L)
from mzcycles.cycles import CycleSum, L0_bar
from mzcycles.lyndon import lyndon_words

WORDS = [w for w in lyndon_words(5) if len(w) > 1]

GOLDEN = {
    ("01", "plain"): "[t; 1-t/x1, x1, 1-x1]",
    ("01", "barred"): "[t; (x1-t)/(x1-1), x1, 1-x1]",
    ("001", "barred"): "[t; (x2-t)/(x2-1), x2, 1-x2/x1, x1, 1-x1]",
    ("0001", "plain"): "[t; 1-t/x3, x3, 1-x3/x2, x2, 1-x2/x1, x1, 1-x1]",
    ("0001", "barred"): "[t; (x3-t)/(x3-1), x3, 1-x3/x2, x2, 1-x2/x1, x1, 1-x1]",
    ("0111", "plain"): "[t; 1-t/x3, 1-x3, (x2-x3)/(x2-1), 1-x2, (x1-x2)/(x1-1), x1, 1-x1]",
    ("0111", "barred"): "[t; (x3-t)/(x3-1), 1-x3, (x2-x3)/(x2-1), 1-x2, (x1-x2)/(x1-1), x1, 1-x1]",
    ("0011", "plain"): "-[t; 1-t/x3, x3, 1-x3/x2, 1-x2, (x1-x2)/(x1-1), x1, 1-x1] "
                       "-[t; 1-t/x3, 1-x3, (x2-x3)/(x2-1), x2, 1-x2/x1, x1, 1-x1] "
                       "-[t; 1-t/x3, 1-x3/x2, x2, 1-x2, (x1-x3)/(x1-1), x1, 1-x1]",
    # first term with (x1-x2)/(x1-1) in the seventh slot
    ("01011", "plain"): "[t; 1-t/x4, 1-x4/x3, x3, 1-x3, 1-x4/x2, 1-x2, (x1-x2)/(x1-1), x1, 1-x1] "
                        "+[t; 1-t/x4, 1-x4, (x3-x4)/(x3-1), x3, 1-x3/x2, 1-x2, (x1-x2)/(x1-1), x1, 1-x1] "
                        "+[t; 1-t/x4, 1-x4, (x3-x4)/(x3-1), 1-x3, (x2-x3)/(x2-1), x2, 1-x2/x1, x1, 1-x1] "
                        "+[t; 1-t/x4, 1-x4, (x3-x4)/(x3-1), 1-x3/x2, x2, 1-x2, (x1-x3)/(x1-1), x1, 1-x1] "
                        "+2[t; 1-t/x4, 1-x4/x3, 1-x3, (x2-x3)/(x2-1), x2, 1-x2, (x1-x4)/(x1-1), x1, 1-x1]",
}


def test_grafts():
    assert frak_tree("01")[0][1] == graft_plain(FRAK0, FRAK1)
    assert frak_tree("01", "barred")[0][1] == graft_barred(FRAK0, FRAK1)


def test_graft_not_associative():
    a, b, c = FRAK0, FRAK1, FRAK1
    assert graft_plain(a, graft_plain(b, c)) != graft_plain(graft_plain(a, b), c)


def test_frak_tree_base_case():
    assert frak_tree("0") == ((1, FRAK0),)


def test_frak_tree_0011_signs():
    combo = frak_tree("0011")
    assert len(combo) == 3 and all(c == -1 for c, _ in combo)


def test_frak_tree_01011_has_coefficient_two():
    combo = frak_tree("01011")
    assert len(combo) == 5 and sorted(c for c, _ in combo)[-1] == 2


def test_frak_tree_rejects_non_lyndon():
    with pytest.raises(ValueError):
        frak_tree("10")


@pytest.mark.parametrize("key", sorted(GOLDEN))
def test_golden_parametrizations(key):
    w, variant = key
    assert combo_text(frak_tree(w, variant)) == GOLDEN[key]


def test_gamma_of_T0_is_graph_of_identity():
    assert gamma(FRAK0, "A1") == L0_bar()
    assert gamma_text(FRAK0) == "[t; t]"


@pytest.mark.parametrize("w", WORDS)
@pytest.mark.parametrize("variant", ["plain", "barred"])
def test_gamma_shape(w, variant):
    head = "[t; 1-t/x" if variant == "plain" else f"[t; (x{len(w) - 1}-t)/(x{len(w) - 1}-1)"
    for _, tree in frak_tree(w, variant):
        coords, texts = gamma_coords(tree)
        assert len(coords) == 2 * n_leaves(tree) - 1
        assert gamma_text(tree).startswith(head)


@pytest.mark.parametrize("w", WORDS)
@pytest.mark.parametrize("variant", ["plain", "barred"])
def test_gamma_equals_L(table, w, variant):
    rep = verify_gamma_equals_L(w, table, variant)
    assert rep.ok


def test_golden_matches_table(table):
    c = CycleSum()
    for part in GOLDEN[("01011", "plain")].replace("] ", "]|").split("|"):
        coeff = 2 if part.lstrip("+").startswith("2") else 1
        c = c + CycleSum.parse(part.lstrip("+2"), coeff=coeff)
    assert c == table.L("01011")
