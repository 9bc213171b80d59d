"""Algebraic cycles for multiple polylogarithms in low weight, with exact verification."""
from .lyndon import lyndon_words, is_lyndon, standard_factorization, lyndon_bracket, alpha_table
from .forests import Forest, d_cy, t_dual, verify_EDT
from .cycles import CycleSum, boundary, fiber, mu_star, nu_star
from .table import CycleTable, li_cy
from .colored import frak_tree, gamma, verify_gamma_equals_L
from .bar import default_algebra, bar_lift, d_bar, shuffle, cobracket, shuffle_span_membership
from .motivic import parse_symbol, normalize_mod_products, coproduct_full, reduced_coproduct_mod_products
from .numeric import li_one_var, zeta, integral_I01, integral_I01bar, integral_I011_limit_at_1

__version__ = "0.1.0"
