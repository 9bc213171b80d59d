"""Command-line driver: mzcycles <command> [options].

Exit status 0 when every check run passes, 1 on a failed check, 2 on usage errors.
"""
import argparse
import json
import sys

from . import bar as B
from . import checks as C
from . import motivic as M
from . import numeric as N
from .colored import combo_text, frak_tree
from .cycles import fiber, format_cyclesum
from .forests import forest_to_json, t_dual
from .lyndon import is_lyndon, lyndon_words


class UsageError(ValueError):
    pass


def _word(w, min_len=1, max_len=5):
    try:
        ok = is_lyndon(w)
    except ValueError:
        ok = False
    if not ok or not min_len <= len(w) <= max_len:
        raise UsageError(f"expected a Lyndon word over 0 < 1 of weight {min_len}..{max_len}, got {w!r}")
    return w


def _emit(args, checks, text_lines):
    if args.format == "json":
        doc = {"checks": [c.to_json(timings=not args.no_timings) for c in sorted(checks, key=lambda c: c.id)],
               "summary": {"total": len(checks), "passed": sum(c.status == "pass" for c in checks)}}
        print(json.dumps(doc, indent=1, sort_keys=True, default=str))
    else:
        for line in text_lines:
            print(line)
        for c in sorted(checks, key=lambda c: c.id):
            extra = f" ({c.error})" if c.error else ""
            print(f"{c.status.upper():5} {c.id}  {c.value}{extra}  [{c.runtime_ms:.1f} ms]")
    return 0 if all(c.status == "pass" for c in checks) else 1


def cmd_lyndon(args):
    words = lyndon_words(args.max_weight)
    chk = C.run_check("lyndon.enumeration", "Lyndon words up to the given weight",
                      lambda: C.check_lyndon(args.max_weight))
    return _emit(args, [chk], [f"{len(words)} words", " ".join(words)])


def cmd_tree(args):
    w = _word(args.word)
    lines = [f"T_{w}:"] + [f"  {t['coeff']} {t['forest']}" for t in forest_to_json(t_dual(w))]
    checks = []
    if args.verify_edt:
        if len(w) < 2:
            raise UsageError("--verify-edt needs weight >= 2")
        checks.append(C.run_check(f"forest.edt.{w}", f"tree differential equation for T_{w}",
                                  lambda: C.check_edt(w)))
        checks.append(C.run_check(f"forest.dcy2.{w}", f"d_cy squared on T_{w}",
                                  lambda: C.check_dcy_squared_tw(w)))
    return _emit(args, checks, lines)


def cmd_cycle(args):
    w = _word(args.word, 2)
    tab = C.cycle_table(len(w))
    lines, checks = [f"L_{w} = {format_cyclesum(tab.L(w))}", f"L1_{w} = {format_cyclesum(tab.L1(w))}"], []
    if args.boundary:
        for kind, tag in (("A", "L"), ("A1", "L1")):
            checks.append(C.run_check(f"cycle.boundary.{w}.{tag}", f"boundary of {tag}_{w}",
                                      lambda kind=kind: C.check_boundary(w, kind, len(w))))
        checks.append(C.run_check(f"cycle.dd.{w}", f"boundary squared on L_{w} and L1_{w}",
                                  lambda: C.check_dd(w, len(w))))
    if args.fiber is not None:
        eps = int(args.fiber)
        lines.append(f"fiber of L_{w} at {eps}: {format_cyclesum(fiber(tab.L(w, 'A1'), eps))}")
        lines.append(f"fiber of L1_{w} at {eps}: {format_cyclesum(fiber(tab.L1(w, 'A1'), eps))}")
        checks.append(C.run_check(f"cycle.fiber.{w}", f"empty fibers of L_{w} at 0 and L1_{w} at 1",
                                  lambda: C.check_fibers(w, len(w))))
    if args.table:
        for v in lyndon_words(len(w)):
            if len(v) > 1:
                lines.append(f"L_{v} = {format_cyclesum(tab.L(v))}")
                lines.append(f"L1_{v} = {format_cyclesum(tab.L1(v))}")
    return _emit(args, checks, lines)


def cmd_gamma(args):
    w = _word(args.word, 2)
    lines = [f"Gamma(T_{w}) = {combo_text(frak_tree(w, 'plain'))}",
             f"Gamma(T1_{w}) = {combo_text(frak_tree(w, 'barred'))}"]
    checks = [C.run_check(f"gamma.{w}.{v}", f"tree parametrization of {v} cycle for {w}",
                          lambda v=v: C.check_gamma(w, v, len(w))) for v in ("plain", "barred")]
    return _emit(args, checks, lines)


def cmd_bar(args):
    w = _word(args.word, 2)
    alg = B.default_algebra(5)
    name = f"L_{w}"
    u = B.bar_lift(alg, name)
    lines, checks = [], []
    if args.lift or not args.cobracket:
        lines.append(f"{name}^B = {B.format_bar(u)}")
        checks.append(C.run_check(f"bar.lift.{name}", f"lift of {name} to a closed bar element",
                                  lambda: C.check_bar_lift(name)))
    if args.cobracket:
        lines.append(f"cobracket({name}^B) = {B.format_wedge(B.cobracket(alg, u))}")
    return _emit(args, checks, lines)


def cmd_motivic(args):
    e = M.parse_expr(args.expr)
    if not e:
        raise UsageError(f"could not read an expression from {args.expr!r}")
    log = []
    result = M.normalize_mod_products(e, log)
    lines = [f"  {rule:10} {src} -> {dst}" for rule, src, dst in log]
    lines.append(f"modulo products: {M.format_expr(result)}")
    if len(e) == 1:
        (factors, c), = e.items()
        if len(factors) == 1 and c == 1:
            log = []
            cop = M.reduced_coproduct_mod_products(factors[0], log)
            lines += [f"  {rule:10} {src} -> {dst}" for rule, src, dst in log]
            lines.append(f"reduced coproduct: {M.format_tensor(cop)}")
    return _emit(args, [], lines)


def cmd_numeric(args):
    t = args.target
    lines = [f"backend: {N.BACKEND}, precision: {N.precision()} digits"]
    if t in ("zeta2", "zeta21"):
        r = N.zeta((2,) if t == "zeta2" else (2, 1))
        lines.append(f"value {r.value!r}, terms_used {r.terms_used}, error_bound {r.error_bound:.3e}")
    if t == "i011-limit" and args.csv:
        import csv
        with open(args.csv, "w", newline="") as fh:
            out = csv.writer(fh)
            out.writerow(["t", "f"])
            out.writerows(N.i011_samples())
    if t == "zeta2":
        chk = C.run_check("numeric.zeta2", "zeta(2) = pi^2/6", C.check_zeta2)
    elif t == "zeta21":
        chk = C.run_check("numeric.zeta21", "zeta(2,1) = zeta(3)", C.check_zeta21)
    elif t == "i011-limit":
        chk = C.run_check("numeric.i011", "fiber integral of L_011 tends to -2 zeta(3)", C.check_i011)
    else:
        if args.t0 is None:
            raise UsageError("i01 needs a value t0 in (0, 1]")
        t0 = float(args.t0)
        if not 0 < t0 <= 1:
            raise UsageError("t0 must lie in (0, 1]")

        def fn():
            v = N.integral_I01(t0)
            return abs(v - N.li_one_var((2,), t0).value) < 1e-6, v
        chk = C.run_check("numeric.i01", f"fiber integral of L_01 at {t0}", fn)
    return _emit(args, [chk], lines)


def cmd_verify(args):
    if args.what != "all":
        raise UsageError("only 'verify all' is supported")
    if not 2 <= args.max_weight <= 5:
        raise UsageError("--max-weight must lie in 2..5")
    checks = C.run_suite(args.max_weight)
    n = sum(c.status == "pass" for c in checks)
    return _emit(args, checks, [f"{n}/{len(checks)} checks passed"])


def build_parser():
    p = argparse.ArgumentParser(prog="mzcycles", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--no-timings", action="store_true", help="omit runtime_ms from JSON output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lyndon", parents=[common])
    s.add_argument("--max-weight", type=int, default=5)
    s.set_defaults(fn=cmd_lyndon)

    s = sub.add_parser("tree", parents=[common])
    s.add_argument("--word", required=True)
    s.add_argument("--verify-edt", action="store_true")
    s.set_defaults(fn=cmd_tree)

    s = sub.add_parser("cycle", parents=[common])
    s.add_argument("--word", required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--boundary", action="store_true")
    g.add_argument("--fiber", choices=("0", "1"))
    g.add_argument("--table", action="store_true")
    s.set_defaults(fn=cmd_cycle)

    s = sub.add_parser("gamma", parents=[common])
    s.add_argument("--word", required=True)
    s.set_defaults(fn=cmd_gamma)

    s = sub.add_parser("bar", parents=[common])
    s.add_argument("--word", required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--lift", action="store_true")
    g.add_argument("--cobracket", action="store_true")
    s.set_defaults(fn=cmd_bar)

    s = sub.add_parser("motivic", parents=[common])
    s.add_argument("--expr", required=True)
    s.set_defaults(fn=cmd_motivic)

    s = sub.add_parser("numeric", parents=[common])
    s.add_argument("--target", required=True, choices=("zeta2", "zeta21", "i011-limit", "i01"))
    s.add_argument("t0", nargs="?")
    s.add_argument("--csv", help="write the sample points of the i011-limit fit to this file")
    s.set_defaults(fn=cmd_numeric)

    s = sub.add_parser("verify", parents=[common])
    s.add_argument("what", choices=("all",))
    s.add_argument("--max-weight", type=int, default=5)
    s.set_defaults(fn=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"mzcycles: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
