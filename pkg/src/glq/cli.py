"""Command-line surface: deterministic JSON verification reports.

Every subcommand prints one JSON document (schema tag
``glq-report/1``) with alphabetically ordered keys, so repeated runs
are byte-identical, and exits 0 exactly when every reported check
passed.  The ``GLQ_MAX_WORKERS`` environment variable caps how many
check suites may run concurrently (default 1); results are assembled
in submission order either way.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb

from .coeff import q_int
from .graded import GradingContext, rank
from . import coords as coords_mod
from . import reps as reps_mod
from . import rmatrix as rmatrix_mod
from .coords import GqElement, t_, tbar_
from .parser import ParseError, format_normal_form, parse_superspace
from .superspace import normal_form
from .uq import (
    UqExpression,
    all_generators,
    antipode,
    coproduct,
    k2rho,
    pbw_probe_expressions,
    probe_monomials,
    star,
)

SCHEMA = "glq-report/1"


def _check(name, ok, **extra):
    out = {"name": name, "ok": bool(ok)}
    out.update(extra)
    return out


def _suite(name, checks, **extra):
    out = {"name": name, "checks": checks,
           "ok": all(c["ok"] for c in checks)}
    out.update(extra)
    return out


def _default_probe_degree(m, n):
    return 4 if (m, n) == (1, 1) else 3


def _max_workers():
    raw = os.environ.get("GLQ_MAX_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_suites(builders):
    """Run the suite builders, possibly concurrently, and assemble the
    results in submission order."""
    workers = _max_workers()
    if workers == 1 or len(builders) == 1:
        return [b() for b in builders]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(b) for b in builders]
        return [f.result() for f in futures]


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _suite_relations(ctx):
    V = reps_mod.vector_rep(ctx)
    D = reps_mod.dual_rep(V)
    pairs = [("vector", V), ("dual", D),
             ("vector(x)vector", reps_mod.tensor_rep(V, V)),
             ("vector(x)dual", reps_mod.tensor_rep(V, D))]
    checks = []
    for label, rep in pairs:
        results = reps_mod.check_relations(rep)
        checks.append(_check("defining-relations-" + label,
                             all(ok for _, ok in results),
                             relations=len(results)))
    return _suite("relations", checks)


def _suite_hopf(ctx, probe_degree):
    checks = []
    coassoc = True
    counit_ax = True
    for g in all_generators(ctx):
        e = UqExpression.from_gen(ctx, g)
        d = coproduct(e)
        if d.delta_leg(0) != d.delta_leg(1):
            coassoc = False
        single = type(d)(ctx, 1, {(w,): c for w, c in e.terms.items()})
        if d.counit_leg(0) != single or d.counit_leg(1) != single:
            counit_ax = False
    checks.append(_check("coassociativity", coassoc))
    checks.append(_check("counit-axiom", counit_ax))
    rep = reps_mod.vector_rep(ctx)
    from .graded import GradedMap
    from .uq import counit

    degree = min(probe_degree, 2)
    axiom = True
    for word in probe_monomials(ctx, degree):
        x = UqExpression.from_word(ctx, word)
        collapsed = coproduct(x).antipode_leg(0).multiply_legs()
        lhs = rep.evaluate_expr(collapsed)
        rhs = GradedMap.identity(rep.space).scale(counit(x))
        if not (lhs - rhs).is_zero():
            axiom = False
            break
    checks.append(_check("antipode-axiom-vector", axiom, degree=degree))
    return _suite("hopf", checks)


def _suite_star(ctx, probe_degree, q0):
    checks = []
    degree = min(probe_degree, 2)
    V = reps_mod.vector_rep(ctx)
    D = reps_mod.dual_rep(V)
    for theta in (1, 2):
        involutive = True
        for word in probe_monomials(ctx, degree):
            x = UqExpression.from_word(ctx, word)
            xx = star(star(x, theta), theta)
            if V.evaluate_expr(xx) != V.evaluate_expr(x):
                involutive = False
                break
        checks.append(_check("star-involutive-type-%d" % theta, involutive,
                             degree=degree))
    for label, rep, gram in (("vector", V, reps_mod.vector_gram(ctx)),
                             ("dual", D, reps_mod.dual_gram(ctx))):
        report = reps_mod.unitarity_check(rep, gram, q0)
        checks.append(_check("unitary-%s" % label,
                             bool(report["unitary_types"]),
                             types=report["unitary_types"],
                             positive=report["positive"]))
    return _suite("star", checks, q0=str(q0))


def _suite_k2rho(ctx, probe_degree):
    degree = min(probe_degree, 2)
    checks = []
    V = reps_mod.vector_rep(ctx)
    D = reps_mod.dual_rep(V)
    for label, rep in (("vector", V), ("dual", D)):
        k = rep.evaluate_expr(k2rho(ctx))
        kinv = rep.evaluate_expr(k2rho(ctx, inverse=True))
        ok = True
        for word in probe_monomials(ctx, degree):
            x = UqExpression.from_word(ctx, word)
            lhs = rep.evaluate_expr(antipode(antipode(x)))
            rhs = k @ rep.evaluate_expr(x) @ kinv
            if lhs != rhs:
                ok = False
                break
        checks.append(_check("antipode-squared-%s" % label, ok,
                             degree=degree))
    return _suite("k2rho", checks)


def cmd_verify(args):
    ctx = GradingContext(args.m, args.n)
    degree = args.probe_degree or _default_probe_degree(args.m, args.n)
    q0 = Fraction(args.q0)
    suites = _run_suites([
        lambda: _suite_relations(ctx),
        lambda: _suite_hopf(ctx, degree),
        lambda: _suite_star(ctx, degree, q0),
        lambda: _suite_k2rho(ctx, degree),
    ])
    return {"parameters": {"m": args.m, "n": args.n,
                           "probe_degree": degree, "q0": str(q0)},
            "suites": suites}


# ---------------------------------------------------------------------------
# decompose
# ---------------------------------------------------------------------------


def cmd_decompose(args):
    ctx = GradingContext(args.m, args.n)
    base = reps_mod.vector_rep(ctx)
    if args.word == "Ed":
        base = reps_mod.dual_rep(base)
    rep = reps_mod.tensor_power(base, args.power)
    summands = reps_mod.decompose(rep)
    listed = [{"dim": s.dim,
               "highest_weight": [int(x) for x in s.highest_weight]}
              for s in summands]
    checks = [
        _check("dimensions-sum", sum(s.dim for s in summands) == rep.dim,
               total=rep.dim),
        _check("summands-nonempty", bool(summands) or rep.dim == 0),
    ]
    suite = _suite("decomposition", checks, summands=listed)
    return {"parameters": {"m": args.m, "n": args.n, "power": args.power,
                           "word": args.word},
            "suites": [suite]}


# ---------------------------------------------------------------------------
# rmatrix
# ---------------------------------------------------------------------------


def cmd_rmatrix(args):
    ctx = GradingContext(args.m, args.n)
    degree = args.probe_degree or _default_probe_degree(args.m, args.n)
    kind = args.kind

    def braid_suite():
        result = rmatrix_mod.check_braid(ctx, kind)
        if result is None:
            return _suite("braid", [_check("braid-relation", True,
                                           skipped=True)])
        return _suite("braid", [_check("braid-relation", result)])

    suites = _run_suites([
        lambda: _suite("intertwiner", [
            _check("coproduct-intertwiner",
                   rmatrix_mod.check_intertwiner(ctx, kind))]),
        braid_suite,
        lambda: _suite("rtt", [
            _check("exchange-identity",
                   rmatrix_mod.check_rtt(ctx, kind, degree),
                   degree=degree)]),
    ])
    return {"parameters": {"m": args.m, "n": args.n, "kind": kind,
                           "probe_degree": degree},
            "suites": suites}


# ---------------------------------------------------------------------------
# coords
# ---------------------------------------------------------------------------


def _coords_antipode_suite(ctx, probe_degree):
    probes = probe_monomials(ctx, min(probe_degree, 2))
    N = ctx.N
    letters = [t_(a, b) for a in range(1, N + 1) for b in range(1, N + 1)]
    letters += [tbar_(a, b) for a in range(1, N + 1)
                for b in range(1, N + 1)]
    words = [(l,) for l in letters]
    words += [(t_(1, N), t_(N, 1)), (tbar_(1, 1), t_(1, N))]
    dual_ok = True
    for w in words:
        f = GqElement.from_word(ctx, w)
        sf = coords_mod.antipode_coords(f)
        for x in probes:
            a = coords_mod.evaluate(ctx, sf, x)
            b = coords_mod.evaluate(
                ctx, f, antipode(UqExpression.from_word(ctx, x)))
            if a != b:
                dual_ok = False
                break
        if not dual_ok:
            break
    squared_ok = True
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            f = GqElement.from_letter(ctx, t_(a, b))
            s2 = coords_mod.antipode_coords(coords_mod.antipode_coords(f))
            e = ctx.two_rho_eps(a) - ctx.two_rho_eps(b)
            if not coords_mod.functional_equal(ctx, s2, f.scale(q_int(e)),
                                               min(probe_degree, 2)):
                squared_ok = False
    checks = [_check("antipode-dual-to-enveloping", dual_ok),
              _check("antipode-squared-weight-ratio", squared_ok)]
    return _suite("antipode", checks)


def _coords_star_suite(ctx):
    N = ctx.N
    checks = []
    for theta in (1, 2):
        involutive = True
        for a in range(1, N + 1):
            for b in range(1, N + 1):
                for letter in (t_(a, b), tbar_(a, b)):
                    f = GqElement.from_letter(ctx, letter)
                    ff = coords_mod.star_coords(
                        coords_mod.star_coords(f, theta), theta)
                    if ff.terms != f.terms:
                        involutive = False
        checks.append(_check("star-involutive-type-%d" % theta, involutive))
        compat = True
        for w in [(t_(1, 1),), (tbar_(1, N),), (t_(1, N), tbar_(N, 1))]:
            f = GqElement.from_word(ctx, w)
            lhs = coords_mod.coproduct(coords_mod.star_coords(f, theta))
            if lhs != coords_mod.star_coproduct(f, theta):
                compat = False
        checks.append(_check("star-coproduct-type-%d" % theta, compat))
    return _suite("star", checks)


def _coords_peterweyl_suite(ctx):
    V = reps_mod.vector_rep(ctx)
    funcs = [GqElement.one(ctx)]
    expected = 1
    mc = coords_mod.matrix_coefficients(ctx, (False,),
                                        reps_mod.decompose(V), 0)
    funcs += [mc[i][j] for i in range(V.dim) for j in range(V.dim)]
    expected += V.dim * V.dim
    square = reps_mod.tensor_rep(V, V)
    summands = reps_mod.decompose(square)
    for which, s in enumerate(summands):
        mc = coords_mod.matrix_coefficients(ctx, (False, False),
                                            summands, which)
        funcs += [mc[i][j] for i in range(s.dim) for j in range(s.dim)]
        expected += s.dim * s.dim
    probes = pbw_probe_expressions(ctx, 2)
    vecs = [{pi: v for pi, v in
             enumerate(coords_mod.evaluate(ctx, f, x) for x in probes) if v}
            for f in funcs]
    measured = rank(vecs)
    checks = [_check("matrix-coefficients-independent",
                     measured == expected,
                     expected=expected, measured=measured)]
    return _suite("peterweyl", checks)


def cmd_coords(args):
    ctx = GradingContext(args.m, args.n)
    degree = args.probe_degree or _default_probe_degree(args.m, args.n)
    if args.check == "antipode":
        suites = [_coords_antipode_suite(ctx, degree)]
    elif args.check == "star":
        suites = [_coords_star_suite(ctx)]
    else:
        suites = [_coords_peterweyl_suite(ctx)]
    return {"parameters": {"m": args.m, "n": args.n, "check": args.check,
                           "probe_degree": degree},
            "suites": suites}


# ---------------------------------------------------------------------------
# normalform
# ---------------------------------------------------------------------------


def cmd_normalform(args):
    ctx = GradingContext(args.m, args.n)
    element = parse_superspace(ctx, args.expression)
    nf, steps = normal_form(ctx, element)
    rendered = format_normal_form(ctx, nf)
    round_trip = parse_superspace(ctx, rendered) == nf
    suite = _suite("normalform",
                   [_check("round-trip", round_trip)],
                   input=args.expression,
                   normal_form=rendered,
                   steps=steps)
    return {"parameters": {"m": args.m, "n": args.n},
            "suites": [suite]}


# ---------------------------------------------------------------------------
# induce
# ---------------------------------------------------------------------------


def cmd_induce(args):
    from . import induction as ind

    ctx = GradingContext(args.m, args.n)
    k = args.k
    barred = args.side == "unbar"

    def borel_weil_suite():
        checks = []
        try:
            rep, words = ind.build_induced(ctx, k, barred)
        except ValueError as exc:
            checks.append(_check("span-stable", False, error=str(exc)))
            return _suite("borel-weil", checks)
        checks.append(_check("span-stable", True))
        checks.append(_check("defining-relations", True))
        expected_dim = sum(comb(ctx.m, j) * comb(ctx.n - 1 + k - j, k - j)
                           for j in range(min(ctx.m, k) + 1))
        checks.append(_check("dimension", rep.dim == expected_dim,
                             expected=expected_dim, measured=rep.dim))
        summands = reps_mod.decompose(rep)
        checks.append(_check("irreducible", len(summands) == 1,
                             summands=len(summands)))
        if barred:
            want = ind.skew_highest_weight(ctx, k)
        else:
            want = tuple([0] * (ctx.N - 1) + [-k])
        got = summands[0].highest_weight if summands else None
        checks.append(_check("highest-weight", got == want,
                             expected=[int(x) for x in want],
                             measured=[int(x) for x in got]
                             if got is not None else None))
        return _suite("borel-weil", checks)

    def frobenius_suite():
        checks = []
        V = reps_mod.vector_rep(ctx)
        for label, W in (("trivial", reps_mod.trivial_rep(ctx)),
                         ("vector", V)):
            lhs, rhs = ind.frobenius_dims(ctx, W, k, barred)
            checks.append(_check("reciprocity-%s" % label, lhs == rhs,
                                 module_side=lhs, parabolic_side=rhs))
        return _suite("frobenius", checks)

    suites = _run_suites([borel_weil_suite, frobenius_suite])
    return {"parameters": {"m": args.m, "n": args.n, "k": k,
                           "side": args.side},
            "suites": suites}


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------


def _add_size(p):
    p.add_argument("--m", type=int, default=1,
                   help="number of even rows (default 1)")
    p.add_argument("--n", type=int, default=1,
                   help="number of odd rows (default 1)")


def _add_probe(p):
    p.add_argument("--probe-degree", type=int, default=None,
                   help="probe word degree (default 4 at (1|1), else 3)")


def build_arg_parser():
    parser = argparse.ArgumentParser(
        prog="glq",
        description="Exact verification suites for the quantum general "
                    "linear supergroup apparatus.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="defining relations, Hopf axioms, "
                                      "star structure, antipode square")
    _add_size(p)
    _add_probe(p)
    p.add_argument("--q0", default="3/2",
                   help="rational specialisation point (default 3/2)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose",
                       help="summands of a tensor power of the vector "
                            "module or its dual")
    _add_size(p)
    p.add_argument("--word", choices=["E", "Ed"], required=True,
                   help="base module: E (vector) or Ed (dual)")
    p.add_argument("--power", type=int, required=True,
                   help="tensor power")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("rmatrix",
                       help="intertwiner, braid, and exchange-identity "
                            "suites for one R-matrix kind")
    _add_size(p)
    _add_probe(p)
    p.add_argument("--kind", choices=["pp", "bb", "mixed"], required=True,
                   help="module pair: plain-plain, barred-barred, or mixed")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("coords",
                       help="coordinate-algebra checks")
    _add_size(p)
    _add_probe(p)
    p.add_argument("--check", choices=["antipode", "star", "peterweyl"],
                   required=True)
    p.set_defaults(func=cmd_coords)

    p = sub.add_parser("normalform",
                       help="normal form of a superspace expression")
    _add_size(p)
    p.add_argument("expression", help="e.g. \"zb[1]*z[1]\"")
    p.set_defaults(func=cmd_normalform)

    p = sub.add_parser("induce",
                       help="induced-module and reciprocity suites")
    _add_size(p)
    p.add_argument("--k", type=int, required=True,
                   help="degree of the induced module")
    p.add_argument("--side", choices=["bar", "unbar"], required=True,
                   help="which of the two degree-k modules")
    p.set_defaults(func=cmd_induce)

    for sp in sub.choices.values():
        sp.add_argument("--inject-failure", action="store_true",
                        help=argparse.SUPPRESS)
    return parser


def _render(report):
    return json.dumps(report, indent=2, sort_keys=True)


def main(argv=None):
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    base = {"schema": SCHEMA, "command": args.command}
    try:
        body = args.func(args)
    except ParseError as exc:
        base.update({
            "error": {"message": exc.message, "position": exc.position},
            "ok": False,
            "suites": [],
        })
        print(_render(base))
        return 1
    base.update(body)
    if args.inject_failure:
        base["suites"] = list(base["suites"]) + [
            _suite("injected-failure",
                   [_check("always-fails", False, injected=True)])]
    base["ok"] = all(s["ok"] for s in base["suites"])
    print(_render(base))
    return 0 if base["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
