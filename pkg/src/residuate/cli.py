"""Command-line front end.

Every verb reads JSON files, runs one library operation, and prints one line
of canonical JSON on stdout.  Exit codes: 0 success; 1 a law/axiom checking
verb found violations; 2 input, shape, instance, or usage errors (with a
machine-readable error object on stderr); 3 enumeration-guard rejection;
4 a --check self-audit failed (never expected).
"""

import argparse
import sys

from . import applications as apps
from . import serialize as ser
from .category import check_qcategory, hull_hom, macneille
from .errors import (GuardExceeded, ResiduateError, SelfCheckFailed,
                     ShapeMismatch, UsageError)
from .isbell import (closure_row, complete_pair, enumerate_hull, is_member,
                     make_pair)
from .matrix import (compose, mat_leq, reindex, right_extension,
                     right_lifting, transpose)
from .quantale import BOOL, QUANTALES, check_quantale_laws, get_quantale


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="residuate",
                     description="linear algebra over quantales")
    sub = parser.add_subparsers(dest="verb", metavar="VERB",
                                parser_class=_Parser)

    def add(name, help_, *positionals, variadic=None):
        sp = sub.add_parser(name, help=help_, description=help_)
        for pos in positionals:
            sp.add_argument(pos)
        if variadic:
            sp.add_argument(variadic, nargs="*")
        sp.add_argument("--float", action="store_true", dest="float_mode",
                        help="render scalars as decimal floats (lossy)")
        sp.add_argument("--check", action="store_true",
                        help="re-verify invariants of the result before "
                             "emitting")
        return sp

    add("compose", "compose two matrices (Y then X)", "y_file", "x_file")
    add("rext", "largest Y with compose(Y, X) <= Z", "z_file", "x_file")
    add("rlift", "largest X with compose(Y, X) <= Z", "y_file", "z_file")
    add("closure", "close a row vector into the hull of Z", "z_file", "x_file")
    add("member", "test whether a row vector is a hull element of Z",
        "z_file", "x_file")
    add("complete-pair", "grow an under-approximating (X, Y) to a hull "
        "element of Z", "z_file", "x_file", "y_file")
    add("hull", "enumerate all hull elements of a bool matrix", "z_file")
    add("laws", "check the quantale laws of a built-in instance (or 'all')",
        "quantale")
    add("qcat-check", "check the category axioms of a square matrix",
        "hom_file")
    add("macneille", "complete a category: hull of its hom matrix plus the "
        "canonical embedding", "category_file")
    add("concepts", "concept lattice of a formal context", "context_file")
    add("tropical-member", "membership and closure of a point in a tropical "
        "polytope", "z_file", "point_file")
    add("tropical-dual", "transpose-hull dual of a hull element",
        "z_file", "element_file")
    add("tightspan", "directed tight span of a generalized metric; with two "
        "element files, their span distance", "metric_file",
        variadic="element_files")
    add("lf", "grid conjugate and biconjugate of a tabulated function",
        "fn_file", "grid_file")
    return parser


def _ensure(cond, what):
    if not cond:
        raise SelfCheckFailed("self-check failed: %s" % what)


def _roundtrip(out_obj, M):
    _ensure(ser.parse_matrix_obj(out_obj) == M, "output does not re-parse")


def _matrix_out(M, ns):
    obj = ser.matrix_obj(M)
    if ns.check:
        _roundtrip(obj, M)
    return ser.matrix_obj(M, True) if ns.float_mode else obj


def _row_vector_arg(M, path):
    if not M.is_row_vector():
        raise ShapeMismatch("%s: expected a row vector (one row)" % path)
    return M


def cmd_compose(ns):
    Y = ser.load_matrix(ns.y_file)
    X = ser.load_matrix(ns.x_file)
    return 0, _matrix_out(compose(Y, X), ns)


def cmd_rext(ns):
    Z = ser.load_matrix(ns.z_file)
    X = ser.load_matrix(ns.x_file)
    out = right_extension(Z, X)
    if ns.check:
        _ensure(mat_leq(compose(out, X), Z), "counit inequality")
    return 0, _matrix_out(out, ns)


def cmd_rlift(ns):
    Y = ser.load_matrix(ns.y_file)
    Z = ser.load_matrix(ns.z_file)
    out = right_lifting(Y, Z)
    if ns.check:
        _ensure(mat_leq(compose(Y, out), Z), "counit inequality")
    return 0, _matrix_out(out, ns)


def cmd_closure(ns):
    Z = ser.load_matrix(ns.z_file)
    X = _row_vector_arg(ser.load_matrix(ns.x_file), ns.x_file)
    out = closure_row(Z, X)
    if ns.check:
        _ensure(mat_leq(reindex(X, rows=out.rows, cols=out.cols), out),
                "closure is extensive")
        _ensure(closure_row(Z, out) == out, "closure is idempotent")
    return 0, _matrix_out(out, ns)


def cmd_member(ns):
    Z = ser.load_matrix(ns.z_file)
    X = _row_vector_arg(ser.load_matrix(ns.x_file), ns.x_file)
    member = is_member(Z, X)
    if ns.check:
        clo = closure_row(Z, X)
        _ensure(member == (clo == reindex(X, rows=clo.rows, cols=clo.cols)),
                "membership equals closure fixedness")
    return 0, {"member": member}


def cmd_complete_pair(ns):
    Z = ser.load_matrix(ns.z_file)
    X = ser.load_matrix(ns.x_file)
    Y = ser.load_matrix(ns.y_file)
    p = complete_pair(Z, X, Y)
    if ns.check:
        make_pair(Z, p.X, p.Y)
        _ensure(mat_leq(reindex(X, rows=p.X.rows, cols=p.X.cols), p.X),
                "first coordinate grew")
        _ensure(mat_leq(reindex(Y, rows=p.Y.rows, cols=p.Y.cols), p.Y),
                "second coordinate grew")
    return 0, ser.pair_obj(p, ns.float_mode)


def cmd_hull(ns):
    Z = ser.load_matrix(ns.z_file)
    hull = enumerate_hull(Z)
    if ns.check:
        for p in hull:
            make_pair(Z, p.X, p.Y)
    return 0, ser.hull_obj(hull, ns.float_mode)


def cmd_laws(ns):
    if ns.quantale == "all":
        names = sorted(QUANTALES)
    else:
        names = [get_quantale(ns.quantale).name]
    reports = []
    bad = False
    for name in names:
        violations = check_quantale_laws(QUANTALES[name])
        bad = bad or bool(violations)
        reports.append({"quantale": name, "violations": violations})
    return (1 if bad else 0), {"reports": reports}


def cmd_qcat_check(ns):
    M = ser.parse_matrix_obj(ser.load_json(ns.hom_file), ns.hom_file)
    report = check_qcategory(M.rows, M)
    out = {"ok": report.ok, "ca1": list(report.ca1),
           "ca2": [list(t) for t in report.ca2]}
    return (0 if report.ok else 1), out


def cmd_macneille(ns):
    C = ser.load_qcategory(ns.category_file)
    mn = macneille(C)
    out = {
        "ambient": ser.matrix_obj(C.hom, ns.float_mode),
        "objects": list(C.objects),
        "embedding": [ser.pair_obj(mn.embed(c), ns.float_mode)
                      for c in C.objects],
    }
    if ns.check:
        for c in C.objects:
            for cp in C.objects:
                _ensure(hull_hom(mn.embed(c), mn.embed(cp))
                        == C.hom_value(c, cp), "embedding is hom-preserving")
    if C.quantale is BOOL:
        hull = mn.enumerate()
        out["elements"] = [ser.pair_obj(p, ns.float_mode) for p in hull]
        out["order"] = [list(t) for t in hull.covers()]
        out["embedding_index"] = [hull.index(mn.embed(c)) for c in C.objects]
    return 0, out


def cmd_concepts(ns):
    ctx = ser.load_context(ns.context_file)
    hull = apps.concepts(ctx)
    if ns.check:
        for p in hull:
            make_pair(ctx.incidence, p.X, p.Y)
    return 0, {
        "objects": list(ctx.objects),
        "attributes": list(ctx.attributes),
        "concepts": [{"extent": list(apps.concept_extent(p)),
                      "intent": list(apps.concept_intent(p))} for p in hull],
        "order": [list(t) for t in hull.covers()],
    }


def cmd_tropical_member(ns):
    Z = ser.load_matrix(ns.z_file)
    P = _row_vector_arg(ser.load_matrix(ns.point_file), ns.point_file)
    member = apps.tropical_membership(Z, P)
    clo = apps.tropical_closure(Z, P)
    if ns.check:
        fixed = clo == reindex(P, rows=clo.rows, cols=clo.cols)
        _ensure(member == (fixed and apps.matrix_is_finite(P)),
                "membership equals finite closure fixedness")
    return 0, {"member": member,
               "finite_ambient": apps.matrix_is_finite(Z),
               "closure": ser.matrix_obj(clo, ns.float_mode)}


def cmd_tropical_dual(ns):
    Z = ser.load_matrix(ns.z_file)
    X, Y = ser.load_pair(ns.element_file)
    p = make_pair(Z, X, Y)
    d = apps.tropical_dual(Z, p)
    if ns.check:
        _ensure(apps.tropical_dual(transpose(Z), d) == p, "dual is involutive")
    return 0, ser.pair_obj(d, ns.float_mode)


def cmd_tightspan(ns):
    m = ser.load_metric(ns.metric_file)
    if len(ns.element_files) == 2:
        p = make_pair(m.ambient, *ser.load_pair(ns.element_files[0]))
        q = make_pair(m.ambient, *ser.load_pair(ns.element_files[1]))
        val = apps.tight_span_hom(m, p, q)
        if ns.check:
            _ensure(apps.tight_span_hom(m, p, p) == m.dmat.quantale.unit,
                    "self-distance is the unit")
        return 0, {"hom": ser.scalar_out(val, ns.float_mode)}
    if ns.element_files:
        raise UsageError("tightspan takes a metric file alone, or a metric "
                         "file and exactly two element files")
    embeds = [apps.tight_span_embed(m, a) for a in m.points]
    hom = [[apps.tight_span_hom(m, p, q) for q in embeds] for p in embeds]
    if ns.check:
        for i, a in enumerate(m.points):
            for j, b in enumerate(m.points):
                _ensure(hom[i][j] == m.d(a, b), "embedding is isometric")
    return 0, {
        "points": list(m.points),
        "ambient": ser.matrix_obj(m.ambient, ns.float_mode),
        "embedding": [ser.pair_obj(p, ns.float_mode) for p in embeds],
        "hom": [[ser.scalar_out(v, ns.float_mode) for v in row_]
                for row_ in hom],
    }


def cmd_lf(ns):
    f = ser.load_grid_function(ns.fn_file)
    dual = ser.load_grid(ns.grid_file)
    fstar = apps.lf_conjugate(f, dual)
    fstarstar = apps.lf_biconjugate(f, dual)
    if ns.check:
        again = apps.lf_conjugate(fstarstar, dual)
        _ensure(again.values == fstar.values,
                "conjugate of biconjugate equals conjugate")
    return 0, {"conjugate": ser.gridfn_obj(fstar, ns.float_mode),
               "biconjugate": ser.gridfn_obj(fstarstar, ns.float_mode)}


HANDLERS = {
    "compose": cmd_compose,
    "rext": cmd_rext,
    "rlift": cmd_rlift,
    "closure": cmd_closure,
    "member": cmd_member,
    "complete-pair": cmd_complete_pair,
    "hull": cmd_hull,
    "laws": cmd_laws,
    "qcat-check": cmd_qcat_check,
    "macneille": cmd_macneille,
    "concepts": cmd_concepts,
    "tropical-member": cmd_tropical_member,
    "tropical-dual": cmd_tropical_dual,
    "tightspan": cmd_tightspan,
    "lf": cmd_lf,
}


def _emit_error(exc):
    sys.stderr.write(ser.dumps(exc.as_object()))


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        if ns.verb is None:
            raise UsageError("a verb is required (see residuate --help)")
        code, out = HANDLERS[ns.verb](ns)
        if out is not None:
            sys.stdout.write(ser.dumps(out))
        return code
    except GuardExceeded as exc:
        _emit_error(exc)
        return 3
    except SelfCheckFailed as exc:
        _emit_error(exc)
        return 4
    except ResiduateError as exc:
        _emit_error(exc)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
