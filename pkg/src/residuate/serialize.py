"""JSON file formats and canonical serialization.

Readers accept scalar literals as canonical strings ("3", "-1/2", "inf",
"-inf", "true", "false") or plain JSON numbers/booleans; floats are converted
exactly.  Writers always emit canonical strings (lowest-term rationals, fixed
key order, elements ordered by label position), so identical inputs produce
byte-identical output and every emitted object re-parses to an equal value.
"""

import json

from .applications import Context, GeneralizedMetric, GridFunction
from .category import check_qcategory
from .errors import FileError, FormatError, JSONError
from .matrix import QMatrix
from .quantale import format_scalar, get_quantale, is_finite, parse_scalar


def load_json(path):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise FileError("cannot read %s: %s" % (path, exc.strerror or exc),
                        path=str(path)) from None
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise JSONError("%s is not valid JSON: %s" % (path, exc),
                        path=str(path)) from None


def _require(obj, key, path):
    if not isinstance(obj, dict):
        raise FormatError("%s: expected a JSON object" % path)
    if key not in obj:
        raise FormatError("%s: missing key %r" % (path, key))
    return obj[key]


def _expect_type(obj, kinds, path):
    kind = obj.get("type") if isinstance(obj, dict) else None
    if kind not in kinds:
        raise FormatError("%s: expected a %s file, got type %r"
                          % (path, " or ".join(sorted(k for k in kinds if k)),
                             kind))
    return kind


def _string_list(val, what, path):
    if not isinstance(val, list) or not all(isinstance(s, str) for s in val):
        raise FormatError("%s: %s must be a list of strings" % (path, what))
    return tuple(val)


def parse_matrix_obj(obj, path="<matrix>"):
    q = get_quantale(_require(obj, "quantale", path))
    rows = _string_list(_require(obj, "rows", path), "rows", path)
    cols = _string_list(_require(obj, "cols", path), "cols", path)
    raw = _require(obj, "entries", path)
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise FormatError("%s: entries must be a list of rows" % path)
    entries = tuple(tuple(parse_scalar(v, q) for v in r) for r in raw)
    return QMatrix(q, rows, cols, entries)


def load_matrix(path):
    """Load a matrix file; a declared qcategory is axiom-checked on the way in."""
    obj = load_json(path)
    kind = obj.get("type", "matrix") if isinstance(obj, dict) else "matrix"
    if kind not in ("matrix", "qcategory"):
        raise FormatError("%s: not a matrix file (type %r)" % (path, kind))
    M = parse_matrix_obj(obj, path)
    if kind == "qcategory":
        report = check_qcategory(M.rows, M)
        if not report.ok:
            raise FormatError(
                "%s: hom matrix violates the category axioms" % path,
                ca1=list(report.ca1), ca2=[list(t) for t in report.ca2])
    return M


def load_qcategory(path):
    """Load and validate a qcategory file, returning the QCategory."""
    obj = load_json(path)
    M = parse_matrix_obj(obj, path)
    report = check_qcategory(M.rows, M)
    if not report.ok:
        raise FormatError(
            "%s: hom matrix violates the category axioms" % path,
            ca1=list(report.ca1), ca2=[list(t) for t in report.ca2])
    return report.category


def load_pair(path):
    """Load a hull element file {"X": row matrix, "Y": column matrix}."""
    obj = load_json(path)
    X = parse_matrix_obj(_require(obj, "X", path), "%s#X" % path)
    Y = parse_matrix_obj(_require(obj, "Y", path), "%s#Y" % path)
    return X, Y


def load_context(path):
    obj = load_json(path)
    _expect_type(obj, ("context",), path)
    objects = _string_list(_require(obj, "objects", path), "objects", path)
    attributes = _string_list(_require(obj, "attributes", path),
                              "attributes", path)
    raw = _require(obj, "incidence", path)
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise FormatError("%s: incidence must be a list of rows" % path)
    from .quantale import BOOL
    entries = tuple(tuple(parse_scalar(v, BOOL) for v in r) for r in raw)
    return Context(objects, attributes,
                   QMatrix(BOOL, objects, attributes, entries))


def load_metric(path):
    obj = load_json(path)
    _expect_type(obj, ("metric",), path)
    points = _string_list(_require(obj, "points", path), "points", path)
    raw = _require(obj, "d", path)
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise FormatError("%s: d must be a list of rows" % path)
    from .quantale import LAWVERE
    entries = tuple(tuple(parse_scalar(v, LAWVERE) for v in r) for r in raw)
    return GeneralizedMetric(points,
                             QMatrix(LAWVERE, points, points, entries))


def load_grid_function(path):
    obj = load_json(path)
    _expect_type(obj, ("grid-fn",), path)
    dim = _require(obj, "dim", path)
    grid = _require(obj, "grid", path)
    values = _require(obj, "values", path)
    if not isinstance(grid, list) or not isinstance(values, list):
        raise FormatError("%s: grid and values must be lists" % path)
    return GridFunction(dim, grid, values)


def load_grid(path):
    """Load a bare grid ({"type": "grid"}) or the grid of a grid-fn file."""
    obj = load_json(path)
    _expect_type(obj, ("grid", "grid-fn"), path)
    dim = _require(obj, "dim", path)
    grid = _require(obj, "grid", path)
    if not isinstance(grid, list):
        raise FormatError("%s: grid must be a list" % path)
    from .applications import parse_grid
    return parse_grid(grid, dim)


def scalar_out(v, float_mode=False):
    if float_mode and is_finite(v) and not isinstance(v, bool):
        return repr(float(v))
    return format_scalar(v)


def matrix_obj(M, float_mode=False):
    return {
        "quantale": M.quantale.name,
        "rows": list(M.rows),
        "cols": list(M.cols),
        "entries": [[scalar_out(v, float_mode) for v in entr]
                    for entr in M.entries],
    }


def pair_obj(p, float_mode=False):
    return {"X": matrix_obj(p.X, float_mode), "Y": matrix_obj(p.Y, float_mode)}


def hull_obj(hull, float_mode=False):
    return {
        "ambient": matrix_obj(hull.ambient, float_mode),
        "elements": [pair_obj(p, float_mode) for p in hull.elements],
        "order": [list(c) for c in hull.covers()],
    }


def gridfn_obj(f, float_mode=False):
    return {
        "type": "grid-fn",
        "dim": f.dim,
        "grid": [[scalar_out(c, float_mode) for c in pt] for pt in f.grid],
        "values": [scalar_out(v, float_mode) for v in f.values],
    }


def dumps(obj):
    """Canonical one-line JSON with a trailing newline."""
    return json.dumps(obj, separators=(",", ":")) + "\n"
