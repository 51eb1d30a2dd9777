"""Concrete instantiations of the hull machinery.

* Formal concept analysis: concepts of a Boolean incidence relation are the
  fixed pairs (intent over attributes, extent over objects) of its hull.
* Tropical polytopes: over max-plus, a matrix's rows generate a polytope; a
  finite point belongs to it iff its closure fixes it, and transposing the
  ambient matrix is an involutive order-anti-isomorphism of hulls.
* Directed tight spans: a generalized metric (zero self-distance, triangle
  inequality, asymmetry and infinity allowed) is a category over the
  nonnegative quantale; its completion embeds the points isometrically.
* Grid conjugation: a tabulated function conjugates through the inner-product
  pairing matrix over min-plus, f*(p) = max_v (<p,v> - f(v)), with the
  biconjugate the other residuation; both are exact on rationals.
"""

from fractions import Fraction

from .category import QCategory, check_qcategory, hull_hom
from .errors import FormatError, MembershipError, ScalarError, ShapeMismatch
from .isbell import (IsbellPair, closure_row, enumerate_hull, is_member,
                     make_pair)
from .matrix import (QMatrix, col, right_extension, right_lifting, row,
                     row_vector, transpose)
from .quantale import (BOOL, INT_MAX_PLUS, LAWVERE, MAX_PLUS, MIN_PLUS,
                       format_scalar, is_finite)


class Context:
    """A Boolean incidence relation between objects and attributes."""

    __slots__ = ("objects", "attributes", "incidence")

    def __init__(self, objects, attributes, incidence):
        objects = tuple(objects)
        attributes = tuple(attributes)
        if not isinstance(incidence, QMatrix):
            incidence = QMatrix(BOOL, objects, attributes, incidence)
        if incidence.quantale is not BOOL:
            raise FormatError("incidence must be a bool matrix")
        if incidence.rows != objects or incidence.cols != attributes:
            raise ShapeMismatch("incidence shape must be objects x attributes")
        self.objects = objects
        self.attributes = attributes
        self.incidence = incidence


def concepts(ctx):
    """The concept lattice: all (intent, extent) fixed pairs of the incidence.

    The first coordinate of each pair marks the attributes of the intent, the
    second the objects of the extent; extent = the objects bearing every
    intent attribute.
    """
    return enumerate_hull(ctx.incidence)


def concept_intent(pair):
    """Attribute labels marked in the pair's first coordinate."""
    return tuple(a for a, v in zip(pair.X.cols, pair.X.entries[0]) if v)


def concept_extent(pair):
    """Object labels marked in the pair's second coordinate."""
    return tuple(c for c, entr in zip(pair.Y.rows, pair.Y.entries) if entr[0])


def _check_tropical(Z):
    if Z.quantale is not MAX_PLUS and Z.quantale is not INT_MAX_PLUS:
        raise FormatError("tropical operations need a max-plus matrix, "
                          "got %s" % Z.quantale.name)


def matrix_is_finite(M):
    return all(is_finite(v) for entr in M.entries for v in entr)


def tropical_membership(Z, point):
    """True iff ``point`` (a finite row vector) lies in the row polytope of Z.

    Points with infinite coordinates are never members: the polytope is the
    finite part of the hull.
    """
    _check_tropical(Z)
    if not matrix_is_finite(point):
        return False
    return is_member(Z, point)


def tropical_closure(Z, point):
    """Least hull row above ``point``: the candidate certificate for membership."""
    _check_tropical(Z)
    return closure_row(Z, point)


def tropical_dual(Z, p):
    """The pair (Y-transposed, X-transposed) in the hull of Z transposed.

    An involutive anti-isomorphism of hull orders; needs a commutative
    quantale, which max-plus is.
    """
    _check_tropical(Z)
    if p.ambient != Z:
        raise MembershipError("pair does not belong to this ambient matrix")
    return make_pair(transpose(Z), transpose(p.Y), transpose(p.X))


class GeneralizedMetric:
    """Points with distances d(a, b) in [0, inf]: zero self-distance and the
    triangle inequality required, symmetry and finiteness not."""

    __slots__ = ("points", "dmat", "category")

    def __init__(self, points, d):
        points = tuple(points)
        if not isinstance(d, QMatrix):
            d = QMatrix(LAWVERE, points, points, d)
        if d.quantale is not LAWVERE:
            raise FormatError("distances must be lawvere values")
        if d.rows != points or d.cols != points:
            raise ShapeMismatch("distance matrix must be square over points")
        # hom[r][c] = C(c, r) = d(c, r): the hom matrix is the transpose of
        # the row-major d(i, j) table
        report = check_qcategory(points, transpose(d))
        if not report.ok:
            raise FormatError(
                "not a generalized metric (zero self-distance or triangle "
                "inequality fails)",
                ca1=list(report.ca1), ca2=[list(t) for t in report.ca2])
        self.points = points
        self.dmat = d
        self.category = report.category

    def d(self, a, b):
        return self.dmat.entry(a, b)

    @property
    def ambient(self):
        return self.category.hom


def tight_span_embed(m, point):
    """The fixed pair (row, column) of the hom matrix at ``point``."""
    Z = m.ambient
    return make_pair(Z, row(Z, point), col(Z, point))


def tight_span_hom(m, p, q):
    """Completion distance between two hull elements; embeds d isometrically:
    tight_span_hom(embed a, embed b) = d(a, b)."""
    if p.ambient != m.ambient or q.ambient != m.ambient:
        raise MembershipError("pair does not belong to this metric's hull")
    return hull_hom(p, q)


def tight_span_member(m, X):
    """True iff the row vector X is an element of the directed tight span."""
    return is_member(m.ambient, X)


def point_label(coords):
    """Canonical label for a grid point: comma-joined lowest-term coordinates."""
    return ",".join(format_scalar(c) for c in coords)


def _coerce_coord(c):
    if isinstance(c, bool):
        raise ScalarError("grid coordinates must be rational numbers")
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, float):
        if c != c or c in (float("inf"), float("-inf")):
            raise ScalarError("grid coordinates must be finite")
        return Fraction(c)
    if isinstance(c, str):
        try:
            return Fraction(c)
        except (ValueError, ZeroDivisionError):
            raise ScalarError("cannot parse coordinate %r" % c) from None
    raise ScalarError("cannot parse coordinate %r" % (c,))


def parse_grid(points, dim):
    """Validate a list of rational points in dimension ``dim`` (1..3)."""
    if not isinstance(dim, int) or isinstance(dim, bool) or not 1 <= dim <= 3:
        raise FormatError("grid dimension must be 1, 2, or 3, got %r" % (dim,))
    grid = []
    for pt in points:
        pt = tuple(_coerce_coord(c) for c in pt)
        if len(pt) != dim:
            raise ShapeMismatch("grid point %s has %d coordinates, expected %d"
                                % (point_label(pt), len(pt), dim))
        grid.append(pt)
    grid = tuple(grid)
    if not grid:
        raise FormatError("grid must be nonempty")
    if len(set(grid)) != len(grid):
        raise FormatError("grid points must be distinct")
    return grid


class GridFunction:
    """A function tabulated on a finite rational grid, valued in [-inf, inf]."""

    __slots__ = ("dim", "grid", "values")

    def __init__(self, dim, grid, values):
        self.grid = parse_grid(grid, dim)
        self.dim = dim
        values = tuple(MIN_PLUS.coerce(v) for v in values)
        if len(values) != len(self.grid):
            raise ShapeMismatch("expected %d values, got %d"
                                % (len(self.grid), len(values)))
        self.values = values

    def labels(self):
        return tuple(point_label(pt) for pt in self.grid)

    def as_row(self):
        return row_vector(MIN_PLUS, self.labels(), self.values)


def pairing_matrix(dual_grid, primal_grid):
    """<p, v> = sum_i p_i v_i as a min-plus matrix, dual rows x primal columns."""
    rows = tuple(point_label(p) for p in dual_grid)
    cols = tuple(point_label(v) for v in primal_grid)
    entries = tuple(
        tuple(sum((pi * vi for pi, vi in zip(p, v)), Fraction(0))
              for v in primal_grid)
        for p in dual_grid)
    return QMatrix(MIN_PLUS, rows, cols, entries)


def lf_conjugate(f, dual_grid):
    """f*(p) = max_v (<p, v> - f(v)) on the dual grid, exactly."""
    dual_grid = parse_grid(dual_grid, f.dim)
    P = pairing_matrix(dual_grid, f.grid)
    fstar = right_extension(P, f.as_row())
    return GridFunction(f.dim, dual_grid,
                        tuple(entr[0] for entr in fstar.entries))


def lf_biconjugate(f, dual_grid):
    """f**(v) = max_p (<p, v> - f*(p)) back on the primal grid, exactly."""
    dual_grid = parse_grid(dual_grid, f.dim)
    P = pairing_matrix(dual_grid, f.grid)
    fstar = right_extension(P, f.as_row())
    fss = right_lifting(fstar, P)
    return GridFunction(f.dim, f.grid, fss.entries[0])
