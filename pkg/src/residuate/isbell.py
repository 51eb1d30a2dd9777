"""Fixed pairs of the residuation adjunction on rows and columns of Z.

For an ambient matrix Z : A -|-> C the antitone maps

    X (row over A)    |->  right_extension(Z, X)   (column over C)
    Y (column over C) |->  right_lifting(Y, Z)     (row over A)

form a Galois connection whose fixed pairs (X, Y) with Y = Z over X and
X = Y under Z are the hull elements.  Both composites are closure operators
in the ordinary entrywise order:

    closure_row(Z, X) = (Z over X) under Z
    closure_col(Z, Y) = Z over (Y under Z)

The hull is a complete lattice ordered by the first coordinate (equivalently
by the reversed second coordinate): meets take entrywise meets of the X's,
joins take entrywise meets of the Y's, and the missing coordinate is recovered
through Z.
"""

import os

from .errors import (AmbientMismatch, FormatError, GuardExceeded,
                     MembershipError, NotEnumerable, NotUnderApproximating)
from .matrix import (QMatrix, col_vector, compose, mat_leq, mat_meet, reindex,
                     right_extension, right_lifting, row_vector)
from .quantale import BOOL

DEFAULT_GUARD_EXPONENT = 20


def guard_exponent():
    """Enumeration guard exponent; RESIDUATE_GUARD overrides the default 20."""
    raw = os.environ.get("RESIDUATE_GUARD")
    if raw is None:
        return DEFAULT_GUARD_EXPONENT
    try:
        return int(raw)
    except ValueError:
        raise FormatError("RESIDUATE_GUARD must be an integer exponent, "
                          "got %r" % raw) from None


class IsbellPair:
    """A fixed pair (X, Y) of the adjunction induced by the ambient matrix."""

    __slots__ = ("ambient", "X", "Y")

    def __init__(self, ambient, X, Y):
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "X", reindex(X, cols=ambient.cols))
        object.__setattr__(self, "Y", reindex(Y, rows=ambient.rows))
        if self.X.rows != self.Y.cols:
            raise FormatError("pair coordinates disagree on the unit label: "
                              "%r vs %r" % (self.X.rows, self.Y.cols))

    def __setattr__(self, name, value):
        raise AttributeError("IsbellPair is immutable")

    def __iter__(self):
        return iter((self.X, self.Y))

    def __eq__(self, other):
        if not isinstance(other, IsbellPair):
            return NotImplemented
        return (self.ambient == other.ambient and self.X == other.X
                and self.Y == other.Y)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.ambient, self.X, self.Y))

    def __repr__(self):
        return "IsbellPair(X=%r, Y=%r)" % (self.X, self.Y)


def closure_row(Z, X):
    """Least hull first coordinate above X: extensive, monotone, idempotent."""
    return right_lifting(right_extension(Z, X), Z)


def closure_col(Z, Y):
    """Least hull second coordinate above Y (ordinary entrywise order)."""
    return right_extension(Z, right_lifting(Y, Z))


def is_member(Z, X):
    """True iff X is fixed, i.e. X = Y under Z for some column Y."""
    cx = closure_row(Z, X)
    return cx == reindex(X, rows=cx.rows, cols=cx.cols)


def make_pair(Z, X, Y):
    """Validate both fixed-point equations and build the pair."""
    p = IsbellPair(Z, X, Y)
    if right_extension(Z, p.X) != p.Y:
        raise MembershipError("second coordinate is not Z over X")
    if right_lifting(p.Y, Z) != p.X:
        raise MembershipError("first coordinate is not Y under Z")
    return p


def pair_from_row(Z, X):
    """The pair with first coordinate X; X must already be fixed."""
    Y = right_extension(Z, X)
    X2 = right_lifting(Y, Z)
    if X2 != reindex(X, rows=X2.rows, cols=X2.cols):
        raise MembershipError("row is not fixed; its closure differs")
    return IsbellPair(Z, X2, Y)


def pair_from_col(Z, Y):
    """The pair with second coordinate Y; Y must already be fixed."""
    X = right_lifting(Y, Z)
    Y2 = right_extension(Z, X)
    if Y2 != reindex(Y, rows=Y2.rows, cols=Y2.cols):
        raise MembershipError("column is not fixed; its closure differs")
    return IsbellPair(Z, X, Y2)


def complete_pair(Z, X, Y):
    """Grow an under-approximating pair (compose(Y, X) <= Z) to a fixed pair.

    Returns (X', Y') with X <= X', Y <= Y': Y' = Z over X, then
    X' = Y' under Z.  The precondition forces Y <= Z over X, so closing from
    the first coordinate can never shrink the second; the re-check below
    reports the obstructing coordinate should that invariant ever break.
    """
    if not mat_leq(compose(Y, X), Z):
        raise NotUnderApproximating(
            "compose(Y, X) is not below the ambient matrix")
    Yfull = right_extension(Z, X)
    if not mat_leq(reindex(Y, rows=Yfull.rows, cols=Yfull.cols), Yfull):
        raise NotUnderApproximating(
            "second coordinate exceeds Z over X", coordinate="Y")
    Xfull = right_lifting(Yfull, Z)
    return IsbellPair(Z, Xfull, Yfull)


def pair_leq(p, q):
    """Hull order: first coordinates entrywise (second reversed)."""
    _same_ambient(p, q)
    return mat_leq(p.X, q.X)


def _same_ambient(*pairs):
    Z = pairs[0].ambient
    for p in pairs[1:]:
        if p.ambient != Z:
            raise AmbientMismatch("pairs come from different ambient matrices")
    return Z


def _top_row(Z, label="*"):
    q = Z.quantale
    return row_vector(q, Z.cols, (q.top,) * len(Z.cols), label=label)


def _top_col(Z, label="*"):
    q = Z.quantale
    return col_vector(q, Z.rows, (q.top,) * len(Z.rows), label=label)


def hull_meet(Z, pairs):
    """Infimum of hull elements: entrywise meet of X's, Y recovered from Z."""
    pairs = tuple(pairs)
    if pairs:
        _same_ambient(*pairs)
        if pairs[0].ambient != Z:
            raise AmbientMismatch("pairs do not belong to this ambient matrix")
    unit = pairs[0].X.rows[0] if pairs else "*"
    Xm = mat_meet([p.X for p in pairs], like=_top_row(Z, unit))
    return IsbellPair(Z, Xm, right_extension(Z, Xm))


def hull_join(Z, pairs):
    """Supremum of hull elements: entrywise meet of Y's, X recovered from Z.

    The join is computed on second coordinates, whose hull order is the
    reverse of the entrywise one, so the entrywise operation is a meet.
    """
    pairs = tuple(pairs)
    if pairs:
        _same_ambient(*pairs)
        if pairs[0].ambient != Z:
            raise AmbientMismatch("pairs do not belong to this ambient matrix")
    unit = pairs[0].Y.cols[0] if pairs else "*"
    Ym = mat_meet([p.Y for p in pairs], like=_top_col(Z, unit))
    return IsbellPair(Z, right_lifting(Ym, Z), Ym)


class IsbellHull:
    """Explicitly enumerated hull: ambient matrix plus all fixed pairs.

    Elements are listed in a linear extension of the hull order (bottom
    first, top last).
    """

    __slots__ = ("ambient", "elements")

    def __init__(self, ambient, elements):
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "elements", tuple(elements))

    def __setattr__(self, name, value):
        raise AttributeError("IsbellHull is immutable")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def bottom(self):
        return self.elements[0]

    def top(self):
        return self.elements[-1]

    def index(self, pair):
        return self.elements.index(pair)

    def covers(self):
        """Covering pairs (i, j): element j covers element i in the hull order."""
        els = self.elements
        n = len(els)
        below = [[pair_leq(els[i], els[j]) and i != j for j in range(n)]
                 for i in range(n)]
        out = []
        for i in range(n):
            for j in range(n):
                if below[i][j] and not any(
                        below[i][k] and below[k][j] for k in range(n)):
                    out.append((i, j))
        return tuple(out)


def enumerate_hull(Z):
    """All fixed pairs of a two-element-quantale matrix, as an IsbellHull.

    Enumerates the 2^|A| candidate rows; refuses when |A| exceeds the guard
    exponent (RESIDUATE_GUARD overrides the default 20).
    """
    if Z.quantale is not BOOL:
        raise NotEnumerable("hull enumeration needs the bool quantale, "
                            "got %s" % Z.quantale.name)
    guard = guard_exponent()
    n = len(Z.cols)
    if n > guard:
        raise GuardExceeded(
            "enumeration needs 2^%d candidates; the guard allows 2^%d "
            "(set RESIDUATE_GUARD to raise it)" % (n, guard),
            needed_exponent=n, guard_exponent=guard)
    found = []
    for bits in range(1 << n):
        X = row_vector(BOOL, Z.cols,
                       tuple(bool(bits >> i & 1) for i in range(n)))
        Y = right_extension(Z, X)
        if right_lifting(Y, Z) == X:
            key = tuple(X.entries[0])
            found.append((sum(key), key, IsbellPair(Z, X, Y)))
    found.sort(key=lambda t: (t[0], t[1]))
    return IsbellHull(Z, [t[2] for t in found])
