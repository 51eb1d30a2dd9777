"""Quantale-enriched categories and the module structure carried by hulls.

A QCategory is a square matrix ``hom`` over one quantale with
``hom[c'][c] = C(c, c')`` (the hom from c to c' sits at row c', column c),
subject to

    CA1:  unit <= C(c, c)                          for every object c
    CA2:  mul(C(c', c''), C(c, c')) <= C(c, c'')   for every triple

For the two-element quantale this is a preorder; over the nonnegative
reals-with-infinity it is a generalized metric space (CA2 = triangle
inequality in the reversed order).

Hull elements form a complete lattice acted on by the quantale:

    hull_copower(Z, x, p): second coordinate rext(Y_p[c], x), first recovered
    hull_power(Z, x, p):   first coordinate rlift(x, X_p[a]), second recovered
    hull_hom(p, q) = meet_a rlift(X_p[a], X_q[a]) = meet_c rext(Y_p[c], Y_q[c])

tied together by the adjointness

    leq(x, hull_hom(p, q))  iff  hull_copower(Z, x, p) <= q
                            iff  p <= hull_power(Z, x, q).

The MacNeille completion of a QCategory is the hull of its hom matrix, with
c embedded as (row c, column c); the embedding is hom-preserving.
"""

from .errors import (AmbientMismatch, FormatError, ShapeMismatch,
                     UnknownLabel)
from .isbell import (IsbellHull, IsbellPair, enumerate_hull, hull_join,
                     hull_meet, make_pair, pair_leq)
from .matrix import (QMatrix, col, col_vector, reindex, right_extension,
                     right_lifting, row, row_vector)
from .quantale import BOOL, format_scalar


class QCategory:
    """Objects plus a hom matrix satisfying CA1 and CA2."""

    __slots__ = ("objects", "hom")

    def __init__(self, objects, hom):
        report = check_qcategory(objects, hom, _build=False)
        if report.ca1 or report.ca2:
            raise FormatError("hom matrix violates the category axioms",
                              ca1=report.ca1, ca2=report.ca2)
        objects = tuple(objects)
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "hom",
                           reindex(hom, rows=objects, cols=objects))

    def __setattr__(self, name, value):
        raise AttributeError("QCategory is immutable")

    @property
    def quantale(self):
        return self.hom.quantale

    def hom_value(self, c, cp):
        """C(c, c'): the hom from c to c'."""
        return self.hom.entry(cp, c)

    def __repr__(self):
        return "QCategory(%r over %s)" % (self.objects, self.quantale.name)


class QCatReport:
    """Axiom-check result: the category when clean, else the witnesses."""

    __slots__ = ("category", "ca1", "ca2")

    def __init__(self, category, ca1, ca2):
        self.category = category
        self.ca1 = ca1
        self.ca2 = ca2

    @property
    def ok(self):
        return not self.ca1 and not self.ca2


def check_qcategory(objects, hom, _build=True):
    """Check CA1/CA2; returns a QCatReport with object/triple witnesses."""
    objects = tuple(objects)
    if set(hom.rows) != set(objects) or set(hom.cols) != set(objects):
        raise ShapeMismatch("hom matrix must be square over the objects")
    hom = reindex(hom, rows=objects, cols=objects)
    q = hom.quantale
    n = len(objects)
    e = hom.entries
    ca1 = [objects[c] for c in range(n) if not q.leq(q.unit, e[c][c])]
    ca2 = []
    for c in range(n):
        for cp in range(n):
            for cpp in range(n):
                # C(c', c'') o C(c, c') <= C(c, c'')
                if not q.leq(q.mul(e[cpp][cp], e[cp][c]), e[cpp][c]):
                    ca2.append((objects[c], objects[cp], objects[cpp]))
    if ca1 or ca2 or not _build:
        return QCatReport(None, ca1, ca2)
    return QCatReport(QCategory(objects, hom), ca1, ca2)


def induced_preorder(C):
    """Boolean relation matrix: entry [c'][c] true iff unit <= C(c, c')."""
    q = C.quantale
    e = C.hom.entries
    n = len(C.objects)
    return QMatrix(BOOL, C.objects, C.objects, tuple(
        tuple(q.leq(q.unit, e[cp][c]) for c in range(n)) for cp in range(n)))


def isomorphic_objects(C):
    """Distinct object pairs related both ways by the induced preorder."""
    rel = induced_preorder(C).entries
    n = len(C.objects)
    return [(C.objects[i], C.objects[j])
            for i in range(n) for j in range(i + 1, n)
            if rel[j][i] and rel[i][j]]


def is_skeletal(C):
    return not isomorphic_objects(C)


def _object_index(C, c):
    try:
        return C.objects.index(c)
    except ValueError:
        raise UnknownLabel("no object %r in %r" % (c, C.objects)) from None


def copower_of(C, c, x, all_witnesses=False):
    """Object(s) c' with C(c', d) = rext(C(c, d), x) for every d, if any."""
    q = C.quantale
    x = q.coerce(x)
    e = C.hom.entries
    n = len(C.objects)
    ci = _object_index(C, c)
    target = tuple(q.rext(e[d][ci], x) for d in range(n))
    hits = [C.objects[cp] for cp in range(n)
            if all(e[d][cp] == target[d] for d in range(n))]
    if all_witnesses:
        return hits
    return hits[0] if hits else None


def power_of(C, c, x, all_witnesses=False):
    """Object(s) c' with C(d, c') = rlift(x, C(d, c)) for every d, if any."""
    q = C.quantale
    x = q.coerce(x)
    e = C.hom.entries
    n = len(C.objects)
    ci = _object_index(C, c)
    target = tuple(q.rlift(x, e[ci][d]) for d in range(n))
    hits = [C.objects[cp] for cp in range(n)
            if all(e[cp][d] == target[d] for d in range(n))]
    if all_witnesses:
        return hits
    return hits[0] if hits else None


def _col_payloads(Y):
    return tuple(entr[0] for entr in Y.entries)


def _row_payloads(X):
    return X.entries[0]


def _check_ambient(Z, *pairs):
    for p in pairs:
        if p.ambient != Z:
            raise AmbientMismatch("pair does not belong to this ambient matrix")


def hull_copower(Z, x, p):
    """The action x * p: rext acts on the second coordinate entrywise."""
    q = Z.quantale
    assert q.commutative
    _check_ambient(Z, p)
    x = q.coerce(x)
    Y = col_vector(q, Z.rows,
                   (q.rext(v, x) for v in _col_payloads(p.Y)),
                   label=p.Y.cols[0])
    return IsbellPair(Z, right_lifting(Y, Z), Y)


def hull_power(Z, x, p):
    """Right adjoint of the action: rlift acts on the first coordinate."""
    q = Z.quantale
    assert q.commutative
    _check_ambient(Z, p)
    x = q.coerce(x)
    X = row_vector(q, Z.cols,
                   (q.rlift(x, v) for v in _row_payloads(p.X)),
                   label=p.X.rows[0])
    return IsbellPair(Z, X, right_extension(Z, X))


def hull_hom(p, q_pair):
    """Largest x with hull_copower(Z, x, p) <= q, via either coordinate."""
    Z = p.ambient
    _check_ambient(Z, q_pair)
    q = Z.quantale
    via_x = q.meet(q.rlift(a, b) for a, b in
                   zip(_row_payloads(p.X), _row_payloads(q_pair.X)))
    via_y = q.meet(q.rext(a, b) for a, b in
                   zip(_col_payloads(p.Y), _col_payloads(q_pair.Y)))
    assert via_x == via_y
    return via_x


class SemimoduleView:
    """Hull of an ambient matrix viewed as a complete module over its quantale."""

    __slots__ = ("ambient",)

    def __init__(self, ambient):
        object.__setattr__(self, "ambient", ambient)

    def __setattr__(self, name, value):
        raise AttributeError("SemimoduleView is immutable")

    @property
    def quantale(self):
        return self.ambient.quantale

    def copower(self, x, p):
        return hull_copower(self.ambient, x, p)

    def power(self, x, p):
        return hull_power(self.ambient, x, p)

    def hom(self, p, q):
        return hull_hom(p, q)

    def meet(self, pairs):
        return hull_meet(self.ambient, pairs)

    def join(self, pairs):
        return hull_join(self.ambient, pairs)

    def enumerate(self):
        return enumerate_hull(self.ambient)


def check_semimodule_laws(Z, scalars, pairs):
    """Check the action, adjointness, and duality laws on sampled data.

    ``scalars``: payloads of Z's quantale; ``pairs``: hull elements of Z.
    Returns a list of violation records; expected empty.
    """
    q = Z.quantale
    scalars = tuple(q.coerce(x) for x in scalars)
    pairs = tuple(pairs)
    _check_ambient(Z, *pairs)
    report = []

    def bad(law, *witness):
        report.append({"law": law, "witness": [
            format_scalar(w) if not isinstance(w, IsbellPair) else repr(w)
            for w in witness]})

    cop = lambda x, p: hull_copower(Z, x, p)
    pow_ = lambda x, p: hull_power(Z, x, p)

    for p in pairs:
        if cop(q.unit, p) != p:
            bad("copower-unit", p)
        if pow_(q.unit, p) != p:
            bad("power-unit", p)
        if cop(q.bottom, p) != hull_join(Z, []):
            bad("copower-bottom", p)
        if not q.leq(q.unit, hull_hom(p, p)):
            bad("hom-unit", p)

    for p in pairs:
        for r in pairs:
            hx = q.meet(q.rlift(a, b) for a, b in
                        zip(_row_payloads(p.X), _row_payloads(r.X)))
            hy = q.meet(q.rext(a, b) for a, b in
                        zip(_col_payloads(p.Y), _col_payloads(r.Y)))
            if hx != hy:
                bad("hom-coordinate-agreement", p, r)

    for x in scalars:
        for y in scalars:
            for p in pairs:
                if cop(x, cop(y, p)) != cop(q.mul(y, x), p):
                    bad("copower-associativity", x, y, p)
                if pow_(x, pow_(y, p)) != pow_(q.mul(x, y), p):
                    bad("power-associativity", x, y, p)
                if cop(q.join2(x, y), p) != hull_join(Z, [cop(x, p), cop(y, p)]):
                    bad("copower-scalar-join", x, y, p)
                if pow_(q.join2(x, y), p) != hull_meet(Z, [pow_(x, p), pow_(y, p)]):
                    bad("power-scalar-join", x, y, p)

    for x in scalars:
        for p in pairs:
            for r in pairs:
                j = hull_join(Z, [p, r])
                if cop(x, j) != hull_join(Z, [cop(x, p), cop(x, r)]):
                    bad("copower-element-join", x, p, r)
                m = hull_meet(Z, [p, r])
                if pow_(x, m) != hull_meet(Z, [pow_(x, p), pow_(x, r)]):
                    bad("power-element-meet", x, p, r)
                a = q.leq(x, hull_hom(p, r))
                b = pair_leq(cop(x, p), r)
                c = pair_leq(p, pow_(x, r))
                if not (a == b == c):
                    bad("action-adjointness", x, p, r)

    for p in pairs:
        for r in pairs:
            for s in pairs:
                # hom composes: hom(r, s) o hom(p, r) <= hom(p, s)
                if not q.leq(q.mul(hull_hom(r, s), hull_hom(p, r)),
                             hull_hom(p, s)):
                    bad("hom-composition", p, r, s)

    return report


class MacNeilleCompletion:
    """Hull of a QCategory's hom matrix plus the canonical embedding."""

    __slots__ = ("category", "view", "embedding")

    def __init__(self, category, view, embedding):
        self.category = category
        self.view = view
        self.embedding = embedding

    @property
    def ambient(self):
        return self.view.ambient

    def embed(self, c):
        return self.embedding[c]

    def enumerate(self):
        return self.view.enumerate()


def macneille(C):
    """Complete a QCategory: its hull plus c |-> (row c, column c) of hom.

    Every image is a fixed pair and the embedding is hom-preserving:
    hull_hom(embed(c), embed(c')) = C(c, c').
    """
    Z = C.hom
    embedding = {c: make_pair(Z, row(Z, c), col(Z, c)) for c in C.objects}
    return MacNeilleCompletion(C, SemimoduleView(Z), embedding)
