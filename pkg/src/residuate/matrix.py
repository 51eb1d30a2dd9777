"""Matrices over a quantale: composition, entrywise lattice, residuation.

A matrix X : A -|-> B is stored with ``rows`` = B, ``cols`` = A, entry
``X[b][a]``.  Index sets are ordered tuples of distinct string labels and may
be empty.  Binary operations require equal label *sets* and align positions by
label, so the order in which two files list their labels never changes a
result; representation equality (``==``) is strict about order.

Residuation transposes hom-sets of the composition:

    right_extension(Z, X)[c][b] = meet_a rext(Z[c][a], X[b][a])   (Z over X)
    right_lifting(Y, Z)[b][a]   = meet_c rlift(Y[c][b], Z[c][a])  (Y under Z)

with the counit laws  compose(right_extension(Z, X), X) <= Z  and
compose(Y, right_lifting(Y, Z)) <= Z.  Meets over an empty index set give the
all-top matrix.
"""

from .errors import FormatError, InstanceMismatch, ShapeMismatch, UnknownLabel

UNIT_LABEL = "*"


def _check_labels(labels, what):
    labels = tuple(labels)
    for lbl in labels:
        if not isinstance(lbl, str):
            raise FormatError("%s labels must be strings, got %r" % (what, lbl))
    if len(set(labels)) != len(labels):
        raise FormatError("duplicate %s labels: %r" % (what, labels))
    return labels


class QMatrix:
    """Immutable quantale-valued matrix with named rows and columns."""

    __slots__ = ("quantale", "rows", "cols", "entries")

    def __init__(self, quantale, rows, cols, entries):
        rows = _check_labels(rows, "row")
        cols = _check_labels(cols, "column")
        entries = tuple(tuple(entr) for entr in entries)
        if len(entries) != len(rows):
            raise ShapeMismatch("expected %d entry rows, got %d"
                                % (len(rows), len(entries)))
        for entr in entries:
            if len(entr) != len(cols):
                raise ShapeMismatch("expected %d entries per row, got %d"
                                    % (len(cols), len(entr)))
        object.__setattr__(self, "quantale", quantale)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(
            tuple(quantale.coerce(v) for v in entr) for entr in entries))

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.quantale is other.quantale and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.quantale.name, self.rows, self.cols, self.entries))

    def __repr__(self):
        from .quantale import format_scalar
        body = "; ".join(" ".join(format_scalar(v) for v in entr)
                         for entr in self.entries)
        return "QMatrix(%s, %r x %r, [%s])" % (
            self.quantale.name, self.rows, self.cols, body)

    def __matmul__(self, other):
        return compose(self, other)

    @property
    def T(self):
        return transpose(self)

    def entry(self, row_label, col_label):
        return self.entries[_index(self.rows, row_label)][
            _index(self.cols, col_label)]

    def is_row_vector(self):
        return len(self.rows) == 1

    def is_col_vector(self):
        return len(self.cols) == 1


def _index(labels, label):
    try:
        return labels.index(label)
    except ValueError:
        raise UnknownLabel("label %r not in %r" % (label, labels)) from None


def _same_quantale(*mats):
    q = mats[0].quantale
    for m in mats[1:]:
        if m.quantale is not q:
            raise InstanceMismatch("mixed quantales: %s vs %s"
                                   % (q.name, m.quantale.name))
    return q


def _perm(src_labels, dst_labels, what):
    if src_labels == dst_labels:
        return None
    if set(src_labels) != set(dst_labels):
        raise ShapeMismatch("%s labels disagree: %r vs %r"
                            % (what, dst_labels, src_labels))
    return tuple(src_labels.index(lbl) for lbl in dst_labels)


def reindex(X, rows=None, cols=None):
    """Permute X to the given row/column label orders (same label sets)."""
    rows = X.rows if rows is None else tuple(rows)
    cols = X.cols if cols is None else tuple(cols)
    rp = _perm(X.rows, rows, "row")
    cp = _perm(X.cols, cols, "column")
    if rp is None and cp is None:
        return X
    ent = X.entries
    if rp is not None:
        ent = tuple(ent[i] for i in rp)
    if cp is not None:
        ent = tuple(tuple(entr[j] for j in cp) for entr in ent)
    return QMatrix(X.quantale, rows, cols, ent)


def identity(labels, q):
    labels = tuple(labels)
    return QMatrix(q, labels, labels, tuple(
        tuple(q.unit if i == j else q.bottom for j in range(len(labels)))
        for i in range(len(labels))))


def compose(Y, X):
    """(Y o X)[c][a] = join_b mul(Y[c][b], X[b][a]); middle labels must match."""
    q = _same_quantale(Y, X)
    perm = _perm(X.rows, Y.cols, "middle index")
    Xe = X.entries if perm is None else tuple(X.entries[i] for i in perm)
    mul, join = q.mul, q.join
    nb = len(Y.cols)
    out = tuple(
        tuple(join(mul(yrow[b], Xe[b][a]) for b in range(nb))
              for a in range(len(X.cols)))
        for yrow in Y.entries)
    return QMatrix(q, Y.rows, X.cols, out)


def transpose(X):
    return QMatrix(X.quantale, X.cols, X.rows, tuple(
        tuple(X.entries[b][a] for b in range(len(X.rows)))
        for a in range(len(X.cols))))


def _aligned(A, B, what="matrix"):
    q = _same_quantale(A, B)
    B = reindex(B, rows=A.rows, cols=A.cols)
    return q, B


def mat_leq(A, B):
    """Entrywise order; requires equal row/column label sets."""
    q, B = _aligned(A, B)
    leq = q.leq
    return all(leq(a, b)
               for ra, rb in zip(A.entries, B.entries)
               for a, b in zip(ra, rb))


def _entrywise(op, mats, like):
    if not mats and like is None:
        raise ShapeMismatch("empty matrix family needs an explicit shape")
    base = mats[0] if mats else like
    q = base.quantale
    start = q.bottom if op == "join" else q.top
    fold = q.join2 if op == "join" else q.meet2
    acc = [[start] * len(base.cols) for _ in base.rows]
    for M in mats:
        _, M = _aligned(base, M)
        for i, entr in enumerate(M.entries):
            row = acc[i]
            for j, v in enumerate(entr):
                row[j] = fold(row[j], v)
    return QMatrix(q, base.rows, base.cols, acc)


def mat_join(mats, like=None):
    """Entrywise supremum; empty family gives the all-bottom matrix of ``like``."""
    return _entrywise("join", tuple(mats), like)


def mat_meet(mats, like=None):
    """Entrywise infimum; empty family gives the all-top matrix of ``like``."""
    return _entrywise("meet", tuple(mats), like)


def right_extension(Z, X):
    """Largest Y with compose(Y, X) <= Z;  Z : A -|-> C,  X : A -|-> B."""
    q = _same_quantale(Z, X)
    perm = _perm(X.cols, Z.cols, "column index")
    Xe = X.entries if perm is None else tuple(
        tuple(entr[j] for j in perm) for entr in X.entries)
    rext, meet = q.rext, q.meet
    na = len(Z.cols)
    out = tuple(
        tuple(meet(rext(zrow[a], xrow[a]) for a in range(na)) for xrow in Xe)
        for zrow in Z.entries)
    return QMatrix(q, Z.rows, X.rows, out)


def right_lifting(Y, Z):
    """Largest X with compose(Y, X) <= Z;  Y : B -|-> C,  Z : A -|-> C."""
    q = _same_quantale(Y, Z)
    perm = _perm(Z.rows, Y.rows, "row index")
    Ze = Z.entries if perm is None else tuple(Z.entries[i] for i in perm)
    rlift, meet = q.rlift, q.meet
    nc = len(Y.rows)
    out = tuple(
        tuple(meet(rlift(Y.entries[c][b], Ze[c][a]) for c in range(nc))
              for a in range(len(Z.cols)))
        for b in range(len(Y.cols)))
    return QMatrix(q, Y.cols, Z.cols, out)


def scalar_product(Y, X):
    """join_a mul(Y[*][a], X[a][*]) for a row vector Y and column vector X."""
    q = _same_quantale(Y, X)
    if not Y.is_row_vector() or not X.is_col_vector():
        raise ShapeMismatch("scalar_product wants a row vector and a column "
                            "vector, got %r x %r and %r x %r"
                            % (Y.rows, Y.cols, X.rows, X.cols))
    perm = _perm(X.rows, Y.cols, "index")
    Xe = X.entries if perm is None else tuple(X.entries[i] for i in perm)
    return q.join(q.mul(Y.entries[0][a], Xe[a][0]) for a in range(len(Y.cols)))


def row(X, label):
    i = _index(X.rows, label)
    return QMatrix(X.quantale, (label,), X.cols, (X.entries[i],))


def col(X, label):
    j = _index(X.cols, label)
    return QMatrix(X.quantale, X.rows, (label,),
                   tuple((entr[j],) for entr in X.entries))


def row_vector(q, labels, values, label=UNIT_LABEL):
    """Row vector A -|-> 1 from an iterable of payloads indexed by ``labels``."""
    return QMatrix(q, (label,), tuple(labels), (tuple(values),))


def col_vector(q, labels, values, label=UNIT_LABEL):
    """Column vector 1 -|-> C from an iterable of payloads indexed by ``labels``."""
    return QMatrix(q, tuple(labels), (label,), tuple((v,) for v in values))
