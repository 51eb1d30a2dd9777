"""Quantale scalars: complete-lattice order, monoid multiplication, residuation.

A quantale here is a complete lattice with a unital multiplication that
preserves suprema in each argument.  Multiplication has two right adjoints,

    rext(z, x) = largest w with  mul(w, x) <= z      (z over x)
    rlift(y, z) = largest w with  mul(y, w) <= z     (y under z)

where ``<=`` is the quantale order ``leq``, which for the min-plus family is
the *reverse* of numeric order.  All built-in instances are commutative chains,
so ``rlift(y, z) == rext(z, y)`` and binary join/meet are just order maxima.

Payloads are exact: ``fractions.Fraction`` (or ``int`` for the integer
instances, ``bool`` for the two-element quantale) extended with the two
infinity sentinels ``POS_INF`` and ``NEG_INF``.  Floats are converted exactly
at the boundary and never used internally.
"""

from fractions import Fraction

from .errors import ScalarError, UnknownQuantale


class _Infinity:
    """Signed infinity sentinel, totally ordered against ints and Fractions."""

    __slots__ = ("_sign",)

    def __init__(self, sign):
        self._sign = sign

    def __repr__(self):
        return "inf" if self._sign > 0 else "-inf"

    def __eq__(self, other):
        return self is other

    def __ne__(self, other):
        return self is not other

    def __hash__(self):
        return hash(("residuate.inf", self._sign))

    def __neg__(self):
        return NEG_INF if self._sign > 0 else POS_INF

    def __lt__(self, other):
        if isinstance(other, _Infinity):
            return self._sign < other._sign
        if isinstance(other, (int, Fraction)):
            return self._sign < 0
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, _Infinity):
            return self._sign <= other._sign
        if isinstance(other, (int, Fraction)):
            return self._sign < 0
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, _Infinity):
            return self._sign > other._sign
        if isinstance(other, (int, Fraction)):
            return self._sign > 0
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, _Infinity):
            return self._sign >= other._sign
        if isinstance(other, (int, Fraction)):
            return self._sign > 0
        return NotImplemented


POS_INF = _Infinity(1)
NEG_INF = _Infinity(-1)


def is_finite(v):
    return not isinstance(v, _Infinity)


def format_scalar(v):
    """Canonical literal: lowest-term rational, "inf"/"-inf", "true"/"false"."""
    if v is POS_INF:
        return "inf"
    if v is NEG_INF:
        return "-inf"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)  # Fraction/int stringify in lowest terms


class Quantale:
    """One built-in quantale instance.  Subclasses fix order, unit, mul, rext.

    ``leq`` is the quantale order; ``bottom``/``top`` its extremes; ``unit``
    the monoid unit.  ``join``/``meet`` of finite families fold the binary
    operations (carriers here are chains, so the binary order maximum is the
    supremum); the empty join is ``bottom``, the empty meet ``top``.
    """

    name = None
    commutative = True
    unit = None
    bottom = None
    top = None

    def leq(self, a, b):
        raise NotImplementedError

    def mul(self, y, x):
        raise NotImplementedError

    def rext(self, z, x):
        raise NotImplementedError

    def rlift(self, y, z):
        # all built-ins are commutative
        return self.rext(z, y)

    def join2(self, a, b):
        return b if self.leq(a, b) else a

    def meet2(self, a, b):
        return a if self.leq(a, b) else b

    def join(self, values):
        out = self.bottom
        for v in values:
            out = self.join2(out, v)
        return out

    def meet(self, values):
        out = self.top
        for v in values:
            out = self.meet2(out, v)
        return out

    def coerce(self, v):
        """Normalize an input payload to this carrier, or raise ScalarError."""
        raise NotImplementedError

    def law_samples(self):
        """Frozen sample carrier for the law checker (full carrier for bool)."""
        raise NotImplementedError

    def __repr__(self):
        return "<quantale %s>" % self.name


def _coerce_rational(q, v):
    if isinstance(v, bool):
        raise ScalarError("%s carries numbers, not booleans" % q.name)
    if isinstance(v, _Infinity):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        if v != v:
            raise ScalarError("NaN is not a %s value" % q.name)
        if v == float("inf"):
            return POS_INF
        if v == float("-inf"):
            return NEG_INF
        return Fraction(v)
    raise ScalarError("not a %s value: %r" % (q.name, v))


def _coerce_integer(q, v):
    if isinstance(v, bool):
        raise ScalarError("%s carries integers, not booleans" % q.name)
    if isinstance(v, _Infinity):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, (Fraction, float)):
        w = _coerce_rational(q, v)
        if isinstance(w, _Infinity):
            return w
        if w.denominator == 1:
            return int(w)
        raise ScalarError("%s requires integer values, got %s" % (q.name, w))
    raise ScalarError("not a %s value: %r" % (q.name, v))


class _MaxPlus(Quantale):
    """([-inf, inf], <=) with extended addition; -inf annihilates."""

    name = "max-plus"
    unit = Fraction(0)
    bottom = NEG_INF
    top = POS_INF

    def leq(self, a, b):
        return a == b or a < b

    def mul(self, y, x):
        if y is NEG_INF or x is NEG_INF:
            return NEG_INF
        if y is POS_INF or x is POS_INF:
            return POS_INF
        return y + x

    def rext(self, z, x):
        if x is NEG_INF:
            return POS_INF
        if z is POS_INF:
            return POS_INF
        if x is POS_INF:
            return NEG_INF
        if z is NEG_INF:
            return NEG_INF
        return z - x

    def coerce(self, v):
        return _coerce_rational(self, v)

    def law_samples(self):
        return (NEG_INF, Fraction(-1), Fraction(0), Fraction(2), POS_INF)


class _IntMaxPlus(_MaxPlus):
    name = "int-max-plus"
    unit = 0

    def coerce(self, v):
        return _coerce_integer(self, v)

    def law_samples(self):
        return (NEG_INF, -2, 0, 3, POS_INF)


class _MinPlus(Quantale):
    """([-inf, inf], >=) with extended addition; +inf annihilates."""

    name = "min-plus"
    unit = Fraction(0)
    bottom = POS_INF
    top = NEG_INF

    def leq(self, a, b):
        return a == b or b < a

    def mul(self, y, x):
        if y is POS_INF or x is POS_INF:
            return POS_INF
        if y is NEG_INF or x is NEG_INF:
            return NEG_INF
        return y + x

    def rext(self, z, x):
        if x is POS_INF:
            return NEG_INF
        if z is NEG_INF:
            return NEG_INF
        if x is NEG_INF:
            return POS_INF
        if z is POS_INF:
            return POS_INF
        return z - x

    def coerce(self, v):
        return _coerce_rational(self, v)

    def law_samples(self):
        return (NEG_INF, Fraction(-1), Fraction(0), Fraction(2), POS_INF)


class _Lawvere(Quantale):
    """([0, inf], >=) with addition; residuation is truncated subtraction."""

    name = "lawvere"
    unit = Fraction(0)
    bottom = POS_INF
    top = Fraction(0)

    def leq(self, a, b):
        return a == b or b < a

    def mul(self, y, x):
        if y is POS_INF or x is POS_INF:
            return POS_INF
        return y + x

    def rext(self, z, x):
        if x is POS_INF:
            return self.top
        if z is POS_INF:
            return POS_INF
        d = z - x
        return d if d > 0 else self.top

    def _check_range(self, v):
        if v is NEG_INF or (is_finite(v) and v < 0):
            raise ScalarError("%s carries values in [0, inf], got %s"
                              % (self.name, format_scalar(v)))
        return v

    def coerce(self, v):
        return self._check_range(_coerce_rational(self, v))

    def law_samples(self):
        return (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3), POS_INF)


class _IntLawvere(_Lawvere):
    name = "int-lawvere"
    unit = 0
    top = 0

    def coerce(self, v):
        return self._check_range(_coerce_integer(self, v))

    def law_samples(self):
        return (0, 1, 2, 5, POS_INF)


class _MinMax(Quantale):
    """([0, inf], >=) with numeric maximum as multiplication."""

    name = "min-max"
    unit = Fraction(0)
    bottom = POS_INF
    top = Fraction(0)

    def leq(self, a, b):
        return a == b or b < a

    def mul(self, y, x):
        if y is POS_INF or x is POS_INF:
            return POS_INF
        return y if y >= x else x

    def rext(self, z, x):
        return self.top if x >= z else z

    def coerce(self, v):
        v = _coerce_rational(self, v)
        if v is NEG_INF or (is_finite(v) and v < 0):
            raise ScalarError("%s carries values in [0, inf], got %s"
                              % (self.name, format_scalar(v)))
        return v

    def law_samples(self):
        return (Fraction(0), Fraction(1), Fraction(2), Fraction(7), POS_INF)


class _Boolean(Quantale):
    """({false, true}, implication order) with conjunction."""

    name = "bool"
    unit = True
    bottom = False
    top = True

    def leq(self, a, b):
        return (not a) or b

    def mul(self, y, x):
        return y and x

    def rext(self, z, x):
        return (not x) or z

    def coerce(self, v):
        if isinstance(v, bool):
            return v
        raise ScalarError("bool carries booleans, got %r" % (v,))

    def law_samples(self):
        return (False, True)


BOOL = _Boolean()
MAX_PLUS = _MaxPlus()
MIN_PLUS = _MinPlus()
LAWVERE = _Lawvere()
MIN_MAX = _MinMax()
INT_MAX_PLUS = _IntMaxPlus()
INT_LAWVERE = _IntLawvere()

QUANTALES = {q.name: q for q in
             (BOOL, MAX_PLUS, MIN_PLUS, LAWVERE, MIN_MAX,
              INT_MAX_PLUS, INT_LAWVERE)}


def get_quantale(name):
    try:
        return QUANTALES[name]
    except KeyError:
        raise UnknownQuantale("unknown quantale %r (expected one of %s)"
                              % (name, ", ".join(sorted(QUANTALES)))) from None


def parse_scalar(lit, q):
    """Parse a file/CLI scalar literal into a payload of quantale ``q``.

    Accepts the canonical strings ("3", "-1/2", "inf", "-inf", "true",
    "false"), plain JSON numbers, and booleans for the bool quantale.
    """
    if isinstance(lit, str):
        s = lit.strip()
        if s == "inf":
            return q.coerce(POS_INF)
        if s == "-inf":
            return q.coerce(NEG_INF)
        if s == "true":
            return q.coerce(True)
        if s == "false":
            return q.coerce(False)
        try:
            return q.coerce(Fraction(s))
        except (ValueError, ZeroDivisionError):
            raise ScalarError("cannot parse scalar literal %r" % lit) from None
    if isinstance(lit, (bool, int, float)):
        return q.coerce(lit)
    raise ScalarError("cannot parse scalar literal %r" % (lit,))


def check_quantale_laws(q, samples=None):
    """Check monoid, sup-distributivity, lattice, and adjointness laws.

    Returns a list of violation records ``{"law": ..., "witness": [...]}``;
    empty for every built-in instance.  ``samples`` defaults to the frozen
    per-instance sample carrier.
    """
    if samples is None:
        samples = q.law_samples()
    samples = tuple(q.coerce(v) for v in samples)
    report = []
    fmt = format_scalar

    def bad(law, *witness):
        report.append({"law": law, "witness": [fmt(w) for w in witness]})

    for x in samples:
        if q.mul(q.unit, x) != x:
            bad("left-unit", x)
        if q.mul(x, q.unit) != x:
            bad("right-unit", x)
        if q.mul(q.bottom, x) != q.bottom:
            bad("left-annihilation", x)
        if q.mul(x, q.bottom) != q.bottom:
            bad("right-annihilation", x)
        if not q.leq(q.bottom, x) or not q.leq(x, q.top):
            bad("bounds", x)

    for x in samples:
        for y in samples:
            if q.commutative and q.mul(x, y) != q.mul(y, x):
                bad("commutativity", x, y)
            j = q.join2(x, y)
            m = q.meet2(x, y)
            if not (q.leq(x, j) and q.leq(y, j)):
                bad("join-upper-bound", x, y)
            if not (q.leq(m, x) and q.leq(m, y)):
                bad("meet-lower-bound", x, y)
            for c in samples:
                if q.leq(x, c) and q.leq(y, c) and not q.leq(j, c):
                    bad("join-least", x, y, c)
                if q.leq(c, x) and q.leq(c, y) and not q.leq(c, m):
                    bad("meet-greatest", x, y, c)

    for x in samples:
        for y in samples:
            for z in samples:
                if q.mul(q.mul(x, y), z) != q.mul(x, q.mul(y, z)):
                    bad("associativity", x, y, z)
                j = q.join2(x, y)
                if q.mul(j, z) != q.join2(q.mul(x, z), q.mul(y, z)):
                    bad("join-distributivity-left", x, y, z)
                if q.mul(z, j) != q.join2(q.mul(z, x), q.mul(z, y)):
                    bad("join-distributivity-right", x, y, z)
                a = q.leq(q.mul(y, x), z)
                b = q.leq(y, q.rext(z, x))
                c = q.leq(x, q.rlift(y, z))
                if not (a == b == c):
                    bad("adjointness", y, x, z)

    return report
