"""Exact arithmetic in the real field Q(sqrt2, sqrt5).

Every scalar that appears in the rank-3/rank-4 constructions (rationals,
1/sqrt2, the golden ratio tau = (1+sqrt5)/2 and its conjugate
sigma = (1-sqrt5)/2) lives in this field, so all downstream computations
are exact.  No floating point is used anywhere except for the optional
``approx`` display helper.

The rational ground type is gmpy2.mpq when available (much faster on the
group closures) and fractions.Fraction otherwise; both are exact and keep
lowest-terms canonical form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import isqrt

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is normally present
    _Q = Fraction

RATIONAL_TYPES = (int, Fraction) if _Q is Fraction else (int, Fraction, type(_Q(1)))


def _frac(x):
    if isinstance(x, RATIONAL_TYPES):
        return _Q(x)
    if isinstance(x, str):
        return _Q(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


_F0 = _Q(0)
_F1 = _Q(1)


def _sqrt_fraction(t):
    """Exact square root of a rational, or None if t is not a square."""
    if t < 0:
        return None
    num, den = t.numerator, t.denominator
    rn = isqrt(num)
    rd = isqrt(den)
    if rn * rn == num and rd * rd == den:
        return _Q(rn, rd)
    return None


# Elements of Q(sqrt5) are handled as (a, c) pairs meaning a + c*sqrt5.

def _q5_mul(x, y):
    return (x[0] * y[0] + 5 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _q5_div(x, y):
    n = y[0] * y[0] - 5 * y[1] * y[1]
    if n == 0:
        raise ZeroDivisionError("division by zero in Q(sqrt5)")
    conj = (y[0] / n, -y[1] / n)
    return _q5_mul(x, conj)


def _q5_sqrt(x):
    """A square root of a + c*sqrt5 inside Q(sqrt5), or None."""
    a, c = x
    if c == 0:
        p = _sqrt_fraction(a)
        if p is not None:
            return (p, _F0)
        r = _sqrt_fraction(a / 5)
        if r is not None:
            return (_F0, r)
        return None
    # (p + r*sqrt5)^2 = a + c*sqrt5 forces z = p^2 to solve
    # z^2 - a z + 5 c^2 / 4 = 0.
    disc = _sqrt_fraction(a * a - 5 * c * c)
    if disc is None:
        return None
    for z in ((a + disc) / 2, (a - disc) / 2):
        p = _sqrt_fraction(z)
        if p:
            r = c / (2 * p)
            cand = (p, r)
            if _q5_mul(cand, cand) == (a, c):
                return cand
    return None


def _sqrt_bounds(n: int, prec: int):
    """Rational lower/upper bounds of sqrt(n) tight to 2**-prec."""
    r = isqrt(n << (2 * prec))
    return _Q(r, 1 << prec), _Q(r + 1, 1 << prec)


@total_ordering
class FieldScalar:
    """a + b*sqrt2 + c*sqrt5 + d*sqrt10 with exact rational components.

    Immutable; components are canonical (lowest terms, positive
    denominator), so equality and hashing are componentwise.
    """

    __slots__ = ("a", "b", "c", "d", "_hash")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))
        object.__setattr__(self, "c", _frac(c))
        object.__setattr__(self, "d", _frac(d))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            return self
        if not self:
            return other
        return FieldScalar(self.a + other.a, self.b + other.b,
                           self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            return self
        return FieldScalar(self.a - other.a, self.b - other.b,
                           self.c - other.c, self.d - other.d)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return FieldScalar(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self or not other:
            return ZERO
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        # sqrt2*sqrt2=2, sqrt5*sqrt5=5, sqrt2*sqrt5=sqrt10, sqrt10*sqrt10=10
        return FieldScalar(
            a1 * a2 + 2 * b1 * b2 + 5 * c1 * c2 + 10 * d1 * d2,
            a1 * b2 + b1 * a2 + 5 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.a, self.b, self.c, self.d))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    # -- field operations --------------------------------------------------

    def conj_sqrt2(self) -> FieldScalar:
        """Galois map sqrt2 -> -sqrt2 (also flips sqrt10)."""
        return FieldScalar(self.a, -self.b, self.c, -self.d)

    def conj_sqrt5(self) -> FieldScalar:
        """Galois map sqrt5 -> -sqrt5 (also flips sqrt10)."""
        return FieldScalar(self.a, self.b, -self.c, -self.d)

    def inverse(self) -> FieldScalar:
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        # Multiply by all other Galois conjugates; the full product is the
        # rational field norm.
        partial = self.conj_sqrt2() * self.conj_sqrt5() * self.conj_sqrt2().conj_sqrt5()
        norm = self * partial
        assert not (norm.b or norm.c or norm.d)
        inv = 1 / norm.a
        return FieldScalar(partial.a * inv, partial.b * inv,
                           partial.c * inv, partial.d * inv)

    def sign(self) -> int:
        """Exact sign (-1, 0, +1) via refined rational enclosures.

        {1, sqrt2, sqrt5, sqrt10} are linearly independent over Q, so a
        componentwise-nonzero element is a nonzero real and the interval
        eventually excludes zero.
        """
        if not self:
            return 0
        if not (self.b or self.c or self.d):
            return -1 if self.a < 0 else 1
        prec = 24
        while prec <= 3072:
            lo = hi = self.a
            for coef, n in ((self.b, 2), (self.c, 5), (self.d, 10)):
                if not coef:
                    continue
                blo, bhi = _sqrt_bounds(n, prec)
                if coef > 0:
                    lo += coef * blo
                    hi += coef * bhi
                else:
                    lo += coef * bhi
                    hi += coef * blo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2
        raise ArithmeticError(f"sign of {self!r} undecided at max precision")

    def sqrt(self) -> FieldScalar | None:
        """The nonnegative square root if it lies in the field, else None."""
        if not self:
            return ZERO
        if self.sign() < 0:
            return None
        # Split as A + B*sqrt2 with A, B in Q(sqrt5).
        A = (self.a, self.c)
        B = (self.b, self.d)
        root = None
        if B == (_F0, _F0):
            p = _q5_sqrt(A)
            if p is not None:
                root = FieldScalar(p[0], 0, p[1], 0)
            else:
                q = _q5_sqrt((A[0] / 2, A[1] / 2))
                if q is not None:
                    root = FieldScalar(0, q[0], 0, q[1])
        else:
            # x = P + Q*sqrt2 with P^2 + 2Q^2 = A and 2PQ = B, so z = P^2
            # solves z^2 - A z + B^2/2 = 0 over Q(sqrt5).
            aa = _q5_mul(A, A)
            bb = _q5_mul(B, B)
            disc = _q5_sqrt((aa[0] - 2 * bb[0], aa[1] - 2 * bb[1]))
            if disc is not None:
                for z in (((A[0] + disc[0]) / 2, (A[1] + disc[1]) / 2),
                          ((A[0] - disc[0]) / 2, (A[1] - disc[1]) / 2)):
                    p = _q5_sqrt(z)
                    if p is not None and p != (_F0, _F0):
                        q = _q5_div((B[0] / 2, B[1] / 2), p)
                        root = FieldScalar(p[0], q[0], p[1], q[1])
                        break
        if root is None:
            return None
        if root * root != self:
            return None
        return root if root.sign() >= 0 else -root

    # -- conversions, display ----------------------------------------------

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def approx(self) -> float:
        """Floating-point value, for display only."""
        return (float(self.a) + float(self.b) * 2 ** 0.5
                + float(self.c) * 5 ** 0.5 + float(self.d) * 10 ** 0.5)

    def to_json(self) -> list[str]:
        return [f"{f.numerator}/{f.denominator}"
                for f in (self.a, self.b, self.c, self.d)]

    @classmethod
    def from_json(cls, data) -> FieldScalar:
        if len(data) != 4:
            raise ValueError("FieldScalar JSON form needs exactly 4 entries")
        return cls(*data)

    def __repr__(self):
        return f"FieldScalar({self.a!s}, {self.b!s}, {self.c!s}, {self.d!s})"

    def __str__(self):
        for value, name in _NAMED:
            if self == value:
                return name
        terms = []
        for coef, label in ((self.a, ""), (self.b, "√2"),
                            (self.c, "√5"), (self.d, "√10")):
            if not coef:
                continue
            mag = abs(coef)
            if label and mag == 1:
                body = label
            elif label:
                body = f"{mag}·{label}"
            else:
                body = str(mag)
            if not terms:
                terms.append(body if coef > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"


def _coerce(x):
    if isinstance(x, FieldScalar):
        return x
    if isinstance(x, RATIONAL_TYPES):
        return FieldScalar(x)
    return None


ZERO = FieldScalar(0)
ONE = FieldScalar(1)
SQRT2 = FieldScalar(0, 1)
SQRT5 = FieldScalar(0, 0, 1)
SQRT10 = FieldScalar(0, 0, 0, 1)
TAU = FieldScalar(_Q(1, 2), 0, _Q(1, 2), 0)
SIGMA = FieldScalar(_Q(1, 2), 0, _Q(-1, 2), 0)

_NAMED = ((TAU, "τ"), (-TAU, "-τ"), (SIGMA, "σ"), (-SIGMA, "-σ"))
