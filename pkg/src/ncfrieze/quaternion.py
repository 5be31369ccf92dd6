"""Quaternions with exact rational coefficients."""

from fractions import Fraction
from numbers import Rational

from .errors import DescriptorMismatch, NotInvertible


def _coerce(x):
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, Rational):
        return Quaternion(x)
    return NotImplemented


class Quaternion:
    """a + b*i + c*j + d*k with Fraction coefficients.

    Instances are immutable and hashable. Arithmetic with ints and
    Fractions treats them as real quaternions; anything else raises
    DescriptorMismatch.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @property
    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return "Quaternion({}, {}, {}, {})".format(*map(str, self.coeffs))

    def __str__(self):
        return render_quaternion(self)

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def _check(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            raise DescriptorMismatch(
                f"cannot combine quaternion with {type(other).__name__}")
        return o

    def __add__(self, other):
        o = self._check(other)
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        o = self._check(other)
        a1, b1, c1, d1 = self.coeffs
        a2, b2, c2, d2 = o.coeffs
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        return self._check(other) * self

    def conjugate(self):
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        """Squared Euclidean norm a^2 + b^2 + c^2 + d^2 (always rational)."""
        return self.a ** 2 + self.b ** 2 + self.c ** 2 + self.d ** 2

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise NotInvertible("zero quaternion is not invertible")
        return Quaternion(self.a / n, -self.b / n, -self.c / n, -self.d / n)


def render_quaternion(q):
    terms = []
    for coef, unit in zip(q.coeffs, ("", "i", "j", "k")):
        if coef == 0:
            continue
        if not unit:
            terms.append(str(coef))
        elif coef == 1:
            terms.append(unit)
        elif coef == -1:
            terms.append("-" + unit)
        else:
            terms.append(f"{coef}*{unit}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)
GENERATORS = {"i": I, "j": J, "k": K}
