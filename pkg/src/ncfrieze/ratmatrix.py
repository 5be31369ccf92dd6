"""Square matrices over Q, used as elements of the matrix ring Mat_n(Q)."""

from fractions import Fraction
from math import lcm
from numbers import Rational

from .errors import DescriptorMismatch, DimensionMismatch, NotInvertible


class RatMatrix:
    """Immutable n x n matrix of Fractions.

    Ints and Fractions combine with a RatMatrix as scalar multiples of the
    identity.
    """

    __slots__ = ("rows", "n")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("RatMatrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def scalar(cls, n, q=1):
        q = Fraction(q)
        return cls([[q if r == c else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def identity(cls, n):
        return cls.scalar(n, 1)

    def __repr__(self):
        return f"RatMatrix({[[str(x) for x in r] for r in self.rows]})"

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = RatMatrix.scalar(self.n, other)
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __bool__(self):
        return any(any(r) for r in self.rows)

    def _check(self, other):
        if isinstance(other, RatMatrix):
            if other.n != self.n:
                raise DimensionMismatch(f"{self.n}x{self.n} vs {other.n}x{other.n}")
            return other
        if isinstance(other, Rational):
            return RatMatrix.scalar(self.n, other)
        raise DescriptorMismatch(f"cannot combine RatMatrix with {type(other).__name__}")

    def __add__(self, other):
        o = self._check(other)
        return RatMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, o.rows)])

    __radd__ = __add__

    def __neg__(self):
        return RatMatrix([[-x for x in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return RatMatrix([[x * other for x in r] for r in self.rows])
        o = self._check(other)
        cols = list(zip(*o.rows))
        return RatMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return self._check(other) * self

    def det(self):
        """Determinant via Bareiss fraction-free elimination."""
        # Clear denominators so the elimination stays in Z.
        scale = lcm(*(x.denominator for r in self.rows for x in r))
        a = [[int(x * scale) for x in r] for r in self.rows]
        n = self.n
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for p in range(k + 1, n):
                    if a[p][k] != 0:
                        a[k], a[p] = a[p], a[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return Fraction(sign * a[n - 1][n - 1], scale ** n)

    def inverse(self):
        """Gauss-Jordan inverse over Q."""
        n = self.n
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)]
               for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise NotInvertible("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [x / p for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return RatMatrix([r[n:] for r in aug])

