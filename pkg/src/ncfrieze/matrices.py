"""Small matrices whose entries live in a (noncommutative) ring."""

from __future__ import annotations

from .errors import DescriptorMismatch, DimensionMismatch, NotInvertible
from .ratmatrix import RatMatrix


class RingMatrix:
    """Immutable rectangular matrix over ``ring``."""

    def __init__(self, ring, rows):
        rows = tuple(tuple(ring.coerce(x) for x in row) for row in rows)
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("RingMatrix must be rectangular and nonempty")
        self.ring = ring
        self.rows = rows

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def __repr__(self):
        body = "; ".join(", ".join(self.ring.render_text(x) for x in r) for r in self.rows)
        return f"RingMatrix[{self.ring.spec}]([{body}])"

    def __mul__(self, other):
        return mat_mul(self, other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __neg__(self):
        return RingMatrix(self.ring, [[-x for x in r] for r in self.rows])

    def __add__(self, other):
        _same_ring(self, other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return RingMatrix(self.ring, [[x + y for x, y in zip(r, s)]
                                      for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return mat_eq(self, other)

    __hash__ = None

    def transpose(self):
        return RingMatrix(self.ring, list(zip(*self.rows)))

    def row(self, r):
        return RingMatrix(self.ring, [self.rows[r]])

    def col(self, c):
        return RingMatrix(self.ring, [[r[c]] for r in self.rows])

    def minor(self, i, j):
        """Delete row ``i`` and column ``j`` (0-based)."""
        return RingMatrix(self.ring, [[x for c, x in enumerate(r) if c != j]
                                      for rr, r in enumerate(self.rows) if rr != i])

    def render(self):
        return [[self.ring.render_text(x) for x in r] for r in self.rows]


def _same_ring(a, b):
    if a.ring != b.ring:
        raise DescriptorMismatch(f"{a.ring.spec} vs {b.ring.spec}")


def identity(n, ring):
    one, zero = ring.one(), ring.zero()
    return RingMatrix(ring, [[one if r == c else zero for c in range(n)] for r in range(n)])


def mat_neg_identity(n, ring):
    return -identity(n, ring)


def mat_mul(a, b):
    _same_ring(a, b)
    (n, k), (k2, p) = a.shape, b.shape
    if k != k2:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    out = []
    for r in a.rows:
        row = []
        for c in range(p):
            acc = r[0] * b.rows[0][c]
            for t in range(1, k):
                acc = acc + r[t] * b.rows[t][c]
            row.append(acc)
        out.append(row)
    return RingMatrix(a.ring, out)


def mat_eq(a, b):
    _same_ring(a, b)
    if a.shape != b.shape:
        return False
    eq = a.ring.equal
    return all(eq(x, y) for r, s in zip(a.rows, b.rows) for x, y in zip(r, s))


def is_identity(a):
    n, p = a.shape
    return n == p and mat_eq(a, identity(n, a.ring))


def invert_2x2(a):
    """Inverse of a 2x2 matrix via the noncommutative closed formula.

    With A = [[a, b], [c, d]] the result is::

        [[-c^-1 d (b - a c^-1 d)^-1,  -a^-1 b (d - c a^-1 b)^-1],
         [        (b - a c^-1 d)^-1,          (d - c a^-1 b)^-1]]

    The formula needs a, c and both Schur-type complements invertible.  If
    one of them is not, exact elimination is used instead (not available
    for the free ring).
    """
    try:
        return _invert_2x2_formula(a)
    except NotInvertible as exc:
        if a.ring.kind == "free":
            raise
        try:
            return invert(a)
        except NotInvertible:
            raise NotInvertible(
                f"matrix is singular (formula failed at {exc.subexpr})", exc.subexpr) from exc


def _invert_2x2_formula(m):
    if m.shape != (2, 2):
        raise DimensionMismatch("invert_2x2 needs a 2x2 matrix")
    ring = m.ring
    (a, b), (c, d) = m.rows

    def inv(x, name):
        if not ring.is_unit(x):
            raise NotInvertible(f"{name} is not invertible", name)
        return ring.inv(x)

    ai = inv(a, "a")
    ci = inv(c, "c")
    s1 = inv(b - a * ci * d, "b - a*c^-1*d")
    s2 = inv(d - c * ai * b, "d - c*a^-1*b")
    return RingMatrix(ring, [[-(ci * d * s1), -(ai * b * s2)], [s1, s2]])


def invert(m):
    """Exact inverse of a square RingMatrix by elimination.

    Division rings use noncommutative Gauss-Jordan with left row
    operations; matrix rings are flattened to one big rational matrix.
    """
    n, p = m.shape
    if n != p:
        raise DimensionMismatch("only square matrices are invertible")
    ring = m.ring
    if ring.kind == "matrix":
        return _invert_block(m)
    if not ring.is_division_ring:
        raise NotInvertible(f"elimination is not available over {ring.spec}")
    one, zero = ring.one(), ring.zero()
    aug = [list(r) + [one if i == j else zero for j in range(n)]
           for i, r in enumerate(m.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if ring.is_unit(aug[r][col])), None)
        if piv is None:
            raise NotInvertible("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pinv = ring.inv(aug[col][col])
        aug[col] = [pinv * x for x in aug[col]]
        for r in range(n):
            f = aug[r][col]
            if r != col and not ring.is_zero(f):
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return RingMatrix(ring, [r[n:] for r in aug])


def _invert_block(m):
    n, k = m.shape[0], m.ring.dim
    big = [[m.rows[bi][bj].rows[i][j] for bj in range(n) for j in range(k)]
           for bi in range(n) for i in range(k)]
    inv = RatMatrix(big).inverse()
    return RingMatrix(m.ring, [
        [RatMatrix([inv.rows[bi * k + i][bj * k:(bj + 1) * k] for i in range(k)])
         for bj in range(n)] for bi in range(n)])
