"""Noncommutative quiddity cycles.

A cycle on m vertices is a tuple (d, d'; c) of ring elements with all d_i,
d_i' invertible such that

    mu(c_0, d_1, d_0', d_0) mu(c_1, d_2, d_1', d_1) ... mu(c_{m-1}, d_0, d_{m-1}', d_{m-1}) = -id.

For a frieze, d_i = c_{i,i+1}, d_i' = c_{i+1,i} and c_i = c_{i,i+2}.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import propagation
from .errors import ConstraintViolated, NotInvertible
from .matrices import mat_mul
from .propagation import is_neg_identity, mu


@dataclass(frozen=True)
class QuiddityCycle:
    ring: object
    d: tuple
    dprime: tuple
    c: tuple
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for name in ("d", "dprime", "c"):
            vals = tuple(self.ring.coerce(x) for x in getattr(self, name))
            object.__setattr__(self, name, vals)
        if not (len(self.d) == len(self.dprime) == len(self.c) >= 1):
            raise ValueError("d, dprime and c must have the same positive length")
        for name, seq in (("d", self.d), ("dprime", self.dprime)):
            for n, x in enumerate(seq):
                if not self.ring.is_unit(x):
                    raise NotInvertible(f"{name}[{n}] must be invertible", (name, n))

    @property
    def m(self):
        return len(self.d)

    def factor(self, p):
        m = self.m
        p %= m
        return mu(self.c[p], self.d[(p + 1) % m], self.dprime[p], self.d[p], self.ring)

    def factors(self):
        return [self.factor(p) for p in range(self.m)]

    def product(self):
        fs = self.factors()
        acc = fs[0]
        for f in fs[1:]:
            acc = mat_mul(acc, f)
        return acc

    def rotate(self, k):
        """Relabel so that old index k becomes 0 (the product is conjugated, -id is kept)."""
        k %= self.m
        rot = lambda s: s[k:] + s[:k]
        return replace(self, d=rot(self.d), dprime=rot(self.dprime), c=rot(self.c))

    def equal(self, other):
        eq = self.ring.equal
        return (self.ring == other.ring and self.m == other.m
                and all(eq(a, b) for a, b in zip(self.d + self.dprime + self.c,
                                                 other.d + other.dprime + other.c)))


def verify_cycle(q):
    return is_neg_identity(q.product())


def extract(fr):
    d, dprime, c = propagation.extract_seed(fr)
    return QuiddityCycle(fr.ring, d, dprime, c)


def complete(q):
    """The frieze with boundary (d, d') and second diagonal c."""
    return propagation.complete(q.d, q.dprime, q.c, q.ring)


def m2_family(d0, d0p, ring):
    """The m=2 cycle (d_0, d_0'; d_0', d_0; 0, 0)."""
    z = ring.zero()
    return QuiddityCycle(ring, (d0, d0p), (d0p, d0), (z, z))


def m3_constraint_sides(d, dprime, ring):
    """Both sides of d_2 (d_0')^-1 d_1 = d_1' d_0^-1 d_2'."""
    inv = ring.inv
    return d[2] * inv(dprime[0]) * d[1], dprime[1] * inv(d[0]) * dprime[2]


def m3_family(d, dprime, ring):
    """The m=3 cycle (d, d'; d_2', d_0', d_1'), provided the constraint holds."""
    d = [ring.coerce(x) for x in d]
    dprime = [ring.coerce(x) for x in dprime]
    for x in d + dprime:
        if not ring.is_unit(x):
            raise NotInvertible(f"{ring.render_text(x)} is not invertible")
    lhs, rhs = m3_constraint_sides(d, dprime, ring)
    if not ring.equal(lhs, rhs):
        raise ConstraintViolated(
            f"d2 (d0')^-1 d1 = {ring.render_text(lhs)} but d1' d0^-1 d2' = {ring.render_text(rhs)}")
    return QuiddityCycle(ring, d, dprime, (dprime[2], dprime[0], dprime[1]))


def m3_solve_d2prime(d, d0p, d1p, ring):
    """The unique d_2' making the m=3 constraint hold: d_0 (d_1')^-1 d_2 (d_0')^-1 d_1."""
    inv = ring.inv
    return d[0] * inv(d1p) * d[2] * inv(d0p) * d[1]


def reduction_factors(cm, c0, cp, dm, d0, d1, d2, dpm, dp0, dp1, ring):
    """Two mu-factors equal to mu(cm, d0, dpm, dm) mu(c0, d1, dp0, d0) mu(cp, d2, dp1, d1).

    Arguments are c_{r-1}, c_r, c_{r+1}; d_{r-1}, ..., d_{r+2}; d'_{r-1}, d'_r, d'_{r+1}.
    c_r must be invertible.
    """
    if not ring.is_unit(c0):
        raise NotInvertible(
            f"c_r = {ring.render_text(c0)} is not invertible; it sits in an inverted slot "
            "of the reduced factors", "c_r")
    inv = ring.inv
    x = -(dm * inv(dp0) * d1) + cm * inv(d0) * c0
    y = -(d0 * inv(dp1) * d2) + c0 * inv(d1) * cp
    e = dp1 * inv(d0) * c0 * inv(d1) * dp0
    return (x, c0, dpm, dm), (y, d2, e, c0)


def reduce_at(q, r):
    """Replace factors r-1, r, r+1 of the cycle by two factors (length m -> m-1).

    The result is labelled so that factor r-1 keeps its index; when the window
    wraps around, indices are rotated first and the surviving factors keep
    their cyclic order.  ``meta["cut"]`` records r and the removed vertex r+1.
    """
    m = q.m
    if m < 3:
        raise ValueError("reduction needs m >= 3")
    r %= m
    # rotate so that the window is (0, 1, 2) and r sits at 1
    s = q.rotate(r - 1)
    d, dp, c = s.d, s.dprime, s.c
    f1, f2 = reduction_factors(c[0], c[1], c[2], d[0], d[1], d[2], d[3 % m],
                               dp[0], dp[1], dp[2], q.ring)
    (x, c1, _, _), (y, _, e, _) = f1, f2
    nd = (d[0], c1) + d[3:]
    ndp = (dp[0], e) + dp[3:]
    nc = (x, y) + c[3:]
    out = QuiddityCycle(q.ring, nd, ndp, nc)
    # undo the rotation when the window does not wrap, so old index r-1 keeps its label
    shift = r - 1 if 1 <= r <= m - 2 else 0
    if shift:
        out = out.rotate(-shift)
    meta = dict(q.meta)
    meta["cut"] = {"at": r, "removed_vertex": (r + 1) % m, "offset": shift}
    return replace(out, meta=meta)
