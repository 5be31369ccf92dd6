"""mu-matrices, row/column propagation, monodromy and frieze completion."""

from __future__ import annotations

from .errors import ClosureViolation, LocalRelationViolation, NotInvertible
from .frieze import Frieze, verify_local
from .matrices import RingMatrix, identity, mat_eq, mat_mul, mat_neg_identity


class MuMatrix(RingMatrix):
    """The 2x2 matrix [[0, -e^-1 d], [1, f^-1 c]], remembering (c, d, e, f)."""

    def __init__(self, ring, c, d, e, f):
        c, d, e, f = (ring.coerce(x) for x in (c, d, e, f))
        self.args = (c, d, e, f)
        ei = _inv(ring, e, "e")
        fi = _inv(ring, f, "f")
        super().__init__(ring, [[ring.zero(), -(ei * d)], [ring.one(), fi * c]])


def _inv(ring, x, name):
    if not ring.is_unit(x):
        raise NotInvertible(f"{name} = {ring.render_text(x)} is not invertible", name)
    return ring.inv(x)


def mu(c, d, e, f, ring):
    return MuMatrix(ring, c, d, e, f)


def mu_args(fr, r):
    """Arguments (c[r-1,r+1], c[r,r+1], c[r,r-1], c[r-1,r]) of the r-th factor."""
    c = fr.c
    return c(r - 1, r + 1), c(r, r + 1), c(r, r - 1), c(r - 1, r)


def mu_at(fr, r):
    return mu(*mu_args(fr, r), fr.ring)


def row_step(pair, m):
    """(a, b) * m for a row vector (a, b)."""
    a, b = pair
    return a * m[0, 0] + b * m[1, 0], a * m[0, 1] + b * m[1, 1]


def propagate_row(fr, i, j):
    """Predict (ĉ[i,j], ĉ[i,j+1]) from (ĉ[i,j-1], ĉ[i,j]); valid for i <= j <= i+m."""
    return row_step((fr.ext(i, j - 1), fr.ext(i, j)), mu_at(fr, j))


def row_coefficients(fr, j):
    """The pair (s, t) with ĉ[i,j+1] = ĉ[i,j-1] s + ĉ[i,j] t for every row i."""
    c, inv = fr.c, fr.ring.inv
    s = -(inv(c(j, j - 1)) * c(j, j + 1))
    t = inv(c(j - 1, j)) * c(j - 1, j + 1)
    return s, t


def col_matrix(fr, i):
    c, inv = fr.c, fr.ring.inv
    ring = fr.ring
    return RingMatrix(ring, [
        [ring.zero(), ring.one()],
        [-(c(i + 1, i) * inv(c(i - 1, i))), c(i + 1, i - 1) * inv(c(i, i - 1))],
    ])


def col_matrix_transposed_mu(fr, i):
    """Column matrix written as a transposed mu-matrix of inverted entries."""
    c, inv = fr.c, fr.ring.inv
    return mu(inv(c(i, i - 1)), inv(c(i - 1, i)), inv(c(i + 1, i)),
              inv(c(i + 1, i - 1)), fr.ring).transpose()


def propagate_col(fr, i, k):
    """Predict (ĉ[i,k], ĉ[i+1,k]) from (ĉ[i-1,k], ĉ[i,k]); valid for i <= k <= i+m."""
    m = col_matrix(fr, i)
    a, b = fr.ext(i - 1, k), fr.ext(i, k)
    return m[0, 0] * a + m[0, 1] * b, m[1, 0] * a + m[1, 1] * b


def product_M(fr, i, j):
    """Product of the mu-factors r = i, ..., j (j >= i)."""
    if j < i:
        raise ValueError("product_M needs i <= j")
    acc = mu_at(fr, i)
    for r in range(i + 1, j + 1):
        acc = mat_mul(acc, mu_at(fr, r))
    return acc


def closed_form_M(fr, i, j):
    """[[-c[i,i-1]^-1 ĉ[i,j], -c[i,i-1]^-1 ĉ[i,j+1]],
        [ c[i-1,i]^-1 ĉ[i-1,j], c[i-1,i]^-1 ĉ[i-1,j+1]]]; needs i <= j <= i+m-1."""
    inv, c, e = fr.ring.inv, fr.c, fr.ext
    a = inv(c(i, i - 1))
    b = inv(c(i - 1, i))
    return RingMatrix(fr.ring, [
        [-(a * e(i, j)), -(a * e(i, j + 1))],
        [b * e(i - 1, j), b * e(i - 1, j + 1)],
    ])


def monodromy(fr):
    return product_M(fr, 1, fr.m)


def is_neg_identity(mat):
    return mat_eq(mat, mat_neg_identity(mat.shape[0], mat.ring))


def complete(d, dprime, q, ring):
    """Rebuild a frieze from its boundary and second diagonal.

    ``d[i] = c[i,i+1]``, ``dprime[i] = c[i+1,i]``, ``q[i] = c[i,i+2]``.
    Each row is propagated from (d[i], q[i]); the run must close with
    ĉ[i,i+m-1] = dprime[i-1], ĉ[i,i+m] = 0 and ĉ[i,i+m+1] = -d[i],
    and the assembled table must satisfy all local relations.
    """
    m = len(d)
    if not (len(dprime) == m and len(q) == m):
        raise ValueError("boundary and quiddity data must have equal length")
    if m < 3:
        raise ValueError("completion needs m >= 3")
    d = [ring.coerce(x) for x in d]
    dprime = [ring.coerce(x) for x in dprime]
    q = [ring.coerce(x) for x in q]
    for name, seq in (("d", d), ("d'", dprime), ("q", q)):
        for n, x in enumerate(seq):
            if not ring.is_unit(x):
                raise NotInvertible(f"{name}[{n}] is not invertible", (name, n))
    mus = [mu(q[(j - 1) % m], d[j % m], dprime[(j - 1) % m], d[(j - 1) % m], ring)
           for j in range(m)]
    entries = {}
    for i in range(m):
        row = [d[i], q[i]]
        pair = (d[i], q[i])
        for j in range(i + 2, i + m + 1):
            try:
                pair = row_step(pair, mus[j % m])
            except NotInvertible as exc:
                raise NotInvertible(f"row {i}, step {j}: {exc}", (i, j)) from exc
            row.append(pair[1])
        # row = [ĉ[i,i+1], ..., ĉ[i,i+m+1]]
        closing = row[m - 2], row[m - 1], row[m]
        expected = dprime[(i - 1) % m], ring.zero(), -d[i]
        if not all(ring.equal(a, b) for a, b in zip(closing, expected)):
            r = ring.render_text
            raise ClosureViolation(
                f"row {i} does not close: got ({', '.join(map(r, closing))}), "
                f"expected ({', '.join(map(r, expected))})", row=i)
        for k in range(1, m - 1):
            entries[i, (i + k) % m] = row[k - 1]
        entries[i, (i - 1) % m] = dprime[(i - 1) % m]
    fr = Frieze(m, ring, entries, check=ring.is_exact)
    report = verify_local(fr)
    if not report.ok:
        raise LocalRelationViolation("completed table fails local relations", report)
    return fr


def extract_seed(fr):
    """(d, d', q) with d[i] = c[i,i+1], d'[i] = c[i+1,i], q[i] = c[i,i+2]."""
    m = fr.m
    return ([fr.c(i, i + 1) for i in range(m)],
            [fr.c(i + 1, i) for i in range(m)],
            [fr.c(i, i + 2) for i in range(m)])
