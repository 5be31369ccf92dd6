"""Quasideterminants of 2x2 and 3x3 matrices, tameness, dependence witnesses."""

from __future__ import annotations

from .errors import FriezeError, NotInvertible, SubmatrixNotInvertible
from .frieze import VerificationReport, Violation
from .matrices import RingMatrix, invert_2x2, mat_mul
from .propagation import row_coefficients


def quasidet(a, i, j):
    """|A|_{i,j} = a_ij - r_i^j (A^{i,j})^-1 c_j^i, positions 1-based."""
    n, p = a.shape
    if n != p or n not in (2, 3):
        raise ValueError("quasidet supports 2x2 and 3x3 matrices")
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"position ({i},{j}) out of range")
    ring = a.ring
    sub = a.minor(i - 1, j - 1)
    r = RingMatrix(ring, [[x for c, x in enumerate(a.rows[i - 1]) if c != j - 1]])
    c = RingMatrix(ring, [[row[j - 1]] for rr, row in enumerate(a.rows) if rr != i - 1])
    try:
        if n == 2:
            x = sub[0, 0]
            if not ring.is_unit(x):
                raise NotInvertible("1x1 submatrix is zero")
            inv = RingMatrix(ring, [[ring.inv(x)]])
        else:
            inv = invert_2x2(sub)
    except NotInvertible as exc:
        raise SubmatrixNotInvertible(
            f"A^{{{i},{j}}} is not invertible: {exc}", exc.subexpr) from exc
    return a[i - 1, j - 1] - mat_mul(mat_mul(r, inv), c)[0, 0]


def neighbouring(fr, i, j, extended=True):
    """3x3 block with rows i..i+2 and columns j-1..j+1.

    ``extended=True`` reads the extended pattern (signed outer diagonals);
    otherwise indices are simply reduced mod m.
    """
    get = fr.ext if extended else fr.c
    return RingMatrix(fr.ring, [[get(r, c) for c in (j - 1, j, j + 1)]
                                for r in (i, i + 1, i + 2)])


def tame_positions(m):
    """(i, j) with 0 <= i < m and i+2 <= j <= i+m: all blocks inside the extended strip."""
    return [(i, j) for i in range(m) for j in range(i + 2, i + m + 1)]


def _verdict(ring, a):
    try:
        return "zero" if ring.is_zero(quasidet(a, 3, 3)) else "nonzero"
    except FriezeError:
        return "undefined"


def tame_scan(fr):
    """Check |M|_{3,3} = 0 for every neighbouring 3x3 block of the pattern."""
    ring = fr.ring
    report = VerificationReport(probabilistic=not ring.is_exact)
    for i, j in tame_positions(fr.m):
        a = neighbouring(fr, i, j)
        report.checked["tame"] += 1
        try:
            q = quasidet(a, 3, 3)
        except FriezeError as exc:
            report.violations.append(Violation("tame", (i, j), error=f"undefined: {exc}"))
            continue
        if not ring.is_zero(q):
            report.violations.append(Violation("tame", (i, j), ring.render_text(q), "0"))
        naive = neighbouring(fr, i, j, extended=False)
        if naive != a:
            v = _verdict(ring, naive)
            if v != "zero":
                report.notes.append(f"({i},{j}): plain mod-m reading gives {v} quasideterminant")
    return report


def dependence_witness(fr, i, j):
    """(s, t) with column 3 = column 1 * s + column 2 * t in neighbouring(fr, i, j)."""
    return row_coefficients(fr, j)


def witness_holds(a, s, t):
    ring = a.ring
    return all(ring.equal(row[2], row[0] * s + row[1] * t) for row in a.rows)
