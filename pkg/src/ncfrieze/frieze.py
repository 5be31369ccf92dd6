"""Noncommutative friezes on an m-gon and their defining relations.

A frieze assigns an invertible ring element ``c[i, j]`` to every directed
diagonal (i, j), i != j, of a polygon with vertices 0..m-1.  Vertex labels
passed to the predicates below are always reduced mod m.

Two kinds of relation are checked:

* triangle:  c_ij c_kj^-1 c_ki == c_ik c_jk^-1 c_ji
* exchange:  c_pq == c_px c_yx^-1 c_yq + c_py c_xy^-1 c_xq
  for a diagonal (p, q) of a quadrangle whose other two vertices are x, y.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import FriezeError, GenerationFailed, NotInvertible


class Frieze:
    def __init__(self, m, ring, entries, check=True):
        if m < 3:
            raise ValueError("a frieze needs m >= 3")
        self.m = m
        self.ring = ring
        vals = {}
        for i in range(m):
            for j in range(m):
                if i == j:
                    continue
                if (i, j) not in entries:
                    raise KeyError(f"missing entry ({i},{j})")
                vals[i, j] = ring.coerce(entries[i, j])
        extra = set(entries) - set(vals)
        if extra:
            raise KeyError(f"unexpected entries {sorted(extra)}")
        self._c = vals
        if check:
            for (i, j), v in vals.items():
                if not ring.is_unit(v):
                    raise NotInvertible(f"entry c[{i},{j}] is not invertible", (i, j))

    @classmethod
    def from_rows(cls, ring, rows, check=True):
        """Build from pattern rows: ``rows[i] = [c_{i,i+1}, ..., c_{i,i+m-1}]``.

        String entries are parsed in ``ring``.
        """
        m = len(rows)
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != m - 1:
                raise ValueError(f"row {i} needs {m - 1} entries")
            for d, v in enumerate(row, start=1):
                entries[i, (i + d) % m] = ring.parse(v) if isinstance(v, str) else v
        return cls(m, ring, entries, check=check)

    def __repr__(self):
        return f"Frieze(m={self.m}, ring={self.ring.spec})"

    def __eq__(self, other):
        if not isinstance(other, Frieze):
            return NotImplemented
        if self.m != other.m or self.ring != other.ring:
            return False
        return all(self.ring.equal(v, other._c[k]) for k, v in self._c.items())

    __hash__ = None

    def items(self):
        return sorted(self._c.items())

    def c(self, i, j):
        i, j = i % self.m, j % self.m
        if i == j:
            return self.ring.zero()
        return self._c[i, j]

    __call__ = c

    def ext(self, i, j):
        """Entry of the extended pattern, defined for -1 <= j - i <= m + 1.

        Zeros sit at j == i and j == i + m; the outer diagonals carry
        ĉ[i, i-1] = -c[i, i-1] and ĉ[i, i+m+1] = -c[i, i+1].
        """
        d = j - i
        m = self.m
        if d == 0 or d == m:
            return self.ring.zero()
        if d == -1:
            return -self.c(i, i - 1)
        if d == m + 1:
            return -self.c(i, i + 1)
        if 0 < d < m:
            return self.c(i, j)
        raise IndexError(f"extended entry ({i},{j}) out of range")

    def replace(self, i, j, value):
        entries = dict(self._c)
        entries[i % self.m, j % self.m] = value
        return Frieze(self.m, self.ring, entries, check=False)

    def is_glide_symmetric_at(self, i, j):
        return self.ring.equal(self.c(i, j), self.c(j, i))


# -- reports -----------------------------------------------------------------

@dataclass
class Violation:
    kind: str
    indices: tuple
    lhs: str = ""
    rhs: str = ""
    error: str = ""

    def line(self):
        idx = ",".join(map(str, self.indices))
        if self.error:
            return f"{self.kind}({idx}): {self.error}"
        return f"{self.kind}({idx}): {self.lhs} != {self.rhs}"

    def to_dict(self):
        return {k: v for k, v in self.__dict__.items() if v != ""} | {"indices": list(self.indices)}


@dataclass
class VerificationReport:
    checked: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)
    probabilistic: bool = False
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        # a report is truthy when it has something to report
        return bool(self.violations)

    def __len__(self):
        return len(self.violations)

    def merge(self, other):
        self.checked.update(other.checked)
        self.violations.extend(other.violations)
        self.probabilistic |= other.probabilistic
        self.notes.extend(other.notes)
        return self

    def summary(self):
        parts = []
        names = {"triangle": "triangles", "exchange": "exchange relations",
                 "tame": "quasideterminants"}
        for kind in ("triangle", "exchange", "tame"):
            if kind in self.checked:
                parts.append(f"{self.checked[kind]} {names[kind]}")
        for kind, n in sorted(self.checked.items()):
            if kind not in names:
                parts.append(f"{n} {kind}")
        s = f"{len(self.violations)} violations / {', '.join(parts)}"
        if self.probabilistic:
            s += " (probabilistic)"
        return s

    def lines(self):
        return [v.line() for v in self.violations] + [f"note: {n}" for n in self.notes]

    def to_dict(self):
        return {
            "ok": self.ok,
            "checked": dict(sorted(self.checked.items())),
            "probabilistic": self.probabilistic,
            "violations": [v.to_dict() for v in self.violations],
            "notes": list(self.notes),
        }


def _record(report, f, kind, idx, sides):
    """Evaluate a (lhs, rhs) thunk and record the outcome in ``report``."""
    report.checked[kind] += 1
    try:
        lhs, rhs = sides()
        if f.ring.equal(lhs, rhs):
            return True
    except FriezeError as exc:
        report.violations.append(Violation(kind, idx, error=f"{type(exc).__name__}: {exc}"))
        return False
    r = f.ring.render_text
    report.violations.append(Violation(kind, idx, r(lhs), r(rhs)))
    return False


# -- relations ---------------------------------------------------------------

def _distinct(f, *vs):
    vs = [v % f.m for v in vs]
    if len(set(vs)) != len(vs):
        raise ValueError(f"vertices {vs} are not distinct mod {f.m}")
    return vs


def triangle_sides(f, i, j, k):
    i, j, k = _distinct(f, i, j, k)
    inv = f.ring.inv
    c = f.c
    lhs = c(i, j) * inv(c(k, j)) * c(k, i)
    rhs = c(i, k) * inv(c(j, k)) * c(j, i)
    return lhs, rhs


def triangle_holds(f, i, j, k):
    lhs, rhs = triangle_sides(f, i, j, k)
    return f.ring.equal(lhs, rhs)


def inverted_triangle_sides(f, i, j, k):
    """Both sides of c_ki^-1 c_kj c_ij^-1 == c_ji^-1 c_jk c_ik^-1."""
    i, j, k = _distinct(f, i, j, k)
    inv = f.ring.inv
    c = f.c
    return (inv(c(k, i)) * c(k, j) * inv(c(i, j)),
            inv(c(j, i)) * c(j, k) * inv(c(i, k)))


def exchange_sides(f, p, q, x, y):
    """Both sides of the exchange relation for diagonal (p, q), other vertices x, y."""
    p, q, x, y = _distinct(f, p, q, x, y)
    inv = f.ring.inv
    c = f.c
    rhs = c(p, x) * inv(c(y, x)) * c(y, q) + c(p, y) * inv(c(x, y)) * c(x, q)
    return c(p, q), rhs


def _cyclic(f, i, j, k, l):
    i, j, k, l = _distinct(f, i, j, k, l)
    m = f.m
    return 0 < (j - i) % m < (k - i) % m < (l - i) % m


def exchange_holds(f, i, j, k, l, which=None):
    """Exchange relation in the quadrangle i, j, k, l (strict cyclic order).

    ``which`` picks the directed diagonal: one of (k, i) [default], (i, k),
    (j, l), (l, j).
    """
    if not _cyclic(f, i, j, k, l):
        raise ValueError(f"({i},{j},{k},{l}) is not in cyclic order")
    m = f.m
    i, j, k, l = i % m, j % m, k % m, l % m
    which = (k, i) if which is None else (which[0] % m, which[1] % m)
    others = {(k, i): (l, j), (i, k): (j, l), (j, l): (k, i), (l, j): (i, k)}
    if which not in others:
        raise ValueError(f"{which} is not a diagonal of ({i},{j},{k},{l})")
    lhs, rhs = exchange_sides(f, *which, *others[which])
    return f.ring.equal(lhs, rhs)


def local_triangles(m):
    """Anchor/vertex triples (i+1, i+2, i) of the local triangle relations."""
    return [((i + 1) % m, (i + 2) % m, i) for i in range(m)]


def local_quadrangles(m):
    """Pairs (i, j) of disjoint boundary edges {i, i+1}, {j, j+1}, i < j."""
    return [(i, j) for i in range(m) for j in range(i + 2, m) if (j + 1) % m != i]


def local_exchange_forms(m, i, j):
    """(p, q, x, y) for the four local exchange relations of quadrangle i, i+1, j, j+1."""
    i1, j1 = (i + 1) % m, (j + 1) % m
    return [(j, i, j1, i1), (i, j, i1, j1), (i1, j1, i, j), (j1, i1, j, i)]


def verify_local(f):
    """Check every local triangle and local exchange relation."""
    report = VerificationReport(probabilistic=not f.ring.is_exact)
    for a, b, k in local_triangles(f.m):
        _record(report, f, "triangle", (a, b, k), lambda: triangle_sides(f, a, b, k))
    for i, j in local_quadrangles(f.m):
        for p, q, x, y in local_exchange_forms(f.m, i, j):
            _record(report, f, "exchange", (p, q, x, y),
                    lambda: exchange_sides(f, p, q, x, y))
    return report


def verify_weak_local_triangles(f):
    """Triangle relations for all triangles i, i+1, k."""
    report = VerificationReport(probabilistic=not f.ring.is_exact)
    m = f.m
    for i in range(m):
        for k in range(m):
            if k in (i, (i + 1) % m):
                continue
            idx = (i, (i + 1) % m, k)
            _record(report, f, "triangle", idx, lambda: triangle_sides(f, *idx))
    return report


def verify_all(f):
    """Every triangle relation (one per triangle) and all four exchange
    relations of every quadrangle."""
    report = VerificationReport(probabilistic=not f.ring.is_exact)
    m = f.m
    for t in combinations(range(m), 3):
        _record(report, f, "triangle", t, lambda: triangle_sides(f, *t))
    for i, j, k, l in combinations(range(m), 4):
        for form in ((k, i, l, j), (i, k, j, l), (j, l, k, i), (l, j, i, k)):
            _record(report, f, "exchange", form, lambda: exchange_sides(f, *form))
    return report


# -- generation --------------------------------------------------------------

def generate_fan(m, ring, seed=0, max_coeff=3, max_tries=100, ones=False):
    """Random frieze grown from a fan triangulation at vertex 0.

    Samples c[0,r], c[r,0] (1 <= r < m) and c[r,r+1] (1 <= r <= m-2),
    forces c[r+1,r] by the triangle relation of triangle (0, r, r+1), then
    fills the remaining diagonals by increasing gap using the exchange
    relations of the quadrangles (0, i, i+1, j).  Attempts with a
    non-invertible entry are discarded and resampled from a fresh stream.
    With ``ones=True`` every sampled value is 1.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    if ring.kind == "free":
        raise ValueError("fan generation needs a concrete ring")
    for ss in np.random.SeedSequence(seed).spawn(max_tries):
        rng = np.random.Generator(np.random.PCG64(ss))

        def sample():
            return ring.one() if ones else ring.random_unit(rng, max_coeff)

        c = _fan_entries(m, ring, sample)
        if c is None:
            continue
        f = Frieze(m, ring, c, check=False)
        report = verify_local(f)
        if not report.ok:
            raise GenerationFailed(
                f"fan frieze failed local relations: {report.lines()[:3]}")
        return f
    raise GenerationFailed(f"no invertible fan frieze after {max_tries} attempts")


def _fan_entries(m, ring, sample):
    c = {}
    for r in range(1, m):
        c[0, r] = sample()
        c[r, 0] = sample()
    for r in range(1, m - 1):
        c[r, r + 1] = sample()
    inv = ring.inv
    try:
        for r in range(1, m - 1):
            c[r + 1, r] = c[r + 1, 0] * inv(c[r, 0]) * c[r, r + 1] * inv(c[0, r + 1]) * c[0, r]
            if not ring.is_unit(c[r + 1, r]):
                return None
        for gap in range(2, m - 1):
            for i in range(1, m - gap):
                j = i + gap
                c[j, i] = (c[j, 0] * inv(c[i + 1, 0]) * c[i + 1, i]
                           + c[j, i + 1] * inv(c[0, i + 1]) * c[0, i])
                c[i, j] = (c[i, 0] * inv(c[i + 1, 0]) * c[i + 1, j]
                           + c[i, i + 1] * inv(c[0, i + 1]) * c[0, j])
                if not (ring.is_unit(c[j, i]) and ring.is_unit(c[i, j])):
                    return None
    except NotInvertible:
        return None
    return c
