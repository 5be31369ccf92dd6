"""Ring descriptors and the uniform ring interface.

Ring values are plain Python objects with arithmetic operators:

==============  =====================================
kind            value type
==============  =====================================
rational        fractions.Fraction
quaternion      Quaternion
matrix(n)       RatMatrix (n x n over Q)
free(x, y, ..)  Expr (unevaluated; equality via PIT)
==============  =====================================

A :class:`Ring` knows how to embed scalars, invert, compare, sample and
render its values.  The module-level functions (``add``, ``mul``, ...)
infer the ring from their arguments and refuse to mix descriptors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from . import expr as _expr
from .errors import DescriptorMismatch, NotInvertible, RetriesExhausted
from .quaternion import GENERATORS, Quaternion, render_quaternion
from .ratmatrix import RatMatrix

KINDS = ("rational", "quaternion", "matrix", "free")


@dataclass(frozen=True)
class PitConfig:
    trials: int = _expr.PIT_TRIALS
    dim: int = _expr.PIT_DIM
    seed: int = 0


@dataclass(frozen=True)
class Ring:
    kind: str
    dim: int = 0
    vars: tuple = ()
    pit: PitConfig = field(default_factory=PitConfig, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "matrix" and self.dim < 1:
            raise ValueError("matrix ring needs dim >= 1")
        if self.kind == "free":
            if not self.vars or len(set(self.vars)) != len(self.vars):
                raise ValueError("free ring needs nonempty, distinct vars")
            for v in self.vars:
                if not v.isalpha() or not v.isascii() or v in GENERATORS:
                    raise ValueError(f"bad free variable name {v!r}")

    @classmethod
    def rational(cls):
        return cls("rational")

    @classmethod
    def quaternion(cls):
        return cls("quaternion")

    @classmethod
    def matrix(cls, dim):
        return cls("matrix", dim=dim)

    @classmethod
    def free(cls, vars, **pit):
        return cls("free", vars=tuple(vars), pit=PitConfig(**pit))

    def with_pit(self, **kw):
        cfg = PitConfig(**{**self.pit.__dict__, **kw})
        return Ring(self.kind, self.dim, self.vars, cfg)

    @property
    def spec(self):
        """Compact textual descriptor, e.g. ``matrix(2)`` or ``free(x,y)``."""
        if self.kind == "matrix":
            return f"matrix({self.dim})"
        if self.kind == "free":
            return f"free({','.join(self.vars)})"
        return self.kind

    def __str__(self):
        return self.spec

    @property
    def is_exact(self):
        """False for the free ring, whose equality test is probabilistic."""
        return self.kind != "free"

    @property
    def is_division_ring(self):
        return self.kind in ("rational", "quaternion")

    def symbols(self):
        if self.kind == "quaternion":
            return frozenset(GENERATORS)
        if self.kind == "free":
            return frozenset(self.vars)
        return frozenset()

    def generator(self, name):
        if self.kind == "quaternion":
            return GENERATORS.get(name)
        if self.kind == "free" and name in self.vars:
            return _expr.Symbol(name)
        return None

    # -- structure ---------------------------------------------------------

    def embed(self, q):
        q = Fraction(q)
        if self.kind == "rational":
            return q
        if self.kind == "quaternion":
            return Quaternion(q)
        if self.kind == "matrix":
            return RatMatrix.scalar(self.dim, q)
        return _expr.Scalar(q)

    def zero(self):
        return self.embed(0)

    def one(self):
        return self.embed(1)

    def contains(self, x):
        if self.kind == "rational":
            return isinstance(x, Rational)
        if self.kind == "quaternion":
            return isinstance(x, Quaternion)
        if self.kind == "matrix":
            return isinstance(x, RatMatrix) and x.n == self.dim
        return isinstance(x, _expr.Expr) and x.symbols() <= set(self.vars)

    def coerce(self, x):
        if isinstance(x, Rational) and self.kind != "rational":
            return self.embed(x)
        if not self.contains(x):
            raise DescriptorMismatch(f"{x!r} is not an element of {self.spec}")
        return Fraction(x) if self.kind == "rational" else x

    def inv(self, x):
        if self.kind == "rational":
            if x == 0:
                raise NotInvertible("0 is not invertible", "0")
            return 1 / Fraction(x)
        return x.inverse()

    def is_unit(self, x):
        """Exact invertibility; the free ring defers to evaluation time."""
        if self.kind == "rational":
            return x != 0
        if self.kind == "quaternion":
            return x.norm() != 0
        if self.kind == "matrix":
            return x.det() != 0
        return not (isinstance(x, _expr.Scalar) and x.value == 0)

    def equal(self, x, y):
        if self.kind != "free":
            return x == y
        if x == y:
            return True
        c = self.pit
        return _expr.pit_equal(x, y, trials=c.trials, dim=c.dim, seed=c.seed)

    def is_zero(self, x):
        return self.equal(x, self.zero())

    # -- text --------------------------------------------------------------

    def render(self, x):
        """Canonical string (or nested lists of strings for matrices)."""
        if self.kind == "rational":
            return str(Fraction(x))
        if self.kind == "quaternion":
            return render_quaternion(x)
        if self.kind == "matrix":
            return [[str(v) for v in row] for row in x.rows]
        return _expr.render(x)

    def render_text(self, x):
        """Single-line rendering used in reports."""
        r = self.render(x)
        if self.kind == "matrix":
            return "[" + "; ".join(" ".join(row) for row in r) + "]"
        return r

    def parse(self, data):
        """Inverse of :meth:`render`: expression text, or nested lists for matrices."""
        if self.kind == "matrix":
            if isinstance(data, str):
                return _expr.evaluate(_expr.parse(data, self), {}, self)
            m = RatMatrix([[Fraction(v) for v in row] for row in data])
            if m.n != self.dim:
                raise DescriptorMismatch(f"expected {self.dim}x{self.dim} matrix")
            return m
        e = _expr.parse(data, self)
        if self.kind == "free":
            return e
        return _expr.evaluate(e, {}, self)

    # -- sampling ----------------------------------------------------------

    def random_element(self, rng, max_coeff=3):
        """Integer-coordinate element with coordinates in [-max_coeff, max_coeff]."""
        if self.kind == "rational":
            return Fraction(int(rng.integers(-max_coeff, max_coeff + 1)))
        if self.kind == "quaternion":
            return Quaternion(*(int(v) for v in rng.integers(-max_coeff, max_coeff + 1, 4)))
        if self.kind == "matrix":
            vals = rng.integers(-max_coeff, max_coeff + 1, (self.dim, self.dim))
            return RatMatrix(vals.tolist())
        raise NotImplementedError("sampling is not supported for free rings")

    def random_unit(self, rng, max_coeff=3, max_tries=1000):
        if max_coeff < 1:
            raise ValueError("max_coeff must be >= 1")
        for _ in range(max_tries):
            x = self.random_element(rng, max_coeff)
            if self.is_unit(x):
                return x
        raise RetriesExhausted(f"no unit of {self.spec} after {max_tries} samples")


_SPEC = re.compile(r"^\s*(rational|quaternion|matrix\s*\(\s*(\d+)\s*\)|free\s*\(([^)]*)\))\s*$")


def parse_ring(spec):
    """Parse ``rational``, ``quaternion``, ``matrix(n)`` or ``free(x,y,...)``."""
    m = _SPEC.match(spec)
    if not m:
        raise ValueError(f"bad ring descriptor {spec!r}")
    if m.group(2) is not None:
        return Ring.matrix(int(m.group(2)))
    if m.group(3) is not None:
        return Ring.free([v.strip() for v in m.group(3).split(",") if v.strip()])
    return Ring(m.group(1))


# -- ring-inferring operations -------------------------------------------------

def ring_of(x):
    if isinstance(x, Quaternion):
        return Ring.quaternion()
    if isinstance(x, RatMatrix):
        return Ring.matrix(x.n)
    if isinstance(x, _expr.Expr):
        return Ring.free(sorted(x.symbols()) or ["x"])
    if isinstance(x, Rational):
        return Ring.rational()
    raise DescriptorMismatch(f"{type(x).__name__} is not a ring value")


def _common(x, y):
    rx, ry = ring_of(x), ring_of(y)
    if rx.kind != ry.kind or rx.dim != ry.dim:
        raise DescriptorMismatch(f"{rx.spec} vs {ry.spec}")
    if rx.kind == "free":
        return Ring.free(sorted(set(rx.vars) | set(ry.vars)))
    return rx


def add(x, y):
    _common(x, y)
    return x + y


def sub(x, y):
    _common(x, y)
    return x - y


def mul(x, y):
    _common(x, y)
    return x * y


def neg(x):
    ring_of(x)
    return -x


def eq(x, y):
    return _common(x, y).equal(x, y)


def is_zero(x):
    return ring_of(x).is_zero(x)


def scalar_embed(q, ring):
    return ring.embed(q)


def invert(x):
    return ring_of(x).inv(x)
