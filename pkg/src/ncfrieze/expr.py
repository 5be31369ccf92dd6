"""Noncommutative ring-element expressions.

Grammar (ASCII, whitespace-insensitive)::

    expr     := term (("+" | "-") term)*
    term     := ["-"] factor ("*" factor)*
    factor   := atom ["^" signedInt]
    atom     := rational | symbol | "(" expr ")"
    rational := int ["/" posInt]
    symbol   := letter+

Products are left-associative and order-sensitive; ``^`` binds tighter
than ``*``; a negative exponent means the inverse.  Scalars commute with
everything, so the smart constructors collect all scalar factors of a
product into a single leading Scalar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import (ExprSyntaxError, NotInvertible, RetriesExhausted,
                     UnboundSymbol, UnknownSymbol)
from .ratmatrix import RatMatrix

PIT_DIM = 3
PIT_TRIALS = 5
PIT_ENTRY_RANGE = 9
PIT_MAX_RETRIES = 50


class Expr:
    """Base class; subclasses are frozen dataclasses."""

    def __add__(self, other):
        return make_sum([self, as_expr(other)])

    def __radd__(self, other):
        return make_sum([as_expr(other), self])

    def __neg__(self):
        return make_product([Scalar(Fraction(-1)), self])

    def __sub__(self, other):
        return self + (-as_expr(other))

    def __rsub__(self, other):
        return as_expr(other) + (-self)

    def __mul__(self, other):
        return make_product([self, as_expr(other)])

    def __rmul__(self, other):
        return make_product([as_expr(other), self])

    def inverse(self):
        return make_power(self, -1)

    def symbols(self):
        out = set()
        _collect_symbols(self, out)
        return out

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Scalar(Expr):
    value: Fraction

    def inverse(self):
        if self.value == 0:
            raise NotInvertible("scalar 0 is not invertible", "0")
        return Scalar(1 / self.value)


@dataclass(frozen=True)
class Symbol(Expr):
    name: str


@dataclass(frozen=True)
class Sum(Expr):
    terms: tuple


@dataclass(frozen=True)
class Product(Expr):
    factors: tuple


@dataclass(frozen=True)
class Power(Expr):
    base: Expr
    exponent: int

    def __post_init__(self):
        if self.exponent == 0:
            raise ValueError("exponent must be nonzero")


def as_expr(x):
    if isinstance(x, Expr):
        return x
    if isinstance(x, Rational):
        return Scalar(Fraction(x))
    raise TypeError(f"cannot use {type(x).__name__} in an expression")


def make_sum(terms):
    flat = []
    for t in terms:
        flat.extend(t.terms if isinstance(t, Sum) else (t,))
    if not flat:
        return Scalar(Fraction(0))
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(flat))


def make_product(factors):
    coeff = Fraction(1)
    rest = []
    for f in factors:
        for g in (f.factors if isinstance(f, Product) else (f,)):
            if isinstance(g, Scalar):
                coeff *= g.value
            else:
                rest.append(g)
    if coeff == 0 or not rest:
        return Scalar(coeff)
    if coeff != 1:
        rest.insert(0, Scalar(coeff))
    if len(rest) == 1:
        return rest[0]
    return Product(tuple(rest))


def make_power(base, exponent):
    exponent = int(exponent)
    if exponent == 1:
        return base
    if isinstance(base, Scalar) and base.value != 0:
        return Scalar(base.value ** exponent)
    if isinstance(base, Power) and base.exponent * exponent == 1:
        return base.base
    if isinstance(base, Power) and exponent == -1:
        return Power(base.base, -base.exponent)
    return Power(base, exponent)


def _collect_symbols(e, out):
    if isinstance(e, Symbol):
        out.add(e.name)
    elif isinstance(e, Sum):
        for t in e.terms:
            _collect_symbols(t, out)
    elif isinstance(e, Product):
        for f in e.factors:
            _collect_symbols(f, out)
    elif isinstance(e, Power):
        _collect_symbols(e.base, out)


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"(\d+)|([A-Za-z]+)|(\S)")


def _tokenize(text):
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1):
            tokens.append(("int", m.group(1), m.start()))
        elif m.group(2):
            tokens.append(("sym", m.group(2), m.start()))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExprSyntaxError(f"unexpected character {ch!r}", m.start())
            tokens.append((ch, ch, m.start()))
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, allowed):
        self.toks = _tokenize(text)
        self.i = 0
        self.allowed = allowed

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExprSyntaxError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        terms = [self.term()]
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            terms.append(t if op == "+" else make_product([Scalar(Fraction(-1)), t]))
        return make_sum(terms)

    def term(self):
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        factors = [self.factor()]
        while self.peek() == "*":
            self.take()
            factors.append(self.factor())
        if neg:
            factors.insert(0, Scalar(Fraction(-1)))
        return make_product(factors)

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() in ("-", "+"):
                sign = -1 if self.take()[0] == "-" else 1
            tok = self.take("int")
            n = sign * int(tok[1])
            if n == 0:
                raise ExprSyntaxError("exponent must be nonzero", tok[2])
            return make_power(base, n)
        return base

    def atom(self):
        kind, val, pos = self.toks[self.i]
        if kind == "int":
            self.take()
            num = int(val)
            if self.peek() == "/":
                self.take()
                den_tok = self.take("int")
                den = int(den_tok[1])
                if den == 0:
                    raise ExprSyntaxError("zero denominator", den_tok[2])
                return Scalar(Fraction(num, den))
            return Scalar(Fraction(num))
        if kind == "sym":
            self.take()
            if self.allowed is not None and val not in self.allowed:
                raise UnknownSymbol(f"unknown symbol {val!r} at position {pos}")
            return Symbol(val)
        if kind == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        what = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(f"unexpected {what}", pos)


def parse(text, ring=None):
    """Parse ``text`` into an Expr.

    With a ring, only that ring's symbols are legal (i, j, k for
    quaternions, the declared variables for a free ring, none otherwise).
    With ``ring=None`` any symbol is accepted.
    """
    allowed = None if ring is None else ring.symbols()
    p = _Parser(text, allowed)
    e = p.expr()
    p.take("end")
    return e


# -- rendering ---------------------------------------------------------------

def render(e):
    if isinstance(e, Scalar):
        return str(e.value)
    if isinstance(e, Symbol):
        return e.name
    if isinstance(e, Power):
        b = e.base
        if isinstance(b, Symbol) or (isinstance(b, Scalar) and b.value >= 0
                                     and b.value.denominator == 1):
            bs = render(b)
        else:
            bs = f"({render(b)})"
        return f"{bs}^{e.exponent}"
    if isinstance(e, Product):
        parts = []
        factors = list(e.factors)
        prefix = ""
        if isinstance(factors[0], Scalar) and len(factors) > 1:
            v = factors.pop(0).value
            if v == -1:
                prefix = "-"
            elif v < 0:
                prefix = f"-{-v}*"
            else:
                prefix = f"{v}*"
        for f in factors:
            s = render(f)
            if isinstance(f, Sum) or s.startswith("-"):
                s = f"({s})"
            parts.append(s)
        return prefix + "*".join(parts)
    if isinstance(e, Sum):
        out = ""
        for n, t in enumerate(e.terms):
            s = render(t)
            if isinstance(t, Sum):
                s = f"({s})"
            if n == 0:
                out = s
            elif s.startswith("-"):
                out += " - " + s[1:]
            else:
                out += " + " + s
        return out
    raise TypeError(f"not an expression: {e!r}")


# -- evaluation --------------------------------------------------------------

def evaluate(e, binding, ring):
    """Evaluate ``e`` in ``ring`` with symbols looked up in ``binding``.

    Quaternion generators i, j, k need no binding.  Negative powers invert;
    a failing inverse raises NotInvertible naming the offending base.
    """
    if isinstance(e, Scalar):
        return ring.embed(e.value)
    if isinstance(e, Symbol):
        if e.name in binding:
            return binding[e.name]
        gen = ring.generator(e.name)
        if gen is None:
            raise UnboundSymbol(e.name)
        return gen
    if isinstance(e, Sum):
        vals = [evaluate(t, binding, ring) for t in e.terms]
        acc = vals[0]
        for v in vals[1:]:
            acc = acc + v
        return acc
    if isinstance(e, Product):
        acc = None
        for f in e.factors:
            v = evaluate(f, binding, ring)
            acc = v if acc is None else acc * v
        return acc
    if isinstance(e, Power):
        v = evaluate(e.base, binding, ring)
        n = e.exponent
        if n < 0:
            try:
                v = ring.inv(v)
            except NotInvertible as exc:
                sub = render(e.base)
                raise NotInvertible(f"{sub} is not invertible", sub) from exc
            n = -n
        result = None
        while n:
            if n & 1:
                result = v if result is None else result * v
            n >>= 1
            if n:
                v = v * v
        return result
    raise TypeError(f"not an expression: {e!r}")


# -- polynomial identity testing ---------------------------------------------

def trial_generators(seed, trials):
    """One independent PCG64 stream per trial, split from ``seed``."""
    children = np.random.SeedSequence(seed).spawn(trials)
    return [np.random.Generator(np.random.PCG64(c)) for c in children]


def random_invertible(rng, dim, bound=PIT_ENTRY_RANGE):
    while True:
        m = RatMatrix(rng.integers(-bound, bound + 1, size=(dim, dim)).tolist())
        if m.det() != 0:
            return m


def pit_equal(lhs, rhs, trials=PIT_TRIALS, dim=PIT_DIM, seed=0,
              max_retries=PIT_MAX_RETRIES):
    """Randomised identity test for free skew field expressions.

    Each variable is replaced by a random invertible ``dim x dim`` integer
    matrix (entries in [-9, 9]) and both sides are evaluated exactly.  The
    test is one-sided: False means a concrete counterexample was found,
    True means every trial agreed.
    """
    from .rings import Ring

    ring = Ring.matrix(dim)
    names = sorted(lhs.symbols() | rhs.symbols())
    for rng in trial_generators(seed, trials):
        for _ in range(max_retries):
            binding = {s: random_invertible(rng, dim) for s in names}
            try:
                a = evaluate(lhs, binding, ring)
                b = evaluate(rhs, binding, ring)
            except NotInvertible:
                continue
            if a != b:
                return False
            break
        else:
            raise RetriesExhausted(
                f"no binding with all required inverses after {max_retries} tries")
    return True
