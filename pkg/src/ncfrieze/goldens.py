"""Worked examples used as golden fixtures."""

from __future__ import annotations

from .frieze import Frieze
from .quiddity import QuiddityCycle
from .rings import Ring

HEXAGON_ROWS = [
    ["1", "i", "1 - k", "-i - 2*j", "1"],
    ["1", "-2*i - j", "3*k", "-i + j", "1"],
    ["1", "i - j", "k", "i", "1"],
    ["1", "j", "1 + k", "-2*i - j", "1"],
    ["1", "-i - 2*j", "-3*k", "i - j", "1"],
    ["1", "-i + j", "-k", "j", "1"],
]

HEXAGON_QUIDDITY = ["i", "-2*i - j", "i - j", "j", "-i - 2*j", "-i + j"]

# rows[i] = [c_{i,i+1}, ..., c_{i,i+m-1}]
QUADRILATERAL_ROWS = [
    ["x", "y", "x"],
    ["x", "2*x*y^-1*x", "y"],
    ["y", "y*x^-1*y*x^-1*y", "y"],
    ["y", "2*x*y^-1*x", "x"],
]


def hexagon():
    """Height-3 quaternion frieze with 1's on the boundary."""
    return Frieze.from_rows(Ring.quaternion(), HEXAGON_ROWS)


def hexagon_cycle():
    H = Ring.quaternion()
    return QuiddityCycle(H, [1] * 6, [1] * 6, [H.parse(s) for s in HEXAGON_QUIDDITY])


def free_triangle(**pit):
    """Triangle frieze over the free skew field on x, y."""
    R = Ring.free(["x", "y"], **pit)
    p = R.parse
    return Frieze(3, R, {(0, 1): p("x"), (1, 0): p("x^-1"), (0, 2): p("x*y"),
                         (2, 0): p("y"), (1, 2): p("y"), (2, 1): p("y*x")})


def free_quadrilateral(**pit):
    """Height-1 frieze over the free skew field on x, y."""
    return Frieze.from_rows(Ring.free(["x", "y"], **pit), QUADRILATERAL_ROWS)


def rational_triangle():
    """Commutative triangle frieze without glide symmetry: c01 = c02 = 2, the rest 1."""
    Q = Ring.rational()
    e = {(i, j): 1 for i in range(3) for j in range(3) if i != j}
    e[0, 1] = e[0, 2] = 2
    return Frieze(3, Q, e)


def classic_quadrilateral():
    """Conway-Coxeter frieze with quiddity (1, 2, 1, 2)."""
    return Frieze.from_rows(Ring.rational(), [["1", "1", "1"], ["1", "2", "1"],
                                              ["1", "1", "1"], ["1", "2", "1"]])
