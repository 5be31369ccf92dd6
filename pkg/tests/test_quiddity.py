import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import q
from ncfrieze import goldens
from ncfrieze.errors import ConstraintViolated, NotInvertible
from ncfrieze.frieze import generate_fan
from ncfrieze.matrices import mat_mul
from ncfrieze.propagation import mu
from ncfrieze.quiddity import (QuiddityCycle, complete, extract, m2_family, m3_family,
                               m3_solve_d2prime, reduce_at, reduction_factors,
                               verify_cycle)
from ncfrieze.rings import Ring

H, Q = Ring.quaternion(), Ring.rational()


def test_hexagon_cycle():
    cyc = goldens.hexagon_cycle()
    assert verify_cycle(cyc)
    assert extract(goldens.hexagon()).equal(cyc)
    assert complete(cyc) == goldens.hexagon()


def test_classic_cycle():
    cyc = extract(goldens.classic_quadrilateral())
    assert cyc.d == (1,) * 4 and cyc.dprime == (1,) * 4 and cyc.c == (1, 2, 1, 2)


def test_free_triangle_cycle():
    fr = goldens.free_triangle()
    cyc = extract(fr)
    p = fr.ring.parse
    assert cyc.d[0] == p("x") and cyc.dprime[0] == p("x^-1")
    assert verify_cycle(cyc)


def test_m1_never():
    rng = np.random.default_rng(0)
    for _ in range(20):
        a, b, c = H.random_unit(rng), H.random_unit(rng), H.random_element(rng)
        assert not verify_cycle(QuiddityCycle(H, [a], [b], [c]))


def test_m2_family_and_perturbations():
    rng = np.random.default_rng(1)
    for _ in range(20):
        d0, d0p = H.random_unit(rng), H.random_unit(rng)
        cyc = m2_family(d0, d0p, H)
        assert verify_cycle(cyc)
        for field in ("d", "dprime", "c"):
            for n in range(2):
                vals = list(getattr(cyc, field))
                vals[n] = vals[n] + 1 if vals[n] + 1 != 0 else vals[n] + 2
                assert not verify_cycle(QuiddityCycle(H, **{**_fields(cyc), field: vals}))


def _fields(cyc):
    return {"d": cyc.d, "dprime": cyc.dprime, "c": cyc.c}


def test_m3_family():
    assert m3_family([1, 1, 1], [1, 1, 1], Q).c == (1, 1, 1)
    rng = np.random.default_rng(2)
    for _ in range(30):
        d = [H.random_unit(rng) for _ in range(3)]
        d0p, d1p = H.random_unit(rng), H.random_unit(rng)
        d2p = m3_solve_d2prime(d, d0p, d1p, H)
        cyc = m3_family(d, [d0p, d1p, d2p], H)
        assert verify_cycle(cyc)
        with pytest.raises(ConstraintViolated):
            m3_family(d, [d0p, d1p, d2p + q("i")], H)


def test_unital_m3_unique():
    # among small rational unital triples only (1, 1, 1) closes up
    hits = [c for c in np.ndindex(5, 5, 5)
            if verify_cycle(QuiddityCycle(Q, [1] * 3, [1] * 3, [x - 2 for x in c]))]
    assert hits == [(3, 3, 3)]


def test_reduce_hexagon():
    cyc = goldens.hexagon_cycle()
    fr = goldens.hexagon()
    for r in range(6):
        red = reduce_at(cyc, r)
        assert red.m == 5 and verify_cycle(red)
        assert red.meta["cut"]["removed_vertex"] == (r + 1) % 6
    # cutting vertex 3: new slots are entries of the old frieze
    red = reduce_at(cyc, 2)
    c = fr.c
    assert red.c[1] == c(1, 4) and red.c[2] == c(2, 5)
    assert red.d[2] == c(2, 4) and red.dprime[2] == c(4, 2)


def test_reduce_to_m2():
    cyc = generate_fan(3, H, seed=4)
    red = reduce_at(extract(cyc), 1)
    assert red.m == 2 and verify_cycle(red)
    assert red.c == (0, 0)


def test_reduce_needs_invertible_c():
    cyc = QuiddityCycle(Q, [1] * 4, [1] * 4, [1, 2, 1, 2])
    red = reduce_at(cyc, 0)  # deleting the 1 at position 0: neighbours drop by one
    assert red.c == (1, 1, 1) and verify_cycle(red)
    with pytest.raises(ValueError):
        reduce_at(QuiddityCycle(Q, [1, 1], [1, 1], [0, 0]), 0)
    with pytest.raises(NotInvertible):
        reduce_at(QuiddityCycle(Q, [1] * 3, [1] * 3, [1, 0, 1]), 1)


def test_unital_deletion_formula():
    c_prev, c_next = q("i + j"), q("2 - k")
    one = H.one()
    f1, f2 = reduction_factors(c_prev, one, c_next, one, one, one, one, one, one, one, H)
    assert f1 == (c_prev - 1, 1, 1, 1) and f2 == (c_next - 1, 1, 1, 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_reduction_identity(seed):
    rng = np.random.default_rng(seed)
    cm, c0, cp, dm, d0, d1, d2, dpm, dp0, dp1 = (H.random_unit(rng) for _ in range(10))
    lhs = mat_mul(mat_mul(mu(cm, d0, dpm, dm, H), mu(c0, d1, dp0, d0, H)), mu(cp, d2, dp1, d1, H))
    a, b = reduction_factors(cm, c0, cp, dm, d0, d1, d2, dpm, dp0, dp1, H)
    assert lhs == mat_mul(mu(*a, H), mu(*b, H))


@pytest.mark.parametrize("m", [4, 5, 6, 7])
def test_reduce_generated(m):
    cyc = extract(generate_fan(m, Ring.matrix(2), seed=m))
    for r in range(m):
        try:
            red = reduce_at(cyc, r)
        except NotInvertible:
            continue
        assert verify_cycle(red)
