import pytest

from conftest import q
from ncfrieze import goldens
from ncfrieze.errors import SubmatrixNotInvertible
from ncfrieze.frieze import generate_fan
from ncfrieze.matrices import RingMatrix, identity, invert_2x2
from ncfrieze.quasidet import (dependence_witness, neighbouring, quasidet, tame_positions,
                               tame_scan, witness_holds)
from ncfrieze.rings import Ring

H, Q = Ring.quaternion(), Ring.rational()


def test_2x2_oracles():
    a = RingMatrix(Q, [[1, 2], [3, 4]])
    assert quasidet(a, 2, 2) == -2
    assert quasidet(identity(2, Q), 1, 1) == 1
    assert invert_2x2(a).render() == [["-2", "1"], ["3/2", "-1/2"]]


def test_hexagon_block():
    fr = goldens.hexagon()
    a = neighbouring(fr, 0, 4)
    assert a.render() == [["1 - k", "-i - 2*j", "1"], ["-2*i - j", "3*k", "-i + j"],
                          ["1", "i - j", "k"]]
    assert quasidet(a, 3, 3) == 0


def test_submatrix_not_invertible():
    with pytest.raises(SubmatrixNotInvertible):
        quasidet(RingMatrix(Q, [[0, 1], [1, 1]]), 2, 2)
    with pytest.raises(SubmatrixNotInvertible):
        quasidet(RingMatrix(Q, [[1, 1, 0], [1, 1, 0], [0, 0, 1]]), 3, 3)


def test_bad_position():
    with pytest.raises(IndexError):
        quasidet(identity(2, Q), 3, 1)
    with pytest.raises(ValueError):
        quasidet(identity(4, Q), 1, 1)


def test_inverse_entry_is_inverse_quasidet():
    import numpy as np
    rng = np.random.default_rng(4)
    for R in (H, Q):
        for _ in range(50):
            a = RingMatrix(R, [[R.random_unit(rng) for _ in range(2)] for _ in range(2)])
            try:
                inv = invert_2x2(a)
                qd = quasidet(a, 2, 2)
            except Exception:
                continue
            assert inv[1, 1] == R.inv(qd)


@pytest.mark.parametrize("fr", [goldens.hexagon(), generate_fan(4, H, seed=0),
                                generate_fan(6, Ring.matrix(2), seed=2),
                                goldens.classic_quadrilateral()],
                         ids=lambda f: f"{f.ring.spec}-m{f.m}")
def test_tame(fr):
    rep = tame_scan(fr)
    assert rep.ok and rep.checked["tame"] == fr.m * (fr.m - 1)


def test_tame_notes_naive_reading():
    rep = tame_scan(goldens.hexagon())
    assert rep.notes and all("mod-m" in n for n in rep.notes)


def test_perturbed_not_tame():
    fr = goldens.hexagon().replace(1, 4, q("1 + 3*k"))
    assert not tame_scan(fr).ok


def test_witness_hexagon():
    fr = goldens.hexagon()
    s, t = dependence_witness(fr, 0, 4)
    assert witness_holds(neighbouring(fr, 0, 4), s, t)


def test_witness_classic_commutative():
    fr = goldens.classic_quadrilateral()
    for j in range(4):
        s, t = dependence_witness(fr, 0, j + 2)
        # commutative relation c_{i,j+1} = -c_{i,j-1} + q_j c_{i,j} with q_j = c_{j-1,j+1}
        assert s == -1 and t == fr.c(j + 1, j + 3)


@pytest.mark.parametrize("fr", [goldens.hexagon(), generate_fan(5, H, seed=9)],
                         ids=lambda f: f"m{f.m}")
def test_witness_everywhere(fr):
    for i, j in tame_positions(fr.m):
        a = neighbouring(fr, i, j)
        assert witness_holds(a, *dependence_witness(fr, i, j))
        assert quasidet(a, 3, 3) == 0
