import pytest

from conftest import q
from ncfrieze import goldens
from ncfrieze.errors import GenerationFailed, NotInvertible
from ncfrieze.frieze import (Frieze, exchange_holds, generate_fan, local_quadrangles,
                             local_triangles, triangle_holds, verify_all, verify_local,
                             verify_weak_local_triangles)
from ncfrieze.rings import Ring


@pytest.fixture(scope="module")
def hexagon():
    return goldens.hexagon()


def test_hexagon_entries(hexagon):
    assert hexagon.c(0, 3) == q("1 - k")
    assert hexagon.c(3, 0) == q("1 + k")
    assert hexagon.c(4, 1) == q("-3*k")
    assert hexagon(1, 4) == q("3*k")
    assert all(hexagon.c(i, i + 1) == 1 and hexagon.c(i + 1, i) == 1 for i in range(6))


def test_hexagon_relations(hexagon):
    loc = verify_local(hexagon)
    assert loc.ok and loc.checked == {"triangle": 6, "exchange": 36}
    full = verify_all(hexagon)
    assert full.ok and full.summary() == "0 violations / 20 triangles, 60 exchange relations"
    assert verify_weak_local_triangles(hexagon).ok


def test_hexagon_not_glide_symmetric(hexagon):
    for i in range(3):
        assert not hexagon.is_glide_symmetric_at(i, i + 3)


def test_local_counts():
    assert len(local_triangles(6)) == 6
    assert len(local_quadrangles(6)) == 9
    assert len(local_quadrangles(4)) == 2
    assert local_quadrangles(3) == []


def test_single_relations(hexagon):
    assert triangle_holds(hexagon, 0, 2, 4)
    for which in [(2, 0), (0, 2), (1, 3), (3, 1)]:
        assert exchange_holds(hexagon, 0, 1, 2, 3, which=which)
    assert exchange_holds(hexagon, 0, 2, 3, 5)


def test_perturbation_is_detected(hexagon):
    bad = hexagon.replace(1, 4, q("1 + 3*k"))
    rep = verify_local(bad)
    assert not rep.ok
    # only relations involving the diagonal {1, 4} can break
    assert all({1, 4} <= set(v.indices) for v in rep.violations)


def test_zero_entry_rejected():
    H = Ring.quaternion()
    rows = [list(r) for r in goldens.HEXAGON_ROWS]
    rows[0][2] = "0"
    with pytest.raises(NotInvertible):
        Frieze.from_rows(H, rows)


def test_ext_entries(hexagon):
    m = hexagon.m
    for i in range(m):
        assert hexagon.ext(i, i) == 0 and hexagon.ext(i, i + m) == 0
        assert hexagon.ext(i, i - 1) == -hexagon.c(i, i - 1)
        assert hexagon.ext(i, i + m + 1) == -hexagon.c(i, i + 1)
        assert hexagon.ext(i, i + 3) == hexagon.c(i, i + 3)
    with pytest.raises(IndexError):
        hexagon.ext(0, m + 2)


def test_free_goldens():
    for seed in (0, 1, 2):
        assert verify_local(goldens.free_triangle(seed=seed)).ok
        assert verify_local(goldens.free_quadrilateral(seed=seed)).ok
    assert verify_all(goldens.free_quadrilateral()).probabilistic


def test_free_perturbation_detected():
    f = goldens.free_quadrilateral()
    bad = f.replace(1, 3, f.ring.parse("2*y*x^-1*y"))
    assert not verify_local(bad).ok


def test_rational_triangle_no_glide():
    f = goldens.rational_triangle()
    assert verify_all(f).ok
    assert not f.is_glide_symmetric_at(0, 1)


def test_fan_ones_gives_classic():
    f = generate_fan(4, Ring.rational(), ones=True)
    assert f == goldens.classic_quadrilateral()
    assert [f.c(i, i + 2) for i in range(4)] == [1, 2, 1, 2]


@pytest.mark.parametrize("ring", [Ring.rational(), Ring.quaternion(), Ring.matrix(2)],
                         ids=lambda r: r.spec)
@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_fan_local_and_global(ring, m):
    f = generate_fan(m, ring, seed=m)
    assert verify_local(f).ok
    assert verify_all(f).ok


def test_fan_reproducible():
    a = generate_fan(6, Ring.quaternion(), seed=5)
    b = generate_fan(6, Ring.quaternion(), seed=5)
    assert a == b
    assert a != generate_fan(6, Ring.quaternion(), seed=6)


def test_fan_bad_coeff():
    with pytest.raises(ValueError):
        generate_fan(4, Ring.rational(), max_coeff=0)


def test_fan_gives_up():
    with pytest.raises(GenerationFailed):
        generate_fan(8, Ring.rational(), max_coeff=1, max_tries=1, seed=1)


def test_anchorings_agree_and_inverted_relation():
    from itertools import permutations

    from ncfrieze.frieze import inverted_triangle_sides
    count = 0
    for ring, m, seed in [(Ring.quaternion(), 7, 0), (Ring.matrix(2), 6, 1), (Ring.quaternion(), 8, 2),
                             (Ring.matrix(2), 8, 3)]:
        fr = generate_fan(m, ring, seed=seed)
        bad = fr.replace(0, 2, fr.c(0, 2) + 1)
        for i, j, k in permutations(range(m), 3):
            assert triangle_holds(fr, i, j, k) == triangle_holds(fr, j, k, i) == triangle_holds(fr, k, i, j)
            assert triangle_holds(bad, i, j, k) == triangle_holds(bad, j, k, i) == triangle_holds(bad, k, i, j)
            lhs, rhs = inverted_triangle_sides(fr, i, j, k)
            assert lhs == rhs
            count += 1
    assert count >= 1000
