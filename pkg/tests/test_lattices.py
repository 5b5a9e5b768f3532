"""Brute-force validation of the HNF sublattice machinery."""

import random

from jzero.lattices import SubLattice


def _brute_points(congs, box):
    pts = set()
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            if all((u * x + v * y) % N == 0 for (u, v, N) in congs if N > 1):
                pts.add((x, y))
    return pts


def test_kernel_lattices_match_bruteforce():
    rng = random.Random(11)
    for _ in range(300):
        congs = [
            (
                rng.randint(-12, 12),
                rng.randint(-12, 12),
                rng.randint(2, 18),
            )
            for _ in range(rng.randint(1, 3))
        ]
        L = SubLattice.from_congruences(congs)
        box = 24
        expected = _brute_points(congs, box)
        got = {
            (x, y)
            for x in range(-box, box + 1)
            for y in range(-box, box + 1)
            if L.contains(x, y)
        }
        assert got == expected, (congs, L)


def test_index_counts_residues():
    rng = random.Random(12)
    for _ in range(100):
        congs = [(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(2, 12))]
        L = SubLattice.from_congruences(congs)
        M = L.index
        count = sum(
            1 for x in range(M) for y in range(M) if L.contains(x, y)
        )
        assert count * L.index == M * M


def test_coords_roundtrip():
    L = SubLattice.from_congruences([(3, 5, 7), (1, 2, 4)])
    for s in range(-5, 6):
        for t in range(-5, 6):
            x, y = L.point(s, t)
            assert L.contains(x, y)
            assert L.coords(x, y) == (s, t)


def test_intersection():
    rng = random.Random(13)
    for _ in range(100):
        L1 = SubLattice.from_congruences([(rng.randint(-6, 6), rng.randint(-6, 6), rng.randint(2, 9))])
        L2 = SubLattice.from_congruences([(rng.randint(-6, 6), rng.randint(-6, 6), rng.randint(2, 9))])
        L = L1.intersect(L2)
        box = 20
        for x in range(-box, box + 1):
            for y in range(-box, box + 1):
                assert L.contains(x, y) == (L1.contains(x, y) and L2.contains(x, y))


def test_nesting():
    L1 = SubLattice.from_congruences([(1, 1, 3)])
    L2 = SubLattice.from_congruences([(1, 1, 9)])
    assert L2.is_sublattice_of(L1)
    assert not L1.is_sublattice_of(L2)
