import json
import pathlib

import pytest

from triwalks import lattice, pyramid3d
from triwalks.errors import InvalidWalk, NotAllowed, OutsideWaffle, PrecisionLoss

GOLDEN = pathlib.Path(__file__).parent / "golden"


def brute_pyramid(L, start, n):
    return pyramid3d.enumerate_pyramid_paths(L, start, n)


def test_waffle_membership():
    assert pyramid3d.in_waffle((0, 0), 4)
    assert pyramid3d.in_waffle((2, 2), 4)
    assert not pyramid3d.in_waffle((1, 2), 4)   # j > i
    assert not pyramid3d.in_waffle((3, 2), 4)   # i > L - j
    assert pyramid3d.waffle_points(2) == [(0, 0), (1, 0), (1, 1), (2, 0)]


def test_pyramid_count_basics():
    O = lattice.origin(2, 3)
    assert pyramid3d.count_pyramid_paths(2, 0, O) == 1
    # side 1: the single forward walk cycles through the four corners
    assert [pyramid3d.count_pyramid_paths(1, n, lattice.origin(1, 3)) for n in range(6)] == [1] * 6


def test_forward_equals_backward():
    for L in range(4):
        for z in pyramid3d.pyramid_points(L):
            for n in range(6):
                f = pyramid3d.count_pyramid_paths(L, n, z, "F")
                b = pyramid3d.count_pyramid_paths(L, n, z, "B")
                assert f == b


def test_corner_sequence_golden_and_oracle():
    # frozen from the enumeration oracle
    want = [1, 1, 2, 3, 6, 9, 18, 27, 54]
    O = lattice.origin(2, 3)
    got = [pyramid3d.count_pyramid_paths(2, n, O) for n in range(9)]
    assert got == want
    for n in range(7):
        assert len(brute_pyramid(2, O, n)) == want[n]


def test_waffle_walk_counts():
    # length 0 counts 1 exactly on the axis
    for L in range(4):
        for i, j in pyramid3d.waffle_points(L):
            assert pyramid3d.count_waffle_walks(L, 0, (i, j)) == (1 if j == 0 else 0)
    with pytest.raises(OutsideWaffle):
        pyramid3d.count_waffle_walks(3, 1, (0, 1))
    # DP equals the enumeration oracle
    for L in range(3):
        for start in pyramid3d.waffle_points(L):
            for n in range(6):
                assert pyramid3d.count_waffle_walks(L, n, start) == len(
                    pyramid3d.enumerate_waffle_walks(L, start, n)
                )


def test_count_identity_with_pyramid():
    for L in range(4):
        for n in range(7):
            for i, j in pyramid3d.waffle_points(L):
                w = pyramid3d.count_waffle_walks(L, n, (i, j))
                p = pyramid3d.count_pyramid_paths(L, n, pyramid3d.paired_start_point(L, i, j))
                if j >= 1 and i >= 1 and i - j >= 0:
                    p2 = pyramid3d.count_pyramid_paths(
                        L, n, pyramid3d.paired_start_point(L, i - 1, j - 1)
                    )
                else:
                    p2 = 0
                assert w == p - p2
    # the corner case quoted everywhere: counts agree outright
    for L in range(4):
        for n in range(7):
            assert pyramid3d.count_waffle_walks(L, n, (0, 0)) == pyramid3d.count_pyramid_paths(
                L, n, lattice.origin(L, 3)
            )


def test_signed_array_symmetry_and_agreement():
    for L in range(4):
        arrays = pyramid3d.signed_waffle_array(L, 6)
        for n, arr in enumerate(arrays):
            for (i, j), v in arr.items():
                assert v == -arr.get((L + 1 - j, L + 1 - i), 0)
                if i + j == L + 1:
                    assert v == 0
                if i + j <= L:
                    assert v == pyramid3d.count_waffle_walks(L, n, (i, j))


def test_profile3d_and_anchor():
    z = (4, 1, 3, 4)
    cells = pyramid3d.profile3d(z)
    assert len(cells) == (min(1, 4) + 1) * (min(4, 3) + 1) == 8
    region = pyramid3d.anchored_region(z)
    assert len(set(region)) == 8
    L = sum(z)
    assert all(pyramid3d.in_waffle(pt, L) for pt in region)
    for c in cells:
        assert pyramid3d.anchor_cell(z, pyramid3d.anchor(z, c)) == c
    # corner: the single cell anchors at the origin
    corner = (0, 0, 0, 5)
    assert pyramid3d.profile3d(corner) == [(0, 0)]
    assert pyramid3d.anchor(corner, (0, 0)) == (0, 0)


def test_profile3d_cardinality_matches_walk_counts():
    # walks from anywhere equal axis-ending waffle walks started across the
    # anchored region
    for L in range(3):
        for z in pyramid3d.pyramid_points(L):
            for n in range(5):
                total = sum(
                    pyramid3d.count_waffle_walks(L, n, pt)
                    for pt in pyramid3d.anchored_region(z)
                )
                assert total == pyramid3d.count_pyramid_paths(L, n, z)


def test_scaffolding3d_certificate():
    for L in range(5):
        rep = pyramid3d.validate_scaffolding3d(L)
        assert rep.ok, rep.violations[:3]


def test_diamond_delta_rejects_bad_input():
    with pytest.raises(NotAllowed):
        pyramid3d.diamond_delta((0, 0, 0, 3), (1, 1), "N")
    with pytest.raises(NotAllowed):
        pyramid3d.diamond_delta((0, 0, 0, 3), (0, 0), "S")


def test_waffle_to_pyramid_round_trip_small():
    for L in range(3):
        for z in pyramid3d.pyramid_points(L):
            for n in range(5):
                seen = []
                for cell in pyramid3d.profile3d(z):
                    start = pyramid3d.anchor(z, cell)
                    for w in pyramid3d.enumerate_waffle_walks(L, start, n):
                        p = pyramid3d.waffle_to_pyramid(z, cell, w)
                        assert len(p) == n
                        assert pyramid3d.pyramid_to_waffle(z, p) == (cell, w)
                        seen.append(p)
                assert sorted(seen) == sorted(brute_pyramid(L, z, n))


def test_waffle_to_pyramid_errors():
    with pytest.raises(InvalidWalk):
        pyramid3d.waffle_to_pyramid((0, 0, 0, 2), (1, 1), "N")
    with pytest.raises(InvalidWalk):
        pyramid3d.waffle_to_pyramid((0, 0, 0, 2), (0, 0), "S")
    assert pyramid3d.waffle_to_pyramid((0, 0, 0, 2), (0, 0), "") == ()


def test_zone_partition_golden():
    # the full scaffolding table at the showcase point, frozen
    doc = json.loads((GOLDEN / "diamond_scaffolding_8_4_6_7.json").read_text())
    z = tuple(doc["point"])
    got = {}
    for cell in pyramid3d.profile3d(z):
        for s in pyramid3d.allowed_cardinal(z, cell, sum(z)):
            j, c2 = pyramid3d.diamond_delta(z, cell, s)
            got[f"{cell[0]},{cell[1]}:{s}"] = [j, list(c2)]
    assert got == doc["table"]


def test_gf_coefficients():
    assert pyramid3d.pyramid_gf_coefficients(0, 5) == [1, 0, 0, 0, 0, 0]
    assert pyramid3d.pyramid_gf_coefficients(1, 5) == [1] * 6
    for L in range(5):
        coeffs = pyramid3d.pyramid_gf_coefficients(L, 10)
        assert coeffs[0] == 1
        for n in range(11):
            assert coeffs[n] == pyramid3d.count_pyramid_paths(L, n, lattice.origin(L, 3))
    with pytest.raises(PrecisionLoss):
        pyramid3d.pyramid_gf_coefficients(3, 12, tolerance=1e-12, dps=3)


def test_free_walk_count():
    assert pyramid3d.free_walk_count(0, 0, 0) == 1
    assert pyramid3d.free_walk_count(1, 1, 0) == 1
    assert pyramid3d.free_walk_count(2, 0, 0) == 4
    assert pyramid3d.free_walk_count(3, 0, 0) == 0  # parity
    # row sums: 4^n walks in total
    for n in range(6):
        assert sum(
            pyramid3d.free_walk_count(n, dx, dy)
            for dx in range(-n, n + 1)
            for dy in range(-n, n + 1)
        ) == 4**n


def test_reflection_counts():
    assert pyramid3d.reflection_count(4, 0, (0, 0)) == 1
    assert pyramid3d.reflection_count(4, 1, (1, 0)) == 1
    for L in range(4):
        for start in pyramid3d.waffle_points(L):
            for n in range(8):
                assert pyramid3d.reflection_count(L, n, start) == pyramid3d.count_waffle_walks_to(
                    L, n, start
                )


def test_corner_by_reflection():
    for L in range(4):
        for n in range(9):
            assert pyramid3d.corner_count_by_reflection(L, n) == pyramid3d.count_pyramid_paths(
                L, n, lattice.origin(L, 3)
            )
