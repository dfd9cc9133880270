import itertools
import json
import random

import pytest

from triwalks import flips, lattice, motzkin, profiles, scaffold2d
from triwalks.errors import EmptySet, NotAllowed
from triwalks.motzkin import MotzkinWord
from triwalks.scaffold2d import RandomScaffolding, TrapeziumScaffolding

from conftest import brute_forward


def test_allowed_steps():
    assert motzkin.allowed_steps(0, 3) == ("U", "F")
    assert motzkin.allowed_steps(2, 4) == ("D",)       # top height, even L
    assert motzkin.allowed_steps(1, 3) == ("F", "D")   # top height, odd L
    assert motzkin.allowed_steps(0, 0) == ()


def test_random_scaffolding_valid_and_deterministic():
    for L in range(6):
        for seed in (0, 1):
            scaf = RandomScaffolding(L, seed)
            rep = scaffold2d.validate_scaffolding(scaf)
            assert rep.ok, rep.violations[:3]
    assert RandomScaffolding(4, 9).dumps() == RandomScaffolding(4, 9).dumps()
    assert RandomScaffolding(0, 0).tables == {(0, 0, 0): {}}


def test_random_scaffolding_json_round_trip():
    scaf = RandomScaffolding(4, 123)
    clone = RandomScaffolding.loads(scaf.dumps())
    assert clone.tables == scaf.tables
    w = motzkin.uniform_sample(6, 4, seed=7)
    assert clone.motzkin_to_triangular(w) == scaf.motzkin_to_triangular(w)


def test_validate_catches_corruption():
    scaf = RandomScaffolding(3, 5)
    doc = scaf.to_json()
    recs = doc["tables"]["0,0,3"]
    assert recs
    # map two inputs onto one output
    recs[0]["out_step"] = recs[-1]["out_step"]
    recs[0]["out_cell"] = recs[-1]["out_cell"]
    broken = RandomScaffolding.from_json(doc)
    rep = scaffold2d.validate_scaffolding(broken)
    assert not rep.ok


def test_trapezium_valid_every_size():
    for L in range(8):
        rep = scaffold2d.validate_scaffolding(TrapeziumScaffolding(L))
        assert rep.ok, rep.violations[:3]


def test_trapezium_case_conditions_pointwise():
    # the five cases into the first neighbour, five into the second, two
    # into the third, with their defining equalities
    for L in range(8):
        for z in scaffold2d._points(L):
            x1, x2, _ = z
            for f, l in profiles.cell_representation(z):
                for ch in motzkin.allowed_steps(f, L):
                    j, (f2, l2), case = scaffold2d.trapezium_rule(x1, x2, f, l, ch)
                    if case in (2, 3, 8, 9, 11):
                        assert j == 1
                    elif case in (1, 4, 5, 7, 10):
                        assert j == 2
                    else:
                        assert j == 3 and case in (6, 12)
                    if case == 6:
                        assert l2 <= f2 - 1
                    if case == 12:
                        assert l2 == f2
                    if case == 9:
                        assert l2 == x1 + x2 - f2 and l2 <= x1
                    if case == 2:
                        assert l2 == x1 + x2 + 1 - f2 and l2 >= 1


def test_trapezium_rules_ignore_size():
    # same (x1, x2, cell, step) in a triangle four sizes larger: same output
    for L in range(6):
        big = TrapeziumScaffolding(L + 4)
        small = TrapeziumScaffolding(L)
        for z in scaffold2d._points(L):
            zbig = (z[0], z[1], z[2] + 4)
            for cell in profiles.cell_representation(z):
                for ch in motzkin.allowed_steps(cell[0], L):
                    assert small.delta(z, cell, ch) == big.delta(zbig, cell, ch)


def test_trapezium_domain_errors():
    scaf = TrapeziumScaffolding(3)
    with pytest.raises(NotAllowed):
        scaf.delta((0, 0, 3), (1, 0), "U")  # cell not in C(z)
    with pytest.raises(NotAllowed):
        scaf.delta((0, 0, 3), (0, 0), "D")  # step not allowed at height 0


def test_flat_word_image_is_the_corner_cycle():
    # the all-flat word hugs the corner: s1 s2 s3 repeating
    scaf = TrapeziumScaffolding(5)
    assert scaf.motzkin_to_triangular("F" * 7) == (1, 2, 3, 1, 2, 3, 1)


def test_round_trip_all_scaffoldings():
    for L in range(5):
        scafs = [TrapeziumScaffolding(L), RandomScaffolding(L, 0), RandomScaffolding(L, 1)]
        for n in range(7):
            words = motzkin.enumerate_meanders(n, L, 0)
            paths = set(lattice.enumerate_paths(L, 2, lattice.origin(L), "F" * n))
            for scaf in scafs:
                images = set()
                for w in words:
                    p = scaf.motzkin_to_triangular(w)
                    images.add(p)
                    assert scaf.triangular_to_motzkin(p).steps == w.steps
                assert images == paths


def test_image_of_length4_words_is_figure_count():
    scaf = TrapeziumScaffolding(3)
    words = motzkin.enumerate_meanders(4, 3, 0)
    assert len(words) == 8
    images = {scaf.motzkin_to_triangular(w) for w in words}
    assert images == set(brute_forward(3, 2, (0, 0, 3), 4))


def test_lookup_counter_linear():
    scaf = TrapeziumScaffolding(4)
    w = motzkin.uniform_sample(9, 4, seed=3)
    before = scaf.lookup_count
    p = scaf.motzkin_to_triangular(w)
    assert scaf.lookup_count - before == 9
    before = scaf.lookup_count
    scaf.triangular_to_motzkin(p)
    assert scaf.lookup_count - before == 9


def test_prefix_property():
    scaf = TrapeziumScaffolding(4)
    words = motzkin.enumerate_meanders(6, 4, 0)
    image = {w.steps: scaf.motzkin_to_triangular(w) for w in words}
    for a, b in itertools.combinations(words, 2):
        k = 0
        for x, y in zip(a.steps, b.steps):
            if x != y:
                break
            k += 1
        assert image[a.steps][:k] == image[b.steps][:k]


def test_amplitude_is_minimal_triangle_side():
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randint(1, 25)
        word = motzkin.uniform_sample(n, 2 * n + 2, rng=rng)
        amp = motzkin.amplitude(word)
        scaf = TrapeziumScaffolding(amp)
        pts = lattice.validate_path(amp, 2, lattice.origin(amp), scaf.motzkin_to_triangular(word))
        assert max(p[0] + p[1] for p in pts) == amp


def test_bicolored_method_one_all_black_is_plain():
    scaf = TrapeziumScaffolding(4)
    w = MotzkinWord("UUDFD", colors="bbbbb")
    assert scaf.bicolored_to_generic(w, method="one") == scaf.motzkin_to_triangular("UUDFD")


def test_bicolored_method_two_all_black_is_plain():
    scaf = TrapeziumScaffolding(4)
    w = MotzkinWord("UUDFD", colors="bbbbb")
    assert scaf.bicolored_to_generic(w, method="two") == scaf.motzkin_to_triangular("UUDFD")


def test_bicolored_method_two_all_white_is_the_mirror():
    # white-only runs the reverse table throughout: the image is the
    # coordinate mirror of the black image with reversed steps
    mirror = {1: -3, 2: -2, 3: -1}
    for L in (3, 4):
        scaf = TrapeziumScaffolding(L)
        for w in motzkin.enumerate_meanders(4, L, 0):
            black = scaf.motzkin_to_triangular(w)
            white = scaf.bicolored_to_generic(
                MotzkinWord(w.steps, colors="w" * 4), method="two"
            )
            assert white == tuple(mirror[s] for s in black)


def test_bicolored_bijective_per_color_word():
    for L in (2, 3):
        scaf = TrapeziumScaffolding(L)
        for n in (2, 3, 4):
            for colors in itertools.product("bw", repeat=n):
                colors = "".join(colors)
                dv = "".join("F" if c == "b" else "B" for c in colors)
                want = set(lattice.enumerate_paths(L, 2, lattice.origin(L), dv))
                for method in ("one", "two"):
                    got = set()
                    for w in motzkin.enumerate_meanders(n, L, 0):
                        p = scaf.bicolored_to_generic(
                            MotzkinWord(w.steps, colors=colors), method=method
                        )
                        assert flips.direction_vector(p) == dv
                        got.add(p)
                    assert got == want, (L, n, colors, method)


def test_bicolored_bijective_on_random_scaffoldings():
    # the reverse table works for materialized tables too, since the cell
    # sets are mirror symmetric
    for L, seed in ((2, 0), (3, 3)):
        scaf = RandomScaffolding(L, seed)
        for colors in itertools.product("bw", repeat=3):
            colors = "".join(colors)
            dv = "".join("F" if c == "b" else "B" for c in colors)
            want = set(lattice.enumerate_paths(L, 2, lattice.origin(L), dv))
            for method in ("one", "two"):
                got = {
                    scaf.bicolored_to_generic(
                        MotzkinWord(w.steps, colors=colors), method=method
                    )
                    for w in motzkin.enumerate_meanders(3, L, 0)
                }
                assert got == want


def test_bicolored_counts_reproduce_pair_identity():
    import math

    for L in (2, 3):
        for p in range(4):
            for q in range(4 - p):
                walks = lattice.count_bicolored_pairs(L, p, q)
                words = math.comb(p + q, p) * motzkin.count_paths_by_amplitude(p + q, L)
                assert walks == words


def test_sample_forward_path_support():
    paths = {scaffold2d.sample_forward_path(3, 4, seed=s) for s in range(300)}
    assert paths == set(lattice.enumerate_paths(3, 2, lattice.origin(3), "FFFF"))
    assert scaffold2d.sample_forward_path(4, 0, seed=0) == ()
    with pytest.raises(EmptySet):
        scaffold2d.sample_forward_path(0, 2, seed=0)


def test_sample_forward_path_empirical_distribution():
    rng = random.Random(11)
    paths = lattice.enumerate_paths(4, 2, lattice.origin(4), "F" * 5)
    counts = {p: 0 for p in paths}
    draws = 6000
    for _ in range(draws):
        counts[scaffold2d.sample_forward_path(4, 5, rng=rng)] += 1
    expected = draws / len(paths)
    for c in counts.values():
        assert abs(c - expected) < 6 * expected**0.5
