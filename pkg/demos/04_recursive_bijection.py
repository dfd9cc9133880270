#!/usr/bin/env python3
"""The recursive bijection between forward walks and bounded Motzkin paths.

Unlike the scaffolding transducers this one is defined by recursion on the
walk and can take more than linear time; the call counter below records how
much work random inputs actually cause (typically linear, occasionally
much more).
"""

import random
import statistics

from triwalks import lattice, motzkin, omega, scaffold2d

L = 3
print(f"side {L}: forward walks of length 4 and their images")
for p in lattice.enumerate_paths(L, 2, lattice.origin(L), "F" * 4):
    w = omega.forward_to_motzkin_exp(L, p)
    back = omega.motzkin_to_forward_exp(L, w.steps)
    assert back == p
    print(f"  {lattice.format_steps(p):14s} ->  {w.steps}")

print()
print("shifted starts split into meanders plus walks one level down (k=1, n=3):")
for p in lattice.enumerate_paths(L, 2, omega.edge_point(L, 1), "FFF"):
    img = omega.omega(L, 1, p)
    if img.is_meander:
        print(f"  {lattice.format_steps(p):14s} ->  meander {img.meander.steps} from height 1")
    else:
        print(f"  {lattice.format_steps(p):14s} ->  walk {lattice.format_steps(img.path)} from the corner")

print()
print("recursive call counts on random walks (no bound asserted):")
rng = random.Random(1)
for n in (10, 20, 40):
    Lbig = 6
    counts = []
    for _ in range(50):
        word = motzkin.uniform_sample(n, Lbig, rng=rng)
        path = scaffold2d.TrapeziumScaffolding(Lbig).motzkin_to_triangular(word)
        stats = {}
        omega.omega(Lbig, 0, path, stats)
        counts.append(stats["calls"])
    print(f"  n={n:3d}: calls median {statistics.median(counts):6.0f}  max {max(counts)}")
