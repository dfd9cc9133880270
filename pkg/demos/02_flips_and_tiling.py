#!/usr/bin/env python3
"""Transporting a walk between direction vectors with local flips.

A swap flip exchanges an adjacent forward/backward pair, a last-step flip
reverses the final step. Chaining them moves a walk to any prescribed
direction vector, and the result does not depend on the order chosen; the
folded-path tiling shows all 2^n transported walks inside one picture.
"""

import random

from triwalks import flips, lattice

p = (-3, -3, -2)
print("start:", lattice.format_steps(p), " dv:", flips.direction_vector(p))
q, events = flips.transform_with_trace(p, "FBB")
print("target dv FBB gives:", lattice.format_steps(q))
print("flip trace:")
for ev in events:
    print("  ", ev.to_json())

print()
print("two independent randomized schedules give the same answer:")
rng = random.Random(0)
for _ in range(3):
    a = flips.transform_random(p, "FBB", rng=rng)
    print("  ", lattice.format_steps(a))

print()
base = (1, 2, 1)
print("the walk", lattice.format_steps(base), "folded and tiled; readouts:")
t = flips.tile(flips.fold(base))
for dv in ("FFF", "FFB", "FBF", "FBB", "BFF", "BFB", "BBF", "BBB"):
    print(f"  dv {dv}: {lattice.format_steps(flips.read_path(t, dv))}")

print()
print("the explicit involution pass (forward <-> backward):")
for p in lattice.enumerate_paths(2, 2, lattice.origin(2), "FFF"):
    q = flips.algorithm1(p)
    back = flips.algorithm1(q)
    print(f"  {lattice.format_steps(p)}  ->  {lattice.format_steps(q)}  ->  {lattice.format_steps(back)}")
