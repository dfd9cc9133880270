#!/usr/bin/env python3
"""Linear-time bijections driven by scaffoldings.

A scaffolding assigns to every triangle point a small bijection table; the
transducer reads a Motzkin word letter by letter through those tables and
emits one lattice step each. Random tables and the canonical rule-based
one both work; the canonical rules never look at the triangle size, so the
image of a word lands in the smallest triangle its amplitude allows.
"""

from triwalks import lattice, motzkin, scaffold2d
from triwalks.motzkin import MotzkinWord

L = 4
trap = scaffold2d.TrapeziumScaffolding(L)
rand = scaffold2d.RandomScaffolding(L, seed=2024)

print(f"side {L}: image of every length-4 Motzkin path under two scaffoldings")
for w in motzkin.enumerate_meanders(4, L, 0):
    a = trap.motzkin_to_triangular(w)
    b = rand.motzkin_to_triangular(w)
    print(f"  {w.steps}:  canonical {lattice.format_steps(a):17s} random {lattice.format_steps(b)}")

print()
word = motzkin.uniform_sample(10, L, seed=7)
path = trap.motzkin_to_triangular(word)
print("round trip of a sampled word:", word.steps)
print("  image:", lattice.format_steps(path))
print("  back: ", trap.triangular_to_motzkin(path).steps)
print("  lookups so far:", trap.lookup_count)

print()
print("size independence: the all-flat word cycles around the corner")
big = scaffold2d.TrapeziumScaffolding(30)
print("  image of FFFFFFF:", lattice.format_steps(big.motzkin_to_triangular("F" * 7)))

print()
print("bicolored words map to walks whose direction vector is the coloring:")
for colored in ("UfD", "ufd", "UFd"):
    w = MotzkinWord.from_word(colored)
    p = trap.bicolored_to_generic(w, method="two")
    print(f"  {colored}:  {lattice.format_steps(p):14s} dv {w.direction_vector()}")

print()
print("uniform forward walks without fixing any scaffolding (side 3, n=4):")
for seed in range(5):
    print("  ", lattice.format_steps(scaffold2d.sample_forward_path(3, 4, seed=seed)))

print()
print("serialized random scaffolding (first records):")
doc = rand.to_json()
key = "0,0,4"
for rec in doc["tables"][key][:4]:
    print("  ", key, rec)
