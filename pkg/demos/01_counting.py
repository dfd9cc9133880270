#!/usr/bin/env python3
"""Counting walks in the triangle against bounded Motzkin paths.

Forward walks use the three steps s1, s2, s3 that rotate one unit of the
point's mass between coordinates; the walk may start anywhere and never
needs to return. Motzkin paths are counted by amplitude: twice the maximum
height, plus one if a flat step happens up there.
"""

from triwalks import lattice, motzkin

print("triangle of side 3, walks from the corner (0,0,3):")
O = lattice.origin(3)
for n in range(9):
    fwd = lattice.count_paths(3, 2, O, "F" * n)
    gen = lattice.count_generic(3, 2, O, n)
    mz = motzkin.count_paths_by_amplitude(n, 3)
    print(f"  n={n}: forward={fwd:5d}  generic={gen:8d}  motzkin(amp<=3)={mz:5d}"
          f"   generic/forward=2^{n}={gen // fwd if fwd else 0}")

print()
print("length-4 Motzkin paths sorted by amplitude:")
for L in (1, 2, 3, 4):
    words = [w.steps for w in motzkin.enumerate_meanders(4, L, 0)]
    fresh = [w for w in words if motzkin.amplitude(w) == L]
    print(f"  amplitude {L}: {len(fresh)} new ({', '.join(fresh)})")

print()
print("the same number three ways (side 4, length 6):")
print("  dynamic program:", lattice.count_paths(4, 2, lattice.origin(4), "F" * 6))
print("  enumeration:    ", len(lattice.enumerate_paths(4, 2, lattice.origin(4), "F" * 6)))
print("  motzkin count:  ", motzkin.count_paths_by_amplitude(6, 4))

print()
print("every direction vector of a given length is equinumerous (side 3, n=3):")
for dv in ("FFF", "FFB", "FBF", "BFF", "BBB"):
    print(f"  dv {dv}: {lattice.count_paths(3, 2, O, dv)}")
