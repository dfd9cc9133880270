"""Profiles of triangle points and their cell representations.

The profile of a point z = (x1, x2, x3) with x1 + x2 + x3 = L is the vector
(p_0, ..., p_H), H = floor(L/2), of the first coefficients of

    (1 - x^(x1+1)) (1 - x^(x2+1)) (1 - x^(x3+1)) / (1 - x)^2.

Points one step outside the triangle (some coordinate equal to -1) get the
null profile, which makes the border recurrences uniform.

The closed-form cell representation realizes p_f as the number of lattice
cells (f, l) with max(0, f - x3) <= l <= min(f, x1, x2, x1 + x2 - f); cells
are 0-indexed and the height of (f, l) is f.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import all_points, step_vector
from .motzkin import meander_count_table


def point_polynomial(z):
    """Coefficients of the defining polynomial, degree L + 1 exactly.

    Computed as (1 + x + ... + x^{x1}) (1 + x + ... + x^{x2}) (1 - x^{x3+1}),
    which keeps everything in integers. Any coordinate equal to -1 kills a
    factor and gives the zero polynomial.
    """
    x1, x2, x3 = z
    if min(z) < -1:
        raise ValueError(f"profile undefined for {z}")
    L = x1 + x2 + x3
    if min(z) == -1:
        return [0] * (L + 2)
    a = [1] * (x1 + 1)
    b = [1] * (x2 + 1)
    prod = [0] * (x1 + x2 + 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] += ai * bj
    out = [0] * (L + 2)
    for i, c in enumerate(prod):
        out[i] += c
        out[i + x3 + 1] -= c
    return out


def profile(z, L=None):
    """The vector (p_0, ..., p_H) of the point z."""
    if L is None:
        L = sum(z)
    elif sum(z) != L:
        raise ValueError(f"{z} does not lie at level {L}")
    H = L // 2
    poly = point_polynomial(z)
    return tuple(poly[: H + 1])


def cell_representation(z):
    """All cells of z from the closed form, sorted by (height, index)."""
    x1, x2, x3 = z
    out = []
    for f in range(sum(z) // 2 + 1):
        lo = max(0, f - x3)
        hi = min(f, x1, x2, x1 + x2 - f)
        out.extend((f, l) for l in range(lo, hi + 1))
    return out


def cells_at_height(z, f):
    x1, x2, x3 = z
    lo = max(0, f - x3)
    hi = min(f, x1, x2, x1 + x2 - f)
    return [(f, l) for l in range(lo, hi + 1)]


def floor_sizes(cells, H):
    sizes = [0] * (H + 1)
    for f, _ in cells:
        sizes[f] += 1
    return tuple(sizes)


@dataclass
class CheckReport:
    """Outcome of an exhaustive identity check."""

    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def summary(self):
        state = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"{self.name}: {self.checked} checks, {state}"


def check_profile_identities(L):
    """Verify the three-term profile identities at every point of the triangle.

    For each z and each coefficient index i, the sum of p_i over the three
    forward neighbours of z must telescope to neighbouring coefficients of
    z: p_{i-1} + p_i + p_{i+1} in the interior, p_0 + p_1 at i = 0, and at
    i = H either p_{H-1} + p_H (L odd) or p_{H-1} alone (L even). The proof
    rests on x^{L+1} Pol(1/x) = -Pol(x), i.e. p_{L+1-j} = -p_j, which is
    checked here as well.
    """
    rep = CheckReport(f"profile identities, L={L}")
    H = L // 2
    for z in all_points(L, 2):
        polys = []
        for j in (1, 2, 3):
            w = tuple(a + b for a, b in zip(z, step_vector(j, 2)))
            polys.append(point_polynomial(w) if min(w) >= 0 else [0] * (L + 2))
        sums = [sum(q[i] for q in polys) for i in range(L + 2)]
        p = point_polynomial(z)

        def coeff(i):
            return p[i] if 0 <= i <= L + 1 else 0

        for i in range(H + 1):
            if i == 0:
                want = coeff(0) + coeff(1)
            elif i < H:
                want = coeff(i - 1) + coeff(i) + coeff(i + 1)
            elif L % 2 == 1:
                want = coeff(H - 1) + coeff(H)
            else:
                want = coeff(H - 1)
            rep.checked += 1
            if sums[i] != want:
                rep.violations.append((z, i, sums[i], want))
        for j in range(L + 2):
            rep.checked += 1
            if p[L + 1 - j] != -p[j]:
                rep.violations.append((z, ("antisymmetry", j)))
    return rep


def check_cells_match_profiles(L):
    """Floor sizes of the closed-form cells must equal the profile, everywhere."""
    rep = CheckReport(f"cells realize profiles, L={L}")
    H = L // 2
    for z in all_points(L, 2):
        rep.checked += 1
        if floor_sizes(cell_representation(z), H) != profile(z):
            rep.violations.append(z)
    return rep


def check_forward_counts_via_profiles(L, n_max, count_paths=None):
    """Forward-path counts from any point versus the profile/meander sum.

    f_n(z) must equal sum_i p_i(z) * M_n(i) for every z and every n up to
    n_max, where M_n(i) counts meanders of amplitude at most L from height i.
    """
    from .lattice import count_paths as dp_count

    if count_paths is None:
        count_paths = dp_count
    rep = CheckReport(f"forward counts via profiles, L={L}, n<={n_max}")
    table = meander_count_table(L, n_max)
    profs = {z: profile(z) for z in all_points(L, 2)}
    for n in range(n_max + 1):
        for z, pr in profs.items():
            lhs = count_paths(L, 2, z, "F" * n)
            rhs = sum(pi * mi for pi, mi in zip(pr, table[n]))
            rep.checked += 1
            if lhs != rhs:
                rep.violations.append((z, n, lhs, rhs))
    return rep
