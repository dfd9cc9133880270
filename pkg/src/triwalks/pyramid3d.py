"""Dimension three: pyramid walks, waffle walks, and the bridge between them.

The pyramid of side L is the set of (x1, x2, x3, x4) >= 0 summing to L,
walked with the four forward steps s_j = e_j - e_{j-1} (cyclic) and their
reversals. The waffle is the plane domain

    W_L = {(i, j) : 0 <= j <= i <= L - j},

walked with unit N/E/S/W steps. A waffle walk here always ends on the axis
j = 0 (where length-0 walks on the axis count as already arrived).

Every pyramid point z carries the cell grid C(z) = {(p, q) : p <= min(x2, x4),
q <= min(x1, x3)} and the anchor map h_z(p, q) = (x1 + x3 + p - q, p + q),
an injection into W_L. A scaffolding maps (cell, cardinal step) pairs to
(forward pyramid step, cell) pairs so that anchors track the walk exactly;
running it turns a waffle walk into a pyramid walk of the same length.

The explicit scaffolding used here matches, anchor by anchor: the inputs
aimed at a target anchor t correspond to the anchored neighbours of t in
W(z), the outputs at t to the neighbours z + s_j whose grid reaches t, and
the two lists always have the same length; pairing them in a fixed order
(N, E, S, W against s_1 < s_2 < s_3 < s_4) defines the bijection. The
pointwise certificate in ``validate_scaffolding3d`` is the correctness
argument.
"""

from __future__ import annotations

import math

import mpmath

from .errors import InvalidWalk, NotAllowed, OutsideWaffle, PrecisionLoss
from .profiles import CheckReport

CARDINAL = {"N": (0, 1), "E": (1, 0), "S": (0, -1), "W": (-1, 0)}
CARDINAL_ORDER = ("N", "E", "S", "W")


def in_waffle(pt, L):
    i, j = pt
    return 0 <= j <= i <= L - j


def waffle_points(L):
    return [(i, j) for i in range(L + 1) for j in range(L // 2 + 1) if in_waffle((i, j), L)]


def pyramid_points(L):
    pts = []
    for x1 in range(L + 1):
        for x2 in range(L + 1 - x1):
            for x3 in range(L + 1 - x1 - x2):
                pts.append((x1, x2, x3, L - x1 - x2 - x3))
    return pts


def step_vector4(step):
    j = abs(step)
    v = [0, 0, 0, 0]
    sign = 1 if step > 0 else -1
    v[j - 1] += sign
    v[(j - 2) % 4] -= sign
    return tuple(v)


def forward_neighbours4(z):
    return {
        j: tuple(a + b for a, b in zip(z, step_vector4(j))) for j in (1, 2, 3, 4)
    }


def count_pyramid_paths(L, n, start, orientation="F"):
    """Forward (or backward) walks of length n from ``start``; exact DP."""
    start = tuple(start)
    counts = {z: 1 for z in pyramid_points(L)}
    sign = 1 if orientation == "F" else -1
    for _ in range(n):
        new = {}
        for z in counts:
            tot = 0
            for j in (1, 2, 3, 4):
                w = tuple(a + b for a, b in zip(z, step_vector4(sign * j)))
                if min(w) >= 0:
                    tot += counts[w]
            new[z] = tot
        counts = new
    return counts[start]


def paired_start_point(L, i, j):
    """The pyramid point paired with waffle position (i, j)."""
    return (i - j, j, 0, L - i)


def count_waffle_walks(L, n, start):
    """Walks of length n inside the waffle from ``start`` ending on the axis."""
    if not in_waffle(start, L):
        raise OutsideWaffle(f"{start} violates 0 <= j <= i <= {L} - j")
    counts = {pt: 1 if pt[1] == 0 else 0 for pt in waffle_points(L)}
    for _ in range(n):
        new = {}
        for pt in counts:
            tot = 0
            for d in CARDINAL.values():
                q = (pt[0] + d[0], pt[1] + d[1])
                if in_waffle(q, L):
                    tot += counts[q]
            new[pt] = tot
        counts = new
    return counts[start]


def count_waffle_walks_to(L, n, start, end=(0, 0)):
    """Walks of length n inside the waffle from ``start`` to a single point."""
    if not in_waffle(start, L):
        raise OutsideWaffle(f"{start} violates 0 <= j <= i <= {L} - j")
    counts = {pt: 1 if pt == tuple(end) else 0 for pt in waffle_points(L)}
    for _ in range(n):
        new = {}
        for pt in counts:
            tot = 0
            for d in CARDINAL.values():
                q = (pt[0] + d[0], pt[1] + d[1])
                if in_waffle(q, L):
                    tot += counts[q]
            new[pt] = tot
        counts = new
    return counts[start]


def signed_waffle_array(L, n_max):
    """The signed array extending the walk counts to 0 <= j <= i <= L + 1.

    Defined by w[0][i][0] = 1 for i <= L, w[0][L+1][j] = -1 for j >= 1,
    zero elsewhere, and the four-neighbour recurrence

        w[n+1][i][j] = w[n][i+1][j] + w[n][i][j-1] + w[n][i][j+1] + w[n][i-1][j]

    with w = 0 outside the index triangle. It agrees with the confined walk
    counts where i + j <= L and obeys w[n][i][j] = -w[n][L+1-j][L+1-i].
    """
    idx = [(i, j) for i in range(L + 2) for j in range(i + 1)]
    w0 = {}
    for i, j in idx:
        if j == 0:
            w0[(i, j)] = 1 if i <= L else 0
        else:
            w0[(i, j)] = -1 if i == L + 1 else 0
    out = [w0]
    for _ in range(n_max):
        prev = out[-1]
        cur = {}
        for i, j in idx:
            cur[(i, j)] = (
                prev.get((i + 1, j), 0)
                + prev.get((i, j - 1), 0)
                + prev.get((i, j + 1), 0)
                + prev.get((i - 1, j), 0)
            )
        out.append(cur)
    return out


# -- cells, anchors and the explicit scaffolding ------------------------------

def profile3d(z):
    x1, x2, x3, x4 = z
    return [
        (p, q)
        for p in range(min(x2, x4) + 1)
        for q in range(min(x1, x3) + 1)
    ]


def anchor(z, cell):
    x1, x2, x3, x4 = z
    p, q = cell
    return (x1 + x3 + p - q, p + q)


def anchor_cell(z, pt):
    """The cell of z anchored at ``pt``, or None."""
    x1, x2, x3, x4 = z
    di = pt[0] - x1 - x3
    if (di + pt[1]) % 2:
        return None
    p, q = (di + pt[1]) // 2, (pt[1] - di) // 2
    if 0 <= p <= min(x2, x4) and 0 <= q <= min(x1, x3):
        return (p, q)
    return None


def anchored_region(z):
    return [anchor(z, c) for c in profile3d(z)]


def allowed_cardinal(z, cell, L):
    return tuple(
        s
        for s in CARDINAL_ORDER
        if in_waffle(tuple(a + b for a, b in zip(anchor(z, cell), CARDINAL[s])), L)
    )


def _local_lists(z, target, L):
    """Incoming (step, cell) pairs aimed at ``target`` and usable exits."""
    ins = []
    for s in CARDINAL_ORDER:
        d = CARDINAL[s]
        src = (target[0] - d[0], target[1] - d[1])
        c = anchor_cell(z, src)
        if c is not None:
            ins.append((s, c))
    outs = []
    for j, w in forward_neighbours4(z).items():
        if min(w) >= 0:
            c = anchor_cell(w, target)
            if c is not None:
                outs.append((j, c))
    return ins, outs


def diamond_delta(z, cell, step):
    """One scaffolding lookup: (cell, cardinal step) to (pyramid step, cell)."""
    L = sum(z)
    if cell not in set(profile3d(z)):
        raise NotAllowed(f"cell {cell} not in C({z})")
    a = anchor(z, cell)
    d = CARDINAL[step]
    target = (a[0] + d[0], a[1] + d[1])
    if not in_waffle(target, L):
        raise NotAllowed(f"step {step} leaves the waffle from {a}")
    ins, outs = _local_lists(z, target, L)
    if len(ins) != len(outs):
        raise AssertionError(f"anchor class mismatch at z={z}, target={target}")
    return outs[ins.index((step, cell))]


def diamond_delta_inv(z, j, cell):
    """Preimage (cell, cardinal step) of a tagged output cell."""
    w = forward_neighbours4(z)[j]
    target = anchor(w, cell)
    L = sum(z)
    ins, outs = _local_lists(z, target, L)
    if (j, cell) not in outs:
        raise NotAllowed(f"({j}, {cell}) has no preimage at {z}")
    s, c = ins[outs.index((j, cell))]
    return c, s


def validate_scaffolding3d(L):
    """Pointwise certificate: bijectivity and anchor tracking everywhere."""
    rep = CheckReport(f"3d scaffolding valid, L={L}")
    for z in pyramid_points(L):
        targets = set()
        for j, w in forward_neighbours4(z).items():
            if min(w) >= 0:
                targets.update((j, c) for c in profile3d(w))
        seen = set()
        for cell in profile3d(z):
            for s in allowed_cardinal(z, cell, L):
                rep.checked += 1
                j, cell2 = diamond_delta(z, cell, s)
                w = forward_neighbours4(z)[j]
                a = anchor(z, cell)
                d = CARDINAL[s]
                if anchor(w, cell2) != (a[0] + d[0], a[1] + d[1]):
                    rep.violations.append((z, cell, s, "anchor rule"))
                if (j, cell2) in seen:
                    rep.violations.append((z, cell, s, "collision"))
                seen.add((j, cell2))
        if seen != targets:
            rep.violations.append((z, "image mismatch"))
    return rep


def waffle_to_pyramid(z_c, start_cell, walk):
    """Run the scaffolding along a waffle walk; one pyramid step per letter.

    ``walk`` is a string over NESW starting at the anchor of ``start_cell``.
    For a fixed starting point the map (cell, walk) -> pyramid walk is a
    bijection onto the forward walks of that length.
    """
    L = sum(z_c)
    z, cell = tuple(z_c), tuple(start_cell)
    if cell not in set(profile3d(z)):
        raise InvalidWalk(f"cell {cell} not in C({z})")
    steps = []
    for ch in walk:
        if ch not in CARDINAL:
            raise InvalidWalk(f"bad letter {ch!r}")
        try:
            j, cell = diamond_delta(z, cell, ch)
        except NotAllowed as exc:
            raise InvalidWalk(str(exc)) from None
        steps.append(j)
        z = forward_neighbours4(z)[j]
    return tuple(steps)


def pyramid_to_waffle(z_c, steps):
    """Inverse of ``waffle_to_pyramid``: recover (start cell, walk)."""
    z = tuple(z_c)
    for s in steps:
        z = forward_neighbours4(z)[s]
        if min(z) < 0:
            raise InvalidWalk("walk leaves the pyramid")
    cell = (0, 0)
    letters = []
    for s in reversed(steps):
        z = tuple(a - b for a, b in zip(z, step_vector4(s)))
        cell, ch = diamond_delta_inv(z, s, cell)
        letters.append(ch)
    return cell, "".join(reversed(letters))


# -- enumeration oracles ------------------------------------------------------

def enumerate_pyramid_paths(L, start, n, orientation="F"):
    sign = 1 if orientation == "F" else -1
    out = []

    def rec(p, acc):
        if len(acc) == n:
            out.append(tuple(acc))
            return
        for j in (1, 2, 3, 4):
            w = tuple(a + b for a, b in zip(p, step_vector4(sign * j)))
            if min(w) >= 0:
                acc.append(sign * j)
                rec(w, acc)
                acc.pop()

    rec(tuple(start), [])
    return out


def enumerate_waffle_walks(L, start, n, end_on_axis=True):
    out = []

    def rec(pt, acc):
        if len(acc) == n:
            if not end_on_axis or pt[1] == 0:
                out.append("".join(acc))
            return
        for s in CARDINAL_ORDER:
            d = CARDINAL[s]
            q = (pt[0] + d[0], pt[1] + d[1])
            if in_waffle(q, L):
                acc.append(s)
                rec(q, acc)
                acc.pop()

    rec(tuple(start), [])
    return out


# -- closed-form generating function and the reflection principle -------------

def pyramid_gf_coefficients(L, N, tolerance=1e-6, dps=40):
    """Taylor coefficients of the corner-walk generating function.

    The closed form is a finite sum of geometric terms: with M = L + 4 and
    c_r = 2 cos(r pi / M),

        P(t) = 1/M^2 * sum over odd 1 <= j < k <= L + 3 of
               (c_k - c_j)^2 (2 + c_j) (2 + c_k) / (1 - (c_j + c_k) t),

    so the n-th coefficient is the same sum with (c_j + c_k)^n in place of
    the geometric factor. Evaluated in high-precision arithmetic; every
    coefficient must round to an integer within ``tolerance``.
    """
    M = L + 4
    with mpmath.workdps(dps):
        theta = mpmath.pi / M
        terms = []
        for j in range(1, L + 4, 2):
            for k in range(j + 2, L + 4, 2):
                cj = 2 * mpmath.cos(j * theta)
                ck = 2 * mpmath.cos(k * theta)
                terms.append(((ck - cj) ** 2 * (2 + cj) * (2 + ck), cj + ck))
        coeffs = []
        for n in range(N + 1):
            s = mpmath.fsum(w * lam**n for w, lam in terms) / M**2
            r = mpmath.nint(s)
            if abs(s - r) >= tolerance:
                raise PrecisionLoss(f"coefficient {n} off by {abs(s - r)}")
            coeffs.append(int(r))
    return coeffs


def free_walk_count(n, dx, dy):
    """N/E/S/W walks of length n with total displacement (dx, dy).

    Rotating to u = x + y, v = x - y splits the walk into two independent
    one-dimensional ones, each counted by a binomial coefficient.
    """
    u, v = dx + dy, dx - dy
    if abs(u) > n or abs(v) > n or (n + u) % 2 or (n + v) % 2:
        return 0
    return math.comb(n, (n + u) // 2) * math.comb(n, (n + v) // 2)


# endpoint orbit data: positive and negative translate offsets of the lattice
_POS_SHIFTS = ((0, 0), (1, 3), (4, 2), (3, -1))
_NEG_SHIFTS = ((1, -1), (0, 2), (3, 3), (4, 0))


def _free_walks_to_lattice(L, n, sx, sy):
    """Free walks from (sx, sy) into the doubled lattice of period 2L + 8."""
    M = 2 * L + 8
    total = 0
    for base in (0, L + 4):
        kx_lo = -((abs(sx) + n) // M + 1)
        kx_hi = (abs(sx) + n) // M + 1
        ky_lo = -((abs(sy) + n) // M + 1)
        ky_hi = (abs(sy) + n) // M + 1
        for kx in range(kx_lo, kx_hi + 1):
            for ky in range(ky_lo, ky_hi + 1):
                tx, ty = base + kx * M, base + ky * M
                if abs(tx - sx) + abs(ty - sy) <= n:
                    total += free_walk_count(n, tx - sx, ty - sy)
    return total


def reflection_count(L, n, start):
    """Confined walks from ``start`` to (0, 0), by signed free-walk counting.

    The waffle is a reflection-group chamber; unfolding the walls turns the
    confined count into free walks from eight shifted copies of the start,
    four counted positively and four negatively, into a doubled square
    lattice of period 2L + 8.
    """
    if not in_waffle(start, L):
        raise OutsideWaffle(f"{start} violates 0 <= j <= i <= {L} - j")
    x, y = start
    pos = sum(_free_walks_to_lattice(L, n, x + dx, y + dy) for dx, dy in _POS_SHIFTS)
    neg = sum(_free_walks_to_lattice(L, n, x + dx, y + dy) for dx, dy in _NEG_SHIFTS)
    return pos - neg


def corner_count_by_reflection(L, n):
    """p_n at the corner, assembled from reflection counts along the axis.

    Axis-ending walks from (0, 0) are reversed walks from axis points to
    (0, 0), so the corner count is the sum of reflection counts over all
    axis starting points.
    """
    return sum(reflection_count(L, n, (i, 0)) for i in range(L + 1))
