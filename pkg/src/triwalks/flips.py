"""Local rewriting of walks: swap flips, last-step flips, and the tiling view.

A swap flip exchanges an adjacent forward/backward pair:

    (s_j, -s_k) <-> (-s_k, s_j)        when j != k,
    (s_k, -s_k) <-> (-s_{k-1}, s_{k-1})  otherwise (indices cyclic in 1..d+1).

A last-step flip rewrites the final step via s_i <-> -s_{i-1}. Both moves
preserve validity of the walk and are involutions. Composing them transports
a walk from one direction vector to any other; the result is independent of
the order in which flips are applied, which the folded-path tiling below
makes explicit for the triangle (d = 2).

Positions are 0-based: ``swap_flip(steps, i)`` acts on steps i and i + 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import EmptyPath, LengthMismatch, MixedInput, NotMixedPair


def direction_vector(steps):
    return "".join("F" if s > 0 else "B" for s in steps)


def _swap_pair(s1, s2, d):
    m = d + 1
    if s1 > 0 and s2 < 0:
        j, k = s1, -s2
        if j != k:
            return (-k, j)
        kk = (k - 2) % m + 1  # k - 1 cyclically
        return (-kk, kk)
    if s1 < 0 and s2 > 0:
        k, j = -s1, s2
        if j != k:
            return (j, -k)
        kk = k % m + 1  # k + 1 cyclically
        return (kk, -kk)
    raise NotMixedPair(f"steps {s1}, {s2} are not a forward/backward pair")


def swap_flip(steps, i, d=2):
    """Apply the swap rule at positions i, i + 1; returns a new tuple."""
    steps = list(steps)
    if not 0 <= i < len(steps) - 1:
        raise NotMixedPair(f"position {i} has no right neighbour")
    steps[i], steps[i + 1] = _swap_pair(steps[i], steps[i + 1], d)
    return tuple(steps)


def _last_flip(s, d):
    m = d + 1
    if s > 0:
        return -((s - 2) % m + 1)  # s_i -> -s_{i-1}
    return (-s) % m + 1  # -s_i -> s_{i+1}


def last_step_flip(steps, d=2):
    """Flip the orientation of the final step."""
    if not steps:
        raise EmptyPath("cannot flip the last step of an empty path")
    steps = list(steps)
    steps[-1] = _last_flip(steps[-1], d)
    return tuple(steps)


@dataclass(frozen=True)
class FlipEvent:
    kind: str  # 'swap' or 'last'
    position: int
    before: tuple
    after: tuple

    def to_json(self):
        return {
            "kind": self.kind,
            "position": self.position,
            "before": list(self.before),
            "after": list(self.after),
        }


class _Recorder:
    def __init__(self):
        self.events = []

    def swap(self, steps, i, d):
        before = (steps[i], steps[i + 1])
        steps[i], steps[i + 1] = _swap_pair(steps[i], steps[i + 1], d)
        self.events.append(FlipEvent("swap", i, before, (steps[i], steps[i + 1])))

    def last(self, steps, d):
        before = (steps[-1],)
        steps[-1] = _last_flip(steps[-1], d)
        self.events.append(FlipEvent("last", len(steps) - 1, before, (steps[-1],)))


def transform(steps, target_dv, d=2, trace=None):
    """Rewrite ``steps`` into the walk with direction vector ``target_dv``.

    Canonical schedule: while the backward-step count is off, bubble the
    rightmost step of the orientation to be converted to the end with swap
    flips and apply a last-step flip there; then sort orientations into
    place left to right with swap flips. Any other schedule reaching the
    same direction vector yields the same walk (confluence), so the choice
    only pins down the intermediate trace.
    """
    steps = list(steps)
    n = len(steps)
    if len(target_dv) != n:
        raise LengthMismatch(f"direction vector {target_dv!r} for {n} steps")
    rec = trace if trace is not None else _Recorder()
    want_b = sum(1 for t in target_dv if t == "B")
    have_b = sum(1 for s in steps if s < 0)
    while have_b != want_b:
        convert_fwd = have_b < want_b
        pos = max(i for i, s in enumerate(steps) if (s > 0) == convert_fwd)
        for j in range(pos, n - 1):
            rec.swap(steps, j, d)
        rec.last(steps, d)
        have_b += 1 if convert_fwd else -1
    for i in range(n):
        want_fwd = target_dv[i] == "F"
        if (steps[i] > 0) != want_fwd:
            j = next(k for k in range(i + 1, n) if (steps[k] > 0) == want_fwd)
            for k in range(j - 1, i - 1, -1):
                rec.swap(steps, k, d)
    return tuple(steps)


def transform_with_trace(steps, target_dv, d=2):
    rec = _Recorder()
    out = transform(steps, target_dv, d, trace=rec)
    return out, rec.events


def transform_random(steps, target_dv, rng=None, seed=None, d=2):
    """Like transform, but with a randomized flip schedule (same result)."""
    if rng is None:
        rng = random.Random(seed)
    steps = list(steps)
    n = len(steps)
    if len(target_dv) != n:
        raise LengthMismatch(f"direction vector {target_dv!r} for {n} steps")
    rec = _Recorder()
    want_b = sum(1 for t in target_dv if t == "B")
    have_b = sum(1 for s in steps if s < 0)
    while have_b != want_b:
        convert_fwd = have_b < want_b
        # push some step of the orientation to convert to the end, one random
        # legal swap at a time, then flip it there
        while (steps[-1] > 0) != convert_fwd:
            candidates = [
                i
                for i in range(n - 1)
                if (steps[i] > 0) == convert_fwd and (steps[i + 1] > 0) != convert_fwd
            ]
            rec.swap(steps, rng.choice(candidates), d)
        rec.last(steps, d)
        have_b += 1 if convert_fwd else -1
    while direction_vector(steps) != target_dv:
        # move a random displaced backward step one slot toward its target
        bs = [i for i, s in enumerate(steps) if s < 0]
        ws = [i for i, t in enumerate(target_dv) if t == "B"]
        candidates = []
        for b, w in zip(bs, ws):
            if b > w and steps[b - 1] > 0:
                candidates.append(b - 1)
            elif b < w and steps[b + 1] > 0:
                candidates.append(b)
        rec.swap(steps, rng.choice(candidates), d)
    return tuple(steps)


def algorithm1(steps, d=2):
    """The explicit forward/backward involution.

    Pass i flips the current last step and bubbles it left to position i,
    so after n passes every orientation is reversed. Applying it twice gives
    back the input.
    """
    steps = list(steps)
    n = len(steps)
    if n and len({s > 0 for s in steps}) != 1:
        raise MixedInput("algorithm1 wants an all-forward or all-backward path")
    for i in range(n):
        steps[-1] = _last_flip(steps[-1], d)
        for j in range(n - 2, i - 1, -1):
            steps[j], steps[j + 1] = _swap_pair(steps[j], steps[j + 1], d)
    return tuple(steps)


# -- folded paths and the 9-tile picture (triangle only) --------------------

def fold(steps):
    """The walk followed by its reversed negation."""
    return tuple(steps) + tuple(-s for s in reversed(steps))


@dataclass(frozen=True)
class Tiling:
    """Unit-tile filling of the tilted square of side n.

    Vertices are the integer points (x, y) with |x| + |y| <= n and
    x + y = n (mod 2). Every north-east edge carries a forward step label,
    every south-east edge a backward one, and around each unit tile the two
    bottom labels are the swap-flip rewrite of the two top labels. The
    boundary condition is the folded walk laid from (-n, 0) to (n, 0).

    ``tiles`` maps a tile's left vertex to an id in 1..9, where the tile
    with top labels (s_j, -s_k) gets id 3 (j - 1) + k.
    """

    n: int
    edges: dict = field(hash=False)
    tiles: dict = field(hash=False)

    def top_pair(self, left):
        x, y = left
        return (self.edges[((x, y), (x + 1, y + 1))], self.edges[((x + 1, y + 1), (x + 2, y))])

    def bottom_pair(self, left):
        x, y = left
        return (self.edges[((x, y), (x + 1, y - 1))], self.edges[((x + 1, y - 1), (x + 2, y))])


def tile_id(top_forward, top_backward):
    return 3 * (top_forward - 1) + (-top_backward)


def _cells(n):
    for x in range(-n, n - 1):
        for y in range(-n + 1, n):
            if (x + y - n) % 2 == 0:
                a, t, r, b = (x, y), (x + 1, y + 1), (x + 2, y), (x + 1, y - 1)
                if all(abs(u) + abs(v) <= n for u, v in (a, t, r, b)):
                    yield a, t, r, b


def tile(folded, d=2):
    """Fill the tilted square around a folded walk; existence is automatic.

    Wherever two consecutive labels forming a peak (forward then backward)
    are known, the tile below them is forced; a valley forces the tile
    above. Iterating resolves every cell, and no choice ever arises.
    """
    if d != 2:
        raise ValueError("the 9-tile picture is specific to the triangle")
    if len(folded) % 2:
        raise ValueError("fold the walk first")
    n = len(folded) // 2
    edges = {}
    x, y = -n, 0
    for s in folded:
        nxt = (x + 1, y + 1) if s > 0 else (x + 1, y - 1)
        edges[((x, y), nxt)] = s
        (x, y) = nxt
    assert (x, y) == (n, 0), "folded walk must end at (n, 0)"
    cells = list(_cells(n))
    done = set()
    while len(done) < len(cells):
        progress = False
        for cell in cells:
            a, t, r, b = cell
            if a in done:
                continue
            top_known = ((a, t) in edges) and ((t, r) in edges)
            bot_known = ((a, b) in edges) and ((b, r) in edges)
            if top_known and not bot_known:
                lo = _swap_pair(edges[(a, t)], edges[(t, r)], 2)
                edges[(a, b)], edges[(b, r)] = lo
            elif bot_known and not top_known:
                hi = _swap_pair(edges[(a, b)], edges[(b, r)], 2)
                edges[(a, t)], edges[(t, r)] = hi
            elif not (top_known and bot_known):
                continue
            done.add(a)
            progress = True
        assert progress, "tiling propagation stalled"
    tiles = {}
    for a, t, r, b in cells:
        tiles[a] = tile_id(edges[(a, t)], edges[(t, r)])
    return Tiling(n, edges, tiles)


def read_path(tiling, dv):
    """Labels along the walk from (-n, 0) whose k-th step is NE on F, SE on B."""
    n = tiling.n
    if len(dv) != n:
        raise LengthMismatch(f"direction vector {dv!r} for a square of side {n}")
    x, y = -n, 0
    out = []
    for ch in dv:
        nxt = (x + 1, y + 1) if ch == "F" else (x + 1, y - 1)
        out.append(tiling.edges[((x, y), nxt)])
        (x, y) = nxt
    return tuple(out)
