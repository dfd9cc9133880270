"""Motzkin paths and meanders with the amplitude statistic.

A word over U (up), F (flat), D (down) is a meander when every prefix stays
at height >= 0 and the final height is 0; a Motzkin path additionally starts
at height 0. The amplitude of a path with maximum height H is 2H + 1 when
some flat step occurs at height H, else 2H.

Bounding the amplitude by L means: heights never exceed floor(L/2), and when
L is even no flat step happens at the top height. Bicolored words carry one
color per step, written as case: uppercase for black, lowercase for white.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CapExceeded, EmptySet, HeightOutOfRange, NotAPath

UP, FLAT, DOWN = "U", "F", "D"


@dataclass(frozen=True)
class MotzkinWord:
    """A meander: steps (uppercase), start height, optional per-step colors."""

    steps: str
    start_height: int = 0
    colors: str | None = None  # 'b'/'w' per step

    def __post_init__(self):
        if set(self.steps) - set("UFD"):
            raise NotAPath(f"bad letters in {self.steps!r}")
        if self.colors is not None and (
            len(self.colors) != len(self.steps) or set(self.colors) - set("bw")
        ):
            raise NotAPath(f"bad colors {self.colors!r}")
        if self.start_height < 0:
            raise NotAPath("negative start height")
        h = self.start_height
        for ch in self.steps:
            h += {"U": 1, "F": 0, "D": -1}[ch]
            if h < 0:
                raise NotAPath(f"{self.steps!r} dips below height 0")
        if h != 0:
            raise NotAPath(f"{self.steps!r} ends at height {h}, not 0")

    def __len__(self):
        return len(self.steps)

    def heights(self):
        """Heights after 0, 1, ..., n steps."""
        hs = [self.start_height]
        for ch in self.steps:
            hs.append(hs[-1] + {"U": 1, "F": 0, "D": -1}[ch])
        return hs

    @property
    def is_path(self):
        return self.start_height == 0

    def to_word(self):
        """Serialized form: lowercase marks white steps."""
        if self.colors is None:
            return self.steps
        return "".join(
            ch.lower() if col == "w" else ch for ch, col in zip(self.steps, self.colors)
        )

    @classmethod
    def from_word(cls, word, start_height=0):
        """Parse a possibly mixed-case word; case encodes the coloring."""
        steps = word.upper()
        colors = None
        if word != steps:
            colors = "".join("w" if ch.islower() else "b" for ch in word)
        return cls(steps, start_height, colors)

    def direction_vector(self):
        """Black steps read F, white steps read B (all black when uncolored)."""
        if self.colors is None:
            return "F" * len(self.steps)
        return "".join("F" if c == "b" else "B" for c in self.colors)


def amplitude(word):
    """2H+1 if a flat step occurs at the maximum height H, else 2H."""
    if isinstance(word, str):
        word = MotzkinWord(word)
    if not word.is_path:
        raise NotAPath("amplitude is defined for words starting at height 0")
    hs = word.heights()
    top = max(hs)
    flat_at_top = any(
        ch == FLAT and h == top for ch, h in zip(word.steps, hs[:-1])
    )
    return 2 * top + 1 if flat_at_top else 2 * top


def allowed_steps(height, L):
    """Steps usable at ``height`` by a meander of amplitude at most L."""
    H = L // 2
    out = []
    if height < H:
        out.append(UP)
    if height < H or L % 2 == 1:
        out.append(FLAT)
    if height > 0:
        out.append(DOWN)
    return tuple(out)


def fits_amplitude(word, L):
    """Whether a meander respects the amplitude-L height constraints."""
    H = L // 2
    hs = word.heights()
    if max(hs) > H:
        return False
    if L % 2 == 0 and any(
        ch == FLAT and h == H for ch, h in zip(word.steps, hs[:-1])
    ):
        return False
    return True


def meander_count_table(L, n):
    """table[m][i] = number of meanders of length m from height i, amplitude <= L.

    Built from the first-step recurrence; row m is derived from row m - 1.
    """
    if n < 0 or L < 0:
        raise ValueError(f"need n, L >= 0, got n={n}, L={L}")
    H = L // 2
    table = [[0] * (H + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for m in range(1, n + 1):
        prev = table[m - 1]
        for i in range(H + 1):
            tot = 0
            if i < H:
                tot += prev[i + 1]
            if i < H or L % 2 == 1:
                tot += prev[i]
            if i > 0:
                tot += prev[i - 1]
            table[m][i] = tot
    return table


def count_meanders(L, n, i):
    """Number of length-n meanders from height i with amplitude <= L."""
    H = L // 2
    if not 0 <= i <= H:
        raise HeightOutOfRange(f"start height {i} not in 0..{H} for L={L}")
    return meander_count_table(L, n)[n][i]


def count_paths_by_amplitude(n, L):
    """Motzkin paths of length n with amplitude at most L."""
    return meander_count_table(L, n)[n][0]


def enumerate_meanders(n, L, i=0, cap=1_000_000):
    """All meanders, lexicographic with U < F < D (enumeration oracle)."""
    H = L // 2
    if not 0 <= i <= H:
        raise HeightOutOfRange(f"start height {i} not in 0..{H} for L={L}")
    out = []

    def rec(h, acc):
        if len(acc) == n:
            if h == 0:
                if len(out) >= cap:
                    raise CapExceeded(f"more than {cap} meanders")
                out.append(MotzkinWord("".join(acc), i))
            return
        if h > n - len(acc):
            return  # cannot come back down to 0 in time
        for ch in allowed_steps(h, L):
            acc.append(ch)
            rec(h + {"U": 1, "F": 0, "D": -1}[ch], acc)
            acc.pop()

    rec(i, [])
    return out


def uniform_sample(n, L, seed=None, rng=None, start_height=0):
    """Draw one meander uniformly at random, by suffix-count weighting.

    Exact: at every position the next letter is chosen with probability
    proportional to the number of completions, using the big-integer count
    table, so no rejection is ever needed.
    """
    if rng is None:
        rng = random.Random(seed)
    table = meander_count_table(L, n)
    if table[n][start_height] == 0:
        raise EmptySet(f"no meanders of length {n} from height {start_height}, L={L}")
    h = start_height
    letters = []
    for m in range(n, 0, -1):
        weights = []
        for ch in allowed_steps(h, L):
            h2 = h + {"U": 1, "F": 0, "D": -1}[ch]
            weights.append((ch, h2, table[m - 1][h2]))
        pick = rng.randrange(sum(w for _, _, w in weights))
        for ch, h2, w in weights:
            if pick < w:
                letters.append(ch)
                h = h2
                break
            pick -= w
    return MotzkinWord("".join(letters), start_height)
