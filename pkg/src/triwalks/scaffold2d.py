"""Scaffoldings: per-point bijection tables turning walks into Motzkin paths.

A scaffolding attaches to every triangle point z a bijection delta_z from

    A(z) = {(cell, step) : cell in C(z), step usable at the cell's height}

onto the disjoint union of the cell sets of the three forward neighbours of
z, each target tagged with the forward step leading to it, such that the
cell height changes by +1/0/-1 under an up/flat/down step. Running the
table along a Motzkin path (cell by cell, starting from the unique height-0
cell of the origin) emits one forward lattice step per letter, and running
it backwards inverts the map exactly. Both directions make one table lookup
per letter; ``lookup_count`` exposes that for the linear-time contract.

Two constructions are provided. ``RandomScaffolding`` materializes tables by
matching, per height class, the incoming (cell, step) pairs with the target
cells, uniformly at random but reproducibly by seed. ``TrapeziumScaffolding``
is the canonical rule-based one: its twelve evaluation cases read only the
first two coordinates of z and the cell, never the side length, so the same
rules drive walks in triangles of every size at once.
"""

from __future__ import annotations

import json
import random

from .errors import AmplitudeExceeded, EmptySet, NotAllowed, OutOfLattice
from .lattice import origin, step_vector
from .motzkin import (
    MotzkinWord,
    allowed_steps,
    meander_count_table,
    uniform_sample,
)
from .profiles import CheckReport, cell_representation, cells_at_height

_HEIGHT_MOVE = {"U": 1, "F": 0, "D": -1}


def forward_neighbours(z):
    """The three candidate targets z + s_j; entries outside get no cells."""
    return {j: tuple(a + b for a, b in zip(z, step_vector(j, 2))) for j in (1, 2, 3)}


class Scaffolding:
    """Shared transducer machinery; subclasses provide delta and its inverse."""

    L: int

    def __init__(self):
        self.lookup_count = 0

    def delta(self, z, cell, step):
        raise NotImplementedError

    def delta_inv(self, z, j, cell):
        raise NotImplementedError

    def motzkin_to_triangular(self, word):
        """One forward lattice step per Motzkin letter, from the origin."""
        if isinstance(word, str):
            word = MotzkinWord(word)
        if not word.is_path:
            raise AmplitudeExceeded("input must start at height 0")
        z = origin(self.L)
        cell = (0, 0)
        steps = []
        for ch in word.steps:
            try:
                j, cell = self.delta(z, cell, ch)
            except NotAllowed:
                raise AmplitudeExceeded(
                    f"word does not fit in a triangle of side {self.L}"
                ) from None
            steps.append(j)
            z = tuple(a + b for a, b in zip(z, step_vector(j, 2)))
        return tuple(steps)

    def triangular_to_motzkin(self, steps):
        """Inverse transducer: consume the walk from its far end."""
        z = origin(self.L)
        for s in steps:
            if s <= 0:
                raise OutOfLattice("the transducer maps forward walks only")
            z = tuple(a + b for a, b in zip(z, step_vector(s, 2)))
            if min(z) < 0:
                raise OutOfLattice("walk leaves the triangle")
        cell = (0, 0)
        letters = []
        for s in reversed(steps):
            z = tuple(a - b for a, b in zip(z, step_vector(s, 2)))
            cell, ch = self.delta_inv(z, s, cell)
            letters.append(ch)
        return MotzkinWord("".join(reversed(letters)))

    # -- bicolored extensions ------------------------------------------------

    def delta_bar(self, z, cell, step):
        """Reverse table: evaluate at the mirror point, emit a backward step.

        Mirroring swaps the first two coordinates; the cell set is symmetric
        under that swap, so the cell carries over unchanged.
        """
        x1, x2, x3 = z
        j, cell2 = self.delta((x2, x1, x3), cell, step)
        return -(4 - j), cell2

    def bicolored_to_generic(self, word, method="two"):
        """Send a bicolored Motzkin word to a walk whose direction vector
        matches the coloring (black reads F, white reads B).

        Method one maps the uncolored word forward and then transports the
        result to the color-derived direction vector. Method two runs the
        table directly, using the reverse table on white letters; it stays
        linear in the length.
        """
        if isinstance(word, str):
            word = MotzkinWord.from_word(word)
        dv = word.direction_vector()
        if method == "one":
            from .flips import transform

            fwd = self.motzkin_to_triangular(MotzkinWord(word.steps))
            return transform(fwd, dv)
        if method != "two":
            raise ValueError(f"unknown method {method!r}")
        colors = word.colors or "b" * len(word.steps)
        z = origin(self.L)
        cell = (0, 0)
        out = []
        for ch, col in zip(word.steps, colors):
            try:
                if col == "b":
                    s, cell = self.delta(z, cell, ch)
                else:
                    s, cell = self.delta_bar(z, cell, ch)
            except NotAllowed:
                raise AmplitudeExceeded(
                    f"word does not fit in a triangle of side {self.L}"
                ) from None
            out.append(s)
            z = tuple(a + b for a, b in zip(z, step_vector(s, 2)))
            if min(z) < 0:
                raise AmplitudeExceeded(f"left the triangle of side {self.L}")
        return tuple(out)


class RandomScaffolding(Scaffolding):
    """Materialized tables chosen uniformly at random per height class."""

    def __init__(self, L, seed=None, tables=None):
        super().__init__()
        self.L = L
        self.seed = seed
        if tables is not None:
            self.tables = tables
        else:
            rng = random.Random(seed)
            self.tables = {z: self._build_point(z, rng) for z in _points(L)}
        self.inverse = {
            z: {v: k for k, v in tab.items()} for z, tab in self.tables.items()
        }

    def _build_point(self, z, rng):
        nbs = forward_neighbours(z)
        table = {}
        H = self.L // 2
        for h in range(H + 1):
            sources = []
            for ch in ("U", "F", "D"):
                f = h - _HEIGHT_MOVE[ch]
                if 0 <= f and ch in allowed_steps(f, self.L):
                    sources.extend((c, ch) for c in cells_at_height(z, f))
            targets = []
            for j in (1, 2, 3):
                w = nbs[j]
                if min(w) >= 0:
                    targets.extend((j, c) for c in cells_at_height(w, h))
            if len(sources) != len(targets):
                raise AssertionError(
                    f"height class size mismatch at z={z}, h={h}: "
                    f"{len(sources)} vs {len(targets)}"
                )
            rng.shuffle(targets)
            table.update(zip(sources, targets))
        return table

    def delta(self, z, cell, step):
        self.lookup_count += 1
        try:
            return self.tables[z][(cell, step)]
        except KeyError:
            raise NotAllowed(f"({cell}, {step}) not in A({z})") from None

    def delta_inv(self, z, j, cell):
        self.lookup_count += 1
        try:
            return self.inverse[z][(j, cell)]
        except KeyError:
            raise NotAllowed(f"({j}, {cell}) has no preimage at {z}") from None

    # -- serialization -------------------------------------------------------

    def to_json(self):
        tables = {}
        for z, tab in self.tables.items():
            recs = []
            for (cell, ch), (j, cell2) in sorted(tab.items()):
                recs.append(
                    {
                        "cell": list(cell),
                        "step": ch,
                        "out_step": f"s{j}",
                        "out_cell": list(cell2),
                    }
                )
            tables[",".join(map(str, z))] = recs
        return {"L": self.L, "seed": self.seed, "tables": tables}

    @classmethod
    def from_json(cls, doc):
        tables = {}
        for key, recs in doc["tables"].items():
            z = tuple(int(t) for t in key.split(","))
            tab = {}
            for r in recs:
                tab[(tuple(r["cell"]), r["step"])] = (
                    int(r["out_step"][1:]),
                    tuple(r["out_cell"]),
                )
            tables[z] = tab
        return cls(doc["L"], seed=doc.get("seed"), tables=tables)

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))


def _points(L):
    return [
        (x1, x2, L - x1 - x2) for x1 in range(L + 1) for x2 in range(L + 1 - x1)
    ]


def build_random_scaffolding(L, seed):
    return RandomScaffolding(L, seed)


# -- the canonical rule-based scaffolding ------------------------------------

def trapezium_rule(x1, x2, f, l, step):
    """Evaluate the canonical table at one (cell, step) pair.

    Returns (forward step index, new cell, case id). The twelve cases split
    by the step letter and by where the cell sits inside its trapezium:
    t = f + l measures the distance to the top anti-diagonal,
    l against x1, x2 detects the side walls, l = f the lower diagonal.

    Case images, writing (f', l') for the output cell:
      into C(z + s1): 2 and 3 cover f' + l' = x1 + x2 + 1 (3 is its l' = 0
      tip), 9 covers f' + l' = x1 + x2 with l' <= x1, 11 the column
      l' = x1 + 1 below that anti-diagonal, 8 the remaining bulk;
      into C(z + s2): 1 is the single cell (x1, x2), 4 the anti-diagonal
      l' = x1 + x2 - f' with l' < x2, 5 the column l' = x2 + 1, 7 the
      diagonal l' = f' < x2, 10 the bulk plus the corner l' = f' = x2;
      into C(z + s3): 12 is the diagonal l' = f', 6 everything below it.

    Only x1, x2, f, l and the letter are ever read, so one rule set serves
    every triangle size; that independence is what makes the image of a
    Motzkin path land in the smallest triangle its amplitude allows.
    """
    a, b, t = x1, x2, f + l
    if step == "U":
        if t == a + b:
            return (1, (f + 1, l), 2 if l >= 1 else 3)
        if t == a + b - 1:
            if l == b:
                return (2, (f + 1, l), 1)
            if l == a:
                return (1, (f + 1, l + 1), 2)
            return (2, (f + 1, l), 4)
        if l == b:
            return (2, (f + 1, l + 1), 5)
        return (3, (f + 1, l), 6)
    if step == "F":
        if t == a + b:
            return (1, (f, l), 9)
        if l == a and l < f:
            return (1, (f, l + 1), 11)
        if l == f:
            if f == a:
                return (3, (f, l), 12)
            return (2, (f, l), 7 if f <= b - 1 else 10)
        return (2, (f, l), 10)
    if step == "D":
        if l == f:
            return (3, (f - 1, l - 1), 12)
        return (1, (f - 1, l), 8)
    raise NotAllowed(f"unknown step {step!r}")


class TrapeziumScaffolding(Scaffolding):
    """The rule-based scaffolding; no tables, nothing precomputed."""

    def __init__(self, L):
        super().__init__()
        self.L = L

    def _check_domain(self, z, cell, step):
        f, l = cell
        x1, x2, x3 = z
        if not (max(0, f - x3) <= l <= min(f, x1, x2, x1 + x2 - f)):
            raise NotAllowed(f"cell {cell} not in C({z})")
        if step not in allowed_steps(f, self.L):
            raise NotAllowed(f"step {step} not allowed at height {f} for L={self.L}")

    def delta(self, z, cell, step):
        self._check_domain(z, cell, step)
        self.lookup_count += 1
        j, cell2, _case = trapezium_rule(z[0], z[1], cell[0], cell[1], step)
        return j, cell2

    def case(self, z, cell, step):
        self._check_domain(z, cell, step)
        return trapezium_rule(z[0], z[1], cell[0], cell[1], step)[2]

    def delta_inv(self, z, j, cell):
        """Invert by trying the handful of affine preimage candidates.

        Every rule shifts the cell index by at most one, and the height
        move fixes the letter's source row, so nine candidates suffice;
        the certified bijectivity of the forward rules guarantees exactly
        one of them maps back to the requested value.
        """
        self.lookup_count += 1
        f2, l2 = cell
        for ch in ("U", "F", "D"):
            f = f2 - _HEIGHT_MOVE[ch]
            for l in (l2, l2 - 1, l2 + 1):
                try:
                    self._check_domain(z, (f, l), ch)
                except NotAllowed:
                    continue
                jj, c2, _ = trapezium_rule(z[0], z[1], f, l, ch)
                if jj == j and c2 == cell:
                    return (f, l), ch
        raise NotAllowed(f"({j}, {cell}) has no preimage at {z}")


def trapezium_scaffolding(L):
    return TrapeziumScaffolding(L)


def trapezium_delta(z, cell, step, L=None):
    """Convenience wrapper returning (forward step, cell) for one lookup."""
    scaf = TrapeziumScaffolding(sum(z) if L is None else L)
    return scaf.delta(z, cell, step)


def validate_scaffolding(scaf):
    """Certify a scaffolding pointwise: domain, bijectivity, height rule."""
    rep = CheckReport(f"scaffolding valid, L={scaf.L}")
    for z in _points(scaf.L):
        targets = set()
        nbs = forward_neighbours(z)
        for j in (1, 2, 3):
            if min(nbs[j]) >= 0:
                targets.update((j, c) for c in cell_representation(nbs[j]))
        seen = {}
        for cell in cell_representation(z):
            for ch in allowed_steps(cell[0], scaf.L):
                rep.checked += 1
                try:
                    j, cell2 = scaf.delta(z, cell, ch)
                except NotAllowed:
                    rep.violations.append((z, cell, ch, "domain hole"))
                    continue
                if cell2[0] != cell[0] + _HEIGHT_MOVE[ch]:
                    rep.violations.append((z, cell, ch, "height rule"))
                if (j, cell2) not in targets:
                    rep.violations.append((z, cell, ch, f"target {(j, cell2)} missing"))
                elif (j, cell2) in seen:
                    rep.violations.append((z, cell, ch, f"collides with {seen[(j, cell2)]}"))
                else:
                    seen[(j, cell2)] = (cell, ch)
        if len(seen) != len(targets):
            missing = targets - set(seen)
            rep.violations.append((z, "unreached targets", sorted(missing)[:3]))
    return rep


def sample_forward_path(L, n, seed=None, rng=None):
    """Uniform forward walk from the origin, without fixing any scaffolding.

    Draw a uniform bounded Motzkin path, then run the transducer while
    choosing, at each letter, uniformly among all neighbour cells at the
    required height. Averaging over those choices makes every forward walk
    exactly equally likely.
    """
    if rng is None:
        rng = random.Random(seed)
    if meander_count_table(L, n)[n][0] == 0:
        raise EmptySet(f"no forward walks of length {n} in a triangle of side {L}")
    word = uniform_sample(n, L, rng=rng)
    z = origin(L)
    cell = (0, 0)
    steps = []
    for ch in word.steps:
        h2 = cell[0] + _HEIGHT_MOVE[ch]
        options = []
        for j, w in forward_neighbours(z).items():
            if min(w) >= 0:
                options.extend((j, c) for c in cells_at_height(w, h2))
        j, cell = options[rng.randrange(len(options))]
        steps.append(j)
        z = tuple(a + b for a, b in zip(z, step_vector(j, 2)))
    return tuple(steps)
