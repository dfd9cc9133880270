"""Walks in simplicial lattices, bounded Motzkin paths, and bijections.

The triangle of side L is walked with the six steps s_1, s_2, s_3 and their
reversals; forward walks from a corner are equinumerous with Motzkin paths
of amplitude at most L, and this package carries several explicit bijections
realizing that: a recursive one, a family of linear-time transducer ones
driven by scaffoldings, and the canonical size-independent scaffolding. The
three-dimensional pyramid gets the same treatment against walks in a
waffle-shaped plane domain, together with a closed-form generating function.
"""

__version__ = "0.1.0"

from . import errors, flips, lattice, motzkin, omega, profiles, pyramid3d, scaffold2d
from .lattice import (
    count_bicolored_pairs,
    count_generic,
    count_paths,
    enumerate_paths,
    origin,
    validate_path,
)
from .motzkin import (
    MotzkinWord,
    amplitude,
    count_meanders,
    count_paths_by_amplitude,
    enumerate_meanders,
    uniform_sample,
)
from .scaffold2d import (
    RandomScaffolding,
    TrapeziumScaffolding,
    sample_forward_path,
    validate_scaffolding,
)
from .omega import forward_to_motzkin_exp, motzkin_to_forward_exp
from .pyramid3d import (
    count_pyramid_paths,
    count_waffle_walks,
    pyramid_gf_coefficients,
    reflection_count,
    waffle_to_pyramid,
)
