"""omega-primality in numerical, block, congruence and Leamer monoids."""

from .acm import (ArithmeticCongruenceMonoid, acm_contains, acm_factorizations,
                  acm_is_irreducible, acm_new, acm_omega, hilbert_monoid, is_acm_bullet)
from .asymptotics import (OmegaSeries, QuasilinearModel, asymptotic_ratio, fit_quasilinear,
                          minimal_period, omega_series, period_is_exact, ratio_error_bound)
from .blocks import (FiniteAbelianGroup, ZeroSumSequence, block_divides, block_omega,
                     is_zero_sum, minimal_zero_sum_sequences)
from .closed_forms import (FORBIDDEN_PATTERNS, OrderingCensus, ResidueTable, build_residue_table,
                           classify_triple, generator_ordering_scan, interval_generator_omegas,
                           omega_two_gen_from_factorization, omega_two_gen_residue, ordering_pattern,
                           residue_coefficients)
from .errors import *  # noqa: F401,F403
from .leamer import (LeamerMonoid, irreducible_column_bound, leamer_contains, leamer_divides,
                     leamer_irreducibles, leamer_new, leamer_omega, leamer_points, points_csv)
from .numerical import (NumericalMonoid, contains, divides, factorizations, frobenius_number,
                        new_numerical_monoid)
from .omega import (BulletSet, OmegaResult, bullet_bounds, bullets, bullets_unpruned, is_bullet,
                    omega, omega_oracle, omega_range, omega_value)

__version__ = "0.1.0"
