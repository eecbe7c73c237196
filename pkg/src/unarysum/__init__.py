"""Small-space counting, deciding and sampling for unary subset sum.

The count of subsets of m_1..m_n summing to B is read off character sums
over multiplicative groups whose order exceeds the capacity
C = |B| + sum|m_i| + 1.
"""

from .charsum import (charsum_mod_p, charsum_mu, charsum_mu_r, charsum_multivariate,
                      charsum_over_fq, power_sum)
from .counting import (ApproxCount, FixedFraction, ModulusBasket, PrimePower,
                       approx_count, approx_fraction, count_exact, count_mod_prime,
                       count_mod_prime_power, find_bracketing_modulus)
from .decider import SpaceMeter, SpaceReport, decide
from .model import (Instance, KnapsackInstance, KnapsackResult, VectorInstance,
                    capacity, dumps, max_capacity, parse_instance, scan,
                    vector_capacity)
from .numtheory import Residue
from .sampler import sample_solution, sample_solutions
from .vector import knapsack_optimize, scalarize, vector_count_mod_p, vector_decide

__version__ = "0.1.0"
