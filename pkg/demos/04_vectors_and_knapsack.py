# Vector targets, either flattened to base-C digits or summed over several variables,
# and 0-1 knapsack via the table of attainable (weight, value) pairs.
# Run: python demos/04_vectors_and_knapsack.py

import numpy as np

from unarysum import KnapsackInstance, VectorInstance
from unarysum.oracle import oracle_count_vector, oracle_knapsack
from unarysum.vector import (knapsack_optimize, pair_feasibility, scalarize,
                             vector_count_mod_p, vector_decide)

V = VectorInstance([(1, 0), (0, 1), (1, 1), (2, -1)], (2, 1))
print("scalarized:", scalarize(V))
print("decide:", vector_decide(V), vector_decide(V, "multivariate"))
print("count:", oracle_count_vector(V), " mod 17:", vector_count_mod_p(V, 17).value)

# %% The pair table: which (total weight, total value) pairs some subset reaches.
K = KnapsackInstance([2, 3, 4, 1], [3, 4, 5, 1], 6)
table = pair_feasibility(K)
rows = np.flatnonzero(table.feasible.any(axis=1))
for a in rows:
    reach = table.values[table.feasible[a]]
    print(f"weight {table.weights[a]:3d}: values {reach.tolist()}")

# %% The optimum under weight <= B, with its witness.
print("optimum:", knapsack_optimize(K), " brute force:", oracle_knapsack(K))
