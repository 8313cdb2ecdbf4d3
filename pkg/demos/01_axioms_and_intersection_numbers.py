"""Build schemes from graphs and read off their intersection numbers.

A graph gives a scheme through its distance partition exactly when it is
distance-regular. The Petersen graph passes; the path on three vertices does
not, and the validator names the offending triple and two witness pairs.
"""
import itertools

import numpy as np

from assocscheme import from_distance_partition, validate_axioms
from assocscheme.errors import NotAScheme
from assocscheme.scheme_core import edges_to_adjacency

# %% Petersen graph: 2-subsets of {0..4}, adjacent when disjoint
subsets = list(itertools.combinations(range(5), 2))
edges = [(a, b) for a, b in itertools.combinations(range(10), 2)
         if not set(subsets[a]) & set(subsets[b])]
table = from_distance_partition(edges_to_adjacency(10, edges))
tensor = validate_axioms(table)
print("n, d       :", table.n, table.d)
print("valencies  :", tensor.valency.tolist())
print("p_1i^j     :")
print(tensor.p[1])

# %% A_1 A_1 expands in the adjacency basis with integer coefficients
A = table.adjacency_stack()
lhs = A[1] @ A[1]
rhs = np.einsum("k,kab->ab", tensor.p[1, 1], A)
print("A1^2 = sum p_11^k A_k :", np.array_equal(lhs, rhs))

# %% The path P_3 is not distance-regular
path = from_distance_partition(edges_to_adjacency(3, [(0, 1), (1, 2)]))
try:
    validate_axioms(path)
except NotAScheme as exc:
    print("P_3 rejected:", exc)
