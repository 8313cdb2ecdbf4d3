"""Primitive idempotents, eigenmatrices and Krein parameters.

The idempotents come from one generic element of the Bose-Mesner algebra.
Both eigenmatrices are read off independently, so ``P Q = n I`` is a real
check rather than a definition.
"""
import numpy as np

from assocscheme import by_name, krein_parameters, primitive_idempotents, validate_axioms

np.set_printoptions(precision=4, suppress=True)

for name in ("cube", "petersen", "icosahedron"):
    entry = by_name(name)
    tensor = validate_axioms(entry.table)
    basis = primitive_idempotents(entry.table, tensor)
    krein = krein_parameters(basis)
    print(f"== {name}  (n={basis.n}, d={basis.d}, seed {basis.seed})")
    print("multiplicities:", basis.mult.round(6))
    print("P =\n", basis.P)
    print("Q =\n", basis.Q)
    print("max |PQ - nI| =", np.abs(basis.P @ basis.Q - basis.n * np.eye(basis.d + 1)).max())
    print("smallest Krein parameter =", krein.min_entry)
    print("(q_{1,i}^j) =\n", krein.q[1])
    print()
