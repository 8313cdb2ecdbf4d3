"""Integrality of the ratios and the shape of alternative Q-orderings.

The icosahedron has two Q-orderings with irrational ratios; its second
ordering is an admissible rearrangement of the first. Petersen satisfies the
multiplicity hypothesis, so its ratios must be integers.
"""
from assocscheme import by_name, krein_parameters, primitive_idempotents, validate_axioms
from assocscheme.polyprops import (
    integrality_report,
    qpoly_criterion_main,
    suzuki_consistency,
    tridiagonal_orderings,
)

for name in ("petersen", "hamming:4,2", "pentagon", "icosahedron"):
    entry = by_name(name)
    basis = primitive_idempotents(entry.table, validate_axioms(entry.table))
    witnesses = tridiagonal_orderings(krein_parameters(basis))
    print(f"== {name}: Q-orderings {[w.order for w in witnesses]}")
    for w in witnesses:
        K = qpoly_criterion_main(basis, w.e).K
        rep = integrality_report(basis, w, K)
        print(f"  {w.order}: hypothesis={rep.hypothesis} K={[round(k, 4) for k in K]} "
              f"integral={rep.integral_flags}")
    rep = suzuki_consistency(witnesses, basis.d, basis.mult[witnesses[0].e])
    print("  orderings:", rep.status, rep.note, [c["patterns"] for c in rep.comparisons])
