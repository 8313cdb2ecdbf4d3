"""Three independent decisions of the Q-polynomial property.

For each candidate E_e:
  * ratio route: products of dual-eigenvalue differences vs. -p_i(l)
  * filtration route: which idempotents first appear in E_e^{o h}
  * tridiagonal route: support pattern of the Krein parameters
The last idempotent l of the ordering is the same in all three.
"""
from assocscheme import by_name, krein_parameters, primitive_idempotents, validate_axioms
from assocscheme.polyprops import compare_q_routes

for name in ("petersen", "cube", "icosahedron", "hamming:3,3"):
    entry = by_name(name)
    basis = primitive_idempotents(entry.table, validate_axioms(entry.table))
    krein = krein_parameters(basis)
    print(f"== {name}")
    for e in range(1, basis.d + 1):
        c = compare_q_routes(basis, krein, e)
        if c.ratio is None:
            print(f"  e={e}: {c.precondition}")
            continue
        K = ", ".join(f"{k:.4f}" for k in c.ratio.K)
        print(f"  e={e}: verdicts {c.verdicts}  K=({K})  l={c.ratio.l_witness}  "
              f"N={c.filtration.N}")
