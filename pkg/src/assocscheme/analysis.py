"""Full analysis pipeline and report rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import AmbiguousWitness, ClassTooSmall, NotDistinct
from .polyprops import (
    compare_p_routes,
    compare_q_routes,
    integrality_report,
    suzuki_consistency,
    tridiagonal_orderings,
)
from .scheme_core import RelationTable, validate_axioms
from .spectral import (
    DEFAULT_SEED,
    DEFAULT_TOL,
    dual_eigenvalue_row,
    first_pair_within,
    is_integral,
    krein_parameters,
    primitive_idempotents,
)

SCHEMA = "assocscheme.report/1"

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3


@dataclass(frozen=True)
class AnalysisOptions:
    tol: float = DEFAULT_TOL
    seed: int = DEFAULT_SEED
    e: int | str = "all"
    digits: int = 6


def _r(x, digits):
    """Round for display; ``+ 0.0`` turns ``-0.0`` into ``0.0``."""
    if isinstance(x, (list, tuple, np.ndarray)):
        return [_r(v, digits) for v in x]
    return round(float(x), digits) + 0.0


def _flags(x):
    return np.asarray(is_integral(x)).tolist()


@dataclass
class AnalysisReport:
    data: dict
    discrepancies: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_DISCREPANCY if self.discrepancies else EXIT_OK

    def to_machine(self) -> str:
        return json.dumps(self.data, sort_keys=True, separators=(",", ":"))

    def to_text(self) -> str:
        return render_text(self.data)


def analyze(table: RelationTable, options: AnalysisOptions | None = None, name: str = "") -> AnalysisReport:
    """Run every detection route and cross-check them.

    Raises
    ------
    ClassTooSmall
        ``d < 2``.
    NotDistinct
        A single ``e`` was requested and its dual eigenvalue row repeats.
    """
    opt = options or AnalysisOptions()
    dig = opt.digits
    tensor = validate_axioms(table)
    d = table.d
    if d < 2:
        raise ClassTooSmall("class d >= 2 required")
    basis = primitive_idempotents(table, tensor, opt.tol, opt.seed)
    krein = krein_parameters(basis)
    if opt.e == "all":
        es = list(range(1, d + 1))
    else:
        e = int(opt.e)
        if not 1 <= e <= d:
            raise ValueError(f"e must lie in 1..{d}, got {e}")
        row, _ = dual_eigenvalue_row(basis, e, opt.tol)
        pair = first_pair_within(row, opt.tol)
        if pair is not None:
            raise NotDistinct(row, pair, opt.tol)
        es = [e]
    problems = []

    q_witnesses = tridiagonal_orderings(krein, opt.tol)
    p_witnesses = tridiagonal_orderings(tensor, opt.tol)
    q_blocks = []
    for e in es:
        try:
            cmp = compare_q_routes(basis, krein, e, opt.tol)
        except AmbiguousWitness as exc:
            problems.append(f"Q e={e}: {exc}")
            q_blocks.append({"e": e, "error": str(exc)})
            continue
        f = cmp.filtration
        block = {
            "e": e,
            "theta_star": _r(basis.Q[:, e], dig),
            "precondition": cmp.precondition,
            "filtration": {
                "N": [list(s) for s in f.N],
                "leftover": list(f.leftover),
                "verdict": f.is_qpoly,
                "ordering": list(f.ordering) if f.ordering else None,
            },
            "tridiagonal": list(cmp.witness.order) if cmp.witness else None,
            "agree": cmp.agree,
            "l_agree": cmp.l_agree,
        }
        if cmp.ratio is not None:
            block["ratio"] = {
                "K": _r(cmp.ratio.K, dig),
                "K_integral": list(cmp.ratio.integral_flags),
                "l": cmp.ratio.l_witness,
                "verdict": cmp.ratio.is_qpoly,
            }
        if cmp.ratio is not None and cmp.witness is not None and cmp.ratio.is_qpoly:
            rep = integrality_report(basis, cmp.witness, cmp.ratio.K)
            block["integrality"] = {
                "hypothesis": rep.hypothesis,
                "multiplicities": _r(rep.multiplicities, dig),
                "odd_t": list(rep.odd_t),
                "K_integral": list(rep.integral_flags),
                "contradiction": rep.contradiction,
            }
            if rep.contradiction:
                problems.append(f"Q e={e}: non-integral K under the integrality hypothesis")
        if not cmp.agree:
            problems.append(f"Q e={e}: routes disagree {cmp.verdicts}")
        elif not cmp.l_agree:
            problems.append(f"Q e={e}: witness indices disagree")
        if not (f.collapse_ok() and f.singletons_ok()):
            problems.append(f"Q e={e}: filtration breaks the collapse property")
        q_blocks.append(block)

    m1 = float(basis.mult[q_witnesses[0].e]) if q_witnesses else 0.0
    suzuki = suzuki_consistency(q_witnesses, d, m1)
    if suzuki.violation:
        problems.append("Q orderings violate the admissible patterns")

    p_blocks = []
    for e in es:
        try:
            cmp = compare_p_routes(basis, tensor, e, opt.tol)
        except AmbiguousWitness as exc:
            problems.append(f"P e={e}: {exc}")
            p_blocks.append({"e": e, "error": str(exc)})
            continue
        block = {
            "e": e,
            "theta": _r(basis.P[:, e], dig),
            "precondition": cmp.precondition,
            "tridiagonal": list(cmp.witness.order) if cmp.witness else None,
            "agree": cmp.agree,
        }
        if cmp.ratio is not None:
            block["ratio"] = {
                "K": _r(cmp.ratio.K, dig),
                "K_integral": list(cmp.ratio.integral_flags),
                "l": cmp.ratio.l_witness,
                "verdict": cmp.ratio.is_ppoly,
            }
        if not cmp.agree:
            problems.append(f"P e={e}: routes disagree")
        p_blocks.append(block)

    data = {
        "schema": SCHEMA,
        "scheme": {
            "name": name,
            "n": table.n,
            "d": d,
            "valencies": tensor.valency.tolist(),
            "multiplicities": _r(basis.mult, dig),
        },
        "settings": {
            "tol": opt.tol,
            "seed": opt.seed,
            "seed_used": basis.seed,
            "e": opt.e,
            "digits": dig,
        },
        "eigenmatrices": {
            "P": _r(basis.P, dig),
            "P_integral": _flags(basis.P),
            "Q": _r(basis.Q, dig),
            "Q_integral": _flags(basis.Q),
        },
        "krein_min": _r(krein.min_entry, dig),
        "q_polynomial": {
            "witnesses": [list(w.order) for w in q_witnesses],
            "per_e": q_blocks,
            "suzuki": {
                "status": suzuki.status,
                "note": suzuki.note,
                "comparisons": [
                    {k: list(v) if isinstance(v, tuple) else v for k, v in c.items()}
                    for c in suzuki.comparisons
                ],
            },
        },
        "p_polynomial": {
            "witnesses": [list(w.order) for w in p_witnesses],
            "per_e": p_blocks,
        },
        "discrepancies": problems,
        "status": "DISCREPANCY" if problems else "ok",
    }
    return AnalysisReport(data, problems)


def _matrix_lines(M, width=11):
    return ["  " + "".join(f"{v:>{width}}" for v in row) for row in M]


def _fmt(x):
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    return str(x)


def render_text(data: dict) -> str:
    """Aligned-column plain-text rendering of a machine report."""
    s = data["scheme"]
    out = [
        f"scheme        {s['name'] or '-'}",
        f"n, d          {s['n']}, {s['d']}",
        f"valencies     {_fmt(s['valencies'])}",
        f"multiplicity  {_fmt(s['multiplicities'])}",
        f"seed          {data['settings']['seed_used']}  tol {data['settings']['tol']:g}",
        "",
        "P  (rows E_j, columns A_i)",
        *_matrix_lines(data["eigenmatrices"]["P"]),
        "Q  (rows A_j, columns E_i)",
        *_matrix_lines(data["eigenmatrices"]["Q"]),
        f"min Krein parameter  {data['krein_min']}",
        "",
        "Q-polynomial",
        f"  {'e':>3}  {'ratio':>6}  {'filt':>6}  {'tridiag':>7}  {'l':>3}  {'N_d':>5}  K",
    ]
    for b in data["q_polynomial"]["per_e"]:
        if "error" in b:
            out.append(f"  {b['e']:>3}  ERROR {b['error']}")
            continue
        r = b.get("ratio")
        out.append(
            f"  {b['e']:>3}  {_fmt(r['verdict']) if r else 'n/a':>6}  "
            f"{_fmt(b['filtration']['verdict']):>6}  {_fmt(b['tridiagonal'] is not None):>7}  "
            f"{_fmt(r['l']) if r else '-':>3}  {_fmt(b['filtration']['N'][-1]):>5}  "
            f"{_fmt(r['K']) if r else b['precondition']}"
        )
        if "integrality" in b:
            i = b["integrality"]
            out.append(
                f"       integrality: hypothesis {_fmt(i['hypothesis'])}, "
                f"K integral {_fmt(i['K_integral'])}"
                + ("  CONTRADICTION" if i["contradiction"] else "")
            )
    out.append(f"  orderings  {_fmt(data['q_polynomial']['witnesses'])}")
    suz = data["q_polynomial"]["suzuki"]
    out.append(f"  suzuki     {suz['status']}" + (f" ({suz['note']})" if suz["note"] else ""))
    for c in suz["comparisons"]:
        out.append(f"             {_fmt(c['order'])} -> {_fmt(c['patterns'])}")
    out += [
        "",
        "P-polynomial",
        f"  {'e':>3}  {'ratio':>6}  {'tridiag':>7}  {'l':>3}  K",
    ]
    for b in data["p_polynomial"]["per_e"]:
        if "error" in b:
            out.append(f"  {b['e']:>3}  ERROR {b['error']}")
            continue
        r = b.get("ratio")
        out.append(
            f"  {b['e']:>3}  {_fmt(r['verdict']) if r else 'n/a':>6}  "
            f"{_fmt(b['tridiagonal'] is not None):>7}  {_fmt(r['l']) if r else '-':>3}  "
            f"{_fmt(r['K']) if r else b['precondition']}"
        )
    out.append(f"  orderings  {_fmt(data['p_polynomial']['witnesses'])}")
    out.append("")
    if data["discrepancies"]:
        out.append("DISCREPANCY")
        out += [f"  {p}" for p in data["discrepancies"]]
    else:
        out.append("status ok")
    return "\n".join(out) + "\n"
