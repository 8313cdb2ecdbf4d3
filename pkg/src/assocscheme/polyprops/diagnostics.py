"""Integrality of the ratios and consistency of multiple Q-orderings.

Two classical facts about a Q-polynomial scheme with ``m_1 > 2`` are checked
numerically:

* any second Q-polynomial ordering, written in the positions of the first,
  is one of five fixed permutations (the fifth only for ``d = 5``);
* if some odd ``t <= d/2`` has ``m_t != m_{d-t+1}`` (multiplicities taken
  along the Q-ordering) then every ratio ``K_j`` is an integer.

A failure of either on a validated scheme points at a numerical bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..spectral import INTEGRAL_TOL, SpectralBasis, is_integral
from .tridiagonal import OrderingWitness


def _meet(d, front_rule, back_rule):
    """Fill a permutation from both ends until the two rules collide."""
    front = []
    for p in range(d + 1):
        v = front_rule(p)
        if v in front or not 0 <= v <= d:
            break
        front.append(v)
    back = []
    for p in range(d, -1, -1):
        v = back_rule(p)
        if v in back or v in front or not 0 <= v <= d:
            break
        back.append(v)
    seq = tuple(front + back[::-1])
    if len(seq) != d + 1 or sorted(seq) != list(range(d + 1)):
        return None
    return seq


def suzuki_patterns(d: int) -> dict:
    """The admissible alternative orderings, as position sequences.

    Keys are pattern ids 1..5. Pattern 5 exists only for ``d = 5``.

    >>> suzuki_patterns(3)[3]
    (0, 3, 2, 1)
    """
    evens = list(range(0, d + 1, 2))
    odds = list(range(1, d + 1, 2))
    pats = {1: tuple(evens + odds[::-1])}
    pats[2] = tuple((p // 2) if p % 2 == 0 else d - p // 2 for p in range(d + 1))
    pats[3] = _meet(
        d,
        lambda p: p if p % 2 == 0 else d - p + 1,
        lambda p: d - p + 1 if (d - p) % 2 == 0 else p,
    )
    pats[4] = _meet(
        d,
        lambda p: p if p % 2 == 0 else d - p,
        lambda p: p if (d - p) % 2 == 0 else d - p,
    )
    if d == 5:
        pats[5] = (0, 5, 3, 2, 4, 1)
    return {k: v for k, v in pats.items() if v is not None}


@dataclass(frozen=True)
class SuzukiReport:
    status: str
    note: str = ""
    comparisons: tuple = field(default_factory=tuple)

    @property
    def violation(self) -> bool:
        return any(c["patterns"] == "VIOLATION" for c in self.comparisons)


def suzuki_consistency(witnesses, d: int, m1: float) -> SuzukiReport:
    """Compare every Q-ordering against the first one.

    ``m1`` is the multiplicity of ``E_e`` for the reference (first) witness.
    Each comparison lists the matching pattern ids, or ``"VIOLATION"``.
    """
    witnesses = [w for w in witnesses if w.kind == "Q"]
    if not witnesses:
        return SuzukiReport("no Q-polynomial ordering")
    if len(witnesses) == 1:
        return SuzukiReport("unique ordering")
    if m1 <= 2 + INTEGRAL_TOL:
        return SuzukiReport("skipped", note="m_1 = 2 excluded (ordinary n-gon)")
    ref = witnesses[0].order
    pos = {idx: a for a, idx in enumerate(ref)}
    pats = suzuki_patterns(d)
    out = []
    for w in witnesses[1:]:
        relative = tuple(pos[i] for i in w.order)
        ids = [k for k, v in pats.items() if v == relative]
        out.append(
            {
                "reference": ref,
                "order": w.order,
                "relative": relative,
                "patterns": ids if ids else "VIOLATION",
            }
        )
    return SuzukiReport("checked", comparisons=tuple(out))


@dataclass(frozen=True)
class IntegralityReport:
    order: tuple
    multiplicities: tuple
    hypothesis: bool
    odd_t: tuple
    integral_flags: tuple
    contradiction: bool

    @property
    def all_integral(self) -> bool:
        return all(self.integral_flags)


def integrality_report(
    basis: SpectralBasis, witness: OrderingWitness, K, tol: float = INTEGRAL_TOL
) -> IntegralityReport:
    """Evaluate the integrality criterion along a Q-polynomial ordering.

    The hypothesis is ``m_1 > 2`` and some odd ``t <= d/2`` with
    ``m_t != m_{d-t+1}``, where ``m_t`` is the multiplicity of the ``t``-th
    idempotent of ``witness.order``. ``contradiction`` is set when the
    hypothesis holds yet some ``K_j`` is not within ``tol`` of an integer.
    """
    if witness.kind != "Q":
        raise ValueError("integrality_report needs a Q-polynomial witness")
    d = basis.d
    m = tuple(float(basis.mult[i]) for i in witness.order)
    ts = tuple(
        t
        for t in range(1, d // 2 + 1, 2)
        if abs(m[t] - m[d - t + 1]) > tol
    )
    hypothesis = m[1] > 2 + tol and len(ts) > 0
    flags = tuple(bool(f) for f in is_integral(np.asarray(K, dtype=float), tol))
    return IntegralityReport(
        order=witness.order,
        multiplicities=m,
        hypothesis=hypothesis,
        odd_t=ts,
        integral_flags=flags,
        contradiction=hypothesis and not all(flags),
    )
