"""Orderings under which ``(t_{e, i}^j)`` is irreducible tridiagonal."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ClassTooSmall
from ..scheme_core import IntersectionTensor
from ..spectral import DEFAULT_TOL, KreinTensor


@dataclass(frozen=True)
class OrderingWitness:
    """A P- or Q-polynomial ordering ``(0, e, i_2, ..., i_d)``."""

    kind: str
    order: tuple

    @property
    def e(self) -> int:
        return self.order[1]

    @property
    def last(self) -> int:
        return self.order[-1]


def _tensor_and_kind(tensor, kind):
    if isinstance(tensor, KreinTensor):
        return np.asarray(tensor.q, dtype=float), kind or "Q"
    if isinstance(tensor, IntersectionTensor):
        return np.asarray(tensor.p, dtype=float), kind or "P"
    if kind not in ("P", "Q"):
        raise ValueError("pass kind='P' or kind='Q' with a raw array")
    return np.asarray(tensor, dtype=float), kind


def is_irreducible_tridiagonal(M: np.ndarray, tol: float) -> bool:
    size = M.shape[0]
    for a in range(size):
        for b in range(size):
            off = abs(a - b)
            if off == 1 and not M[a, b] > tol:
                return False
            if off > 1 and abs(M[a, b]) > tol:
                return False
    return True


def tridiagonal_orderings(tensor, tol: float = DEFAULT_TOL, kind: str | None = None):
    """All orderings that make ``(t[e, i_a, i_b])_{a,b}`` irreducible tridiagonal.

    ``tensor`` is a :class:`KreinTensor` (Q-polynomial detection) or an
    :class:`IntersectionTensor` (P-polynomial detection). For each ``e`` the
    ordering is grown greedily: the next index must be the unique unvisited
    ``k`` with ``t[e, i_h, k] > tol``. Entries are compared against
    ``tol * max(1, max|t|)``.
    """
    t, kind = _tensor_and_kind(tensor, kind)
    d = t.shape[0] - 1
    if d < 2:
        raise ClassTooSmall("class d >= 2 required")
    thr = tol * max(1.0, float(np.abs(t).max()))
    found = []
    for e in range(1, d + 1):
        order = [0, e]
        while len(order) <= d:
            current = order[-1]
            nxt = [k for k in range(d + 1) if k not in order and t[e, current, k] > thr]
            if len(nxt) != 1:
                break
            order.append(nxt[0])
        if len(order) != d + 1:
            continue
        M = t[e][np.ix_(order, order)]
        if is_irreducible_tridiagonal(M, thr):
            found.append(OrderingWitness(kind, tuple(order)))
    return found
