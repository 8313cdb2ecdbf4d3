"""Relation tables, axiom validation and intersection numbers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .errors import (
    BadDiagonal,
    Disconnected,
    EmptyRelation,
    NotAScheme,
    NotSymmetric,
    ParseError,
)


def _frozen(a, dtype):
    a = np.array(a, dtype=dtype, copy=True)
    a.setflags(write=False)
    return a


class RelationTable:
    """Partition of ``X x X`` stored as an ``n x n`` class map.

    ``rel[x, y] = i`` means ``(x, y)`` lies in relation ``R_i``. Only shape and
    range are checked here; the scheme axioms are checked by
    :func:`validate_axioms`.
    """

    __slots__ = ("rel", "d")

    def __init__(self, rel, d=None):
        rel = np.asarray(rel)
        if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
            raise ParseError(f"relation table must be square, got shape {rel.shape}")
        if rel.shape[0] < 2:
            raise ParseError("relation table needs n >= 2")
        if not np.issubdtype(rel.dtype, np.integer):
            if not np.all(np.equal(np.mod(rel, 1), 0)):
                raise ParseError("relation table entries must be integers")
        rel = _frozen(rel, np.int64)
        if d is None:
            d = int(rel.max())
        d = int(d)
        if d < 1:
            raise ParseError(f"class d must be >= 1, got {d}")
        bad = np.argwhere((rel < 0) | (rel > d))
        if len(bad):
            x, y = bad[0]
            raise ParseError(
                f"rel[{x}][{y}] = {rel[x, y]} outside 0..{d}", field=f"rows[{x}][{y}]"
            )
        object.__setattr__(self, "rel", rel)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("RelationTable is immutable")

    @property
    def n(self) -> int:
        return self.rel.shape[0]

    def adjacency(self, i: int) -> np.ndarray:
        """0/1 indicator matrix ``A_i`` of relation ``i``."""
        return (self.rel == i).astype(np.int64)

    def adjacency_stack(self) -> np.ndarray:
        """All adjacency matrices, shape ``(d+1, n, n)``."""
        return np.stack([self.adjacency(i) for i in range(self.d + 1)])

    def __eq__(self, other):
        if not isinstance(other, RelationTable):
            return NotImplemented
        return self.d == other.d and np.array_equal(self.rel, other.rel)

    def __hash__(self):
        return hash((self.d, self.rel.tobytes()))

    def __repr__(self):
        return f"RelationTable(n={self.n}, d={self.d})"


@dataclass(frozen=True, eq=False)
class IntersectionTensor:
    """Intersection numbers ``p[i, j, k] = p_ij^k`` and valencies ``k_i``."""

    d: int
    p: np.ndarray
    valency: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "p", _frozen(self.p, np.int64))
        object.__setattr__(self, "valency", _frozen(self.valency, np.int64))

    def __eq__(self, other):
        if not isinstance(other, IntersectionTensor):
            return NotImplemented
        return self.d == other.d and np.array_equal(self.p, other.p)

    def check_invariants(self) -> bool:
        p, k = self.p, self.valency
        eye = np.eye(self.d + 1, dtype=np.int64)
        return bool(
            np.array_equal(p, p.transpose(1, 0, 2))
            and np.array_equal(p.sum(axis=1), np.repeat(k[:, None], self.d + 1, axis=1))
            and np.array_equal(p[:, 0, :], eye)
            and np.all(k > 0)
        )


def validate_axioms(table: RelationTable) -> IntersectionTensor:
    """Check the four scheme axioms and return the intersection numbers.

    For every ``(i, j)`` the number of ``z`` with ``rel[x, z] = i`` and
    ``rel[z, y] = j`` is counted for all pairs at once (an integer matrix
    product); the count must then be constant on each relation ``R_k``.

    Raises
    ------
    BadDiagonal, NotSymmetric, EmptyRelation
        Axioms 1 and 3, or an unused class index.
    NotAScheme
        Axiom 4 fails; carries ``(i, j, k)`` and two witness pairs.
    """
    rel, d, n = table.rel, table.d, table.n
    diag = np.diagonal(rel)
    if np.any(diag != 0):
        x = int(np.flatnonzero(diag != 0)[0])
        raise BadDiagonal(f"rel[{x}][{x}] = {diag[x]}, expected 0")
    off = np.argwhere((rel == 0) & ~np.eye(n, dtype=bool))
    if len(off):
        x, y = off[0]
        raise BadDiagonal(f"rel[{x}][{y}] = 0 for distinct vertices")
    asym = np.argwhere(rel != rel.T)
    if len(asym):
        x, y = asym[0]
        raise NotSymmetric(f"rel[{x}][{y}] = {rel[x, y]} but rel[{y}][{x}] = {rel[y, x]}")
    used = np.bincount(rel.ravel(), minlength=d + 1)
    if np.any(used == 0):
        raise EmptyRelation(f"relation(s) {np.flatnonzero(used == 0).tolist()} are empty")

    A = table.adjacency_stack()
    masks = A.astype(bool)
    p = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    for i in range(d + 1):
        for j in range(i, d + 1):
            counts = A[i] @ A[j]
            for k in range(d + 1):
                vals = counts[masks[k]]
                lo, hi = vals.min(), vals.max()
                if lo != hi:
                    pairs = np.argwhere(masks[k])
                    a = pairs[int(np.argmin(vals))]
                    b = pairs[int(np.argmax(vals))]
                    raise NotAScheme((i, j, k), [a, b], [int(lo), int(hi)])
                p[i, j, k] = p[j, i, k] = lo
    valency = np.array([p[i, i, 0] for i in range(d + 1)])
    return IntersectionTensor(d=d, p=p, valency=valency)


def from_distance_partition(adjacency) -> RelationTable:
    """Distance-partition table of a connected graph: ``rel[x, y] = dist(x, y)``.

    The result is a scheme only when the graph is distance-regular; run
    :func:`validate_axioms` on it.
    """
    adj = np.asarray(adjacency)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise ParseError(f"adjacency must be square, got shape {adj.shape}")
    if not np.array_equal(adj, adj.T):
        raise NotSymmetric("adjacency matrix is not symmetric")
    if np.any(np.diagonal(adj) != 0):
        raise BadDiagonal("adjacency matrix has loops")
    if not np.all((adj == 0) | (adj == 1)):
        raise ParseError("adjacency entries must be 0 or 1")
    dist = shortest_path(adj.astype(float), method="D", unweighted=True, directed=False)
    if not np.all(np.isfinite(dist)):
        raise Disconnected("graph is disconnected")
    return RelationTable(dist.astype(np.int64))


def edges_to_adjacency(n: int, edges) -> np.ndarray:
    adj = np.zeros((n, n), dtype=np.int64)
    for a, b in edges:
        adj[a, b] = adj[b, a] = 1
    return adj
