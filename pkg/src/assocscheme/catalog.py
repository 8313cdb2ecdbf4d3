"""Reference schemes: cycles, Hamming, Johnson, Petersen, icosahedron."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import TooLarge, UnknownName
from .scheme_core import (
    RelationTable,
    edges_to_adjacency,
    from_distance_partition,
    validate_axioms,
)

SIZE_CAP = 4096

ICOSAHEDRON_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
    (1, 6), (2, 6), (2, 7), (3, 7), (3, 8),
    (4, 8), (4, 9), (5, 9), (5, 10), (1, 10),
    (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
    (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
)


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    name: str
    table: RelationTable
    expected: dict = field(default_factory=dict)

    def check(self) -> bool:
        """Validate the table and compare against ``expected``."""
        tensor = validate_axioms(self.table)
        exp = self.expected
        if "n" in exp and exp["n"] != self.table.n:
            return False
        if "d" in exp and exp["d"] != self.table.d:
            return False
        if "valencies" in exp and tuple(exp["valencies"]) != tuple(tensor.valency.tolist()):
            return False
        return True


def cycle(n: int) -> CatalogEntry:
    """Distance scheme of the ``n``-gon; class ``floor(n/2)``."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    x = np.arange(n)
    diff = np.abs(x[:, None] - x[None, :])
    rel = np.minimum(diff, n - diff)
    d = n // 2
    valencies = [1] + [2] * (d - 1) + [1 if n % 2 == 0 else 2]
    expected = {"n": n, "d": d, "valencies": valencies, "qpoly": True}
    if d == 1:
        expected["note"] = "d=1, excluded from polyprops"
    return CatalogEntry(f"cycle:{n}", RelationTable(rel, d), expected)


def hamming(d: int, q: int, size_cap: int = SIZE_CAP) -> CatalogEntry:
    """Hamming scheme ``H(d, q)`` on ``q``-ary words of length ``d``."""
    if d < 1 or q < 2:
        raise ValueError("hamming needs d >= 1 and q >= 2")
    n = q**d
    if n > size_cap:
        raise TooLarge(f"H({d},{q}) has {n} vertices > cap {size_cap}")
    words = np.array(list(itertools.product(range(q), repeat=d)), dtype=np.int64).reshape(n, d)
    rel = (words[:, None, :] != words[None, :, :]).sum(axis=2)
    valencies = [comb(d, i) * (q - 1) ** i for i in range(d + 1)]
    return CatalogEntry(
        f"hamming:{d},{q}",
        RelationTable(rel, d),
        {"n": n, "d": d, "valencies": valencies, "qpoly": True},
    )


def johnson(v: int, k: int, size_cap: int = SIZE_CAP) -> CatalogEntry:
    """Johnson scheme ``J(v, k)``; relation ``i`` means ``|A & B| = k - i``."""
    if not 1 <= k <= v / 2:
        raise ValueError("johnson needs 1 <= k <= v/2")
    n = comb(v, k)
    if n > size_cap:
        raise TooLarge(f"J({v},{k}) has {n} vertices > cap {size_cap}")
    subsets = np.zeros((n, v), dtype=np.int64)
    for row, s in enumerate(itertools.combinations(range(v), k)):
        subsets[row, list(s)] = 1
    rel = k - subsets @ subsets.T
    valencies = [comb(k, i) * comb(v - k, i) for i in range(k + 1)]
    return CatalogEntry(
        f"johnson:{v},{k}",
        RelationTable(rel, k),
        {"n": n, "d": k, "valencies": valencies, "qpoly": True},
    )


def petersen() -> CatalogEntry:
    """Distance scheme of the Petersen graph (disjoint 2-subsets of a 5-set)."""
    subsets = list(itertools.combinations(range(5), 2))
    edges = [
        (a, b)
        for a, b in itertools.combinations(range(10), 2)
        if not set(subsets[a]) & set(subsets[b])
    ]
    table = from_distance_partition(edges_to_adjacency(10, edges))
    return CatalogEntry(
        "petersen", table, {"n": 10, "d": 2, "valencies": [1, 3, 6], "qpoly": True}
    )


def icosahedron() -> CatalogEntry:
    table = from_distance_partition(edges_to_adjacency(12, ICOSAHEDRON_EDGES))
    return CatalogEntry(
        "icosahedron", table, {"n": 12, "d": 3, "valencies": [1, 5, 5, 1], "qpoly": True}
    )


ALIASES = {
    "pentagon": "cycle:5",
    "square": "cycle:4",
    "triangle": "cycle:3",
    "cube": "hamming:3,2",
}


def by_name(name: str) -> CatalogEntry:
    """Look up ``name``; accepts aliases and ``family:args`` strings.

    >>> by_name("hamming:3,2").table.n
    8
    """
    key = ALIASES.get(name.strip().lower(), name.strip().lower())
    if key == "petersen":
        return petersen()
    if key == "icosahedron":
        return icosahedron()
    m = re.fullmatch(r"(cycle|hamming|johnson):(\d+(?:,\d+)*)", key)
    if m is None:
        raise UnknownName(f"unknown catalog entry {name!r}")
    family, args = m.group(1), [int(a) for a in m.group(2).split(",")]
    ctor = {"cycle": (cycle, 1), "hamming": (hamming, 2), "johnson": (johnson, 2)}
    fn, arity = ctor[family]
    if len(args) != arity:
        raise UnknownName(f"{family} takes {arity} argument(s), got {name!r}")
    try:
        entry = fn(*args)
    except ValueError as exc:
        raise UnknownName(f"{name!r}: {exc}") from None
    if name in ALIASES:
        entry = CatalogEntry(name, entry.table, entry.expected)
    return entry


def standard_catalog() -> list[CatalogEntry]:
    """Entries used by the acceptance suite."""
    entries = [by_name("pentagon")]
    entries += [cycle(n) for n in range(4, 13) if n != 5]
    entries += [hamming(d, 2) for d in range(1, 5)]
    entries += [hamming(2, 3), johnson(5, 2), johnson(4, 2), petersen(), icosahedron()]
    return entries
