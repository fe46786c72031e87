"""Exhaustive MCS enumeration and seeded random instances.

Random matrices come from Python's ``random.Random`` (MT19937) seeded with
the given integer; entries are drawn row-major, one ``random()`` call per
entry, and an entry is 1 iff the draw is below ``density``.  The golden file
``tests/data/random_5_5_0.4_42.txt`` pins this; changing the generator means
regenerating it.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Sequence

from .c1p import OracleBoundError, c1p_holds, is_c1p_bruteforce
from .matrix import BinaryMatrix

DEFAULT_MAX_ROWS = 16


@dataclass(frozen=True)
class OracleReport:
    digest: str
    mcs: tuple[tuple[int, ...], ...]
    membership: tuple[bool, ...]

    def to_json(self) -> str:
        return json.dumps(
            {"digest": self.digest, "mcs": [list(s) for s in self.mcs], "membership": list(self.membership)},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "OracleReport":
        data = json.loads(text)
        return cls(data["digest"], tuple(tuple(s) for s in data["mcs"]), tuple(data["membership"]))


def _mask_rows(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def enumerate_mcs(
    matrix: BinaryMatrix,
    *,
    max_rows: int = DEFAULT_MAX_ROWS,
    force: bool = False,
    prune: bool = True,
    brute_force_c1p: bool = False,
) -> OracleReport:
    """All minimal conflicting sets, by cardinality then lexicographically.

    A set is an MCS iff it is not C1P and each of its maximal proper subsets
    is.  With ``prune`` the C1P test is skipped for any set having a non-C1P
    maximal proper subset (such a set contains a smaller MCS); without it
    every subset is tested.  ``brute_force_c1p`` swaps the C1P test for the
    permutation oracle.
    """
    m = matrix.m
    if m > max_rows and not force:
        raise OracleBoundError(f"oracle refuses m={m} > {max_rows} rows (use force)")

    def holds(mask: int) -> bool:
        rows = _mask_rows(mask)
        if brute_force_c1p:
            return is_c1p_bruteforce(matrix, rows, max_cols=max(matrix.n_cols, 8)).holds
        return c1p_holds(matrix, rows)

    c1p = {0: True}
    found: list[tuple[int, ...]] = []
    for k in range(1, m + 1):
        for combo in combinations(range(m), k):
            mask = 0
            for i in combo:
                mask |= 1 << i
            subs_ok = all(c1p[mask & ~(1 << i)] for i in combo)
            if prune and not subs_ok:
                c1p[mask] = False
                continue
            c1p[mask] = holds(mask)
            if not c1p[mask] and subs_ok:
                found.append(combo)
    membership = [False] * m
    for s in found:
        for i in s:
            membership[i] = True
    return OracleReport(matrix.digest(), tuple(found), tuple(membership))


def random_matrix(m: int, n: int, density: float, seed: int) -> BinaryMatrix:
    if m < 1 or n < 1:
        raise ValueError(f"degenerate dimensions {m}x{n}")
    if not 0.0 < density < 1.0:
        raise ValueError(f"density must lie in (0, 1), got {density}")
    rng = random.Random(seed)
    rows = []
    for _ in range(m):
        bits = 0
        for j in range(n):
            if rng.random() < density:
                bits |= 1 << j
        rows.append(bits)
    return BinaryMatrix(n, tuple(rows))


Predicate = Callable[[BinaryMatrix, OracleReport], bool]


def search_fixture(
    predicate: Predicate,
    budget: int,
    *,
    seed: int = 0,
    m_range: Sequence[int] = (4, 6),
    n_range: Sequence[int] = (3, 7),
    densities: Sequence[float] = (0.3, 0.4, 0.5, 0.6),
) -> Optional[BinaryMatrix]:
    """First seeded random matrix whose oracle report satisfies ``predicate``.

    Instance ``t`` of the scan uses sizes and density drawn from
    ``random.Random(seed)`` and matrix seed ``seed * 1_000_003 + t``.
    """
    rng = random.Random(seed)
    for t in range(budget):
        m = rng.randint(m_range[0], m_range[1])
        n = rng.randint(n_range[0], n_range[1])
        density = densities[rng.randrange(len(densities))]
        matrix = random_matrix(m, n, density, seed * 1_000_003 + t)
        if predicate(matrix, enumerate_mcs(matrix)):
            return matrix
    return None
