"""Checking a claimed MCS against the definition, and naming its form."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from .c1p import c1p_holds, is_c1p
from .matrix import BinaryMatrix


class ClassificationError(ValueError):
    """A verified MCS matched none of the known row-graph signatures."""


@dataclass(frozen=True)
class Verdict:
    is_mcs: bool
    reason: str
    witness: Optional[tuple[int, ...]] = None  # column order when the set is C1P
    conflicting_subset: Optional[tuple[int, ...]] = None


def verify_mcs(matrix: BinaryMatrix, rows: Iterable[int]) -> bool:
    """Not C1P, while dropping any single row makes it C1P.

    Dropping one row suffices: C1P is inherited by every subset.
    """
    s = sorted(set(rows))
    if not s or c1p_holds(matrix, s):
        return False
    return all(c1p_holds(matrix, s[:i] + s[i + 1 :]) for i in range(len(s)))


def explain(matrix: BinaryMatrix, rows: Iterable[int]) -> Verdict:
    s = sorted(set(rows))
    if not s:
        return Verdict(False, "empty set")
    whole = is_c1p(matrix, s)
    if whole.holds:
        return Verdict(False, "set is C1P", witness=whole.witness)
    # dropping the largest row first gives the lexicographically smallest subset
    for i in reversed(range(len(s))):
        sub = s[:i] + s[i + 1 :]
        if not c1p_holds(matrix, sub):
            return Verdict(False, "proper subset is non-C1P", conflicting_subset=tuple(sub))
    return Verdict(True, "minimal conflicting set")


def kernels(matrix: BinaryMatrix, rows: Sequence[int]) -> list[int]:
    """Rows of the set intersecting every other row of the set."""
    R = matrix.rows
    return [x for x in rows if all(R[x] & R[y] for y in rows if y != x)]


# ---------------------------------------------------------------------------
# form signatures


def _size3_form(a: int, b: int, c: int) -> Optional[str]:
    """Form of three pairwise-overlapping rows given as bit vectors.

    When both patterns are present (every row has a private column and
    every pair a column of its own) the triple is labelled V.
    """
    if b & c & ~a and a & c & ~b and a & b & ~c:
        return "V"
    if a & ~(b | c) and b & ~(a | c) and c & ~(a | b):
        return "IV"
    return None


def _is_chordless_cycle(adj: dict[int, set[int]]) -> bool:
    if len(adj) < 4 or any(len(n) != 2 for n in adj.values()):
        return False
    start = next(iter(adj))
    seen, prev, cur = {start}, None, start
    while True:
        nxt = next(v for v in adj[cur] if v != prev)
        if nxt == start:
            break
        seen.add(nxt)
        prev, cur = cur, nxt
    return len(seen) == len(adj)


def _is_chordless_path(adj: dict[int, set[int]]) -> bool:
    if not adj:
        return False
    if len(adj) == 1:
        return True
    ends = [v for v, n in adj.items() if len(n) == 1]
    if len(ends) != 2 or any(len(n) > 2 for n in adj.values()):
        return False
    seen, prev, cur = {ends[0]}, None, ends[0]
    while cur != ends[1]:
        nxt = next(v for v in adj[cur] if v != prev)
        seen.add(nxt)
        prev, cur = cur, nxt
    return len(seen) == len(adj)


def _overlaps(x: int, y: int) -> bool:
    return bool(x & y) and bool(x & ~y) and bool(y & ~x)


def _form_iii_pattern(R: Sequence[int], k1: int, x: int, y: int, z: int) -> bool:
    """Kernel ``k1`` over the path x-y-z, as tested by the form-III search."""
    a, p, q, s = R[k1], R[x], R[y], R[z]
    return (
        _overlaps(a, p)
        and _overlaps(a, q)
        and _overlaps(a, s)
        and bool(a & ~(p & q & s))
        and not (p & s)
        and bool(p & q & ~a)
        and bool(q & s & ~a)
    )


def classify(matrix: BinaryMatrix, rows: Iterable[int]) -> tuple[str, list[int]]:
    """Form label and kernels of a verified MCS, from its row-graph shape.

    Size 3 is V when each pair shares a column the third row lacks, else
    IV.  Without a kernel the set must be a chordless cycle (I).  At size 4:
    one kernel over three pairwise disjoint rows is II, four pairwise
    intersecting rows are V, and a kernel over a 3-path is III when the
    form-III column pattern fits, else IV.  Larger sets are IV (one kernel
    over a chordless path), or V (two kernels over a chordless path, or
    five rows missing a single edge).
    """
    s = sorted(set(rows))
    R = matrix.rows
    k = len(s)
    kern = kernels(matrix, s)
    adj = {x: {y for y in s if y != x and R[x] & R[y]} for x in s}
    n_missing = sum(1 for x, y in combinations(s, 2) if not R[x] & R[y])

    if k < 3:
        raise ClassificationError(f"an MCS has at least 3 rows, got {s}")
    if k == 3:
        form = _size3_form(R[s[0]], R[s[1]], R[s[2]])
        if form is None or not all(_overlaps(R[x], R[y]) for x, y in combinations(s, 2)):
            raise ClassificationError(f"size-3 set {s} is not pairwise overlapping with a IV/V pattern")
        return form, kern
    if not kern:
        if _is_chordless_cycle(adj):
            return "I", kern
        raise ClassificationError(f"kernel-free set {s} is not a chordless cycle")
    rest = {x: adj[x] - set(kern) for x in s if x not in kern}
    if k == 4:
        if len(kern) == 1 and n_missing == 3:
            return "II", kern
        if n_missing == 0:
            return "V", kern
        if n_missing == 1:
            for k1 in kern:
                others = [x for x in s if x != k1]
                for x, y, z in permutations(others):
                    if _form_iii_pattern(R, k1, x, y, z):
                        return "III", kern
            return "IV", kern
        raise ClassificationError(f"size-4 set {s} has no known shape")
    if len(kern) == 1 and _is_chordless_path(rest):
        return "IV", kern
    if k == 5 and n_missing == 1:
        return "V", kern
    if len(kern) == 2 and k >= 6 and _is_chordless_path(rest):
        return "V", kern
    raise ClassificationError(f"set {s} with kernels {kern} has no known shape")
