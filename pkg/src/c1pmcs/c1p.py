"""Consecutive ones property for a subset of rows.

``is_c1p`` splits the selected rows into overlap components (two rows overlap
when they intersect and neither contains the other).  A family is C1P iff
every overlap component is, and inside a component the order of the column
classes is forced up to reversal, so rows can be inserted one at a time
(each new row overlapping an already placed one) while refining an ordered
partition of the columns seen so far.  Nothing is ever guessed, hence no
backtracking.

The witness is assembled from the per-component orders: a component whose
column union fits inside a class of a larger component is laid out within
that class.

``is_c1p_bruteforce`` is the definition, tried over every permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Optional

from .matrix import BinaryMatrix, columns_of, overlap

DEFAULT_ORACLE_COLS = 8


class OracleBoundError(ValueError):
    """An exhaustive routine refused an instance above its size bound."""


@dataclass(frozen=True)
class C1PResult:
    holds: bool
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


def _selected(matrix: BinaryMatrix, rows: Optional[Iterable[int]]) -> list[int]:
    if rows is None:
        return list(matrix.rows)
    return [matrix.rows[i] for i in rows]


def is_contiguous(row: int, position: dict[int, int]) -> bool:
    cols = columns_of(row)
    if not cols:
        return True
    pos = [position[c] for c in cols]
    return max(pos) - min(pos) + 1 == len(cols)


def witness_is_valid(matrix: BinaryMatrix, rows: Optional[Iterable[int]], order: Iterable[int]) -> bool:
    order = list(order)
    if sorted(order) != list(range(matrix.n_cols)):
        return False
    position = {c: p for p, c in enumerate(order)}
    return all(is_contiguous(r, position) for r in _selected(matrix, rows))


# ---------------------------------------------------------------------------
# efficient test


def _overlap_components(masks: list[int]) -> list[list[int]]:
    """Components of the overlap graph, each listed in BFS order."""
    seen = [False] * len(masks)
    comps = []
    for start in range(len(masks)):
        if seen[start]:
            continue
        seen[start] = True
        order = [start]
        head = 0
        while head < len(order):
            x = masks[order[head]]
            head += 1
            for j in range(len(masks)):
                if not seen[j] and overlap(x, masks[j]):
                    seen[j] = True
                    order.append(j)
        comps.append([masks[i] for i in order])
    return comps


def _arrange(component: list[int]) -> Optional[list[int]]:
    """Ordered column classes of an overlap-connected family, or None."""
    blocks = [component[0]]
    union = component[0]
    for x in component[1:]:
        fresh = x & ~union
        touched = [t for t, b in enumerate(blocks) if b & x]
        i, j = touched[0], touched[-1]
        if j - i + 1 != len(touched):
            return None
        if any(blocks[t] & ~x for t in range(i + 1, j)):
            return None
        partial_i = bool(blocks[i] & ~x)
        partial_j = bool(blocks[j] & ~x)
        if fresh:
            k = len(blocks)
            at_right = j == k - 1 and (i == j or not partial_j)
            at_left = i == 0 and (i == j or not partial_i)
            if at_right:
                if partial_i:
                    blocks[i : i + 1] = [blocks[i] & ~x, blocks[i] & x]
                blocks.append(fresh)
            elif at_left:
                if partial_j:
                    blocks[j : j + 1] = [blocks[j] & x, blocks[j] & ~x]
                blocks.insert(0, fresh)
            else:
                return None
        else:
            # x overlaps a placed row, so it cannot sit inside one class
            assert i < j
            if partial_j:
                blocks[j : j + 1] = [blocks[j] & x, blocks[j] & ~x]
            if partial_i:
                blocks[i : i + 1] = [blocks[i] & ~x, blocks[i] & x]
        union |= x
    return blocks


def _assemble(n_cols: int, arranged: list[list[int]]) -> tuple[int, ...]:
    unions = [0] * len(arranged)
    for a, blocks in enumerate(arranged):
        for b in blocks:
            unions[a] |= b
    order = sorted(
        range(len(arranged)),
        key=lambda a: (-bin(unions[a]).count("1"), len(arranged[a]), a),
    )
    # children[(component, block index)] -> components laid out inside it
    children: dict[tuple[int, int], list[int]] = {}
    roots = []
    done: list[int] = []
    for a in order:
        best = None
        for rank, b in enumerate(done):
            for t, block in enumerate(arranged[b]):
                if unions[a] & ~block == 0:
                    key = (bin(block).count("1"), -rank)
                    if best is None or key < best[0]:
                        best = (key, (b, t))
        if best is None:
            roots.append(a)
        else:
            children.setdefault(best[1], []).append(a)
        done.append(a)

    def expand(a: int) -> list[int]:
        out: list[int] = []
        for t, block in enumerate(arranged[a]):
            covered = 0
            for child in children.get((a, t), []):
                out.extend(expand(child))
                covered |= unions[child]
            out.extend(columns_of(block & ~covered))
        return out

    seq: list[int] = []
    used = 0
    for a in roots:
        seq.extend(expand(a))
        used |= unions[a]
    seq.extend(c for c in range(n_cols) if not used >> c & 1)
    return tuple(seq)


def is_c1p(matrix: BinaryMatrix, rows: Optional[Iterable[int]] = None, *, witness: bool = True) -> C1PResult:
    """Decide C1P for the selected rows (all rows when ``rows`` is None)."""
    masks = sorted({r for r in _selected(matrix, rows) if r})
    arranged = []
    for comp in _overlap_components(masks):
        blocks = _arrange(comp)
        if blocks is None:
            return C1PResult(False)
        arranged.append(blocks)
    if not witness:
        return C1PResult(True)
    order = _assemble(matrix.n_cols, arranged)
    if not witness_is_valid(matrix, rows, order):
        raise AssertionError("C1P witness assembly produced an invalid order")
    return C1PResult(True, order)


def c1p_holds(matrix: BinaryMatrix, rows: Optional[Iterable[int]] = None) -> bool:
    return is_c1p(matrix, rows, witness=False).holds


# ---------------------------------------------------------------------------
# definition-level oracle


def is_c1p_bruteforce(
    matrix: BinaryMatrix, rows: Optional[Iterable[int]] = None, *, max_cols: int = DEFAULT_ORACLE_COLS
) -> C1PResult:
    """Try every ordering of the columns used by the selected rows."""
    if matrix.n_cols > max_cols:
        raise OracleBoundError(f"brute-force C1P refuses n_cols={matrix.n_cols} > {max_cols}")
    selected = [r for r in _selected(matrix, rows) if r]
    used = 0
    for r in selected:
        used |= r
    used_cols = columns_of(used)
    rest = [c for c in range(matrix.n_cols) if not used >> c & 1]
    for perm in permutations(used_cols):
        position = {c: p for p, c in enumerate(perm)}
        if all(is_contiguous(r, position) for r in selected):
            return C1PResult(True, tuple(perm) + tuple(rest))
    return C1PResult(False)
