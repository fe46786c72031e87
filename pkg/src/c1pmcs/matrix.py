"""0-1 matrices as families of column sets.

Each row is stored as a Python ``int`` used as a bit vector over the
columns (bit ``j`` set iff the row has a 1 in column ``j``).  Set algebra on
rows is then plain integer arithmetic: ``a & b``, ``a | b``, ``a & ~b``.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union


class ParseError(ValueError):
    """Malformed matrix text.  ``line`` is 1-based (0 when unknown)."""

    def __init__(self, message: str, line: int = 0) -> None:
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def bits_of(columns: Iterable[int]) -> int:
    bits = 0
    for c in columns:
        bits |= 1 << c
    return bits


def columns_of(bits: int) -> list[int]:
    """Ascending column indices of a bit vector."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


@dataclass(frozen=True)
class RowSet:
    """A set of columns of a matrix with ``n_cols`` columns.

    Supports ``|``, ``&`` and ``-`` with exact set semantics; mixing widths
    raises ``ValueError``.
    """

    bits: int
    n_cols: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n_cols:
            raise ValueError(f"row set has a column outside [0, {self.n_cols})")

    @classmethod
    def of(cls, columns: Iterable[int], n_cols: int) -> "RowSet":
        return cls(bits_of(columns), n_cols)

    def _other(self, other: "RowSet") -> int:
        if not isinstance(other, RowSet):
            return NotImplemented
        if other.n_cols != self.n_cols:
            raise ValueError(f"width mismatch: {self.n_cols} vs {other.n_cols}")
        return other.bits

    def __or__(self, other: "RowSet") -> "RowSet":
        return RowSet(self.bits | self._other(other), self.n_cols)

    def __and__(self, other: "RowSet") -> "RowSet":
        return RowSet(self.bits & self._other(other), self.n_cols)

    def __sub__(self, other: "RowSet") -> "RowSet":
        return RowSet(self.bits & ~self._other(other), self.n_cols)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter(columns_of(self.bits))

    def __contains__(self, c: object) -> bool:
        return isinstance(c, int) and 0 <= c < self.n_cols and bool(self.bits >> c & 1)

    def is_empty(self) -> bool:
        return self.bits == 0

    def __repr__(self) -> str:
        return f"RowSet({columns_of(self.bits)}, n_cols={self.n_cols})"


RowLike = Union[RowSet, int]


def _pair_bits(a: RowLike, b: RowLike) -> tuple[int, int]:
    if isinstance(a, RowSet) and isinstance(b, RowSet) and a.n_cols != b.n_cols:
        raise ValueError(f"width mismatch: {a.n_cols} vs {b.n_cols}")
    return (a.bits if isinstance(a, RowSet) else a), (b.bits if isinstance(b, RowSet) else b)


def overlap(a: RowLike, b: RowLike) -> bool:
    """True iff the rows intersect and neither contains the other."""
    x, y = _pair_bits(a, b)
    return bool(x & y) and bool(x & ~y) and bool(y & ~x)


@dataclass(frozen=True)
class BinaryMatrix:
    """An ``m x n_cols`` 0-1 matrix; ``rows[i]`` is the bit vector of row ``i``.

    Duplicate and empty rows are allowed; a row's identity is its index.
    """

    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_cols < 1:
            raise ValueError("matrix needs at least one column")
        if len(self.rows) < 1:
            raise ValueError("matrix needs at least one row")
        object.__setattr__(self, "rows", tuple(self.rows))
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.n_cols:
                raise ValueError(f"row {i} has a column outside [0, {self.n_cols})")

    @classmethod
    def from_sets(cls, n_cols: int, rows: Iterable[Iterable[int]]) -> "BinaryMatrix":
        return cls(n_cols, tuple(bits_of(r) for r in rows))

    @property
    def m(self) -> int:
        return len(self.rows)

    def row_set(self, i: int) -> RowSet:
        return RowSet(self.rows[i], self.n_cols)

    def columns(self, i: int) -> list[int]:
        return columns_of(self.rows[i])

    def as_lists(self) -> list[list[int]]:
        return [columns_of(r) for r in self.rows]

    def digest(self) -> str:
        return hashlib.sha256(to_dense(self).encode()).hexdigest()


# ---------------------------------------------------------------------------
# text formats

_DENSE_ROW = re.compile(r"^[01]( ?[01])*$")


def parse_matrix(text: str, format: str = "dense") -> BinaryMatrix:
    if format == "dense":
        return _parse_dense(text)
    if format == "sparse":
        return _parse_sparse(text)
    raise ValueError(f"unknown matrix format {format!r}")


def detect_format(text: str) -> str:
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        return "sparse" if s.startswith("n=") else "dense"
    return "dense"


def _parse_dense(text: str) -> BinaryMatrix:
    header: tuple[int, int] | None = None
    rows: list[int] = []
    lineno = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if header is None:
            parts = s.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ParseError(f"expected header 'm n', got {s!r}", lineno)
            header = (int(parts[0]), int(parts[1]))
            if header[0] < 1 or header[1] < 1:
                raise ParseError("m and n must be positive", lineno)
            continue
        if len(rows) == header[0]:
            raise ParseError(f"more than {header[0]} rows", lineno)
        if not _DENSE_ROW.match(s):
            raise ParseError(f"row must contain only 0/1 digits, got {s!r}", lineno)
        digits = s.replace(" ", "")
        if len(digits) != header[1]:
            raise ParseError(f"row has {len(digits)} entries, expected {header[1]}", lineno)
        rows.append(sum(1 << j for j, ch in enumerate(digits) if ch == "1"))
    if header is None:
        raise ParseError("missing header 'm n'", lineno)
    if len(rows) != header[0]:
        raise ParseError(f"expected {header[0]} rows, found {len(rows)}", lineno)
    return BinaryMatrix(header[1], tuple(rows))


def _parse_sparse(text: str) -> BinaryMatrix:
    n_cols: int | None = None
    rows: list[int] = []
    lineno = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if s.startswith("#"):
            continue
        if n_cols is None:
            if not s:
                continue
            m = re.fullmatch(r"n\s*=\s*(\d+)", s)
            if not m or int(m.group(1)) < 1:
                raise ParseError(f"expected header 'n=<n>', got {s!r}", lineno)
            n_cols = int(m.group(1))
            continue
        # after the header an empty line is an empty row
        bits, prev = 0, -1
        for tok in s.split():
            if not tok.isdigit():
                raise ParseError(f"bad column index {tok!r}", lineno)
            c = int(tok)
            if c >= n_cols:
                raise ParseError(f"column {c} out of range for n={n_cols}", lineno)
            if c <= prev:
                raise ParseError("column indices must be strictly ascending", lineno)
            bits |= 1 << c
            prev = c
        rows.append(bits)
    if n_cols is None:
        raise ParseError("missing header 'n=<n>'", lineno)
    if not rows:
        raise ParseError("matrix has no rows", lineno)
    return BinaryMatrix(n_cols, tuple(rows))


def to_dense(matrix: BinaryMatrix) -> str:
    lines = [f"{matrix.m} {matrix.n_cols}"]
    for row in matrix.rows:
        lines.append("".join("1" if row >> j & 1 else "0" for j in range(matrix.n_cols)))
    return "\n".join(lines) + "\n"


def to_sparse(matrix: BinaryMatrix) -> str:
    lines = [f"n={matrix.n_cols}"]
    lines.extend(" ".join(map(str, columns_of(row))) for row in matrix.rows)
    return "\n".join(lines) + "\n"


def serialize(matrix: BinaryMatrix, format: str = "dense") -> str:
    if format == "dense":
        return to_dense(matrix)
    if format == "sparse":
        return to_sparse(matrix)
    raise ValueError(f"unknown matrix format {format!r}")
