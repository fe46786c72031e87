"""Named test matrices.

The hand-built ones come with a known MCS structure.  The size-4 and size-5
entries of ``SEARCHED`` were found by a seeded random search with the
exhaustive oracle (``c1pmcs.oracle.search_fixture``) and frozen here; see
``scripts/find_fixtures.py`` for how to reproduce them.  F_IV6 (a path with
one kernel) and F_V6 (a path with two kernels) are built by hand, since
random search at six rows is too slow; their single MCS and the stage that
fires are checked against the oracle in the tests.
"""

from __future__ import annotations

from itertools import combinations

from .matrix import BinaryMatrix


def f_cyc4() -> BinaryMatrix:
    return BinaryMatrix.from_sets(4, [[0, 1], [1, 2], [2, 3], [3, 0]])


def f_v3() -> BinaryMatrix:
    return BinaryMatrix.from_sets(3, [[0, 1], [0, 2], [1, 2]])


def f_iv3() -> BinaryMatrix:
    return BinaryMatrix.from_sets(4, [[0, 1], [1, 2], [1, 3]])


def f_ii4() -> BinaryMatrix:
    return BinaryMatrix.from_sets(6, [[0, 1, 2], [0, 3], [1, 4], [2, 5]])


def f_nest() -> BinaryMatrix:
    return BinaryMatrix.from_sets(3, [[0], [0, 1], [0, 1, 2]])


def f_fig1(m: int) -> BinaryMatrix:
    """One column per pair of rows; every three rows form an MCS."""
    if m < 3:
        raise ValueError("fig1 needs m >= 3")
    pairs = list(combinations(range(m), 2))
    rows = [[c for c, p in enumerate(pairs) if i in p] for i in range(m)]
    return BinaryMatrix.from_sets(len(pairs), rows)


def f_fig2(k: int) -> BinaryMatrix:
    """2k columns on a cycle, one row per consecutive pair, even pairs doubled.

    Rows ``0 .. 2k-1`` are the pairs ``{i, i+1 mod 2k}``; rows ``2k ..
    3k-1`` repeat the pairs with even ``i``.  Each chordless cycle picks one
    copy of every doubled pair, giving ``2**k`` MCS.
    """
    if k < 2:
        raise ValueError("fig2 needs k >= 2")
    n = 2 * k
    cycle = [[i, (i + 1) % n] for i in range(n)]
    extra = [[i, (i + 1) % n] for i in range(0, n, 2)]
    return BinaryMatrix.from_sets(n, cycle + extra)


# name -> (n_cols, rows); each has exactly one MCS, spanning all rows
SEARCHED: dict[str, tuple[int, tuple[tuple[int, ...], ...]]] = {
    "F_III4": (6, ((1, 2), (0, 4), (0, 1, 3), (0, 1, 2, 4, 5))),
    "F_IV4": (6, ((0, 1, 3, 4), (0, 5), (1, 2, 3), (0, 1))),
    "F_V4": (6, ((0, 1, 2, 3, 4), (1, 2, 3, 4, 5), (1, 2, 5), (0, 1))),
    "F_V5": (5, ((1, 3), (0, 2, 3, 4), (0, 3), (0, 4), (0, 1, 2, 3))),
    "F_IV6": (7, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 2, 3, 4, 6))),
    "F_V6": (6, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 1, 2, 3, 5), (1, 2, 3, 4, 5))),
}


def searched(name: str) -> BinaryMatrix:
    n, rows = SEARCHED[name]
    return BinaryMatrix.from_sets(n, rows)


_SIMPLE = {
    "F_CYC4": f_cyc4,
    "F_V3": f_v3,
    "F_IV3": f_iv3,
    "F_II4": f_ii4,
    "F_NEST": f_nest,
}

# short names used on the command line
ALIASES = {
    "cyc4": "F_CYC4",
    "v3": "F_V3",
    "iv3": "F_IV3",
    "ii4": "F_II4",
    "iii4": "F_III4",
    "iv4": "F_IV4",
    "v4": "F_V4",
    "v5": "F_V5",
    "iv6": "F_IV6",
    "v6": "F_V6",
    "nest": "F_NEST",
    "fig1": "F_FIG1",
    "fig2": "F_FIG2",
}


def fixture_names() -> list[str]:
    return sorted(_SIMPLE) + ["F_FIG1", "F_FIG2"] + sorted(SEARCHED)


def fixture(name: str, *params: int) -> BinaryMatrix:
    name = ALIASES.get(name.lower(), name.upper())
    if name == "F_FIG1":
        if len(params) != 1:
            raise ValueError("F_FIG1 takes one parameter m")
        return f_fig1(params[0])
    if name == "F_FIG2":
        if len(params) != 1:
            raise ValueError("F_FIG2 takes one parameter k")
        return f_fig2(params[0])
    if params:
        raise ValueError(f"{name} takes no parameters")
    if name in _SIMPLE:
        return _SIMPLE[name]()
    if name in SEARCHED:
        return searched(name)
    raise ValueError(f"unknown fixture {name!r}")


def parse_fixture_spec(spec: str) -> BinaryMatrix:
    """``"fig2:3"`` -> ``fixture("F_FIG2", 3)``; ``"cyc4"`` -> F_CYC4."""
    name, _, rest = spec.partition(":")
    try:
        params = [int(p) for p in rest.split(",") if p] if rest else []
    except ValueError:
        raise ValueError(f"bad fixture parameters in {spec!r}") from None
    return fixture(name, *params)
