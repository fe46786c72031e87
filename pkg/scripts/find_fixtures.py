"""Re-run the seeded searches behind the frozen fixtures in ``c1pmcs.fixtures``.

Each fixture is the first random matrix (seeded scan, see
``oracle.search_fixture``) with exactly one MCS, of the wanted size, on
which the named detector stage fires in the full cascade.  Prints a
``SEARCHED`` table ready to paste.

    python scripts/find_fixtures.py
"""

from __future__ import annotations

import sys

from c1pmcs.cascade import mcs_membership
from c1pmcs.detectors import Instance
from c1pmcs.oracle import search_fixture

# name -> (stage that must fire, MCS size, rows, columns range, budget)
TARGETS = {
    "F_III4": ("III_4", 4, (4, 4), (4, 7), 200_000),
    "F_IV4": ("IV_4", 4, (4, 4), (4, 7), 200_000),
    "F_V4": ("V_4", 4, (4, 4), (4, 7), 200_000),
    "F_V5": ("V_5", 5, (5, 5), (4, 8), 400_000),
}


def wants(stage: str, size: int):
    def predicate(matrix, report) -> bool:
        if len(report.mcs) != 1 or len(report.mcs[0]) != size or matrix.m != size:
            return False
        if any(row == 0 for row in matrix.rows):
            return False
        inst = Instance(matrix)
        return any(mcs_membership(matrix, r, inst).stage == stage for r in range(matrix.m))

    return predicate


def main(names: list[str]) -> None:
    for name in names or list(TARGETS):
        stage, size, m_range, n_range, budget = TARGETS[name]
        found = search_fixture(wants(stage, size), budget, seed=1, m_range=m_range, n_range=n_range)
        if found is None:
            print(f"# {name}: nothing within budget {budget}")
            continue
        print(f'    "{name}": ({found.n_cols}, {tuple(tuple(r) for r in found.as_lists())}),', flush=True)


if __name__ == "__main__":
    main(sys.argv[1:])
