"""Random instances biased towards the larger forms IV and V.

Uniform random matrices rarely contain an MCS of size 6 or more.  Here a
path of 2-column rows gets one kernel ("net", form IV) or two ("tent",
form V); then a few short interval rows are added, entries are flipped at
random, and rows and columns are shuffled.
"""

from __future__ import annotations

import random

from c1pmcs.matrix import BinaryMatrix


def planted_matrix(rng: random.Random, flip: float = 0.15, max_rows: int = 13) -> BinaryMatrix:
    while True:
        p = rng.randint(2, 6)
        path = [{i, i + 1} for i in range(p)]
        x = p + 1
        if rng.random() < 0.5:
            rows = path + [set(range(0, p)) | {x}, set(range(1, p + 1)) | {x}]
        else:
            rows = path + [set(range(1, p)) | {x}]
        n = p + 2 + rng.randint(0, 2)
        for _ in range(rng.randint(0, 3)):
            a, length = rng.randrange(n), rng.randint(1, 3)
            rows.append({(a + i) % n for i in range(length)})
        for r in rows:
            if rng.random() < flip:
                r.symmetric_difference_update({rng.randrange(n)})
        rows = [r for r in rows if r] or [{0}]
        if len(rows) > max_rows:
            continue
        rng.shuffle(rows)
        perm = list(range(n))
        rng.shuffle(perm)
        return BinaryMatrix.from_sets(n, [[perm[c] for c in r] for r in rows])
