"""Acceptance gate: one pass/fail line per criterion.

    pytest tests/test_acceptance.py -v      (lines appear in the log)
    python tests/test_acceptance.py         (just the eight lines)
"""

from __future__ import annotations

import hashlib
import math
import random
import sys
import time
from functools import lru_cache
from itertools import product
from math import comb

import pytest

from c1pmcs.c1p import is_c1p, is_c1p_bruteforce, witness_is_valid
from c1pmcs.cascade import STAGE_NAMES, classify_certificate, membership_all
from c1pmcs.fixtures import f_fig1, f_fig2, fixture, fixture_names
from c1pmcs.matrix import BinaryMatrix
from c1pmcs.oracle import enumerate_mcs, random_matrix
from c1pmcs.verify import verify_mcs

N_RANDOM = 300
DENSITIES = (0.3, 0.4, 0.5, 0.6)


def suite() -> list[BinaryMatrix]:
    """The fixed random suite: instance i uses seed i."""
    out = []
    for i in range(N_RANDOM):
        rng = random.Random(i)
        out.append(random_matrix(rng.randint(3, 9), rng.randint(3, 7), DENSITIES[i % 4], i))
    return out


def suite_json(threads: int) -> str:
    lines = []
    for m in suite():
        lines.append(enumerate_mcs(m).to_json())
        lines.extend(a.to_json() for a in membership_all(m, threads=threads))
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def suite_answers():
    return [(m, enumerate_mcs(m), membership_all(m)) for m in suite()]


def criterion_1():
    t = time.perf_counter()
    rows = misses = 0
    for m, rep, answers in suite_answers():
        for a in answers:
            rows += 1
            misses += a.member != rep.membership[a.row]
    dt = time.perf_counter() - t
    return misses == 0, f"{N_RANDOM} matrices, {rows} rows, {misses} mismatches, {dt:.1f}s"


def criterion_2():
    certs = bad = 0
    for m, _, answers in suite_answers():
        for a in answers:
            if a.certificate is None:
                continue
            certs += 1
            ok = verify_mcs(m, a.certificate.rows) and a.row in a.certificate.rows
            ok = ok and classify_certificate(m, a.certificate.rows)[0] == a.certificate.form
            bad += not ok
    return bad == 0 and certs > 0, f"{certs} certificates, {bad} unsound or mislabelled"


def criterion_3():
    t = time.perf_counter()
    notes, ok = [], True
    for m in (3, 4, 5):
        mat = f_fig1(m)
        count = len(enumerate_mcs(mat).mcs)
        answers = membership_all(mat)
        good = all(a.member and a.certificate.form == "V" and len(a.certificate.rows) == 3 for a in answers)
        ok = ok and count == comb(m, 3) and good
        notes.append(f"m={m}: {count} MCS")
    dt = time.perf_counter() - t
    return ok and dt < 10, ", ".join(notes) + f", all rows size-3 form V, {dt:.2f}s"


def criterion_4():
    t = time.perf_counter()
    notes, ok = [], True
    for k in (2, 3):
        mat = f_fig2(k)
        rep = enumerate_mcs(mat)
        forms = {classify_certificate(mat, s)[0] for s in rep.mcs}
        answers = membership_all(mat)
        good = all(a.member and a.certificate.form == "I" for a in answers)
        ok = ok and len(rep.mcs) == 2**k and forms == {"I"} and all(rep.membership) and good
        notes.append(f"k={k}: {len(rep.mcs)} MCS")
    dt = time.perf_counter() - t
    return ok and dt < 30, ", ".join(notes) + f", all form I, every row a member, {dt:.2f}s"


def _agree(m: BinaryMatrix) -> bool:
    res = is_c1p(m)
    if res.holds != is_c1p_bruteforce(m, None).holds:
        return False
    return not res.holds or witness_is_valid(m, None, res.witness)


def criterion_5():
    t = time.perf_counter()
    total = bad = 0
    for rows_n in range(1, 5):
        for n in range(1, 5):
            for rows in product(range(1 << n), repeat=rows_n):
                total += 1
                bad += not _agree(BinaryMatrix(n, rows))
    rng = random.Random(2024)
    for i in range(1000):
        m = random_matrix(rng.randint(1, 10), rng.randint(1, 6), rng.choice(DENSITIES), 10_000 + i)
        total += 1
        bad += not _agree(m)
    dt = time.perf_counter() - t
    return bad == 0 and dt < 120, f"{total} matrices (exhaustive m,n<=4 plus 1000 random), {bad} disagreements, {dt:.1f}s"


def criterion_6():
    fired = set()
    for name in fixture_names():
        mat = fixture(name, 3) if name in ("F_FIG1", "F_FIG2") else fixture(name)
        fired.update(a.stage for a in membership_all(mat) if a.member)
    missing = [s for s in STAGE_NAMES if s not in fired]
    return not missing, f"{len(STAGE_NAMES) - len(missing)}/{len(STAGE_NAMES)} stages fire" + (
        f", missing {missing}" if missing else ""
    )


def _open_fig2(k: int) -> BinaryMatrix:
    """F_FIG2 with the cycle cut open: C1P, so every stage runs for every row."""
    n = 2 * k
    path = [[i, i + 1] for i in range(n - 1)] + [[n - 1]]
    return BinaryMatrix.from_sets(n, path + [[i, i + 1] for i in range(0, n - 1, 2)])


def _timed(mat: BinaryMatrix) -> float:
    best = math.inf
    for _ in range(3):
        t = time.perf_counter()
        membership_all(mat)
        best = min(best, time.perf_counter() - t)
    return best


def criterion_7():
    sizes = (15, 30, 60)
    ok, notes = True, []
    for label, family in (("fig2", f_fig2), ("open", _open_fig2)):
        times = [_timed(family(m // 3)) for m in sizes]
        slope = math.log(times[-1] / times[0]) / math.log(sizes[-1] / sizes[0])
        ok = ok and times[-1] < 60 and slope < 8
        notes.append(f"{label}: " + "/".join(f"{x:.3f}" for x in times) + f"s, slope {slope:.2f}")
    return ok, "m=15/30/60 all rows, " + "; ".join(notes)


def criterion_8():
    digests = [hashlib.sha256(suite_json(th).encode()).hexdigest() for th in (1, 1, 4)]
    return len(set(digests)) == 1, f"runs (threads 1, 1, 4) sha256 {digests[0][:16]}, {len(set(digests))} distinct"


CRITERIA = [
    (1, "oracle equivalence", criterion_1),
    (2, "certificate soundness", criterion_2),
    (3, "all-triples family fig1", criterion_3),
    (4, "doubled-cycle family fig2", criterion_4),
    (5, "C1P engine agreement", criterion_5),
    (6, "per-form coverage", criterion_6),
    (7, "scaling smoke test", criterion_7),
    (8, "determinism", criterion_8),
]


def report(number: int, title: str, fn) -> bool:
    ok, detail = fn()
    print(f"CRITERION {number} [{title}]: {'PASS' if ok else 'FAIL'} - {detail}", flush=True)
    return ok


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn, capsys):
    with capsys.disabled():
        print()
        ok = report(number, title, fn)
    assert ok


if __name__ == "__main__":
    results = [report(*c) for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
