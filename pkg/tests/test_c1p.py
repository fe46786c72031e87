from __future__ import annotations

import random
from itertools import combinations, product

import pytest

from c1pmcs.c1p import OracleBoundError, c1p_holds, is_c1p, is_c1p_bruteforce, witness_is_valid
from c1pmcs.fixtures import f_cyc4, f_iv3, f_nest, f_v3
from c1pmcs.matrix import BinaryMatrix
from c1pmcs.oracle import random_matrix


def test_examples():
    res = is_c1p(f_nest())
    assert res.holds and witness_is_valid(f_nest(), None, res.witness)
    assert not is_c1p(f_v3()).holds
    for rows in combinations(range(4), 3):
        assert is_c1p(f_cyc4(), rows).holds
    assert not is_c1p(f_cyc4()).holds


def test_bruteforce_examples():
    assert not is_c1p_bruteforce(f_iv3(), range(3)).holds
    assert is_c1p_bruteforce(f_iv3(), []).holds
    assert is_c1p_bruteforce(f_iv3(), [1]).holds


def test_bruteforce_bound():
    m = BinaryMatrix.from_sets(9, [[0, 8]])
    with pytest.raises(OracleBoundError, match="8"):
        is_c1p_bruteforce(m, [0])
    assert is_c1p_bruteforce(m, [0], max_cols=9).holds


def test_exhaustive_small():
    # every matrix with 3 rows over 3 columns, every row subset
    for rows in product(range(8), repeat=3):
        m = BinaryMatrix(3, rows)
        for k in range(4):
            for s in combinations(range(3), k):
                assert c1p_holds(m, s) == is_c1p_bruteforce(m, s).holds


@pytest.mark.parametrize("seed", range(200))
def test_agrees_with_bruteforce(seed):
    rng = random.Random(seed)
    m = random_matrix(rng.randint(1, 8), rng.randint(1, 6), rng.choice([0.3, 0.5, 0.7]), seed)
    res = is_c1p(m)
    assert res.holds == is_c1p_bruteforce(m, None).holds
    if res.holds:
        assert witness_is_valid(m, None, res.witness)
    else:
        assert res.witness is None


@pytest.mark.parametrize("seed", range(50))
def test_hereditary_and_column_deletion(seed):
    m = random_matrix(6, 6, 0.5, seed)
    if not c1p_holds(m):
        return
    for k in range(6):
        for s in combinations(range(6), k):
            assert c1p_holds(m, s)
    # deleting a column keeps C1P
    for j in range(m.n_cols):
        mask = ~(1 << j)
        rows = [((r & mask) & ((1 << j) - 1)) | ((r & mask) >> (j + 1) << j) for r in m.rows]
        assert c1p_holds(BinaryMatrix(m.n_cols - 1 or 1, tuple(rows)))


def test_witness_is_column_permutation():
    m = BinaryMatrix.from_sets(6, [[4, 1], [1, 5], [5, 0], [2]])
    res = is_c1p(m)
    assert res.holds and sorted(res.witness) == list(range(6))
    assert witness_is_valid(m, None, res.witness)
    assert is_c1p(m, witness=False).witness is None
