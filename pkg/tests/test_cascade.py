from __future__ import annotations

import json
import random

import pytest

from helpers import planted_matrix

from c1pmcs.cascade import STAGE_NAMES, classify_certificate, mcs_membership, membership_all
from c1pmcs.fixtures import f_cyc4, f_fig1, f_fig2, f_ii4, f_nest, f_v3, fixture, fixture_names
from c1pmcs.oracle import enumerate_mcs
from c1pmcs.verify import ClassificationError, explain, verify_mcs


def test_stage_order():
    assert STAGE_NAMES == (
        "I", "size3", "II_4", "III_4", "IV_4", "IV_kernel", "IV_nonkernel",
        "V_4", "V_5", "V_kernel", "V_nonkernel",
    )  # fmt: skip


def test_cyc4():
    ans = mcs_membership(f_cyc4(), 0)
    assert ans.member and ans.certificate.form == "I" and ans.stage == "I"
    assert ans.stage_trace == (("I", True),)


def test_nest_trace_is_full():
    for r in range(3):
        ans = mcs_membership(f_nest(), r)
        assert not ans.member and ans.certificate is None
        assert [n for n, _ in ans.stage_trace] == list(STAGE_NAMES)
        assert not any(hit for _, hit in ans.stage_trace)


def test_fig1_5():
    for ans in membership_all(f_fig1(5)):
        assert ans.member and ans.certificate.form == "V" and len(ans.certificate.rows) == 3


def test_row_out_of_range():
    with pytest.raises(IndexError):
        mcs_membership(f_cyc4(), 4)


def test_verify_examples():
    assert verify_mcs(f_cyc4(), range(4))
    assert not verify_mcs(f_cyc4(), [0, 1, 2])
    assert verify_mcs(f_fig2(2), [0, 1, 2, 3])
    assert not verify_mcs(f_cyc4(), [])
    v = explain(f_fig1(4), range(4))
    assert not v.is_mcs and v.conflicting_subset == (0, 1, 2)
    v = explain(f_cyc4(), [0, 1, 2])
    assert not v.is_mcs and v.witness is not None


def test_classify_examples():
    assert classify_certificate(f_cyc4(), range(4)) == ("I", [])
    assert classify_certificate(f_ii4(), range(4)) == ("II", [0])
    form, ker = classify_certificate(f_v3(), range(3))
    assert form == "V" and ker == [0, 1, 2]
    with pytest.raises(ValueError):
        classify_certificate(f_cyc4(), [0, 1, 2])


def test_fixture_suite_labels():
    for name in fixture_names():
        m = fixture(name, 3) if name in ("F_FIG1", "F_FIG2") else fixture(name)
        rep = enumerate_mcs(m)
        for ans in membership_all(m):
            assert ans.member == rep.membership[ans.row]
            if ans.member:
                assert classify_certificate(m, ans.certificate.rows)[0] == ans.certificate.form


@pytest.mark.parametrize("seed", range(6))
def test_planted_agree_with_oracle(seed):
    rng = random.Random(100 + seed)
    for _ in range(40):
        m = planted_matrix(rng)
        rep = enumerate_mcs(m)
        for ans in membership_all(m):
            assert ans.member == rep.membership[ans.row]
            names = [n for n, _ in ans.stage_trace]
            assert names == list(STAGE_NAMES[: len(names)])
            # only the last stage may hit
            assert not any(hit for _, hit in ans.stage_trace[:-1])
            if ans.member:
                assert ans.stage_trace[-1][1]
                assert classify_certificate(m, ans.certificate.rows)[0] == ans.certificate.form
            else:
                assert len(names) == len(STAGE_NAMES)


def test_json_schema():
    ans = mcs_membership(fixture("F_IV6"), 5)
    d = json.loads(ans.to_json())
    assert list(d) == ["row", "member", "mcs", "form", "role", "witness_columns", "stages"]
    assert d["mcs"] == sorted(d["mcs"]) and d["witness_columns"] == [6]
    assert d["stages"][-1] == {"name": "IV_kernel", "hit": True}
    d = json.loads(mcs_membership(f_cyc4(), 0).to_json())
    assert "witness_columns" not in d
    d = json.loads(mcs_membership(f_nest(), 0).to_json())
    assert list(d) == ["row", "member", "stages"] and d["member"] is False


def test_threads_do_not_change_answers():
    m = fixture("F_V6")
    assert membership_all(m, threads=4) == membership_all(m)


def test_classification_error_is_value_error():
    assert issubclass(ClassificationError, ValueError)
