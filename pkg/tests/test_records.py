import json

import pytest
from hypothesis import given, strategies as st

from primetri import DomainError, identity_report, row, row_mod, test_theorem1, verify_range
from primetri.records import (
    OutputRecord,
    fib_record,
    identity_record,
    row_record,
    triangle_record,
    verdict_record,
    verify_record,
)
from primetri.triangle import rows


def test_row_json_shape():
    text = row_record(row(3)).to_json()
    assert text == '{"schema_version":"1","kind":"row","n":3,"mod":null,"entries":["4","2","2"]}'
    rec = json.loads(row_record(row_mod(10, 11)).to_json())
    assert rec["mod"] == 11 and rec["kind"] == "residue-row"


def test_big_values_are_strings():
    rec = json.loads(row_record(row(200)).to_json())
    assert all(isinstance(e, str) for e in rec["entries"])
    assert int(rec["entries"][99]) == row(200).at(100)


def test_row_csv():
    assert row_record(row(3)).to_csv() == "4,2,2\n"
    assert row_record(row(1), pad=4).to_csv() == "2,0,0,0\n"
    with pytest.raises(DomainError):
        row_record(row(5), pad=3)


def _roundtrip(rec, kind):
    for fmt in ("json", "csv"):
        if fmt == "csv" and kind in ("verify-report", "bench-report"):
            continue
        text = rec.render(fmt)
        if fmt == "json":
            again = OutputRecord.from_json(text)
        else:
            again = OutputRecord.from_csv(kind, text)
        assert again.render(fmt) == text


@given(st.integers(1, 120), st.one_of(st.none(), st.integers(2, 1000)))
def test_row_roundtrip(n, m):
    r = row(n) if m is None else row_mod(n, m)
    rec = row_record(r)
    _roundtrip(rec, rec.kind)


@given(st.integers(2, 3000), st.booleans())
def test_verdict_roundtrip(n, witness):
    rec = verdict_record(test_theorem1(n), witness=witness)
    _roundtrip(rec, "verdict")
    assert OutputRecord.from_csv("verdict", rec.to_csv()) == rec


@given(st.integers(1, 300))
def test_identity_roundtrip(n):
    rec = identity_record(identity_report(n))
    _roundtrip(rec, "identity")
    assert OutputRecord.from_csv("identity", rec.to_csv()) == rec


@given(st.integers(2, 300))
def test_fib_roundtrip(n):
    rec = fib_record(n)
    _roundtrip(rec, "fib")
    assert OutputRecord.from_csv("fib", rec.to_csv()) == rec


def test_triangle_and_report_roundtrip():
    _roundtrip(triangle_record(list(rows(9)), pad=9), "triangle")
    _roundtrip(verify_record(verify_range(2, 60)), "verify-report")


def test_unknown_kind_and_schema():
    with pytest.raises(DomainError):
        OutputRecord("nonsense", {})
    with pytest.raises(DomainError):
        OutputRecord.from_json('{"kind":"row"}')
    with pytest.raises(DomainError):
        OutputRecord("verify-report", {}).to_csv()
