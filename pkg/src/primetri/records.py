"""Serialization of rows, verdicts and reports to CSV and JSON.

Every big integer is written as a decimal string in JSON.  Output is
compact and keeps field order, so parsing a record and serializing it again
reproduces the original bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Callable

from primetri.errors import DomainError
from primetri.identities import IdentityReport, fib_oracle, fib_via_diagonal
from primetri.modular import ResidueRow
from primetri.primality import PrimalityVerdict, VerificationReport
from primetri.triangle import TriangleRow

SCHEMA_VERSION = "1"

KINDS = ("row", "residue-row", "triangle", "verdict", "identity", "fib", "verify-report", "bench-report")

# Kinds with a single flat line of values in CSV (preceded by a header).
_FLAT_FIELDS: dict[str, dict[str, Callable[[str], Any]]] = {
    "verdict": {
        "n": str,
        "method": str,
        "is_prime": lambda s: s == "true",
        "witness": lambda s: int(s) if s else None,
        "checked": int,
    },
    "identity": {
        "n": int,
        "row_sum": str,
        "row_sum_expected": str,
        "row_sum_holds": lambda s: s == "true",
        "alt_sum": str,
        "alt_sum_expected": str,
        "alt_sum_holds": lambda s: s == "true",
    },
    "fib": {
        "n": int,
        "fib_index": int,
        "value": str,
        "expected": str,
        "holds": lambda s: s == "true",
    },
}


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass(frozen=True)
class OutputRecord:
    kind: str
    payload: dict

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"unknown record kind {self.kind!r}")

    def to_json(self) -> str:
        return json.dumps(
            {"schema_version": SCHEMA_VERSION, "kind": self.kind, **self.payload},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        data = json.loads(text)
        if data.pop("schema_version", None) != SCHEMA_VERSION:
            raise DomainError("missing or unsupported schema_version")
        kind = data.pop("kind")
        return cls(kind, data)

    def to_csv(self) -> str:
        if self.kind in ("row", "residue-row"):
            return ",".join(self.payload["entries"]) + "\n"
        if self.kind == "triangle":
            return "".join(",".join(r) + "\n" for r in self.payload["rows"])
        if self.kind in _FLAT_FIELDS:
            keys = list(self.payload)
            return ",".join(keys) + "\n" + ",".join(_csv_cell(self.payload[k]) for k in keys) + "\n"
        raise DomainError(f"{self.kind} records have no CSV form")

    @classmethod
    def from_csv(cls, kind: str, text: str) -> "OutputRecord":
        lines = text.splitlines()
        if kind in ("row", "residue-row"):
            (line,) = lines
            entries = line.split(",")
            return cls(kind, {"n": len(entries), "mod": None, "entries": entries})
        if kind == "triangle":
            return cls(kind, {"rows": [line.split(",") for line in lines]})
        if kind in _FLAT_FIELDS:
            header, values = lines
            fields = _FLAT_FIELDS[kind]
            return cls(kind, {k: fields[k](v) for k, v in zip(header.split(","), values.split(","))})
        raise DomainError(f"{kind} records have no CSV form")

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        raise DomainError(f"unknown format {fmt!r}")


def row_record(r: TriangleRow | ResidueRow, pad: int | None = None) -> OutputRecord:
    if isinstance(r, ResidueRow):
        values, kind, mod = r.residues, "residue-row", r.m
    else:
        values, kind, mod = r.entries, "row", None
    if pad is not None:
        if pad < r.n:
            raise DomainError(f"cannot pad row {r.n} to width {pad}")
        values = tuple(values) + (0,) * (pad - r.n)
    return OutputRecord(kind, {"n": r.n, "mod": mod, "entries": [str(v) for v in values]})


def triangle_record(rows: list[TriangleRow | ResidueRow], pad: int | None = None) -> OutputRecord:
    return OutputRecord("triangle", {"rows": [row_record(r, pad).payload["entries"] for r in rows]})


def verdict_record(v: PrimalityVerdict, witness: bool = False) -> OutputRecord:
    payload: dict = {"n": str(v.n), "method": v.method, "is_prime": v.is_prime}
    if witness:
        payload["witness"] = v.witness
    payload["checked"] = v.checked
    return OutputRecord("verdict", payload)


def identity_record(rep: IdentityReport) -> OutputRecord:
    rs_ok, alt_ok = rep.holds
    return OutputRecord(
        "identity",
        {
            "n": rep.n,
            "row_sum": str(rep.row_sum),
            "row_sum_expected": str(rep.row_sum_expected),
            "row_sum_holds": rs_ok,
            "alt_sum": str(rep.alt_sum),
            "alt_sum_expected": str(rep.alt_sum_expected),
            "alt_sum_holds": alt_ok,
        },
    )


def fib_record(n: int) -> OutputRecord:
    value = fib_via_diagonal(n)
    expected = fib_oracle(n + 1)
    return OutputRecord(
        "fib",
        {"n": n, "fib_index": n + 1, "value": str(value), "expected": str(expected), "holds": value == expected},
    )


def verify_record(rep: VerificationReport, jobs: int = 1) -> OutputRecord:
    return OutputRecord(
        "verify-report",
        {
            "lo": str(rep.lo),
            "hi": str(rep.hi),
            "agree_count": rep.agree_count,
            "mismatch_count": len(rep.mismatches),
            "mismatches": [
                {"n": str(n), "theorem1": t1, "theorem2": t2, "oracle": o} for n, (t1, t2, o) in rep.mismatches
            ],
            "prime_count": len(rep.primes),
            "primes": [str(p) for p in rep.primes],
            "jobs": jobs,
            "elapsed": rep.elapsed,
            "oracle": rep.oracle,
        },
    )
