"""Exit criteria.  A per-criterion PASS/FAIL summary is printed at the end of the run.

The oracle sweep defaults to n <= 10**4, the floor permitted on constrained
hardware; set PRIMETRI_SWEEP_HI=100000 for the full range.
"""

import json
import os
import random
import time
from math import comb

import pytest

from primetri import (
    alternating_sum_identity,
    expansion_coeffs,
    fib_oracle,
    fib_via_diagonal,
    oracle_is_prime,
    row,
    row_sum_identity,
    test_theorem1,
    test_theorem2,
    verify_range,
)
from primetri.cli import main
from primetri.triangle import rows

SWEEP_HI = int(os.environ.get("PRIMETRI_SWEEP_HI", "10000"))
CARMICHAEL = [561, 1105, 1729, 2465, 2821, 6601, 8911, 10585, 15841, 29341, 41041, 46657, 52633, 62745, 63973, 75361]


@pytest.mark.criterion("AC1 golden 13x13 matrix from `triangle 13 --pad 13` (< 1 s)")
def test_ac1_golden_matrix(capsys, fixtures_dir):
    t0 = time.perf_counter()
    assert main(["triangle", "13", "--pad", "13"]) == 0
    elapsed = time.perf_counter() - t0
    out = capsys.readouterr().out
    lines = out.splitlines(keepends=True)
    assert len(lines) == 13
    # The paper prints rows 1..12 and marks row 13 with asterisks.
    assert "".join(lines[:12]).encode() == (fixtures_dir / "paper_matrix.csv").read_bytes()
    expected_13 = [comb(13, d) + (-1) ** (d + 1) for d in range(1, 14)]
    assert lines[12] == ",".join(map(str, expected_13)) + "\n"
    assert elapsed < 1.0


@pytest.mark.criterion("AC2 classification table n = 2..13 for both theorems (< 1 s)")
def test_ac2_classification():
    paper = {2: True, 3: True, 4: False, 5: True, 6: False, 7: True, 8: False,
             9: False, 10: False, 11: True, 12: False, 13: True}
    t0 = time.perf_counter()
    for n, is_prime in paper.items():
        assert test_theorem1(n).is_prime is is_prime, n
        assert test_theorem2(n).is_prime is is_prime, n
    assert time.perf_counter() - t0 < 1.0


@pytest.mark.criterion("AC3 worked identities: row sums 128 / 1023, alternating sum 11, F(8) = 21")
def test_ac3_worked_identities():
    assert row_sum_identity(7)[0] == 128
    assert row_sum_identity(10)[0] == 1023
    assert alternating_sum_identity(10)[0] == 11
    assert fib_via_diagonal(7) == 21


@pytest.mark.criterion(f"AC4 oracle equivalence sweep 2..{SWEEP_HI}, Carmichael numbers included")
def test_ac4_oracle_sweep():
    assert SWEEP_HI >= 10_000
    rep = verify_range(2, SWEEP_HI)
    assert rep.mismatches == ()
    assert rep.agree_count == SWEEP_HI - 1
    primes = set(rep.primes)
    for n in CARMICHAEL:
        if n <= SWEEP_HI:
            assert n not in primes
            assert not test_theorem1(n).is_prime and not test_theorem2(n).is_prime


@pytest.mark.criterion("AC5 construction equivalence: recurrence n <= 512, expansion n <= 64")
def test_ac5_construction_equivalence():
    for r in rows(512):
        assert r.entries == row(r.n).entries
    for n in range(1, 65):
        assert expansion_coeffs(n) == list(row(n).entries)


@pytest.mark.criterion("AC6 identity sweeps: Lemmas n <= 512, Fibonacci diagonal 2 <= n <= 300")
def test_ac6_identity_sweeps():
    for n in range(1, 513):
        assert row_sum_identity(n)[2]
        assert alternating_sum_identity(n)[2]
    for n in range(2, 301):
        assert fib_via_diagonal(n) == fib_oracle(n + 1)


@pytest.mark.criterion("AC7 witness soundness on 1000 random composites < 10^6")
def test_ac7_witness_soundness():
    rng = random.Random(7)
    composites = set()
    while len(composites) < 1000:
        n = rng.randrange(4, 10**6)
        if not oracle_is_prime(n):
            composites.add(n)
    for n in sorted(composites):
        v = test_theorem1(n)
        assert not v.is_prime and v.witness is not None
        # K(n-1, d) = 0 mod n  <=>  C(n-1, d) = (-1)^d mod n
        for d in range(1, v.witness):
            assert (comb(n - 1, d) - (-1) ** d) % n == 0, (n, d)
        assert (comb(n - 1, v.witness) - (-1) ** v.witness) % n != 0, n


@pytest.mark.criterion("AC8 bench report well-formed; theorem1 cost strictly increasing across decades")
def test_ac8_bench(tmp_path):
    out = tmp_path / "bench.json"
    assert main(["bench", "--max", "10000", "--samples", "4", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["schema_version"] == "1" and rep["kind"] == "bench-report"
    assert set(rep["methods"]) == {"theorem1", "theorem2", "oracle"}
    for entries in rep["methods"].values():
        for e in entries:
            assert isinstance(e["seconds"], float) and e["seconds"] >= 0
            assert int(e["n"]).bit_length() == e["bits"]
    decades = [int(a) for a in rep["anchors"]]
    assert decades == [97, 997, 9973]
    by_n = {int(e["n"]): e["seconds"] for e in rep["methods"]["theorem1"] if e["group"] == "anchor"}
    times = [by_n[n] for n in decades]
    assert all(a < b for a, b in zip(times, times[1:])), times
