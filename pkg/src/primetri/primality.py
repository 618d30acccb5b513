"""Triangle-based primality tests, an independent oracle, and range sweeps."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt
from typing import Optional

from primetri.errors import DomainError
from primetri.modular import stream_row_mod
from primetri.triangle import check_index

# Oracle configuration.  Trial division below the switch point, a fixed
# strong-pseudoprime battery above it; the battery is deterministic for every
# n < 2**64 (the first twelve primes suffice below 3.3e24).
TRIAL_DIVISION_LIMIT = 1 << 20
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
ORACLE_MAX = 2**64 - 1

METHODS = ("theorem1", "theorem2", "oracle")


@dataclass(frozen=True)
class PrimalityVerdict:
    n: int
    method: str
    is_prime: bool
    witness: Optional[int] = None
    checked: int = 0

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise DomainError(f"unknown method {self.method!r}")
        if self.is_prime and self.witness is not None:
            raise DomainError("a prime verdict carries no witness")
        if not self.is_prime and self.method != "oracle" and (self.witness is None or self.witness < 1):
            raise DomainError("a composite triangle verdict needs a witness column >= 1")


def test_theorem1(n: int, *, full_scan: bool = False, strategy: str = "exact") -> PrimalityVerdict:
    """n is prime iff every entry of row n - 1 is divisible by n.

    For odd n the row n - 1 has even index, where K(n-1, d) = K(n-1, n-1-d),
    so scanning d <= (n - 1) / 2 decides the whole row unless ``full_scan``.
    """
    check_index("n", n, 2)
    order = "half-row" if n & 1 and not full_scan else "ascending"
    checked = 0
    for d, r in stream_row_mod(n - 1, n, order, strategy):
        checked += 1
        if r != 0:
            return PrimalityVerdict(n, "theorem1", False, d, checked)
    return PrimalityVerdict(n, "theorem1", True, None, checked)


def test_theorem2(n: int, *, full_scan: bool = False, strategy: str = "exact") -> PrimalityVerdict:
    """n is prime iff K(n, d) is 1, -1, 1, -1, ... mod n for 1 <= d <= n - 1.

    The diagonal K(n, n) is excluded.  The condition reduces to n | C(n, d),
    which is symmetric under d -> n - d, so by default only d <= n // 2 is
    scanned; the first failing column is the same either way.
    """
    check_index("n", n, 2)
    checked = 0
    stream = stream_row_mod(n, n, "ascending" if full_scan else "half-row", strategy)
    minus_one = n - 1
    for d, r in stream:
        if d == n:
            break
        checked += 1
        if r != (1 if d & 1 else minus_one):
            return PrimalityVerdict(n, "theorem2", False, d, checked)
    return PrimalityVerdict(n, "theorem2", True, None, checked)


test_theorem1.__test__ = False  # type: ignore[attr-defined]
test_theorem2.__test__ = False  # type: ignore[attr-defined]


def _strong_probable_prime(n: int, a: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def oracle_is_prime(n: int) -> bool:
    """Exact primality for 0 <= n < 2**64, independent of the triangle."""
    check_index("n", n, 0)
    if n > ORACLE_MAX:
        raise DomainError(f"oracle supports n < 2**64, got {n}")
    if n < 2:
        return False
    if n < TRIAL_DIVISION_LIMIT:
        if n % 2 == 0:
            return n == 2
        for p in range(3, isqrt(n) + 1, 2):
            if n % p == 0:
                return False
        return True
    for p in MR_BASES:
        if n % p == 0:
            return n == p
    return all(_strong_probable_prime(n, a) for a in MR_BASES)


def oracle_config() -> dict:
    return {
        "trial_division_below": TRIAL_DIVISION_LIMIT,
        "mr_bases": list(MR_BASES),
        "max_n": str(ORACLE_MAX),
    }


@dataclass(frozen=True)
class VerificationReport:
    lo: int
    hi: int
    agree_count: int
    mismatches: tuple[tuple[int, tuple[bool, bool, bool]], ...]
    elapsed: float
    primes: tuple[int, ...] = ()
    oracle: dict = field(default_factory=oracle_config)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _verify_chunk(bounds: tuple[int, int]):
    lo, hi = bounds
    agree = 0
    mismatches = []
    primes = []
    for n in range(lo, hi + 1):
        triple = (test_theorem1(n).is_prime, test_theorem2(n).is_prime, oracle_is_prime(n))
        if triple[0] == triple[1] == triple[2]:
            agree += 1
            if triple[2]:
                primes.append(n)
        else:
            mismatches.append((n, triple))
    return agree, mismatches, primes


def _chunks(lo: int, hi: int, jobs: int) -> list[tuple[int, int]]:
    # Interleave small chunks so cost (quadratic in n) spreads over workers.
    size = max(1, min(2000, (hi - lo + 1) // (jobs * 8) or 1))
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def verify_range(lo: int, hi: int, jobs: int = 1) -> VerificationReport:
    """Cross-check both triangle tests against the oracle for every n in [lo, hi].

    With ``jobs > 1`` the range is split into chunks run in worker processes;
    results are merged in ascending order, so the report does not depend on
    ``jobs``.
    """
    check_index("lo", lo, 2)
    check_index("hi", hi, 2)
    check_index("jobs", jobs, 1)
    if lo > hi:
        raise DomainError(f"empty range [{lo}, {hi}]")
    if hi > ORACLE_MAX:
        raise DomainError(f"oracle supports n < 2**64, got hi={hi}")
    start = time.perf_counter()
    if jobs == 1:
        results = [_verify_chunk((lo, hi))]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_chunk, _chunks(lo, hi, jobs)))
    agree = sum(r[0] for r in results)
    mismatches = tuple((n, t) for r in results for n, t in r[1])
    primes = tuple(p for r in results for p in r[2])
    return VerificationReport(lo, hi, agree, mismatches, time.perf_counter() - start, primes)
