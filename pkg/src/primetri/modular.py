"""Residues of triangle entries modulo a machine-word modulus.

The default ``exact`` strategy carries C(n, d) as an exact big integer and
reduces after each step.  Dividing by d is not invertible modulo a composite
m, and composite moduli are exactly what the primality tests must handle, so
the carried value cannot live in Z/m.  The ``additive`` strategy builds the
residues from additions alone and serves as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from primetri.errors import DomainError
from primetri.triangle import check_index, check_row_limit, sign

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _bigint = int

MAX_MODULUS = 2**64 - 1

ORDERS = ("ascending", "half-row")
STRATEGIES = ("exact", "additive")


def check_modulus(m: int) -> None:
    check_index("m", m, 2)
    if m > MAX_MODULUS:
        raise DomainError(f"modulus {m} exceeds the machine-word limit")


def scan_limit(n: int, order: str) -> int:
    """Last column visited for row ``n`` under a scan order."""
    if order == "ascending":
        return n
    if order == "half-row":
        return n // 2
    raise DomainError(f"unknown scan order {order!r}; expected one of {ORDERS}")


class ResidueStream:
    """Lazy iterator of ``(d, K(n, d) mod m)`` carrying the exact C(n, d).

    ``steps`` counts big-integer multiply/divide steps and ``max_d`` is the
    largest column whose binomial has been computed, so callers can observe
    that consuming k items never touches C(n, d) for d > k.
    """

    def __init__(self, n: int, m: int, order: str = "ascending") -> None:
        check_index("n", n)
        check_modulus(m)
        check_row_limit(n)
        self.n = n
        self.m = m
        self.order = order
        self.stop = scan_limit(n, order)
        self.d = 0
        self.value = _bigint(1)  # C(n, 0)
        self.steps = 0

    @property
    def max_d(self) -> int:
        return self.d

    def __iter__(self) -> "ResidueStream":
        return self

    def __next__(self) -> tuple[int, int]:
        if self.d >= self.stop:
            raise StopIteration
        d = self.d + 1
        self.value = self.value * (self.n - d + 1) // d
        self.steps += 1
        self.d = d
        return d, int((self.value + sign(d)) % self.m)


class AdditiveResidueStream:
    """Lazy iterator of residues using additions mod m only.

    Column d of Pascal's triangle over rows 0..n is the running prefix sum of
    column d - 1 (hockey-stick identity), so each column costs O(n) word
    additions and memory stays at one column of n + 1 residues.
    """

    def __init__(self, n: int, m: int, order: str = "ascending") -> None:
        check_index("n", n)
        check_modulus(m)
        check_row_limit(n)
        self.n = n
        self.m = m
        self.order = order
        self.stop = scan_limit(n, order)
        self.d = 0
        self.column = [1 % m] * (n + 1)  # C(r, 0) for r = 0..n
        self.steps = 0

    @property
    def max_d(self) -> int:
        return self.d

    def __iter__(self) -> "AdditiveResidueStream":
        return self

    def __next__(self) -> tuple[int, int]:
        if self.d >= self.stop:
            raise StopIteration
        m = self.m
        prev = self.column
        nxt = [0] * (self.n + 1)
        acc = 0
        # C(r, d) = sum_{j < r} C(j, d - 1)
        for r in range(1, self.n + 1):
            acc += prev[r - 1]
            if acc >= m:
                acc -= m
            nxt[r] = acc
        self.steps += self.n
        self.column = nxt
        self.d += 1
        return self.d, (nxt[self.n] + sign(self.d)) % m


def stream_row_mod(
    n: int, m: int, order: str = "ascending", strategy: str = "exact"
) -> ResidueStream | AdditiveResidueStream:
    """Residues K(n, d) mod m in scan order; ``half-row`` stops at d = n // 2."""
    if order not in ORDERS:
        raise DomainError(f"unknown scan order {order!r}; expected one of {ORDERS}")
    if strategy == "exact":
        return ResidueStream(n, m, order)
    if strategy == "additive":
        return AdditiveResidueStream(n, m, order)
    raise DomainError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


@dataclass(frozen=True)
class ResidueRow:
    n: int
    m: int
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        check_index("n", self.n)
        check_modulus(self.m)
        if len(self.residues) != self.n:
            raise DomainError(f"residue row {self.n} must have {self.n} entries")
        if any(not 0 <= r < self.m for r in self.residues):
            raise DomainError(f"residues must lie in [0, {self.m})")


def row_mod(n: int, m: int, strategy: str = "exact") -> ResidueRow:
    return ResidueRow(n, m, tuple(r for _, r in stream_row_mod(n, m, "ascending", strategy)))


def entry_mod(n: int, d: int, m: int) -> int:
    """K(n, d) mod m; zero above the diagonal."""
    check_index("n", n)
    check_index("d", d)
    check_modulus(m)
    if d > n:
        return 0
    d_eff = min(d, n - d)
    c = _bigint(1)
    for k in range(1, d_eff + 1):
        c = c * (n - k + 1) // k
    return int((c + sign(d)) % m)
