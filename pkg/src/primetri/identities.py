"""Row-sum, alternating-sum and rising-diagonal (Fibonacci) identities."""

from __future__ import annotations

from dataclasses import dataclass

from primetri.errors import DomainError
from primetri.triangle import binomial, check_index, entry, row


@dataclass(frozen=True)
class IdentityReport:
    n: int
    row_sum: int
    row_sum_expected: int
    alt_sum: int
    alt_sum_expected: int

    @property
    def holds(self) -> tuple[bool, bool]:
        return self.row_sum == self.row_sum_expected, self.alt_sum == self.alt_sum_expected


def row_sum_identity(n: int) -> tuple[int, int, bool]:
    """Sum of row n against 2**n (n odd) or 2**n - 1 (n even)."""
    total = sum(row(n).entries)
    expected = 2**n if n & 1 else 2**n - 1
    return total, expected, total == expected


def alternating_sum_identity(n: int) -> tuple[int, int, bool]:
    """Sum of (-1)**(d+1) K(n, d) against n + 1."""
    total = 0
    for d, k in enumerate(row(n).entries, start=1):
        total += k if d & 1 else -k
    return total, n + 1, total == n + 1


def identity_report(n: int) -> IdentityReport:
    rs, rs_exp, _ = row_sum_identity(n)
    alt, alt_exp, _ = alternating_sum_identity(n)
    return IdentityReport(n, rs, rs_exp, alt, alt_exp)


def fib_via_diagonal(n: int) -> int:
    """F(n + 1) from the rising diagonal K(n-1, 1), K(n-2, 2), ...

    Takes the diagonal parameter n, not the Fibonacci index.  The sum needs
    a correction of +1 when n // 2 is even.
    """
    check_index("n", n, 2)
    half = n // 2
    total = sum(entry(n - d, d) for d in range(1, half + 1))
    return total + (0 if half & 1 else 1)


def fib_oracle(k: int) -> int:
    """F(k) by iteration with F(1) = F(2) = 1."""
    check_index("k", k, 1)
    a, b = 0, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return b


def fib_binomial_sum(n: int) -> int:
    """sum_{d=0}^{n//2} C(n - d, d), which equals F(n + 1)."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return sum(binomial(n - d, d) for d in range(n // 2 + 1))
