"""Exact construction of triangle rows.

Rows are 1-based in both the row index ``n`` and the column index ``d``;
there is no stored ``d = 0`` column.  Three independent constructions are
provided (closed form, recurrence, polynomial expansion) and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from primetri.errors import DomainError

# Maximum row length accepted anywhere in the package.  Exact rows cost
# O(n^2) bits, so absurd inputs fail fast instead of exhausting memory.
ROW_LIMIT = 1_000_000


def check_index(name: str, value: int, minimum: int = 1) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")


def check_row_limit(n: int) -> None:
    if n > ROW_LIMIT:
        raise DomainError(f"row index {n} exceeds the row length limit {ROW_LIMIT}")


def sign(d: int) -> int:
    """The correction term (-1)**(d + 1): +1 for odd d, -1 for even d."""
    return 1 if d & 1 else -1


def binomial(n: int, d: int) -> int:
    """C(n, d) via C(n, k) = C(n, k-1) * (n-k+1) / k, every division exact."""
    check_index("n", n, 0)
    check_index("d", d, 0)
    if d > n:
        raise DomainError(f"binomial requires d <= n, got n={n}, d={d}")
    d = min(d, n - d)
    c = 1
    for k in range(1, d + 1):
        c = c * (n - k + 1) // k
    return c


def entry(n: int, d: int) -> int:
    """K(n, d); zero above the diagonal (d > n)."""
    check_index("n", n)
    check_index("d", d)
    if d > n:
        return 0
    # C(n, d) >= 1 for d <= n, so the -1 for even d never goes negative.
    return binomial(n, d) + sign(d)


@dataclass(frozen=True)
class TriangleRow:
    """Row ``n`` of the triangle; ``entries[d - 1] == K(n, d)``."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        check_index("n", self.n)
        if len(self.entries) != self.n:
            raise DomainError(f"row {self.n} must have {self.n} entries, got {len(self.entries)}")
        if any(e < 0 for e in self.entries):
            raise DomainError("triangle entries are nonnegative")

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def at(self, d: int) -> int:
        """1-based column access with zero padding past the diagonal."""
        check_index("d", d)
        return self.entries[d - 1] if d <= self.n else 0

    def padded(self, width: int) -> tuple[int, ...]:
        if width < self.n:
            raise DomainError(f"cannot pad row {self.n} to width {width}")
        return self.entries + (0,) * (width - self.n)


def row(n: int) -> TriangleRow:
    """Row ``n`` from the closed form, carrying C(n, d) incrementally."""
    check_index("n", n)
    check_row_limit(n)
    entries = []
    c = 1
    for d in range(1, n + 1):
        c = c * (n - d + 1) // d
        entries.append(c + sign(d))
    return TriangleRow(n, tuple(entries))


def next_row(prev: TriangleRow) -> TriangleRow:
    """Row ``prev.n + 1`` from the additive recurrence alone (no binomials).

    K(n+1, d) = K(n, d) + K(n, d-1) - (-1)**d for 2 <= d <= n, with the
    first column n + 2 and the diagonal 2 or 0 by parity.
    """
    n = prev.n
    check_row_limit(n + 1)
    e = prev.entries
    out = [n + 2]
    for d in range(2, n + 1):
        # -(-1)**d is +1 for odd d and -1 for even d
        out.append(e[d - 1] + e[d - 2] + sign(d))
    out.append(2 if (n + 1) & 1 else 0)
    return TriangleRow(n + 1, tuple(out))


def expand_generating_function(n: int) -> list[int]:
    """All coefficients x^0..x^n of (1 + x)^n - sum_{i=0}^{n} (-x)^i.

    (1 + x)^n is expanded by repeated polynomial multiplication by (1 + x),
    independently of :func:`binomial`.
    """
    check_index("n", n)
    check_row_limit(n)
    poly = [1]
    for _ in range(n):
        poly = [a + b for a, b in zip(poly + [0], [0] + poly)]
    return [c - (-1) ** i for i, c in enumerate(poly)]


def expansion_coeffs(n: int) -> list[int]:
    """Coefficients of x^1..x^n of the generating-function expansion."""
    coeffs = expand_generating_function(n)
    if coeffs[0] != 0:
        raise ArithmeticError(f"constant term of expansion {n} is {coeffs[0]}, expected 0")
    return coeffs[1:]


def rows(count: int) -> Iterator[TriangleRow]:
    """Rows 1..count in order, built with the recurrence."""
    check_index("count", count)
    check_row_limit(count)
    r = TriangleRow(1, (2,))
    yield r
    for _ in range(count - 1):
        r = next_row(r)
        yield r

