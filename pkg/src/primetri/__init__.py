"""Exact Pascal-analog triangle K(n, d) = C(n, d) + (-1)**(d + 1) and the
primality tests, identities and tooling built on it."""

from primetri.errors import DomainError
from primetri.identities import (
    IdentityReport,
    alternating_sum_identity,
    fib_oracle,
    fib_via_diagonal,
    identity_report,
    row_sum_identity,
)
from primetri.modular import ResidueRow, ResidueStream, entry_mod, row_mod, stream_row_mod
from primetri.primality import (
    PrimalityVerdict,
    VerificationReport,
    oracle_is_prime,
    test_theorem1,
    test_theorem2,
    verify_range,
)
from primetri.triangle import TriangleRow, binomial, entry, expansion_coeffs, next_row, row

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "IdentityReport",
    "PrimalityVerdict",
    "ResidueRow",
    "ResidueStream",
    "TriangleRow",
    "VerificationReport",
    "alternating_sum_identity",
    "binomial",
    "entry",
    "entry_mod",
    "expansion_coeffs",
    "fib_oracle",
    "fib_via_diagonal",
    "identity_report",
    "next_row",
    "oracle_is_prime",
    "row",
    "row_mod",
    "row_sum_identity",
    "stream_row_mod",
    "test_theorem1",
    "test_theorem2",
    "verify_range",
]
