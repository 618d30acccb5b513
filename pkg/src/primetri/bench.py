"""Wall-clock measurements of the three primality methods.

Reports timings only; nothing here asserts that one method is faster.
"""

from __future__ import annotations

import random
import statistics
import time

from primetri.errors import DomainError
from primetri.primality import oracle_config, oracle_is_prime, test_theorem1, test_theorem2
from primetri.records import OutputRecord

DEFAULT_SEED = 20150417
DEFAULT_SAMPLES = 8
DEFAULT_REPEATS = 5

def _oracle_checked(n: int) -> int:
    oracle_is_prime(n)
    return 0


_METHODS = {
    "theorem1": lambda n: test_theorem1(n).checked,
    "theorem2": lambda n: test_theorem2(n).checked,
    "oracle": _oracle_checked,
}


def largest_prime_at_most(n: int) -> int:
    while not oracle_is_prime(n):
        n -= 1
    return n


def anchor_points(max_n: int) -> list[int]:
    """Largest primes at or below each decade 100, 1000, ... <= max_n, plus max_n // 10 and max_n."""
    targets = set()
    k = 100
    while k <= max_n:
        targets.add(k)
        k *= 10
    targets.add(max_n)
    if max_n // 10 >= 100:
        targets.add(max_n // 10)
    return sorted({largest_prime_at_most(t) for t in targets})


def sample_inputs(max_n: int, samples: int, seed: int) -> tuple[list[int], list[int]]:
    rng = random.Random(seed)
    primes: list[int] = []
    composites: list[int] = []
    while len(primes) < samples or len(composites) < samples:
        n = rng.randint(4, max_n)
        bucket = primes if oracle_is_prime(n) else composites
        if len(bucket) < samples and n not in bucket:
            bucket.append(n)
    return sorted(primes), sorted(composites)


def _measure(fn, n: int, repeats: int) -> tuple[float, int]:
    times = []
    checked = 0
    for _ in range(repeats):
        t0 = time.perf_counter()
        checked = fn(n)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), checked


def run_bench(
    max_n: int,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    repeats: int = DEFAULT_REPEATS,
) -> OutputRecord:
    if max_n < 100:
        raise DomainError(f"bench needs max_n >= 100, got {max_n}")
    if samples < 1 or repeats < 1:
        raise DomainError("samples and repeats must be >= 1")
    anchors = anchor_points(max_n)
    primes, composites = sample_inputs(max_n, samples, seed)
    inputs = [(n, "anchor") for n in anchors]
    inputs += [(n, "random") for n in sorted(primes + composites)]

    methods = {}
    for name, fn in _METHODS.items():
        entries = []
        for n, group in inputs:
            seconds, checked = _measure(fn, n, repeats)
            entries.append(
                {
                    "n": str(n),
                    "group": group,
                    "is_prime": oracle_is_prime(n),
                    "bits": n.bit_length(),
                    "checked": checked,
                    "seconds": seconds,
                }
            )
        methods[name] = entries

    return OutputRecord(
        "bench-report",
        {
            "max_n": str(max_n),
            "samples": samples,
            "seed": seed,
            "repeats": repeats,
            "anchors": [str(a) for a in anchors],
            "oracle": oracle_config(),
            "methods": methods,
        },
    )
