"""4-wise independent sign hashing via degree-3 polynomials mod a prime.

A family member is a polynomial ``a0 + a1*x + a2*x^2 + a3*x^3`` with
coefficients drawn uniformly from ``[0, p - 1]``.  Its value at a k-mer code
``alpha``, reduced mod p and then mod 2, gives a bit that maps to a sign in
``{-1, +1}``.  Any four distinct inputs receive independent uniform signs,
which is what bounds the variance of the sketch inner product.

Sampling uses SplitMix64, a counter-based generator: output ``n`` is a fixed
64-bit mix of ``seed + n * GAMMA``.  The same (seed, t, p) always regenerates
the same family on every platform, which is what makes embeddings
reproducible artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from seqsketch.errors import ParameterError

#: Default modulus: the Mersenne prime 2^61 - 1. Products of two residues fit
#: in 128 bits, and reduction is a shift and an add, which keeps the hot loop
#: cheap. Any other prime < 2^62 may be passed explicitly.
DEFAULT_PRIME = (1 << 61) - 1

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def splitmix64(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of the SplitMix64 stream for ``seed``."""
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK64) + idx * np.uint64(_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit integers."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=16)
def _check_prime(p: int) -> None:
    if p >= (1 << 62):
        raise ParameterError("modulus must be below 2^62")
    if not _is_prime(p):
        raise ParameterError(f"modulus {p} is not prime")


@dataclass(frozen=True)
class HashParams:
    """One family member: four polynomial coefficients and the modulus."""

    a0: int
    a1: int
    a2: int
    a3: int
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        _check_prime(self.p)
        for c in (self.a0, self.a1, self.a2, self.a3):
            if not 0 <= c < self.p:
                raise ParameterError("coefficients must lie in [0, p-1]")


@dataclass(frozen=True)
class HashFamily:
    """t independently sampled members sharing one modulus and seed."""

    members: tuple[HashParams, ...]
    seed: int
    p: int = DEFAULT_PRIME

    @property
    def t(self) -> int:
        return len(self.members)

    @cached_property
    def coefficient_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Per-degree uint64 coefficient arrays, the layout the kernels consume."""
        cols = []
        for attr in ("a0", "a1", "a2", "a3"):
            arr = np.fromiter(
                (getattr(m, attr) for m in self.members), dtype=np.uint64, count=self.t
            )
            arr.setflags(write=False)
            cols.append(arr)
        return tuple(cols)


def sample_family(t: int, seed: int, p: int = DEFAULT_PRIME) -> HashFamily:
    """Draw t members with coefficients uniform on [0, p-1].

    Uniformity comes from rejection sampling the 64-bit SplitMix64 stream:
    outputs at or above ``floor(2^64 / p) * p`` are discarded, the rest are
    reduced mod p. The stream is consumed in counter order, so the result is
    a pure function of (t, seed, p).
    """
    if t < 1:
        raise ParameterError("t must be at least 1")
    _check_prime(p)

    limit = ((1 << 64) // p) * p
    needed = 4 * t
    accepted: list[np.ndarray] = []
    got, cursor = 0, 0
    while got < needed:
        chunk = splitmix64(seed, cursor, max(needed - got, 64))
        cursor += chunk.size
        keep = chunk[chunk < np.uint64(limit)] % np.uint64(p)
        accepted.append(keep)
        got += keep.size
    coeffs = np.concatenate(accepted)[:needed].reshape(t, 4)

    members = tuple(
        HashParams(int(row[0]), int(row[1]), int(row[2]), int(row[3]), p)
        for row in coeffs
    )
    return HashFamily(members=members, seed=seed, p=p)


def evaluate_g(h: HashParams, alpha: int) -> int:
    """((a0 + a1*x + a2*x^2 + a3*x^3) mod p) mod 2 at x = alpha mod p.

    Python integers are arbitrary precision, so this is exact for any alpha;
    the compiled kernels are checked against it.
    """
    if alpha < 0:
        raise ParameterError("alpha must be non-negative")
    x = alpha % h.p
    return (h.a0 + h.a1 * x + h.a2 * x * x + h.a3 * x * x * x) % h.p & 1


def evaluate_sign(h: HashParams, alpha: int) -> int:
    """-1 where the hash bit is 0, +1 where it is 1."""
    return 2 * evaluate_g(h, alpha) - 1
