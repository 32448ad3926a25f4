"""Pure-numpy fallback for the compiled sign-accumulation kernel.

Same contract as ``seqsketch._kernels``: scan the digit array, evaluate every
family member's polynomial at each valid window code, accumulate signs.
Window codes are built with a vectorized sliding dot product; the polynomial
is evaluated in uint64 limb arithmetic on (t, chunk)-shaped blocks, with the
chunk size capped so temporaries stay a few megabytes regardless of sequence
length or k.

The limb reduction is specific to the Mersenne modulus 2^61 - 1.  Other
primes fall back to exact big-integer evaluation per window, which is slow
but correct; the compiled backend handles arbitrary primes at full speed.
"""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

BACKEND_NAME = "python"

_M61 = (1 << 61) - 1
_U = np.uint64
_LOW32 = _U(0xFFFFFFFF)
_LOW29 = _U((1 << 29) - 1)
_M61_U = _U(_M61)

# Cap on t * chunk so each uint64 temporary stays near 2 MB.
_BLOCK_CELLS = 1 << 18


def _mulmod_m61(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(a * b) mod (2^61 - 1) for uint64 operands below 2^61.

    Splits both operands into 32-bit halves so every partial product fits in
    uint64, then folds 2^64 == 8 and 2^61 == 1 back into the sum.
    """
    a_hi = a >> _U(32)
    a_lo = a & _LOW32
    b_hi = b >> _U(32)
    b_lo = b & _LOW32

    high = (a_hi * b_hi) << _U(3)
    cross = a_hi * b_lo + a_lo * b_hi
    cross = (cross >> _U(29)) + ((cross & _LOW29) << _U(32))
    low = a_lo * b_lo
    low = (low >> _U(61)) + (low & _M61_U)

    return (high + cross + low) % _M61_U


def _signs_block_m61(codes, a0, a1, a2, a3):
    """Hash bit matrix (t, len(codes)) via Horner in limb arithmetic."""
    alpha = codes[np.newaxis, :]
    v = _mulmod_m61(a3[:, np.newaxis], alpha)
    v = v + a2[:, np.newaxis]
    v -= (v >= _M61_U) * _M61_U
    v = _mulmod_m61(v, alpha)
    v = v + a1[:, np.newaxis]
    v -= (v >= _M61_U) * _M61_U
    v = _mulmod_m61(v, alpha)
    v = v + a0[:, np.newaxis]
    v -= (v >= _M61_U) * _M61_U
    return v & _U(1)


def _window_codes(digits: np.ndarray, k: int, base: int):
    """Base-|alphabet| codes of the fully valid windows."""
    n = digits.shape[0]
    if n < k:
        return np.empty(0, dtype=np.uint64)
    valid = digits != 0xFF
    d64 = np.where(valid, digits, 0).astype(np.int64)
    weights = base ** np.arange(k - 1, -1, -1, dtype=np.int64)
    codes = sliding_window_view(d64, k) @ weights
    all_valid = sliding_window_view(valid, k).all(axis=1)
    return codes[all_valid].astype(np.uint64)


def accumulate_signs(digits, k, base, p, a0, a1, a2, a3, acc):
    """Numpy twin of the compiled kernel; returns the valid-window count."""
    codes = _window_codes(np.asarray(digits, dtype=np.uint8), k, base)
    m = codes.size
    if m == 0:
        return 0
    t = acc.shape[0]

    if p == _M61:
        block = max(1, _BLOCK_CELLS // t)
        for start in range(0, m, block):
            chunk = codes[start : start + block]
            bits = _signs_block_m61(chunk, a0, a1, a2, a3)
            ones = bits.sum(axis=1, dtype=np.int64)
            acc += 2 * ones - np.int64(chunk.size)
    else:
        coeffs = [(int(a0[i]), int(a1[i]), int(a2[i]), int(a3[i])) for i in range(t)]
        for code in codes.tolist():
            x = code % p
            x2 = x * x % p
            x3 = x2 * x % p
            for i, (c0, c1, c2, c3) in enumerate(coeffs):
                g = (c0 + c1 * x + c2 * x2 + c3 * x3) % p & 1
                acc[i] += 2 * g - 1
    return m
