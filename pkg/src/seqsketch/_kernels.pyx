# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot loop: per-window polynomial sign accumulation.

One linear scan over the digit array; for every valid window the degree-3
polynomial of each family member is evaluated at the window's base-|alphabet|
code (Horner, mod p) and the resulting sign is added to that member's
accumulator.  Products are held in 128-bit integers, with a shift-and-add
reduction on the Mersenne modulus 2^61 - 1 and a generic 128-bit remainder
for any other prime.
"""

cdef extern from *:
    ctypedef unsigned long long u128 "__uint128_t"

ctypedef unsigned long long u64
ctypedef long long i64

cdef u64 M61 = (<u64>1 << 61) - 1

BACKEND_NAME = "cython"


cdef inline u64 _mulmod_m61(u64 a, u64 b) noexcept:
    # a, b < 2^61; 2^61 == 1 (mod p) folds the high bits back in.
    cdef u128 z = <u128>a * b
    cdef u64 r = (<u64>z & M61) + <u64>(z >> 61)
    if r >= M61:
        r -= M61
    return r


cdef inline u64 _mulmod_any(u64 a, u64 b, u64 p) noexcept:
    return <u64>((<u128>a * b) % p)


cdef inline i64 _sign_m61(u64 alpha, u64 c0, u64 c1, u64 c2, u64 c3) noexcept:
    cdef u64 v = _mulmod_m61(c3, alpha)
    v += c2
    if v >= M61:
        v -= M61
    v = _mulmod_m61(v, alpha)
    v += c1
    if v >= M61:
        v -= M61
    v = _mulmod_m61(v, alpha)
    v += c0
    if v >= M61:
        v -= M61
    return <i64>((v & 1) << 1) - 1


cdef inline i64 _sign_any(u64 alpha, u64 c0, u64 c1, u64 c2, u64 c3, u64 p) noexcept:
    cdef u64 v = _mulmod_any(c3, alpha, p)
    v += c2
    if v >= p:
        v -= p
    v = _mulmod_any(v, alpha, p)
    v += c1
    if v >= p:
        v -= p
    v = _mulmod_any(v, alpha, p)
    v += c0
    if v >= p:
        v -= p
    return <i64>((v & 1) << 1) - 1


def accumulate_signs(
    const unsigned char[::1] digits,
    Py_ssize_t k,
    u64 base,
    u64 p,
    const u64[::1] a0,
    const u64[::1] a1,
    const u64[::1] a2,
    const u64[::1] a3,
    i64[::1] acc,
):
    """Add the sign of every (member, valid window) pair into ``acc``.

    ``digits`` uses 0xFF as the invalid-symbol sentinel.  Returns the number
    of valid windows scanned.  Requires base**k <= p (caller-checked), which
    keeps every window code below p.
    """
    cdef Py_ssize_t n = digits.shape[0]
    cdef Py_ssize_t t = acc.shape[0]
    cdef Py_ssize_t i, j, run = 0
    cdef u64 code = 0, top_weight = 1
    cdef i64 windows = 0
    cdef unsigned char d
    cdef bint mersenne = p == M61

    for i in range(k - 1):
        top_weight *= base

    for j in range(n):
        d = digits[j]
        if d == 0xFF:
            code = 0
            run = 0
            continue
        if run == k:
            code -= <u64>digits[j - k] * top_weight
            run -= 1
        code = code * base + d
        run += 1
        if run == k:
            windows += 1
            if mersenne:
                for i in range(t):
                    acc[i] += _sign_m61(code, a0[i], a1[i], a2[i], a3[i])
            else:
                for i in range(t):
                    acc[i] += _sign_any(code, a0[i], a1[i], a2[i], a3[i], p)
    return windows
