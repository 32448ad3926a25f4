"""Rolling k-mer integer codes.

Each window of k symbols is read as a base-|alphabet| integer.  The stream is
produced with a rolling update (drop the leading digit, shift, append the new
digit), so a full scan costs O(1) per position regardless of k.  Windows that
contain an out-of-alphabet symbol are skipped.
"""

from __future__ import annotations

from typing import Iterator

from seqsketch.alphabet import DNA, INVALID, Alphabet
from seqsketch.errors import ParameterError
from seqsketch.hashing import DEFAULT_PRIME


def check_window_params(k: int, sigma: Alphabet, p: int = DEFAULT_PRIME) -> None:
    """Reject (k, alphabet, modulus) combinations where codes could collide.

    Codes must stay below p so distinct k-mers keep distinct residues mod p.
    """
    if k < 1:
        raise ParameterError("k must be at least 1")
    if sigma.size**k > p:
        raise ParameterError(
            f"|alphabet|^k = {sigma.size}^{k} exceeds the modulus; "
            f"max k for {sigma.name!r} is {sigma.max_k(p)}"
        )


def kmer_codes(
    seq: str, k: int, sigma: Alphabet = DNA, *, p: int = DEFAULT_PRIME
) -> Iterator[int]:
    """Yield the code of every fully valid window, left to right.

    A sequence shorter than k yields nothing.  The rolling state resets at
    each invalid symbol, so windows straddling one never appear.
    """
    check_window_params(k, sigma, p)
    digits = sigma.digits(seq)
    base = sigma.size
    top_weight = base ** (k - 1)

    code = 0
    run = 0
    for j in range(digits.shape[0]):
        d = int(digits[j])
        if d == INVALID:
            code = 0
            run = 0
            continue
        if run == k:
            code -= int(digits[j - k]) * top_weight
            run -= 1
        code = code * base + d
        run += 1
        if run == k:
            yield code
