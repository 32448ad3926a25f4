"""Sequence alphabets and symbol-to-digit encoding.

A k-mer over an alphabet of size ``s`` is read as an integer in base ``s``,
so every symbol maps to a digit in ``[0, s - 1]``.  Symbols outside the
alphabet (ambiguity codes like ``N``, alignment gaps ``-``) map to the
``INVALID`` sentinel; any window containing one is skipped downstream.
Matching is case-insensitive, following FASTA convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from seqsketch.errors import ParameterError

# Digit sentinel for out-of-alphabet symbols. Fits uint8; alphabet sizes are
# capped well below it.
INVALID = 0xFF

_MAX_ALPHABET_SIZE = 128


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of single-character symbols."""

    name: str
    symbols: tuple[str, ...]

    def __post_init__(self):
        if len(self.symbols) < 2:
            raise ParameterError("alphabet needs at least 2 symbols")
        if len(self.symbols) > _MAX_ALPHABET_SIZE:
            raise ParameterError("alphabet too large")
        folded = [s.upper() for s in self.symbols]
        if any(len(s) != 1 or ord(s) > 0x7F for s in self.symbols):
            raise ParameterError("alphabet symbols must be single ASCII characters")
        if len(set(folded)) != len(folded):
            raise ParameterError("alphabet symbols must be unique (case-insensitive)")

    @property
    def size(self) -> int:
        return len(self.symbols)

    @cached_property
    def _table(self) -> np.ndarray:
        # 256-entry byte -> digit lookup; both cases map to the same digit.
        table = np.full(256, INVALID, dtype=np.uint8)
        for digit, sym in enumerate(self.symbols):
            table[ord(sym.upper())] = digit
            table[ord(sym.lower())] = digit
        table.setflags(write=False)
        return table

    def digit_of(self, char: str) -> int:
        """Digit for one character, or ``INVALID`` if outside the alphabet."""
        code = ord(char)
        if code > 0xFF:
            return INVALID
        return int(self._table[code])

    def digits(self, seq: str) -> np.ndarray:
        """Vectorized digit array (uint8) for a whole sequence.

        Out-of-alphabet characters, including non-ASCII, become ``INVALID``.
        """
        raw = seq.encode("latin-1", errors="replace")
        return self._table[np.frombuffer(raw, dtype=np.uint8)]

    def max_k(self, p: int) -> int:
        """Largest k with size**k <= p (distinct k-mers keep distinct residues)."""
        k, total = 0, 1
        while total * self.size <= p:
            total *= self.size
            k += 1
        return k


def encode_symbol(char: str, sigma: Alphabet) -> int:
    """Index of ``char`` in the alphabet, or ``INVALID`` for a miss."""
    return sigma.digit_of(char)


DNA = Alphabet("dna", ("A", "C", "G", "T"))
PROTEIN = Alphabet("protein", tuple("ACDEFGHIKLMNPQRSTVWY"))

_BY_NAME = {a.name: a for a in (DNA, PROTEIN)}


def get_alphabet(name: str) -> Alphabet:
    try:
        return _BY_NAME[name.lower()]
    except KeyError:
        raise ParameterError(
            f"unknown alphabet {name!r}; choose from {sorted(_BY_NAME)}"
        ) from None
