"""Sequence embeddings: signed random projections of the k-mer spectrum.

Coordinate i of a sequence's embedding is ``(1/sqrt(t)) * sum of member i's
sign over the k-mer stream``.  The sum is kept as an exact integer
accumulator; the scaled float stage divides by sqrt(t) once at the end.  A
sequence is embedded in one linear scan, touching O(t) memory beyond the
input itself; the full |alphabet|^k count vector is never materialized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from seqsketch.alphabet import DNA, Alphabet
from seqsketch.backend import get_backend
from seqsketch.errors import InputError, ParameterError
from seqsketch.hashing import HashFamily
from seqsketch.kmers import check_window_params


@dataclass(frozen=True)
class SketchVector:
    """One embedded sequence.

    ``accumulators`` holds the raw signed counts, so two computation paths
    can be compared integer-exactly; ``scaled`` is accumulators / sqrt(t).
    """

    accumulators: np.ndarray
    kmer_count: int

    def __post_init__(self):
        acc = np.ascontiguousarray(self.accumulators, dtype=np.int64)
        acc.setflags(write=False)
        object.__setattr__(self, "accumulators", acc)

    @property
    def t(self) -> int:
        return self.accumulators.shape[0]

    @property
    def is_empty(self) -> bool:
        """True when no valid k-mer was scanned; the vector is all zeros."""
        return self.kmer_count == 0

    @cached_property
    def scaled(self) -> np.ndarray:
        out = self.accumulators / math.sqrt(self.t)
        out.setflags(write=False)
        return out


@dataclass(frozen=True)
class EmbeddingMatrix:
    """A batch of sketches plus everything needed to regenerate them."""

    ids: tuple[str, ...]
    rows: tuple[SketchVector, ...]
    k: int
    t: int
    seed: int
    p: int
    alphabet: str

    def __post_init__(self):
        if len(self.ids) != len(self.rows):
            raise InputError("ids and rows length mismatch")
        if len(set(self.ids)) != len(self.ids):
            raise InputError("sequence ids must be unique")
        if any(r.t != self.t for r in self.rows):
            raise InputError("all rows must share the same t")

    def __len__(self) -> int:
        return len(self.rows)

    @cached_property
    def values(self) -> np.ndarray:
        """n x t float64 matrix of scaled sketches."""
        if not self.rows:
            return np.empty((0, self.t), dtype=np.float64)
        return np.vstack([r.scaled for r in self.rows])


def embed_sequence(
    seq: str,
    k: int,
    family: HashFamily,
    sigma: Alphabet = DNA,
    *,
    backend: str | None = None,
) -> SketchVector:
    """Embed one sequence in a single scan.

    A sequence with no valid k-mer (too short, or all windows invalidated)
    comes back as an all-zero vector flagged by ``is_empty``; callers decide
    how loudly to complain.
    """
    check_window_params(k, sigma, family.p)
    kernel = get_backend(backend)
    a0, a1, a2, a3 = family.coefficient_arrays
    acc = np.zeros(family.t, dtype=np.int64)
    windows = kernel.accumulate_signs(
        sigma.digits(seq), k, sigma.size, family.p, a0, a1, a2, a3, acc
    )
    return SketchVector(accumulators=acc, kmer_count=int(windows))


def embed_batch(
    seqs: Iterable[tuple[str, str]],
    k: int,
    family: HashFamily,
    sigma: Alphabet = DNA,
    *,
    backend: str | None = None,
) -> EmbeddingMatrix:
    """Embed (id, sequence) pairs in order.

    Rows are independent, so any parallel schedule would give the same
    result; this implementation runs them sequentially.
    """
    pairs = list(seqs)
    ids = tuple(i for i, _ in pairs)
    if len(set(ids)) != len(ids):
        raise InputError("duplicate sequence ids in batch")
    rows = tuple(
        embed_sequence(s, k, family, sigma, backend=backend) for _, s in pairs
    )
    return EmbeddingMatrix(
        ids=ids,
        rows=rows,
        k=k,
        t=family.t,
        seed=family.seed,
        p=family.p,
        alphabet=sigma.name,
    )


def normalize(v: SketchVector | np.ndarray) -> np.ndarray:
    """Scale to unit l2 norm. All-zero input is degenerate and rejected."""
    vec = np.asarray(v.scaled if isinstance(v, SketchVector) else v, dtype=np.float64)
    norm = float(np.linalg.norm(vec))
    if norm == 0.0:
        raise InputError("cannot normalize an all-zero vector")
    return vec / norm
