"""Parikh vectors, spectra, abelian complexity and balancedness.

Scalar functions take one word; the ``batch_*`` functions take a 2-D integer
array whose rows are (canonical) circular words of a common length and are
used by the exhaustive oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

import numpy as np

from .words import CircularWord, Word, WordLike, as_word

ParikhVector = tuple[int, ...]


def parikh(w: WordLike, alphabet: Optional[int] = None) -> ParikhVector:
    w = as_word(w)
    size = w.alphabet.size if alphabet is None else alphabet
    counts = [0] * size
    for a in w:
        counts[a] += 1
    return tuple(counts)


@dataclass(frozen=True)
class Spectrum:
    """Set of Parikh vectors of the length-``n`` windows, kept sorted."""

    n: int
    vectors: tuple[ParikhVector, ...]

    def __len__(self):
        return len(self.vectors)

    def __iter__(self) -> Iterator[ParikhVector]:
        return iter(self.vectors)

    def __contains__(self, v):
        return tuple(v) in self.vectors


def _window_vectors(w: Word, n: int, circular: bool) -> list[ParikhVector]:
    size = w.alphabet.size
    seq = list(w) + list(w[: n - 1]) if circular else list(w)
    counts = [0] * size
    for a in seq[:n]:
        counts[a] += 1
    out = [tuple(counts)]
    stop = len(w) if circular else len(w) - n + 1
    for i in range(1, stop):
        counts[seq[i - 1]] -= 1
        counts[seq[i + n - 1]] += 1
        out.append(tuple(counts))
    return out


def _check_range(n: int, length: int):
    if not 1 <= n <= length:
        raise ValueError(f"window length {n} outside 1..{length}")


def circular_spectrum(cw: CircularWord, n: int) -> Spectrum:
    _check_range(n, cw.length)
    return Spectrum(n, tuple(sorted(set(_window_vectors(cw.canonical, n, True)))))


def linear_spectrum(w: WordLike, n: int) -> Spectrum:
    w = as_word(w)
    _check_range(n, len(w))
    return Spectrum(n, tuple(sorted(set(_window_vectors(w, n, False)))))


def abelian_complexity(cw: CircularWord, n: int) -> int:
    return len(circular_spectrum(cw, n))


def complexity_profile(cw: CircularWord) -> list[int]:
    """``[rho_1, ..., rho_l]`` for a circular word of length ``l``."""
    return [abelian_complexity(cw, n) for n in range(1, cw.length + 1)]


def max_complexity(cw: CircularWord) -> int:
    return max(complexity_profile(cw))


def is_abelian_bounded(cw: CircularWord, p: int) -> bool:
    return all(abelian_complexity(cw, n) <= p for n in range(1, cw.length + 1))


def _balanced_at(vectors: list[ParikhVector]) -> bool:
    for column in zip(*vectors):
        if max(column) - min(column) > 1:
            return False
    return True


def minimal_nonbalanced_scale(cw: CircularWord) -> Optional[int]:
    """Least window length at which two windows differ by 2 in some letter."""
    for n in range(1, cw.length):
        if not _balanced_at(_window_vectors(cw.canonical, n, True)):
            return n
    return None


def is_balanced(cw: CircularWord) -> bool:
    return minimal_nonbalanced_scale(cw) is None


def is_balanced_linear(w: WordLike) -> bool:
    """Balance restricted to the factors of this one representative."""
    w = as_word(w)
    if not w:
        raise ValueError("empty")
    return all(_balanced_at(_window_vectors(w, n, False)) for n in range(1, len(w)))


def balanced_complexity_bound(N: int) -> int:
    if N < 1:
        raise ValueError("N must be positive")
    return comb(N, N // 2)


def word_report(cw: CircularWord) -> dict:
    profile = complexity_profile(cw)
    return {
        "word": str(cw),
        "balanced": is_balanced(cw),
        "maxComplexity": max(profile),
        "complexityByN": profile,
        "minNonbalancedScale": minimal_nonbalanced_scale(cw),
    }


# -- vectorised variants over many words of one length ------------------------


def _window_counts(words: np.ndarray, alphabet: int) -> np.ndarray:
    """Prefix counts over the doubled words, shape (M, 2L+1, N)."""
    words = np.asarray(words)
    doubled = np.concatenate([words, words], axis=1)
    onehot = doubled[:, :, None] == np.arange(alphabet)[None, None, :]
    prefix = np.zeros((words.shape[0], doubled.shape[1] + 1, alphabet), dtype=np.int16)
    np.cumsum(onehot, axis=1, out=prefix[:, 1:, :])
    return prefix


def batch_complexity_and_balance(words: np.ndarray, alphabet: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-row max abelian complexity and balancedness of circular words.

    Returns ``(max_complexity, balanced)`` arrays of shape ``(M,)``.
    """
    words = np.asarray(words)
    m, length = words.shape
    prefix = _window_counts(words, alphabet)
    balanced = np.ones(m, dtype=bool)
    maxc = np.ones(m, dtype=np.int64)
    weights = (length + 1) ** np.arange(alphabet - 1, -1, -1, dtype=np.int64)
    for n in range(1, length):
        counts = prefix[:, n : n + length, :] - prefix[:, :length, :]
        spread = counts.max(axis=1) - counts.min(axis=1)
        balanced &= (spread <= 1).all(axis=1)
        codes = np.sort(counts.astype(np.int64) @ weights, axis=1)
        distinct = 1 + np.count_nonzero(np.diff(codes, axis=1), axis=1)
        np.maximum(maxc, distinct, out=maxc)
    return maxc, balanced
