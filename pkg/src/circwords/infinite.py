"""Aperiodic bi-infinite ternary words from a two-block morphism, checked on windows."""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

import numpy as np

from .christoffel import Slope, christoffel
from .ternary import phi
from .words import Word, WordLike, as_word, is_palindrome


def _floor_alpha(t: int) -> int:
    """``floor(t * (3 - sqrt 5) / 2)`` in exact integer arithmetic."""
    if t == 0:
        return 0
    r = isqrt(5 * t * t)
    floor_t_sqrt5 = r if t > 0 else -r - 1
    # t*sqrt5 is irrational, so floor(3t - t*sqrt5) = 3t - floor(t*sqrt5) - 1
    return (3 * t - floor_t_sqrt5 - 1) // 2


def fibonacci_bit(i: int) -> int:
    """Two-sided mechanical word of slope ``(3 - sqrt 5)/2``; ``i >= 0`` gives 0100101001001..."""
    return _floor_alpha(i + 2) - _floor_alpha(i + 1)


@dataclass(frozen=True)
class BitSource:
    """A bi-infinite binary word ``omega``.

    ``kind`` is ``"fibonacci"``, ``"bits"`` (the given string repeated
    periodically in both directions) or ``"seed"`` (PCG64 stream, separate
    streams for non-negative and negative indices).
    """

    kind: str
    bits: str = ""
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("fibonacci", "bits", "seed"):
            raise ValueError(f"unknown bit source {self.kind!r}")
        if self.kind == "bits" and (not self.bits or set(self.bits) - {"0", "1"}):
            raise ValueError("bits must be a non-empty string of 0/1")
        if self.kind == "seed" and not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    @classmethod
    def parse(cls, text: str, default_seed: int = 0) -> "BitSource":
        if text == "fibonacci":
            return cls("fibonacci")
        if text.startswith("bits:"):
            return cls("bits", bits=text[5:])
        if text.startswith("seed:"):
            return cls("seed", seed=int(text[5:]))
        if text == "random":
            return cls("seed", seed=default_seed)
        raise ValueError(f"unknown bit source {text!r}")

    @property
    def aperiodic(self) -> Optional[bool]:
        """True when certified, None for random streams (aperiodic with probability 1)."""
        return {"fibonacci": True, "bits": False, "seed": None}[self.kind]

    def describe(self) -> str:
        if self.kind == "bits":
            return f"bits:{self.bits}"
        if self.kind == "seed":
            return f"seed:{self.seed}"
        return "fibonacci"

    def _random_bits(self, stream: int, count: int) -> np.ndarray:
        ss = np.random.SeedSequence([self.seed, stream])
        raw = np.random.PCG64(ss).random_raw((count + 63) // 64).astype(np.uint64)
        shifts = np.arange(64, dtype=np.uint64)
        bits = ((raw[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.int8).ravel()
        return bits[:count]

    def take(self, start: int, stop: int) -> list[int]:
        """Bits at indices ``start <= i < stop``."""
        if stop <= start:
            return []
        if self.kind == "fibonacci":
            return [fibonacci_bit(i) for i in range(start, stop)]
        if self.kind == "bits":
            b = self.bits
            return [int(b[i % len(b)]) for i in range(start, stop)]
        out = []
        if start < 0:
            # index -1 is the first draw of the negative stream
            neg = self._random_bits(1, -start)
            out.extend(int(neg[-i - 1]) for i in range(start, min(stop, 0)))
        if stop > 0:
            pos = self._random_bits(0, stop)
            out.extend(int(v) for v in pos[max(start, 0):stop])
        return out


@dataclass(frozen=True)
class MorphismSpec:
    """``0 -> Q 2 0`` and ``1 -> Q 0 2`` where ``phi(C(m, n)) = 0 Q 2``."""

    m: int
    n: int
    q: Word
    image0: Word
    image1: Word

    @property
    def block(self) -> int:
        return self.m + self.n


def morphism_images(m: int, n: int) -> MorphismSpec:
    if m % 2:
        raise ValueError(f"m must be even, got {m}")
    w = phi(christoffel(Slope(m, n)))
    q = w[1:-1]
    if not is_palindrome(q):
        raise AssertionError(f"phi(C({m},{n})) = {w} has no palindromic centre")
    return MorphismSpec(m, n, q, q + Word([2, 0], 3), q + Word([0, 2], 3))


def expand(source: BitSource, spec: MorphismSpec, start: int, stop: int) -> Word:
    """Letters ``start <= i < stop`` of the image of ``source``; bit 0's image starts at 0."""
    if stop < start:
        raise ValueError("empty or reversed range")
    b = spec.block
    first, last = start // b, -(-stop // b)
    images = (tuple(spec.image0), tuple(spec.image1))
    letters: list[int] = []
    for bit in source.take(first, last):
        letters.extend(images[bit])
    offset = start - first * b
    return Word(letters[offset : offset + stop - start], 3)


def window_complexity(segment: WordLike, n: int) -> int:
    """Distinct Parikh vectors among the length-``n`` factors of a linear word."""
    return window_profile(segment, n, n)[0]


def window_profile(segment: WordLike, n_max: int, n_min: int = 1) -> list[int]:
    """``[window_complexity(segment, n) for n in n_min..n_max]`` via prefix sums."""
    seg = np.asarray(as_word(segment), dtype=np.int64)
    if not 1 <= n_min <= n_max <= len(seg):
        raise ValueError(f"window length outside 1..{len(seg)}")
    size = int(seg.max()) + 1
    onehot = seg[:, None] == np.arange(size)[None, :]
    prefix = np.zeros((len(seg) + 1, size), dtype=np.int64)
    np.cumsum(onehot, axis=0, out=prefix[1:])
    weights = (len(seg) + 1) ** np.arange(size, dtype=np.int64)
    codes = prefix @ weights
    return [len(np.unique(codes[n:] - codes[:-n])) for n in range(n_min, n_max + 1)]


def infinite_report(m: int, n: int, source: BitSource, length: int, n_max: int,
                    include_segment: bool = True) -> dict:
    spec = morphism_images(m, n)
    seg = expand(source, spec, 0, length)
    profile = window_profile(seg, min(n_max, length))
    report = {
        "m": m,
        "n": n,
        "source": source.describe(),
        "aperiodic": source.aperiodic,
        "complexityByN": profile,
        "allAtMost3": all(c <= 3 for c in profile),
        "allExactly3": all(c == 3 for c in profile),
    }
    if include_segment:
        report["segment"] = str(seg)
    return report
