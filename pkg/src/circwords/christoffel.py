"""Lower Christoffel words and the classification of balanced binary necklaces."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .words import CircularWord, Word, WordLike, as_word, is_palindrome, primitive_decomposition


@dataclass(frozen=True, order=True)
class Slope:
    """Line of slope ``ones / zeros``; the Christoffel word has that many of each letter."""

    zeros: int
    ones: int

    def __post_init__(self):
        if self.zeros < 1 or self.ones < 1:
            raise ValueError("slope components must be positive")
        if gcd(self.zeros, self.ones) != 1:
            raise ValueError(f"({self.zeros},{self.ones}) not coprime")

    @property
    def length(self) -> int:
        return self.zeros + self.ones

    def as_list(self) -> list[int]:
        return [self.zeros, self.ones]


def _slope(s) -> Slope:
    return s if isinstance(s, Slope) else Slope(*s)


def christoffel_steps(zeros: int, ones: int):
    """Yield ``(letter, x, y)`` along the lower discrete approximation.

    From ``(x, y)`` an up-step is taken exactly when it stays on or below the
    line ``y = (ones/zeros) x``, i.e. ``(y + 1) * zeros <= ones * x``.
    """
    x = y = 0
    for _ in range(zeros + ones):
        if (y + 1) * zeros <= ones * x:
            y += 1
            yield 1, x, y
        else:
            x += 1
            yield 0, x, y


def christoffel(s, power: int = 1) -> Word:
    s = _slope(s)
    if power < 1:
        raise ValueError("power must be positive")
    return Word([a for a, _, _ in christoffel_steps(s.zeros, s.ones)], 2) * power


def palindrome_factor(w: WordLike) -> Word:
    """``Q`` with ``w = 0 Q 1``."""
    w = as_word(w, 2)
    if len(w) < 2 or w[0] != 0 or w[-1] != 1 or not is_palindrome(w[1:-1]):
        raise ValueError(f"{w} is not of the form 0Q1 with Q a palindrome")
    return w[1:-1]


def is_christoffel(w: WordLike) -> Optional[Slope]:
    w = as_word(w)
    if w.alphabet.size > 2 or len(w) < 2:
        return None
    zeros, ones = w.count(0), w.count(1)
    if zeros == 0 or ones == 0 or gcd(zeros, ones) != 1:
        return None
    if w[0] != 0 or w[-1] != 1 or not is_palindrome(w[1:-1]):
        return None
    s = Slope(zeros, ones)
    return s if tuple(christoffel(s)) == tuple(w) else None


def classify_binary(cw: CircularWord) -> Optional[tuple[Slope, int]]:
    """``(slope, p)`` with ``cw == [C(slope)^p]``, or None when no such slope exists.

    The primitive root's class is searched for its unique ``0Q1`` palindromic
    representative, which must then regenerate as a Christoffel word.
    """
    if cw.alphabet.size > 2:
        return None
    root = primitive_decomposition(cw.canonical)
    for k in range(len(root.root)):
        s = is_christoffel(root.root.rotate(k))
        if s is not None:
            return s, root.exponent
    return None


def coprime_pairs(max_len: int):
    """Coprime ``(k, n)`` with ``k, n >= 1`` and ``k + n <= max_len``, sorted."""
    for total in range(2, max_len + 1):
        for k in range(1, total):
            if gcd(k, total - k) == 1:
                yield k, total - k


def enumerate_christoffel(max_len: int) -> set[Word]:
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    return {christoffel(Slope(k, n)) for k, n in coprime_pairs(max_len)}
