"""Finite words, circular words and the symmetry actions on them.

Letters are small integer indices ``0 .. N-1``; they are rendered as the
digit characters ``"0123..."`` only when a word is printed or parsed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

DIGITS = "0123456789"


@dataclass(frozen=True)
class Alphabet:
    """An ordered N-ary alphabet with the order-preserving map index -> symbol."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("alphabet size must be positive")
        if self.size > len(DIGITS):
            raise ValueError("alphabets larger than 10 letters have no digit rendering")

    def symbol(self, index: int) -> str:
        if not 0 <= index < self.size:
            raise ValueError(f"letter {index} outside alphabet of size {self.size}")
        return DIGITS[index]

    def index(self, symbol: str) -> int:
        i = DIGITS.find(symbol)
        if i < 0 or i >= self.size:
            raise ValueError(f"symbol {symbol!r} outside alphabet of size {self.size}")
        return i

    @property
    def letters(self) -> range:
        return range(self.size)


WordLike = Union["Word", str, Sequence[int]]


class Word(tuple):
    """Immutable sequence of letter indices over an :class:`Alphabet`.

    ``Word("01011")`` parses a digit string; ``Word([0, 1, 0])`` takes indices.
    Without an explicit alphabet the smallest one containing every letter is
    used.  Equality and hashing are those of the underlying tuple.
    """

    alphabet: Alphabet

    def __new__(cls, letters: WordLike = (), alphabet: Union[Alphabet, int, None] = None):
        if isinstance(letters, str):
            seq = []
            for ch in letters:
                if ch not in DIGITS:
                    raise ValueError(f"invalid letter {ch!r} in word {letters!r}")
                seq.append(DIGITS.index(ch))
        else:
            seq = [int(a) for a in letters]
        if alphabet is None:
            if isinstance(letters, Word):
                alphabet = letters.alphabet
            else:
                alphabet = Alphabet(max(seq, default=0) + 1)
        elif isinstance(alphabet, int):
            alphabet = Alphabet(alphabet)
        for a in seq:
            if not 0 <= a < alphabet.size:
                raise ValueError(f"letter {a} outside alphabet of size {alphabet.size}")
        self = super().__new__(cls, seq)
        self.alphabet = alphabet
        return self

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word(tuple.__getitem__(self, key), self.alphabet)
        return tuple.__getitem__(self, key)

    def __add__(self, other):
        other = as_word(other)
        size = max(self.alphabet.size, other.alphabet.size)
        return Word(tuple(self) + tuple(other), size)

    def __mul__(self, p: int):
        return Word(tuple(self) * p, self.alphabet)

    __rmul__ = __mul__

    def __str__(self):
        return "".join(DIGITS[a] for a in self)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def rotate(self, k: int) -> "Word":
        """Cyclic shift by ``k`` letters to the left (``T^k``)."""
        if not self:
            return self
        k %= len(self)
        return self[k:] + self[:k]

    def count(self, letter) -> int:
        return tuple.count(self, letter)


def as_word(w: WordLike, alphabet: Union[Alphabet, int, None] = None) -> Word:
    if isinstance(w, Word) and alphabet is None:
        return w
    return Word(w, alphabet)


def least_rotation(seq: Sequence[int]) -> int:
    """Start index of the lexicographically least rotation (Booth, O(n))."""
    n = len(seq)
    s = list(seq) * 2
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


@dataclass(frozen=True, order=True)
class CircularWord:
    """Conjugacy class of a word, held by its least rotation."""

    canonical: Word
    length: int = field(init=False, compare=False)

    def __post_init__(self):
        if not self.canonical:
            raise ValueError("empty")
        object.__setattr__(self, "length", len(self.canonical))

    @classmethod
    def of(cls, w: WordLike, alphabet: Union[Alphabet, int, None] = None) -> "CircularWord":
        return canonicalize(as_word(w, alphabet))

    @property
    def alphabet(self) -> Alphabet:
        return self.canonical.alphabet

    def __str__(self):
        return str(self.canonical)

    def __repr__(self):
        return f"CircularWord({str(self)!r})"

    def __len__(self):
        return self.length

    def to_json(self) -> dict:
        return {"word": str(self), "alphabet": self.alphabet.size}


@dataclass(frozen=True)
class PrimitiveDecomposition:
    root: Word
    exponent: int


def rotations(w: WordLike) -> set[Word]:
    w = as_word(w)
    if not w:
        raise ValueError("empty")
    return {w.rotate(k) for k in range(len(w))}


def canonicalize(w: WordLike) -> CircularWord:
    w = as_word(w)
    if not w:
        raise ValueError("empty")
    return CircularWord(w.rotate(least_rotation(w)))


def smallest_period(w: Sequence[int]) -> int:
    """Least ``d`` dividing ``len(w)`` with ``w`` invariant under shift by ``d``."""
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and all(w[i] == w[i - d] for i in range(d, n)):
            return d
    return n


def primitive_decomposition(w: WordLike) -> PrimitiveDecomposition:
    w = as_word(w)
    if not w:
        raise ValueError("empty")
    d = smallest_period(w)
    return PrimitiveDecomposition(w[:d], len(w) // d)


def is_primitive(w: Union[WordLike, CircularWord]) -> bool:
    if isinstance(w, CircularWord):
        w = w.canonical
    return primitive_decomposition(w).exponent == 1


def invert(w: WordLike) -> Word:
    w = as_word(w)
    return w[::-1]


def is_palindrome(w: WordLike) -> bool:
    w = as_word(w)
    return tuple(w) == tuple(reversed(w))


def _check_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(int(a) for a in sigma)
    if sorted(sigma) != list(range(len(sigma))):
        raise ValueError(f"{sigma} is not a bijection on the alphabet")
    return sigma


def apply_permutation(sigma: Sequence[int], w: WordLike) -> Word:
    """Letterwise image ``sigma(w)``; ``sigma[a]`` is the image of letter ``a``."""
    sigma = _check_permutation(sigma)
    w = as_word(w)
    if w.alphabet.size > len(sigma):
        raise ValueError("permutation does not cover the word's alphabet")
    return Word([sigma[a] for a in w], len(sigma))


def permutations(n: int) -> list[tuple[int, ...]]:
    """All letter bijections of an n-letter alphabet, identity first."""
    return list(itertools.permutations(range(n)))


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """``sigma o tau`` (apply ``tau`` first)."""
    return tuple(sigma[t] for t in tau)


def inverse_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for a, b in enumerate(sigma):
        inv[b] = a
    return tuple(inv)


def format_permutation(sigma: Sequence[int]) -> str:
    """``(2, 0, 1)`` -> ``"012→201"``."""
    return DIGITS[: len(sigma)] + "→" + "".join(DIGITS[a] for a in sigma)


def parse_permutation(text: str) -> tuple[int, ...]:
    src, _, dst = text.partition("→")
    if not dst:
        src, _, dst = text.partition("->")
    mapping = dict(zip((DIGITS.index(c) for c in src), (DIGITS.index(c) for c in dst)))
    return _check_permutation(tuple(mapping[a] for a in range(len(mapping))))


def permutation_orbit(cw: CircularWord) -> set[CircularWord]:
    """Images of ``cw`` under every letter permutation of its alphabet."""
    return {canonicalize(apply_permutation(s, cw.canonical)) for s in permutations(cw.alphabet.size)}


def orbit(cw: CircularWord) -> set[CircularWord]:
    """Images under letter permutations and inversion."""
    out = permutation_orbit(cw)
    out |= permutation_orbit(canonicalize(invert(cw.canonical)))
    return out


def letter_split(cw: CircularWord, a: int, k: int) -> CircularWord:
    """Split letter ``a`` into ``k`` letters by occurrence number modulo ``k``.

    Scanning the canonical representative, occurrence ``p`` (0-based) keeps
    ``a`` when ``p % k == 0`` and otherwise becomes the new letter
    ``N + p % k - 1``, where ``N`` is the old alphabet size.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    w = cw.canonical
    n = w.alphabet.size
    if not 0 <= a < n:
        raise ValueError(f"letter {a} outside alphabet")
    if w.count(a) % k:
        raise ValueError(f"occurrences of letter {a} not divisible by {k}")
    out = []
    p = 0
    for b in w:
        if b == a:
            r = p % k
            out.append(a if r == 0 else n + r - 1)
            p += 1
        else:
            out.append(b)
    return canonicalize(Word(out, n + k - 1))
