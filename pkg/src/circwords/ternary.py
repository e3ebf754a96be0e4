"""Balanced and abelian-3-bounded circular words over the ternary alphabet.

Constructive side: the map ``phi`` from binary Christoffel powers, the
Fraenkel word, twisted Christoffel powers and the ``01210`` family, plus a
classifier that answers with a witness able to regenerate its input.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .abelian import max_complexity, minimal_nonbalanced_scale
from .christoffel import Slope, _slope, christoffel, coprime_pairs, is_christoffel
from .words import (
    CircularWord,
    Word,
    WordLike,
    apply_permutation,
    as_word,
    canonicalize,
    format_permutation,
    inverse_permutation,
    parse_permutation,
    permutation_orbit,
    permutations,
    primitive_decomposition,
)

D3_SEED = Word("01210", 3)


def phi(w: WordLike) -> Word:
    """Send every 1 to 2 and every second 0 to 1."""
    w = as_word(w)
    if w.alphabet.size > 2:
        raise ValueError("phi takes a binary word")
    zeros = w.count(0)
    if zeros < 2 or zeros % 2 or w.count(1) < 1:
        raise ValueError(f"phi needs an even number (>= 2) of zeros and at least one 1, got {w}")
    out = []
    seen = 0
    for a in w:
        if a == 1:
            out.append(2)
        else:
            out.append(seen % 2)
            seen += 1
    return Word(out, 3)


def phi_prime(w: WordLike) -> Word:
    """Send every second 1 to 2."""
    w = as_word(w)
    if w.alphabet.size > 2:
        raise ValueError("phi_prime takes a binary word")
    ones = w.count(1)
    if ones < 2 or ones % 2 or w.count(0) < 1:
        raise ValueError(f"phi_prime needs an even number (>= 2) of ones and at least one 0, got {w}")
    out = []
    seen = 0
    for a in w:
        if a == 1:
            out.append(2 if seen % 2 else 1)
            seen += 1
        else:
            out.append(0)
    return Word(out, 3)


def unphi(w: WordLike) -> Optional[Word]:
    """Binary preimage of ``w`` under ``phi``, if ``w`` is a phi-image at all."""
    w = as_word(w)
    if w.alphabet.size > 3:
        return None
    expected = 0
    out = []
    for a in w:
        if a == 2:
            out.append(1)
        elif a == expected:
            out.append(0)
            expected ^= 1
        else:
            return None
    if expected or not out.count(0) or not out.count(1):
        return None
    return Word(out, 2)


def fraenkel(N: int) -> Word:
    """``F_1 = 0``, ``F_N = F_{N-1} (N-1) F_{N-1}``."""
    if N < 1:
        raise ValueError("N must be positive")
    w = [0]
    for letter in range(1, N):
        w = w + [letter] + w
    return Word(w, N)


@dataclass(frozen=True)
class TwistSpec:
    """Power ``C(slope)^power`` with ``10 -> 01`` swapped at the listed block borders.

    Border ``i`` sits between block ``i`` and block ``i + 1`` (1-based, linear).
    """

    slope: Slope
    power: int
    borders: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "slope", _slope(self.slope))
        object.__setattr__(self, "borders", frozenset(self.borders))
        if self.power < 2:
            raise ValueError("twisting needs power >= 2")
        if (self.power * self.slope.zeros) % 2:
            raise ValueError("twisted base power must have an even number of zeros")
        if not self.borders:
            raise ValueError("at least one border must be twisted")
        bad = [b for b in self.borders if not 1 <= b < self.power]
        if bad:
            raise ValueError(f"border index out of range 1..{self.power - 1}: {sorted(bad)}")

    @property
    def in_m3(self) -> bool:
        """Whether the phi-image is abelian-3-bounded (base must carry an even zero count)."""
        return self.slope.zeros % 2 == 0


def twisted(spec: TwistSpec) -> Word:
    base = christoffel(spec.slope)
    m = len(base)
    w = list(base * spec.power)
    for b in spec.borders:
        i = b * m
        w[i - 1], w[i] = w[i], w[i - 1]
    return Word(w, 2)


def twist_all_cyclic(slope, power: int) -> Word:
    """Swap ``10 -> 01`` at all ``power`` borders of the circular power, wrap included."""
    base = christoffel(_slope(slope))
    m = len(base)
    w = list(base * power)
    for b in range(1, power + 1):
        i = (b * m) % len(w)
        w[i - 1], w[i] = w[i], w[i - 1]
    return Word(w, 2)


def d3_words() -> set[CircularWord]:
    return permutation_orbit(canonicalize(D3_SEED))


# -- constructive enumeration -------------------------------------------------


def _orbit_of(w: Word) -> set[CircularWord]:
    return permutation_orbit(canonicalize(w))


def _christoffel_powers(max_len: int):
    for k, n in coprime_pairs(max_len):
        for p in range(1, max_len // (k + n) + 1):
            yield Slope(k, n), p


def phi_classes(max_len: int) -> set[CircularWord]:
    out = set()
    for s, p in _christoffel_powers(max_len):
        if (s.zeros * p) % 2 == 0:
            out |= _orbit_of(phi(christoffel(s, p)))
    return out


def fraenkel_classes(max_len: int) -> set[CircularWord]:
    out = set()
    f = fraenkel(3)
    for p in range(1, max_len // len(f) + 1):
        out |= _orbit_of(f * p)
    return out


def twist_specs(max_len: int) -> Iterable[TwistSpec]:
    """Every twist whose phi-image lies in M3, up to length ``max_len``."""
    for s, p in _christoffel_powers(max_len):
        if p < 2 or s.zeros % 2:
            continue
        for r in range(1, p):
            for borders in itertools.combinations(range(1, p), r):
                yield TwistSpec(s, p, frozenset(borders))


def twisted_classes(max_len: int) -> set[CircularWord]:
    out = set()
    for spec in twist_specs(max_len):
        out |= _orbit_of(phi(twisted(spec)))
    return out


def d3_classes(max_len: int) -> set[CircularWord]:
    out = set()
    for p in range(1, max_len // len(D3_SEED) + 1):
        out |= _orbit_of(D3_SEED * p)
    return out


def _primitive_only(classes: set[CircularWord], primitive: bool) -> set[CircularWord]:
    if not primitive:
        return classes
    return {c for c in classes if primitive_decomposition(c.canonical).exponent == 1}


def enumerate_B3(max_len: int, primitive: bool = False) -> set[CircularWord]:
    """Balanced ternary classes of length ``<= max_len`` built constructively."""
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    return _primitive_only(phi_classes(max_len) | fraenkel_classes(max_len), primitive)


def m3_pieces(max_len: int) -> dict[str, set[CircularWord]]:
    """The three constructive pieces of M3: balanced, twisted, and the 01210 family."""
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    return {
        "balanced": enumerate_B3(max_len),
        "twisted": twisted_classes(max_len),
        "d3": d3_classes(max_len),
    }


def enumerate_M3(max_len: int, primitive: bool = False) -> set[CircularWord]:
    pieces = m3_pieces(max_len)
    return _primitive_only(set().union(*pieces.values()), primitive)


# -- classification -----------------------------------------------------------


class Label(str, enum.Enum):
    NOT_ALL_LETTERS = "NOT_ALL_LETTERS"
    BALANCED_PHI = "BALANCED_PHI"
    BALANCED_FRAENKEL = "BALANCED_FRAENKEL"
    M3_TWISTED = "M3_TWISTED"
    M3_D3 = "M3_D3"
    OUTSIDE_M3 = "OUTSIDE_M3"

    @property
    def balanced(self) -> bool:
        return self in (Label.BALANCED_PHI, Label.BALANCED_FRAENKEL)

    @property
    def in_m3(self) -> bool:
        return self.balanced or self in (Label.M3_TWISTED, Label.M3_D3)


@dataclass(frozen=True)
class ClassificationResult:
    word: CircularWord
    label: Label
    slope: Optional[Slope] = None
    power: Optional[int] = None
    perm: Optional[tuple[int, ...]] = None
    borders: Optional[frozenset[int]] = None
    max_complexity: Optional[int] = None
    min_nonbalanced_scale: Optional[int] = None

    def regenerate(self) -> Optional[CircularWord]:
        """Rebuild the classified word from the witness alone."""
        label = self.label
        if label is Label.BALANCED_PHI:
            w = phi(christoffel(self.slope, self.power))
        elif label is Label.BALANCED_FRAENKEL:
            w = fraenkel(3) * self.power
        elif label is Label.M3_D3:
            w = D3_SEED * self.power
        elif label is Label.M3_TWISTED:
            w = phi(twisted(TwistSpec(self.slope, self.power, self.borders)))
        else:
            return None
        return canonicalize(apply_permutation(self.perm, w))

    def to_json(self) -> dict:
        out: dict = {"word": str(self.word), "label": self.label.value}
        if self.slope is not None:
            out["slope"] = self.slope.as_list()
        if self.power is not None:
            out["power"] = self.power
        if self.perm is not None:
            out["perm"] = format_permutation(self.perm)
        if self.borders is not None:
            out["borders"] = sorted(self.borders)
        if self.label is Label.OUTSIDE_M3:
            out["maxComplexity"] = self.max_complexity
            out["minNonbalancedScale"] = self.min_nonbalanced_scale
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ClassificationResult":
        return cls(
            word=CircularWord.of(data["word"], 3),
            label=Label(data["label"]),
            slope=Slope(*data["slope"]) if "slope" in data else None,
            power=data.get("power"),
            perm=parse_permutation(data["perm"]) if "perm" in data else None,
            borders=frozenset(data["borders"]) if "borders" in data else None,
            max_complexity=data.get("maxComplexity"),
            min_nonbalanced_scale=data.get("minNonbalancedScale"),
        )


def _match_orbit(root: CircularWord, seed: Word) -> Optional[tuple[int, ...]]:
    for sigma in permutations(3):
        if canonicalize(apply_permutation(sigma, seed)) == root:
            return sigma
    return None


def _preimages(cw: CircularWord):
    """Yield ``(sigma, u)`` with ``cw == [sigma(phi(u))]``, over all rotations and relabelings."""
    for tau in permutations(3):
        x = apply_permutation(tau, cw.canonical)
        for r in range(len(x)):
            u = unphi(x.rotate(r))
            if u is not None:
                yield inverse_permutation(tau), u


def _christoffel_power(u: Word) -> Optional[tuple[Slope, int]]:
    dec = primitive_decomposition(u)
    s = is_christoffel(dec.root)
    return None if s is None else (s, dec.exponent)


def _twist_of(u: Word) -> Optional[TwistSpec]:
    zeros, ones = u.count(0), u.count(1)
    p = gcd(zeros, ones)
    k, n = zeros // p, ones // p
    if p < 2 or k % 2:
        return None
    base = christoffel(Slope(k, n))
    m = len(base)
    plain = base * p
    borders = set()
    i = 0
    while i < len(u):
        if i % m == m - 1 and i + 1 < len(u):
            pair = (u[i], u[i + 1])
            if pair == (0, 1):
                borders.add((i + 1) // m)
            elif pair != (1, 0):
                return None
            i += 2
            continue
        if u[i] != plain[i]:
            return None
        i += 1
    if not borders:
        return None
    return TwistSpec(Slope(k, n), p, frozenset(borders))


def classify(cw) -> ClassificationResult:
    """Place a ternary circular word in the constructive decomposition of M3.

    Checks run cheapest first: letter presence, Fraenkel orbit, phi-preimage,
    the 01210 orbit, twisted phi-preimage.  Anything left is reported as
    outside M3 together with its maximal complexity and minimal non-balanced
    scale.
    """
    if not isinstance(cw, CircularWord):
        cw = CircularWord.of(cw)
    if cw.alphabet.size > 3:
        raise ValueError("classify expects a word over at most three letters")
    if cw.alphabet.size < 3 or len(set(cw.canonical)) < 3:
        return ClassificationResult(cw, Label.NOT_ALL_LETTERS)
    cw = CircularWord(Word(cw.canonical, 3))
    dec = primitive_decomposition(cw.canonical)
    root = canonicalize(dec.root)

    sigma = _match_orbit(root, fraenkel(3))
    if sigma is not None:
        return ClassificationResult(cw, Label.BALANCED_FRAENKEL, power=dec.exponent, perm=sigma)

    for sigma, u in _preimages(cw):
        hit = _christoffel_power(u)
        if hit is not None:
            return ClassificationResult(cw, Label.BALANCED_PHI, slope=hit[0], power=hit[1], perm=sigma)

    sigma = _match_orbit(root, D3_SEED)
    if sigma is not None:
        return ClassificationResult(cw, Label.M3_D3, power=dec.exponent, perm=sigma)

    for sigma, u in _preimages(cw):
        spec = _twist_of(u)
        if spec is not None:
            return ClassificationResult(
                cw, Label.M3_TWISTED, slope=spec.slope, power=spec.power, perm=sigma, borders=spec.borders
            )

    return ClassificationResult(
        cw,
        Label.OUTSIDE_M3,
        max_complexity=max_complexity(cw),
        min_nonbalanced_scale=minimal_nonbalanced_scale(cw),
    )
