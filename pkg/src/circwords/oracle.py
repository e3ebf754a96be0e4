"""Exhaustive brute-force classification of necklaces, independent of the constructions.

Only word-core and abelian-analysis code is used to decide membership; the
constructive enumerations are consulted solely to compare against.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .abelian import batch_complexity_and_balance
from .words import CircularWord, Word


def _codes_to_digits(codes: np.ndarray, alphabet: int, length: int) -> np.ndarray:
    digits = np.empty((len(codes), length), dtype=np.int8)
    rest = codes.copy()
    for j in range(length - 1, -1, -1):
        digits[:, j] = rest % alphabet
        rest //= alphabet
    return digits


def _necklace_shard(alphabet: int, length: int, lo: int, hi: int) -> np.ndarray:
    """Digit rows of canonical words whose base-N code lies in ``[lo, hi)``.

    A string is kept iff its code is the minimum over its rotations (codes
    compare like the strings, most significant letter first) and it uses
    every letter.
    """
    codes = np.arange(lo, hi, dtype=np.int64)
    top = alphabet ** (length - 1)
    keep = np.ones(len(codes), dtype=bool)
    rot = codes.copy()
    for _ in range(length - 1):
        rot = (rot % top) * alphabet + rot // top
        keep &= codes <= rot
    digits = _codes_to_digits(codes[keep], alphabet, length)
    for a in range(alphabet):
        digits = digits[(digits == a).any(axis=1)]
    return digits


def _shards(alphabet: int, length: int, count: int) -> list[tuple[int, int]]:
    total = alphabet**length
    edges = np.linspace(0, total, count + 1).astype(np.int64)
    return [(int(a), int(b)) for a, b in zip(edges, edges[1:]) if b > a]


def _shard_count(alphabet: int, length: int) -> int:
    return max(1, alphabet**length // 500_000)


def _as_classes(rows: np.ndarray, alphabet: int) -> set[CircularWord]:
    return {CircularWord(Word(r.tolist(), alphabet)) for r in rows}


def enumerate_necklaces(N: int, L: int) -> set[CircularWord]:
    """Every length-``L`` class over ``N`` letters that uses all ``N`` letters."""
    if N not in (2, 3):
        raise ValueError("only binary and ternary alphabets are enumerated")
    if L < N:
        raise ValueError("length must be at least the alphabet size")
    rows = [_necklace_shard(N, L, lo, hi) for lo, hi in _shards(N, L, _shard_count(N, L))]
    return _as_classes(np.concatenate(rows), N)


def _classify_shard(args) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    alphabet, length, lo, hi = args
    rows = _necklace_shard(alphabet, length, lo, hi)
    if len(rows) == 0:
        return rows, np.zeros(0, dtype=bool), np.zeros(0, dtype=np.int64)
    maxc, balanced = batch_complexity_and_balance(rows, alphabet)
    return rows, balanced, maxc


@dataclass
class LengthResult:
    length: int
    necklaces: int
    balanced: set[CircularWord]
    bounded3: set[CircularWord]
    bounded2: set[CircularWord]
    seconds: float


def brute_classify_length(N: int, L: int, threads: int = 1) -> LengthResult:
    if N not in (2, 3):
        raise ValueError("only binary and ternary alphabets are enumerated")
    if L < N:
        raise ValueError("length must be at least the alphabet size")
    t0 = time.perf_counter()
    jobs = [(N, L, lo, hi) for lo, hi in _shards(N, L, max(threads, _shard_count(N, L)))]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_classify_shard, jobs))
    else:
        parts = [_classify_shard(j) for j in jobs]
    rows = np.concatenate([p[0] for p in parts])
    balanced = np.concatenate([p[1] for p in parts])
    maxc = np.concatenate([p[2] for p in parts])
    return LengthResult(
        length=L,
        necklaces=len(rows),
        balanced=_as_classes(rows[balanced], N),
        bounded3=_as_classes(rows[maxc <= 3], N),
        bounded2=_as_classes(rows[maxc <= 2], N),
        seconds=time.perf_counter() - t0,
    )


@dataclass
class OracleReport:
    """Per-length oracle sets and every disagreement with the constructive side."""

    alphabet: int
    lengths: list[int]
    balanced: dict[int, set[CircularWord]] = field(default_factory=dict)
    bounded3: dict[int, set[CircularWord]] = field(default_factory=dict)
    necklaces: dict[int, int] = field(default_factory=dict)
    seconds: dict[int, float] = field(default_factory=dict)
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def add(self, result: LengthResult):
        self.balanced[result.length] = result.balanced
        self.bounded3[result.length] = result.bounded3
        self.necklaces[result.length] = result.necklaces
        self.seconds[result.length] = result.seconds

    def mismatch(self, length: int, kind: str, side: str, words):
        for w in sorted(words):
            self.mismatches.append({"length": length, "set": kind, "onlyIn": side, "word": str(w)})

    def to_json(self) -> dict:
        return {
            "alphabet": self.alphabet,
            "lengths": self.lengths,
            "perLength": [
                {
                    "length": L,
                    "necklaces": self.necklaces[L],
                    "balanced": len(self.balanced[L]),
                    "bounded3": len(self.bounded3[L]),
                    "seconds": round(self.seconds[L], 4),
                }
                for L in self.lengths
            ],
            "mismatches": self.mismatches,
            "ok": self.ok,
        }


def brute_classify(N: int, L: int, threads: int = 1) -> OracleReport:
    report = OracleReport(N, [L])
    report.add(brute_classify_length(N, L, threads))
    return report


def _by_length(classes: set[CircularWord]) -> dict[int, set[CircularWord]]:
    out: dict[int, set[CircularWord]] = {}
    for c in classes:
        out.setdefault(c.length, set()).add(c)
    return out


def verify_theorems(max_len: int, alphabet: int = 3, threads: int = 1) -> OracleReport:
    """Compare the oracle with the constructive classifications at every length.

    Ternary: balanced classes against ``enumerate_B3`` and 3-bounded classes
    against ``enumerate_M3``.  Binary: balanced, complexity <= 2 and
    Christoffel-power classes must all coincide.
    """
    # deferred so the oracle module itself stays free of the constructive code
    from .christoffel import classify_binary
    from .ternary import enumerate_B3, enumerate_M3

    start = alphabet
    if max_len < start:
        raise ValueError(f"max_len must be at least {start}")
    lengths = list(range(start, max_len + 1))
    report = OracleReport(alphabet, lengths)
    if alphabet == 3:
        b3 = _by_length(enumerate_B3(max_len))
        m3 = _by_length(enumerate_M3(max_len))
    for L in lengths:
        res = brute_classify_length(alphabet, L, threads)
        report.add(res)
        if alphabet == 3:
            checks = [("B3", res.balanced, b3.get(L, set())), ("M3", res.bounded3, m3.get(L, set()))]
        else:
            christoffel_powers = {c for c in enumerate_necklaces(2, L) if classify_binary(c) is not None}
            checks = [("balanced=christoffel", res.balanced, christoffel_powers),
                      ("rho<=2=christoffel", res.bounded2, christoffel_powers)]
        for kind, oracle_set, constructive in checks:
            report.mismatch(L, kind, "oracle", oracle_set - constructive)
            report.mismatch(L, kind, "constructive", constructive - oracle_set)
    return report
