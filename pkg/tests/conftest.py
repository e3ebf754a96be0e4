"""Naive reference implementations used as independent oracles in the tests.

Everything here works on plain digit strings and re-derives each notion from
its definition, sharing no code with the package.
"""
import itertools

import pytest


def naive_canonical(w: str) -> str:
    return min(w[i:] + w[:i] for i in range(len(w)))


def naive_necklaces(N: int, L: int, all_letters: bool = True) -> set[str]:
    letters = "0123456789"[:N]
    out = set()
    for t in itertools.product(letters, repeat=L):
        w = "".join(t)
        if all_letters and len(set(w)) < N:
            continue
        out.add(naive_canonical(w))
    return out


def naive_spectrum(w: str, n: int, N: int = 3) -> set[tuple]:
    d = w + w
    return {tuple(d[i : i + n].count(c) for c in "0123456789"[:N]) for i in range(len(w))}


def naive_complexity(w: str, n: int) -> int:
    return len(naive_spectrum(w, n, 10))


def naive_balanced(w: str) -> bool:
    """Definition check: every pair of equal-length circular factors differs by <= 1 per letter."""
    d = w + w
    for n in range(1, len(w)):
        factors = [d[i : i + n] for i in range(len(w))]
        for u, v in itertools.combinations(factors, 2):
            if any(abs(u.count(c) - v.count(c)) > 1 for c in set(u + v)):
                return False
    return True


def naive_max_complexity(w: str) -> int:
    return max(naive_complexity(w, n) for n in range(1, len(w) + 1))


@pytest.fixture(scope="session")
def ternary_necklaces():
    """All ternary necklaces (all letters used) by length, 3..9."""
    return {L: naive_necklaces(3, L) for L in range(3, 10)}
