"""Discrete approximations of lines and planes as lattice paths."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .christoffel import Slope, _slope, christoffel
from .words import Word

XI, ETA, ZETA = 0, 1, 2
_UNIT = {XI: (1, 0, 0), ETA: (0, 1, 0), ZETA: (0, 0, 1)}


@dataclass(frozen=True)
class LatticePath:
    """Unit-step path from the origin; step tags 0/1/2 are the x/y/z unit vectors.

    A 2D path uses tags 0 (horizontal) and 1 (vertical) only.
    """

    dimension: int
    steps: tuple[int, ...]

    def __post_init__(self):
        if self.dimension not in (2, 3):
            raise ValueError("dimension must be 2 or 3")
        if any(s not in range(self.dimension) for s in self.steps):
            raise ValueError("step tag outside the path dimension")

    def points(self) -> list[tuple[int, ...]]:
        p = [0] * self.dimension
        out = [tuple(p)]
        for s in self.steps:
            p[s] += 1
            out.append(tuple(p))
        return out

    @property
    def end(self) -> tuple[int, ...]:
        counts = [0] * self.dimension
        for s in self.steps:
            counts[s] += 1
        return tuple(counts)

    def word(self) -> Word:
        return Word(self.steps, self.dimension)

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class PlaneSpec:
    """The plane ``z = q x + q y`` with ``q = n / m``."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")
        if gcd(self.m, self.n) != 1:
            raise ValueError(f"({self.m},{self.n}) not coprime")


def path2d(s, power: int = 1) -> LatticePath:
    return LatticePath(2, tuple(christoffel(_slope(s), power)))


def path3d(plane: PlaneSpec) -> tuple[LatticePath, Word]:
    """Walk below ``z = (n/m)(x + y)``, climbing whenever the plane allows.

    Horizontal moves alternate x, y, x, ... starting with x.  The walk stops at
    the first point after the origin with ``x == y`` lying on the plane.
    """
    m, n = plane.m, plane.n
    x = y = z = 0
    steps = []
    next_horizontal = XI
    while True:
        if (z + 1) * m <= n * (x + y):
            z += 1
            steps.append(ZETA)
        else:
            steps.append(next_horizontal)
            if next_horizontal == XI:
                x += 1
            else:
                y += 1
            next_horizontal ^= 1
        if x == y and z * m == n * (x + y):
            break
    path = LatticePath(3, tuple(steps))
    return path, path.word()


def project_to_diagonal(path: LatticePath) -> LatticePath:
    """Orthogonal projection onto the plane ``x = y`` with horizontal steps rescaled to 1."""
    if path.dimension != 3:
        raise ValueError("projection takes a 3D path")
    return LatticePath(2, tuple(1 if s == ZETA else 0 for s in path.steps))


def plane_power(m: int) -> int:
    """Exponent of the Christoffel power whose phi-image the 3D walk reads."""
    return 1 if m % 2 == 0 else 2
