"""Balanced ternary words arranged on the Calkin-Wilf tree of coprime pairs."""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from .christoffel import Slope, christoffel
from .ternary import phi
from .words import CircularWord, canonicalize


def triple_word(m: int, n: int) -> CircularWord:
    """Balanced class with Parikh vector ``(m, m, n)``."""
    if m < 1 or n < 1 or gcd(m, n) != 1:
        raise ValueError(f"({m},{n}) not coprime")
    if n % 2:
        return canonicalize(phi(christoffel(Slope(2 * m, n))))
    return canonicalize(phi(christoffel(Slope(m, n // 2), 2)))


@dataclass(frozen=True)
class TreeNode:
    pair: tuple[int, int]
    word: CircularWord
    children: tuple["TreeNode", ...] = ()

    @property
    def triple(self) -> tuple[int, int, int]:
        m, n = self.pair
        return m, m, n

    def walk(self) -> Iterator["TreeNode"]:
        """Pre-order traversal."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def to_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "triple": list(self.triple),
            "word": str(self.word),
            "children": [c.to_dict() for c in self.children],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TreeNode":
        return cls(
            tuple(data["pair"]),
            CircularWord.of(data["word"], 3),
            tuple(cls.from_dict(c) for c in data["children"]),
        )


def build_tree(depth: int, root: tuple[int, int] = (1, 1)) -> TreeNode:
    """Complete tree: ``(m, n)`` has left child ``(m, m+n)`` and right child ``(m+n, n)``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    m, n = root
    children: tuple[TreeNode, ...] = ()
    if depth > 0:
        children = (build_tree(depth - 1, (m, m + n)), build_tree(depth - 1, (m + n, n)))
    return TreeNode((m, n), triple_word(m, n), children)


def export_dot(tree: TreeNode, name: str = "balanced_words") -> str:
    ids: dict[int, str] = {}
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    for i, node in enumerate(tree.walk()):
        ids[id(node)] = f"n{i}"
        m, n = node.pair
        lines.append(f'  n{i} [label="{node.word}", tooltip="({m},{m},{n})"];')
    for node in tree.walk():
        for child in node.children:
            lines.append(f"  {ids[id(node)]} -> {ids[id(child)]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(tree: TreeNode, indent: Optional[int] = None) -> str:
    return json.dumps(tree.to_dict(), indent=indent)


def tree_from_json(text: str) -> TreeNode:
    return TreeNode.from_dict(json.loads(text))


def calkin_wilf_depth(m: int, n: int) -> int:
    """Depth of the pair ``(m, n)`` below the root ``(1, 1)``."""
    if gcd(m, n) != 1:
        raise ValueError(f"({m},{n}) not coprime")
    depth = 0
    while (m, n) != (1, 1):
        if m < n:
            n -= m
        else:
            m -= n
        depth += 1
    return depth
