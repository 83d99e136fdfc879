"""Partitions, multipartitions, and ribbon combinatorics on Young diagrams.

Nodes are 1-indexed ``(row, col)`` pairs in English convention; a node of a
multipartition additionally carries its component index ``comp`` in ``1..l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

__all__ = [
    "BetaCollisionError",
    "BetaRangeError",
    "Multipartition",
    "Node",
    "Partition",
    "Ribbon",
    "conjugate",
    "conjugate_multi",
    "dominates",
    "extract_ribbon",
    "node_content",
    "partitions_of",
    "remove_ribbon_by_beta",
    "residue_counts",
    "strictly_dominates",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers (trailing zeros stripped)."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        parts = parts[:end]
        for i, p in enumerate(parts):
            if p < 0 or (i and p > parts[i - 1]):
                raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> Tuple[int, ...]:
        return tuple(self)

    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-indexed part, zero beyond the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def contains(self, other: "Partition") -> bool:
        """True if ``other``'s diagram is a subset of this one."""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def intersection(self, other: "Partition") -> "Partition":
        return Partition(min(a, b) for a, b in zip(self, other))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "∅"


@dataclass(frozen=True, order=True)
class Node:
    row: int
    col: int
    comp: int = 1

    @property
    def diagonal(self) -> int:
        return self.col - self.row


@dataclass(frozen=True)
class Ribbon:
    cells: FrozenSet[Node]
    head: Node
    tail: Node

    @property
    def length(self) -> int:
        return len(self.cells)

    @property
    def height(self) -> int:
        return self.head.row - self.tail.row


class Multipartition(tuple):
    """An l-tuple of :class:`Partition`."""

    __slots__ = ()

    def __new__(cls, components: Iterable[Iterable[int]]):
        return super().__new__(cls, (c if isinstance(c, Partition) else Partition(c) for c in components))

    @property
    def components(self) -> Tuple[Partition, ...]:
        return tuple(self)

    @property
    def level(self) -> int:
        return len(self)

    def size(self) -> int:
        return sum(p.size() for p in self)

    def nodes(self) -> Iterator[Node]:
        for b, p in enumerate(self, start=1):
            for i, j in p.cells():
                yield Node(i, j, b)

    def to_list(self) -> List[List[int]]:
        return [list(p) for p in self]

    def __repr__(self) -> str:
        return f"Multipartition({self.to_list()})"

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self) + ")"


def conjugate(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return p
    return Partition(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def conjugate_multi(mp: Multipartition) -> Multipartition:
    return Multipartition(conjugate(c) for c in reversed(mp))


def _as_multi(x) -> Multipartition:
    if isinstance(x, Multipartition):
        return x
    if isinstance(x, Partition):
        return Multipartition([x])
    return Multipartition(x)


def dominates(a, b) -> bool:
    """Non-strict dominance ``a ⊴ b`` (b dominates a).

    Plain partitions are treated as level-1 multipartitions. Inputs of
    different sizes are never comparable.
    """
    a, b = _as_multi(a), _as_multi(b)
    if len(a) != len(b):
        raise ValueError("multipartitions of different levels")
    if a.size() != b.size():
        return False
    base_a = base_b = 0
    for pa, pb in zip(a, b):
        sa, sb = base_a, base_b
        for k in range(max(len(pa), len(pb))):
            sa += pa.part(k + 1)
            sb += pb.part(k + 1)
            if sa > sb:
                return False
        if base_a > base_b:
            return False
        base_a += pa.size()
        base_b += pb.size()
    return True


def strictly_dominates(a, b) -> bool:
    """``a ⊲ b``."""
    return _as_multi(a) != _as_multi(b) and dominates(a, b)


def node_content(node: Node, charges: Sequence[int]) -> int:
    return charges[node.comp - 1] + node.col - node.row


def residue_counts(shape: Iterable[Node], charges: Sequence[int], n: int) -> Dict[int, int]:
    if n < 1:
        raise ValueError("modulus must be positive")
    counts = {i: 0 for i in range(n)}
    for node in shape:
        counts[node_content(node, charges) % n] += 1
    return counts


def _skew_cells(inner: Partition, outer: Partition) -> List[Tuple[int, int]]:
    return [(i, j) for i, row in enumerate(outer, start=1) for j in range(inner.part(i) + 1, row + 1)]


def _is_ribbon(cells: Sequence[Tuple[int, int]]) -> bool:
    if not cells:
        return False
    cellset = set(cells)
    for i, j in cellset:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cellset:
            return False
    seen = {cells[0]}
    stack = [cells[0]]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cellset and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cellset)


def extract_ribbon(inner: Sequence[int], outer: Sequence[int], comp: int = 1) -> Optional[Ribbon]:
    """The ribbon ``outer / inner`` or None if the skew shape is not a ribbon."""
    inner, outer = Partition(inner), Partition(outer)
    if not outer.contains(inner):
        return None
    cells = _skew_cells(inner, outer)
    if not _is_ribbon(cells):
        return None
    head = min(cells, key=lambda c: c[1] - c[0])
    tail = max(cells, key=lambda c: c[1] - c[0])
    return Ribbon(frozenset(Node(i, j, comp) for i, j in cells), Node(*head, comp), Node(*tail, comp))


class BetaCollisionError(ValueError):
    """Moving a bead onto an occupied position."""


class BetaRangeError(ValueError):
    """Moving a bead below the range covered by the beta-word."""


def remove_ribbon_by_beta(kappa: Sequence[int], tail_row: int, h: int, s: int, r: Optional[int] = None):
    """Remove a length-``h`` ribbon whose tail lies in row ``tail_row``.

    Works on the ``r``-list of beta-numbers (default ``r = max(len(kappa), tail_row)``):
    the ``tail_row``-th bead moves down by ``h``. Returns ``(nu, ribbon)``;
    the ribbon carries the head content ``beta_b - h`` implicitly through its
    head node.
    """
    kappa = Partition(kappa)
    if h < 1:
        raise ValueError("ribbon length must be positive")
    if r is None:
        r = max(len(kappa), tail_row)
    if not 1 <= tail_row <= r:
        raise ValueError(f"tail row {tail_row} outside 1..{r}")
    beta = [kappa.part(i) + s - i + 1 for i in range(1, r + 1)]
    moved = beta[tail_row - 1] - h
    if moved in beta:
        raise BetaCollisionError(f"bead {moved} already occupied")
    if moved < s + 1 - r:
        raise BetaRangeError(f"bead {moved} below {s + 1 - r}")
    new = beta[:]
    new[tail_row - 1] = moved
    order = sorted(range(r), key=lambda i: -new[i])
    height = sum(1 for i in range(r) if beta[tail_row - 1] > beta[i] > moved)
    sorted_beta = [new[i] for i in order]
    nu = Partition(b - s + i for i, b in enumerate(sorted_beta))
    ribbon = extract_ribbon(nu, kappa)
    assert ribbon is not None and ribbon.height == height and ribbon.length == h
    return nu, ribbon


def partitions_of(m: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``m`` in reverse lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield Partition()
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions_of(m - first, first):
            yield Partition((first,) + tuple(rest))
