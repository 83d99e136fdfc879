"""Charges, abaci and the bijection between charged partitions and
charged l-multipartitions.

Every integer ``k`` is written uniquely as ``k = c + n(d-1) + n*l*m`` with
``1 <= c <= n`` and ``1 <= d <= l``; the bead ``k`` of a one-runner abacus is
sent to position ``phi(k) = c + n*m`` on runner ``d``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from .partitions import Multipartition, Partition, partitions_of, strictly_dominates

__all__ = [
    "BetaWord",
    "Decomposition",
    "MultiAbacus",
    "Multicharge",
    "beta_numbers",
    "big_partition",
    "decompose",
    "enumerate_multipartitions",
    "is_m_dominant",
    "kappa",
    "partition_from_beta",
    "phi",
    "precedes",
    "tau",
    "tau_inv",
    "v_length",
]


class Multicharge(tuple):
    """An l-tuple of integers ``(s_1, ..., s_l)``."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise ValueError("a multicharge needs at least one entry")
        return super().__new__(cls, entries)

    @property
    def level(self) -> int:
        return len(self)

    def total(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Multicharge({tuple(self)})"


class Decomposition(NamedTuple):
    c: int
    d: int
    m: int


def decompose(k: int, n: int, l: int) -> Decomposition:
    if n < 1 or l < 1:
        raise ValueError("n and l must be positive")
    m, rem = divmod(k - 1, n * l)
    d, c = divmod(rem, n)
    return Decomposition(c + 1, d + 1, m)


def phi(k: int, n: int, l: int) -> int:
    c, _, m = decompose(k, n, l)
    return c + n * m


def _compose(p: int, d: int, n: int, l: int) -> int:
    """Inverse of ``k -> (phi(k), d(k))``."""
    m, c = divmod(p - 1, n)
    return c + 1 + n * (d - 1) + n * l * m


def kappa(word: Sequence[int]) -> int:
    counts: dict = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
    return sum(c * (c - 1) // 2 for c in counts.values())


def v_length(word: Sequence[int], n: int, l: int) -> int:
    ds = [decompose(k, n, l).d for k in word]
    return sum(1 for i in range(len(ds)) for j in range(i + 1, len(ds)) if ds[i] < ds[j])


class BetaWord(NamedTuple):
    values: Tuple[int, ...]
    charge: int


def beta_numbers(p: Sequence[int], s: int, r: int) -> BetaWord:
    p = Partition(p)
    if len(p) > r:
        raise ValueError(f"partition {p} has more than {r} parts")
    return BetaWord(tuple(p.part(i) + s - i + 1 for i in range(1, r + 1)), s)


def partition_from_beta(w, s: int | None = None) -> Partition:
    if isinstance(w, BetaWord):
        values, s = w.values, w.charge
    else:
        values = tuple(w)
        if s is None:
            raise ValueError("charge required")
    for a, b in zip(values, values[1:]):
        if a <= b:
            raise ValueError(f"beta word {values} is not strictly decreasing")
    parts = [v - s + i for i, v in enumerate(values)]
    if any(x < 0 for x in parts):
        raise ValueError(f"beta word {values} gives negative parts at charge {s}")
    return Partition(parts)


class MultiAbacus(NamedTuple):
    """Each runner is ``extra ∪ (-inf, floor]`` with every element of ``extra`` above ``floor``."""

    floors: Tuple[int, ...]
    extras: Tuple[Tuple[int, ...], ...]

    def charges(self) -> Tuple[int, ...]:
        return tuple(f + len(e) for f, e in zip(self.floors, self.extras))

    def runner_contains(self, d: int, x: int) -> bool:
        return x <= self.floors[d - 1] or x in self.extras[d - 1]


def _abacus_of(lam: Partition, s: int, n: int, l: int) -> MultiAbacus:
    r = len(lam)
    # beads k <= s - r fill an initial segment of every runner
    tail_top = s - r
    window = range(tail_top - n * l + 1, tail_top + 1)
    floors = [max(phi(k, n, l) for k in window if decompose(k, n, l).d == d) for d in range(1, l + 1)]
    extras: List[List[int]] = [[] for _ in range(l)]
    for i, part in enumerate(lam, start=1):
        k = part + s + 1 - i
        c, d, m = decompose(k, n, l)
        extras[d - 1].append(c + n * m)
    return MultiAbacus(tuple(floors), tuple(tuple(sorted(e, reverse=True)) for e in extras))


def _runner_partition(floor: int, extra: Sequence[int]) -> Tuple[Partition, int]:
    beads = sorted(set(extra), reverse=True)
    charge = floor + len(beads)
    parts = [x - charge - 1 + i for i, x in enumerate(beads, start=1)]
    return Partition(parts), charge


def tau(lam: Sequence[int], s: int, n: int, l: int) -> Tuple[Multipartition, Multicharge]:
    lam = Partition(lam)
    ab = _abacus_of(lam, s, n, l)
    comps, charges = [], []
    for fl, ex in zip(ab.floors, ab.extras):
        p, c = _runner_partition(fl, ex)
        comps.append(p)
        charges.append(c)
    return Multipartition(comps), Multicharge(charges)


def tau_inv(mp, mc: Sequence[int], n: int) -> Tuple[Partition, int]:
    mp = mp if isinstance(mp, Multipartition) else Multipartition(mp)
    mc = tuple(mc)
    l = len(mc)
    if len(mp) != l:
        raise ValueError("multipartition and multicharge have different levels")
    s = sum(mc)
    moved = []
    lows = []
    for d, (p, sd) in enumerate(zip(mp, mc), start=1):
        r = len(p)
        for i in range(1, r + 1):
            moved.append(_compose(p.part(i) + sd + 1 - i, d, n, l))
        # every runner position <= sd - r is a bead
        lows.append(_compose(sd - r, d, n, l))
    # every k below min(lows) lies in an initial segment of some runner
    cutoff = min(lows)
    beads = [k for k in moved if k > cutoff]
    for d, (p, sd) in enumerate(zip(mp, mc), start=1):
        r = len(p)
        pos = sd - r
        while True:
            k = _compose(pos, d, n, l)
            if k <= cutoff:
                break
            beads.append(k)
            pos -= 1
    beads.sort(reverse=True)
    # everything at or below the cutoff is a bead, so exactly s - cutoff lie above
    if len(beads) != s - cutoff:
        raise AssertionError("inconsistent abacus")
    lam = Partition(b - s - 1 + i for i, b in enumerate(beads, start=1))
    return lam, s


def big_partition(mp, mc: Sequence[int], n: int) -> Partition:
    return tau_inv(mp, mc, n)[0]


def precedes(a, b, mc: Sequence[int], n: int) -> bool:
    if a == b:
        return False
    la = big_partition(a, mc, n)
    lb = big_partition(b, mc, n)
    return la.size() == lb.size() and strictly_dominates(la, lb)


def is_m_dominant(mc: Sequence[int], M: int) -> bool:
    return all(mc[d + 1] - mc[d] >= M for d in range(len(mc) - 1))


@lru_cache(maxsize=None)
def _multipartitions(l: int, m: int) -> Tuple[Multipartition, ...]:
    if l == 1:
        return tuple(Multipartition([p]) for p in partitions_of(m))
    out = []
    for first in range(m, -1, -1):
        for p in partitions_of(first):
            for rest in _multipartitions(l - 1, m - first):
                out.append(Multipartition((p,) + tuple(rest)))
    return tuple(out)


def enumerate_multipartitions(l: int, m: int, mc: Sequence[int] | None = None, n: int | None = None) -> List[Multipartition]:
    """All l-multipartitions of m.

    With ``mc`` and ``n`` the result is in display order: descending
    lexicographic order of the big partition. Otherwise the order is a fixed
    structural one.
    """
    items = list(_multipartitions(l, m))
    if mc is None or n is None:
        return items
    keyed = [(big_partition(mp, mc, n), mp) for mp in items]
    width = max((len(lam) for lam, _ in keyed), default=0)
    keyed.sort(key=lambda t: tuple(t[0]) + (0,) * (width - len(t[0])), reverse=True)
    return [mp for _, mp in keyed]
