"""Square matrices indexed by multipartitions."""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Iterator, List, Sequence, Tuple

from .laurent import ZERO, LaurentPoly
from .partitions import Multipartition

__all__ = ["LabeledMatrix"]

Key = Multipartition


class LabeledMatrix:
    """Sparse square matrix; entries default to ``zero`` (``0`` or the zero polynomial)."""

    def __init__(self, order: Sequence[Key], entries: Dict[Tuple[Key, Key], object] | None = None, zero=ZERO):
        self.order: List[Key] = list(order)
        self.zero = zero
        self._index = {k: i for i, k in enumerate(self.order)}
        if len(self._index) != len(self.order):
            raise ValueError("duplicate keys in order")
        self.entries: Dict[Tuple[Key, Key], object] = {}
        for (r, c), v in (entries or {}).items():
            self[r, c] = v

    @classmethod
    def identity(cls, order: Sequence[Key], one=None, zero=ZERO) -> "LabeledMatrix":
        one = LaurentPoly.const(1) if one is None else one
        return cls(order, {(k, k): one for k in order}, zero=zero)

    def __len__(self) -> int:
        return len(self.order)

    def index(self, key: Key) -> int:
        return self._index[key]

    def __contains__(self, key: Key) -> bool:
        return key in self._index

    def __getitem__(self, rc: Tuple[Key, Key]):
        return self.entries.get(rc, self.zero)

    def __setitem__(self, rc: Tuple[Key, Key], value) -> None:
        r, c = rc
        if r not in self._index or c not in self._index:
            raise KeyError(f"unknown key in {rc}")
        if value == 0:
            self.entries.pop(rc, None)
        else:
            self.entries[rc] = value

    def nonzero(self) -> Iterator[Tuple[Key, Key, object]]:
        for (r, c), v in self.entries.items():
            yield r, c, v

    def column(self, c: Key) -> Dict[Key, object]:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def map(self, fn: Callable, zero=None) -> "LabeledMatrix":
        zero = self.zero if zero is None else zero
        out = LabeledMatrix(self.order, zero=zero)
        for rc, v in self.entries.items():
            out[rc] = fn(v)
        return out

    def _check_same(self, other: "LabeledMatrix") -> None:
        if set(self.order) != set(other.order):
            raise ValueError("matrices have different key sets")

    def __matmul__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        self._check_same(other)
        rows: Dict[Key, List[Tuple[Key, object]]] = {}
        for (r, c), v in self.entries.items():
            rows.setdefault(r, []).append((c, v))
        cols: Dict[Key, List[Tuple[Key, object]]] = {}
        for (r, c), v in other.entries.items():
            cols.setdefault(r, []).append((c, v))
        out = LabeledMatrix(self.order, zero=self.zero)
        acc: Dict[Tuple[Key, Key], object] = {}
        for r, items in rows.items():
            for k, v in items:
                for c, w in cols.get(k, ()):
                    acc[(r, c)] = acc.get((r, c), self.zero) + v * w
        for rc, v in acc.items():
            out[rc] = v
        return out

    def __sub__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        self._check_same(other)
        out = LabeledMatrix(self.order, dict(self.entries), zero=self.zero)
        for rc, v in other.entries.items():
            out[rc] = out[rc] - v
        return out

    def scale(self, k: int) -> "LabeledMatrix":
        return self.map(lambda v: v * k)

    def equal_entries(self, other: "LabeledMatrix") -> bool:
        self._check_same(other)
        keys = set(self.entries) | set(other.entries)
        return all(self[k] == other[k] for k in keys)

    def differences(self, other: "LabeledMatrix") -> List[Tuple[Key, Key, object, object]]:
        keys = set(self.entries) | set(other.entries)
        bad = [(r, c, self[r, c], other[r, c]) for r, c in keys if self[r, c] != other[r, c]]
        bad.sort(key=lambda t: (self.index(t[0]), self.index(t[1])))
        return bad

    def rows(self) -> Iterable[List[object]]:
        for r in self.order:
            yield [self[r, c] for c in self.order]
