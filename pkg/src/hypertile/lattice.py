"""Core Z^4 lattice-cube data model.

A unit 4-cube with integer corners is named by its *location label*: the
4-tuple ``(a, b, c, d)`` of right endpoints of the unit intervals it
occupies on the axes ``x, y, z, w``.  The cube is the closed box
``[a-1,a] x [b-1,b] x [c-1,c] x [d-1,d]``.  All geometry in this package
is reconstructed from labels on demand; nothing is stored as floating
point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, product
from typing import Iterable, Iterator

import numpy as np

Label = tuple[int, int, int, int]

AXES = ("x", "y", "z", "w")


def _as_label(value) -> Label:
    t = tuple(value)
    if len(t) != 4 or not all(isinstance(v, int) for v in t):
        raise ValueError(f"a location label is a 4-tuple of integers, got {value!r}")
    return t  # type: ignore[return-value]


class CubeSet:
    """A finite, deduplicated set of location labels.

    Iteration is always in lexicographic order on ``(a, b, c, d)`` so that
    exports and diffs are reproducible.  Instances are immutable and may be
    shared freely across threads.
    """

    __slots__ = ("_labels", "_sorted", "_array")

    def __init__(self, labels: Iterable[Label] = ()):
        if isinstance(labels, CubeSet):
            self._labels = labels._labels
        elif isinstance(labels, frozenset):
            self._labels = labels
        else:
            self._labels = frozenset(labels)
        self._sorted: tuple[Label, ...] | None = None
        self._array: np.ndarray | None = None

    @classmethod
    def _wrap(cls, labels: frozenset) -> "CubeSet":
        s = cls.__new__(cls)
        s._labels = labels
        s._sorted = None
        s._array = None
        return s

    @property
    def labels(self) -> tuple[Label, ...]:
        """All labels in lexicographic order."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self._labels))
        return self._sorted

    def as_array(self) -> np.ndarray:
        """The labels as an ``(N, 4)`` int64 array (unspecified row order)."""
        if self._array is None:
            n = len(self._labels)
            flat = np.fromiter(
                chain.from_iterable(self._labels), dtype=np.int64, count=4 * n
            )
            self._array = flat.reshape(n, 4)
            self._array.setflags(write=False)
        return self._array

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.labels)

    def __contains__(self, label) -> bool:
        return tuple(label) in self._labels

    def __eq__(self, other) -> bool:
        if isinstance(other, CubeSet):
            return self._labels == other._labels
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"CubeSet({len(self._labels)} labels)"

    def __or__(self, other: "CubeSet") -> "CubeSet":
        return CubeSet._wrap(self._labels | other._labels)

    def __and__(self, other: "CubeSet") -> "CubeSet":
        return CubeSet._wrap(self._labels & other._labels)

    def __sub__(self, other: "CubeSet") -> "CubeSet":
        return CubeSet._wrap(self._labels - other._labels)

    def isdisjoint(self, other: "CubeSet") -> bool:
        return self._labels.isdisjoint(other._labels)

    def issubset(self, other: "CubeSet") -> bool:
        return self._labels <= other._labels

    def filter(self, predicate) -> "CubeSet":
        return CubeSet._wrap(frozenset(v for v in self._labels if predicate(v)))

    def map(self, iso) -> "CubeSet":
        """Image of this set under an isometry's label action."""
        return CubeSet._wrap(frozenset(map(iso.apply_label, self._labels)))

    def raw(self) -> frozenset:
        """The underlying frozenset, for order-insensitive bulk work."""
        return self._labels

    def to_json(self) -> dict:
        return {"labels": [list(v) for v in self.labels]}

    @classmethod
    def from_json(cls, data: dict) -> "CubeSet":
        return cls(_as_label(row) for row in data["labels"])


@dataclass(frozen=True)
class SetRelation:
    """Exact set algebra between two cube sets."""

    disjoint: bool
    union: CubeSet
    difference: CubeSet
    equal: bool


def set_relate(s: CubeSet, t: CubeSet) -> SetRelation:
    """Relate two cube sets: disjointness, union, difference ``s - t``, equality."""
    return SetRelation(
        disjoint=s.isdisjoint(t),
        union=s | t,
        difference=s - t,
        equal=s == t,
    )


@dataclass(frozen=True)
class Region:
    """An axis-aligned box of unit-cube locations, bounds inclusive in labels."""

    lo: Label
    hi: Label

    def __post_init__(self):
        if any(l > h for l, h in zip(self.lo, self.hi)):
            raise ValueError(f"empty region: lo={self.lo} exceeds hi={self.hi}")

    def __len__(self) -> int:
        n = 1
        for l, h in zip(self.lo, self.hi):
            n *= h - l + 1
        return n

    def __contains__(self, label) -> bool:
        return all(l <= v <= h for v, l, h in zip(label, self.lo, self.hi))

    def cubes(self) -> CubeSet:
        ranges = [range(l, h + 1) for l, h in zip(self.lo, self.hi)]
        return CubeSet._wrap(frozenset(product(*ranges)))


def r3_region(n: int) -> Region:
    """The box with ``a, b in [1, n+1]`` and ``c, d in [1, n]``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Region((1, 1, 1, 1), (n + 1, n + 1, n, n))


@lru_cache(maxsize=2)
def region_r3(n: int) -> CubeSet:
    """All ``n^2 (n+1)^2`` unit-cube locations of the target box for size n."""
    return r3_region(n).cubes()
