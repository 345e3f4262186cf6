"""Dense vertex sets over contiguous vertex ids.

Every fixpoint operator in this package consumes and produces these sets.
Internally they are plain numpy boolean masks; the wrapper exists so that
set algebra reads like set algebra at call sites.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np


class VertexSet:
    """A set of vertex ids backed by a boolean mask of fixed universe size."""

    __slots__ = ("mask",)

    def __init__(self, mask: np.ndarray):
        mask = np.asarray(mask, dtype=bool)
        if mask.ndim != 1:
            raise ValueError("vertex set mask must be one-dimensional")
        self.mask = mask

    # -- construction -------------------------------------------------

    @classmethod
    def empty(cls, size: int) -> "VertexSet":
        return cls(np.zeros(size, dtype=bool))

    @classmethod
    def full(cls, size: int) -> "VertexSet":
        return cls(np.ones(size, dtype=bool))

    @classmethod
    def of(cls, size: int, ids: Iterable[int]) -> "VertexSet":
        mask = np.zeros(size, dtype=bool)
        ids = np.asarray(list(ids), dtype=np.int64)
        if ids.size:
            if ids.min() < 0 or ids.max() >= size:
                raise ValueError("vertex id out of range")
            mask[ids] = True
        return cls(mask)

    # -- queries -------------------------------------------------------

    @property
    def size(self) -> int:
        """Universe size (not the cardinality)."""
        return self.mask.shape[0]

    def ids(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def __len__(self) -> int:
        return int(np.count_nonzero(self.mask))

    def __bool__(self) -> bool:
        return bool(self.mask.any())

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.size and bool(self.mask[v])

    def __iter__(self) -> Iterator[int]:
        return iter(int(v) for v in np.flatnonzero(self.mask))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.size == other.size and bool(np.array_equal(self.mask, other.mask))

    __hash__ = None  # mutable mask: compared, never hashed

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return not (self.mask & ~other.mask).any()

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return not (self.mask & other.mask).any()

    # -- algebra -------------------------------------------------------

    def _check(self, other: "VertexSet") -> None:
        if self.size != other.size:
            raise ValueError(
                f"vertex sets over different universes ({self.size} vs {other.size})"
            )

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.mask & ~other.mask)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.mask ^ other.mask)

    def __repr__(self) -> str:
        ids = self.ids()
        shown = ", ".join(str(i) for i in ids[:16])
        if ids.size > 16:
            shown += ", ..."
        return f"VertexSet({{{shown}}} of {self.size})"
