"""Partitions, dominant weights and the Weyl dimension formula.

Partitions are stored with trailing zeros stripped, so ``Partition((2, 1))``
and ``Partition((2, 1, 0))`` are the same value. Where a fixed number of
parts matters (e.g. a weight of length ``n``) use :meth:`Partition.padded`.
"""

from __future__ import annotations

from math import prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of non-negative integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part in {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"{parts} is not weakly decreasing")
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return super().__new__(cls, parts[:end])

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"2,1,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(p) for p in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    def part(self, i: int) -> int:
        """The ``i``-th part, 1-based, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self):
            raise ValueError(f"{self!r} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def truncate(self, c: int) -> "Partition":
        """Keep the first ``c`` columns: parts become ``min(x_i, c)``."""
        return Partition(min(p, c) for p in self)

    def double(self) -> "Partition":
        """Repeat every part twice: (z1, z1, z2, z2, ...)."""
        return Partition(p for p in self for _ in range(2))

    def fits_in(self, other: Sequence[int]) -> bool:
        return contains(self, other)


def conjugate(x: Sequence[int]) -> Partition:
    return Partition(x).conjugate()


def truncate_columns(x: Sequence[int], c: int) -> Partition:
    return Partition(x).truncate(c)


def double(z: Sequence[int]) -> Partition:
    return Partition(z).double()


def contains(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff the diagram of ``x`` fits inside the diagram of ``y``."""
    if len(x) > len(y) and any(x[len(y):]):
        return False
    return all(a <= b for a, b in zip(x, y))


def enumerate_partitions(max_parts: int, part_bound: int,
                         size_bound: int | None = None) -> Iterator[Partition]:
    """All partitions with at most ``max_parts`` parts, each at most
    ``part_bound``, and total size at most ``size_bound`` when given.

    Order: by first part, then recursively (lexicographic on the padded
    tuple, increasing).
    """
    if max_parts < 0 or part_bound < 0 or (size_bound is not None and size_bound < 0):
        raise ValueError("bounds must be non-negative")
    budget = size_bound if size_bound is not None else max_parts * part_bound

    def rec(slots, bound, budget):
        if slots == 0:
            yield ()
            return
        yield ()
        for first in range(1, min(bound, budget) + 1):
            for rest in rec(slots - 1, first, budget - first):
                yield (first,) + rest

    for parts in rec(max_parts, part_bound, budget):
        yield Partition(parts)


def partitions_with_first_part(max_parts: int, first: int) -> Iterator[Partition]:
    """Partitions with at most ``max_parts`` parts whose first part is exactly ``first``."""
    if first == 0:
        yield Partition()
        return
    if max_parts == 0:
        return
    for rest in enumerate_partitions(max_parts - 1, first):
        yield Partition((first,) + tuple(rest))


def is_dominant(weight: Sequence[int]) -> bool:
    return all(weight[i] >= weight[i + 1] for i in range(len(weight) - 1))


def weyl_dimension(weight: Sequence[int], n: int | None = None) -> int:
    """Dimension of the irreducible GL_n representation of highest weight ``weight``.

    ``weight`` may be a partition shorter than ``n``; it is zero padded.
    """
    weight = tuple(weight)
    if n is None:
        n = len(weight)
    if len(weight) > n:
        if any(weight[n:]):
            raise ValueError(f"weight {weight} longer than n={n}")
        weight = weight[:n]
    weight = weight + (0,) * (n - len(weight))
    if not is_dominant(weight):
        raise ValueError(f"{weight} is not dominant")
    num = prod(weight[i] - weight[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    dim, rem = divmod(num, den)
    assert rem == 0
    return dim
