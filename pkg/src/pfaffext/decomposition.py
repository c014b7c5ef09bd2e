"""GL-decompositions of graded Ext modules as multisets of (j, weight) terms."""

from __future__ import annotations

import json
from collections import Counter
from typing import Iterable, Iterator

from .partitions import weyl_dimension


def parse_window(text: str) -> tuple[int, int]:
    """Parse ``"lo..hi"`` (inclusive). A single integer is a one-point window."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
    except ValueError:
        raise ValueError(f"bad range {text!r}, expected lo..hi") from None
    return v, v


def weight_degree(weight: tuple[int, ...]) -> int:
    """Internal degree of S_lambda W^* inside an Ext module: -|lambda|/2."""
    size = sum(weight)
    if size % 2:
        raise ValueError(f"weight {weight} has odd size")
    return -size // 2


class ExtDecomposition:
    """Multiset of terms S_lambda W^* sitting in Ext^j, in degree -|lambda|/2.

    Only the GL-structure is recorded; the degree of a term is determined by
    its weight.
    """

    def __init__(self, terms: Iterable[tuple[int, tuple[int, ...]]] = ()):
        self._terms: Counter = Counter()
        for j, weight in terms:
            self.add(j, weight)

    def add(self, j: int, weight, mult: int = 1) -> None:
        weight = tuple(int(w) for w in weight)
        weight_degree(weight)
        if mult:
            self._terms[(j, weight)] += mult

    def update(self, other: "ExtDecomposition") -> None:
        self._terms.update(other._terms)

    def __add__(self, other: "ExtDecomposition") -> "ExtDecomposition":
        out = ExtDecomposition()
        out._terms = self._terms + other._terms
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtDecomposition):
            return NotImplemented
        return +self._terms == +other._terms

    def __len__(self) -> int:
        return sum(self._terms.values())

    def __bool__(self) -> bool:
        return any(self._terms.values())

    def __iter__(self) -> Iterator[tuple[int, tuple[int, ...], int, int]]:
        """Yield (j, weight, degree, mult) in canonical (j, degree, weight) order."""
        for (j, weight), mult in sorted(self._terms.items(),
                                        key=lambda kv: (kv[0][0], weight_degree(kv[0][1]), kv[0][1])):
            if mult:
                yield j, weight, weight_degree(weight), mult

    def __repr__(self) -> str:
        return f"ExtDecomposition({len(self)} terms, j in {self.indices()})"

    def indices(self) -> list[int]:
        return sorted({j for (j, _), mult in self._terms.items() if mult})

    def at(self, j: int) -> Counter:
        """Weights (with multiplicity) in Ext^j."""
        return Counter({w: mult for (i, w), mult in self._terms.items() if i == j and mult})

    def weights(self, j: int | None = None) -> set[tuple[int, ...]]:
        return {w for (i, w), mult in self._terms.items() if mult and (j is None or i == j)}

    def restrict(self, window: tuple[int, int]) -> "ExtDecomposition":
        lo, hi = window
        out = ExtDecomposition()
        for (j, w), mult in self._terms.items():
            if mult and lo <= weight_degree(w) <= hi:
                out.add(j, w, mult)
        return out

    def dimension(self, j: int, degree: int) -> int:
        """Vector space dimension of Ext^j in the given internal degree."""
        return sum(mult * weyl_dimension(w)
                   for (i, w), mult in self._terms.items()
                   if i == j and mult and weight_degree(w) == degree)

    def records(self, **extra) -> list[dict]:
        return [dict(j=j, **{"lambda": list(w)}, degree=deg, mult=mult, **extra)
                for j, w, deg, mult in self]

    def to_json(self) -> str:
        return json.dumps(self.records(), sort_keys=True)

    @classmethod
    def from_records(cls, records: Iterable[dict]) -> "ExtDecomposition":
        out = cls()
        for r in records:
            w = tuple(r["lambda"])
            if "degree" in r and r["degree"] != weight_degree(w):
                raise ValueError(f"record {r} has inconsistent degree")
            out.add(r["j"], w, r.get("mult", 1))
        return out
