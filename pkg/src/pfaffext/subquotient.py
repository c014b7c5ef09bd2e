"""Closed-form Ext modules and regularity of the subquotients J_{z,l}.

``J_{z,l} = I_z / I_succ(z,l)`` is labelled by a partition ``z`` with at
most m = n // 2 parts and 0 <= l <= m - 1 with z_1 = ... = z_{l+1}. Its Ext
modules are indexed by t-vectors; for each t the weights form a family with
n - 2l pinned entries and l free pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .decomposition import ExtDecomposition
from .partitions import Partition


class SubquotLabel(NamedTuple):
    z: Partition
    l: int

    def __str__(self) -> str:
        return f"J[({self.z}),{self.l}]"


def make_label(z: Sequence[int], l: int, n: int) -> SubquotLabel:
    z = Partition(z)
    m = n // 2
    if n < 2:
        raise ValueError("n must be at least 2")
    if len(z) > m:
        raise ValueError(f"{z!r} has more than m={m} parts")
    if not 0 <= l <= m - 1:
        raise ValueError(f"l={l} outside 0..{m - 1}")
    if any(z.part(i) != z.part(1) for i in range(2, l + 2)):
        raise ValueError(f"z={z!r} needs z_1 = ... = z_{l + 1}")
    return SubquotLabel(z, l)


@lru_cache(maxsize=None)
def t_vectors(z: Partition, l: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All t = (l = t_1 >= ... >= t_{n-2l} >= 0) with
    w_{2l+i} - w_{2l+i+1} >= 2 t_i - 2 t_{i+1}, where w = double(z)."""
    z, l = make_label(z, l, n)
    w = z.double().padded(n)
    length = n - 2 * l
    gaps = [w[2 * l + i] - w[2 * l + i + 1] for i in range(length - 1)]
    out = []

    def rec(prefix):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        prev = prefix[-1]
        # 2 (t_i - t_{i+1}) <= gap
        lowest = max(0, prev - gaps[len(prefix) - 1] // 2)
        for nxt in range(prev, lowest - 1, -1):
            rec(prefix + [nxt])

    rec([l])
    return tuple(out)


def ext_index(t: Sequence[int], l: int, n: int) -> int:
    return comb(n, 2) - comb(2 * l, 2) - 2 * sum(t)


class _Run(NamedTuple):
    start: int          # first free position, 1-based
    pairs: int          # number of equal pairs in the run
    upper: int          # value of the pinned entry before the run
    lower: int | None   # value of the pinned entry after it, None at the end


@dataclass(frozen=True)
class WeightFamily:
    """Dominant weights of length n with some entries pinned and the
    remaining entries grouped into equal adjacent pairs."""

    n: int
    fixed: dict[int, int]
    pair_constraints: tuple[tuple[int, int], ...]
    runs: tuple[_Run, ...] = field(repr=False)

    @property
    def fixed_size(self) -> int:
        return sum(self.fixed.values())

    @property
    def upper_bounds(self) -> dict[int, int]:
        """Upper bound for the value of each free pair, keyed by its first position."""
        return {r.start + 2 * i: r.upper for r in self.runs for i in range(r.pairs)}

    @property
    def is_finite(self) -> bool:
        return all(r.lower is not None for r in self.runs if r.pairs)

    def _assemble(self, values: Sequence[int]) -> tuple[int, ...]:
        lam = [0] * self.n
        for pos, v in self.fixed.items():
            lam[pos - 1] = v
        it = iter(values)
        for r in self.runs:
            for i in range(r.pairs):
                v = next(it)
                lam[r.start - 1 + 2 * i] = lam[r.start + 2 * i] = v
        return tuple(lam)

    def largest(self) -> tuple[int, ...]:
        return self._assemble([r.upper for r in self.runs for _ in range(r.pairs)])

    def smallest(self) -> tuple[int, ...] | None:
        if not self.is_finite:
            return None
        return self._assemble([r.lower for r in self.runs for _ in range(r.pairs)])

    def __contains__(self, lam) -> bool:
        lam = tuple(lam)
        if len(lam) != self.n:
            return False
        if any(lam[i] < lam[i + 1] for i in range(self.n - 1)):
            return False
        if any(lam[p - 1] != v for p, v in self.fixed.items()):
            return False
        return all(lam[a - 1] == lam[b - 1] for a, b in self.pair_constraints)

    def enumerate(self, window: tuple[int, int]) -> Iterator[tuple[int, ...]]:
        """Members whose degree -|lambda|/2 lies in ``window``."""
        lo, hi = window
        if lo > hi:
            return
        half = self.fixed_size // 2
        # degree = -half - sum(pair values)
        smin, smax = -hi - half, -lo - half
        bounded = [r for r in self.runs if r.pairs and r.lower is not None]
        # only the run after the last pinned entry can be unbounded below
        tail = [r for r in self.runs if r.pairs and r.lower is None]

        def middle(k):
            if k == len(bounded):
                yield ()
                return
            r = bounded[k]
            for seq in _decreasing(r.pairs, r.upper, r.lower, None, None):
                for rest in middle(k + 1):
                    yield seq + rest

        for mid in middle(0):
            s = sum(mid)
            if tail:
                r = tail[0]
                for seq in _decreasing(r.pairs, r.upper, None, smin - s, smax - s):
                    yield self._assemble(mid + seq)
            elif smin <= s <= smax:
                yield self._assemble(mid)


def _decreasing(length: int, upper: int, lower: int | None,
                smin: int | None, smax: int | None) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing integer tuples in [lower, upper] with sum in [smin, smax].

    ``None`` means unbounded; an unbounded ``lower`` needs a finite ``smin``.
    """
    if length == 0:
        if (smin is None or smin <= 0) and (smax is None or smax >= 0):
            yield ()
        return
    bottom = lower
    if smin is not None:
        need = -((-smin) // length)
        bottom = need if bottom is None else max(bottom, need)
    if bottom is None:
        raise ValueError("unbounded enumeration")
    top = upper
    if smax is not None and lower is not None:
        top = min(top, smax - (length - 1) * lower)
    for a in range(top, bottom - 1, -1):
        for rest in _decreasing(length - 1, a, lower,
                                None if smin is None else smin - a,
                                None if smax is None else smax - a):
            yield (a,) + rest


@lru_cache(maxsize=None)
def weight_family(z: Partition, l: int, t: tuple[int, ...], n: int) -> WeightFamily:
    z, l = make_label(z, l, n)
    t = tuple(t)
    if t not in t_vectors(z, l, n):
        raise ValueError(f"t={t} is not a t-vector for {SubquotLabel(z, l)}")
    w = z.double().padded(n)
    length = n - 2 * l
    fixed = {}
    for i in range(1, length + 1):
        fixed[2 * l + i - 2 * t[i - 1]] = w[2 * l + i - 1] + n - 1 - 2 * t[i - 1]
    last = t[-1]
    pairs = [(2 * i - 1, 2 * i) for i in range(1, n) if 2 * i < n - 2 * last]
    pairs += [(n - 2 * i - 1, n - 2 * i) for i in range(last)]
    runs = []
    positions = sorted(fixed)
    for k, p in enumerate(positions):
        nxt = positions[k + 1] if k + 1 < len(positions) else n + 1
        gap = nxt - p - 1
        if gap:
            lower = fixed[nxt] if nxt <= n else None
            runs.append(_Run(p + 1, gap // 2, fixed[p], lower))
    return WeightFamily(n, fixed, tuple(sorted(pairs)), tuple(runs))


def ext_closed_form(z: Sequence[int], l: int, n: int,
                    window: tuple[int, int]) -> ExtDecomposition:
    """Ext_S(J_{z,l}, S) restricted to internal degrees in ``window``."""
    z, l = make_label(z, l, n)
    out = ExtDecomposition()
    for t in t_vectors(z, l, n):
        j = ext_index(t, l, n)
        for lam in weight_family(z, l, t, n).enumerate(window):
            out.add(j, lam)
    return out


def _f(z: Partition, l: int, t: Sequence[int], n: int) -> int:
    w = z.double().padded(n)
    return sum(t[i] * ((w[2 * l + i - 1] - w[2 * l + i]) - (2 * t[i - 1] - 2 * t[i]))
               for i in range(1, n - 2 * l))


def reg_for_t(z: Partition, l: int, t: Sequence[int], n: int) -> int:
    """Largest -degree - j over the family of one t-vector."""
    m = n // 2
    return sum(z.part(i) for i in range(l + 1, m + 1)) + l * (z.part(1) - 1) + sum(t) - _f(z, l, t, n)


@lru_cache(maxsize=None)
def reg_subquotient(z: Partition, l: int, n: int) -> int:
    """Castelnuovo-Mumford regularity of J_{z,l}."""
    z, l = make_label(z, l, n)
    return max(reg_for_t(z, l, t, n) for t in t_vectors(z, l, n))
