"""Bott's algorithm on Grassmannians, used as a brute-force oracle for Ext.

``Ext_S(J_{z,l}, S)`` is a sum of duals of cohomology groups
``H^*(G, S_beta R (x) S_alpha Q)`` over G = G(2l, W), one for each weight
alpha in an infinite family. Every such group is computed here by sorting
``gamma + rho``; nothing from :mod:`pfaffext.subquotient` is reused.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .decomposition import ExtDecomposition
from .partitions import Partition, is_dominant


@dataclass(frozen=True)
class BottResult:
    """Nonzero cohomology: H^q(...)^* = S_weight W^*."""
    q: int
    weight: tuple[int, ...]


def bott_evaluate(alpha: Sequence[int], beta: Sequence[int]) -> BottResult | None:
    """Cohomology of S_beta R (x) S_alpha Q on G(len(alpha), n).

    ``alpha`` is the weight on the rank-r quotient bundle, ``beta`` on the
    rank n-r sub-bundle. Returns ``None`` when all cohomology vanishes.
    """
    if not is_dominant(alpha) or not is_dominant(beta):
        raise ValueError(f"alpha={tuple(alpha)} and beta={tuple(beta)} must be dominant")
    gamma = tuple(alpha) + tuple(beta)
    n = len(gamma)
    shifted = [g + n - 1 - i for i, g in enumerate(gamma)]
    if len(set(shifted)) < n:
        return None
    q = sum(1 for x in range(n) for y in range(x + 1, n) if shifted[x] < shifted[y])
    ordered = sorted(shifted, reverse=True)
    weight = tuple(v - (n - 1 - i) for i, v in enumerate(ordered))
    return BottResult(q, weight)


def _check_label(z: Partition, l: int, n: int) -> None:
    m = n // 2
    if len(z) > m:
        raise ValueError(f"{z!r} has more than {m} parts")
    if not 0 <= l <= m - 1:
        raise ValueError(f"l={l} outside 0..{m - 1}")
    if len({z.part(i) for i in range(1, l + 2)}) != 1:
        raise ValueError(f"z={z!r} must have z_1 = ... = z_{l + 1}")


def _paired_weights(count: int, top: int, total_lo: int, total_hi: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing (a_1, ..., a_count), a_1 <= top, sum in [total_lo, total_hi]."""
    if count == 0:
        if total_lo <= 0 <= total_hi:
            yield ()
        return
    # the rest sums to at most (count - 1) * a, so a >= total_lo / count
    a_min = -((-total_lo) // count)
    for a in range(top, a_min - 1, -1):
        for rest in _paired_weights(count - 1, a, total_lo - a, total_hi - a):
            yield (a,) + rest


def ext_via_bott(z: Sequence[int], l: int, n: int,
                 window: tuple[int, int]) -> ExtDecomposition:
    """Ext_S(J_{z,l}, S) in internal degrees ``window`` by running Bott on every alpha."""
    z = Partition(z)
    _check_label(z, l, n)
    lo, hi = window
    out = ExtDecomposition()
    if lo > hi:
        return out
    w = z.double().padded(n)
    beta = tuple(w[i] + n - 1 for i in range(2 * l, n))
    half_beta = sum(beta) // 2
    top = z.part(1) + n - 2 * l
    shift = comb(n, 2) - comb(2 * l, 2)
    # degree = -(|alpha| + |beta|)/2 with |alpha| = 2 * sum(a)
    for a in _paired_weights(l, top, -hi - half_beta, -lo - half_beta):
        alpha = tuple(v for v in a for _ in range(2))
        res = bott_evaluate(alpha, beta)
        if res is None:
            continue
        out.add(shift - res.q, res.weight)
    return out
