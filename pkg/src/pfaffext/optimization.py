"""The optimization problem behind the regularity of Pfaffian powers.

For even q with 0 <= q < 2k <= n, pairs (y, u) of length n - q range over

* y with even column lengths, |y| <= d(2k - q) - 2, |y| - 2 y_1 >= d(2k - q - 2),
* u with even parts, u_1 = q, and y_i - y_{i+1} >= u_i - u_{i+1},

and R_{q,k,n,d} is the maximum of :func:`g_value` over them (-inf if none).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

MINUS_INF = float("-inf")

VARIANTS = ("ordinary", "saturated", "symbolic")


@dataclass(frozen=True)
class OptInstance:
    q: int
    k: int
    n: int
    d: int

    def __post_init__(self):
        if self.q % 2 or not 0 <= self.q < 2 * self.k <= self.n or self.d < 1:
            raise ValueError(f"invalid instance {self}")


def _even_column_partitions(length: int, top: int, budget: int) -> Iterator[tuple[int, ...]]:
    """y of the given length with y_{2i-1} = y_{2i}, y_length = 0 for odd length,
    y_1 <= top and |y| <= budget; pairs chosen from the left."""
    pairs = length // 2

    def rec(left, bound, budget):
        if left == 0:
            yield ()
            return
        for v in range(min(bound, budget // 2), -1, -1):
            for rest in rec(left - 1, v, budget - 2 * v):
                yield (v, v) + rest

    for body in rec(pairs, top, budget):
        yield body + (0,) * (length - 2 * pairs)


def _u_vectors(y: tuple[int, ...], q: int) -> Iterator[tuple[int, ...]]:
    """Even u with u_1 = q, weakly decreasing, u_i - u_{i+1} <= y_i - y_{i+1}."""
    length = len(y)

    def rec(prefix):
        i = len(prefix)
        if i == length:
            yield tuple(prefix)
            return
        prev = prefix[-1]
        lowest = max(0, prev - (y[i - 1] - y[i]))
        start = prev
        for v in range(start, lowest - 1, -1):
            if v % 2 == 0:
                yield from rec(prefix + [v])

    yield from rec([q])


def enumerate_yu(inst: OptInstance) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    q, k, n, d = inst.q, inst.k, inst.n, inst.d
    length = n - q
    budget = d * (2 * k - q) - 2
    if budget < 0:
        return
    floor_ = d * (2 * k - q - 2)
    # |y| - 2 y_1 >= floor_ >= 0 forces y_1 <= budget / 2
    for y in _even_column_partitions(length, budget // 2, budget):
        if sum(y) - 2 * (y[0] if y else 0) < floor_:
            continue
        for u in _u_vectors(y, q):
            yield y, u


def g_value(inst: OptInstance, y, u) -> int:
    q = inst.q
    total = Fraction(sum(y), 2) + Fraction(sum(u), 2) + Fraction(q * ((y[0] if y else 0) - 1), 2)
    total -= sum(Fraction(u[i + 1], 2) * ((y[i] - y[i + 1]) - (u[i] - u[i + 1]))
                 for i in range(len(y) - 1))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral g at y={y}, u={u}")
    return int(total)


def r_bruteforce(inst: OptInstance) -> int | float:
    best = MINUS_INF
    for y, u in enumerate_yu(inst):
        best = max(best, g_value(inst, y, u))
    return best


def argmax_pairs(inst: OptInstance) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    best = r_bruteforce(inst)
    return [(y, u) for y, u in enumerate_yu(inst) if g_value(inst, y, u) == best]


def r_closed(inst: OptInstance) -> int | float | None:
    """Closed form where one is known; ``None`` when not covered."""
    q, k, n, d = inst.q, inst.k, inst.n, inst.d
    generic = d * k - 1 + q * (k - q // 2 - 1)
    if n % 2 == 0 and 2 * k == n:
        return generic if q == n - 2 else MINUS_INF
    if n % 2 == 1 and 2 * k == n - 1:
        if q <= n - 5:
            return MINUS_INF
        # q == n - 3
        if d % 2 == 1 and d < n - 2:
            return d * (n - 1) // 2 + (n - d - 4) // 2
        return d * (n - 1) // 2 - 1
    if 2 * k <= n - 2:
        if (n % 2 == 0 and d >= n - 2) or (n % 2 == 1 and d >= n - 3):
            return generic
    return None


def q_range(k: int, variant: str) -> range:
    if variant == "ordinary":
        return range(0, 2 * k - 1, 2)
    if variant == "saturated":
        return range(2, 2 * k - 1, 2)
    if variant == "symbolic":
        return range(2 * k - 2, 2 * k - 1, 2)
    raise ValueError(f"unknown variant {variant!r}")


def reg_power_via_r(k: int, d: int, n: int, variant: str = "ordinary") -> int | float:
    """Regularity of S/I where I is the power, its saturation, or the symbolic
    power of the 2k x 2k Pfaffian ideal. -inf when I is the unit ideal."""
    return max((r_bruteforce(OptInstance(q, k, n, d)) for q in q_range(k, variant)),
               default=MINUS_INF)
