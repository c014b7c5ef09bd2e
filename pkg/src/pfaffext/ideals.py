"""GL-invariant ideals of S = Sym(wedge^2 W), dim W = n.

Every invariant ideal is a sum of basic ideals I_x, x a partition with at
most m = n // 2 parts, and I_x contains exactly the summands S_{double(y)} W
of S with x <= y. An :class:`IdealSpec` keeps the minimal such x's.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

from .partitions import (Partition, contains, enumerate_partitions,
                         partitions_with_first_part, weyl_dimension)
from .subquotient import SubquotLabel, make_label


def _minimal(gens: Iterable[Partition]) -> frozenset[Partition]:
    gens = set(gens)
    return frozenset(y for y in gens
                     if not any(x != y and contains(x, y) for x in gens))


@dataclass(frozen=True)
class IdealSpec:
    n: int
    gens: frozenset[Partition]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        gens = frozenset(Partition(g) for g in self.gens)
        for g in gens:
            if len(g) > self.m:
                raise ValueError(f"generator {g} has more than m={self.m} parts")
        object.__setattr__(self, "gens", _minimal(gens))

    @property
    def m(self) -> int:
        return self.n // 2

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return Partition() in self.gens

    def sorted_gens(self) -> list[Partition]:
        return sorted(self.gens, key=lambda g: (g.size, tuple(g)))

    def __str__(self) -> str:
        return "gens:" + ";".join(str(g) for g in self.sorted_gens())

    def __contains__(self, y) -> bool:
        return rep_in_ideal(self, y)

    def includes(self, other: "IdealSpec") -> bool:
        """True iff ``other`` is contained in this ideal."""
        if other.n != self.n:
            raise ValueError("ideals over different rings")
        return all(rep_in_ideal(self, y) for y in other.gens)


def normalize(gens: Iterable[Sequence[int]], n: int) -> IdealSpec:
    return IdealSpec(n, frozenset(Partition(g) for g in gens))


def _check_kd(k: int, d: int, n: int) -> None:
    if not 1 <= k <= n // 2:
        raise ValueError(f"need 1 <= k <= {n // 2}, got k={k}")
    if d < 1:
        raise ValueError(f"need d >= 1, got d={d}")


def power_generators(k: int, d: int, n: int) -> list[Partition]:
    _check_kd(k, d, n)
    return [x for x in enumerate_partitions(n // 2, d, k * d) if x.size == k * d]


def pfaffian_power(k: int, d: int, n: int) -> IdealSpec:
    """d-th power of the ideal of 2k x 2k Pfaffians."""
    return normalize(power_generators(k, d, n), n)


def pfaffian_symbolic(k: int, d: int, n: int) -> IdealSpec:
    """d-th symbolic power of the ideal of 2k x 2k Pfaffians."""
    _check_kd(k, d, n)
    m = n // 2
    gens = []
    for x in enumerate_partitions(m, d):
        if all(x.part(i) == x.part(1) for i in range(1, k + 1)) \
                and sum(x.part(i) for i in range(k, m + 1)) == d:
            gens.append(x)
    return normalize(gens, n)


def pfaffian_power_saturation(k: int, d: int, n: int) -> IdealSpec:
    """Saturation of the d-th power of the 2k x 2k Pfaffian ideal."""
    gens = []
    for x in power_generators(k, d, n):
        xc = x.conjugate()
        for c in range(x.part(1) + 1):
            if (c == 0 or xc.part(c) > 1) and xc.part(c + 1) <= 1:
                gens.append(x.truncate(c))
    return normalize(gens, n)


def rep_in_ideal(ideal: IdealSpec, y: Sequence[int]) -> bool:
    """Whether the summand S_{double(y)} W of S lies in the ideal."""
    return any(contains(x, y) for x in ideal.gens)


def succ_set(z: Sequence[int], l: int, n: int):
    """Predicate for y >= z with y_i > z_i for some i > l."""
    z, l = make_label(z, l, n)

    def pred(y: Sequence[int]) -> bool:
        y = Partition(y)
        return contains(z, y) and any(y.part(i) > z.part(i) for i in range(l + 1, max(len(y), len(z)) + 1))

    return pred


@lru_cache(maxsize=None)
def _summand_dim(y: Partition, n: int) -> int:
    return weyl_dimension(y.double(), n)


def ring_dim(n: int, degree: int) -> int:
    """dim S_degree; S is a polynomial ring in binom(n, 2) variables."""
    return comb(comb(n, 2) + degree - 1, degree)


def hilbert_dim(ideal: IdealSpec, degree: int) -> int:
    """Dimension of the degree ``degree`` piece of the ideal."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    n = ideal.n
    return sum(_summand_dim(y, n)
               for y in enumerate_partitions(ideal.m, degree, degree)
               if y.size == degree and rep_in_ideal(ideal, y))


def quotient_hilbert_dim(ideal: IdealSpec, degree: int) -> int:
    return ring_dim(ideal.n, degree) - hilbert_dim(ideal, degree)


def subquotient_dim(z: Sequence[int], l: int, n: int, degree: int) -> int:
    """Dimension of (J_{z,l})_degree: summands y >= z with y_i = z_i for i > l."""
    z, l = make_label(z, l, n)
    m = n // 2
    tail = tuple(z.part(i) for i in range(l + 1, m + 1))
    budget = degree - sum(tail)
    if budget < 0:
        return 0
    floor_ = z.part(l + 1)
    total = 0
    # y_1 >= ... >= y_l >= y_{l+1} = z_{l+1}
    for head in _heads(l, floor_, budget):
        total += _summand_dim(Partition(head + tail), n)
    return total


def _heads(length: int, floor_: int, total: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        if total == 0:
            yield ()
        return
    excess = total - length * floor_
    if excess < 0:
        return
    for p in enumerate_partitions(length, excess, excess):
        if p.size == excess:
            yield tuple(v + floor_ for v in p.padded(length))


def z_set(ideal: IdealSpec) -> frozenset[SubquotLabel]:
    """Labels (z, l) of the subquotients J_{z,l} filtering S/I."""
    out = set()
    n, m = ideal.n, ideal.m
    if not ideal.gens:
        return frozenset()
    conj = {x: x.conjugate() for x in ideal.gens}
    top = max(x.part(1) for x in ideal.gens)
    for c in range(top):
        for z in partitions_with_first_part(m, c):
            for l in range(m):
                if any(z.part(i) != c for i in range(1, l + 2)):
                    break
                witnesses = [x for x in ideal.gens
                             if contains(x.truncate(c), z) and conj[x].part(c + 1) <= l + 1]
                if witnesses and all(conj[x].part(c + 1) == l + 1 for x in witnesses):
                    out.add(SubquotLabel(z, l))
    return frozenset(out)


def z_set_power_closed(k: int, d: int, n: int) -> frozenset[SubquotLabel]:
    _check_kd(k, d, n)
    m = n // 2
    out = set()
    for z in enumerate_partitions(m, d - 1, k * d - 1):
        c = z.part(1)
        for l in range(k):
            if any(z.part(i) != c for i in range(1, l + 2)):
                break
            if z.size + (d - c) * l + 1 <= k * d <= z.size + (d - c) * (l + 1):
                out.add(SubquotLabel(z, l))
    return frozenset(out)


def z_set_symbolic_closed(k: int, d: int, n: int) -> frozenset[SubquotLabel]:
    _check_kd(k, d, n)
    m = n // 2
    out = set()
    for z in enumerate_partitions(m, d - 1):
        if all(z.part(i) == z.part(1) for i in range(1, k + 1)) \
                and sum(z.part(i) for i in range(k, m + 1)) <= d - 1:
            out.add(SubquotLabel(z, k - 1))
    return frozenset(out)


_SPEC = re.compile(r"^(gens|pfaff|pow|sym|sat):(.*)$")


def parse_ideal(text: str, n: int) -> IdealSpec:
    """Parse ``gens:2,2;2,1,1``, ``pfaff:2k``, ``pow:2k:d``, ``sym:2k:d`` or ``sat:2k:d``.

    Raises SyntaxError for malformed text, ValueError for out-of-range values.
    """
    match = _SPEC.match(text.strip())
    if not match:
        raise SyntaxError(f"cannot parse ideal {text!r}")
    kind, rest = match.groups()
    if kind == "gens":
        try:
            gens = [Partition.parse(g) for g in rest.split(";")] if rest.strip() else []
        except ValueError as exc:
            raise SyntaxError(str(exc)) from None
        return normalize(gens, n)
    fields = rest.split(":")
    try:
        nums = [int(f) for f in fields]
    except ValueError:
        raise SyntaxError(f"cannot parse ideal {text!r}") from None
    expected = 1 if kind == "pfaff" else 2
    if len(nums) != expected:
        raise SyntaxError(f"{kind}: expects {expected} integer field(s)")
    size = nums[0]
    if size % 2 or not 2 <= size <= n:
        raise ValueError(f"Pfaffian size must be even with 2 <= 2k <= n={n}, got {size}")
    k = size // 2
    if kind == "pfaff":
        return pfaffian_power(k, 1, n)
    d = nums[1]
    return {"pow": pfaffian_power, "sym": pfaffian_symbolic,
            "sat": pfaffian_power_saturation}[kind](k, d, n)


def enumerate_ideals(n: int, top: int, include_unit: bool = False) -> Iterator[IdealSpec]:
    """Every nonzero invariant ideal whose generators have first part <= top."""
    elems = sorted((p for p in enumerate_partitions(n // 2, top) if p),
                   key=lambda p: (p.size, tuple(p)))
    if include_unit:
        yield IdealSpec(n, frozenset([Partition()]))

    def rec(i, chosen):
        if i == len(elems):
            if chosen:
                yield IdealSpec(n, frozenset(chosen))
            return
        p = elems[i]
        yield from rec(i + 1, chosen)
        if not any(contains(x, p) or contains(p, x) for x in chosen):
            yield from rec(i + 1, chosen + [p])

    yield from rec(0, [])
