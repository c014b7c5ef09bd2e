"""Ext modules of S/I and the maps induced by inclusions of invariant ideals.

Ext(S/I, S) is the direct sum of Ext(J_{z,l}, S) over the labels z_set(I).
For J contained in I the induced map Ext(S/I, S) -> Ext(S/J, S) kills the
labels only I has, is an isomorphism on the shared labels, and misses the
labels only J has.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .decomposition import ExtDecomposition
from .ideals import (IdealSpec, normalize, pfaffian_power, pfaffian_symbolic,
                     z_set)
from .partitions import Partition
from .subquotient import SubquotLabel, ext_closed_form, make_label


def _label_ext(args) -> ExtDecomposition:
    z, l, n, window = args
    return ext_closed_form(z, l, n, window)


def ext_of_labels(labels: Iterable[SubquotLabel], n: int, window: tuple[int, int],
                  workers: int | None = None) -> ExtDecomposition:
    jobs = [(z, l, n, window) for z, l in sorted(labels)]
    out = ExtDecomposition()
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_label_ext, jobs))
    else:
        parts = map(_label_ext, jobs)
    for part in parts:
        out.update(part)
    return out


def ext_of_quotient(ideal: IdealSpec, window: tuple[int, int],
                    workers: int | None = None) -> ExtDecomposition:
    """Ext_S(S/I, S) in internal degrees ``window``."""
    if ideal.is_unit:
        return ExtDecomposition()
    if ideal.is_zero:
        raise ValueError("S/0 = S is not covered by the filtration")
    return ext_of_labels(z_set(ideal), ideal.n, window, workers)


@dataclass
class MapAnalysis:
    kernel: ExtDecomposition
    image: ExtDecomposition
    cokernel: ExtDecomposition
    kernel_labels: frozenset[SubquotLabel]
    image_labels: frozenset[SubquotLabel]
    cokernel_labels: frozenset[SubquotLabel]

    def records(self) -> list[dict]:
        out = []
        for role in ("kernel", "image", "cokernel"):
            out.extend(getattr(self, role).records(role=role))
        return out


def ext_map_analysis(big: IdealSpec, small: IdealSpec, window: tuple[int, int],
                     workers: int | None = None) -> MapAnalysis:
    """Kernel, image and cokernel of Ext(S/big, S) -> Ext(S/small, S).

    ``small`` must be contained in ``big``.
    """
    if big.n != small.n:
        raise ValueError("ideals over different rings")
    if not big.includes(small):
        raise ValueError(f"{small} is not contained in {big}")
    zb, zs = z_set(big), z_set(small)
    ker, img, cok = zb - zs, zb & zs, zs - zb
    n = big.n
    return MapAnalysis(ext_of_labels(ker, n, window, workers),
                       ext_of_labels(img, n, window, workers),
                       ext_of_labels(cok, n, window, workers),
                       frozenset(ker), frozenset(img), frozenset(cok))


@dataclass
class InjectivityReport:
    k: int
    d: int
    n: int
    symbolic_in_power: bool
    symbolic_in_next_symbolic: bool
    kernel_to_power: frozenset[SubquotLabel]
    kernel_to_next_symbolic: frozenset[SubquotLabel]

    @property
    def ok(self) -> bool:
        return (self.symbolic_in_power and self.symbolic_in_next_symbolic
                and not self.kernel_to_power and not self.kernel_to_next_symbolic)


def verify_injectivity_powers(k: int, d: int, n: int) -> InjectivityReport:
    """Check that Ext(S/I^(d)) injects into Ext(S/I^d) and into Ext(S/I^(d+1))."""
    sym = z_set(pfaffian_symbolic(k, d, n))
    power = z_set(pfaffian_power(k, d, n))
    nxt = z_set(pfaffian_symbolic(k, d + 1, n))
    return InjectivityReport(k, d, n, sym <= power, sym <= nxt,
                             frozenset(sym - power), frozenset(sym - nxt))


def rectangles(z: Sequence[int], l: int, n: int) -> list[Partition]:
    """(z_1 + 1)^(l+1) together with (z_i + 1)^i at each drop z_{i-1} > z_i, i > l + 1."""
    z, l = make_label(z, l, n)
    m = n // 2
    out = [Partition((z.part(1) + 1,) * (l + 1))]
    for i in range(l + 2, m + 1):
        if z.part(i - 1) > z.part(i):
            out.append(Partition((z.part(i) + 1,) * i))
    return out


def tall_rectangles(z: Sequence[int], l: int, n: int) -> list[Partition]:
    """(z_i + 1)^i for every l + 1 < i <= m."""
    z, l = make_label(z, l, n)
    return [Partition((z.part(i) + 1,) * i) for i in range(l + 2, n // 2 + 1)]


@dataclass
class DisjointnessReport:
    label: SubquotLabel
    adjacent_clashes: list[tuple[SubquotLabel, int, tuple[int, ...]]]
    equal_clashes: list[tuple[int, tuple[int, ...]]]
    terms_checked: int

    @property
    def ok(self) -> bool:
        return not self.adjacent_clashes and not self.equal_clashes


def disjointness_check(z: Sequence[int], l: int, n: int,
                       window: tuple[int, int]) -> DisjointnessReport:
    """Compare irreducibles of Ext(J_{z,l}) with neighbouring modules.

    Ext^j(J_{z,l}) against Ext^{j+1}(J_{y,k}) for the labels of the ideal
    generated by the rectangles plus z, and Ext^j(J_{z,l}) against
    Ext^j(S/I_X) for X the tall rectangles. An empty X is vacuous.
    """
    label = make_label(z, l, n)
    own = ext_closed_form(label.z, label.l, n, window)
    own_by_j = {j: set(own.weights(j)) for j in own.indices()}

    adjacent = []
    ideal_y = normalize(rectangles(label.z, label.l, n) + [label.z], n)
    for other in sorted(z_set(ideal_y)):
        ext = ext_closed_form(other.z, other.l, n, window)
        for j, lam, _deg, _mult in ext:
            if lam in own_by_j.get(j - 1, ()):
                adjacent.append((other, j - 1, lam))

    equal = []
    tall = tall_rectangles(label.z, label.l, n)
    if tall:
        ext = ext_of_quotient(normalize(tall, n), window)
        for j, lam, _deg, _mult in ext:
            if lam in own_by_j.get(j, ()):
                equal.append((j, lam))
    return DisjointnessReport(label, adjacent, equal, len(own))
