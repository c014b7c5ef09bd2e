"""Castelnuovo-Mumford regularity of invariant ideals and linear resolutions.

The general route takes the maximum of the subquotient regularities over
the filtration labels of S/I. Closed forms are provided for basic ideals
and for (symbolic, saturated) powers of Pfaffian ideals; the latter return
``None`` outside the parameter ranges where a formula is known.
"""

from __future__ import annotations

from fractions import Fraction

from .ideals import IdealSpec, pfaffian_power, z_set
from .partitions import Partition
from .subquotient import ext_index, reg_subquotient, t_vectors


def _check_proper(ideal: IdealSpec) -> None:
    if ideal.is_zero:
        raise ValueError("regularity of S/0 is not computed (zero ideal)")
    if ideal.is_unit:
        raise ValueError("S/I is zero for the unit ideal")


def reg_quotient(ideal: IdealSpec) -> int:
    _check_proper(ideal)
    return max(reg_subquotient(z, l, ideal.n) for z, l in z_set(ideal))


def reg_ideal(ideal: IdealSpec) -> int:
    return reg_quotient(ideal) + 1


def projective_dimension(ideal: IdealSpec) -> int:
    """Projective dimension of S/I: the largest j with Ext^j(S/I, S) nonzero."""
    _check_proper(ideal)
    n = ideal.n
    return max(ext_index(t, l, n) for z, l in z_set(ideal) for t in t_vectors(z, l, n))


def b_function(l: int, n: int, c: int) -> int:
    m = n // 2
    if c > 2 * l or (c < 2 * l and c % 2 == 1):
        value = Fraction((m - l) * (2 * l + c) + l * (c - 1))
    else:
        value = (m - l) * (2 * l + c) + c * (l - Fraction(1, 2))
    if value.denominator != 1:
        raise ArithmeticError(f"b({l},{n},{c}) = {value} is not an integer")
    return int(value)


def reg_basic(x, n: int) -> int:
    """Regularity of the basic ideal I_x (not of the quotient)."""
    x = Partition(x)
    if not x:
        raise ValueError("the empty partition gives the unit ideal")
    m = n // 2
    if len(x) > m:
        raise ValueError(f"{x!r} has more than m={m} parts")
    xc = x.conjugate()
    if n % 2 == 0:
        return max((n - 2 * xc.part(c + 1) + 1) * (xc.part(c + 1) - 1) + c * m + 1
                   for c in range(x.part(1)))
    return max(b_function(xc.part(c + 1) - 1, n, c) + 1 for c in range(x.part(1)))


def reg_power_closed(k: int, d: int, n: int, variant: str = "ordinary") -> int | None:
    """Regularity of the ideal I_{2k}^d, its saturation, or I_{2k}^{(d)}.

    Returns ``None`` where no closed form applies. For 2k = 2 the saturation
    is the unit ideal, so the saturated variant is not covered there.
    """
    if not 1 <= k <= n // 2 or d < 1:
        raise ValueError(f"need 1 <= k <= {n // 2} and d >= 1")
    if variant not in ("ordinary", "saturated", "symbolic"):
        raise ValueError(f"unknown variant {variant!r}")
    if k == 1 and variant == "saturated":
        return None
    if k == 1 or 2 * k == n:
        return d * k
    if 2 * k == n - 1:
        if d % 2 == 1 and d < n - 2:
            # one more than the quotient regularity d*k + (n - d - 4)/2
            return d * k + (n - d - 2) // 2
        return d * k
    if 2 * k <= n - 2 and ((n % 2 == 0 and d >= n - 2) or (n % 2 == 1 and d >= n - 3)):
        if variant == "symbolic":
            return d * k
        extra = k * (k // 2 - 1) if k % 2 == 0 else (k - 1) ** 2 // 2
        return d * k + extra
    return None


def has_linear_resolution_power(k: int, d: int, n: int) -> bool:
    if not 1 <= k <= n // 2 or d < 1:
        raise ValueError(f"need 1 <= k <= {n // 2} and d >= 1")
    if k == 1 or 2 * k == n:
        return True
    if 2 * k == n - 1:
        return d % 2 == 0 or d >= n - 3
    if k == 2:
        return d >= (n - 2 if n % 2 == 0 else n - 3)
    return False


def has_linear_resolution_basic(x, n: int) -> bool:
    x = Partition(x)
    if not x:
        raise ValueError("the empty partition gives the unit ideal")
    m = n // 2
    xc = x.conjugate()
    full = sum(1 for v in xc if v == m)
    rest = tuple(xc[full:])
    if n % 2 == 0:
        return rest in ((), (1,))
    if rest == ():
        return full >= n - 2 or (full % 2 == 0 and full <= n - 3)
    if rest == (1,):
        return full >= n - 5 or (full % 2 == 0 and full <= n - 7)
    return False


def generator_degree(ideal: IdealSpec) -> int | None:
    """Common degree of the minimal generators; ``None`` if degrees are mixed."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no generators")
    sizes = {g.size for g in ideal.gens}
    return sizes.pop() if len(sizes) == 1 else None


def has_linear_resolution(ideal: IdealSpec) -> bool | None:
    """Direct test reg(I) == generator degree; ``None`` for mixed degrees."""
    deg = generator_degree(ideal)
    if deg is None:
        return None
    return reg_ideal(ideal) == deg


def pfaffian_power_ideal(k: int, d: int, n: int) -> IdealSpec:
    return pfaffian_power(k, d, n)
