"""Certified floor/ceiling of real-valued formulas via interval arithmetic.

Sample values of the built-in families involve logarithms and
non-integer powers, which have no exact rational value.  They are
materialized as one-sided dyadic approximations floor(v * 2**bits) /
2**bits.  To make the floor itself exact rather than "probably right",
the formula is evaluated in mpmath's interval context: the working
precision is doubled until both endpoints of the enclosure share the
same floor (or ceiling), which certifies the rounded integer.

Certification can only fail to converge when the target value is
exactly an integer, which the family formulas never produce; if the
precision cap is reached anyway, a PrecisionError is raised instead of
guessing.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

from mpmath import iv

DEFAULT_START_PRECISION = 192
MAX_PRECISION = 1 << 16


class PrecisionError(ArithmeticError):
    """An enclosure could not pin down the rounded value below the precision cap."""


class _NonFinite(Exception):
    pass


def _tuple_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    man = int(man)
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise _NonFinite  # inf/nan endpoint
    value = Fraction(man) * Fraction(2) ** exp
    return -value if sign else value


def enclosure_endpoints(x) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an mpmath interval value."""
    lo_raw, hi_raw = x._mpi_
    return _tuple_to_fraction(lo_raw), _tuple_to_fraction(hi_raw)


def iv_fraction(q: Fraction):
    """Enclosure of an exact rational in the current interval context."""
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def _certify(
    build: Callable[[], object],
    pick: Callable[[Fraction], int],
    start_precision: int,
    max_precision: int,
) -> int:
    precision = start_precision
    while precision <= max_precision:
        saved = iv.prec
        try:
            iv.prec = precision
            enclosure = build()
            lo, hi = enclosure_endpoints(enclosure)
        except _NonFinite:
            precision *= 2
            continue
        finally:
            iv.prec = saved
        a, b = pick(lo), pick(hi)
        if a == b:
            return a
        precision *= 2
    raise PrecisionError(
        f"enclosure still straddles an integer at {max_precision} bits; "
        "the target may be an exact integer"
    )


def certified_floor(
    build: Callable[[], object],
    start_precision: int = DEFAULT_START_PRECISION,
    max_precision: int = MAX_PRECISION,
) -> int:
    """floor of the real number enclosed by build(), certified exact.

    `build` is re-evaluated under increasing interval precision until
    both endpoints agree on the floor.
    """
    return _certify(build, math.floor, start_precision, max_precision)


def certified_ceil(
    build: Callable[[], object],
    start_precision: int = DEFAULT_START_PRECISION,
    max_precision: int = MAX_PRECISION,
) -> int:
    """Ceiling counterpart of `certified_floor`."""
    return _certify(build, math.ceil, start_precision, max_precision)
