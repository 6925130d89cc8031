"""Built-in signal families with sharply controlled frequency behavior.

Five generators, all returning exact sparse `Signal` values:

* ``squares_power(eps, cutoff)``: value 1/m**(1+eps) at index m**2 for
  1 <= m <= cutoff.  Exact whenever 1+eps is an integer; otherwise the
  value is the dyadic floor at `precision_bits` bits, computed by exact
  integer root extraction.
* ``squares_log(eps, cutoff)``: value 1/(m * ln(m)**(1+eps/2)) at index
  m**2 for 10 <= m <= cutoff; values are certified dyadic floors.
* ``stretched_log(eps, cutoff)``: the same values placed at the indices
  ceil(m * ln(m)**(1+eps)); both the index ceilings and the values are
  certified by interval arithmetic.
* ``spike_pair(size)``: 1 at the origin flanked by two spikes of height
  2*size at distance 3*size; the least maximizing radius jumps by more
  than `size` between n = 0 and n = 1.
* ``composite_jump(min_size, max_size)``: geometrically damped copies
  of `spike_pair` blocks translated to 4**size, giving unbounded jumps
  of the least maximizing radius between adjacent points.

Logarithms are natural logarithms.  Dyadic approximation always rounds
toward zero, so regenerating with more precision bits never decreases a
value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

from .dyadic import certified_ceil, certified_floor, iv_fraction
from .signal import Signal

FAMILIES = (
    "squares_power",
    "squares_log",
    "stretched_log",
    "spike_pair",
    "composite_jump",
)

_MIN_SPIKE_SIZE = 100
_MIN_LOG_INDEX = 10  # log families start at m = 10 so ln(m) is comfortably > 1


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameter bundle for `generate`.

    `cutoff` is the largest m for the square/stretched families and the
    largest block size for `composite_jump`; `size` is the spike size
    for `spike_pair` and the smallest block size for `composite_jump`.
    """

    family: str
    epsilon: Fraction | None = None
    cutoff: int | None = None
    size: int | None = None
    precision_bits: int = 128

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.precision_bits <= 0:
            raise ValueError("precision_bits must be positive")
        needs_epsilon = self.family in ("squares_power", "squares_log", "stretched_log")
        if needs_epsilon:
            if self.epsilon is None or self.epsilon <= 0:
                raise ValueError(f"{self.family} requires a positive rational epsilon")
            if self.cutoff is None:
                raise ValueError(f"{self.family} requires a cutoff")
        if self.family == "spike_pair":
            if self.size is None:
                raise ValueError("spike_pair requires a size")
            if self.size < _MIN_SPIKE_SIZE:
                raise ValueError(f"spike_pair size must be at least {_MIN_SPIKE_SIZE}")
        if self.family == "composite_jump":
            if self.size is None or self.cutoff is None:
                raise ValueError("composite_jump requires size (smallest) and cutoff (largest)")
            if self.size < _MIN_SPIKE_SIZE or self.cutoff < self.size:
                raise ValueError(
                    f"composite_jump sizes must satisfy {_MIN_SPIKE_SIZE} <= size <= cutoff"
                )


def generate(spec: GeneratorSpec) -> Signal:
    """Dispatch a `GeneratorSpec` to its family generator."""
    if spec.family == "squares_power":
        return squares_power(spec.epsilon, spec.cutoff, spec.precision_bits)
    if spec.family == "squares_log":
        return squares_log(spec.epsilon, spec.cutoff, spec.precision_bits)
    if spec.family == "stretched_log":
        return stretched_log(spec.epsilon, spec.cutoff, spec.precision_bits)
    if spec.family == "spike_pair":
        return spike_pair(spec.size)
    return composite_jump(spec.size, spec.cutoff)


def is_exact(spec: GeneratorSpec) -> bool:
    """True when the family produces its defining values with no
    dyadic approximation at all."""
    if spec.family in ("spike_pair", "composite_jump"):
        return True
    if spec.family == "squares_power":
        return (1 + spec.epsilon).denominator == 1
    return False


def metadata_lines(spec: GeneratorSpec) -> list[str]:
    """Human-readable `#` header lines recording how a signal was generated."""
    lines = [f"family: {spec.family}"]
    if spec.epsilon is not None:
        lines.append(f"epsilon: {spec.epsilon.numerator}/{spec.epsilon.denominator}")
    if spec.family == "composite_jump":
        lines.append(f"size range: {spec.size}..{spec.cutoff}")
    else:
        if spec.cutoff is not None:
            lines.append(f"cutoff: {spec.cutoff}")
        if spec.size is not None:
            lines.append(f"size: {spec.size}")
    if is_exact(spec):
        lines.append("values: exact")
    else:
        lines.append(f"values: dyadic floor at {spec.precision_bits} bits")
    return lines


def integer_nth_root(x: int, q: int) -> int:
    """floor(x ** (1/q)) for x >= 0, q >= 1, by Newton iteration on integers."""
    if x < 0:
        raise ValueError("negative radicand")
    if q <= 0:
        raise ValueError("root order must be positive")
    if x in (0, 1) or q == 1:
        return x
    root = 1 << -(-x.bit_length() // q)  # certainly >= floor root
    while True:
        better = ((q - 1) * root + x // root ** (q - 1)) // q
        if better >= root:
            break
        root = better
    # floor division can leave the iterate one or two off either way
    while root ** q > x:
        root -= 1
    while (root + 1) ** q <= x:
        root += 1
    return root


def _check_positive_epsilon(epsilon: Fraction) -> Fraction:
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    return epsilon


def squares_power(
    epsilon: Fraction, cutoff: int, precision_bits: int = 128
) -> Signal:
    """Value 1/m**(1+eps) at index m**2, for m = 1 .. cutoff.

    >>> squares_power(Fraction(1), 3).values
    (Fraction(1, 1), Fraction(1, 4), Fraction(1, 9))
    """
    epsilon = _check_positive_epsilon(epsilon)
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    exponent = 1 + epsilon
    p, q = exponent.numerator, exponent.denominator
    pairs = []
    for m in range(1, cutoff + 1):
        if q == 1:
            value = Fraction(1, m**p)
        else:
            # floor(2**B * m**(-p/q)) = floor((2**(B*q) // m**p) ** (1/q)):
            # both floors keep t**q * m**p <= 2**(B*q) exactly.
            scaled = integer_nth_root((1 << (precision_bits * q)) // m**p, q)
            if scaled == 0:
                raise ValueError(
                    f"1/{m}**({p}/{q}) underflows {precision_bits} dyadic bits; "
                    "raise precision_bits"
                )
            value = Fraction(scaled, 1 << precision_bits)
        pairs.append((m * m, value))
    return Signal.from_pairs(pairs)


def _log_weight_floor(m: int, exponent: Fraction, precision_bits: int) -> Fraction:
    """Certified dyadic floor of 1 / (m * ln(m)**exponent)."""

    def build():
        x = iv.mpf(m)
        scale = iv.mpf(1 << precision_bits)  # power of two, exact at any precision
        return scale / (x * iv.log(x) ** iv_fraction(exponent))

    scaled = certified_floor(build, start_precision=precision_bits + 64)
    if scaled == 0:
        raise ValueError(
            f"1/({m} * ln({m})**{exponent}) underflows {precision_bits} dyadic bits; "
            "raise precision_bits"
        )
    return Fraction(scaled, 1 << precision_bits)


def squares_log(epsilon: Fraction, cutoff: int, precision_bits: int = 128) -> Signal:
    """Value 1/(m * ln(m)**(1 + eps/2)) at index m**2, for m = 10 .. cutoff."""
    epsilon = _check_positive_epsilon(epsilon)
    if cutoff < _MIN_LOG_INDEX:
        raise ValueError(f"cutoff must be at least {_MIN_LOG_INDEX}; support would be empty")
    exponent = 1 + epsilon / 2
    return Signal.from_pairs(
        (m * m, _log_weight_floor(m, exponent, precision_bits))
        for m in range(_MIN_LOG_INDEX, cutoff + 1)
    )


def stretched_index(m: int, epsilon: Fraction) -> int:
    """Certified ceil(m * ln(m)**(1 + eps)).

    >>> stretched_index(10, Fraction(1))
    54
    """

    def build():
        x = iv.mpf(m)
        return x * iv.log(x) ** iv_fraction(1 + epsilon)

    return certified_ceil(build)


def stretched_log(epsilon: Fraction, cutoff: int, precision_bits: int = 128) -> Signal:
    """Value 1/(m * ln(m)**(1 + eps/2)) at index ceil(m * ln(m)**(1 + eps)).

    Index ceilings are certified by interval arithmetic; should two
    distinct m ever land on the same index the collision is rejected
    rather than silently merged.
    """
    epsilon = _check_positive_epsilon(epsilon)
    if cutoff < _MIN_LOG_INDEX:
        raise ValueError(f"cutoff must be at least {_MIN_LOG_INDEX}; support would be empty")
    value_exponent = 1 + epsilon / 2
    pairs = []
    previous = None
    for m in range(_MIN_LOG_INDEX, cutoff + 1):
        index = stretched_index(m, epsilon)
        if previous is not None and index <= previous:
            raise ValueError(
                f"index collision: m={m} lands on {index}, not past {previous}"
            )
        previous = index
        pairs.append((index, _log_weight_floor(m, value_exponent, precision_bits)))
    return Signal.from_pairs(pairs)


def spike_pair(size: int) -> Signal:
    """1 at the origin, 2*size at indices -3*size and +3*size.

    >>> spike_pair(100).indices
    (-300, 0, 300)
    """
    if size < _MIN_SPIKE_SIZE:
        raise ValueError(f"size must be at least {_MIN_SPIKE_SIZE}, got {size}")
    return Signal.from_pairs(
        [(-3 * size, 2 * size), (0, 1), (3 * size, 2 * size)]
    )


def composite_jump(min_size: int, max_size: int) -> Signal:
    """Damped spike-pair blocks translated far apart.

    For each size C in [min_size, max_size] the block contributes
    2**-C at index 4**C and 2*C * 2**-C at indices 4**C +- 3*C.  Blocks
    never overlap because consecutive translates are a factor 4 apart.
    """
    if min_size < _MIN_SPIKE_SIZE:
        raise ValueError(f"min_size must be at least {_MIN_SPIKE_SIZE}, got {min_size}")
    if max_size < min_size:
        raise ValueError("max_size must be at least min_size")
    pairs = []
    for c in range(min_size, max_size + 1):
        center = 4**c
        damp = Fraction(1, 2**c)
        pairs.append((center - 3 * c, 2 * c * damp))
        pairs.append((center, damp))
        pairs.append((center + 3 * c, 2 * c * damp))
    return Signal.from_pairs(pairs)
