"""Centered averages, their supremum over radii, and least attaining radii.

For a sparse signal f, an integer n and a radius r >= 0, the centered
average is

    average(f, n, r) = (sum of |f| over [n - r, n + r]) / (2r + 1).

The supremum of these averages over all radii is the maximal value at n.
For a nonzero finitely supported f it is attained on a finite nonempty
set of radii: once the window swallows the whole support the numerator
freezes at ||f||_1 while the denominator keeps growing, so only radii up
to the hull distance `radius_bound` can attain it.  The least attaining
radius is the *frequency* of f at n.

The attaining-set search never walks radii one by one.  Between two
radii that pull a new support point into the window the numerator is
constant and 1/(2r+1) strictly decreases, so an attaining radius is
either 0 or a distance |s - n| to a support point.  `analyze` walks
those candidate distances outward from n, accumulating the window sum
incrementally in rescaled integers, compares averages by integer cross
multiplication, and stops early once ||f||_1 / (2r+1) can no longer beat
the current best.  `analyze_brute_force` deliberately ignores all of
that and sweeps every radius; it exists so the clever path can be
checked against an independent one.

The bilinear variants replace the window sum by
sum over k in [-r, r] of |f(n - k) g(n + k)|; here the candidate radii
are the |k| for which both mirrored positions lie in the supports.
"""

from __future__ import annotations

import multiprocessing
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .signal import IntegerInterval, Signal


@dataclass(frozen=True)
class FrequencyResult:
    """Maximal value, full attaining set, and least attaining radius at one point.

    For the zero signal every radius attains the (zero) supremum;
    `extremal_radii` is then None and `zero_signal` is set, with the
    frequency reported as 0 by convention.
    """

    maximal_value: Fraction
    extremal_radii: tuple[int, ...] | None
    frequency: int
    zero_signal: bool = False


@dataclass(frozen=True)
class BilinearFrequencyResult:
    """Bilinear analogue of `FrequencyResult`.

    `degenerate` marks points where the bilinear supremum is 0 (no k
    ever pairs two support points); the attaining set is then every
    radius and the frequency is 0 by convention.
    """

    maximal_value: Fraction
    extremal_radii: tuple[int, ...] | None
    frequency: int
    degenerate: bool = False


def average(f: Signal, n: int, r: int) -> Fraction:
    """Centered average of |f| over [n - r, n + r], exact.

    >>> from fractions import Fraction
    >>> average(Signal.from_pairs([(0, 1)]), 0, 1)
    Fraction(1, 3)
    """
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    return Fraction(f.window_sum_scaled(n - r, n + r), f.scale * (2 * r + 1))


def radius_bound(f: Signal, n: int) -> int:
    """A radius r0 such that every attaining radius at n is at most r0.

    r0 is the distance from n to the farthest end of the support hull:
    the window at r0 already holds all of ||f||_1, and any larger window
    divides the same mass by a larger count.  Raises ValueError for the
    zero signal, whose attaining set is every radius.
    """
    hull = f.support_hull()
    if hull is None:
        raise ValueError("zero signal: the attaining set is unbounded")
    return max(abs(n - hull.lo), abs(n - hull.hi))


def candidate_radii(f: Signal, n: int) -> list[int]:
    """Sorted radii at which the average at n can attain its supremum.

    These are 0 together with the distances from n to the support
    points.  Between consecutive candidates the window content is
    unchanged while 2r+1 grows, so the average strictly decreases;
    hence the attaining set is contained in this list.
    """
    if f.is_zero:
        raise ValueError("zero signal: every radius is a candidate")
    return sorted({0} | {abs(s - n) for s in f.indices})


def _walk(f: Signal, n: int):
    """Candidate-radius walk state: yields (r, acc) with acc the scaled
    window sum over [n - r, n + r], visiting r = 0 and then each support
    distance outward."""
    idx = f.indices
    sv = f.scaled_values
    size = len(idx)
    j = bisect_left(idx, n)
    i = j - 1
    acc = 0
    if j < size and idx[j] == n:
        acc = sv[j]
        j += 1
    yield 0, acc
    while i >= 0 or j < size:
        dl = n - idx[i] if i >= 0 else None
        dr = idx[j] - n if j < size else None
        if dr is None or (dl is not None and dl <= dr):
            r = dl
        else:
            r = dr
        if dl == r:
            acc += sv[i]
            i -= 1
        if dr == r:
            acc += sv[j]
            j += 1
        yield r, acc


def analyze(f: Signal, n: int) -> FrequencyResult:
    """Exact maximal value, full attaining set, and frequency at n.

    >>> analyze(Signal.from_pairs([(0, 1)]), 7)
    FrequencyResult(maximal_value=Fraction(1, 15), extremal_radii=(7,), frequency=7, zero_signal=False)
    """
    if f.is_zero:
        return FrequencyResult(Fraction(0), None, 0, zero_signal=True)
    l1 = f.scaled_l1
    best_num = 0
    best_w = 1
    ties: list[int] = [0]
    walk = _walk(f, n)
    for r, acc in walk:
        w = 2 * r + 1
        # Everything from r outward is bounded by ||f||_1 / (2r+1);
        # once that is strictly below the current best, stop.
        if l1 * best_w < best_num * w:
            break
        lhs = acc * best_w
        rhs = best_num * w
        if lhs > rhs:
            best_num, best_w, ties = acc, w, [r]
        elif lhs == rhs and r != 0:
            ties.append(r)
    return FrequencyResult(
        Fraction(best_num, f.scale * best_w), tuple(ties), ties[0], zero_signal=False
    )


def _frequency_only(f: Signal, n: int) -> int:
    """Least attaining radius at n without building Fractions (hot path)."""
    l1 = f.scaled_l1
    best_num = 0
    best_w = 1
    best_r = 0
    for r, acc in _walk(f, n):
        w = 2 * r + 1
        if l1 * best_w < best_num * w:
            break
        if acc * best_w > best_num * w:
            best_num, best_w, best_r = acc, w, r
    return best_r


def analyze_brute_force(f: Signal, n: int) -> FrequencyResult:
    """Independent oracle for `analyze`: sweep every radius up to
    `radius_bound`, growing the window one step at a time and comparing
    the average at every single r.  Slow on purpose; no candidate logic,
    no pruning."""
    if f.is_zero:
        return FrequencyResult(Fraction(0), None, 0, zero_signal=True)
    bound = radius_bound(f, n)
    idx = f.indices
    sv = f.scaled_values
    size = len(idx)
    j = bisect_left(idx, n)
    i = j - 1
    acc = 0
    if j < size and idx[j] == n:
        acc = sv[j]
        j += 1
    best_num, best_w, ties = acc, 1, [0]
    for r in range(1, bound + 1):
        if i >= 0 and idx[i] == n - r:
            acc += sv[i]
            i -= 1
        if j < size and idx[j] == n + r:
            acc += sv[j]
            j += 1
        w = 2 * r + 1
        lhs = acc * best_w
        rhs = best_num * w
        if lhs > rhs:
            best_num, best_w, ties = acc, w, [r]
        elif lhs == rhs:
            ties.append(r)
    return FrequencyResult(
        Fraction(best_num, f.scale * best_w), tuple(ties), ties[0], zero_signal=False
    )


def half_mass_radius(f: Signal) -> int:
    """Least m >= 0 with sum of |f| over [-m, m] at least ||f||_1 / 2.

    The window sum only jumps at distances |s| to support points, so the
    answer is found by binary search over those distances.
    """
    if f.is_zero:
        raise ValueError("zero signal has no half-mass radius")
    l1 = f.scaled_l1
    candidates = sorted({0} | {abs(s) for s in f.indices})
    lo, hi = 0, len(candidates) - 1
    # window_sum([-m, m]) is nondecreasing in m and reaches l1 at the end.
    while lo < hi:
        mid = (lo + hi) // 2
        m = candidates[mid]
        if 2 * f.window_sum_scaled(-m, m) >= l1:
            hi = mid
        else:
            lo = mid + 1
    return candidates[lo]


def frequency_profile(
    f: Signal, span: IntegerInterval, threads: int = 1
) -> list[tuple[int, Fraction, int]]:
    """(n, maximal value, frequency) for every n in the span, in order.

    With threads > 1 the span is chunked across a process pool; chunks
    are reassembled in index order, so the output is identical for any
    worker count.
    """
    if f.is_zero:
        return [(n, Fraction(0), 0) for n in range(span.lo, span.hi + 1)]

    def rows(lo: int, hi: int) -> list[tuple[int, Fraction, int]]:
        out = []
        for n in range(lo, hi + 1):
            res = analyze(f, n)
            out.append((n, res.maximal_value, res.frequency))
        return out

    return _chunked_scan(f, span, rows, _profile_chunk, threads)


def frequency_values(f: Signal, span: IntegerInterval, threads: int = 1) -> list[int]:
    """Frequencies only, for census scans; same chunking as `frequency_profile`."""
    if f.is_zero:
        return [0] * span.length

    def rows(lo: int, hi: int) -> list[int]:
        return [_frequency_only(f, n) for n in range(lo, hi + 1)]

    return _chunked_scan(f, span, rows, _frequency_chunk, threads)


_worker_signal: Signal | None = None


def _init_worker(sig: Signal) -> None:
    global _worker_signal
    _worker_signal = sig


def _profile_chunk(bounds: tuple[int, int]):
    lo, hi = bounds
    out = []
    for n in range(lo, hi + 1):
        res = analyze(_worker_signal, n)
        out.append((n, res.maximal_value, res.frequency))
    return out


def _frequency_chunk(bounds: tuple[int, int]):
    lo, hi = bounds
    return [_frequency_only(_worker_signal, n) for n in range(lo, hi + 1)]


def _chunked_scan(f, span, serial_rows, chunk_fn, threads):
    total = span.length
    if threads <= 1 or total < 2048:
        return serial_rows(span.lo, span.hi)
    chunk = max(1024, -(-total // (threads * 8)))
    bounds = [
        (lo, min(lo + chunk - 1, span.hi)) for lo in range(span.lo, span.hi + 1, chunk)
    ]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(threads, initializer=_init_worker, initargs=(f,)) as pool:
        pieces = pool.map(chunk_fn, bounds)
    return [row for piece in pieces for row in piece]


def bilinear_average(f: Signal, g: Signal, n: int, r: int) -> Fraction:
    """(1/(2r+1)) * sum over k in [-r, r] of |f(n - k) g(n + k)|, exact.

    Only k with n - k in the support of f can contribute, so the sum
    runs over the f-support inside [n - r, n + r] and checks the
    mirrored position in g.
    """
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    lo = bisect_left(f.indices, n - r)
    total = 0
    for pos in range(lo, len(f.indices)):
        s = f.indices[pos]
        if s > n + r:
            break
        mirrored = g.scaled_value_at(2 * n - s)
        if mirrored:
            total += f.scaled_values[pos] * mirrored
    return Fraction(total, f.scale * g.scale * (2 * r + 1))


def _bilinear_terms(f: Signal, g: Signal, n: int) -> dict[int, int]:
    """Scaled product terms keyed by |k|, for k with f(n-k) and g(n+k) both set."""
    terms: dict[int, int] = {}
    for pos, s in enumerate(f.indices):
        k = n - s
        mirrored = g.scaled_value_at(n + k)
        if mirrored:
            d = abs(k)
            terms[d] = terms.get(d, 0) + f.scaled_values[pos] * mirrored
    return terms


def bilinear_analyze(f: Signal, g: Signal, n: int) -> BilinearFrequencyResult:
    """Exact bilinear maximal value, attaining set, and frequency at n.

    Candidate radii are 0 plus the |k| for which n - k lies in the
    support of f and n + k in the support of g.  If no k qualifies the
    supremum is 0 at every radius and the result is degenerate.
    """
    terms = _bilinear_terms(f, g, n)
    if not terms:
        return BilinearFrequencyResult(Fraction(0), None, 0, degenerate=True)
    total = sum(terms.values())
    best_num = terms.get(0, 0)
    best_w = 1
    ties = [0]
    acc = best_num
    for d in sorted(terms):
        if d == 0:
            continue
        w = 2 * d + 1
        if total * best_w < best_num * w:
            break
        acc += terms[d]
        lhs = acc * best_w
        rhs = best_num * w
        if lhs > rhs:
            best_num, best_w, ties = acc, w, [d]
        elif lhs == rhs:
            ties.append(d)
    return BilinearFrequencyResult(
        Fraction(best_num, f.scale * g.scale * best_w), tuple(ties), ties[0]
    )


def bilinear_analyze_brute_force(f: Signal, g: Signal, n: int) -> BilinearFrequencyResult:
    """Independent oracle for `bilinear_analyze`: sweep every radius up
    to the farthest f-support distance, probing both k = r and k = -r at
    each step."""
    if f.is_zero or g.is_zero:
        return BilinearFrequencyResult(Fraction(0), None, 0, degenerate=True)
    hull = f.support_hull()
    bound = max(abs(n - hull.lo), abs(n - hull.hi))
    acc = f.scaled_value_at(n) * g.scaled_value_at(n)
    best_num, best_w, ties = acc, 1, [0]
    for r in range(1, bound + 1):
        for k in (r, -r):
            left = f.scaled_value_at(n - k)
            if left:
                right = g.scaled_value_at(n + k)
                if right:
                    acc += left * right
        w = 2 * r + 1
        lhs = acc * best_w
        rhs = best_num * w
        if lhs > rhs:
            best_num, best_w, ties = acc, w, [r]
        elif lhs == rhs:
            ties.append(r)
    if best_num == 0:
        return BilinearFrequencyResult(Fraction(0), None, 0, degenerate=True)
    return BilinearFrequencyResult(
        Fraction(best_num, f.scale * g.scale * best_w), tuple(ties), ties[0]
    )
