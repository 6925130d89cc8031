import math
from fractions import Fraction

import pytest
from mpmath import iv

from freqlab.dyadic import PrecisionError, certified_ceil, certified_floor, enclosure_endpoints
from freqlab.families import (
    GeneratorSpec,
    composite_jump,
    generate,
    integer_nth_root,
    is_exact,
    metadata_lines,
    spike_pair,
    squares_log,
    squares_power,
    stretched_index,
    stretched_log,
)


def F(n, d=1):
    return Fraction(n, d)


class TestIntegerNthRoot:
    @pytest.mark.parametrize("x,q", [(0, 3), (1, 5), (63, 2), (64, 2), (65, 2), (2**251, 4)])
    def test_floor_property(self, x, q):
        r = integer_nth_root(x, q)
        assert r**q <= x < (r + 1) ** q

    def test_matches_isqrt(self):
        for x in range(0, 5000, 7):
            assert integer_nth_root(x, 2) == math.isqrt(x)

    def test_perfect_powers_and_neighbors(self):
        for q in range(2, 9):
            for base in (0, 1, 2, 3, 10, 97, 10**9, 2**130):
                for delta in (-1, 0, 1):
                    x = base**q + delta
                    if x < 0:
                        continue
                    t = integer_nth_root(x, q)
                    assert t**q <= x < (t + 1) ** q


class TestSquaresPower:
    def test_exact_integer_exponent(self):
        f = squares_power(F(1), 3)
        assert list(f) == [(1, F(1)), (4, F(1, 4)), (9, F(1, 9))]

    def test_single_point(self):
        f = squares_power(F(1), 1)
        assert list(f) == [(1, F(1))]

    def test_dyadic_floor_for_fractional_exponent(self):
        # m = 2, exponent 5/4: floor(2**128 * 2**(-5/4)) = floor(2**126.75),
        # independently the fourth root of 2**507 via two nested isqrt calls
        f = squares_power(F(1, 4), 2, precision_bits=128)
        expected = Fraction(math.isqrt(math.isqrt(1 << 507)), 1 << 128)
        assert f.value_at(4) == expected

    def test_support_is_squares(self):
        f = squares_power(F(1, 2), 20)
        assert f.indices == tuple(m * m for m in range(1, 21))

    def test_exactness_flag(self):
        assert is_exact(GeneratorSpec("squares_power", epsilon=F(1), cutoff=5))
        assert not is_exact(GeneratorSpec("squares_power", epsilon=F(1, 4), cutoff=5))

    def test_epsilon_validated(self):
        with pytest.raises(ValueError):
            squares_power(F(0), 5)
        with pytest.raises(ValueError):
            squares_power(F(-1, 2), 5)

    def test_more_bits_never_decrease_values(self):
        low = squares_power(F(1, 4), 6, precision_bits=64)
        high = squares_power(F(1, 4), 6, precision_bits=160)
        assert low.indices == high.indices
        for (_, a), (_, b) in zip(low, high):
            assert a <= b

    def test_one_sided_error(self):
        bits = 96
        f = squares_power(F(1, 3), 5, precision_bits=bits)
        for m in range(1, 6):
            scaled = f.value_at(m * m) * (1 << bits)
            assert scaled.denominator == 1
            t = scaled.numerator
            # t <= 2**bits * m**(-4/3) < t + 1, checked in integers
            assert t**3 * m**4 <= 2 ** (3 * bits)
            assert (t + 1) ** 3 * m**4 > 2 ** (3 * bits)


class TestSquaresLog:
    def test_cutoff_below_first_point(self):
        with pytest.raises(ValueError):
            squares_log(F(1), 9)

    def test_support(self):
        f = squares_log(F(1), 12)
        assert f.indices == (100, 121, 144)

    def test_single_point_value_certified(self):
        bits = 128
        f = squares_log(F(1), 10, precision_bits=bits)
        assert f.indices == (100,)
        t = (f.value_at(100) * (1 << bits)).numerator
        # independent enclosure of 2**bits / (10 * ln(10)**(3/2)) at fixed precision
        saved = iv.prec
        try:
            iv.prec = 400
            x = iv.mpf(10)
            target = iv.mpf(1 << bits) / (x * iv.log(x) ** (iv.mpf(3) / iv.mpf(2)))
            lo, hi = enclosure_endpoints(target)
        finally:
            iv.prec = saved
        assert t <= lo and hi < t + 1

    def test_more_bits_never_decrease_values(self):
        low = squares_log(F(1), 15, precision_bits=64)
        high = squares_log(F(1), 15, precision_bits=192)
        for (_, a), (_, b) in zip(low, high):
            assert a <= b


class TestStretchedLog:
    def test_first_index(self):
        # 10 * ln(10)**2 = 53.0189..., so the ceiling is 54
        assert stretched_index(10, F(1)) == 54

    def test_cutoff_validated(self):
        with pytest.raises(ValueError):
            stretched_log(F(1), 9)

    def test_indices_strictly_increasing(self):
        f = stretched_log(F(1), 12)
        assert len(f) == 3
        assert f.indices[0] == 54
        assert all(a < b for a, b in zip(f.indices, f.indices[1:]))

    def test_values_match_squares_log_weights(self):
        a = stretched_log(F(1), 20)
        b = squares_log(F(1), 20)
        assert a.values == b.values  # same weights, different placement


class TestSpikePair:
    def test_shape(self):
        f = spike_pair(100)
        assert list(f) == [(-300, F(200)), (0, F(1)), (300, F(200))]
        assert f.l1_norm == 401

    def test_minimum_size(self):
        with pytest.raises(ValueError):
            spike_pair(99)


class TestCompositeJump:
    def test_single_block(self):
        f = composite_jump(100, 100)
        base = 4**100
        assert f.indices == (base - 300, base, base + 300)
        assert f.value_at(base) == F(1, 2**100)
        assert f.value_at(base + 300) == F(200, 2**100)
        assert f.l1_norm == F(401, 2**100)

    def test_three_blocks(self):
        f = composite_jump(100, 102)
        assert len(f) == 9
        assert all(a < b for a, b in zip(f.indices, f.indices[1:]))

    def test_range_validated(self):
        with pytest.raises(ValueError):
            composite_jump(99, 100)
        with pytest.raises(ValueError):
            composite_jump(101, 100)


class TestGeneratorSpec:
    def test_dispatch(self):
        spec = GeneratorSpec("spike_pair", size=100)
        assert generate(spec) == spike_pair(100)
        spec = GeneratorSpec("composite_jump", size=100, cutoff=101)
        assert generate(spec) == composite_jump(100, 101)
        spec = GeneratorSpec("squares_power", epsilon=F(1), cutoff=4)
        assert generate(spec) == squares_power(F(1), 4)

    def test_validation(self):
        with pytest.raises(ValueError):
            GeneratorSpec("unknown_family")
        with pytest.raises(ValueError):
            GeneratorSpec("squares_power", cutoff=5)  # epsilon missing
        with pytest.raises(ValueError):
            GeneratorSpec("spike_pair")  # size missing

    def test_metadata_lines(self):
        lines = metadata_lines(GeneratorSpec("squares_power", epsilon=F(1, 4), cutoff=9))
        assert "family: squares_power" in lines
        assert "epsilon: 1/4" in lines
        assert any("dyadic floor" in line for line in lines)


class TestCertifiedRounding:
    def test_floor_and_ceil_agree_with_floats(self):
        def build():
            return iv.mpf(10) * iv.log(iv.mpf(10))

        assert certified_floor(build) == 23   # 10 ln 10 = 23.0258...
        assert certified_ceil(build) == 24

    def test_exact_value_representable(self):
        assert certified_floor(lambda: iv.mpf(12)) == 12

    def test_straddled_integer_raises(self):
        # exp(log(4)) encloses 4 strictly, so its floor never certifies
        with pytest.raises(PrecisionError):
            certified_floor(lambda: iv.exp(iv.log(iv.mpf(4))), max_precision=2048)
