import random
from fractions import Fraction

import pytest

from qmforms import QSeries, format_series
from qmforms.eisenstein import delta_series, eisenstein_series

from _oracles import delta_by_eta, eisenstein_by_divisors, mp_eval, sigma

# frozen with a 60-digit independent summation of the full series at tau = i
E4_AT_I = 1.455762892268709322462422
DELTA_AT_I = 0.001785369850642151904343055


def series(*coeffs):
    return QSeries(coeffs)


def geometric(precision):
    return QSeries([1] * precision)


class TestConstruction:
    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            QSeries([])

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            QSeries([1.5])

    def test_precision(self):
        assert series(1, 2, 3).precision == 3

    def test_truncate_never_extends(self):
        s = series(1, 2, 3)
        assert s.truncate(10) is s
        assert s.truncate(2) == series(1, 2)


class TestAdd:
    def test_cancellation(self):
        one_plus_q = series(1, 1)
        one_minus_q = series(1, -1)
        assert one_plus_q + one_minus_q == series(2, 0)

    def test_eisenstein_sum_matches_divisor_oracle(self):
        n = 16
        expected = [
            a + b
            for a, b in zip(eisenstein_by_divisors(4, n), eisenstein_by_divisors(6, n))
        ]
        total = eisenstein_series(4, n) + eisenstein_series(6, n)
        assert list(total.coeffs) == expected
        assert total.coeffs[0] == 2 and total.coeffs[1] == -264

    def test_additive_identity(self):
        s = series(3, Fraction(1, 2), -7)
        assert s + QSeries.zero(3) == s

    def test_mixed_precision_truncates(self):
        assert (series(1, 1, 1) + series(1, 1)).precision == 2


class TestMul:
    def test_difference_of_squares(self):
        lhs = QSeries([1, 1, 0]) * QSeries([1, -1, 0])
        assert lhs == series(1, 0, -1)

    def test_e4_squared_is_e8(self):
        # dim M_8 = 1 forces E4^2 = E8 = 1 + 480 sum sigma_7(n) q^n
        n = 24
        e4sq = eisenstein_series(4, n) ** 2
        expected = [Fraction(1)] + [Fraction(480) * sigma(k, 7) for k in range(1, n)]
        assert list(e4sq.coeffs) == expected

    def test_discriminant_against_eta_product(self):
        n = 32
        lhs = eisenstein_series(4, n) ** 3 - eisenstein_series(6, n) ** 2
        assert list(lhs.coeffs) == [1728 * c for c in delta_by_eta(n)]

    def test_scalar_multiplication(self):
        assert 3 * series(1, 2) == series(3, 6)
        assert series(1, 2) * Fraction(1, 2) == series(Fraction(1, 2), 1)


class TestDerive:
    def test_constant(self):
        assert QSeries.one(5).derive() == QSeries.zero(5)

    def test_q(self):
        q = series(0, 1, 0)
        assert q.derive() == q

    def test_e2_derivative_matches_n_sigma_oracle(self):
        n = 20
        d = eisenstein_series(2, n).derive()
        assert list(d.coeffs) == [Fraction(-24) * k * sigma(k, 1) for k in range(n)]
        assert d.coeffs[1] == -24 and d.coeffs[2] == -144

    def test_derivation_property(self):
        rng = random.Random(7)
        for _ in range(25):
            a = QSeries([rng.randint(-5, 5) for _ in range(10)])
            b = QSeries([rng.randint(-5, 5) for _ in range(10)])
            assert (a * b).derive() == a * b.derive() + b * a.derive()


class TestRingAxioms:
    def test_axioms_on_random_series(self):
        rng = random.Random(11)
        for _ in range(25):
            a, b, c = (
                QSeries([Fraction(rng.randint(-4, 4), rng.choice([1, 2, 3])) for _ in range(8)])
                for _ in range(3)
            )
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c


class TestEvaluate:
    def test_constant(self):
        for tau in (1j, complex(0.5, 2.0)):
            assert QSeries.one(8).evaluate(tau).value == 1

    def test_e4_at_i_matches_frozen_oracle(self):
        value = eisenstein_series(4, 64).evaluate(1j).value
        assert abs(value - E4_AT_I) < 1e-12
        assert abs(value.imag) < 1e-12

    def test_delta_at_i_matches_frozen_oracle(self):
        value = delta_series(64).evaluate(1j).value
        assert abs(value - DELTA_AT_I) < 1e-15
        assert value.real > 0 and abs(value) < 0.002

    def test_against_mpmath_summation(self):
        tau = complex(0.3, 1.1)
        s = eisenstein_series(6, 48)
        ours = s.evaluate(tau).value
        theirs = mp_eval(list(s.coeffs), tau)
        assert abs(ours - theirs) < 1e-10 * max(1, abs(theirs))

    def test_rejects_lower_half_plane(self):
        s = QSeries.one(4)
        for tau in (0j, complex(1.0, -0.5), complex(2.0, 0.0)):
            with pytest.raises(ValueError):
                s.evaluate(tau)

    def test_error_estimate_bounds_refinement(self):
        # for series with |a_n| <= 1 the tail estimate at precision N/2
        # dominates the change from doubling the precision
        taus = (complex(0.3, 1.1), complex(-0.4, 0.9), complex(0.1, 1.7))
        for build in (geometric, lambda n: QSeries([(-1) ** k for k in range(n)])):
            coarse, fine = build(32), build(64)
            for tau in taus:
                low = coarse.evaluate(tau)
                high = fine.evaluate(tau)
                assert abs(high.value - low.value) <= low.truncation_error

    def test_error_estimate_decreases_with_precision(self):
        tau = complex(0.0, 0.4)
        e32 = geometric(32).evaluate(tau).truncation_error
        e64 = geometric(64).evaluate(tau).truncation_error
        assert 0 < e64 < e32


class TestFormatting:
    def test_expansion_string(self):
        assert str(eisenstein_series(4, 3)) == "1 + 240q + 2160q^2"
        assert str(QSeries.zero(4)) == "0"
        assert format_series(series(0, 1, Fraction(-1, 2))) == "q - 1/2*q^2"


def test_cocycle_constant_identity():
    # 2 pi i * LAMBDA = 12 rationalizes every reduced normalization
    import math

    from qmforms import LAMBDA

    assert abs(2j * math.pi * LAMBDA - 12) < 1e-12
