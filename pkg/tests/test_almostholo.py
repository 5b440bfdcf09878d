import math
import random
from fractions import Fraction

import pytest

from qmforms import (
    AlmostHolomorphicForm,
    E2,
    E4,
    E6,
    NotHolomorphicError,
    ONE,
    QSeries,
    check_scalar,
    completion,
    component_forms,
    constant_term,
    default_plan,
    lower_op,
    max_relative,
    raise_op,
    reconstruct,
)

from _oracles import random_form

N = 32


class TestCompletion:
    def test_e2(self):
        F = completion(E2, N)
        assert F.weight == 2 and F.degree == 1
        assert F.coeffs[0] == E2.qexpansion(N)
        assert F.coeffs[1] == QSeries.one(N)

    def test_modular_form_stays_degree_zero(self):
        F = completion(E4, N)
        assert F.degree == 0 and F.coeffs[0] == E4.qexpansion(N)

    def test_e2_squared(self):
        F = completion(E2 * E2, N)
        assert F.degree == 2
        assert F.coeffs[0] == (E2 * E2).qexpansion(N)
        assert F.coeffs[1] == 2 * E2.qexpansion(N)
        assert F.coeffs[2] == QSeries.one(N)

    def test_constant_term_round_trip(self):
        assert constant_term(completion(E2, N)) == E2.qexpansion(N)
        assert constant_term(completion(E2 * E4, N)) == (E2 * E4).qexpansion(N)
        assert constant_term(completion(E4, N)) == E4.qexpansion(N)


class TestConstruction:
    def test_precision_mismatch_rejected(self):
        with pytest.raises(ValueError):
            AlmostHolomorphicForm(2, [QSeries.one(8), QSeries.one(4)])

    def test_top_coefficient_trimmed(self):
        F = AlmostHolomorphicForm(2, [QSeries.one(8), QSeries.zero(8)])
        assert F.degree == 0

    def test_zero_form(self):
        F = AlmostHolomorphicForm(6, [QSeries.zero(8)])
        assert F.is_zero and F.weight == 0

    def test_odd_weight_rejected(self):
        with pytest.raises(ValueError):
            AlmostHolomorphicForm(3, [QSeries.one(8)])


class TestComponentForms:
    def test_e2(self):
        parts = component_forms(E2, N)
        assert len(parts) == 2
        assert parts[0] == completion(E2, N)
        assert parts[1] == AlmostHolomorphicForm(0, [QSeries.one(N)])

    def test_modular(self):
        assert component_forms(E4, N) == [completion(E4, N)]

    def test_e2_squared_middle_part(self):
        parts = component_forms(E2 * E2, N)
        assert parts[0] == completion(E2 * E2, N)
        assert parts[1] == 2 * completion(E2, N)
        assert parts[2] == AlmostHolomorphicForm(0, [QSeries.one(N)])

    def test_nested_structure(self):
        # entry r carries binom(r+t, r) * qexp(fhat_{r+t}) at Yhat^t
        rng = random.Random(41)
        for _ in range(10):
            f = random_form(rng, max_weight=16, max_depth=5)
            parts = component_forms(f, N)
            for r, part in enumerate(parts):
                for t in range(part.degree + 1):
                    expected = math.comb(r + t, r) * f.reduced_component(r + t).qexpansion(N)
                    assert part.coefficient(t) == expected


class TestReconstruct:
    def test_e2(self):
        assert reconstruct(component_forms(E2, N)) == E2.qexpansion(N)

    def test_single_modular_part(self):
        assert reconstruct([completion(E4, N)]) == E4.qexpansion(N)

    def test_random_round_trips(self):
        rng = random.Random(43)
        for _ in range(20):
            f = random_form(rng, max_weight=20, max_depth=6)
            assert reconstruct(component_forms(f, N)) == f.qexpansion(N)

    def test_corrupted_family_fails(self):
        parts = component_forms(E2 * E2 * E4, N)
        corrupted = list(parts)
        corrupted[1] = completion(E6, N)  # right weight, wrong content
        with pytest.raises(NotHolomorphicError):
            reconstruct(corrupted)

    def test_precision_mismatch_fails_loudly(self):
        parts = [completion(E2, 16), completion(ONE, 8)]
        with pytest.raises(ValueError, match="precision"):
            reconstruct(parts)

    def test_weight_bookkeeping_enforced(self):
        with pytest.raises(ValueError, match="weight"):
            reconstruct([completion(E4, N), completion(E4, N)])


class TestRaising:
    def test_e4(self):
        F = raise_op(completion(E4, N))
        assert F.weight == 6 and F.degree == 1
        assert F.coeffs[0] == E4.qexpansion(N).derive()
        assert F.coeffs[1] == E4.qexpansion(N) * Fraction(1, 3)

    def test_weight_zero_constant_killed(self):
        assert raise_op(AlmostHolomorphicForm(0, [QSeries.one(N)])).is_zero

    def test_constant_term_is_derivative(self):
        rng = random.Random(47)
        for _ in range(10):
            f = random_form(rng, max_weight=16, max_depth=5)
            lhs = constant_term(raise_op(completion(f, N)))
            assert lhs == f.qexpansion(N).derive()


class TestLowering:
    def test_e2(self):
        assert lower_op(completion(E2, N)) == AlmostHolomorphicForm(0, [QSeries.one(N)])

    def test_degree_zero_goes_to_zero(self):
        assert lower_op(completion(E6, N)).is_zero

    def test_e2_squared(self):
        assert lower_op(completion(E2 * E2, N)) == 2 * completion(E2, N)

    def test_intertwining_with_components(self):
        rng = random.Random(53)
        for _ in range(20):
            f = random_form(rng, max_weight=20, max_depth=5)
            assert lower_op(completion(f, N)) == completion(f.lower(), N)


class TestEvaluate:
    def test_constant(self):
        F = AlmostHolomorphicForm(0, [QSeries.one(8)])
        assert F.evaluate(complex(0.2, 0.9)).value == 1

    def test_e2_star_vanishes_at_i(self):
        # the weight-2 law at the fixed point of S forces E2*(i) = 0
        value = completion(E2, 64).evaluate(1j).value
        assert abs(value) < 1e-10

    def test_e2_star_against_closed_form(self):
        tau = complex(0.3, 1.1)
        expected = E2.qexpansion(64).evaluate(tau).value - 3.0 / (math.pi * 1.1)
        assert abs(completion(E2, 64).evaluate(tau).value - expected) < 1e-14

    def test_weight_two_law_at_specific_point(self):
        F = completion(E2, 64)
        tau = 2j
        image = -1 / tau
        lhs = F.evaluate(image).value
        rhs = tau ** 2 * F.evaluate(tau).value
        assert abs(lhs - rhs) / max(1.0, abs(rhs)) < 1e-8

    def test_rejects_lower_half_plane(self):
        with pytest.raises(ValueError):
            completion(E2, 8).evaluate(complex(1.0, -2.0))

    def test_numeric_modularity_of_completions(self):
        plan = default_plan()
        for f in (E2, E4, E2 * E2, E2 * E4, E2 * E2 * E6):
            F = completion(f, plan.precision)
            residuals = check_scalar(F.evaluate, f.weight, plan, label=f"completion({f})")
            assert max_relative(residuals) < plan.tolerance
