import pytest

from qmforms import (
    GeneratorTable,
    dim_cusp,
    dim_modular,
    generator,
    monomial_basis,
)
from qmforms.quasimodular import _monomial_series

from _oracles import delta_by_eta, eisenstein_by_divisors, exact_rank

# dim M_k for k = 0, 2, ..., 24
CLASSICAL_DIMS = [1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3]


class TestGenerators:
    def test_e2_expansion(self):
        assert str(generator("E2", 4)) == "1 - 24q - 72q^2 - 96q^3"

    def test_e6_expansion(self):
        assert str(generator("E6", 3)) == "1 - 504q - 16632q^2"

    def test_delta_expansion(self):
        assert str(generator("Delta", 4)) == "q - 24q^2 + 252q^3"

    @pytest.mark.parametrize("weight", [2, 4, 6])
    def test_series_match_divisor_oracle(self, weight):
        n = 40
        name = f"E{weight}"
        assert list(generator(name, n).coeffs) == eisenstein_by_divisors(weight, n)

    def test_delta_matches_eta_oracle(self):
        n = 40
        assert list(generator("Delta", n).coeffs) == delta_by_eta(n)

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            generator("E8", 4)

    def test_bad_precision(self):
        with pytest.raises(ValueError):
            generator("E4", 0)

    def test_table_invariants(self):
        table = GeneratorTable.at_precision(24)
        assert table.e2.coeffs[0] == 1
        assert table.e4.coeffs[0] == 1
        assert table.e6.coeffs[0] == 1
        assert table.delta.coeffs[0] == 0
        assert table.delta * 1728 == table.e4 ** 3 - table.e6 ** 2

    def test_discriminant_valuation_and_leading_coefficient(self):
        diff = generator("E4", 16) ** 3 - generator("E6", 16) ** 2
        assert diff.valuation() == 1
        assert diff.coeffs[1] == 1728


class TestDimensions:
    def test_classical_table(self):
        assert [dim_modular(k) for k in range(0, 25, 2)] == CLASSICAL_DIMS

    def test_weight_zero(self):
        assert dim_modular(0) == 1

    def test_weight_two_vanishes(self):
        assert dim_modular(2) == 0

    def test_weight_twelve(self):
        assert dim_modular(12) == 2

    def test_odd_weights_vanish(self):
        assert dim_modular(7) == 0
        assert dim_cusp(11) == 0

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            dim_modular(-2)
        with pytest.raises(ValueError):
            dim_cusp(-4)

    def test_cusp_dimensions(self):
        assert dim_cusp(12) == 1
        assert dim_cusp(0) == 0
        assert dim_cusp(2) == 0
        assert dim_cusp(16) == 1
        for k in range(4, 41, 2):
            assert dim_cusp(k) == dim_modular(k) - 1


class TestMonomialBasis:
    def test_weight_eight(self):
        assert monomial_basis(8) == [(2, 0)]

    def test_weight_twelve(self):
        assert monomial_basis(12) == [(0, 2), (3, 0)]

    def test_weight_two_empty(self):
        assert monomial_basis(2) == []

    def test_length_equals_dimension(self):
        for k in range(0, 41, 2):
            assert len(monomial_basis(k)) == dim_modular(k)

    def test_basis_expansions_linearly_independent(self):
        # exact rank over Q of the monomial expansions for all even k <= 40
        n = 64
        for k in range(0, 41, 2):
            rows = [
                list(_monomial_series(0, a, b, n).coeffs) for (a, b) in monomial_basis(k)
            ]
            assert exact_rank(rows) == dim_modular(k)
