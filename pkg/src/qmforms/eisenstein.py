"""Level-one Eisenstein series, the discriminant, and dimension counts.

Conventions: E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n,
E6 = 1 - 504 sum sigma_5(n) q^n, Delta = (E4^3 - E6^2)/1728.  Dimensions of
the classical spaces M_k are obtained by counting monomials E4^a E6^b, so the
dimension and the constructed basis can never disagree.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qseries import DEFAULT_PRECISION, QSeries

_EISENSTEIN_FACTOR = {2: -24, 4: 240, 6: -504}


@lru_cache(maxsize=None)
def _divisor_power_sums(power, precision):
    """sigma_power(n) for 0 <= n < precision, with sigma(0) = 0."""
    sums = [0] * precision
    for d in range(1, precision):
        dk = d ** power
        for n in range(d, precision, d):
            sums[n] += dk
    return tuple(sums)


@lru_cache(maxsize=None)
def eisenstein_series(weight, precision=DEFAULT_PRECISION):
    """The q-expansion of E2, E4 or E6 to the requested precision."""
    if weight not in _EISENSTEIN_FACTOR:
        raise ValueError(f"no Eisenstein generator of weight {weight}")
    if precision < 1:
        raise ValueError("precision must be positive")
    factor = _EISENSTEIN_FACTOR[weight]
    sums = _divisor_power_sums(weight - 1, precision)
    return QSeries([Fraction(1)] + [Fraction(factor * s) for s in sums[1:]])


@lru_cache(maxsize=None)
def delta_series(precision=DEFAULT_PRECISION):
    """The discriminant cusp form (E4^3 - E6^2)/1728."""
    e4 = eisenstein_series(4, precision)
    e6 = eisenstein_series(6, precision)
    return (e4 ** 3 - e6 ** 2) * Fraction(1, 1728)


_GENERATORS = {
    "E2": lambda n: eisenstein_series(2, n),
    "E4": lambda n: eisenstein_series(4, n),
    "E6": lambda n: eisenstein_series(6, n),
    "Delta": delta_series,
}


def generator(name, precision=DEFAULT_PRECISION):
    """q-expansion of a named generator (E2, E4, E6 or Delta)."""
    try:
        build = _GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; expected one of {sorted(_GENERATORS)}") from None
    if precision < 1:
        raise ValueError("precision must be positive")
    return build(precision)


@dataclass(frozen=True)
class GeneratorTable:
    """The four generators expanded to a common precision."""

    e2: QSeries
    e4: QSeries
    e6: QSeries
    delta: QSeries

    @classmethod
    def at_precision(cls, precision=DEFAULT_PRECISION):
        return cls(
            e2=eisenstein_series(2, precision),
            e4=eisenstein_series(4, precision),
            e6=eisenstein_series(6, precision),
            delta=delta_series(precision),
        )


def monomial_basis(weight):
    """All (a, b) with 4a + 6b = weight, in lexicographic order.

    The monomials E4^a E6^b form a basis of the weight-``weight`` modular
    forms for the full modular group.
    """
    if weight < 0:
        raise ValueError("weight must be non-negative")
    if weight % 2:
        return []
    basis = []
    for a in range(weight // 4 + 1):
        rest = weight - 4 * a
        if rest % 6 == 0:
            basis.append((a, rest // 6))
    return basis


def dim_modular(weight):
    """Dimension of the modular forms of the given weight (level one)."""
    if weight < 0:
        raise ValueError("weight must be non-negative")
    return len(monomial_basis(weight))


def dim_cusp(weight):
    """Dimension of the cusp forms: one less than dim_modular once an
    Eisenstein series exists (weight >= 4), otherwise zero."""
    if weight < 0:
        raise ValueError("weight must be non-negative")
    if weight >= 4 and weight % 2 == 0:
        return dim_modular(weight) - 1
    return 0
