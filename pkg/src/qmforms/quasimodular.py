"""Holomorphic quasi-modular forms for the full modular group.

A form of even weight k is stored as its canonical polynomial representation:
a rational combination of monomials E2^a E4^b E6^c with 2a + 4b + 6c = k.
The E2-degree is the depth.  The reduced transformation components are

    fhat_r = (1/r!) * d^r f / dE2^r,

polynomials again; the transformation law of f uses the true components
f_r = LAMBDA^r * fhat_r, with the scaling applied only when evaluating
numerically.  Differentiation D = q d/dq acts through the Ramanujan rules

    D E2 = (E2^2 - E4)/12,   D E4 = (E2 E4 - E6)/3,   D E6 = (E2 E6 - E4^2)/2.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from . import linalg
from .qseries import DEFAULT_PRECISION, QSeries
from .eisenstein import eisenstein_series


class NoMatchError(ValueError):
    """A q-expansion is not the expansion of any candidate form."""


class UnderdeterminedError(ValueError):
    """The recognition precision cannot separate the candidate monomials."""


def _coerce(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact integer or Fraction, got {type(value).__name__}")


class QuasiModularForm:
    """Weight-homogeneous polynomial in E2, E4, E6 with rational coefficients."""

    __slots__ = ("weight", "monomials")

    def __init__(self, weight, monomials):
        cleaned = {}
        for key, value in monomials.items():
            value = _coerce(value)
            if not value:
                continue
            a, b, c = key
            if a < 0 or b < 0 or c < 0:
                raise ValueError(f"negative exponent in monomial {key}")
            if 2 * a + 4 * b + 6 * c != weight:
                raise ValueError(
                    f"monomial E2^{a} E4^{b} E6^{c} has weight {2*a+4*b+6*c}, not {weight}"
                )
            cleaned[(a, b, c)] = value
        if not cleaned:
            # the zero form carries no weight information of its own
            weight = 0
        elif weight < 0 or weight % 2:
            raise ValueError(f"weight must be a non-negative even integer, got {weight}")
        self.weight = weight
        self.monomials = cleaned

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self):
        return not self.monomials

    @property
    def depth(self):
        """Degree in E2 (zero for the zero form)."""
        return max((a for (a, _, _) in self.monomials), default=0)

    @property
    def is_modular(self):
        return self.depth == 0

    def __eq__(self, other):
        return (
            isinstance(other, QuasiModularForm)
            and self.weight == other.weight
            and self.monomials == other.monomials
        )

    def __hash__(self):
        return hash((self.weight, tuple(sorted(self.monomials.items()))))

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QuasiModularForm):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.weight != other.weight:
            raise ValueError(f"cannot add forms of weights {self.weight} and {other.weight}")
        merged = dict(self.monomials)
        for key, value in other.monomials.items():
            merged[key] = merged.get(key, Fraction(0)) + value
        return QuasiModularForm(self.weight, merged)

    def __neg__(self):
        return QuasiModularForm(self.weight, {k: -v for k, v in self.monomials.items()})

    def __sub__(self, other):
        if not isinstance(other, QuasiModularForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QuasiModularForm):
            product = {}
            for (a1, b1, c1), v1 in self.monomials.items():
                for (a2, b2, c2), v2 in other.monomials.items():
                    key = (a1 + a2, b1 + b2, c1 + c2)
                    product[key] = product.get(key, Fraction(0)) + v1 * v2
            return QuasiModularForm(self.weight + other.weight, product)
        other = _coerce(other)
        return QuasiModularForm(self.weight, {k: other * v for k, v in self.monomials.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = _coerce(scalar)
        return self * (1 / scalar)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    # -- components and operators ---------------------------------------------

    def reduced_component(self, r):
        """The reduced component fhat_r = (1/r!) d^r/dE2^r applied to self."""
        if r < 0:
            raise ValueError("component index must be non-negative")
        if r == 0:
            return self
        out = {}
        for (a, b, c), value in self.monomials.items():
            if a >= r:
                out[(a - r, b, c)] = value * comb(a, r)
        return QuasiModularForm(self.weight - 2 * r if out else 0, out)

    def components(self):
        """The tuple (fhat_0, ..., fhat_depth)."""
        return tuple(self.reduced_component(r) for r in range(self.depth + 1))

    def lower(self):
        """The depth-lowering operator f -> fhat_1."""
        return self.reduced_component(1)

    def derive(self):
        """D = q d/dq via the Ramanujan rules; weight goes up by two."""
        out = {}

        def add(key, value):
            if value:
                out[key] = out.get(key, Fraction(0)) + value

        for (a, b, c), v in self.monomials.items():
            up = v * (Fraction(a, 12) + Fraction(b, 3) + Fraction(c, 2))
            add((a + 1, b, c), up)
            if a:
                add((a - 1, b + 1, c), -v * Fraction(a, 12))
            if b:
                add((a, b - 1, c + 1), -v * Fraction(b, 3))
            if c:
                add((a, b + 2, c - 1), -v * Fraction(c, 2))
        return QuasiModularForm(self.weight + 2 if out else 0, out)

    def e2_coefficient(self, t):
        """Coefficient of E2^t: a depth-0 form of weight (k - 2t)."""
        if t < 0:
            raise ValueError("exponent must be non-negative")
        out = {(0, b, c): v for (a, b, c), v in self.monomials.items() if a == t}
        return QuasiModularForm(self.weight - 2 * t if out else 0, out)

    # -- expansions --------------------------------------------------------------

    def qexpansion(self, precision=DEFAULT_PRECISION):
        """Substitute the generator series into the polynomial."""
        total = QSeries.zero(precision)
        for (a, b, c), value in self.monomials.items():
            total = total + value * _monomial_series(a, b, c, precision)
        return total

    # -- presentation --------------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        pieces = []
        for (a, b, c), v in sorted(self.monomials.items(), reverse=True):
            factors = []
            for name, e in (("E2", a), ("E4", b), ("E6", c)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(v)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            if not pieces:
                pieces.append(body if v > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"QuasiModularForm({self.weight}, {self})"


@lru_cache(maxsize=None)
def _generator_power(name, exponent, precision):
    if exponent == 0:
        return QSeries.one(precision)
    weight = {"E2": 2, "E4": 4, "E6": 6}[name]
    return _generator_power(name, exponent - 1, precision) * eisenstein_series(weight, precision)


@lru_cache(maxsize=None)
def _monomial_series(a, b, c, precision):
    return (
        _generator_power("E2", a, precision)
        * _generator_power("E4", b, precision)
        * _generator_power("E6", c, precision)
    )


def monomial(a, b, c, coefficient=1):
    """The form coefficient * E2^a E4^b E6^c."""
    return QuasiModularForm(2 * a + 4 * b + 6 * c, {(a, b, c): coefficient})


ONE = QuasiModularForm(0, {(0, 0, 0): 1})
E2 = QuasiModularForm(2, {(1, 0, 0): 1})
E4 = QuasiModularForm(4, {(0, 1, 0): 1})
E6 = QuasiModularForm(6, {(0, 0, 1): 1})
DELTA = QuasiModularForm(12, {(0, 3, 0): Fraction(1, 1728), (0, 0, 2): Fraction(-1, 1728)})


def weight_op(form):
    """Multiplication by the weight (the grading operator)."""
    return form * form.weight


def derivative_lift(modular_form, p):
    """Component tuple of the p-th derivative of a depth-0 form, computed
    directly from the weight data.

    For g of weight l, entry r is binom(p, r) * prod_{j=1..p<=r}(l + p - j)
    / 12^r times D^(p-r) g; the tuple coincides exactly with
    ``(D^p g).components()``.
    """
    if modular_form.depth > 0:
        raise ValueError("derivative_lift needs a modular (depth-0) input")
    if p < 0:
        raise ValueError("derivative order must be non-negative")
    l = modular_form.weight
    derivatives = [modular_form]
    for _ in range(p):
        derivatives.append(derivatives[-1].derive())
    entries = []
    for r in range(p + 1):
        scale = Fraction(comb(p, r), 12 ** r)
        for j in range(1, r + 1):
            scale *= l + p - j
        entries.append(derivatives[p - r] * scale)
    return tuple(entries)


def _candidate_keys(weight, depth_bound):
    keys = []
    for a in range(min(depth_bound, weight // 2) + 1):
        rest = weight - 2 * a
        for b in range(rest // 4 + 1):
            if (rest - 4 * b) % 6 == 0:
                keys.append((a, b, (rest - 4 * b) // 6))
    return sorted(keys)


def recognize(series, weight, depth_bound):
    """Find the unique form of the given weight and depth bound whose
    q-expansion matches ``series`` exactly, by an exact linear solve.

    Raises ``UnderdeterminedError`` when the precision of ``series`` cannot
    separate the candidate monomials, and ``NoMatchError`` when the system is
    inconsistent.
    """
    if weight < 0 or weight % 2:
        if series.is_zero:
            return QuasiModularForm(0, {})
        raise NoMatchError(f"no nonzero forms of weight {weight}")
    keys = _candidate_keys(weight, depth_bound)
    if not keys:
        if series.is_zero:
            return QuasiModularForm(0, {})
        raise NoMatchError(f"no candidate monomials of weight {weight}, depth <= {depth_bound}")
    n = series.precision
    columns = [_monomial_series(a, b, c, n) for (a, b, c) in keys]
    rows = [[col.coeffs[i] for col in columns] for i in range(n)]
    try:
        solution = linalg.solve_unique(rows, series.coeffs)
    except linalg.UnderdeterminedSystem as exc:
        raise UnderdeterminedError(f"underdetermined: {exc}") from exc
    except linalg.InconsistentSystem:
        raise NoMatchError(
            f"no match: series is not a weight-{weight} form of depth <= {depth_bound}"
        ) from None
    return QuasiModularForm(weight, dict(zip(keys, solution)))
