"""Almost holomorphic modular forms as polynomials in Yhat = -3/(pi*y).

A form of weight k is sum_r coeffs[r] * Yhat^r with holomorphic q-series
coefficients.  The completion of a quasi-modular form f substitutes its
reduced components for the coefficients, e.g. the completion of E2 is the
classical E2 - 3/(pi*y).  Everything here stays rational; Yhat acquires its
numeric value only in ``evaluate``.
"""

from fractions import Fraction

from .qseries import DEFAULT_PRECISION, Evaluation, QSeries, yhat


class NotHolomorphicError(ValueError):
    """Cancellation of the non-holomorphic part failed."""


class AlmostHolomorphicForm:
    """Polynomial in Yhat over truncated q-series, of fixed even weight."""

    __slots__ = ("weight", "coeffs")

    def __init__(self, weight, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("need at least one Yhat-coefficient")
        precisions = {s.precision for s in coeffs}
        if len(precisions) != 1:
            raise ValueError(f"precision mismatch across Yhat-coefficients: {sorted(precisions)}")
        while len(coeffs) > 1 and coeffs[-1].is_zero:
            coeffs = coeffs[:-1]
        if len(coeffs) == 1 and coeffs[0].is_zero:
            weight = 0
        elif weight < 0 or weight % 2:
            raise ValueError(f"weight must be a non-negative even integer, got {weight}")
        self.weight = weight
        self.coeffs = coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def precision(self):
        return self.coeffs[0].precision

    @property
    def is_zero(self):
        return len(self.coeffs) == 1 and self.coeffs[0].is_zero

    @property
    def constant_term(self):
        """The Yhat^0 coefficient, a plain q-series."""
        return self.coeffs[0]

    def coefficient(self, r):
        """The Yhat^r coefficient (zero series beyond the degree)."""
        if r < 0:
            raise ValueError("index must be non-negative")
        if r > self.degree:
            return QSeries.zero(self.precision)
        return self.coeffs[r]

    def __eq__(self, other):
        return (
            isinstance(other, AlmostHolomorphicForm)
            and self.weight == other.weight
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.weight, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, AlmostHolomorphicForm):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.weight != other.weight:
            raise ValueError(f"cannot add forms of weights {self.weight} and {other.weight}")
        if self.precision != other.precision:
            raise ValueError("precision mismatch")
        n = max(self.degree, other.degree) + 1
        return AlmostHolomorphicForm(
            self.weight, [self.coefficient(r) + other.coefficient(r) for r in range(n)]
        )

    def __neg__(self):
        return AlmostHolomorphicForm(self.weight, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, AlmostHolomorphicForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, AlmostHolomorphicForm):
            return NotImplemented
        return AlmostHolomorphicForm(self.weight, [scalar * c for c in self.coeffs])

    __rmul__ = __mul__

    def evaluate(self, tau):
        """Numeric value sum_r coeffs[r](tau) * (-3/(pi*Im tau))^r."""
        tau = complex(tau)
        if not tau.imag > 0:
            raise ValueError(f"tau must lie in the upper half-plane, got Im tau = {tau.imag}")
        yh = yhat(tau.imag)
        total = 0j
        error = 0.0
        power = 1.0
        for series in self.coeffs:
            value = series.evaluate(tau)
            total += value.value * power
            error += value.truncation_error * abs(power)
            power *= yh
        return Evaluation(total, error)

    def __str__(self):
        lines = [f"Y^{r}: {series}" for r, series in enumerate(self.coeffs)]
        return "\n".join(lines)

    def __repr__(self):
        return f"AlmostHolomorphicForm(weight={self.weight}, degree={self.degree})"


def completion(form, precision=DEFAULT_PRECISION):
    """The almost holomorphic completion sum_r qexp(fhat_r) * Yhat^r."""
    return AlmostHolomorphicForm(
        form.weight, [c.qexpansion(precision) for c in form.components()]
    )


def constant_term(form):
    """The Yhat^0 coefficient of an almost holomorphic form."""
    return form.constant_term


def component_forms(form, precision=DEFAULT_PRECISION):
    """Completions of all reduced components of a quasi-modular form.

    Entry r is an almost holomorphic form of weight k - 2r; the family is
    exactly what ``reconstruct`` inverts.
    """
    return [completion(c, precision) for c in form.components()]


def reconstruct(parts):
    """Recover the holomorphic q-expansion from a component family.

    Forms sum_s parts[s] * (-Yhat)^s as a Yhat-polynomial, demands that all
    positive Yhat-powers cancel identically at the working precision, and
    returns the constant coefficient.  Raises ``NotHolomorphicError`` when
    the cancellation fails, which signals that the inputs were not the
    component family of a single quasi-modular form.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("need at least one part")
    precisions = {p.precision for p in parts}
    if len(precisions) != 1:
        raise ValueError(f"precision mismatch across parts: {sorted(precisions)}")
    weight = None
    for s, part in enumerate(parts):
        if part.is_zero:
            continue
        if weight is None:
            weight = part.weight + 2 * s
        elif part.weight != weight - 2 * s:
            raise ValueError(
                f"part {s} has weight {part.weight}, expected {weight - 2 * s}"
            )
    n = parts[0].precision
    length = max(s + p.degree for s, p in enumerate(parts)) + 1
    acc = [QSeries.zero(n) for _ in range(length)]
    for s, part in enumerate(parts):
        sign = Fraction(-1 if s % 2 else 1)
        for r, series in enumerate(part.coeffs):
            acc[s + r] = acc[s + r] + sign * series
    for r in range(1, length):
        if not acc[r].is_zero:
            raise NotHolomorphicError(
                f"not holomorphic: Yhat^{r} coefficient does not cancel"
            )
    return acc[0]


def raise_op(form):
    """The reduced weight-raising operator (weight k -> k + 2).

    New Yhat^r coefficient: D(coeffs[r]) + (k - r + 1)/12 * coeffs[r-1].
    The constant term of raise_op(completion(f)) is D of the expansion of f.
    """
    k = form.weight
    n = form.precision
    out = []
    for r in range(form.degree + 2):
        term = form.coeffs[r].derive() if r <= form.degree else QSeries.zero(n)
        if r >= 1:
            term = term + Fraction(k - r + 1, 12) * form.coeffs[r - 1]
        out.append(term)
    return AlmostHolomorphicForm(k + 2, out)


def lower_op(form):
    """The reduced weight-lowering operator (weight k -> k - 2).

    New Yhat^r coefficient: (r + 1) * coeffs[r + 1]; degree drops by one and
    the constant term of lower_op(completion(f)) is the expansion of fhat_1.
    """
    if form.degree == 0:
        return AlmostHolomorphicForm(0, [QSeries.zero(form.precision)])
    out = [(r + 1) * form.coeffs[r + 1] for r in range(form.degree)]
    return AlmostHolomorphicForm(form.weight - 2, out)
