"""Vector-valued modular forms with the symmetric-power representation.

A rank parameter m fixes the representation Sym^m of the standard action on
column vectors; the representation space has the basis e1^(m-i) e2^i for
i = 0..m.  A ``VectorValuedForm`` wraps a quasi-modular source f of weight k
and depth <= m; the vector-valued object of weight k - m is

    F(tau) = sum_r f_r(tau) (tau, 1)^(m-r) (1, 0)^r,

with true components f_r = LAMBDA^r fhat_r.  All other bases (the
holomorphic-weight components, the w-basis) are derived views of the source,
so every conversion is exact.
"""

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from . import linalg
from .almostholo import completion
from .eisenstein import dim_modular, monomial_basis
from .qseries import DEFAULT_PRECISION, LAMBDA
from .quasimodular import E2, E4, E6, QuasiModularForm


@dataclass(frozen=True)
class GroupElement:
    """An integer matrix [[a, b], [c, d]] of determinant one."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} must be 1")

    def act(self, tau):
        """Moebius action (a*tau + b)/(c*tau + d)."""
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def j(self, tau):
        """Factor of automorphy c*tau + d."""
        return self.c * tau + self.d

    @property
    def jprime(self):
        """Derivative of the (linear) factor of automorphy: the entry c."""
        return self.c

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return GroupElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return GroupElement(self.d, -self.b, -self.c, self.a)

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY = GroupElement(1, 0, 0, 1)
T = GroupElement(1, 1, 0, 1)
S = GroupElement(0, -1, 1, 0)


def sym_matrix(gamma, m):
    """Integer matrix of Sym^m(gamma) on the basis e1^(m-i) e2^i.

    gamma sends e1 to a*e1 + c*e2 and e2 to b*e1 + d*e2; the matrix is
    exactly multiplicative: sym_matrix(g*h) = sym_matrix(g) @ sym_matrix(h).
    """
    if m < 0:
        raise ValueError("the symmetric power must be non-negative")
    a, b, c, d = gamma.a, gamma.b, gamma.c, gamma.d
    mat = [[0] * (m + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        # expand (a e1 + c e2)^(m-i) * (b e1 + d e2)^i
        for p in range(m - i + 1):
            left = comb(m - i, p) * a ** (m - i - p) * c ** p
            for q in range(i + 1):
                mat[p + q][i] += left * comb(i, q) * b ** (i - q) * d ** q
    return mat


class VectorEvaluation(NamedTuple):
    """Vector of component values plus an aggregate tail estimate."""

    values: tuple
    truncation_error: float


class VectorValuedForm:
    """A rank-(m+1) modular object built from a quasi-modular source."""

    __slots__ = ("source", "m", "weight_label")

    def __init__(self, source, m, weight_label=None):
        if m < 0:
            raise ValueError("the rank parameter m must be non-negative")
        if source.depth > m:
            raise ValueError(f"source depth {source.depth} exceeds the rank parameter m={m}")
        if weight_label is None:
            weight_label = source.weight
        elif not source.is_zero and weight_label != source.weight:
            raise ValueError(
                f"weight label {weight_label} contradicts the source weight {source.weight}"
            )
        self.source = source
        self.m = m
        self.weight_label = weight_label

    @property
    def weight(self):
        """The weight of the vector-valued transformation law: k - m."""
        return self.weight_label - self.m

    @property
    def depth(self):
        return self.source.depth

    def __eq__(self, other):
        return (
            isinstance(other, VectorValuedForm)
            and self.m == other.m
            and self.weight_label == other.weight_label
            and self.source == other.source
        )

    def __hash__(self):
        return hash((self.m, self.weight_label, self.source))

    def __mul__(self, other):
        if not isinstance(other, VectorValuedForm):
            return NotImplemented
        return vv_product(self, other)

    def evaluate(self, tau, precision=DEFAULT_PRECISION):
        """Component values in the basis e1^(m-i) e2^i.

        Component i is sum_r LAMBDA^r fhat_r(tau) binom(m-r, i) tau^(m-r-i),
        from (tau, 1) = tau*e1 + e2 and (1, 0) = e1.
        """
        tau = complex(tau)
        if not tau.imag > 0:
            raise ValueError(f"tau must lie in the upper half-plane, got Im tau = {tau.imag}")
        evaluations = [
            c.qexpansion(precision).evaluate(tau) for c in self.source.components()
        ]
        values = []
        error = 0.0
        for i in range(self.m + 1):
            component = 0j
            lam_power = 1 + 0j
            for r, ev in enumerate(evaluations):
                binom = comb(self.m - r, i) if self.m - r >= i else 0
                if binom:
                    weight_factor = lam_power * binom * tau ** (self.m - r - i)
                    component += weight_factor * ev.value
                    error += abs(weight_factor) * ev.truncation_error
                lam_power *= LAMBDA
            values.append(component)
        return VectorEvaluation(tuple(values), error)

    def __str__(self):
        return f"VV(m={self.m}, k={self.weight_label}, source={self.source})"

    __repr__ = __str__


def from_quasimodular(form, m, weight_label=None):
    """Wrap a quasi-modular form of depth <= m as a rank-(m+1) object."""
    return VectorValuedForm(form, m, weight_label)


def to_quasimodular(form):
    """The coefficient of (tau, 1)^m: the quasi-modular source."""
    return form.source


def eval_standard(form, tau, precision=DEFAULT_PRECISION):
    """Component values of ``form`` at tau (see VectorValuedForm.evaluate)."""
    return form.evaluate(tau, precision)


def holwt_component(form, s, precision=DEFAULT_PRECISION):
    """The weight-(k-2s) almost holomorphic component of the expansion in
    the basis (tau,1)^(m-s) (conj tau, 1)^s; zero beyond the depth."""
    if not 0 <= s <= form.m:
        raise ValueError(f"component index {s} outside 0..{form.m}")
    return completion(form.source.reduced_component(s), precision)


def embed_i(form):
    """Multiplication by (tau, 1): same source, rank parameter m + 1."""
    return VectorValuedForm(form.source, form.m + 1, form.weight_label)


def image_test(form):
    """Whether the form is in the image of the rank-raising embedding,
    i.e. the top holomorphic-weight component vanishes."""
    if form.m == 0:
        raise ValueError("the image test needs m >= 1")
    return form.source.depth <= form.m - 1


def w_decompose(form):
    """Coefficients (g_0, ..., g_m) of the source as a polynomial in E2.

    Each g_t is modular of weight k - 2t; in the basis built from the
    weight-one vector w these are exactly the expansion coefficients.
    """
    return [form.source.e2_coefficient(t) for t in range(form.m + 1)]


def w_compose(parts, m=None, weight_label=None):
    """Inverse of ``w_decompose``: assemble sum_t g_t E2^t at rank m."""
    parts = list(parts)
    if m is None:
        m = len(parts) - 1
    if len(parts) != m + 1:
        raise ValueError(f"need m + 1 = {m + 1} parts, got {len(parts)}")
    k = weight_label
    source = QuasiModularForm(0, {})
    for t, part in enumerate(parts):
        if part.depth > 0:
            raise ValueError(f"part {t} has depth {part.depth}; w-basis parts must be modular")
        if part.is_zero:
            continue
        if k is None:
            k = part.weight + 2 * t
        elif part.weight != k - 2 * t:
            raise ValueError(f"part {t} has weight {part.weight}, expected {k - 2 * t}")
        source = source + part * E2 ** t
    return VectorValuedForm(source, m, k if k is not None else 0)


def iota_lift(modular_form, p, m):
    """Lift of a weight-(k-2p) modular form to filtration degree p at rank m
    (source g * E2^p)."""
    if p > m:
        raise ValueError(f"filtration degree p={p} exceeds the rank parameter m={m}")
    if modular_form.depth > 0:
        raise ValueError("iota_lift needs a modular (depth-0) input")
    return VectorValuedForm(modular_form * E2 ** p, m)


def vv_product(left, right):
    """Product in the direct limit: sources multiply, ranks add."""
    return VectorValuedForm(
        left.source * right.source,
        left.m + right.m,
        left.weight_label + right.weight_label,
    )


def filtration_degree(form):
    """Largest index with a nonvanishing component: the source depth."""
    return form.source.depth


def dim_vv(weight_label, m):
    """Dimension of the holomorphic forms of rank m and weight k - m:
    the sum of the scalar dimensions in weights k, k-2, ..., k-2m."""
    if weight_label < 0 or weight_label % 2:
        raise ValueError(f"weight label must be a non-negative even integer, got {weight_label}")
    if m < 0:
        raise ValueError("the rank parameter m must be non-negative")
    return sum(
        dim_modular(weight_label - 2 * t)
        for t in range(m + 1)
        if weight_label - 2 * t >= 0
    )


def basis_vv(weight_label, m):
    """The w-basis forms: lifts of the monomial bases in each filtration slot."""
    basis = []
    for t in range(m + 1):
        w = weight_label - 2 * t
        if w < 0:
            continue
        for (a, b) in monomial_basis(w):
            basis.append(iota_lift(E4 ** a * E6 ** b, t, m))
    return basis


def certify_dim_vv(weight_label, m, precision=16):
    """Exact rank of the stacked component q-expansions of the w-basis.

    Equality with ``dim_vv`` certifies the dimension formula at the given
    expansion precision.
    """
    rows = []
    for form in basis_vv(weight_label, m):
        row = []
        for r in range(m + 1):
            row.extend(form.source.reduced_component(r).qexpansion(precision).coeffs)
        rows.append(row)
    return linalg.rank(rows)
