"""Floating-point verification of the transformation laws.

The checks compare both sides of the scalar, quasi-modular, and
vector-valued functional equations on a fixed sample of group elements and
base points, and report absolute and relative residuals per sample.  All
sample points keep Im tau >= 0.3 and all images keep Im(gamma tau) >= 0.25,
which at 64 coefficients pushes truncation far below the 1e-8 tolerance.
"""

import json
import math
from dataclasses import dataclass

from .eisenstein import eisenstein_series
from .qseries import DEFAULT_PRECISION, Evaluation, LAMBDA
from .vectorvalued import GroupElement, S, T, sym_matrix

MIN_IM_TAU = 0.3
MIN_IM_IMAGE = 0.25
DEFAULT_TOLERANCE = 1e-8


@dataclass(frozen=True)
class SamplePlan:
    """Sample points, group elements, tolerance, and expansion precision."""

    taus: tuple
    gammas: tuple
    tolerance: float = DEFAULT_TOLERANCE
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if not self.taus or not self.gammas:
            raise ValueError("a sample plan needs at least one tau and one gamma")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.precision < 1:
            raise ValueError("precision must be positive")
        for tau in self.taus:
            if complex(tau).imag < MIN_IM_TAU:
                raise ValueError(f"sample point {tau} has Im tau < {MIN_IM_TAU}")
        for gamma in self.gammas:
            for tau in self.taus:
                image = gamma.act(complex(tau))
                if image.imag < MIN_IM_IMAGE:
                    raise ValueError(
                        f"image {gamma}*{tau} has Im = {image.imag:.4f} < {MIN_IM_IMAGE}"
                    )


def default_plan(tolerance=DEFAULT_TOLERANCE, precision=DEFAULT_PRECISION):
    """The standard plan: three base points and six group elements.

    The six elements are T, S, S*T, T*S^-1, [[2,1],[1,1]] and the lower
    unipotent [[1,0],[-1,1]]; every det-one matrix with |c| >= 2 would push
    some image below Im = 0.25 at these base points, so all elements here
    have c in {0, 1, -1}.
    """
    taus = (complex(0.3, 1.1), complex(-0.4, 0.9), complex(0.1, 1.7))
    gammas = (
        T,
        S,
        S * T,
        T * S.inverse(),
        GroupElement(2, 1, 1, 1),
        GroupElement(1, 0, -1, 1),
    )
    return SamplePlan(taus=taus, gammas=gammas, tolerance=tolerance, precision=precision)


@dataclass
class Residual:
    """Residual of one functional-equation sample."""

    form: str
    gamma: GroupElement
    tau: complex
    absolute: float
    relative: float
    truncation_error: float

    def to_json(self):
        def sig12(x):
            return float(f"{x:.12g}")

        return {
            "form": self.form,
            "gamma": [self.gamma.a, self.gamma.b, self.gamma.c, self.gamma.d],
            "tau": [sig12(self.tau.real), sig12(self.tau.imag)],
            "absolute": sig12(self.absolute),
            "relative": sig12(self.relative),
            "truncation_error": sig12(self.truncation_error),
        }

    def json_line(self):
        return json.dumps(self.to_json(), sort_keys=True)


def max_relative(residuals):
    return max((r.relative for r in residuals), default=0.0)


def all_within(residuals, tolerance):
    return all(r.relative < tolerance for r in residuals)


_lambda_verified = False


def _ensure_lambda():
    """One-time self-test of the cocycle constant via the E2 law."""
    global _lambda_verified
    if _lambda_verified:
        return
    e2 = eisenstein_series(2, DEFAULT_PRECISION)
    tau = complex(0.3, 1.1)
    j = S.j(tau)
    lhs = e2.evaluate(S.act(tau)).value
    rhs = j ** 2 * e2.evaluate(tau).value + LAMBDA * S.jprime * j
    if abs(lhs - rhs) / max(1.0, abs(rhs)) > 1e-8:
        raise RuntimeError("cocycle constant self-test failed; LAMBDA is miscalibrated")
    _lambda_verified = True


def _call_evaluator(evaluator, tau):
    result = evaluator(tau)
    if isinstance(result, Evaluation):
        return result
    return Evaluation(complex(result), 0.0)


def check_scalar(evaluator, weight, plan, label="scalar form"):
    """Residuals of f(gamma tau) = j^weight f(tau) over the plan."""
    _ensure_lambda()
    out = []
    for gamma in plan.gammas:
        for tau in plan.taus:
            lhs = _call_evaluator(evaluator, gamma.act(tau))
            base = _call_evaluator(evaluator, tau)
            j_pow = gamma.j(tau) ** weight
            rhs = j_pow * base.value
            absolute = abs(lhs.value - rhs)
            trunc = lhs.truncation_error + abs(j_pow) * base.truncation_error
            out.append(
                Residual(
                    form=label,
                    gamma=gamma,
                    tau=tau,
                    absolute=absolute,
                    relative=absolute / max(1.0, abs(rhs)),
                    truncation_error=trunc,
                )
            )
    return out


def check_quasimodular(form, plan, label=None):
    """Residuals of the depth-d law
    f(gamma tau) = sum_r j^(k-r) c^r LAMBDA^r fhat_r(tau)."""
    _ensure_lambda()
    if label is None:
        label = str(form)
    k = form.weight
    expansions = [c.qexpansion(plan.precision) for c in form.components()]
    series = form.qexpansion(plan.precision)
    out = []
    for gamma in plan.gammas:
        for tau in plan.taus:
            lhs = series.evaluate(gamma.act(tau))
            j = gamma.j(tau)
            rhs = 0j
            trunc = lhs.truncation_error
            factor = 1 + 0j
            for r, expansion in enumerate(expansions):
                scale = j ** (k - r) * factor
                ev = expansion.evaluate(tau)
                rhs += scale * ev.value
                trunc += abs(scale) * ev.truncation_error
                factor *= gamma.jprime * LAMBDA
            absolute = abs(lhs.value - rhs)
            out.append(
                Residual(
                    form=label,
                    gamma=gamma,
                    tau=tau,
                    absolute=absolute,
                    relative=absolute / max(1.0, abs(rhs)),
                    truncation_error=trunc,
                )
            )
    return out


def check_vv(form, plan, label=None):
    """Residuals of F(gamma tau) = j^(k-m) Sym^m(gamma) F(tau) in the
    Euclidean norm."""
    _ensure_lambda()
    if label is None:
        label = str(form)
    k, m = form.weight_label, form.m
    out = []
    for gamma in plan.gammas:
        matrix = sym_matrix(gamma, m)
        for tau in plan.taus:
            lhs = form.evaluate(gamma.act(tau), plan.precision)
            base = form.evaluate(tau, plan.precision)
            j_pow = gamma.j(tau) ** (k - m)
            rhs = [
                j_pow * sum(matrix[i][l] * base.values[l] for l in range(m + 1))
                for i in range(m + 1)
            ]
            absolute = math.sqrt(
                sum(abs(x - y) ** 2 for x, y in zip(lhs.values, rhs))
            )
            rhs_norm = math.sqrt(sum(abs(x) ** 2 for x in rhs))
            matrix_scale = max(sum(abs(e) for e in row) for row in matrix)
            trunc = lhs.truncation_error + abs(j_pow) * matrix_scale * base.truncation_error
            out.append(
                Residual(
                    form=label,
                    gamma=gamma,
                    tau=tau,
                    absolute=absolute,
                    relative=absolute / max(1.0, rhs_norm),
                    truncation_error=trunc,
                )
            )
    return out
