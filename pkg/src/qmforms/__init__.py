"""Exact arithmetic for quasi-modular forms, their almost holomorphic
completions, and the associated vector-valued modular forms with
symmetric-power representations, for the full modular group; plus a
floating-point harness that verifies every transformation law."""

from .qseries import (
    DEFAULT_PRECISION,
    Evaluation,
    LAMBDA,
    QSeries,
    Rational,
    format_series,
    yhat,
)
from .eisenstein import (
    GeneratorTable,
    delta_series,
    dim_cusp,
    dim_modular,
    eisenstein_series,
    generator,
    monomial_basis,
)
from .quasimodular import (
    DELTA,
    E2,
    E4,
    E6,
    NoMatchError,
    ONE,
    QuasiModularForm,
    UnderdeterminedError,
    derivative_lift,
    monomial,
    recognize,
    weight_op,
)
from .almostholo import (
    AlmostHolomorphicForm,
    NotHolomorphicError,
    completion,
    component_forms,
    constant_term,
    lower_op,
    raise_op,
    reconstruct,
)
from .vectorvalued import (
    GroupElement,
    IDENTITY,
    S,
    T,
    VectorEvaluation,
    VectorValuedForm,
    basis_vv,
    certify_dim_vv,
    dim_vv,
    embed_i,
    eval_standard,
    filtration_degree,
    from_quasimodular,
    holwt_component,
    image_test,
    iota_lift,
    sym_matrix,
    to_quasimodular,
    vv_product,
    w_compose,
    w_decompose,
)
from .numverify import (
    DEFAULT_TOLERANCE,
    Residual,
    SamplePlan,
    all_within,
    check_quasimodular,
    check_scalar,
    check_vv,
    default_plan,
    max_relative,
)
from .serialize import FormDocumentError, dumps, from_document, loads, to_document
from .exprparse import ExpressionError, parse_form

__version__ = "0.1.0"

__all__ = [
    "AlmostHolomorphicForm",
    "DEFAULT_PRECISION",
    "DEFAULT_TOLERANCE",
    "DELTA",
    "E2",
    "E4",
    "E6",
    "Evaluation",
    "ExpressionError",
    "FormDocumentError",
    "GeneratorTable",
    "GroupElement",
    "IDENTITY",
    "LAMBDA",
    "NoMatchError",
    "NotHolomorphicError",
    "ONE",
    "QSeries",
    "QuasiModularForm",
    "Rational",
    "Residual",
    "S",
    "SamplePlan",
    "T",
    "UnderdeterminedError",
    "VectorEvaluation",
    "VectorValuedForm",
    "all_within",
    "basis_vv",
    "certify_dim_vv",
    "check_quasimodular",
    "check_scalar",
    "check_vv",
    "completion",
    "component_forms",
    "constant_term",
    "default_plan",
    "delta_series",
    "derivative_lift",
    "dim_cusp",
    "dim_modular",
    "dim_vv",
    "dumps",
    "eisenstein_series",
    "embed_i",
    "eval_standard",
    "filtration_degree",
    "format_series",
    "from_document",
    "from_quasimodular",
    "generator",
    "holwt_component",
    "image_test",
    "iota_lift",
    "loads",
    "lower_op",
    "max_relative",
    "monomial",
    "monomial_basis",
    "parse_form",
    "raise_op",
    "recognize",
    "reconstruct",
    "sym_matrix",
    "to_document",
    "to_quasimodular",
    "vv_product",
    "w_compose",
    "w_decompose",
    "weight_op",
    "yhat",
]
