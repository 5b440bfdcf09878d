"""Command-line front end: expand, convert, verify, dims.

Forms are given inline as JSON documents, as paths to JSON files, or as
expressions like ``E2^2*E4 + 3*E6^2``.  Exit codes: 0 success, 1
verification failure, 2 usage or parse error.
"""

import argparse
import json
import os
import sys

from .almostholo import AlmostHolomorphicForm, constant_term
from .exprparse import ExpressionError, parse_form
from .numverify import (
    DEFAULT_TOLERANCE,
    SamplePlan,
    all_within,
    check_quasimodular,
    check_scalar,
    check_vv,
    default_plan,
    max_relative,
)
from .qseries import DEFAULT_PRECISION
from .quasimodular import QuasiModularForm, recognize
from .serialize import FormDocumentError, from_document, to_document
from .vectorvalued import (
    GroupElement,
    VectorValuedForm,
    certify_dim_vv,
    dim_vv,
    from_quasimodular,
    w_compose,
    w_decompose,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _canonical(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _load_input(text):
    """A form object (or list of them) from JSON, a file path, or an expression."""
    stripped = text.strip()
    if not stripped:
        raise UsageError("empty form argument")
    if stripped[0] in "{[":
        payload = stripped
    elif os.path.exists(stripped):
        with open(stripped, encoding="utf-8") as handle:
            payload = handle.read()
    else:
        try:
            return parse_form(text)
        except ExpressionError as exc:
            raise UsageError(f"cannot parse expression: {exc}") from None
    try:
        doc = json.loads(payload)
    except json.JSONDecodeError as exc:
        raise UsageError(f"JSON parse error at position {exc.pos}: {exc.msg}") from None
    try:
        if isinstance(doc, list):
            return [from_document(entry) for entry in doc]
        return from_document(doc)
    except FormDocumentError as exc:
        raise UsageError(str(exc)) from None


def _single_form(text):
    form = _load_input(text)
    if isinstance(form, list):
        raise UsageError("expected a single form, got a JSON array")
    return form


def _fraction_str(value):
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _check_precision(precision):
    if precision < 1:
        raise UsageError("--precision must be a positive integer")
    return precision


def cmd_expand(args):
    form = _single_form(args.form)
    n = _check_precision(args.precision)
    if isinstance(form, QuasiModularForm):
        series = form.qexpansion(n)
        if args.json:
            print(_canonical({
                "weight": form.weight,
                "precision": n,
                "coeffs": [_fraction_str(c) for c in series.coeffs],
            }))
        else:
            print(series)
    elif isinstance(form, AlmostHolomorphicForm):
        coeffs = [series.truncate(n) for series in form.coeffs]
        if args.json:
            print(_canonical({
                "weight": form.weight,
                "precision": coeffs[0].precision,
                "ycoeffs": [[_fraction_str(c) for c in s.coeffs] for s in coeffs],
            }))
        else:
            for r, series in enumerate(coeffs):
                print(f"Y^{r}: {series}")
    elif isinstance(form, VectorValuedForm):
        components = [form.source.reduced_component(r).qexpansion(n) for r in range(form.m + 1)]
        if args.json:
            print(_canonical({
                "m": form.m,
                "weight_label_k": form.weight_label,
                "precision": n,
                "components": [[_fraction_str(c) for c in s.coeffs] for s in components],
            }))
        else:
            for r, series in enumerate(components):
                print(f"component {r}: {series}")
    else:
        raise UsageError(f"cannot expand {type(form).__name__}")
    return EXIT_OK


def cmd_convert(args):
    form = _load_input(args.form)
    target = args.to
    _check_precision(args.precision)
    if target == "components":
        if not isinstance(form, QuasiModularForm):
            raise UsageError("--to components needs a quasimodular form")
        print(_canonical([to_document(c) for c in form.components()]))
    elif target == "completion":
        if not isinstance(form, QuasiModularForm):
            raise UsageError("--to completion needs a quasimodular form")
        from .almostholo import completion
        print(_canonical(to_document(completion(form, args.precision))))
    elif target == "vvmf":
        if isinstance(form, list):
            if not all(isinstance(p, QuasiModularForm) for p in form):
                raise UsageError("w-basis parts must be quasimodular documents")
            rank = args.rank if args.rank is not None else len(form) - 1
            try:
                vv = w_compose(form, m=rank, weight_label=args.weight)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        elif isinstance(form, QuasiModularForm):
            rank = args.rank if args.rank is not None else form.depth
            try:
                vv = from_quasimodular(form, rank)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        else:
            raise UsageError("--to vvmf needs a quasimodular form or an array of w-basis parts")
        print(_canonical(to_document(vv)))
    elif target == "wbasis":
        if not isinstance(form, VectorValuedForm):
            raise UsageError("--to wbasis needs a vectorvalued form")
        print(_canonical([to_document(p) for p in w_decompose(form)]))
    elif target == "quasimodular":
        if isinstance(form, VectorValuedForm):
            result = form.source
        elif isinstance(form, AlmostHolomorphicForm):
            try:
                result = recognize(constant_term(form), form.weight, form.degree)
            except ValueError as exc:
                raise UsageError(f"cannot recognize the constant term: {exc}") from None
        elif isinstance(form, QuasiModularForm):
            result = form
        else:
            raise UsageError("--to quasimodular needs a form document")
        print(_canonical(to_document(result)))
    else:
        raise UsageError(f"unknown conversion target {target!r}")
    return EXIT_OK


def _parse_tau(text):
    try:
        value = complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse sample point {text!r}; expected x+yi") from None
    if not value.imag > 0:
        raise UsageError(f"sample point {text!r} must have positive imaginary part")
    return value


def _parse_gamma(text):
    pieces = text.split(",")
    if len(pieces) != 4:
        raise UsageError(f"cannot parse group element {text!r}; expected a,b,c,d")
    try:
        a, b, c, d = (int(p) for p in pieces)
    except ValueError:
        raise UsageError(f"group element entries in {text!r} must be integers") from None
    try:
        return GroupElement(a, b, c, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args):
    form = _single_form(args.form)
    _check_precision(args.precision)
    try:
        base = default_plan(tolerance=args.tolerance, precision=args.precision)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    taus = tuple(_parse_tau(t) for t in args.tau) if args.tau else base.taus
    gammas = tuple(_parse_gamma(g) for g in args.gamma) if args.gamma else base.gammas
    try:
        plan = SamplePlan(
            taus=taus, gammas=gammas, tolerance=args.tolerance, precision=args.precision
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    if args.as_weight is not None:
        if isinstance(form, QuasiModularForm):
            series = form.qexpansion(plan.precision)
            evaluator, label = series.evaluate, f"{form} (as weight {args.as_weight})"
        elif isinstance(form, AlmostHolomorphicForm):
            evaluator, label = form.evaluate, f"almostholo (as weight {args.as_weight})"
        else:
            raise UsageError("--as-weight applies to scalar forms only")
        residuals = check_scalar(evaluator, args.as_weight, plan, label=label)
    elif isinstance(form, QuasiModularForm):
        residuals = check_quasimodular(form, plan)
    elif isinstance(form, AlmostHolomorphicForm):
        residuals = check_scalar(form.evaluate, form.weight, plan, label="almostholo")
    elif isinstance(form, VectorValuedForm):
        residuals = check_vv(form, plan)
    else:
        raise UsageError(f"cannot verify {type(form).__name__}")

    for residual in residuals:
        print(residual.json_line())
    worst = max_relative(residuals)
    ok = all_within(residuals, plan.tolerance)
    print(
        f"max relative residual {worst:.12g} against tolerance {plan.tolerance:.12g}: "
        f"{'OK' if ok else 'FAILED'}",
        file=sys.stderr,
    )
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_dims(args):
    if args.kmax < 0 or args.mmax < 0:
        raise UsageError("--kmax and --mmax must be non-negative")
    precision = max(12, args.kmax // 12 + 4)
    weights = range(0, args.kmax + 1, 2)
    header = ["k\\m"] + [str(m) for m in range(args.mmax + 1)]
    rows = [header]
    for k in weights:
        row = [str(k)]
        for m in range(args.mmax + 1):
            expected = dim_vv(k, m)
            rank = certify_dim_vv(k, m, precision)
            if rank != expected:
                raise RuntimeError(
                    f"dimension cross-check failed at k={k}, m={m}: "
                    f"formula {expected}, basis rank {rank}"
                )
            row.append(str(expected))
        rows.append(row)
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    for row in rows:
        print("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qmforms",
        description="Exact quasi-modular, almost holomorphic, and vector-valued "
        "modular forms for the full modular group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="print a q-expansion")
    p_expand.add_argument("form")
    p_expand.add_argument("--precision", type=int, default=8)
    p_expand.add_argument("--json", action="store_true")
    p_expand.set_defaults(func=cmd_expand)

    p_convert = sub.add_parser("convert", help="convert between form kinds")
    p_convert.add_argument("form")
    p_convert.add_argument(
        "--to",
        required=True,
        choices=["components", "completion", "vvmf", "wbasis", "quasimodular"],
    )
    p_convert.add_argument("--rank", type=int, default=None)
    p_convert.add_argument("--weight", type=int, default=None)
    p_convert.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p_convert.set_defaults(func=cmd_convert)

    p_verify = sub.add_parser("verify", help="check the functional equation numerically")
    p_verify.add_argument("form")
    p_verify.add_argument("--tau", action="append", metavar="x+yi")
    p_verify.add_argument("--gamma", action="append", metavar="a,b,c,d")
    p_verify.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p_verify.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p_verify.add_argument("--as-weight", dest="as_weight", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_dims = sub.add_parser("dims", help="dimension table with basis cross-check")
    p_dims.add_argument("--kmax", type=int, default=24)
    p_dims.add_argument("--mmax", type=int, default=4)
    p_dims.set_defaults(func=cmd_dims)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
