"""JSON documents for the three form kinds.

Documents are tagged with a ``format`` field (quasimodular / almostholo /
vectorvalued) and a format ``version``.  Rationals are carried as decimal
strings so round trips are bit-exact; serialization is canonical (sorted
keys, sorted terms, compact separators).
"""

import json
from fractions import Fraction

from .almostholo import AlmostHolomorphicForm
from .qseries import QSeries
from .quasimodular import QuasiModularForm
from .vectorvalued import VectorValuedForm

FORMAT_VERSION = 1


class FormDocumentError(ValueError):
    """A document does not match the expected schema."""


def _fraction_string(value):
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _parse_fraction(text, where):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormDocumentError(f"bad rational {text!r} in {where}: {exc}") from None


def to_document(form):
    """Build the JSON-ready dict for a form object."""
    if isinstance(form, QuasiModularForm):
        terms = [
            {"e2": a, "e4": b, "e6": c, "num": str(v.numerator), "den": str(v.denominator)}
            for (a, b, c), v in sorted(form.monomials.items())
        ]
        return {
            "format": "quasimodular",
            "version": FORMAT_VERSION,
            "weight": form.weight,
            "terms": terms,
        }
    if isinstance(form, AlmostHolomorphicForm):
        return {
            "format": "almostholo",
            "version": FORMAT_VERSION,
            "weight": form.weight,
            "ycoeffs": [[_fraction_string(c) for c in series.coeffs] for series in form.coeffs],
        }
    if isinstance(form, VectorValuedForm):
        return {
            "format": "vectorvalued",
            "version": FORMAT_VERSION,
            "m": form.m,
            "weight_label_k": form.weight_label,
            "source": to_document(form.source),
        }
    raise TypeError(f"cannot serialize {type(form).__name__}")


def _require(doc, key, where):
    if key not in doc:
        raise FormDocumentError(f"missing field {key!r} in {where} document")
    return doc[key]


def from_document(doc):
    """Rebuild a form object from a parsed JSON document."""
    if not isinstance(doc, dict):
        raise FormDocumentError(f"expected a JSON object, got {type(doc).__name__}")
    kind = _require(doc, "format", "form")
    version = _require(doc, "version", kind)
    if version != FORMAT_VERSION:
        raise FormDocumentError(f"unsupported format version {version}")
    if kind == "quasimodular":
        weight = _require(doc, "weight", kind)
        monomials = {}
        for term in _require(doc, "terms", kind):
            key = (
                _require(term, "e2", "term"),
                _require(term, "e4", "term"),
                _require(term, "e6", "term"),
            )
            num = _parse_fraction(_require(term, "num", "term"), "term")
            den = _parse_fraction(_require(term, "den", "term"), "term")
            if den == 0:
                raise FormDocumentError("zero denominator in term")
            monomials[key] = monomials.get(key, Fraction(0)) + num / den
        try:
            return QuasiModularForm(weight, monomials)
        except ValueError as exc:
            raise FormDocumentError(str(exc)) from None
    if kind == "almostholo":
        weight = _require(doc, "weight", kind)
        rows = _require(doc, "ycoeffs", kind)
        if not rows:
            raise FormDocumentError("almostholo document needs at least one coefficient row")
        coeffs = []
        for row in rows:
            if not row:
                raise FormDocumentError("empty coefficient row")
            coeffs.append(QSeries([_parse_fraction(x, "ycoeffs") for x in row]))
        try:
            return AlmostHolomorphicForm(weight, coeffs)
        except ValueError as exc:
            raise FormDocumentError(str(exc)) from None
    if kind == "vectorvalued":
        m = _require(doc, "m", kind)
        weight_label = _require(doc, "weight_label_k", kind)
        source = from_document(_require(doc, "source", kind))
        if not isinstance(source, QuasiModularForm):
            raise FormDocumentError("vectorvalued source must be a quasimodular document")
        try:
            return VectorValuedForm(source, m, weight_label)
        except ValueError as exc:
            raise FormDocumentError(str(exc)) from None
    raise FormDocumentError(f"unknown format {kind!r}")


def dumps(form):
    """Canonical one-line JSON text for a form object."""
    return json.dumps(to_document(form), sort_keys=True, separators=(",", ":"))


def loads(text):
    """Parse JSON text into a form object."""
    return from_document(json.loads(text))
