"""Input documents, canonical serialization, and isogeny-class ingestion.

Two wire formats, both exact (no floating point anywhere):

* zeta document -- a JSON object
      {"q": 4, "p": 2, "n": 1,
       "l_polynomials": [[1, -1], [1, -4, 4], [1, -4]],
       "label": "optional"}
  Coefficients ascending, L-convention (constant term 1); a rational
  coefficient is a two-element array of decimal strings ["num", "den"].

* isogeny record -- one JSON object per line (JSON-lines)
      {"label": "1.2.a", "q": 2, "g": 1, "coeffs": [1, -1, 2]}
  with coeffs the integer L-polynomial of degree 2g.

serialize(parse(x)) is byte-identical on canonical files; the shipped corpus
is canonical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError, RangeError
from .motives import ZetaData
from .poly import RationalPolynomial
from .primes import PrimePower

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class InputDocument:
    """Parsed zeta document; converts to ZetaData on demand."""

    base_q: int
    prime_p: int
    dim_n: int
    l_polynomials: tuple[RationalPolynomial, ...]
    label: str | None = None

    def to_zeta(self) -> ZetaData:
        q = PrimePower.from_q(self.base_q)
        if q.p != self.prime_p:
            raise RangeError(
                f"q = {self.base_q} is a power of {q.p}, not of p = {self.prime_p}"
            )
        return ZetaData(base=q, dim_n=self.dim_n, l_polys=self.l_polynomials)


@dataclass
class Report:
    """Structured command output; the human text is rendered from the payload."""

    command: str
    ok: bool
    exit_code: int
    payload: dict
    human: str
    warnings: list[str] = field(default_factory=list)

    def json_object(self) -> dict:
        obj = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "ok": self.ok,
            "exit_code": self.exit_code,
        }
        if self.warnings:
            obj["warnings"] = list(self.warnings)
        obj.update(self.payload)
        return obj

    def json_text(self) -> str:
        return json.dumps(self.json_object(), indent=2) + "\n"


# ----------------------------------------------------------- coefficients

def decode_coefficient(value) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"coefficient {value!r} is not a number")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        try:
            num, den = int(value[0]), int(value[1])
        except (TypeError, ValueError):
            raise ParseError(f"bad rational coefficient {value!r}") from None
        if den == 0:
            raise ParseError("rational coefficient with denominator 0")
        return Fraction(num, den)
    raise ParseError(f"coefficient {value!r} must be an int or [num, den]")


def encode_coefficient(value: Fraction):
    if value.denominator == 1:
        return int(value)
    return [str(value.numerator), str(value.denominator)]


def encode_fraction_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decode_polynomial(values) -> RationalPolynomial:
    if not isinstance(values, list):
        raise ParseError(f"polynomial must be a coefficient list, got {values!r}")
    return RationalPolynomial(decode_coefficient(v) for v in values)


def encode_polynomial(p: RationalPolynomial) -> list:
    if p.is_zero:
        return [0]
    return [encode_coefficient(c) for c in p.coeffs]


# -------------------------------------------------------------- documents

def parse_json_text(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno
        ) from None


def _require_int(obj: dict, key: str) -> int:
    if key not in obj:
        raise ParseError(f"missing required field {key!r}")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"field {key!r} must be an integer, got {v!r}")
    return v


def document_from_object(obj) -> InputDocument:
    if not isinstance(obj, dict):
        raise ParseError(f"document must be a JSON object, got {type(obj).__name__}")
    q = _require_int(obj, "q")
    p = _require_int(obj, "p")
    n = _require_int(obj, "n")
    raw = obj.get("l_polynomials")
    if not isinstance(raw, list):
        raise ParseError("field 'l_polynomials' must be a list of coefficient lists")
    polys = tuple(decode_polynomial(entry) for entry in raw)
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise ParseError("field 'label' must be a string")
    return InputDocument(
        base_q=q, prime_p=p, dim_n=n, l_polynomials=polys, label=label
    )


def parse_document(text: str) -> InputDocument:
    if not text.strip():
        raise ParseError("empty input", line=1, column=1)
    return document_from_object(parse_json_text(text))


def document_to_object(doc: InputDocument) -> dict:
    obj = {
        "q": doc.base_q,
        "p": doc.prime_p,
        "n": doc.dim_n,
        "l_polynomials": [encode_polynomial(p) for p in doc.l_polynomials],
    }
    if doc.label is not None:
        obj["label"] = doc.label
    return obj


def serialize_document(doc: InputDocument) -> str:
    return json.dumps(document_to_object(doc), indent=2) + "\n"


def document_of_zeta(z: ZetaData, label: str | None = None) -> InputDocument:
    return InputDocument(
        base_q=z.base.q,
        prime_p=z.base.p,
        dim_n=z.dim_n,
        l_polynomials=z.l_polys,
        label=label,
    )


# --------------------------------------------------------- isogeny records

@dataclass(frozen=True)
class IsogenyRecord:
    label: str
    q: int
    g: int
    coeffs: tuple[int, ...]


def parse_isogeny_record(line: str) -> IsogenyRecord:
    obj = parse_json_text(line)
    if not isinstance(obj, dict):
        raise ParseError("record must be a JSON object")
    label = obj.get("label")
    if not isinstance(label, str):
        raise ParseError("field 'label' must be a string")
    q = _require_int(obj, "q")
    g = _require_int(obj, "g")
    raw = obj.get("coeffs")
    if not isinstance(raw, list) or not all(
        isinstance(c, int) and not isinstance(c, bool) for c in raw
    ):
        raise ParseError("field 'coeffs' must be a list of integers")
    if g < 0:
        raise ParseError(f"g = {g} must be >= 0")
    if len(raw) != 2 * g + 1:
        raise ParseError(
            f"coeffs has length {len(raw)}, expected 2g+1 = {2 * g + 1}"
        )
    if raw and raw[0] != 1:
        raise ParseError(f"L-polynomial constant term is {raw[0]}, expected 1")
    if g > 0 and raw[-1] == 0:
        raise ParseError("leading coefficient is 0: degree is not 2g")
    return IsogenyRecord(label=label, q=q, g=g, coeffs=tuple(raw))


def serialize_isogeny_record(rec: IsogenyRecord) -> str:
    obj = {"label": rec.label, "q": rec.q, "g": rec.g, "coeffs": list(rec.coeffs)}
    return json.dumps(obj, separators=(", ", ": "))


def record_to_document(rec: IsogenyRecord) -> InputDocument:
    q = PrimePower.from_q(rec.q)
    l1 = RationalPolynomial(rec.coeffs)
    return InputDocument(
        base_q=q.q,
        prime_p=q.p,
        dim_n=1,
        l_polynomials=(
            RationalPolynomial((1, -1)),
            l1,
            RationalPolynomial((1, -q.q)),
        ),
        label=rec.label,
    )


def ingest_isogeny_lines(lines) -> tuple[list[InputDocument], list[str]]:
    """Parse JSON-lines isogeny records: (documents, per-line diagnostics).

    Malformed lines become diagnostics with their 1-based line number;
    well-formed lines are processed regardless.
    """
    documents: list[InputDocument] = []
    diagnostics: list[str] = []
    for i, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            rec = parse_isogeny_record(line)
            documents.append(record_to_document(rec))
        except (ParseError, RangeError) as exc:
            diagnostics.append(f"line {i}: {exc}")
    return documents, diagnostics


def ingest_isogeny_file(path: str) -> tuple[list[InputDocument], list[str]]:
    """Read a JSON-lines isogeny file; IO errors propagate to the caller."""
    with open(path, "r", encoding="utf-8") as fh:
        return ingest_isogeny_lines(fh.read().splitlines())
