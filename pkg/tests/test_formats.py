"""formats: document parsing, canonical serialization, isogeny ingestion."""

from fractions import Fraction

import pytest

from conftest import DATA_DIR
from weilmot import (
    ParseError,
    ingest_isogeny_file,
    ingest_isogeny_lines,
    parse_document,
    parse_isogeny_record,
    record_to_document,
    serialize_document,
    serialize_isogeny_record,
)
from weilmot.formats import document_of_zeta
from weilmot.poly import poly


def test_parse_document_basic():
    doc = parse_document(
        '{"q": 2, "p": 2, "n": 1, "l_polynomials": [[1, -1], [1, -1, 2], [1, -2]]}'
    )
    assert doc.base_q == 2 and doc.dim_n == 1
    assert doc.l_polynomials[1] == poly((1, -1, 2))
    z = doc.to_zeta()
    assert z.base.p == 2 and z.dim_n == 1


def test_parse_document_rational_coefficients():
    doc = parse_document(
        '{"q": 2, "p": 2, "n": 0, "l_polynomials": [[1, ["-1", "2"]]]}'
    )
    assert doc.l_polynomials[0].coeff(1) == Fraction(-1, 2)


def test_parse_document_errors():
    with pytest.raises(ParseError):
        parse_document("")
    with pytest.raises(ParseError) as exc:
        parse_document("{not json")
    assert exc.value.line == 1
    with pytest.raises(ParseError):
        parse_document('{"q": 2, "p": 2}')
    with pytest.raises(ParseError):
        parse_document('{"q": 2, "p": 2, "n": 1, "l_polynomials": [[1, 0.5]]}')


def test_document_roundtrip_bytes():
    text = serialize_document(parse_document(
        '{"q": 3, "p": 3, "n": 1, "l_polynomials": [[1, -1], [1, 0, 3], [1, -3]]}'
    ))
    assert serialize_document(parse_document(text)) == text


def test_isogeny_record_roundtrip():
    line = '{"label": "1.2.a1", "q": 2, "g": 1, "coeffs": [1, -1, 2]}'
    rec = parse_isogeny_record(line)
    assert serialize_isogeny_record(rec) == line
    doc = record_to_document(rec)
    assert doc.dim_n == 1 and doc.l_polynomials[1] == poly((1, -1, 2))
    assert doc.l_polynomials[2] == poly((1, -2))


def test_isogeny_record_validation():
    with pytest.raises(ParseError):
        parse_isogeny_record('{"label": "x", "q": 2, "g": 1, "coeffs": [1, -1]}')
    with pytest.raises(ParseError):
        parse_isogeny_record('{"label": "x", "q": 2, "g": 1, "coeffs": [2, -1, 2]}')
    with pytest.raises(ParseError):
        parse_isogeny_record('{"q": 2, "g": 1, "coeffs": [1, -1, 2]}')


def test_ingest_mixed_policy():
    lines = [
        '{"label": "good1", "q": 2, "g": 1, "coeffs": [1, -1, 2]}',
        "garbage",
        '{"label": "good2", "q": 3, "g": 1, "coeffs": [1, 0, 3]}',
    ]
    docs, diags = ingest_isogeny_lines(lines)
    assert [d.label for d in docs] == ["good1", "good2"]
    assert len(diags) == 1 and diags[0].startswith("line 2")


def test_ingest_corpus_files():
    docs, diags = ingest_isogeny_file(str(DATA_DIR / "isogeny_corpus_g1.jsonl"))
    assert len(docs) >= 100 and not diags
    docs2, diags2 = ingest_isogeny_file(str(DATA_DIR / "isogeny_sample_bad.jsonl"))
    assert len(docs2) == 3 and len(diags2) == 3


def test_mixed_corpus_processes_end_to_end():
    # Products and simple abelian surfaces alike run the whole pipeline:
    # validation, curve-style A(X), reciprocity, and Honda-Tate dimensions.
    from weilmot import (
        brauer_block,
        compute_A,
        honda_tate_dimension,
        motive_of,
        rank_from_algebra,
        validate_zeta,
    )

    docs, diags = ingest_isogeny_file(str(DATA_DIR / "isogeny_sample_mixed.jsonl"))
    assert not diags and len(docs) >= 15
    simple_quartics = 0
    for doc in docs:
        z = doc.to_zeta()
        assert validate_zeta(z).passed, doc.label
        alg = compute_A(z)
        assert rank_from_algebra(alg) == motive_of(z).part(1).dimension, doc.label
        for orbit, _ in motive_of(z).part(1).parts:
            block = brauer_block(orbit, n_odd=True)
            assert block.invariant_sum.denominator == 1, doc.label
            g = honda_tate_dimension(orbit)
            if orbit.degree == 4:
                assert g == 2, doc.label
                simple_quartics += 1
            else:
                assert g == 1, doc.label
    assert simple_quartics >= 5


def test_corpus_files_are_canonical():
    # serialize(parse(line)) must be byte-identical across the corpus.
    for name in ("isogeny_corpus_g1.jsonl", "isogeny_sample_mixed.jsonl"):
        text = (DATA_DIR / name).read_text()
        for line in text.splitlines():
            assert serialize_isogeny_record(parse_isogeny_record(line)) == line


def test_document_of_zeta_roundtrip(varieties):
    for name, z in varieties:
        doc = document_of_zeta(z, label=name)
        text = serialize_document(doc)
        again = parse_document(text)
        assert again.to_zeta().l_polys == z.l_polys
        assert serialize_document(again) == text


def test_ingest_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        ingest_isogeny_file(str(tmp_path / "missing.jsonl"))
