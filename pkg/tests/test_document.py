import json

import pytest

from specgraph import InputError, ParseError
from specgraph.document import dump_document, load_document, parse_document, resolve

CONE_DOC = {"variables": ["x", "y", "z", "w"], "J": None, "I": "(x*z, x*w, y*z, y*w)"}
FACET_DOC = {"variables": ["a", "b", "c", "d"], "facets": [["a", "b", "c"], ["b", "c", "d"]]}


def test_ideal_document():
    doc = parse_document(json.dumps(CONE_DOC))
    r = resolve(doc)
    assert str(r.I) == "(x*z, x*w, y*z, y*w)" and r.J is None and r.complex is None


def test_facet_document_goes_through_stanley_reisner():
    r = resolve(parse_document(json.dumps(FACET_DOC)))
    assert str(r.I) == "(a*d)" and r.complex is not None


def test_J_optional():
    doc = parse_document('{"variables": ["x"], "I": "(x)"}')
    assert doc.J is None


@pytest.mark.parametrize(
    "data",
    [
        {"variables": ["x"], "I": 5},
        {"variables": ["x"]},
        {"variables": "x", "I": "(x)"},
        {"variables": ["x"], "I": "(x)", "facets": [["x"]]},
        {"variables": ["x"], "I": "(x)", "extra": 1},
        {"variables": ["x"], "I": "(x)", "J": 3},
        {"variables": ["x"], "facets": []},
        {"variables": ["x"], "facets": [[1]]},
        [1, 2],
    ],
)
def test_schema_violations(data):
    with pytest.raises(InputError):
        parse_document(json.dumps(data))


def test_malformed_json():
    with pytest.raises(InputError):
        parse_document("{not json")


def test_bad_expression_is_parse_error():
    with pytest.raises(ParseError):
        resolve(parse_document('{"variables": ["x"], "I": "(x"}'))


def test_round_trip_is_byte_stable(tmp_path):
    for data in (CONE_DOC, FACET_DOC):
        text = dump_document(parse_document(json.dumps(data)))
        assert dump_document(parse_document(text)) == text
        path = tmp_path / "doc.json"
        path.write_text(text)
        assert load_document(path) == parse_document(text)


def test_missing_file():
    with pytest.raises(InputError):
        load_document("/nonexistent/doc.json")
