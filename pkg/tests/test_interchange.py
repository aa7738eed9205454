import json
import math
import re

from fractions import Fraction

import pytest

from tricover.constructions import admissible_bound, generate
from tricover.core import Covering, DocumentError, HTriangle, PieceRole, Region, Variant
from tricover.interchange import CoveringDocument, SvgRenderer, document_for, read_document, write_document
from tricover.interchange.documents import parse_rat


F = Fraction


def sample_document(variant=Variant.CS1, n=4, eps=F(1, 5)) -> CoveringDocument:
    return document_for(generate(variant, n, eps), construction=variant.value, n=n, eps=eps)


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("variant", [Variant.CS1, Variant.CS2, Variant.PLUS3])
def test_json_round_trip_is_exact(variant, n):
    document = sample_document(variant, n, admissible_bound(variant, n))
    assert CoveringDocument.from_json(document.to_json()) == document


def test_rationals_are_strings_never_floats():
    data = sample_document().to_dict()
    assert data["schema_version"] == 1
    assert data["metadata"] == {"construction": "cs1", "n": 4, "eps": "1/5", "label": "cs1(n=4, eps=1/5)"}
    assert data["target"] == [{"base_y": "0", "base_x_left": "0", "base_len": "21/5", "apex_x": "21/10", "apex_y": "21/5"}]
    assert data["pieces"][-1]["role"] == "final-pieces"


@pytest.mark.parametrize("text, value", [("3", F(3)), ("-7/4", F(-7, 4)), ("10/20", F(1, 2))])
def test_parse_rat(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("text", ["0.5", 0.5, 1, "1/0", "1 / 2", "", None, "1e3"])
def test_parse_rat_rejects_inexact_text(text):
    with pytest.raises(DocumentError):
        parse_rat(text)


def test_role_defaults_to_plain_piece():
    data = sample_document().to_dict()
    for piece in data["pieces"]:
        del piece["role"]
    covering = CoveringDocument.from_dict(data).covering
    assert set(covering.roles) == {PieceRole.PIECE}


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(schema_version=2),
        lambda d: d.pop("pieces"),
        lambda d: d["target"][0].pop("apex_y"),
        lambda d: d["pieces"][0].update(role="decorative"),
        lambda d: d["pieces"][0].update(base_len="0"),
        lambda d: d.update(target=[]),
        lambda d: d["metadata"].update(n="four"),
    ],
)
def test_malformed_documents_raise_document_error(mutate):
    data = sample_document().to_dict()
    mutate(data)
    with pytest.raises(DocumentError):
        CoveringDocument.from_dict(data)


def test_invalid_json_raises_document_error():
    with pytest.raises(DocumentError):
        CoveringDocument.from_json("{not json")


def test_write_then_read(tmp_path):
    document = sample_document(Variant.PLUS3, 4, F(1, 4))
    path = tmp_path / "plus3.json"
    write_document(document, path)
    assert json.loads(path.read_text())["metadata"]["n"] == 4
    assert read_document(path) == document


def test_svg_has_one_polygon_per_triangle():
    covering = generate(Variant.CS2, 4, F(1, 8))
    svg = SvgRenderer().render(covering)
    assert svg.startswith("<svg")
    assert 'version="1.1"' in svg
    assert svg.count("<polygon") == len(covering.pieces) + len(covering.target.parts)
    assert svg.count('class="final-pieces"') == 3
    assert svg.count('class="target"') == 1
    numbers = [float(x) for x in re.findall(r"-?\d+\.\d+", svg)]
    assert numbers and all(math.isfinite(x) for x in numbers)


def test_svg_is_unstretched():
    covering = Covering(Region((HTriangle.up(0, 0),)), (HTriangle.up(0, 0),))
    renderer = SvgRenderer(scale=100.0, margin=0.0)
    svg = renderer.render(covering)
    assert f'height="{100 * math.sqrt(3) / 2:.2f}"' in svg
    assert "50.0000,0.0000" in svg


def test_svg_to_file(tmp_path):
    path = tmp_path / "out.svg"
    SvgRenderer().to_file(generate(Variant.GRID, 2), path)
    assert path.read_text().count("<polygon") == 5
