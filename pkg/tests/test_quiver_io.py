import json
import tempfile
from pathlib import Path

import pytest

from clustermut import catalog
from clustermut.quiver import InvalidQuiver, NotSkewSymmetrizable
from clustermut.quiver.io import (
  InputParseError,
  load_quiver,
  matrix_to_json,
  parse_quiver_document,
  quiver_to_dot,
  quiver_to_json,
)
from clustermut.quiver.model import matrix_from_quiver


class TestParseQuiverDocument:
  def test_quiver_document(self):
    arrows = [{"from": 1, "to": 2, "v": [2, 2]}, {"from": 2, "to": 3, "v": [1, 1]}]
    text = json.dumps({"n": 3, "arrows": arrows})
    parsed = parse_quiver_document(text)
    assert not parsed.as_matrix
    assert parsed.quiver == catalog.parity_example()

  def test_quiver_document_with_symmetrizer(self):
    text = '{"n": 2, "arrows": [{"from": 1, "to": 2, "v": [2, 1]}], "d": [1, 2]}'
    assert load_quiver(text) == catalog.b2()

  def test_missing_symmetrizer_is_computed(self):
    text = '{"n": 2, "arrows": [{"from": 1, "to": 2, "v": [3, 1]}]}'
    assert load_quiver(text).d == (1, 3)

  def test_matrix_document(self):
    parsed = parse_quiver_document('{"matrix": [[0, 2, 0], [-2, 0, 1], [0, -1, 0]]}')
    assert parsed.as_matrix
    assert parsed.quiver == catalog.parity_example()

  def test_not_json(self):
    with pytest.raises(InputParseError):
      parse_quiver_document("{not json")

  def test_wrong_shape(self):
    with pytest.raises(InputParseError):
      parse_quiver_document('{"matrix": [[0, 1], [-1]]}')
    with pytest.raises(InputParseError):
      parse_quiver_document("[1, 2, 3]")
    with pytest.raises(InputParseError):
      parse_quiver_document('{"n": 2, "edges": []}')

  def test_not_skew_symmetrizable(self):
    with pytest.raises(NotSkewSymmetrizable):
      parse_quiver_document('{"matrix": [[0, 1], [1, 0]]}')

  def test_invalid_quiver(self):
    with pytest.raises(InvalidQuiver):
      parse_quiver_document('{"n": 2, "arrows": [{"from": 1, "to": 1, "v": [1, 1]}]}')
    with pytest.raises(InvalidQuiver):
      parse_quiver_document('{"n": 2, "arrows": [{"from": 1, "to": 2, "v": [2, 1]}], "d": [1, 1]}')


class TestRendering:
  def test_quiver_json_round_trip(self):
    q = catalog.relabel_example()
    assert load_quiver(json.dumps(quiver_to_json(q))) == q

  def test_quiver_json_uses_from_and_to(self):
    arrow = quiver_to_json(catalog.b2())["arrows"][0]
    assert arrow == {"from": 1, "to": 2, "v": [2, 1]}

  def test_matrix_json(self):
    b = matrix_from_quiver(catalog.parity_example())
    assert matrix_to_json(b) == {"matrix": [[0, 2, 0], [-2, 0, 1], [0, -1, 0]]}

  def test_dot(self):
    dot = quiver_to_dot(catalog.b2())
    assert dot.startswith("digraph quiver {")
    assert '1 -> 2 [label="(2,1)"];' in dot

  def test_file_input(self):
    with tempfile.TemporaryDirectory() as tmpdir:
      path = Path(tmpdir) / "g2.json"
      path.write_text(json.dumps(quiver_to_json(catalog.g2())))
      assert load_quiver(path.read_text()) == catalog.g2()
