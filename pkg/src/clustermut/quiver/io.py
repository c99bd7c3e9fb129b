"""
JSON input and output for quivers and matrices.

Two document shapes are accepted, vertices 1-based in both:

  {"n": 3, "arrows": [{"from": 1, "to": 2, "v": [2, 2]}], "d": [1, 1, 1]}
  {"matrix": [[0, 2, 0], [-2, 0, 1], [0, -1, 0]]}

`d` is optional; when omitted the minimal symmetrizer is computed.
"""

from dataclasses import dataclass
from typing import Any, Self

import structlog
from pydantic import BaseModel, ConfigDict, PositiveInt, ValidationError, model_validator
from pydantic_core import from_json

from ..core.errors import ClusterMutError
from .model import Arrow, ExchangeMatrix, InvalidQuiver, ValuedQuiver, quiver_from_matrix

logger = structlog.get_logger(__name__)


class InputParseError(ClusterMutError, ValueError):
  """Raised when input is not JSON or does not follow either document shape."""


class MatrixDocument(BaseModel):
  model_config = ConfigDict(extra="forbid")

  matrix: list[list[int]]

  @model_validator(mode="after")
  def _square(self) -> Self:
    n = len(self.matrix)
    if n == 0 or any(len(row) != n for row in self.matrix):
      raise ValueError("matrix must be a non-empty square array")
    return self


class QuiverDocument(BaseModel):
  model_config = ConfigDict(extra="forbid")

  n: PositiveInt
  arrows: list[Arrow] = []
  d: list[PositiveInt] | None = None


@dataclass(frozen=True, slots=True)
class QuiverInput:
  """A parsed input document, remembering which shape it arrived in."""

  quiver: ValuedQuiver
  as_matrix: bool


def parse_quiver_document(text: str) -> QuiverInput:
  """
  Parses a quiver or matrix document.

  Raises:
    InputParseError: If the text is not valid JSON or matches neither shape.
    InvalidQuiver: If the arrows contain loops or 2-cycles, or break the given symmetrizer.
    NotSkewSymmetrizable: If no symmetrizer exists.
  """
  try:
    raw = from_json(text)
  except ValueError as e:
    raise InputParseError(f"Input is not valid JSON: {e}") from e
  if not isinstance(raw, dict):
    raise InputParseError("Input must be a JSON object")

  if "matrix" in raw:
    doc = _validate(MatrixDocument, raw)
    quiver = quiver_from_matrix(ExchangeMatrix.from_rows(doc.matrix))
    return QuiverInput(quiver, as_matrix=True)

  doc = _validate(QuiverDocument, raw)
  return QuiverInput(_quiver_from_document(doc), as_matrix=False)


def load_quiver(text: str) -> ValuedQuiver:
  return parse_quiver_document(text).quiver


def _validate[M: BaseModel](model: type[M], raw: Any) -> M:
  try:
    return model.model_validate(raw)
  except ValidationError as e:
    raise InputParseError(f"Malformed {model.__name__}: {e}") from e


def _quiver_from_document(doc: QuiverDocument) -> ValuedQuiver:
  if doc.d is None:
    rows = [[0] * doc.n for _ in range(doc.n)]
    for arrow in doc.arrows:
      i, j = arrow.key
      if i > doc.n or j > doc.n:
        raise InvalidQuiver(f"Arrow {arrow} leaves the vertex set 1..{doc.n}")
      if i == j:
        raise InvalidQuiver(f"Loop at vertex {i}")
      if rows[i - 1][j - 1] != 0:
        raise InvalidQuiver(f"Arrows {i} -> {j} and {j} -> {i} form a duplicate or 2-cycle")
      rows[i - 1][j - 1] = arrow.v[0]
      rows[j - 1][i - 1] = -arrow.v[1]
    logger.debug("no symmetrizer supplied, computing the minimal one", n=doc.n)
    return quiver_from_matrix(ExchangeMatrix.from_rows(rows))

  try:
    return ValuedQuiver(n=doc.n, arrows=tuple(doc.arrows), d=tuple(doc.d))
  except ValidationError as e:
    for error in e.errors():
      cause = error.get("ctx", {}).get("error")
      if isinstance(cause, InvalidQuiver):
        raise cause from e
    raise InvalidQuiver(str(e)) from e


def quiver_to_json(q: ValuedQuiver) -> dict[str, Any]:
  return q.model_dump(mode="json", by_alias=True)


def matrix_to_json(b: ExchangeMatrix) -> dict[str, Any]:
  return {"matrix": b.rows()}


def quiver_to_dot(q: ValuedQuiver) -> str:
  lines = ["digraph quiver {"]
  lines.extend(f"  {i};" for i in range(1, q.n + 1))
  for arrow in q.arrows:
    label = "" if arrow.v == (1, 1) else f' [label="({arrow.v[0]},{arrow.v[1]})"]'
    lines.append(f"  {arrow.source} -> {arrow.target}{label};")
  lines.append("}")
  return "\n".join(lines) + "\n"
