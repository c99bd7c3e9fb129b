"""CLI commands that apply a mutation word: to a quiver, and to the initial seed."""

import json
from pathlib import Path
from typing import override

import structlog
from clypi import Command, arg
from pydantic import BaseModel, ConfigDict

from ..config import OutputFormat, RunConfig
from ..laurent.normal_form import is_positive, normal_form
from ..quiver.io import QuiverInput, matrix_to_json, quiver_to_dot, quiver_to_json
from ..quiver.model import matrix_from_quiver, quiver_from_matrix
from ..quiver.mutation import mutate_matrix, mutate_quiver
from ..seeds.model import MutationWord
from ..seeds.mutation import apply_word, initial_seed
from .shared import (
  emit,
  parse_word,
  read_quiver_input,
  run_config,
)

logger = structlog.get_logger(__name__)


def mutate_output(source: QuiverInput, word: MutationWord, config: RunConfig) -> str:
  """Mutates along `word` and renders the result in the shape the input arrived in."""
  q = source.quiver
  if source.as_matrix:
    b = matrix_from_quiver(q)
    for k in word:
      b = mutate_matrix(b, k)
    q = quiver_from_matrix(b, q.d)
  else:
    for k in word:
      q = mutate_quiver(q, k)
  logger.debug("mutated", word=word, result=str(q))

  match config.format:
    case OutputFormat.JSON:
      document = matrix_to_json(matrix_from_quiver(q)) if source.as_matrix else quiver_to_json(q)
      return json.dumps(document)
    case OutputFormat.DOT:
      return quiver_to_dot(q)
    case OutputFormat.TEXT:
      return str(matrix_from_quiver(q)) if source.as_matrix else str(q)


class ClusterEntry(BaseModel):
  model_config = ConfigDict(frozen=True)

  index: int
  text: str
  terms: list[dict]
  positive: bool


class ExpandReport(BaseModel):
  model_config = ConfigDict(frozen=True)

  word: list[int]
  matrix: list[list[int]]
  cluster: list[ClusterEntry]


def expand_output(source: QuiverInput, word: MutationWord, config: RunConfig) -> str:
  """The cluster at `word` from the initial seed, each entry in normal form."""
  seed = apply_word(initial_seed(source.quiver), word)
  report = ExpandReport(
    word=list(word),
    matrix=seed.matrix.rows(),
    cluster=[
      ClusterEntry(
        index=i, text=normal_form(y).render("t"), terms=y.to_json(), positive=is_positive(y)
      )
      for i, y in enumerate(seed.cluster, start=1)
    ],
  )
  match config.format:
    case OutputFormat.JSON:
      return report.model_dump_json()
    case OutputFormat.DOT:
      return quiver_to_dot(seed.quiver)
    case OutputFormat.TEXT:
      lines = [f"B = {seed.matrix}"]
      lines += [
        f"y{entry.index} = {entry.text}  positive={str(entry.positive).lower()}"
        for entry in report.cluster
      ]
      return "\n".join(lines)


class Mutate(Command):
  """Applies a mutation word to a quiver or exchange matrix"""

  quiver: str = arg(short="q", help="catalog name, JSON file, inline JSON, or - for stdin")
  word: tuple[int, ...] = arg(
    default=(), short="w", parser=parse_word, help="mutation directions, first applied first"
  )
  max_seeds: int = arg(inherited=True)
  max_depth: int = arg(inherited=True)
  format: OutputFormat = arg(inherited=True)
  output: Path | None = arg(inherited=True)

  @override
  async def run(self):
    config = run_config(self.max_seeds, self.max_depth, self.format, output=self.output)
    emit(mutate_output(read_quiver_input(self.quiver), self.word, config), config)


class Expand(Command):
  """Prints the cluster variables reached from the initial seed by a mutation word"""

  quiver: str = arg(short="q", help="catalog name, JSON file, inline JSON, or - for stdin")
  word: tuple[int, ...] = arg(
    default=(), short="w", parser=parse_word, help="mutation directions, first applied first"
  )
  max_seeds: int = arg(inherited=True)
  max_depth: int = arg(inherited=True)
  format: OutputFormat = arg(inherited=True)
  output: Path | None = arg(inherited=True)

  @override
  async def run(self):
    config = run_config(self.max_seeds, self.max_depth, self.format, output=self.output)
    emit(expand_output(read_quiver_input(self.quiver), self.word, config), config)
