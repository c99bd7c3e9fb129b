"""CLI command exploring a mutation class and exporting its exchange graph."""

from pathlib import Path
from typing import override

import clypi
from clypi import Command, arg
from pydantic import BaseModel, ConfigDict

from ..config import OutputFormat, RunConfig
from ..quiver.io import QuiverInput
from ..seeds.explore import (
  MutationClassGraph,
  cluster_variables,
  explore,
  unlabeled_clusters,
  verify_positivity,
)
from ..seeds.export import GraphExport, to_dot
from .shared import (
  emit,
  get_console,
  read_quiver_input,
  run_config,
  wants_rich_output,
)


class ClassSummary(BaseModel):
  model_config = ConfigDict(frozen=True)

  labeled: int
  clusters: int
  variables: int
  complete: bool
  positive: bool
  """Over the explored variables only, when the class is truncated."""
  truncation: str | None

  @classmethod
  def of(cls, g: MutationClassGraph) -> "ClassSummary":
    return cls(
      labeled=len(g),
      clusters=len(unlabeled_clusters(g)),
      variables=len(cluster_variables(g)),
      complete=g.complete,
      positive=verify_positivity(g),
      truncation=str(g.truncation) if g.truncation else None,
    )

  def line(self) -> str:
    flags = f"complete={str(self.complete).lower()} positive={str(self.positive).lower()}"
    text = f"labeled={self.labeled} clusters={self.clusters} variables={self.variables} {flags}"
    if self.truncation:
      text += f" truncated={self.truncation}"
    return text


class ExploreReport(BaseModel):
  model_config = ConfigDict(frozen=True)

  summary: ClassSummary
  graph: GraphExport


def explore_output(source: QuiverInput, config: RunConfig) -> str:
  g = explore(source.quiver, max_seeds=config.max_seeds, max_depth=config.max_depth)
  summary = ClassSummary.of(g)
  match config.format:
    case OutputFormat.TEXT:
      return summary.line()
    case OutputFormat.JSON:
      return ExploreReport(summary=summary, graph=GraphExport.from_graph(g)).model_dump_json()
    case OutputFormat.DOT:
      return to_dot(g, verbose_labels=config.verbose_labels)


class Explore(Command):
  """Explores the mutation class of a quiver's initial seed"""

  quiver: str = arg(short="q", help="catalog name, JSON file, inline JSON, or - for stdin")
  max_seeds: int = arg(inherited=True)
  max_depth: int = arg(inherited=True)
  format: OutputFormat = arg(inherited=True)
  output: Path | None = arg(inherited=True)
  verbose_labels: bool = arg(inherited=True)

  @override
  async def run(self):
    config = run_config(
      self.max_seeds,
      self.max_depth,
      self.format,
      output=self.output,
      verbose_labels=self.verbose_labels,
    )
    text = explore_output(read_quiver_input(self.quiver), config)
    if wants_rich_output(config):
      get_console().print(clypi.boxed(text, width=80, align="left"))
      return
    emit(text, config)
