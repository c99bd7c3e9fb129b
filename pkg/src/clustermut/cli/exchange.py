"""CLI commands for automorphism groups and similarity witnesses."""

from pathlib import Path
from typing import override

from clypi import Command, arg
from pydantic import BaseModel, ConfigDict
from rich.table import Table

from ..config import OutputFormat, RunConfig
from ..exchange.group import GroupReport, automorphism_group
from ..quiver.io import QuiverInput
from ..quiver.similarity import find_similarities, quiver_automorphisms
from .shared import (
  UnsupportedFormat,
  emit,
  get_console,
  read_quiver_input,
  run_config,
  wants_rich_output,
)


def autgroup_report(source: QuiverInput, config: RunConfig) -> GroupReport:
  table = automorphism_group(source.quiver, max_seeds=config.max_seeds, max_depth=config.max_depth)
  return GroupReport.from_table(table)


def autgroup_output(source: QuiverInput, config: RunConfig) -> str:
  report = autgroup_report(source, config)
  match config.format:
    case OutputFormat.JSON:
      return report.model_dump_json()
    case OutputFormat.DOT:
      raise UnsupportedFormat("autgroup", config.format)
    case OutputFormat.TEXT:
      lines = [
        f"order={report.order}",
        "generators: " + (", ".join(report.generators) or "none"),
        "relations: " + ("; ".join(report.relations) or "none"),
      ]
      lines += [
        f"[{a}] order {report.element_orders[a]}: {text}"
        for a, text in enumerate(report.element_text)
      ]
      return "\n".join(lines)


def autgroup_table(report: GroupReport) -> Table:
  table = Table(title=f"Cluster automorphism group, order {report.order}")
  table.add_column("#", justify="right")
  table.add_column("order", justify="right")
  table.add_column("images")
  for a, text in enumerate(report.element_text):
    table.add_row(str(a), str(report.element_orders[a]), text)
  table.caption = "; ".join(report.relations)
  return table


class SimilarityReport(BaseModel):
  model_config = ConfigDict(frozen=True)

  witnesses: list[tuple[str, int]]
  """Each `(σ, ε)` with `B(first) == ε σ(B(second))`."""
  automorphisms: list[str]
  """Permutations σ with `σ(first) == first`."""


def similar_output(first: QuiverInput, second: QuiverInput, config: RunConfig) -> str:
  report = SimilarityReport(
    witnesses=[(str(w.sigma), w.epsilon) for w in find_similarities(first.quiver, second.quiver)],
    automorphisms=[str(sigma) for sigma in quiver_automorphisms(first.quiver)],
  )
  match config.format:
    case OutputFormat.JSON:
      return report.model_dump_json()
    case OutputFormat.DOT:
      raise UnsupportedFormat("similar", config.format)
    case OutputFormat.TEXT:
      if report.witnesses:
        lines = [f"similar: σ={sigma} ε={epsilon:+d}" for sigma, epsilon in report.witnesses]
      else:
        lines = ["not similar"]
      lines.append("automorphisms: " + ", ".join(report.automorphisms))
      return "\n".join(lines)


class Autgroup(Command):
  """Computes the cluster automorphism group of a finite mutation class"""

  quiver: str = arg(short="q", help="catalog name, JSON file, inline JSON, or - for stdin")
  max_seeds: int = arg(inherited=True)
  max_depth: int = arg(inherited=True)
  format: OutputFormat = arg(inherited=True)
  output: Path | None = arg(inherited=True)

  @override
  async def run(self):
    config = run_config(self.max_seeds, self.max_depth, self.format, output=self.output)
    source = read_quiver_input(self.quiver)
    if wants_rich_output(config):
      get_console().print(autgroup_table(autgroup_report(source, config)))
      return
    emit(autgroup_output(source, config), config)


class Similar(Command):
  """Lists every relabelling under which two quivers are similar"""

  quiver: str = arg(short="q", help="catalog name, JSON file, inline JSON, or - for stdin")
  other: str | None = arg(
    default=None, help="the quiver to compare against; the first quiver itself if omitted"
  )
  max_seeds: int = arg(inherited=True)
  max_depth: int = arg(inherited=True)
  format: OutputFormat = arg(inherited=True)
  output: Path | None = arg(inherited=True)

  @override
  async def run(self):
    config = run_config(self.max_seeds, self.max_depth, self.format, output=self.output)
    first = read_quiver_input(self.quiver)
    second = read_quiver_input(self.other) if self.other else first
    emit(similar_output(first, second, config), config)
