"""CLI command running the named verification suites."""

import json
from pathlib import Path
from typing import override

from clypi import Command, arg
from rich.markup import escape
from rich.table import Table

from ..config import OutputFormat, RunConfig
from ..core.errors import ClusterMutError
from ..verification import SuiteName, SuiteResult, run_suites
from .shared import (
  UnsupportedFormat,
  emit,
  get_console,
  run_config,
  wants_rich_output,
)

ALL_SUITES = "all"


class VerificationFailed(ClusterMutError):
  """Raised after reporting when at least one suite found a failing case."""

  def __init__(self, failed: list[str]):
    super().__init__(f"Verification failed: {', '.join(failed)}")
    self.failed = failed


SUITE_ALIASES = {
  "lemma312": SuiteName.PERMUTATION_MUTATION,
  "thm314-b2": SuiteName.ISOMORPHISM_B2,
}


def parse_suites(raw: str | list[str]) -> list[SuiteName]:
  """`all`, or suite names or their aliases separated by commas."""
  names = raw if isinstance(raw, list) else raw.split(",")
  names = [name.strip() for name in names if name.strip()]
  if names == [ALL_SUITES]:
    return list(SuiteName)
  unknown = [name for name in names if name not in SuiteName and name not in SUITE_ALIASES]
  if unknown or not names:
    choices = ", ".join([ALL_SUITES, *SuiteName, *SUITE_ALIASES])
    raise ValueError(f"Unknown suite {', '.join(unknown) or '(none)'}, expected one of {choices}")
  return [SUITE_ALIASES.get(name) or SuiteName(name) for name in names]


def verify_output(results: list[SuiteResult], config: RunConfig) -> str:
  match config.format:
    case OutputFormat.JSON:
      return json.dumps([result.model_dump(mode="json") for result in results])
    case OutputFormat.DOT:
      raise UnsupportedFormat("verify", config.format)
    case OutputFormat.TEXT:
      pass

  lines = []
  for result in results:
    verdict = "pass" if result.passed else "FAIL"
    lines.append(f"{result.suite}: {verdict} {result.checked - result.failed}/{result.checked}")
    lines += [f"  note: {note}" for note in result.notes]
    lines += [f"  failure: {failure}" for failure in result.failures]
  return "\n".join(lines)


def verify_table(results: list[SuiteResult]) -> Table:
  table = Table(title="Verification suites")
  table.add_column("suite")
  table.add_column("result")
  table.add_column("checks", justify="right")
  table.add_column("details")
  for result in results:
    verdict = "[green]pass[/green]" if result.passed else "[red]FAIL[/red]"
    details = "\n".join(result.failures or result.notes)
    table.add_row(result.suite, verdict, str(result.checked), escape(details))
  return table


class Verify(Command):
  """Runs verification suites and reports pass or fail for each"""

  suite: list[SuiteName] = arg(
    default=list(SuiteName),
    parser=parse_suites,
    help="comma-separated suite names, or all",
  )
  rng_seed: int = arg(inherited=True)
  max_seeds: int = arg(inherited=True)
  max_depth: int = arg(inherited=True)
  format: OutputFormat = arg(inherited=True)
  output: Path | None = arg(inherited=True)

  @override
  async def run(self):
    config = run_config(
      self.max_seeds, self.max_depth, self.format, rng_seed=self.rng_seed, output=self.output
    )
    results = run_suites(self.suite, config)
    if wants_rich_output(config):
      get_console().print(verify_table(results))
    else:
      emit(verify_output(results, config), config)
    failed = [result.suite for result in results if not result.passed]
    if failed:
      raise VerificationFailed(failed)
