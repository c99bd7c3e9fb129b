"""Shared utilities for CLI commands: flag parsers, input loading and output emission."""

import sys
from pathlib import Path

import structlog
from rich.console import Console

from ..catalog import catalog_names, named_quiver
from ..config import OutputFormat, RunConfig
from ..core.errors import ClusterMutError
from ..quiver.io import InputParseError, QuiverInput, parse_quiver_document
from ..seeds.model import MutationWord

logger = structlog.get_logger(__name__)

STDIN = "-"


class UnsupportedFormat(ClusterMutError, ValueError):
  """Raised when a command has no rendering in the requested output format."""

  def __init__(self, command: str, format: OutputFormat):
    super().__init__(f"{command} cannot write {format} output")


def parse_word(raw: str | list[str]) -> MutationWord:
  """
  Parses a mutation word written as `2,1,3`, `2 1 3` or `[2, 1, 3]`. The empty string is the
  empty word.
  """
  if isinstance(raw, list):
    raw = " ".join(raw)
  cleaned = raw.strip().strip("[]").replace(",", " ")
  try:
    return tuple(int(part) for part in cleaned.split())
  except ValueError as e:
    raise ValueError(f"Invalid mutation word: {raw!r}") from e


def parse_positive_int(raw: str | list[str]) -> int:
  if isinstance(raw, list):
    raise ValueError("Only one value is allowed")
  value = int(raw)
  if value < 1:
    raise ValueError(f"Expected a positive integer, got {value}")
  return value


def parse_output_format(raw: str | list[str]) -> OutputFormat:
  if isinstance(raw, list):
    raise ValueError("Only one output format is allowed")
  if raw not in OutputFormat:
    raise ValueError(f"Invalid format {raw!r}, expected one of {', '.join(OutputFormat)}")
  return OutputFormat(raw)


def parse_output_path(raw: str | list[str]) -> Path:
  if isinstance(raw, list):
    raise ValueError("Only one output file is allowed")
  return Path(raw).expanduser()


def read_quiver_input(source: str) -> QuiverInput:
  """
  Resolves a quiver argument: a catalog name, `-` for standard input, an inline JSON
  document, or the path of a JSON file.

  Raises:
    InputParseError: If the source names nothing readable or holds malformed JSON.
  """
  if (quiver := named_quiver(source)) is not None:
    return QuiverInput(quiver, as_matrix=False)
  if source == STDIN:
    return parse_quiver_document(sys.stdin.read())
  if source.lstrip().startswith("{"):
    return parse_quiver_document(source)

  path = Path(source).expanduser()
  try:
    text = path.read_text()
  except OSError as e:
    raise InputParseError(
      f"{source!r} is neither a readable file nor a catalog name ({', '.join(catalog_names())})"
    ) from e
  logger.debug("read quiver document", path=str(path))
  return parse_quiver_document(text)


def run_config(
  max_seeds: int,
  max_depth: int,
  format: OutputFormat,
  rng_seed: int = 0,
  output: Path | None = None,
  verbose_labels: bool = False,
) -> RunConfig:
  return RunConfig(
    max_seeds=max_seeds,
    max_depth=max_depth,
    format=format,
    rng_seed=rng_seed,
    output=output,
    verbose_labels=verbose_labels,
  )


def emit(text: str, config: RunConfig) -> None:
  """Writes command output to `--output` when given, else to stdout."""
  if not text.endswith("\n"):
    text += "\n"
  if config.output is not None:
    config.output.parent.mkdir(parents=True, exist_ok=True)
    config.output.write_text(text)
    uri = config.output.absolute().as_uri()
    Console(stderr=True).print(f"Wrote [link={uri}]{config.output}[/link]", highlight=False)
    return
  sys.stdout.write(text)
  sys.stdout.flush()


def get_console() -> Console:
  """Get a Rich console instance."""
  return Console()


def wants_rich_output(config: RunConfig) -> bool:
  """Whether text output is going straight to a person, who gets tables instead of lines."""
  if config.format != OutputFormat.TEXT or config.output is not None:
    return False
  return get_console().is_terminal
