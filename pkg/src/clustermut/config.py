from enum import StrEnum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, PositiveInt

from .seeds.explore import DEFAULT_MAX_DEPTH, DEFAULT_MAX_SEEDS


class OutputFormat(StrEnum):
  TEXT = "text"
  JSON = "json"
  DOT = "dot"


class RunConfig(BaseModel):
  """Settings shared by every command, filled from command-line flags."""

  model_config = ConfigDict(frozen=True)

  max_seeds: PositiveInt = DEFAULT_MAX_SEEDS
  max_depth: PositiveInt = DEFAULT_MAX_DEPTH
  rng_seed: int = 0
  format: OutputFormat = OutputFormat.TEXT
  output: Path | None = None
  verbose_labels: bool = False
