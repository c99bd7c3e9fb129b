import os
from enum import StrEnum


class EnvName(StrEnum):
  """Names of the environment variables clustermut reads."""

  LOG_LEVEL = "CLUSTERMUT_LOG_LEVEL"
  """The minimum level of log records written to stderr."""
  LOG_JSON = "CLUSTERMUT_LOG_JSON"
  """When truthy, log records are rendered as JSON lines."""


_TRUTHY = {"1", "true", "yes", "on"}
_LEVELS = {"TRACE", "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def get_log_level() -> str:
  """
  Retrieves the log level from the environment.

  Returns:
    An upper-cased stdlib level name, INFO when unset.

  Raises:
    EnvironmentError: If the variable names an unknown level.
  """
  level = os.getenv(EnvName.LOG_LEVEL, "INFO").strip().upper()
  if level not in _LEVELS:
    raise EnvironmentError(f"Environment variable {EnvName.LOG_LEVEL} has unknown level {level!r}")
  # stdlib logging has no TRACE
  return "DEBUG" if level == "TRACE" else level


def get_log_json() -> bool:
  """Whether log records should be rendered as JSON."""
  return os.getenv(EnvName.LOG_JSON, "").strip().lower() in _TRUTHY
