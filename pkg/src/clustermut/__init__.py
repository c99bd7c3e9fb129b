from importlib.metadata import PackageNotFoundError, version

from .core.logging import initialize_logging
from .env import get_log_json, get_log_level

initialize_logging(json_logs=get_log_json(), log_level=get_log_level())

PACKAGE = __name__.split(".")[0]
try:
  __version__ = version(PACKAGE)
except PackageNotFoundError:
  __version__ = "0.0.0"
