"""Main CLI entry point, root command and the exit-code contract."""

import sys
from pathlib import Path

import structlog
from clypi import Command, arg

from ..config import OutputFormat
from ..core.errors import IndexOutOfRange, RankTooLarge, SizeMismatch
from ..exchange.group import InfiniteOrTruncatedClass
from ..exchange.verify import GraphRootMismatch, IncompleteGraph
from ..quiver.io import InputParseError
from ..quiver.model import InvalidQuiver, NotSkewSymmetrizable
from ..seeds.explore import DEFAULT_MAX_DEPTH, DEFAULT_MAX_SEEDS
from .certify import Certify
from .exchange import Autgroup, Similar
from .explore import Explore
from .mutate import Expand, Mutate
from .shared import UnsupportedFormat, parse_output_format, parse_output_path, parse_positive_int
from .verify import VerificationFailed

logger = structlog.get_logger(__name__)

EXIT_VERIFICATION_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_INVALID_INPUT = 3
EXIT_LIMITS_EXCEEDED = 4


class Clustermut(Command):
  """Exact mutation, exploration and automorphism groups for valued quivers"""

  subcommand: Mutate | Expand | Explore | Autgroup | Certify | Similar | Verify

  max_seeds: int = arg(
    default=DEFAULT_MAX_SEEDS,
    parser=parse_positive_int,
    help="stop exploring a mutation class after this many labeled seeds",
  )
  max_depth: int = arg(
    default=DEFAULT_MAX_DEPTH,
    parser=parse_positive_int,
    help="stop exploring at this mutation word length",
  )
  format: OutputFormat = arg(
    default=OutputFormat.TEXT, parser=parse_output_format, help="output format [text | json | dot]"
  )
  rng_seed: int = arg(default=0, help="seed for the randomized verification suites")
  output: Path | None = arg(
    default=None, short="o", parser=parse_output_path, help="write output to this file"
  )
  verbose_labels: bool = arg(default=False, help="label DOT nodes with their clusters")


def exit_code_for(e: BaseException) -> int:
  match e:
    case VerificationFailed():
      return EXIT_VERIFICATION_FAILED
    case InputParseError():
      return EXIT_PARSE_ERROR
    case (
      NotSkewSymmetrizable()
      | InvalidQuiver()
      | SizeMismatch()
      | IndexOutOfRange()
      | RankTooLarge()
      | UnsupportedFormat()
      | GraphRootMismatch()
    ):
      return EXIT_INVALID_INPUT
    case InfiniteOrTruncatedClass() | IncompleteGraph():
      return EXIT_LIMITS_EXCEEDED
    case _:
      return EXIT_VERIFICATION_FAILED


def main():
  try:
    app = Clustermut.parse()
    app.start()
  except KeyboardInterrupt:
    logger.info("clustermut was interrupted by the user")
    sys.exit(130)
  except Exception as e:
    code = exit_code_for(e)
    if code == EXIT_VERIFICATION_FAILED and not isinstance(e, VerificationFailed):
      logger.exception("Fatal exception")
    else:
      logger.error(str(e), error=type(e).__name__, exit_code=code)
    sys.exit(code)
