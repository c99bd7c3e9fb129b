"""Bounded search for mutation sequences, and the combined reachability verdict."""

from dataclasses import dataclass
from enum import StrEnum

import structlog

from ..core.errors import check_rank
from ..quiver.model import ExchangeMatrix
from ..quiver.mutation import walk_matrix_class
from .parity import UnreachabilityCertificate, certify_unreachable

logger = structlog.get_logger(__name__)

DEFAULT_MAX_STATES = 20000
DEFAULT_REACH_DEPTH = 8


@dataclass(frozen=True, slots=True)
class Reached:
  word: tuple[int, ...]
  """Directions applied left to right to the start matrix."""


@dataclass(frozen=True, slots=True)
class NotFoundWithinLimits:
  states: int
  """Distinct matrices visited."""
  exhausted: bool
  """True when the whole mutation class was visited, which proves the target unreachable."""


ReachabilityVerdict = Reached | NotFoundWithinLimits


def bounded_reachability(
  b_start: ExchangeMatrix,
  b_target: ExchangeMatrix,
  max_depth: int = DEFAULT_REACH_DEPTH,
  max_states: int = DEFAULT_MAX_STATES,
) -> ReachabilityVerdict:
  """Breadth-first search from b_start for b_target, shortest word first."""
  check_rank(b_start.n, b_target.n, "target matrix")
  if max_depth < 1 or max_states < 1:
    raise ValueError("Search limits must be positive")
  walk = walk_matrix_class(b_start, max_states, max_depth, stop=lambda b: b == b_target)
  if walk.found is not None:
    return Reached(walk.words[walk.found])
  logger.debug("target not reached", states=len(walk), exhausted=walk.complete)
  return NotFoundWithinLimits(states=len(walk), exhausted=walk.complete)


class Outcome(StrEnum):
  REACHED = "reached"
  CERTIFIED_UNREACHABLE = "certified-unreachable"
  EXHAUSTED = "unreachable-class-exhausted"
  UNKNOWN = "unknown"


@dataclass(frozen=True, slots=True)
class ReachabilityReport:
  outcome: Outcome
  certificate: UnreachabilityCertificate | None = None
  search: ReachabilityVerdict | None = None


def decide_reachability(
  b_start: ExchangeMatrix,
  b_target: ExchangeMatrix,
  max_depth: int = DEFAULT_REACH_DEPTH,
  max_states: int = DEFAULT_MAX_STATES,
) -> ReachabilityReport:
  """
  Tries a parity certificate first and falls back to bounded search; the answer is
  reached, unreachable, or unknown within the limits.
  """
  certificate = certify_unreachable(b_start, b_target)
  if certificate is not None:
    return ReachabilityReport(Outcome.CERTIFIED_UNREACHABLE, certificate=certificate)
  search = bounded_reachability(b_start, b_target, max_depth, max_states)
  match search:
    case Reached():
      return ReachabilityReport(Outcome.REACHED, search=search)
    case NotFoundWithinLimits(exhausted=True):
      return ReachabilityReport(Outcome.EXHAUSTED, search=search)
    case _:
      return ReachabilityReport(Outcome.UNKNOWN, search=search)
