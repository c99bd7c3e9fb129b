"""CLI command deciding whether one exchange matrix mutates into another."""

from pathlib import Path
from typing import override

from clypi import Command, arg
from pydantic import BaseModel, ConfigDict

from ..config import OutputFormat, RunConfig
from ..invariants.parity import UnreachabilityCertificate
from ..invariants.reachability import (
  DEFAULT_MAX_STATES,
  DEFAULT_REACH_DEPTH,
  NotFoundWithinLimits,
  Outcome,
  Reached,
  decide_reachability,
)
from ..quiver.io import QuiverInput
from ..quiver.model import matrix_from_quiver
from .shared import (
  UnsupportedFormat,
  emit,
  parse_positive_int,
  read_quiver_input,
  run_config,
)


class CertifyReport(BaseModel):
  model_config = ConfigDict(frozen=True)

  outcome: Outcome
  word: list[int] | None = None
  states: int | None = None
  certificate: UnreachabilityCertificate | None = None


def certify_report(
  start: QuiverInput, target: QuiverInput, search_depth: int, max_states: int
) -> CertifyReport:
  result = decide_reachability(
    matrix_from_quiver(start.quiver),
    matrix_from_quiver(target.quiver),
    max_depth=search_depth,
    max_states=max_states,
  )
  match result.search:
    case Reached(word=word):
      return CertifyReport(outcome=result.outcome, word=list(word))
    case NotFoundWithinLimits(states=states):
      return CertifyReport(outcome=result.outcome, states=states)
    case None:
      return CertifyReport(outcome=result.outcome, certificate=result.certificate)


def certify_output(report: CertifyReport, config: RunConfig) -> str:
  match config.format:
    case OutputFormat.JSON:
      return report.model_dump_json(exclude_none=True)
    case OutputFormat.DOT:
      raise UnsupportedFormat("certify", config.format)
    case OutputFormat.TEXT:
      pass

  match report.outcome:
    case Outcome.REACHED:
      return f"Reached([{','.join(map(str, report.word or []))}])"
    case Outcome.EXHAUSTED:
      return f"Unreachable (class exhausted after {report.states} matrices)"
    case Outcome.UNKNOWN:
      return f"Unknown (no certificate, target not found among {report.states} matrices)"
    case Outcome.CERTIFIED_UNREACHABLE:
      certificate = report.certificate
      assert certificate is not None
      differing = ", ".join(f"({i},{j})" for i, j in certificate.differing)
      lines = ["Certified unreachable", "parity pattern of start (closed under mutation):"]
      lines += [f"  {row}" for row in certificate.pattern]
      lines.append(f"target differs at {differing}")
      lines.append(f"closure justified by {len(certificate.justifications)} steps")
      return "\n".join(lines)


class Certify(Command):
  """Decides whether the start quiver mutates into the target, with a certificate when not"""

  start: str = arg(help="catalog name, JSON file, inline JSON, or - for stdin")
  target: str = arg(help="catalog name, JSON file, or inline JSON")
  search_depth: int = arg(
    default=DEFAULT_REACH_DEPTH,
    parser=parse_positive_int,
    help="longest mutation word tried when no certificate exists",
  )
  max_states: int = arg(
    default=DEFAULT_MAX_STATES,
    parser=parse_positive_int,
    help="most matrices visited by the search",
  )
  max_seeds: int = arg(inherited=True)
  max_depth: int = arg(inherited=True)
  format: OutputFormat = arg(inherited=True)
  output: Path | None = arg(inherited=True)

  @override
  async def run(self):
    config = run_config(self.max_seeds, self.max_depth, self.format, output=self.output)
    report = certify_report(
      read_quiver_input(self.start),
      read_quiver_input(self.target),
      self.search_depth,
      self.max_states,
    )
    emit(certify_output(report, config), config)
