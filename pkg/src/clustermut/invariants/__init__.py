from .parity import (
  ClosureStep,
  Parity,
  ParityPattern,
  UnreachabilityCertificate,
  certify_unreachable,
  check_closure,
  is_closed,
  parity_of,
)
from .reachability import (
  NotFoundWithinLimits,
  Outcome,
  Reached,
  ReachabilityReport,
  bounded_reachability,
  decide_reachability,
)

__all__ = [
  "ClosureStep",
  "NotFoundWithinLimits",
  "Outcome",
  "Parity",
  "ParityPattern",
  "Reached",
  "ReachabilityReport",
  "UnreachabilityCertificate",
  "bounded_reachability",
  "certify_unreachable",
  "check_closure",
  "decide_reachability",
  "is_closed",
  "parity_of",
]
