"""
Parity patterns of exchange matrices and certificates of non-reachability built from them.

Under μ_k, entries in row or column k only change sign, and any other entry changes by
`sign(b_ik) * max(0, b_ik * b_kj)`, which is even whenever b_ik or b_kj is even. A pattern in
which every such increment is forced to be even is therefore preserved by every mutation.
"""

from dataclasses import dataclass
from enum import StrEnum
from typing import Self, override

import structlog
from pydantic import BaseModel, ConfigDict, model_validator

from ..core.errors import check_rank
from ..quiver.model import ExchangeMatrix

logger = structlog.get_logger(__name__)


class Parity(StrEnum):
  EVEN = "E"
  ODD = "O"

  @classmethod
  def of(cls, value: int) -> "Parity":
    return cls.ODD if value % 2 else cls.EVEN


@dataclass(frozen=True, slots=True)
class ParityPattern:
  entries: tuple[tuple[Parity, ...], ...]

  def __post_init__(self):
    n = self.n
    for i in range(n):
      if self.entries[i][i] != Parity.EVEN:
        raise ValueError(f"Diagonal entry {i + 1} of a parity pattern must be even")

  @property
  def n(self) -> int:
    return len(self.entries)

  def __getitem__(self, index: tuple[int, int]) -> Parity:
    i, j = index
    return self.entries[i - 1][j - 1]

  def differences(self, other: "ParityPattern") -> list[tuple[int, int]]:
    check_rank(self.n, other.n, "parity pattern")
    return [
      (i, j)
      for i in range(1, self.n + 1)
      for j in range(1, self.n + 1)
      if i != j and self[i, j] != other[i, j]
    ]

  def matches(self, b: ExchangeMatrix) -> bool:
    return parity_of(b) == self

  def rows(self) -> list[str]:
    return ["".join(p.value for p in row) for row in self.entries]

  @override
  def __str__(self) -> str:
    return "/".join(self.rows())


def parity_of(b: ExchangeMatrix) -> ParityPattern:
  return ParityPattern(tuple(tuple(Parity.of(v) for v in row) for row in b.entries))


class ClosureStep(BaseModel):
  """Why entry (i, j) keeps its parity under μ_k."""

  model_config = ConfigDict(frozen=True)

  k: int
  i: int
  j: int
  reason: str


@dataclass(frozen=True, slots=True)
class ClosureCheck:
  proof: tuple[ClosureStep, ...]
  failure: tuple[int, int, int] | None
  """The first `(k, i, j)` whose increment under μ_k can be odd."""

  @property
  def closed(self) -> bool:
    return self.failure is None


def check_closure(p: ParityPattern) -> ClosureCheck:
  """
  Decides whether p is preserved by every mutation, collecting a justification for every
  `(k, i, j)` with i, j, k distinct, or stopping at the first triple where both `(i, k)` and
  `(k, j)` are odd.
  """
  steps: list[ClosureStep] = []
  vertices = range(1, p.n + 1)
  for k in vertices:
    for i in vertices:
      for j in vertices:
        if len({i, j, k}) < 3:
          continue
        if p[i, k] == Parity.EVEN:
          steps.append(ClosureStep(k=k, i=i, j=j, reason=f"b[{i},{k}] even"))
        elif p[k, j] == Parity.EVEN:
          steps.append(ClosureStep(k=k, i=i, j=j, reason=f"b[{k},{j}] even"))
        else:
          return ClosureCheck(tuple(steps), (k, i, j))
  return ClosureCheck(tuple(steps), None)


def is_closed(p: ParityPattern) -> tuple[ClosureStep, ...] | None:
  """The closure proof for p, or None when some mutation can change it."""
  check = check_closure(p)
  if check.failure is not None:
    logger.debug("parity pattern not closed", pattern=str(p), failure=check.failure)
    return None
  return check.proof


class UnreachabilityCertificate(BaseModel):
  """
  A mutation-closed parity pattern that the start matrix has and the target does not, so no
  sequence of mutations takes one to the other. Self-contained: `is_valid` re-derives
  everything from the stored matrices.
  """

  model_config = ConfigDict(frozen=True)

  pattern: list[str]
  start: list[list[int]]
  target: list[list[int]]
  start_check: bool
  target_check: bool
  differing: list[tuple[int, int]]
  justifications: list[ClosureStep]

  @model_validator(mode="after")
  def _consistent(self) -> Self:
    if not self.start_check or self.target_check:
      raise ValueError("A certificate needs a matching start and a violating target")
    return self

  def is_valid(self) -> bool:
    start = ExchangeMatrix.from_rows(self.start)
    target = ExchangeMatrix.from_rows(self.target)
    pattern = parity_of(start)
    check = check_closure(pattern)
    return (
      pattern.rows() == self.pattern
      and check.closed
      and list(check.proof) == self.justifications
      and bool(pattern.differences(parity_of(target)))
    )


def certify_unreachable(
  b_start: ExchangeMatrix, b_target: ExchangeMatrix
) -> UnreachabilityCertificate | None:
  """
  Certifies that b_target is not mutation-equivalent to b_start, when the parity pattern of
  b_start is closed and b_target breaks it.

  Raises:
    SizeMismatch: If the ranks differ.
  """
  check_rank(b_start.n, b_target.n, "target matrix")
  pattern = parity_of(b_start)
  proof = is_closed(pattern)
  if proof is None:
    return None
  differing = pattern.differences(parity_of(b_target))
  if not differing:
    return None
  logger.info("unreachability certified", pattern=str(pattern), differing=differing)
  return UnreachabilityCertificate(
    pattern=pattern.rows(),
    start=b_start.rows(),
    target=b_target.rows(),
    start_check=True,
    target_check=False,
    differing=differing,
    justifications=list(proof),
  )
