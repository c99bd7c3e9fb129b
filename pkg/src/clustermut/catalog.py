"""Named quivers shared by the command line and the verification suites."""

import re
from enum import StrEnum

from .quiver.model import ExchangeMatrix, ValuedQuiver, quiver_from_matrix


class CatalogName(StrEnum):
  A1 = "A1"
  B2 = "B2"
  C2 = "C2"
  G2 = "G2"
  MARKOV = "markov"
  """The (2,2)-valued oriented triangle; its seed class is infinite."""
  PARITY_EXAMPLE = "parity-example"
  """1 -(2,2)-> 2 -> 3, whose 1-2 relabelling is not mutation-reachable."""
  RELABEL_EXAMPLE = "relabel-example"
  """Three vertices with symmetrizer (1, 2, 4)."""


def linear_a(n: int) -> ValuedQuiver:
  """The linearly oriented A_n quiver 1 -> 2 -> ... -> n."""
  return ValuedQuiver.build(n, ((i, i + 1, (1, 1)) for i in range(1, n)), (1,) * n)


def a1() -> ValuedQuiver:
  return ValuedQuiver.build(1, (), (1,))


def b2() -> ValuedQuiver:
  return ValuedQuiver.build(2, [(1, 2, (2, 1))], (1, 2))


def c2() -> ValuedQuiver:
  return ValuedQuiver.build(2, [(1, 2, (1, 2))], (2, 1))


def g2() -> ValuedQuiver:
  return ValuedQuiver.build(2, [(1, 2, (3, 1))], (1, 3))


def markov() -> ValuedQuiver:
  return ValuedQuiver.build(3, [(1, 2, (2, 2)), (2, 3, (2, 2)), (3, 1, (2, 2))], (1, 1, 1))


def parity_example() -> ValuedQuiver:
  return quiver_from_matrix(ExchangeMatrix.from_rows([[0, 2, 0], [-2, 0, 1], [0, -1, 0]]))


def relabel_example() -> ValuedQuiver:
  return ValuedQuiver.build(
    3, [(1, 2, (2, 1)), (1, 3, (4, 1)), (3, 2, (1, 2))], (1, 2, 4)
  )


_BUILDERS = {
  CatalogName.A1: a1,
  CatalogName.B2: b2,
  CatalogName.C2: c2,
  CatalogName.G2: g2,
  CatalogName.MARKOV: markov,
  CatalogName.PARITY_EXAMPLE: parity_example,
  CatalogName.RELABEL_EXAMPLE: relabel_example,
}

_LINEAR_A = re.compile(r"^A(\d+)$")


def named_quiver(name: str) -> ValuedQuiver | None:
  """Looks up a catalog quiver, `A<n>` for any n >= 1 included."""
  if name in CatalogName:
    return _BUILDERS[CatalogName(name)]()
  if match := _LINEAR_A.match(name):
    n = int(match.group(1))
    if n >= 1:
      return linear_a(n)
  return None


def catalog_names() -> list[str]:
  return ["A<n>"] + [str(name) for name in CatalogName if name != CatalogName.A1]
