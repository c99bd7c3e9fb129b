from dataclasses import dataclass
from typing import override

from ..laurent.poly import LaurentPoly
from ..quiver.model import ExchangeMatrix, ValuedQuiver, quiver_from_matrix

MutationWord = tuple[int, ...]
"""Mutation directions applied left to right: `(i1, i2, i3)` means μ_i3 μ_i2 μ_i1."""


@dataclass(frozen=True, slots=True)
class Seed:
  """
  A labeled seed: a cluster of Laurent polynomials in the initial variables t1..tn, and the
  exchange matrix of its quiver. The symmetrizer never changes under mutation and is carried
  along so the quiver can be recovered.
  """

  cluster: tuple[LaurentPoly, ...]
  matrix: ExchangeMatrix
  d: tuple[int, ...]

  @property
  def n(self) -> int:
    return self.matrix.n

  @property
  def quiver(self) -> ValuedQuiver:
    return quiver_from_matrix(self.matrix, self.d)

  @property
  def key(self) -> tuple[tuple[LaurentPoly, ...], ExchangeMatrix]:
    return self.cluster, self.matrix

  def cluster_text(self, var: str = "t") -> str:
    from ..laurent.normal_form import normal_form

    return "(" + ", ".join(normal_form(y).render(var) for y in self.cluster) + ")"

  @override
  def __str__(self) -> str:
    return f"{self.cluster_text()} B={self.matrix}"


def poly_sort_key(f: LaurentPoly) -> tuple[int, tuple]:
  """A total order on polynomials, used wherever sets of them are listed."""
  return len(f.terms), f.terms
