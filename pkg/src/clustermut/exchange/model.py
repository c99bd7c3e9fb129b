from dataclasses import dataclass
from typing import override

from ..core.errors import check_rank
from ..core.permutation import Permutation
from ..laurent.poly import LaurentPoly
from ..seeds.model import Seed


@dataclass(frozen=True, slots=True)
class ExchangeMap:
  """
  The field map induced by `x_i -> y_σ(i)`, where x is the source cluster and y the target
  cluster. The target's entries are Laurent polynomials in the ambient initial variables;
  polynomials fed to the map are written in the source's own cluster variables.
  """

  source: Seed
  target: Seed
  sigma: Permutation

  def __post_init__(self):
    check_rank(self.source.n, self.target.n, "target seed")
    check_rank(self.source.n, self.sigma.n, "permutation")

  @property
  def n(self) -> int:
    return self.source.n

  @property
  def images(self) -> tuple[LaurentPoly, ...]:
    """Where x_1..x_n are sent."""
    return tuple(self.target.cluster[self.sigma(i) - 1] for i in range(1, self.n + 1))

  @override
  def __str__(self) -> str:
    return f"T[{self.source} -> {self.target}, σ={self.sigma}]"


def rerooted(seed: Seed) -> Seed:
  """The same quiver with the formal variables x_1..x_n as its cluster."""
  return Seed(LaurentPoly.variables(seed.n), seed.matrix, seed.d)


@dataclass(frozen=True, slots=True)
class AutGroupElement:
  """A cluster automorphism, determined by the images of the initial variables."""

  images: tuple[LaurentPoly, ...]

  @property
  def n(self) -> int:
    return len(self.images)

  def is_identity(self) -> bool:
    return self.images == LaurentPoly.variables(self.n)

  def render(self, var: str = "t") -> str:
    from ..laurent.normal_form import normal_form

    return ", ".join(
      f"{var}{i} -> {normal_form(y).render(var)}" for i, y in enumerate(self.images, start=1)
    )

  @override
  def __str__(self) -> str:
    return self.render()
