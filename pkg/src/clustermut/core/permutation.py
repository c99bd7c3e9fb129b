"""Permutations of the vertex set 1..n."""

import itertools
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .errors import ClusterMutError, check_rank


class InvalidPermutation(ClusterMutError, ValueError):
  """Raised when an image tuple is not a bijection of 1..n."""


@dataclass(frozen=True, slots=True)
class Permutation:
  """
  A bijection σ of 1..n, stored by its images: `images[i - 1] == σ(i)`.

  Composition follows function notation, `(σ * τ)(i) == σ(τ(i))`.
  """

  images: tuple[int, ...]

  def __post_init__(self):
    if sorted(self.images) != list(range(1, len(self.images) + 1)):
      raise InvalidPermutation(f"{self.images} is not a permutation of 1..{len(self.images)}")

  @classmethod
  def identity(cls, n: int) -> "Permutation":
    return cls(tuple(range(1, n + 1)))

  @classmethod
  def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
    """Builds a permutation from disjoint cycles, e.g. `from_cycles(3, (1, 2, 3))`."""
    images = list(range(1, n + 1))
    seen: set[int] = set()
    for cycle in cycles:
      for position, vertex in enumerate(cycle):
        if vertex in seen or not 1 <= vertex <= n:
          raise InvalidPermutation(f"Cycles {cycles} are not disjoint cycles on 1..{n}")
        seen.add(vertex)
        images[vertex - 1] = cycle[(position + 1) % len(cycle)]
    return cls(tuple(images))

  @classmethod
  def parse(cls, raw: str, n: int) -> "Permutation":
    """
    Parses either cycle notation (`(1 2 3)(4 5)`, `()` for identity) or a comma separated
    image list (`2,3,1`).
    """
    raw = raw.strip()
    if raw.startswith("("):
      cycles = [
        tuple(int(v) for v in re.split(r"[\s,]+", body.strip()) if v)
        for body in re.findall(r"\(([^)]*)\)", raw)
      ]
      return cls.from_cycles(n, *(c for c in cycles if c))
    images = tuple(int(v) for v in raw.split(","))
    check_rank(n, len(images), "permutation")
    return cls(images)

  @property
  def n(self) -> int:
    return len(self.images)

  def __call__(self, i: int) -> int:
    return self.images[i - 1]

  def __mul__(self, other: "Permutation") -> "Permutation":
    check_rank(self.n, other.n, "permutation")
    return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

  @property
  def inverse(self) -> "Permutation":
    inv = [0] * self.n
    for i, image in enumerate(self.images, start=1):
      inv[image - 1] = i
    return Permutation(tuple(inv))

  @property
  def is_identity(self) -> bool:
    return all(image == i for i, image in enumerate(self.images, start=1))

  def apply_to_word(self, word: Sequence[int]) -> tuple[int, ...]:
    """The relabelled mutation sequence σ(w)."""
    return tuple(self(k) for k in word)

  def cycles(self) -> list[tuple[int, ...]]:
    result: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for start in range(1, self.n + 1):
      if start in seen or self(start) == start:
        continue
      cycle = [start]
      seen.add(start)
      nxt = self(start)
      while nxt != start:
        cycle.append(nxt)
        seen.add(nxt)
        nxt = self(nxt)
      result.append(tuple(cycle))
    return result

  def __str__(self) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"


def all_permutations(n: int) -> Iterator[Permutation]:
  """Every permutation of 1..n, image tuples in lexicographic order."""
  for images in itertools.permutations(range(1, n + 1)):
    yield Permutation(images)
