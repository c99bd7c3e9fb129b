"""Cluster automorphism groups of finite mutation classes."""

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any, override

import structlog
from pydantic import BaseModel, ConfigDict

from ..core.errors import ClusterMutError, RankTooLarge
from ..core.permutation import Permutation, all_permutations
from ..laurent.poly import LaurentPoly, substitute
from ..quiver.model import ExchangeMatrix, ValuedQuiver
from ..quiver.similarity import matrices_similar, similarity_class_key
from ..seeds.explore import DEFAULT_MAX_DEPTH, DEFAULT_MAX_SEEDS, MutationClassGraph, explore
from ..seeds.model import Seed
from ..seeds.mutation import mutate_seed
from .model import AutGroupElement

logger = structlog.get_logger(__name__)

MAX_GROUP_RANK = 6
MAX_RELATION_POWER = 12


class InfiniteOrTruncatedClass(ClusterMutError):
  """Raised when a computation needs the whole mutation class but exploration was cut off."""


@dataclass(frozen=True, slots=True)
class Relation:
  """`(T_a T_b ...)^power = 1` over named generators."""

  generators: tuple[int, ...]
  power: int

  @override
  def __str__(self) -> str:
    product = "".join(f"T{k}" for k in self.generators)
    base = product if len(self.generators) == 1 else f"({product})"
    return f"{base}^{self.power} = 1"


@dataclass(frozen=True, slots=True)
class GroupTable:
  elements: tuple[AutGroupElement, ...]
  composition: tuple[tuple[int, ...], ...]
  """`composition[a][b]` is the index of the element `a ∘ b`."""
  identity: int
  generators: dict[int, int]
  """Direction k to the index of T_k, the exchange map from the initial seed to its k-th
  neighbour, for each k where that map is an automorphism."""
  relations: tuple[Relation, ...] = ()

  @property
  def order(self) -> int:
    return len(self.elements)

  def compose(self, a: int, b: int) -> int:
    return self.composition[a][b]

  def power(self, a: int, m: int) -> int:
    result = self.identity
    for _ in range(m):
      result = self.compose(result, a)
    return result

  def element_order(self, a: int) -> int:
    m, current = 1, a
    while current != self.identity:
      current = self.compose(current, a)
      m += 1
    return m

  def inverse(self, a: int) -> int | None:
    for b in range(self.order):
      if self.compose(a, b) == self.identity:
        return b
    return None

  def product(self, indices: Sequence[int]) -> int:
    result = self.identity
    for index in indices:
      result = self.compose(result, index)
    return result


def compose_elements(g: AutGroupElement, h: AutGroupElement) -> AutGroupElement:
  """`g ∘ h`: substitutes the images of g into the images of h."""
  images = []
  for y in h.images:
    image = substitute(y, g.images)
    if image is None:
      raise ArithmeticError(f"Composition of automorphisms left the Laurent ring at {y}")
    images.append(image)
  return AutGroupElement(tuple(images))


def automorphism_group(
  q: ValuedQuiver,
  max_seeds: int = DEFAULT_MAX_SEEDS,
  max_depth: int = DEFAULT_MAX_DEPTH,
) -> GroupTable:
  """
  The cluster automorphism group of the class of `initial_seed(q)`.

  Every seed p' of the class and every σ with `B(p') == ε σ(B(p))` for the initial seed p
  gives the automorphism `t_i -> y'_σ(i)`. These are deduplicated by their images and the set is
  closed under composition.

  Raises:
    RankTooLarge: If q has more than six vertices.
    InfiniteOrTruncatedClass: If the class could not be explored completely.
  """
  if q.n > MAX_GROUP_RANK:
    raise RankTooLarge(q.n, MAX_GROUP_RANK, "automorphism group computation")
  g = explore(q, max_seeds=max_seeds, max_depth=max_depth)
  if not g.complete:
    raise InfiniteOrTruncatedClass(
      f"Mutation class of {q} was truncated by {g.truncation} after {len(g)} seeds"
    )
  root = g.seeds[g.initial]

  elements: list[AutGroupElement] = []
  index: dict[tuple[LaurentPoly, ...], int] = {}

  def add(element: AutGroupElement) -> int:
    if element.images not in index:
      index[element.images] = len(elements)
      elements.append(element)
    return index[element.images]

  identity = add(AutGroupElement(root.cluster))
  for seed in g.seeds:
    for sigma in _similar_permutations(seed.matrix, root.matrix):
      add(AutGroupElement(tuple(seed.cluster[sigma(i) - 1] for i in range(1, q.n + 1))))
  from_pairs = len(elements)

  table: dict[tuple[int, int], int] = {}
  while len(table) < len(elements) ** 2:
    size = len(elements)
    for a in range(size):
      for b in range(size):
        if (a, b) not in table:
          table[(a, b)] = add(compose_elements(elements[a], elements[b]))

  size = len(elements)
  composition = tuple(tuple(table[(a, b)] for b in range(size)) for a in range(size))
  generators = _generators(root, add)
  partial = GroupTable(tuple(elements), composition, identity, generators)
  relations = detect_relations(partial)
  logger.info(
    "automorphism group closed",
    order=len(elements),
    from_seed_pairs=from_pairs,
    added=len(elements) - from_pairs,
    seeds=len(g),
  )
  return GroupTable(tuple(elements), composition, identity, generators, relations)


def _similar_permutations(b: ExchangeMatrix, root: ExchangeMatrix) -> list[Permutation]:
  return [sigma for sigma in all_permutations(b.n) if matrices_similar(b, root, sigma)]


def _generators(root: Seed, add: Callable[[AutGroupElement], int]) -> dict[int, int]:
  generators: dict[int, int] = {}
  for k in range(1, root.n + 1):
    neighbour = mutate_seed(root, k)
    if matrices_similar(neighbour.matrix, root.matrix, Permutation.identity(root.n)):
      generators[k] = add(AutGroupElement(neighbour.cluster))
  return generators


def detect_relations(table: GroupTable) -> tuple[Relation, ...]:
  """
  Relations `T_k^m = 1` for each generator and `(T_i T_j)^m = 1` for each pair, with m the least
  power at most twelve that gives the identity.

  Only these two shapes are searched for, so the result is a partial presentation: relations of
  any other shape, or with a larger power, are not reported.
  """
  relations: list[Relation] = []
  names = sorted(table.generators)
  for k in names:
    m = _least_power(table, table.generators[k])
    if m is not None:
      relations.append(Relation((k,), m))
  for x, i in enumerate(names):
    for j in names[x + 1 :]:
      product = table.compose(table.generators[i], table.generators[j])
      m = _least_power(table, product)
      if m is not None:
        relations.append(Relation((i, j), m))
  return tuple(relations)


def _least_power(table: GroupTable, a: int) -> int | None:
  current = a
  for m in range(1, MAX_RELATION_POWER + 1):
    if current == table.identity:
      return m
    current = table.compose(current, a)
  return None


def similarity_classes(g: MutationClassGraph) -> list[list[int]]:
  """
  Partitions the explored seeds by σ-similarity of their matrices under any σ and ε, classes
  ordered by their first seed.
  """
  return matrix_similarity_classes([seed.matrix for seed in g.seeds])


def matrix_similarity_classes(matrices: Sequence[ExchangeMatrix]) -> list[list[int]]:
  classes: dict[tuple[tuple[int, ...], ...], list[int]] = {}
  cache: dict[ExchangeMatrix, tuple[tuple[int, ...], ...]] = {}
  for i, b in enumerate(matrices):
    if b not in cache:
      cache[b] = similarity_class_key(b)
    classes.setdefault(cache[b], []).append(i)
  return list(classes.values())


class GroupReport(BaseModel):
  """JSON form of a group table."""

  model_config = ConfigDict(frozen=True)

  order: int
  identity: int
  elements: list[list[list[dict[str, Any]]]]
  """Per element, the exact terms of the image of each initial variable."""
  element_text: list[str]
  element_orders: list[int]
  composition: list[list[int]]
  generators: dict[str, int]
  relations: list[str]
  """Only `T_k^m = 1` and `(T_i T_j)^m = 1` with m at most twelve are searched for, so this is a
  partial presentation of the group."""

  @classmethod
  def from_table(cls, table: GroupTable) -> "GroupReport":
    return cls(
      order=table.order,
      identity=table.identity,
      elements=[[y.to_json() for y in e.images] for e in table.elements],
      element_text=[e.render() for e in table.elements],
      element_orders=[table.element_order(a) for a in range(table.order)],
      composition=[list(row) for row in table.composition],
      generators={f"T{k}": index for k, index in sorted(table.generators.items())},
      relations=[str(r) for r in table.relations],
    )
