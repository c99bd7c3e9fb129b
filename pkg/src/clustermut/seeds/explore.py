"""Breadth-first exploration of a seed's mutation class."""

from collections import deque
from dataclasses import dataclass
from enum import StrEnum

import networkx as nx
import structlog

from ..laurent.normal_form import is_positive
from ..laurent.poly import LaurentPoly
from ..quiver.model import ExchangeMatrix, ValuedQuiver
from .model import MutationWord, Seed, poly_sort_key
from .mutation import initial_seed, mutate_seed

logger = structlog.get_logger(__name__)

DEFAULT_MAX_SEEDS = 20000
DEFAULT_MAX_DEPTH = 64


class TruncationReason(StrEnum):
  SEED_CAP = "seed_cap"
  DEPTH_CAP = "depth_cap"


@dataclass(frozen=True, slots=True)
class MutationClassGraph:
  """
  The labeled seeds reached from an initial seed, numbered in BFS order with directions tried
  in ascending order. `edges` holds `(source, k, target)` in both directions.
  """

  seeds: tuple[Seed, ...]
  words: tuple[MutationWord, ...]
  """The BFS-tree mutation word reaching each seed from the initial one."""
  edges: frozenset[tuple[int, int, int]]
  complete: bool
  truncation: TruncationReason | None = None
  initial: int = 0

  @property
  def n(self) -> int:
    return self.seeds[self.initial].n

  def __len__(self) -> int:
    return len(self.seeds)

  def index_of(self, seed: Seed) -> int | None:
    return self._index().get(seed.key)

  def _index(self) -> dict[tuple[tuple[LaurentPoly, ...], ExchangeMatrix], int]:
    return {s.key: i for i, s in enumerate(self.seeds)}

  def neighbour(self, index: int, k: int) -> int | None:
    for src, direction, dst in self.edges:
      if src == index and direction == k:
        return dst
    return None

  def to_networkx(self) -> nx.Graph:
    """The exchange graph, one node per labeled seed and the direction on each edge."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(self.seeds)))
    graph.add_edges_from((src, dst, {"k": k}) for src, k, dst in self.edges)
    return graph


def explore(
  q: ValuedQuiver, max_seeds: int = DEFAULT_MAX_SEEDS, max_depth: int = DEFAULT_MAX_DEPTH
) -> MutationClassGraph:
  """
  Explores the mutation class of `initial_seed(q)`, deduplicating labeled seeds by exact
  equality of cluster and matrix. Infinite classes are cut off at the limits and reported
  with `complete=False` and the reason.
  """
  if max_seeds < 1 or max_depth < 1:
    raise ValueError("Exploration limits must be positive")
  log = logger.bind(n=q.n, max_seeds=max_seeds, max_depth=max_depth)

  start = initial_seed(q)
  seeds: list[Seed] = [start]
  words: list[MutationWord] = [()]
  index = {start.key: 0}
  edges: set[tuple[int, int, int]] = set()
  frontier = deque([0])
  truncation: TruncationReason | None = None

  while frontier:
    current = frontier.popleft()
    word = words[current]
    at_depth_cap = len(word) >= max_depth
    for k in range(1, q.n + 1):
      mutated = mutate_seed(seeds[current], k)
      found = index.get(mutated.key)
      if found is None:
        if at_depth_cap:
          truncation = truncation or TruncationReason.DEPTH_CAP
          continue
        if len(seeds) >= max_seeds:
          truncation = TruncationReason.SEED_CAP
          frontier.clear()
          break
        found = len(seeds)
        index[mutated.key] = found
        seeds.append(mutated)
        words.append(word + (k,))
        frontier.append(found)
        if found % 1000 == 0:
          log.debug("exploring", seeds=found, depth=len(word) + 1, frontier=len(frontier))
      edges.add((current, k, found))
      edges.add((found, k, current))

  complete = truncation is None
  if complete:
    log.debug("mutation class closed", seeds=len(seeds))
  else:
    log.info("exploration truncated", seeds=len(seeds), reason=str(truncation))
  return MutationClassGraph(
    seeds=tuple(seeds),
    words=tuple(words),
    edges=frozenset(edges),
    complete=complete,
    truncation=truncation,
  )


def cluster_variables(g: MutationClassGraph) -> tuple[LaurentPoly, ...]:
  """Every distinct cluster entry of every explored seed, in a canonical order."""
  return tuple(sorted({y for seed in g.seeds for y in seed.cluster}, key=poly_sort_key))


def unlabeled_clusters(g: MutationClassGraph) -> set[frozenset[LaurentPoly]]:
  """Clusters with their labelling forgotten."""
  return {frozenset(seed.cluster) for seed in g.seeds}


def verify_positivity(g: MutationClassGraph) -> bool:
  for y in cluster_variables(g):
    if not is_positive(y):
      logger.info("cluster variable is not positive", variable=str(y))
      return False
  return True


def check_cluster_determines_quiver(g: MutationClassGraph) -> bool:
  """Whether no two explored seeds share a labeled cluster while differing in matrix."""
  matrices: dict[tuple[LaurentPoly, ...], ExchangeMatrix] = {}
  for seed in g.seeds:
    previous = matrices.setdefault(seed.cluster, seed.matrix)
    if previous != seed.matrix:
      logger.info("cluster carries two quivers", cluster=seed.cluster_text())
      return False
  return True
