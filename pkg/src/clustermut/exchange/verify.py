"""
Brute-force checks of exchange maps against explored exchange graphs, independent of the
matrix criterion used by `is_cluster_isomorphism`.
"""

from dataclasses import dataclass

import structlog

from ..core.errors import ClusterMutError
from ..seeds.explore import MutationClassGraph, cluster_variables, unlabeled_clusters
from ..seeds.model import MutationWord
from .maps import apply_map
from .model import ExchangeMap, rerooted

logger = structlog.get_logger(__name__)


class IncompleteGraph(ClusterMutError):
  """Raised when a full verdict needs a completely explored mutation class."""


class GraphRootMismatch(ClusterMutError, ValueError):
  """Raised when a graph is not rooted where an exchange map needs it."""


@dataclass(frozen=True, slots=True)
class BruteForceVerdict:
  holds: bool
  checked: int
  """Number of source seeds examined."""
  witness: MutationWord | None = None
  """Source word of the first seed whose image is wrong."""
  reason: str | None = None

  def __bool__(self) -> bool:
    return self.holds


def _check_source_root(m: ExchangeMap, g_source: MutationClassGraph) -> None:
  if g_source.seeds[g_source.initial] != rerooted(m.source):
    raise GraphRootMismatch(
      "The source graph must be explored from the source quiver in its own variables"
    )


def verify_isomorphism_bruteforce(
  m: ExchangeMap,
  g_source: MutationClassGraph,
  g_target: MutationClassGraph,
  require_complete: bool = True,
) -> BruteForceVerdict:
  """
  Walks every seed of the source class, reached by word w, and checks that the map sends its
  i-th cluster entry to the σ(i)-th entry of the seed reached from the target by σ(w). With
  complete graphs it also checks that every target cluster is hit, so the map is a bijection
  on clusters.

  Args:
    g_source: The class of `initial_seed(m.source.quiver)`, in the source's own variables.
    g_target: An explored class containing the target seed.
    require_complete: When False, words leaving the explored part of either graph are skipped
      and surjectivity is not checked.

  Raises:
    IncompleteGraph: If a graph is truncated and `require_complete` is set.
    GraphRootMismatch: If the graphs do not contain the map's seeds as described.
  """
  if require_complete and not (g_source.complete and g_target.complete):
    raise IncompleteGraph("Brute-force verification needs both classes fully explored")
  _check_source_root(m, g_source)
  start = g_target.index_of(m.target)
  if start is None:
    raise GraphRootMismatch("The target seed does not appear in the target graph")

  step = {(src, k): dst for src, k, dst in g_target.edges}
  reached: set[frozenset] = set()
  checked = 0
  for index, seed in enumerate(g_source.seeds):
    word = g_source.words[index]
    position: int | None = start
    for k in m.sigma.apply_to_word(word):
      position = step.get((position, k))
      if position is None:
        break
    if position is None:
      if require_complete:
        raise IncompleteGraph(f"Word {m.sigma.apply_to_word(word)} leaves the target graph")
      continue

    target = g_target.seeds[position]
    checked += 1
    for i, y in enumerate(seed.cluster, start=1):
      image = apply_map(m, y)
      if image is None:
        return BruteForceVerdict(False, checked, word, f"image of entry {i} is not Laurent")
      if image != target.cluster[m.sigma(i) - 1]:
        return BruteForceVerdict(False, checked, word, f"image of entry {i} is not a cluster entry")
    reached.add(frozenset(target.cluster))

  if require_complete and reached != unlabeled_clusters(g_target):
    missing = len(unlabeled_clusters(g_target) - reached)
    return BruteForceVerdict(False, checked, None, f"{missing} target clusters are never hit")
  return BruteForceVerdict(True, checked)


def is_variable_preserver(
  m: ExchangeMap, g_source: MutationClassGraph, g_target: MutationClassGraph
) -> bool:
  """
  Whether every cluster variable of the source class maps to a cluster variable of the target.

  Raises:
    IncompleteGraph: If either graph is truncated, since membership is then undecidable.
  """
  if not (g_source.complete and g_target.complete):
    raise IncompleteGraph("Preservation of cluster variables needs both classes fully explored")
  _check_source_root(m, g_source)
  targets = set(cluster_variables(g_target))
  for y in cluster_variables(g_source):
    image = apply_map(m, y)
    if image is None or image not in targets:
      logger.debug("cluster variable not preserved", variable=str(y), image=str(image))
      return False
  return True
