import math
from fractions import Fraction

import networkx as nx
import structlog

from .model import ExchangeMatrix

logger = structlog.get_logger(__name__)


def nonzero_pattern(b: ExchangeMatrix) -> nx.Graph:
  """The undirected graph on 1..n with an edge wherever `b_ij != 0`."""
  graph = nx.Graph()
  graph.add_nodes_from(b.index_range())
  graph.add_edges_from(
    (i, j) for i in b.index_range() for j in b.index_range() if i < j and b[i, j] != 0
  )
  return graph


def find_symmetrizer(b: ExchangeMatrix) -> tuple[int, ...] | None:
  """
  Finds the minimal positive integer tuple `d` with `d_i * b_ij == -d_j * b_ji`.

  Each connected component of the nonzero pattern is solved independently: the ratios
  `d_j / d_i = -b_ij / b_ji` are propagated along a BFS tree as exact fractions, every
  remaining constraint is checked, and the component is scaled to its least integral solution.
  Isolated vertices get 1.

  Returns:
    The symmetrizer, or None if the matrix is not skew-symmetrizable.
  """
  for i in b.index_range():
    if b[i, i] != 0:
      return None
    for j in b.index_range():
      if (b[i, j] == 0) != (b[j, i] == 0):
        return None
      if b[i, j] != 0 and (b[i, j] > 0) == (b[j, i] > 0):
        return None

  pattern = nonzero_pattern(b)
  d: dict[int, int] = {}
  for component in nx.connected_components(pattern):
    root = min(component)
    ratios = {root: Fraction(1)}
    for i, j in nx.bfs_edges(pattern, root):
      ratios[j] = ratios[i] * Fraction(-b[i, j], b[j, i])

    for i in component:
      for j in component:
        if ratios[i] * b[i, j] != -ratios[j] * b[j, i]:
          logger.debug("symmetrizer constraint failed", i=i, j=j)
          return None

    scale = math.lcm(*(r.denominator for r in ratios.values()))
    scaled = {v: int(r * scale) for v, r in ratios.items()}
    common = math.gcd(*scaled.values())
    d.update({v: value // common for v, value in scaled.items()})

  return tuple(d[i] for i in b.index_range())


def is_symmetrizer(d: tuple[int, ...], b: ExchangeMatrix) -> bool:
  return len(d) == b.n and all(
    d[i - 1] * b[i, j] == -d[j - 1] * b[j, i] for i in b.index_range() for j in b.index_range()
  )
