"""Mutation of exchange matrices and valued quivers."""

from collections import deque
from collections.abc import Callable
from dataclasses import dataclass

import structlog

from ..core.errors import check_index
from .model import ExchangeMatrix, ValuedQuiver

logger = structlog.get_logger(__name__)


def _sign(x: int) -> int:
  return (x > 0) - (x < 0)


def mutate_matrix(b: ExchangeMatrix, k: int) -> ExchangeMatrix:
  """
  Matrix mutation in direction k.

  Entries in row or column k are negated; every other entry becomes
  `b_ij + sign(b_ik) * max(0, b_ik * b_kj)`, with `sign(0) == 0`.

  Raises:
    IndexOutOfRange: If k is not a vertex.
  """
  b.check_vertex(k)
  n = b.n
  kk = k - 1
  src = b.entries
  rows: list[tuple[int, ...]] = []
  for i in range(n):
    b_ik = src[i][kk]
    if i == kk:
      rows.append(tuple(-v for v in src[i]))
      continue
    row = []
    for j in range(n):
      b_ij = src[i][j]
      if j == kk:
        row.append(-b_ij)
      else:
        row.append(b_ij + _sign(b_ik) * max(0, b_ik * src[kk][j]))
    rows.append(tuple(row))
  return ExchangeMatrix(tuple(rows))


def mutate_quiver(q: ValuedQuiver, k: int) -> ValuedQuiver:
  """
  Quiver mutation at vertex k, applied to the arrows and their valuations:

  1. arrows through k are reversed and their valuations swapped;
  2. for each path i -> k -> j with no arrow between i and j, an arrow i -> j valued
     `(v_ik v_kj, v_ki v_jk)` is added, or that amount is added onto an existing i -> j;
  3. an opposing arrow j -> i is shortened, flipped or removed depending on whether
     `v_ik v_kj` is smaller than, larger than or equal to `v_ij`.

  The symmetrizer is unchanged.
  """
  check_index(k, q.n)
  original = q.arrow_map()
  arrows: dict[tuple[int, int], tuple[int, int]] = {}

  for (i, j), (v_ij, v_ji) in original.items():
    if k in (i, j):
      arrows[(j, i)] = (v_ji, v_ij)
    else:
      arrows[(i, j)] = (v_ij, v_ji)

  into_k = [(i, v) for (i, t), v in original.items() if t == k]
  out_of_k = [(j, v) for (s, j), v in original.items() if s == k]
  for i, (v_ik, v_ki) in into_k:
    for j, (v_kj, v_jk) in out_of_k:
      forward, backward = v_ik * v_kj, v_ki * v_jk
      if (i, j) in original:
        v_ij, v_ji = original[(i, j)]
        arrows[(i, j)] = (v_ij + forward, v_ji + backward)
      elif (j, i) in original:
        v_ji, v_ij = original[(j, i)]
        if forward < v_ij:
          arrows[(j, i)] = (v_ji - backward, v_ij - forward)
        elif forward > v_ij:
          del arrows[(j, i)]
          arrows[(i, j)] = (forward - v_ij, abs(v_ji - backward))
        else:
          del arrows[(j, i)]
      else:
        arrows[(i, j)] = (forward, backward)

  return ValuedQuiver.build(q.n, ((i, j, v) for (i, j), v in arrows.items()), q.d)


@dataclass(frozen=True, slots=True)
class MatrixClass:
  """The part of a matrix mutation class reached by a breadth-first walk."""

  matrices: tuple[ExchangeMatrix, ...]
  words: tuple[tuple[int, ...], ...]
  """The BFS-tree mutation sequence reaching each matrix, applied left to right."""
  complete: bool
  """True when the walk ran out of new matrices before hitting a limit."""
  found: int | None = None
  """Index of the first matrix accepted by the walk's stop predicate, if one was given."""

  def __len__(self) -> int:
    return len(self.matrices)


def walk_matrix_class(
  b: ExchangeMatrix,
  max_states: int,
  max_depth: int,
  stop: Callable[[ExchangeMatrix], bool] | None = None,
) -> MatrixClass:
  """
  Breadth-first walk over the matrices mutation-equivalent to `b`, deduplicated by exact
  equality, directions tried in ascending order.
  """
  matrices = [b]
  words: list[tuple[int, ...]] = [()]
  index = {b: 0}
  if stop is not None and stop(b):
    return MatrixClass(tuple(matrices), tuple(words), complete=False, found=0)

  frontier = deque([0])
  truncated = False
  while frontier:
    current = frontier.popleft()
    word = words[current]
    if len(word) >= max_depth:
      if any(mutate_matrix(matrices[current], k) not in index for k in b.index_range()):
        truncated = True
      continue
    for k in b.index_range():
      mutated = mutate_matrix(matrices[current], k)
      if mutated in index:
        continue
      if len(matrices) >= max_states:
        truncated = True
        frontier.clear()
        break
      index[mutated] = len(matrices)
      matrices.append(mutated)
      words.append(word + (k,))
      if stop is not None and stop(mutated):
        return MatrixClass(tuple(matrices), tuple(words), complete=False, found=len(matrices) - 1)
      frontier.append(len(matrices) - 1)

  logger.debug("matrix class walk finished", states=len(matrices), truncated=truncated)
  return MatrixClass(tuple(matrices), tuple(words), complete=not truncated)


def matrix_mutation_class(
  b: ExchangeMatrix, max_states: int = 20000, max_depth: int = 64
) -> MatrixClass:
  """Every matrix reachable from `b` by mutation, up to the given limits."""
  return walk_matrix_class(b, max_states, max_depth)
