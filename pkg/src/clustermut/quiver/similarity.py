"""
The permutation action on matrices and quivers, and σ-similarity.

Permutations act by relocation: `σ(B)_ij = B_{σ⁻¹(i) σ⁻¹(j)}` and `σ(d)_i = d_{σ⁻¹(i)}`, so
vertex i of the original lands on vertex σ(i). Two quivers are σ-similar when
`B(Q) == ε σ(B(Q'))` for a sign ε.
"""

from dataclasses import dataclass
from typing import Literal, override

from ..core.errors import RankTooLarge, check_rank
from ..core.permutation import Permutation, all_permutations
from .model import ExchangeMatrix, ValuedQuiver, matrix_from_quiver

MAX_SEARCH_RANK = 10

Sign = Literal[1, -1]


@dataclass(frozen=True, slots=True)
class SimilarityWitness:
  sigma: Permutation
  epsilon: Sign

  @override
  def __str__(self) -> str:
    return f"σ={self.sigma} ε={'+1' if self.epsilon > 0 else '-1'}"


def permute_matrix(sigma: Permutation, b: ExchangeMatrix) -> ExchangeMatrix:
  check_rank(b.n, sigma.n, "permutation")
  inv = sigma.inverse
  return ExchangeMatrix(
    tuple(tuple(b[inv(i), inv(j)] for j in b.index_range()) for i in b.index_range())
  )


def apply_automorphism_to_quiver(sigma: Permutation, q: ValuedQuiver) -> ValuedQuiver:
  """Relabels every vertex i as σ(i), carrying arrows, valuations and symmetrizer along."""
  check_rank(q.n, sigma.n, "permutation")
  inv = sigma.inverse
  return ValuedQuiver.build(
    q.n,
    ((sigma(a.source), sigma(a.target), a.v) for a in q.arrows),
    tuple(q.d[inv(i) - 1] for i in range(1, q.n + 1)),
  )


def opposite_quiver(q: ValuedQuiver) -> ValuedQuiver:
  return ValuedQuiver.build(q.n, ((a.target, a.source, (a.v[1], a.v[0])) for a in q.arrows), q.d)


def matrices_similar(
  b: ExchangeMatrix, b2: ExchangeMatrix, sigma: Permutation
) -> SimilarityWitness | None:
  """Matrix form of `is_sigma_similar`: tests `b == ε σ(b2)`, preferring ε = +1."""
  check_rank(b.n, b2.n, "matrix")
  moved = permute_matrix(sigma, b2)
  if moved == b:
    return SimilarityWitness(sigma, 1)
  if -moved == b:
    return SimilarityWitness(sigma, -1)
  return None


def is_sigma_similar(
  q: ValuedQuiver, q2: ValuedQuiver, sigma: Permutation
) -> SimilarityWitness | None:
  return matrices_similar(matrix_from_quiver(q), matrix_from_quiver(q2), sigma)


def _check_search_rank(n: int, operation: str) -> None:
  if n > MAX_SEARCH_RANK:
    raise RankTooLarge(n, MAX_SEARCH_RANK, operation)


def find_matrix_similarities(b: ExchangeMatrix, b2: ExchangeMatrix) -> list[SimilarityWitness]:
  check_rank(b.n, b2.n, "matrix")
  _check_search_rank(b.n, "similarity search")
  return [w for sigma in all_permutations(b.n) if (w := matrices_similar(b, b2, sigma))]


def find_similarities(q: ValuedQuiver, q2: ValuedQuiver) -> list[SimilarityWitness]:
  """Every witness `(σ, ε)` of `B(q) == ε σ(B(q2))`, σ in lexicographic order."""
  return find_matrix_similarities(matrix_from_quiver(q), matrix_from_quiver(q2))


def quiver_automorphisms(q: ValuedQuiver) -> list[Permutation]:
  """Every σ with `σ(B(Q)) == B(Q)`, lexicographic; always contains the identity."""
  _check_search_rank(q.n, "automorphism search")
  b = matrix_from_quiver(q)
  return [sigma for sigma in all_permutations(q.n) if permute_matrix(sigma, b) == b]


def similarity_class_key(b: ExchangeMatrix) -> tuple[tuple[int, ...], ...]:
  """
  A canonical representative of `{ε σ(b)}`: two matrices are similar under some σ and ε
  exactly when their keys are equal.
  """
  _check_search_rank(b.n, "similarity classification")
  best: tuple[tuple[int, ...], ...] | None = None
  for sigma in all_permutations(b.n):
    moved = permute_matrix(sigma, b)
    for candidate in (moved.entries, (-moved).entries):
      if best is None or candidate < best:
        best = candidate
  assert best is not None
  return best
