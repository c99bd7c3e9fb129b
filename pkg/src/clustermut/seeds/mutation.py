"""The exchange relation and the seed-level actions built on it."""

from collections.abc import Iterable

import structlog

from ..core.errors import ClusterMutError, check_rank
from ..core.permutation import Permutation
from ..laurent.poly import LaurentPoly, exact_divide, permute_variables
from ..quiver.model import ValuedQuiver, matrix_from_quiver
from ..quiver.mutation import mutate_matrix
from ..quiver.similarity import permute_matrix
from .model import Seed

logger = structlog.get_logger(__name__)


class LaurentPhenomenonViolation(ClusterMutError, ArithmeticError):
  """Raised when an exchange relation does not divide exactly; never happens for valid seeds."""


def initial_seed(q: ValuedQuiver) -> Seed:
  return Seed(LaurentPoly.variables(q.n), matrix_from_quiver(q), q.d)


def exchange_binomial(p: Seed, k: int) -> LaurentPoly:
  """
  `f = prod_{b_ik > 0} y_i^b_ik + prod_{b_ik < 0} y_i^-b_ik` over the cluster entries y_i,
  read off column k of the exchange matrix. Empty products are 1.
  """
  p.matrix.check_vertex(k)
  n_vars = p.cluster[0].n
  into = LaurentPoly.one(n_vars)
  out = LaurentPoly.one(n_vars)
  for i, b_ik in enumerate(p.matrix.column(k)):
    if b_ik > 0:
      into = into * p.cluster[i] ** b_ik
    elif b_ik < 0:
      out = out * p.cluster[i] ** -b_ik
  return into + out


def mutate_seed(p: Seed, k: int) -> Seed:
  """
  Replaces `y_k` by `f / y_k` and mutates the matrix in direction k.

  Raises:
    IndexOutOfRange: If k is not a vertex.
    LaurentPhenomenonViolation: If the exchange relation does not divide exactly.
  """
  f = exchange_binomial(p, k)
  replaced = exact_divide(f, p.cluster[k - 1])
  if replaced is None:
    logger.error("exchange relation is not exact", k=k, binomial=str(f), seed=str(p))
    raise LaurentPhenomenonViolation(f"{f} is not divisible by {p.cluster[k - 1]} at k={k}")
  cluster = p.cluster[: k - 1] + (replaced,) + p.cluster[k:]
  return Seed(cluster, mutate_matrix(p.matrix, k), p.d)


def apply_word(p: Seed, word: Iterable[int]) -> Seed:
  """Applies mutations left to right, so `apply_word(p, (1, 2))` is μ_2 μ_1 p."""
  for k in word:
    p = mutate_seed(p, k)
  return p


def apply_automorphism_to_seed(sigma: Permutation, p: Seed) -> Seed:
  """
  Entry i of the new cluster is `σ(y_i)`, the substitution `t_j -> t_σ(j)` applied to y_i;
  the matrix and symmetrizer are relabelled by σ.
  """
  check_rank(p.n, sigma.n, "permutation")
  inv = sigma.inverse
  return Seed(
    tuple(permute_variables(sigma, y) for y in p.cluster),
    permute_matrix(sigma, p.matrix),
    tuple(p.d[inv(i) - 1] for i in range(1, p.n + 1)),
  )


def relabel_seed(sigma: Permutation, p: Seed) -> Seed:
  """
  Moves the entry at position i to position σ(i), relabelling the matrix to match. The result
  is the same seed under new labels, and is σ-similar to p.
  """
  check_rank(p.n, sigma.n, "permutation")
  inv = sigma.inverse
  return Seed(
    tuple(p.cluster[inv(i) - 1] for i in range(1, p.n + 1)),
    permute_matrix(sigma, p.matrix),
    tuple(p.d[inv(i) - 1] for i in range(1, p.n + 1)),
  )
