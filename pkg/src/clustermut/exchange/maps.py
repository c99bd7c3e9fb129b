"""Exchange maps and the seed-level criteria for them being cluster isomorphisms."""

from collections.abc import Sequence

import structlog

from ..core.errors import check_rank
from ..core.permutation import Permutation
from ..laurent.poly import LaurentPoly, permute_variables, substitute
from ..quiver.model import ValuedQuiver
from ..quiver.similarity import SimilarityWitness, matrices_similar
from ..seeds.mutation import apply_word, exchange_binomial, initial_seed, mutate_seed
from .model import ExchangeMap, rerooted

logger = structlog.get_logger(__name__)


def apply_map(m: ExchangeMap, f: LaurentPoly) -> LaurentPoly | None:
  """
  Substitutes the target's σ(i)-th cluster entry for x_i in f.

  Returns:
    The image, or None if it is not a Laurent polynomial in the ambient variables.
  """
  check_rank(m.n, f.n, "polynomial")
  return substitute(f, m.images)


def similarity_witness(m: ExchangeMap) -> SimilarityWitness | None:
  """
  The witness that the target's matrix is `ε σ(B)` for the source's matrix B, the relation
  under which `x_i -> y_σ(i)` carries exchange relations onto exchange relations.
  """
  return matrices_similar(m.target.matrix, m.source.matrix, m.sigma)


def commutes_with_mutation(m: ExchangeMap) -> bool:
  """
  Whether, for every direction k, the map sends the source's mutated k-th variable to the
  target's mutated σ(k)-th variable.
  """
  formal = rerooted(m.source)
  for k in range(1, m.n + 1):
    mutated_source = mutate_seed(formal, k).cluster[k - 1]
    image = apply_map(m, mutated_source)
    sk = m.sigma(k)
    expected = mutate_seed(m.target, sk).cluster[sk - 1]
    if image != expected:
      logger.debug("exchange map breaks mutation", k=k, image=str(image), expected=str(expected))
      return False
  return True


def is_cluster_isomorphism(m: ExchangeMap) -> bool:
  """
  Decided on matrices alone: the map is a cluster isomorphism exactly when the two seeds are
  σ-similar. `verify_isomorphism_bruteforce` checks the same thing on clusters.
  """
  return similarity_witness(m) is not None


def transport_holds(m: ExchangeMap, word: Sequence[int]) -> bool:
  """
  Whether the image of the cluster at `word` from the source is the cluster at `σ(word)` from
  the target, entry i landing on entry σ(i).
  """
  source = apply_word(rerooted(m.source), word)
  target = apply_word(m.target, m.sigma.apply_to_word(word))
  for i, y in enumerate(source.cluster, start=1):
    if apply_map(m, y) != target.cluster[m.sigma(i) - 1]:
      return False
  return True


def transported_seeds_similar(m: ExchangeMap, word: Sequence[int]) -> bool:
  """Whether the seeds at `word` and `σ(word)` are again σ-similar."""
  source = apply_word(m.source, word)
  target = apply_word(m.target, m.sigma.apply_to_word(word))
  return matrices_similar(target.matrix, source.matrix, m.sigma) is not None


def binomials_match(q: ValuedQuiver, q2: ValuedQuiver, sigma: Permutation) -> bool:
  """
  Whether every exchange binomial of q, with indices transported by σ, is the exchange
  binomial of q2 in the transported direction. For connected quivers this holds exactly when
  `B(q2) == ε σ(B(q))`.
  """
  p, p2 = initial_seed(q), initial_seed(q2)
  return all(
    permute_variables(sigma, exchange_binomial(p, k)) == exchange_binomial(p2, sigma(k))
    for k in range(1, q.n + 1)
  )
