from .explore import (
  MutationClassGraph,
  TruncationReason,
  check_cluster_determines_quiver,
  cluster_variables,
  explore,
  unlabeled_clusters,
  verify_positivity,
)
from .model import MutationWord, Seed
from .mutation import (
  LaurentPhenomenonViolation,
  apply_automorphism_to_seed,
  apply_word,
  exchange_binomial,
  initial_seed,
  mutate_seed,
  relabel_seed,
)

__all__ = [
  "LaurentPhenomenonViolation",
  "MutationClassGraph",
  "MutationWord",
  "Seed",
  "TruncationReason",
  "apply_automorphism_to_seed",
  "apply_word",
  "check_cluster_determines_quiver",
  "cluster_variables",
  "exchange_binomial",
  "explore",
  "initial_seed",
  "mutate_seed",
  "relabel_seed",
  "unlabeled_clusters",
  "verify_positivity",
]
