from .group import (
  GroupReport,
  GroupTable,
  InfiniteOrTruncatedClass,
  Relation,
  automorphism_group,
  matrix_similarity_classes,
  similarity_classes,
)
from .maps import (
  apply_map,
  binomials_match,
  commutes_with_mutation,
  is_cluster_isomorphism,
  similarity_witness,
  transport_holds,
  transported_seeds_similar,
)
from .model import AutGroupElement, ExchangeMap, rerooted
from .verify import (
  BruteForceVerdict,
  GraphRootMismatch,
  IncompleteGraph,
  is_variable_preserver,
  verify_isomorphism_bruteforce,
)

__all__ = [
  "AutGroupElement",
  "BruteForceVerdict",
  "ExchangeMap",
  "GraphRootMismatch",
  "GroupReport",
  "GroupTable",
  "IncompleteGraph",
  "InfiniteOrTruncatedClass",
  "Relation",
  "apply_map",
  "automorphism_group",
  "binomials_match",
  "commutes_with_mutation",
  "is_cluster_isomorphism",
  "is_variable_preserver",
  "matrix_similarity_classes",
  "rerooted",
  "similarity_classes",
  "similarity_witness",
  "transport_holds",
  "transported_seeds_similar",
  "verify_isomorphism_bruteforce",
]
