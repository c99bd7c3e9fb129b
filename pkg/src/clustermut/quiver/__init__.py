from .model import (
  Arrow,
  ExchangeMatrix,
  InvalidQuiver,
  NotSkewSymmetrizable,
  ValuedQuiver,
  matrix_from_quiver,
  quiver_from_matrix,
)
from .mutation import matrix_mutation_class, mutate_matrix, mutate_quiver
from .similarity import (
  SimilarityWitness,
  apply_automorphism_to_quiver,
  find_similarities,
  is_sigma_similar,
  opposite_quiver,
  permute_matrix,
  quiver_automorphisms,
)
from .symmetrizer import find_symmetrizer

__all__ = [
  "Arrow",
  "ExchangeMatrix",
  "InvalidQuiver",
  "NotSkewSymmetrizable",
  "SimilarityWitness",
  "ValuedQuiver",
  "apply_automorphism_to_quiver",
  "find_similarities",
  "find_symmetrizer",
  "is_sigma_similar",
  "matrix_from_quiver",
  "matrix_mutation_class",
  "mutate_matrix",
  "mutate_quiver",
  "opposite_quiver",
  "permute_matrix",
  "quiver_automorphisms",
  "quiver_from_matrix",
]
