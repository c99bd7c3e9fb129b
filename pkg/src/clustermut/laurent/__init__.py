from .normal_form import NormalForm, is_positive, normal_form
from .poly import (
  LaurentDivisionByZero,
  LaurentPoly,
  ZeroImage,
  ZeroPolynomial,
  add,
  exact_divide,
  mul,
  neg,
  permute_variables,
  render,
  substitute,
)

__all__ = [
  "LaurentDivisionByZero",
  "LaurentPoly",
  "NormalForm",
  "ZeroImage",
  "ZeroPolynomial",
  "add",
  "exact_divide",
  "is_positive",
  "mul",
  "neg",
  "normal_form",
  "permute_variables",
  "render",
  "substitute",
]
