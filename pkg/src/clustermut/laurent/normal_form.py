from dataclasses import dataclass
from typing import override

from .poly import LaurentPoly, ZeroPolynomial, render


@dataclass(frozen=True, slots=True)
class NormalForm:
  """
  `f == numerator / prod x_i^alpha_i` with the numerator an ordinary polynomial that no single
  variable divides.
  """

  numerator: LaurentPoly
  alpha: tuple[int, ...]

  def to_laurent(self) -> LaurentPoly:
    return self.numerator.shift(tuple(-a for a in self.alpha))

  def render(self, var: str = "x") -> str:
    """Negative entries of alpha are written into the numerator, so `t1` renders as `t1`."""
    top = self.numerator.shift(tuple(max(-a, 0) for a in self.alpha))
    numerator = render(top, var)
    if not any(a > 0 for a in self.alpha):
      return numerator
    if len(top.terms) > 1:
      numerator = f"({numerator})"
    factors = []
    for i, a in enumerate(self.alpha, start=1):
      if a == 1:
        factors.append(f"{var}{i}")
      elif a > 1:
        factors.append(f"{var}{i}^{a}")
    denominator = factors[0] if len(factors) == 1 else "(" + "*".join(factors) + ")"
    return f"{numerator} / {denominator}"

  @override
  def __str__(self) -> str:
    return self.render()


def normal_form(f: LaurentPoly) -> NormalForm:
  """
  Raises:
    ZeroPolynomial: If f is zero.
  """
  if f.is_zero():
    raise ZeroPolynomial("The zero polynomial has no normal form")
  alpha = tuple(-m for m in f.min_exponents())
  return NormalForm(numerator=f.shift(alpha), alpha=alpha)


def is_positive(f: LaurentPoly) -> bool:
  """Whether every coefficient of the normal-form numerator is positive."""
  return all(c > 0 for _, c in normal_form(f).numerator.terms)
