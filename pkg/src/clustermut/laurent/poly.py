"""
Sparse Laurent polynomials in n variables over the integers.

A polynomial is stored as a tuple of `(exponents, coefficient)` terms with no zero coefficients,
sorted ascending by graded-lexicographic key `(total degree, exponents)`. Equal values therefore
always have identical term tuples, which makes them safe dictionary keys.
"""

import heapq
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Any, override

from ..core.errors import ClusterMutError, check_index, check_rank
from ..core.permutation import Permutation

Exponents = tuple[int, ...]
Term = tuple[Exponents, int]


class LaurentDivisionByZero(ClusterMutError, ZeroDivisionError):
  """Raised when dividing by the zero polynomial."""


class ZeroImage(ClusterMutError, ValueError):
  """Raised when a substitution maps a variable to zero."""


class ZeroPolynomial(ClusterMutError, ValueError):
  """Raised when an operation requires a nonzero polynomial."""


def grlex_key(exponents: Exponents) -> tuple[int, Exponents]:
  return sum(exponents), exponents


@dataclass(frozen=True, slots=True)
class LaurentPoly:
  n: int
  terms: tuple[Term, ...] = ()

  @classmethod
  def from_terms(cls, n: int, terms: Mapping[Exponents, int] | Iterable[Term]) -> "LaurentPoly":
    """Builds a polynomial from possibly repeated or zero terms."""
    acc: dict[Exponents, int] = {}
    items = terms.items() if isinstance(terms, Mapping) else terms
    for exps, coeff in items:
      exps = tuple(exps)
      if len(exps) != n:
        raise ValueError(f"Exponent tuple {exps} does not have {n} entries")
      acc[exps] = acc.get(exps, 0) + coeff
    return cls._canonical(n, acc)

  @classmethod
  def _canonical(cls, n: int, acc: Mapping[Exponents, int]) -> "LaurentPoly":
    nonzero = ((e, c) for e, c in acc.items() if c)
    return cls(n, tuple(sorted(nonzero, key=lambda t: grlex_key(t[0]))))

  @classmethod
  def zero(cls, n: int) -> "LaurentPoly":
    return cls(n)

  @classmethod
  def constant(cls, n: int, c: int) -> "LaurentPoly":
    return cls(n, (((0,) * n, c),)) if c else cls(n)

  @classmethod
  def one(cls, n: int) -> "LaurentPoly":
    return cls.constant(n, 1)

  @classmethod
  def monomial(cls, exponents: Sequence[int], coeff: int = 1) -> "LaurentPoly":
    exps = tuple(exponents)
    return cls(len(exps), ((exps, coeff),)) if coeff else cls(len(exps))

  @classmethod
  def variable(cls, n: int, i: int) -> "LaurentPoly":
    """The variable x_i, 1-based."""
    check_index(i, n)
    return cls.monomial(tuple(1 if j == i else 0 for j in range(1, n + 1)))

  @classmethod
  def variables(cls, n: int) -> tuple["LaurentPoly", ...]:
    return tuple(cls.variable(n, i) for i in range(1, n + 1))

  def as_dict(self) -> dict[Exponents, int]:
    return dict(self.terms)

  def is_zero(self) -> bool:
    return not self.terms

  def is_monomial(self) -> bool:
    return len(self.terms) == 1

  def is_unit(self) -> bool:
    """Units of the Laurent ring are the monomials with coefficient ±1."""
    return self.is_monomial() and abs(self.terms[0][1]) == 1

  def min_exponents(self) -> Exponents:
    if not self.terms:
      raise ZeroPolynomial("The zero polynomial has no exponents")
    return tuple(min(e[i] for e, _ in self.terms) for i in range(self.n))

  def max_exponents(self) -> Exponents:
    if not self.terms:
      raise ZeroPolynomial("The zero polynomial has no exponents")
    return tuple(max(e[i] for e, _ in self.terms) for i in range(self.n))

  def leading_term(self) -> Term:
    return self.terms[-1]

  def shift(self, delta: Sequence[int]) -> "LaurentPoly":
    """Multiplies by the monomial with exponents `delta`."""
    return LaurentPoly(
      self.n,
      tuple(
        sorted(
          ((tuple(a + b for a, b in zip(e, delta, strict=True)), c) for e, c in self.terms),
          key=lambda t: grlex_key(t[0]),
        )
      ),
    )

  def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
    return add(self, _coerce(self.n, other))

  __radd__ = __add__

  def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
    return add(self, neg(_coerce(self.n, other)))

  def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
    return add(_coerce(self.n, other), neg(self))

  def __neg__(self) -> "LaurentPoly":
    return neg(self)

  def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
    return mul(self, _coerce(self.n, other))

  __rmul__ = __mul__

  def __pow__(self, exponent: int) -> "LaurentPoly":
    """Powers; negative exponents are only defined for units."""
    if exponent < 0:
      if not self.is_unit():
        raise ValueError(f"{self} is not a unit, so it has no inverse")
      ((e, c),) = self.terms
      return LaurentPoly.monomial(tuple(-x * -exponent for x in e), c ** (-exponent))
    result = LaurentPoly.one(self.n)
    base = self
    while exponent:
      if exponent & 1:
        result = result * base
      exponent >>= 1
      if exponent:
        base = base * base
    return result

  @override
  def __str__(self) -> str:
    return render(self)

  @override
  def __repr__(self) -> str:
    return f"LaurentPoly({render(self)!r}, n={self.n})"

  def to_json(self) -> list[dict[str, Any]]:
    """`[{"e": [...], "c": "<decimal>"}]`, coefficients as strings for exact round trips."""
    return [{"e": list(e), "c": str(c)} for e, c in self.terms]

  @classmethod
  def from_json(cls, n: int, raw: Iterable[Mapping[str, Any]]) -> "LaurentPoly":
    return cls.from_terms(n, ((tuple(t["e"]), int(t["c"])) for t in raw))


def _coerce(n: int, value: "LaurentPoly | int") -> LaurentPoly:
  if isinstance(value, LaurentPoly):
    return value
  return LaurentPoly.constant(n, value)


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
  check_rank(f.n, g.n, "polynomial")
  acc = dict(f.terms)
  for e, c in g.terms:
    acc[e] = acc.get(e, 0) + c
  return LaurentPoly._canonical(f.n, acc)


def neg(f: LaurentPoly) -> LaurentPoly:
  return LaurentPoly(f.n, tuple((e, -c) for e, c in f.terms))


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
  check_rank(f.n, g.n, "polynomial")
  acc: dict[Exponents, int] = {}
  for e1, c1 in f.terms:
    for e2, c2 in g.terms:
      e = tuple(a + b for a, b in zip(e1, e2))
      acc[e] = acc.get(e, 0) + c1 * c2
  return LaurentPoly._canonical(f.n, acc)


def exact_divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly | None:
  """
  The Laurent polynomial h with `f == g * h`, or None when there is none.

  Both operands are shifted to ordinary polynomials with minimum exponent 0 in every variable,
  divided by graded-lex leading-term elimination, and the quotient is shifted back. Any leading
  term that is not divisible by the divisor's leading term, in monomial or coefficient, means
  the division is not exact.

  Raises:
    LaurentDivisionByZero: If g is zero.
  """
  check_rank(f.n, g.n, "polynomial")
  if g.is_zero():
    raise LaurentDivisionByZero(f"Cannot divide {f} by zero")
  if f.is_zero():
    return LaurentPoly.zero(f.n)

  f_min, g_min = f.min_exponents(), g.min_exponents()
  if g.is_monomial():
    ((g_e, g_c),) = g.terms
    if any(c % g_c for _, c in f.terms):
      return None
    return LaurentPoly(
      f.n, tuple((tuple(a - b for a, b in zip(e, g_e)), c // g_c) for e, c in f.terms)
    )

  num = f.shift(tuple(-x for x in f_min))
  den = g.shift(tuple(-x for x in g_min))
  lead_e, lead_c = den.leading_term()

  remainder = num.as_dict()
  # max-heap on grlex keys via negation, stale entries skipped on pop
  heap = [_heap_key(e) for e in remainder]
  heapq.heapify(heap)
  quotient: dict[Exponents, int] = {}

  while remainder:
    e = _heap_exponents(heapq.heappop(heap))
    if e not in remainder:
      continue
    c = remainder[e]
    q_e = tuple(a - b for a, b in zip(e, lead_e))
    if any(x < 0 for x in q_e) or c % lead_c:
      return None
    q_c = c // lead_c
    quotient[q_e] = q_c
    for d_e, d_c in den.terms:
      t = tuple(a + b for a, b in zip(q_e, d_e))
      value = remainder.get(t, 0) - q_c * d_c
      if value:
        if t not in remainder:
          heapq.heappush(heap, _heap_key(t))
        remainder[t] = value
      else:
        remainder.pop(t, None)

  shift = tuple(a - b for a, b in zip(f_min, g_min))
  return LaurentPoly._canonical(f.n, quotient).shift(shift)


def _heap_key(e: Exponents) -> tuple[int, tuple[int, ...]]:
  return -sum(e), tuple(-x for x in e)


def _heap_exponents(key: tuple[int, tuple[int, ...]]) -> Exponents:
  return tuple(-x for x in key[1])


def substitute(f: LaurentPoly, images: Sequence[LaurentPoly]) -> LaurentPoly | None:
  """
  Replaces x_i by `images[i - 1]` in f.

  Negative powers of non-unit images are cleared to a single denominator
  `prod images[i]^k_i`, which is then divided out exactly.

  Returns:
    The image, or None when it is not a Laurent polynomial.

  Raises:
    ZeroImage: If any image is zero.
  """
  check_rank(f.n, len(images), "substitution")
  if not images:
    return f
  m = images[0].n
  for i, image in enumerate(images, start=1):
    check_rank(m, image.n, "substitution image")
    if image.is_zero():
      raise ZeroImage(f"x{i} is mapped to zero")
  if f.is_zero():
    return LaurentPoly.zero(m)

  # Only non-unit images need clearing, units invert inside the Laurent ring
  clear = tuple(
    0 if images[i].is_unit() else max(0, -min(e[i] for e, _ in f.terms)) for i in range(f.n)
  )
  powers: dict[tuple[int, int], LaurentPoly] = {}

  def power(i: int, p: int) -> LaurentPoly:
    key = (i, p)
    if key not in powers:
      if p == 0:
        powers[key] = LaurentPoly.one(m)
      elif p < 0:
        powers[key] = images[i] ** p
      else:
        powers[key] = power(i, p - 1) * images[i]
    return powers[key]

  numerator = LaurentPoly.zero(m)
  for e, c in f.terms:
    term = LaurentPoly.constant(m, c)
    for i, x in enumerate(e):
      if x + clear[i]:
        term = term * power(i, x + clear[i])
    numerator = numerator + term

  if not any(clear):
    return numerator
  denominator = LaurentPoly.one(m)
  for i, k in enumerate(clear):
    if k:
      denominator = denominator * power(i, k)
  return exact_divide(numerator, denominator)


def permute_variables(sigma: Permutation, f: LaurentPoly) -> LaurentPoly:
  """
  The substitution `x_i -> x_σ(i)`: the exponent of x_i in f becomes the exponent of x_σ(i).
  """
  check_rank(f.n, sigma.n, "permutation")
  inv = sigma.inverse
  return LaurentPoly.from_terms(
    f.n, ((tuple(e[inv(j) - 1] for j in range(1, f.n + 1)), c) for e, c in f.terms)
  )


def _render_monomial(e: Exponents, var: str) -> str:
  factors = []
  for i, x in enumerate(e, start=1):
    if x == 1:
      factors.append(f"{var}{i}")
    elif x:
      factors.append(f"{var}{i}^{x}")
  return "*".join(factors)


def render(f: LaurentPoly, var: str = "x") -> str:
  """
  Text form, e.g. `1 + x1 + x2 + x1*x2^-1`: ascending total degree, and within one degree
  x1 before x2.
  """
  if f.is_zero():
    return "0"
  ordered = sorted(f.terms, key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))
  out = ""
  for index, (e, c) in enumerate(ordered):
    monomial = _render_monomial(e, var)
    magnitude = abs(c)
    if not monomial:
      body = str(magnitude)
    elif magnitude == 1:
      body = monomial
    else:
      body = f"{magnitude}*{monomial}"
    if index == 0:
      out = f"-{body}" if c < 0 else body
    else:
      out += f" - {body}" if c < 0 else f" + {body}"
  return out
