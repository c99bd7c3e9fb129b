"""Exchange matrices and the valued quivers they correspond to."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING, Self, override

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator, model_validator

from ..core.errors import ClusterMutError, check_index


class NotSkewSymmetrizable(ClusterMutError, ValueError):
  """Raised when no positive integer symmetrizer exists for a matrix."""


class InvalidQuiver(ClusterMutError, ValueError):
  """Raised when arrows contain loops or 2-cycles, or break the symmetrizer law."""


@dataclass(frozen=True, slots=True)
class ExchangeMatrix:
  """
  A square integer matrix `B = (b_ij)`, indexed 1..n from the outside.

  Matrices are the canonical representation of a quiver inside the engine; mutation and every
  similarity decision run on them. Construction only checks the shape, use `checked` to also
  demand a symmetrizer.
  """

  entries: tuple[tuple[int, ...], ...]

  def __post_init__(self):
    n = len(self.entries)
    if n == 0:
      raise ValueError("Exchange matrices must have rank at least 1")
    for row in self.entries:
      if len(row) != n:
        raise ValueError(f"Exchange matrix must be square, got a row of length {len(row)} in {n}")

  @classmethod
  def from_rows(cls, rows: Iterable[Iterable[int]]) -> "ExchangeMatrix":
    return cls(tuple(tuple(int(v) for v in row) for row in rows))

  @classmethod
  def checked(cls, rows: Iterable[Iterable[int]]) -> "ExchangeMatrix":
    """Builds a matrix and raises NotSkewSymmetrizable if it has no symmetrizer."""
    from .symmetrizer import find_symmetrizer

    matrix = cls.from_rows(rows)
    if find_symmetrizer(matrix) is None:
      raise NotSkewSymmetrizable(f"{matrix} is not skew-symmetrizable")
    return matrix

  @classmethod
  def zero(cls, n: int) -> "ExchangeMatrix":
    return cls(tuple((0,) * n for _ in range(n)))

  @property
  def n(self) -> int:
    return len(self.entries)

  def __getitem__(self, index: tuple[int, int]) -> int:
    i, j = index
    return self.entries[i - 1][j - 1]

  def __neg__(self) -> "ExchangeMatrix":
    return ExchangeMatrix(tuple(tuple(-v for v in row) for row in self.entries))

  def index_range(self) -> range:
    return range(1, self.n + 1)

  def check_vertex(self, k: int) -> None:
    check_index(k, self.n)

  def is_zero(self) -> bool:
    return all(v == 0 for row in self.entries for v in row)

  def rows(self) -> list[list[int]]:
    return [list(row) for row in self.entries]

  def column(self, k: int) -> tuple[int, ...]:
    return tuple(row[k - 1] for row in self.entries)

  @override
  def __str__(self) -> str:
    return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in self.entries) + "]"


class Arrow(BaseModel):
  """An arrow `source -> target` carrying the valuation `(v_st, v_ts)`."""

  model_config = ConfigDict(frozen=True, populate_by_name=True)

  source: PositiveInt = Field(alias="from")
  target: PositiveInt = Field(alias="to")
  v: tuple[PositiveInt, PositiveInt]

  @property
  def key(self) -> tuple[int, int]:
    return self.source, self.target

  @override
  def __str__(self) -> str:
    if self.v == (1, 1):
      return f"{self.source} -> {self.target}"
    return f"{self.source} -({self.v[0]},{self.v[1]})-> {self.target}"

  if TYPE_CHECKING:

    @override
    def __hash__(self) -> int: ...


class ValuedQuiver(BaseModel):
  """
  A valued quiver on vertices 1..n: no loops, no 2-cycles, and a symmetrizer `d` with
  `d_i * v_ij == v_ji * d_j` on every arrow.

  Arrows are kept sorted by (source, target) so that equal quivers compare equal.
  """

  model_config = ConfigDict(frozen=True, populate_by_name=True)

  n: PositiveInt
  arrows: tuple[Arrow, ...] = ()
  d: tuple[PositiveInt, ...]

  @field_validator("arrows")
  @classmethod
  def _sort_arrows(cls, arrows: tuple[Arrow, ...]) -> tuple[Arrow, ...]:
    return tuple(sorted(arrows, key=lambda a: a.key))

  @model_validator(mode="after")
  def _check_invariants(self) -> Self:
    if len(self.d) != self.n:
      raise InvalidQuiver(f"Symmetrizer has {len(self.d)} entries for a quiver of rank {self.n}")

    seen: set[tuple[int, int]] = set()
    for arrow in self.arrows:
      i, j = arrow.key
      if i > self.n or j > self.n:
        raise InvalidQuiver(f"Arrow {arrow} leaves the vertex set 1..{self.n}")
      if i == j:
        raise InvalidQuiver(f"Loop at vertex {i}")
      if (i, j) in seen:
        raise InvalidQuiver(f"Duplicate arrow {i} -> {j}")
      if (j, i) in seen:
        raise InvalidQuiver(f"2-cycle between {i} and {j}")
      seen.add((i, j))
      v_ij, v_ji = arrow.v
      if self.d[i - 1] * v_ij != v_ji * self.d[j - 1]:
        raise InvalidQuiver(f"Arrow {arrow} breaks the symmetrizer law for d={self.d}")

    return self

  @classmethod
  def build(
    cls, n: int, arrows: Iterable[tuple[int, int, tuple[int, int]]], d: Sequence[int]
  ) -> "ValuedQuiver":
    """Builds a quiver from `(source, target, (v_st, v_ts))` triples."""
    return cls(
      n=n,
      arrows=tuple(Arrow(source=i, target=j, v=v) for i, j, v in arrows),
      d=tuple(d),
    )

  def arrow_map(self) -> dict[tuple[int, int], tuple[int, int]]:
    return {a.key: a.v for a in self.arrows}

  @property
  def is_equally_valued(self) -> bool:
    return all(a.v[0] == a.v[1] for a in self.arrows)

  @override
  def __str__(self) -> str:
    body = ", ".join(str(a) for a in self.arrows) or "no arrows"
    return f"Q(n={self.n}; {body}; d={self.d})"

  if TYPE_CHECKING:

    @override
    def __hash__(self) -> int: ...


def matrix_from_quiver(q: ValuedQuiver) -> ExchangeMatrix:
  """`b_ij = v_ij` for an arrow i -> j, `b_ji = -v_ji`, zero elsewhere."""
  rows = [[0] * q.n for _ in range(q.n)]
  for arrow in q.arrows:
    i, j = arrow.key
    v_ij, v_ji = arrow.v
    rows[i - 1][j - 1] = v_ij
    rows[j - 1][i - 1] = -v_ji
  return ExchangeMatrix.from_rows(rows)


def quiver_from_matrix(b: ExchangeMatrix, d: Sequence[int] | None = None) -> ValuedQuiver:
  """
  The valued quiver of a skew-symmetrizable matrix: an arrow i -> j wherever `b_ij > 0`,
  valued `(b_ij, -b_ji)`.

  When `d` is omitted the minimal symmetrizer is used.

  Raises:
    NotSkewSymmetrizable: If `b` admits no positive symmetrizer.
  """
  from .symmetrizer import find_symmetrizer

  if d is None:
    found = find_symmetrizer(b)
    if found is None:
      raise NotSkewSymmetrizable(f"{b} is not skew-symmetrizable")
    d = found

  arrows = [
    (i, j, (b[i, j], -b[j, i])) for i in b.index_range() for j in b.index_range() if b[i, j] > 0
  ]
  return ValuedQuiver.build(b.n, arrows, d)
