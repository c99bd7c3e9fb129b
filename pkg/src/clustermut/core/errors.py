"""Exceptions shared by every layer of the engine."""


class ClusterMutError(Exception):
  """Base class for all errors raised by clustermut."""


class SizeMismatch(ClusterMutError, ValueError):
  """Raised when two objects of different rank are combined."""

  def __init__(self, expected: int, actual: int, what: str = "object"):
    super().__init__(f"Expected {what} of rank {expected}, got rank {actual}")
    self.expected = expected
    self.actual = actual


class IndexOutOfRange(ClusterMutError, IndexError):
  """Raised when a vertex index falls outside 1..n."""

  def __init__(self, index: int, n: int):
    super().__init__(f"Vertex {index} is out of range 1..{n}")
    self.index = index
    self.n = n


class RankTooLarge(ClusterMutError, ValueError):
  """Raised when a factorial or exhaustive search is asked for above its rank guard."""

  def __init__(self, n: int, limit: int, operation: str):
    super().__init__(f"{operation} supports rank at most {limit}, got {n}")
    self.n = n
    self.limit = limit


def check_index(k: int, n: int) -> None:
  if not 1 <= k <= n:
    raise IndexOutOfRange(k, n)


def check_rank(expected: int, actual: int, what: str = "object") -> None:
  if expected != actual:
    raise SizeMismatch(expected, actual, what)
