import random

import pytest
from pydantic import ValidationError

from clustermut import catalog
from clustermut.core.errors import IndexOutOfRange
from clustermut.quiver import (
  ExchangeMatrix,
  NotSkewSymmetrizable,
  ValuedQuiver,
  find_symmetrizer,
  matrix_from_quiver,
  matrix_mutation_class,
  mutate_matrix,
  mutate_quiver,
  quiver_from_matrix,
)
from clustermut.quiver.symmetrizer import is_symmetrizer
from clustermut.verification import random_skew_symmetrizable

PARITY_MATRIX = [[0, 2, 0], [-2, 0, 1], [0, -1, 0]]
PARITY_MUTATED_AT_2 = [[0, -2, 2], [2, 0, -1], [-2, 1, 0]]


class TestMatrixFromQuiver:
  def test_parity_example(self):
    assert matrix_from_quiver(catalog.parity_example()).rows() == PARITY_MATRIX

  def test_arrowless_quiver_gives_zero_matrix(self):
    q = ValuedQuiver.build(3, [], (1, 1, 1))
    assert matrix_from_quiver(q) == ExchangeMatrix.zero(3)

  def test_relabel_example_entries(self):
    b = matrix_from_quiver(catalog.relabel_example())
    assert (b[1, 2], b[2, 1]) == (2, -1)
    assert (b[1, 3], b[3, 1]) == (4, -1)
    assert (b[3, 2], b[2, 3]) == (1, -2)
    assert is_symmetrizer((1, 2, 4), b)


class TestQuiverFromMatrix:
  def test_parity_example_round_trip(self):
    q = quiver_from_matrix(ExchangeMatrix.from_rows(PARITY_MATRIX))
    assert q == catalog.parity_example()
    assert str(q) == "Q(n=3; 1 -(2,2)-> 2, 2 -> 3; d=(1, 1, 1))"

  def test_zero_matrix(self):
    q = quiver_from_matrix(ExchangeMatrix.zero(2))
    assert q.arrows == ()
    assert q.d == (1, 1)

  def test_sign_pattern_violation(self):
    with pytest.raises(NotSkewSymmetrizable):
      quiver_from_matrix(ExchangeMatrix.from_rows([[0, 1], [1, 0]]))

  def test_checked_constructor(self):
    with pytest.raises(NotSkewSymmetrizable):
      ExchangeMatrix.checked([[0, 1], [1, 0]])
    assert ExchangeMatrix.checked([[0, 1], [-1, 0]]).n == 2

  def test_non_square_rows(self):
    with pytest.raises(ValueError):
      ExchangeMatrix.from_rows([[0, 1], [-1]])


class TestFindSymmetrizer:
  def test_relabel_example(self):
    assert find_symmetrizer(matrix_from_quiver(catalog.relabel_example())) == (1, 2, 4)

  def test_skew_symmetric_matrix(self):
    assert find_symmetrizer(ExchangeMatrix.from_rows(PARITY_MATRIX)) == (1, 1, 1)

  def test_minimal_solution(self):
    assert find_symmetrizer(ExchangeMatrix.from_rows([[0, 3], [-1, 0]])) == (1, 3)
    assert find_symmetrizer(ExchangeMatrix.from_rows([[0, 4], [-6, 0]])) == (3, 2)

  def test_disconnected_components_are_solved_separately(self):
    b = ExchangeMatrix.from_rows([[0, 2, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -3, 0]])
    assert find_symmetrizer(b) == (1, 2, 3, 1)

  def test_inconsistent_cycle(self):
    b = ExchangeMatrix.from_rows([[0, 1, 1], [-2, 0, 1], [-1, -1, 0]])
    assert find_symmetrizer(b) is None

  def test_nonzero_diagonal(self):
    assert find_symmetrizer(ExchangeMatrix.from_rows([[1]])) is None


class TestMutateMatrix:
  def test_parity_example_at_2(self):
    mutated = mutate_matrix(ExchangeMatrix.from_rows(PARITY_MATRIX), 2)
    assert mutated.rows() == PARITY_MUTATED_AT_2
    assert mutated[1, 3] == 2

  def test_zero_matrix_is_fixed(self):
    for k in (1, 2, 3):
      assert mutate_matrix(ExchangeMatrix.zero(3), k) == ExchangeMatrix.zero(3)

  def test_rank_two_mutation_negates(self):
    b = matrix_from_quiver(catalog.b2())
    assert mutate_matrix(b, 1) == -b
    assert mutate_matrix(b, 2) == -b

  def test_out_of_range_direction(self):
    b = ExchangeMatrix.from_rows(PARITY_MATRIX)
    with pytest.raises(IndexOutOfRange):
      mutate_matrix(b, 0)
    with pytest.raises(IndexOutOfRange):
      mutate_matrix(b, 4)

  def test_involution_and_symmetrizer_on_random_matrices(self):
    rng = random.Random(7)
    for _ in range(300):
      b = random_skew_symmetrizable(rng, rng.randint(1, 5))
      d = find_symmetrizer(b)
      assert d is not None
      for k in b.index_range():
        mutated = mutate_matrix(b, k)
        assert mutate_matrix(mutated, k) == b
        assert is_symmetrizer(d, mutated)


class TestMutateQuiver:
  def test_parity_example_at_2(self):
    mutated = mutate_quiver(catalog.parity_example(), 2)
    assert matrix_from_quiver(mutated).rows() == PARITY_MUTATED_AT_2

  def test_arrowless_quiver_is_fixed(self):
    q = ValuedQuiver.build(3, [], (1, 2, 3))
    assert mutate_quiver(q, 2) == q

  def test_opposing_arrow_is_shortened(self):
    # 1 -> 2 -(1,1)-> 3 and 3 -(2,2)-> 1: the path through 2 shortens 3 -> 1
    q = ValuedQuiver.build(3, [(1, 2, (1, 1)), (2, 3, (1, 1)), (3, 1, (2, 2))], (1, 1, 1))
    mutated = mutate_quiver(q, 2)
    assert mutated.arrow_map() == {(2, 1): (1, 1), (3, 2): (1, 1), (3, 1): (1, 1)}

  def test_agrees_with_matrix_mutation(self):
    rng = random.Random(11)
    for _ in range(300):
      b = random_skew_symmetrizable(rng, rng.randint(2, 5))
      q = quiver_from_matrix(b)
      k = rng.randint(1, b.n)
      mutated = mutate_quiver(q, k)
      assert matrix_from_quiver(mutated) == mutate_matrix(b, k)
      assert mutate_quiver(mutated, k) == q
      assert mutated.d == q.d


class TestValuedQuiver:
  def test_loops_are_rejected(self):
    with pytest.raises(ValidationError):
      ValuedQuiver.build(2, [(1, 1, (1, 1))], (1, 1))

  def test_two_cycles_are_rejected(self):
    with pytest.raises(ValidationError):
      ValuedQuiver.build(2, [(1, 2, (1, 1)), (2, 1, (1, 1))], (1, 1))

  def test_symmetrizer_law(self):
    with pytest.raises(ValidationError):
      ValuedQuiver.build(2, [(1, 2, (2, 1))], (1, 1))
    assert ValuedQuiver.build(2, [(1, 2, (2, 1))], (1, 2)).n == 2

  def test_arrows_are_sorted(self):
    q = ValuedQuiver.build(3, [(2, 3, (1, 1)), (1, 2, (1, 1))], (1, 1, 1))
    assert q == catalog.linear_a(3)

  def test_equally_valued(self):
    assert catalog.markov().is_equally_valued
    assert not catalog.b2().is_equally_valued


def test_markov_matrix_class_is_plus_minus():
  b = matrix_from_quiver(catalog.markov())
  matrix_class = matrix_mutation_class(b)
  assert matrix_class.complete
  assert set(matrix_class.matrices) == {b, -b}


def test_linear_a3_matrix_class():
  matrix_class = matrix_mutation_class(matrix_from_quiver(catalog.linear_a(3)))
  assert matrix_class.complete
  matrices = set(matrix_class.matrices)
  assert all(mutate_matrix(b, k) in matrices for b in matrices for k in (1, 2, 3))
