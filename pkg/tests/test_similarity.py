import random

from clustermut import catalog
from clustermut.core.permutation import Permutation, all_permutations
from clustermut.quiver import (
  ExchangeMatrix,
  ValuedQuiver,
  apply_automorphism_to_quiver,
  find_similarities,
  is_sigma_similar,
  matrix_from_quiver,
  mutate_matrix,
  opposite_quiver,
  permute_matrix,
  quiver_automorphisms,
)
from clustermut.quiver.similarity import similarity_class_key
from clustermut.verification import random_permutation, random_skew_symmetrizable

SWAP = Permutation.from_cycles(2, (1, 2))
SWAP_12 = Permutation.from_cycles(3, (1, 2))
CYCLE_123 = Permutation.from_cycles(3, (1, 2, 3))
PARITY_TARGET = [[0, -2, 1], [2, 0, 0], [-1, 0, 0]]


class TestPermutation:
  def test_cycles_and_images(self):
    assert CYCLE_123.images == (2, 3, 1)
    assert str(CYCLE_123) == "(1 2 3)"
    assert str(Permutation.identity(3)) == "()"

  def test_composition_is_function_composition(self):
    tau = Permutation.from_cycles(3, (2, 3))
    product = CYCLE_123 * tau
    assert all(product(i) == CYCLE_123(tau(i)) for i in (1, 2, 3))

  def test_parse(self):
    assert Permutation.parse("(1 2 3)", 3) == CYCLE_123
    assert Permutation.parse("2,3,1", 3) == CYCLE_123
    assert Permutation.parse("()", 3).is_identity

  def test_inverse(self):
    assert CYCLE_123 * CYCLE_123.inverse == Permutation.identity(3)

  def test_all_permutations_count(self):
    assert len(list(all_permutations(4))) == 24


class TestPermuteMatrix:
  def test_identity(self):
    b = matrix_from_quiver(catalog.relabel_example())
    assert permute_matrix(Permutation.identity(3), b) == b

  def test_swap_on_parity_example(self):
    b = matrix_from_quiver(catalog.parity_example())
    assert permute_matrix(SWAP_12, b).rows() == PARITY_TARGET

  def test_action_law(self):
    rng = random.Random(3)
    for _ in range(200):
      n = rng.randint(1, 5)
      b = random_skew_symmetrizable(rng, n)
      sigma, tau = random_permutation(rng, n), random_permutation(rng, n)
      assert permute_matrix(sigma * tau, b) == permute_matrix(sigma, permute_matrix(tau, b))

  def test_commutes_with_mutation(self):
    rng = random.Random(5)
    for _ in range(200):
      n = rng.randint(2, 5)
      b = random_skew_symmetrizable(rng, n)
      sigma = random_permutation(rng, n)
      k = rng.randint(1, n)
      assert permute_matrix(sigma, mutate_matrix(b, k)) == mutate_matrix(
        permute_matrix(sigma, b), sigma(k)
      )


class TestApplyAutomorphismToQuiver:
  def test_cycle_on_relabel_example(self):
    moved = apply_automorphism_to_quiver(CYCLE_123, catalog.relabel_example())
    assert moved.d == (4, 1, 2)
    assert matrix_from_quiver(moved) == permute_matrix(
      CYCLE_123, matrix_from_quiver(catalog.relabel_example())
    )

  def test_identity(self):
    q = catalog.relabel_example()
    assert apply_automorphism_to_quiver(Permutation.identity(3), q) == q

  def test_swap_on_parity_example(self):
    moved = apply_automorphism_to_quiver(SWAP_12, catalog.parity_example())
    assert moved.arrow_map() == {(2, 1): (2, 2), (1, 3): (1, 1)}


class TestOppositeQuiver:
  def test_arrowless(self):
    q = ValuedQuiver.build(3, [], (1, 1, 1))
    assert opposite_quiver(q) == q

  def test_b2(self):
    assert opposite_quiver(catalog.b2()).arrow_map() == {(2, 1): (1, 2)}

  def test_involution(self):
    q = catalog.relabel_example()
    assert opposite_quiver(opposite_quiver(q)) == q

  def test_matrix_is_negated(self):
    q = catalog.relabel_example()
    assert matrix_from_quiver(opposite_quiver(q)) == -matrix_from_quiver(q)


class TestSimilarity:
  def test_self_similar_with_identity(self):
    witness = is_sigma_similar(catalog.b2(), catalog.b2(), Permutation.identity(2))
    assert witness is not None
    assert witness.epsilon == 1

  def test_relabelled_quiver_is_similar(self):
    q = catalog.relabel_example()
    moved = apply_automorphism_to_quiver(CYCLE_123, q)
    assert is_sigma_similar(moved, q, CYCLE_123) is not None
    assert is_sigma_similar(q, moved, CYCLE_123.inverse) is not None

  def test_parity_target_is_not_identity_similar(self):
    target = apply_automorphism_to_quiver(SWAP_12, catalog.parity_example())
    assert is_sigma_similar(catalog.parity_example(), target, Permutation.identity(3)) is None

  def test_arrowless_rank_two(self):
    q = ValuedQuiver.build(2, [], (1, 1))
    witnesses = find_similarities(q, q)
    assert [(str(w.sigma), w.epsilon) for w in witnesses] == [("()", 1), ("(1 2)", 1)]

  def test_b2_only_similar_to_itself_by_identity(self):
    witnesses = find_similarities(catalog.b2(), catalog.b2())
    assert [(w.sigma, w.epsilon) for w in witnesses] == [(Permutation.identity(2), 1)]

  def test_a2_swap_reverses_orientation(self):
    a2 = catalog.linear_a(2)
    witness = is_sigma_similar(a2, a2, SWAP)
    assert witness is not None
    assert witness.epsilon == -1

  def test_parity_target_found_by_swap(self):
    target = apply_automorphism_to_quiver(SWAP_12, catalog.parity_example())
    witnesses = find_similarities(target, catalog.parity_example())
    assert any(w.sigma == SWAP_12 and w.epsilon == 1 for w in witnesses)


class TestQuiverAutomorphisms:
  def test_arrowless_rank_three(self):
    assert len(quiver_automorphisms(ValuedQuiver.build(3, [], (1, 1, 1)))) == 6

  def test_b2(self):
    assert quiver_automorphisms(catalog.b2()) == [Permutation.identity(2)]

  def test_markov_triangle_rotations(self):
    rotations = quiver_automorphisms(catalog.markov())
    assert rotations == [
      Permutation.identity(3),
      Permutation((2, 3, 1)),
      Permutation((3, 1, 2)),
    ]


def test_similarity_class_key_is_invariant():
  rng = random.Random(17)
  for _ in range(100):
    n = rng.randint(1, 4)
    b = random_skew_symmetrizable(rng, n)
    key = similarity_class_key(b)
    assert similarity_class_key(-b) == key
    assert similarity_class_key(permute_matrix(random_permutation(rng, n), b)) == key


def test_similarity_class_key_separates_b2_and_g2():
  b2 = matrix_from_quiver(catalog.b2())
  g2 = matrix_from_quiver(catalog.g2())
  assert similarity_class_key(b2) != similarity_class_key(g2)
  assert similarity_class_key(ExchangeMatrix.zero(2)) == ((0, 0), (0, 0))
