import json
import random

import pytest

from clustermut import catalog
from clustermut.core.permutation import Permutation, all_permutations
from clustermut.laurent import LaurentPoly
from clustermut.quiver import matrix_from_quiver
from clustermut.quiver.similarity import matrices_similar, permute_matrix
from clustermut.seeds import (
  LaurentPhenomenonViolation,
  Seed,
  TruncationReason,
  apply_automorphism_to_seed,
  apply_word,
  check_cluster_determines_quiver,
  cluster_variables,
  exchange_binomial,
  explore,
  initial_seed,
  mutate_seed,
  relabel_seed,
  unlabeled_clusters,
  verify_positivity,
)
from clustermut.seeds.export import GraphExport, to_dot

T1, T2 = LaurentPoly.variables(2)
SWAP = Permutation.from_cycles(2, (1, 2))
A2_VARIABLES = {
  T1,
  T2,
  (1 + T2) * T1**-1,
  (1 + T1) * T2**-1,
  (1 + T1 + T2) * T1**-1 * T2**-1,
}


class TestInitialSeed:
  def test_a2(self):
    seed = initial_seed(catalog.linear_a(2))
    assert seed.cluster == (T1, T2)
    assert seed.quiver == catalog.linear_a(2)

  def test_b2_keeps_symmetrizer(self):
    seed = initial_seed(catalog.b2())
    assert seed.d == (1, 2)
    assert seed.quiver == catalog.b2()

  def test_parity_example(self):
    seed = initial_seed(catalog.parity_example())
    assert seed.cluster == LaurentPoly.variables(3)


class TestExchangeBinomial:
  def test_a2(self):
    seed = initial_seed(catalog.linear_a(2))
    assert exchange_binomial(seed, 1) == 1 + T2
    assert exchange_binomial(seed, 2) == T1 + 1

  def test_b2(self):
    seed = initial_seed(catalog.b2())
    assert exchange_binomial(seed, 1) == 1 + T2
    assert exchange_binomial(seed, 2) == T1**2 + 1

  def test_rank_one(self):
    assert exchange_binomial(initial_seed(catalog.a1()), 1) == LaurentPoly.constant(1, 2)


class TestMutateSeed:
  def test_a2_first_mutation(self):
    seed = mutate_seed(initial_seed(catalog.linear_a(2)), 1)
    assert seed.cluster == ((1 + T2) * T1**-1, T2)
    assert seed.quiver.arrow_map() == {(2, 1): (1, 1)}

  def test_involution(self):
    rng = random.Random(12)
    g = explore(catalog.linear_a(3))
    for _ in range(30):
      seed = rng.choice(g.seeds)
      k = rng.randint(1, 3)
      assert mutate_seed(mutate_seed(seed, k), k) == seed

  def test_a2_word_one_two(self):
    seed = apply_word(initial_seed(catalog.linear_a(2)), (1, 2))
    assert seed.cluster[1] == (1 + T1 + T2) * T1**-1 * T2**-1

  def test_a2_pentagon(self):
    start = initial_seed(catalog.linear_a(2))
    seed = apply_word(start, (1, 2, 1, 2, 1))
    assert seed.cluster == (T2, T1)
    assert seed.matrix == -start.matrix

  def test_empty_and_reversed_words(self):
    start = initial_seed(catalog.b2())
    assert apply_word(start, ()) == start
    word = (1, 2, 1, 1, 2)
    assert apply_word(apply_word(start, word), tuple(reversed(word))) == start

  def test_inexact_exchange_relation(self):
    start = initial_seed(catalog.linear_a(2))
    broken = Seed((1 + T1, T2), start.matrix, start.d)
    with pytest.raises(LaurentPhenomenonViolation):
      mutate_seed(broken, 1)


class TestExplore:
  def test_a2(self):
    g = explore(catalog.linear_a(2))
    assert g.complete
    assert len(g) == 10
    assert len(unlabeled_clusters(g)) == 5
    assert set(cluster_variables(g)) == A2_VARIABLES
    assert verify_positivity(g)
    assert check_cluster_determines_quiver(g)

  def test_a3(self):
    g = explore(catalog.linear_a(3))
    assert g.complete
    assert len(unlabeled_clusters(g)) == 14
    assert len(cluster_variables(g)) == 9

  def test_rank_one(self):
    g = explore(catalog.a1())
    assert g.complete
    assert len(g) == 2
    t1 = LaurentPoly.variable(1, 1)
    assert set(cluster_variables(g)) == {t1, 2 * t1**-1}

  @pytest.mark.parametrize(("quiver", "count"), [(catalog.b2(), 6), (catalog.g2(), 8)])
  def test_rank_two_finite_types(self, quiver, count):
    g = explore(quiver)
    assert g.complete
    assert len(unlabeled_clusters(g)) == count
    assert len(cluster_variables(g)) == count
    assert verify_positivity(g)
    assert check_cluster_determines_quiver(g)

  def test_markov_is_truncated(self):
    g = explore(catalog.markov(), max_seeds=40)
    assert not g.complete
    assert g.truncation == TruncationReason.SEED_CAP
    assert len(g) == 40

  def test_depth_cap(self):
    g = explore(catalog.linear_a(3), max_depth=1)
    assert not g.complete
    assert g.truncation == TruncationReason.DEPTH_CAP
    assert len(g) == 4

  def test_initial_only(self):
    g = explore(catalog.parity_example(), max_seeds=1)
    assert not g.complete
    assert cluster_variables(g) == LaurentPoly.variables(3)
    assert verify_positivity(g)
    assert check_cluster_determines_quiver(g)

  def test_limits_must_be_positive(self):
    with pytest.raises(ValueError):
      explore(catalog.linear_a(2), max_seeds=0)

  def test_words_reach_their_seeds(self):
    g = explore(catalog.b2())
    start = g.seeds[g.initial]
    for seed, word in zip(g.seeds, g.words, strict=True):
      assert apply_word(start, word) == seed

  def test_edges_follow_mutation(self):
    g = explore(catalog.g2())
    for src, k, dst in g.edges:
      assert mutate_seed(g.seeds[src], k) == g.seeds[dst]
    assert g.neighbour(g.initial, 1) == g.index_of(mutate_seed(g.seeds[g.initial], 1))

  def test_exchange_graph_is_regular(self):
    g = explore(catalog.linear_a(3))
    assert {degree for _, degree in g.to_networkx().degree()} == {3}


class TestAutomorphismAction:
  def test_identity(self):
    seed = initial_seed(catalog.linear_a(2))
    assert apply_automorphism_to_seed(Permutation.identity(2), seed) == seed

  def test_swap_on_a2(self):
    seed = initial_seed(catalog.linear_a(2))
    moved = apply_automorphism_to_seed(SWAP, seed)
    assert moved.cluster == (T2, T1)
    assert moved.matrix == permute_matrix(SWAP, seed.matrix)

  def test_action_composes(self):
    rng = random.Random(21)
    g = explore(catalog.linear_a(3))
    perms = list(all_permutations(3))
    for _ in range(50):
      seed = rng.choice(g.seeds)
      sigma, tau = rng.choice(perms), rng.choice(perms)
      assert apply_automorphism_to_seed(sigma * tau, seed) == apply_automorphism_to_seed(
        sigma, apply_automorphism_to_seed(tau, seed)
      )


class TestRelabelSeed:
  def test_is_similar(self):
    seed = apply_word(initial_seed(catalog.relabel_example()), (2, 1))
    sigma = Permutation.from_cycles(3, (1, 3))
    moved = relabel_seed(sigma, seed)
    assert matrices_similar(moved.matrix, seed.matrix, sigma) is not None
    assert set(moved.cluster) == set(seed.cluster)
    assert moved.d == (4, 2, 1)

  def test_commutes_with_mutation(self):
    g = explore(catalog.linear_a(3))
    sigma = Permutation.from_cycles(3, (1, 2, 3))
    for seed in g.seeds[:20]:
      for k in (1, 2, 3):
        assert mutate_seed(relabel_seed(sigma, seed), sigma(k)) == relabel_seed(
          sigma, mutate_seed(seed, k)
        )


class TestExport:
  def test_dot_labels_seed_indices(self):
    g = explore(catalog.linear_a(2))
    dot = to_dot(g)
    assert dot.startswith("graph exchange {")
    assert dot.count(" -- ") == 10
    assert 's0 [label="0"];' in dot

  def test_dot_verbose_labels(self):
    g = explore(catalog.linear_a(2))
    assert 's0 [label="0: (t1, t2)"];' in to_dot(g, verbose_labels=True)

  def test_json_export(self):
    g = explore(catalog.b2())
    exported = json.loads(GraphExport.from_graph(g).model_dump_json())
    assert exported["complete"] is True
    assert exported["d"] == [1, 2]
    assert len(exported["seeds"]) == len(g)
    assert len(exported["edges"]) == 2 * len(g)
    first = exported["seeds"][0]
    assert first["word"] == []
    assert first["matrix"] == matrix_from_quiver(catalog.b2()).rows()
    assert LaurentPoly.from_json(2, first["cluster"][0]) == T1
