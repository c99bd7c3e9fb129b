import json
import random
import re

import pytest

from clustermut import catalog
from clustermut.core.errors import RankTooLarge
from clustermut.exchange import (
  GroupReport,
  InfiniteOrTruncatedClass,
  automorphism_group,
  matrix_similarity_classes,
  similarity_classes,
)
from clustermut.laurent import LaurentPoly
from clustermut.quiver import ExchangeMatrix
from clustermut.seeds import explore
from clustermut.verification import group_axiom_failures


@pytest.mark.parametrize(
  ("quiver", "order", "product_power"),
  [
    (catalog.linear_a(2), 10, 5),
    (catalog.b2(), 6, 3),
    (catalog.c2(), 6, 3),
    (catalog.g2(), 8, 4),
  ],
)
def test_rank_two_groups_are_dihedral(quiver, order, product_power):
  table = automorphism_group(quiver)
  assert table.order == order
  relations = {str(r) for r in table.relations}
  assert relations == {"T1^2 = 1", "T2^2 = 1", f"(T1T2)^{product_power} = 1"}
  assert group_axiom_failures(table, random.Random(5)) == []


class TestRankOne:
  def test_order_two(self):
    table = automorphism_group(catalog.a1())
    assert table.order == 2
    assert table.generators == {1: 1}
    assert [str(r) for r in table.relations] == ["T1^2 = 1"]

  def test_element_text(self):
    table = automorphism_group(catalog.a1())
    assert table.elements[table.identity].is_identity()
    assert table.elements[1].render() == "t1 -> 2 / t1"

  def test_involution(self):
    table = automorphism_group(catalog.a1())
    assert table.compose(1, 1) == table.identity
    assert table.inverse(1) == 1


class TestGroupTable:
  @pytest.fixture(scope="class")
  def a2(self):
    return automorphism_group(catalog.linear_a(2))

  def test_identity_is_initial_cluster(self, a2):
    assert a2.elements[a2.identity].images == LaurentPoly.variables(2)

  def test_element_orders_divide_group_order(self, a2):
    for a in range(a2.order):
      assert a2.order % a2.element_order(a) == 0

  def test_generators_are_mutations(self, a2):
    t1 = a2.elements[a2.generators[1]]
    x1, x2 = LaurentPoly.variables(2)
    assert t1.images == ((1 + x2) * x1**-1, x2)

  def test_product_power(self, a2):
    t1t2 = a2.compose(a2.generators[1], a2.generators[2])
    assert a2.element_order(t1t2) == 5
    assert a2.power(t1t2, 5) == a2.identity
    assert a2.product([t1t2] * 5) == a2.identity

  def test_report(self, a2):
    report = GroupReport.from_table(a2)
    raw = json.loads(report.model_dump_json())
    assert raw["order"] == 10
    assert raw["generators"] == {"T1": a2.generators[1], "T2": a2.generators[2]}
    assert len(raw["composition"]) == 10
    assert all(len(row) == 10 for row in raw["composition"])
    assert raw["element_text"][raw["identity"]] == "t1 -> t1, t2 -> t2"
    assert "(T1T2)^5 = 1" in raw["relations"]

  def test_relations_are_generator_and_pair_powers(self):
    table = automorphism_group(catalog.linear_a(3))
    shapes = re.compile(r"(T\d|\(T\dT\d\))\^(\d+) = 1")
    for relation in GroupReport.from_table(table).relations:
      match = shapes.fullmatch(relation)
      assert match is not None, relation
      assert 1 <= int(match.group(2)) <= 12


class TestLimits:
  def test_infinite_class(self):
    with pytest.raises(InfiniteOrTruncatedClass):
      automorphism_group(catalog.markov(), max_seeds=30)

  def test_rank_too_large(self):
    with pytest.raises(RankTooLarge):
      automorphism_group(catalog.linear_a(7))


class TestSimilarityClasses:
  def test_rank_two_is_one_class(self):
    for quiver in (catalog.linear_a(2), catalog.b2(), catalog.g2()):
      g = explore(quiver)
      assert similarity_classes(g) == [list(range(len(g)))]

  def test_a3(self):
    g = explore(catalog.linear_a(3))
    classes = similarity_classes(g)
    assert len(classes) == 3
    assert sorted(i for c in classes for i in c) == list(range(len(g)))
    assert classes[0][0] == 0
    assert similarity_classes(explore(catalog.linear_a(3))) == classes

  def test_matrix_classes(self):
    b = ExchangeMatrix.from_rows([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
    flipped = ExchangeMatrix.from_rows([[0, -1, 0], [1, 0, -1], [0, 1, 0]])
    relabelled = ExchangeMatrix.from_rows([[0, 0, -1], [0, 0, 1], [1, -1, 0]])
    cycle = ExchangeMatrix.from_rows([[0, 1, -1], [-1, 0, 1], [1, -1, 0]])
    assert matrix_similarity_classes([b, flipped, cycle, relabelled]) == [[0, 1, 3], [2]]
