"""
Named verification suites. Each suite exercises one family of exact identities over the
catalog quivers or over seeded random matrices and reports every failure it finds.
"""

import math
import random
from collections.abc import Callable
from enum import StrEnum

import structlog
from pydantic import BaseModel, ConfigDict

from . import catalog
from .config import RunConfig
from .core.permutation import Permutation, all_permutations
from .exchange.group import (
  GroupTable,
  automorphism_group,
  matrix_similarity_classes,
  similarity_classes,
)
from .exchange.maps import (
  commutes_with_mutation,
  is_cluster_isomorphism,
  similarity_witness,
  transport_holds,
  transported_seeds_similar,
)
from .exchange.model import ExchangeMap
from .exchange.verify import is_variable_preserver, verify_isomorphism_bruteforce
from .invariants.parity import certify_unreachable, check_closure, parity_of
from .invariants.reachability import Reached, bounded_reachability
from .laurent.normal_form import normal_form
from .quiver.model import ExchangeMatrix, ValuedQuiver, matrix_from_quiver, quiver_from_matrix
from .quiver.mutation import matrix_mutation_class, mutate_matrix, mutate_quiver
from .quiver.similarity import matrices_similar, permute_matrix
from .quiver.symmetrizer import find_symmetrizer, is_symmetrizer
from .seeds.explore import (
  MutationClassGraph,
  check_cluster_determines_quiver,
  cluster_variables,
  explore,
  unlabeled_clusters,
  verify_positivity,
)
from .seeds.mutation import LaurentPhenomenonViolation, relabel_seed

logger = structlog.get_logger(__name__)

MAX_REPORTED_FAILURES = 20
MARKOV_SEED_BALL = 500
"""Seed-level exploration of the (2,2)-triangle stops here; the class is infinite."""


class SuiteName(StrEnum):
  PERMUTATION_MUTATION = "permutation-mutation"
  LAURENT = "laurent"
  ISOMORPHISM_B2 = "isomorphism-b2"
  PRESERVER = "preserver"
  TRANSPORT = "transport"
  AUTOMORPHISM_GROUPS = "automorphism-groups"
  PARITY = "parity"
  SIMILARITY_CLASSES = "similarity-classes"


class SuiteResult(BaseModel):
  model_config = ConfigDict(frozen=True)

  suite: str
  passed: bool
  checked: int
  failed: int
  failures: list[str]
  """The first failing cases, at most twenty."""
  notes: list[str]


class _Recorder:
  def __init__(self, suite: SuiteName):
    self.suite = suite
    self.checked = 0
    self.failed = 0
    self.failures: list[str] = []
    self.notes: list[str] = []

  def check(self, condition: bool, message: str | Callable[[], str]) -> bool:
    self.checked += 1
    if not condition:
      self.failed += 1
      if len(self.failures) < MAX_REPORTED_FAILURES:
        self.failures.append(message() if callable(message) else message)
    return condition

  def note(self, message: str) -> None:
    self.notes.append(message)

  def result(self) -> SuiteResult:
    log = logger.bind(suite=str(self.suite), checked=self.checked, failures=self.failed)
    if self.failed:
      log.warning("verification suite failed")
    else:
      log.info("verification suite passed")
    return SuiteResult(
      suite=str(self.suite),
      passed=self.failed == 0,
      checked=self.checked,
      failed=self.failed,
      failures=self.failures,
      notes=self.notes,
    )


def random_skew_symmetrizable(
  rng: random.Random, n: int, bound: int = 9, even_bias: float = 0.0
) -> ExchangeMatrix:
  """
  A random skew-symmetrizable matrix with entries bounded by `bound`: a random symmetrizer
  with entries in 1..3 fixes the ratio of each pair `b_ij`, `b_ji`. With `even_bias`, each
  nonzero pair is doubled with that probability while still in bounds.
  """
  d = [rng.randint(1, 3) for _ in range(n)]
  rows = [[0] * n for _ in range(n)]
  for i in range(n):
    for j in range(i + 1, n):
      g = math.gcd(d[i], d[j])
      unit_ij, unit_ji = d[j] // g, d[i] // g
      reach = bound // max(unit_ij, unit_ji)
      if reach == 0 or rng.random() < 0.3:
        continue
      m = rng.randint(-reach, reach)
      if m and rng.random() < even_bias and abs(2 * m) <= reach:
        m *= 2
      rows[i][j] = m * unit_ij
      rows[j][i] = -m * unit_ji
  return ExchangeMatrix.from_rows(rows)


def random_permutation(rng: random.Random, n: int) -> Permutation:
  return Permutation(tuple(rng.sample(range(1, n + 1), n)))


def verify_permutation_mutation(config: RunConfig, trials: int = 1000) -> SuiteResult:
  """Relabelling commutes with mutation, along with the basic laws of both."""
  rec = _Recorder(SuiteName.PERMUTATION_MUTATION)
  rng = random.Random(config.rng_seed)
  for _ in range(trials):
    n = rng.randint(1, 5)
    b = random_skew_symmetrizable(rng, n)
    sigma, tau = random_permutation(rng, n), random_permutation(rng, n)
    d = find_symmetrizer(b)
    problems: list[str] = []
    if d is None:
      problems.append("generated matrix has no symmetrizer")
    q = quiver_from_matrix(b)
    if permute_matrix(sigma * tau, b) != permute_matrix(sigma, permute_matrix(tau, b)):
      problems.append(f"action law fails for σ={sigma} τ={tau}")
    for k in range(1, n + 1):
      mutated = mutate_matrix(b, k)
      if permute_matrix(sigma, mutated) != mutate_matrix(permute_matrix(sigma, b), sigma(k)):
        problems.append(f"relabelling does not commute with μ{k} for σ={sigma}")
      if mutate_matrix(mutated, k) != b:
        problems.append(f"μ{k} is not an involution")
      if d is not None and not is_symmetrizer(d, mutated):
        problems.append(f"μ{k} loses the symmetrizer {d}")
      if matrix_from_quiver(mutate_quiver(q, k)) != mutated:
        problems.append(f"quiver mutation at {k} disagrees with matrix mutation")
    rec.check(not problems, lambda: f"{b}: {'; '.join(problems)}")
  return rec.result()


_FINITE_TYPES: dict[str, tuple[Callable[[], ValuedQuiver], int | None, int, int]] = {
  "A2": (lambda: catalog.linear_a(2), 10, 5, 5),
  "A3": (lambda: catalog.linear_a(3), None, 14, 9),
  "B2": (catalog.b2, None, 6, 6),
  "G2": (catalog.g2, None, 8, 8),
}


def verify_laurent(config: RunConfig) -> SuiteResult:
  """Full exploration of the finite types, counts, positivity and the normal form."""
  rec = _Recorder(SuiteName.LAURENT)
  for name, (build, labeled, clusters, variables) in _FINITE_TYPES.items():
    try:
      g = explore(build(), max_seeds=config.max_seeds, max_depth=config.max_depth)
    except LaurentPhenomenonViolation as e:
      rec.check(False, f"{name}: {e}")
      continue
    found = cluster_variables(g)
    rec.check(g.complete, f"{name}: exploration truncated by {g.truncation}")
    if labeled is not None:
      rec.check(len(g) == labeled, f"{name}: {len(g)} labeled seeds, expected {labeled}")
    count = len(unlabeled_clusters(g))
    rec.check(count == clusters, f"{name}: {count} clusters, expected {clusters}")
    rec.check(len(found) == variables, f"{name}: {len(found)} variables, expected {variables}")
    rec.check(verify_positivity(g), f"{name}: a cluster variable is not positive")
    rec.check(check_cluster_determines_quiver(g), f"{name}: a cluster carries two quivers")
    degrees = {deg for _, deg in g.to_networkx().degree()}
    rec.check(degrees == {g.n}, f"{name}: exchange graph degrees {degrees}, expected {g.n}")
    rec.check(
      all(not any(normal_form(y).numerator.min_exponents()) for y in found),
      f"{name}: a normal-form numerator is divisible by a variable",
    )
    rec.note(f"{name}: labeled={len(g)} clusters={count} variables={len(found)}")
  return rec.result()


def _rooted_graphs(g: MutationClassGraph, config: RunConfig) -> list[MutationClassGraph]:
  return [
    explore(seed.quiver, max_seeds=config.max_seeds, max_depth=config.max_depth)
    for seed in g.seeds
  ]


def verify_isomorphism_b2(config: RunConfig) -> SuiteResult:
  """
  Over every labeled seed pair of B2 and both permutations: the matrix test agrees with the
  brute-force cluster check, and with the mutation-compatibility test.
  """
  rec = _Recorder(SuiteName.ISOMORPHISM_B2)
  g = explore(catalog.b2(), max_seeds=config.max_seeds, max_depth=config.max_depth)
  rooted = _rooted_graphs(g, config)
  for a, source in enumerate(g.seeds):
    for target in g.seeds:
      for sigma in all_permutations(2):
        m = ExchangeMap(source, target, sigma)
        by_matrix = is_cluster_isomorphism(m)
        brute = verify_isomorphism_bruteforce(m, rooted[a], g)
        rec.check(
          by_matrix == brute.holds,
          lambda: f"{m}: matrix test {by_matrix}, brute force {brute.holds} ({brute.reason})",
        )
        rec.check(
          commutes_with_mutation(m) == by_matrix,
          lambda: f"{m}: mutation compatibility disagrees with similarity",
        )
  return rec.result()


def verify_preserver(config: RunConfig) -> SuiteResult:
  """On positive classes, preserving cluster variables, σ-similarity and isomorphism agree."""
  rec = _Recorder(SuiteName.PRESERVER)
  for name in ("A2", "B2"):
    build = _FINITE_TYPES[name][0]
    g = explore(build(), max_seeds=config.max_seeds, max_depth=config.max_depth)
    if not rec.check(verify_positivity(g), f"{name}: class is not positive"):
      continue
    rooted = _rooted_graphs(g, config)
    for a, source in enumerate(g.seeds):
      for target in g.seeds:
        for sigma in all_permutations(g.n):
          m = ExchangeMap(source, target, sigma)
          preserver = is_variable_preserver(m, rooted[a], g)
          similar = similarity_witness(m) is not None
          iso = verify_isomorphism_bruteforce(m, rooted[a], g).holds
          rec.check(
            preserver == similar == iso,
            lambda: f"{name} {m}: preserver={preserver} similar={similar} isomorphism={iso}",
          )
  return rec.result()


def verify_transport(config: RunConfig, trials: int = 200, max_word: int = 6) -> SuiteResult:
  """
  For random σ-similar seed pairs of finite type and random words w, the exchange map takes the
  cluster at w to the cluster at σ(w), and the seeds there are again σ-similar.
  """
  rec = _Recorder(SuiteName.TRANSPORT)
  rng = random.Random(config.rng_seed)
  graphs = {
    name: explore(build(), max_seeds=config.max_seeds, max_depth=config.max_depth)
    for name, (build, *_counts) in _FINITE_TYPES.items()
  }
  names = sorted(graphs)
  for _ in range(trials):
    g = graphs[rng.choice(names)]
    source = rng.choice(g.seeds)
    sigma = random_permutation(rng, g.n)
    candidates = [t for t in g.seeds if matrices_similar(t.matrix, source.matrix, sigma)]
    if candidates and rng.random() < 0.5:
      target = rng.choice(candidates)
    else:
      target = relabel_seed(sigma, source)
    m = ExchangeMap(source, target, sigma)
    word = tuple(rng.randint(1, g.n) for _ in range(rng.randint(0, max_word)))
    rec.check(similarity_witness(m) is not None, lambda: f"{m} is not a similar pair")
    rec.check(transport_holds(m, word), lambda: f"{m}: cluster at {word} not transported")
    rec.check(
      transported_seeds_similar(m, word), lambda: f"{m}: seeds at {word} are not similar"
    )
  return rec.result()


_EXPECTED_GROUPS: dict[str, tuple[Callable[[], ValuedQuiver], int, list[str]]] = {
  "A1": (catalog.a1, 2, ["T1^2 = 1"]),
  "A2": (lambda: catalog.linear_a(2), 10, ["T1^2 = 1", "T2^2 = 1", "(T1T2)^5 = 1"]),
  "B2": (catalog.b2, 6, ["T1^2 = 1", "T2^2 = 1", "(T1T2)^3 = 1"]),
  "G2": (catalog.g2, 8, ["T1^2 = 1", "T2^2 = 1", "(T1T2)^4 = 1"]),
}


def group_axiom_failures(table: GroupTable, rng: random.Random, samples: int = 200) -> list[str]:
  failures = []
  size = table.order
  for a in range(size):
    if table.compose(table.identity, a) != a or table.compose(a, table.identity) != a:
      failures.append(f"identity fails on element {a}")
    if table.inverse(a) is None:
      failures.append(f"element {a} has no inverse")
  for _ in range(samples):
    a, b, c = (rng.randrange(size) for _ in range(3))
    left = table.compose(table.compose(a, b), c)
    if left != table.compose(a, table.compose(b, c)):
      failures.append(f"associativity fails on ({a}, {b}, {c})")
  return failures


def verify_automorphism_groups(config: RunConfig) -> SuiteResult:
  rec = _Recorder(SuiteName.AUTOMORPHISM_GROUPS)
  rng = random.Random(config.rng_seed)
  for name, (build, order, relations) in _EXPECTED_GROUPS.items():
    table = automorphism_group(build(), max_seeds=config.max_seeds, max_depth=config.max_depth)
    rec.check(table.order == order, f"{name}: order {table.order}, expected {order}")
    found = {str(r) for r in table.relations}
    for relation in relations:
      rec.check(relation in found, f"{name}: relation {relation} not detected in {found}")
    for failure in group_axiom_failures(table, rng):
      rec.check(False, f"{name}: {failure}")
    rec.note(f"{name}: order {table.order}, relations {', '.join(sorted(found))}")
  return rec.result()


def verify_parity(config: RunConfig, trials: int = 2000) -> SuiteResult:
  """
  The relabelling of 1 -(2,2)-> 2 -> 3 by (1 2) is certified unreachable and never found by
  search; closed parity patterns survive every mutation.
  """
  rec = _Recorder(SuiteName.PARITY)
  start = matrix_from_quiver(catalog.parity_example())
  target = permute_matrix(Permutation.from_cycles(3, (1, 2)), start)
  certificate = certify_unreachable(start, target)
  rec.check(certificate is not None and certificate.is_valid(), "example pair not certified")
  search = bounded_reachability(start, target, max_depth=8)
  rec.check(not isinstance(search, Reached), f"search reached the certified target: {search}")
  rec.note(f"bounded search to depth 8: {search}")

  rng = random.Random(config.rng_seed)
  closed = attempts = 0
  while closed < trials and attempts < trials * 50:
    attempts += 1
    b = random_skew_symmetrizable(rng, rng.randint(2, 5), even_bias=0.7)
    pattern = parity_of(b)
    if not check_closure(pattern).closed:
      continue
    closed += 1
    for k in range(1, b.n + 1):
      mutated = mutate_matrix(b, k)
      rec.check(
        pattern.matches(mutated), lambda: f"closed pattern {pattern} broken by μ{k} on {b}"
      )

    other = random_skew_symmetrizable(rng, b.n)
    if certify_unreachable(b, other) is not None and closed % 20 == 0:
      found = bounded_reachability(b, other, max_depth=4, max_states=500)
      rec.check(not isinstance(found, Reached), f"certified pair {b} / {other} was reached")
  rec.check(closed >= trials, f"only {closed} closed patterns found in {attempts} attempts")
  rec.note(f"{closed} closed patterns tested from {attempts} random matrices")
  return rec.result()


def verify_similarity_classes(config: RunConfig) -> SuiteResult:
  rec = _Recorder(SuiteName.SIMILARITY_CLASSES)
  rank_two = (("A2", lambda: catalog.linear_a(2)), ("B2", catalog.b2), ("C2", catalog.c2))
  for name, build in rank_two:
    g = explore(build(), max_seeds=config.max_seeds, max_depth=config.max_depth)
    classes = similarity_classes(g)
    rec.check(g.complete and len(classes) == 1, f"{name}: {len(classes)} similarity classes")
  g2 = explore(catalog.g2(), max_seeds=config.max_seeds, max_depth=config.max_depth)
  rec.check(len(similarity_classes(g2)) == 1, "G2: more than one similarity class")

  markov = matrix_from_quiver(catalog.markov())
  matrix_class = matrix_mutation_class(markov)
  classes = matrix_similarity_classes(matrix_class.matrices)
  rec.check(
    matrix_class.complete and len(classes) == 1,
    f"markov: matrix class complete={matrix_class.complete} with {len(classes)} classes",
  )
  rec.note(f"markov: matrix class has {len(matrix_class)} matrices in one similarity class")

  ball = min(config.max_seeds, MARKOV_SEED_BALL)
  explored = explore(catalog.markov(), max_seeds=ball, max_depth=config.max_depth)
  rec.check(len(similarity_classes(explored)) == 1, "markov: explored seeds split into classes")
  rec.note(
    f"markov: bounded evidence only, {len(explored)} seeds explored, complete={explored.complete}"
  )

  a3 = explore(catalog.linear_a(3), max_seeds=config.max_seeds, max_depth=config.max_depth)
  first, second = similarity_classes(a3), similarity_classes(a3)
  rec.check(first == second, "A3: partition is not deterministic")
  rec.note(f"A3: {len(first)} similarity classes of sizes {[len(c) for c in first]}")
  return rec.result()


SUITES: dict[SuiteName, Callable[[RunConfig], SuiteResult]] = {
  SuiteName.PERMUTATION_MUTATION: verify_permutation_mutation,
  SuiteName.LAURENT: verify_laurent,
  SuiteName.ISOMORPHISM_B2: verify_isomorphism_b2,
  SuiteName.PRESERVER: verify_preserver,
  SuiteName.TRANSPORT: verify_transport,
  SuiteName.AUTOMORPHISM_GROUPS: verify_automorphism_groups,
  SuiteName.PARITY: verify_parity,
  SuiteName.SIMILARITY_CLASSES: verify_similarity_classes,
}


def run_suites(names: list[SuiteName], config: RunConfig) -> list[SuiteResult]:
  return [SUITES[name](config) for name in names]
