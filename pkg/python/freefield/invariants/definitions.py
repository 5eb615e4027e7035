"""Randomized identities of the mode algebra.

Every built-in system is sampled with random homogeneous states of bounded
depth; on each sample the unit, derivative, skew-symmetry, commutator,
quasi-commutativity, weight and locality identities must hold exactly.
"""

from fractions import Fraction
from math import factorial
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core.checks import *
from ..core.fock import *
from ..core.suite_definition import SuiteDefinition
from ..core.systems import CASES, build_system
from ..core.utils import *
from ..core.wick import *

DEFAULT_SAMPLES = 500
DEFAULT_SEED = 0
MAX_DEPTH = 4

def random_state(system: FreeFieldSystem, random: np.random.RandomState,
                 max_depth: int = MAX_DEPTH) -> State:
  """A random state of definite parity and grade, of depth <= max_depth.

  The state is one monomial times a small rational, plus possibly a second
  monomial with the same grade (its permutation) when one exists.
  """
  while True:
    budget = int(random.randint(0, max_depth + 1))
    modes = []
    while budget > 0:
      n = int(random.randint(1, budget + 1))
      g = int(random.randint(0, len(system.generators)))
      modes.append((g, -n))
      budget -= n
    normalized = normalize_monomial(system, modes)
    if normalized is None:
      continue
    _, mono = normalized
    numerator = int(random.randint(-3, 4)) or 1
    denominator = int(random.randint(1, 4))
    state = State(system, {mono: Fraction(numerator, denominator)})
    # Same grade: move one unit of mode index from the first to the last mode.
    if len(mono) >= 2 and random.randint(0, 2):
      (i, n), (j, m) = mono[0], mono[-1]
      if n < -1:
        other = normalize_monomial(system, ((i, n + 1),) + mono[1:-1] +
                                   ((j, m - 1),))
        if other is not None:
          sign, second = other
          state = state + State(system, {second: Fraction(sign)})
    return state


def _parity_sign(a: State, b: State) -> int:
  odd = a.parity == Parity.ODD and b.parity == Parity.ODD
  return -1 if odd else 1


def _bound(a: State, b: State) -> int:
  return depth(a) + depth(b)


def check_unit(a: State, b: State, c: State) -> Optional[str]:
  vacuum = a.system.vacuum()
  for n in range(-3, 4):
    expected = a if n == -1 else a.system.zero()
    if circle(vacuum, a, n) != expected:
      return f"1 o_{n} a != delta(n,-1) a for a = {a}"
  for n in range(-1, 4):
    expected = a if n == -1 else a.system.zero()
    if circle(a, vacuum, n) != expected:
      return f"a o_{n} 1 != delta(n,-1) a for a = {a}"
  if circle(a, vacuum, -2) != derivative(a):
    return f"a o_-2 1 != d(a) for a = {a}"
  return None


def check_derivative(a: State, b: State, c: State) -> Optional[str]:
  da, db = derivative(a), derivative(b)
  for n in range(-2, _bound(a, b) + 1):
    if circle(da, b, n) != circle(a, b, n - 1) * (-n):
      return f"(da) o_{n} b != -{n} a o_{n - 1} b for a = {a}, b = {b}"
    product = circle(a, b, n)
    if derivative(product) != circle(da, b, n) + circle(a, db, n):
      return f"d(a o_{n} b) != da o_{n} b + a o_{n} db for a = {a}, b = {b}"
  return None


def check_skew_symmetry(a: State, b: State, c: State) -> Optional[str]:
  bound = _bound(a, b)
  sign = _parity_sign(a, b)
  for n in range(-2, bound + 1):
    terms = [(j, circle(a, b, n + j) * ((-1)**(n + j + 1)))
             for j in range(max(bound - n, 0) + 1)]
    expected = derivative_power_sum(terms, a.system) * sign
    if circle(b, a, n) != expected:
      return f"skew-symmetry fails at n = {n} for a = {a}, b = {b}"
  return None


def check_commutator(a: State, b: State, c: State) -> Optional[str]:
  sign = _parity_sign(a, b)
  products = {k: circle(a, b, k) for k in range(_bound(a, b) + 1)}
  for m in range(-1, 3):
    for n in range(-1, 3):
      lhs = field_mode_apply(a, m, field_mode_apply(b, n, c)) - \
          field_mode_apply(b, n, field_mode_apply(a, m, c)) * sign
      rhs = a.system.zero()
      for k, ab in products.items():
        if ab:
          rhs = rhs + field_mode_apply(ab, m + n - k, c) * binomial(m, k)
      if lhs != rhs:
        return (f"commutator formula fails at (m, n) = ({m}, {n}) for " +
                f"a = {a}, b = {b}, c = {c}")
  return None


def check_quasi_commutativity(a: State, b: State, c: State) -> Optional[str]:
  lhs = wick(a, b) - wick(b, a) * _parity_sign(a, b)
  rhs = a.system.zero()
  for j in range(_bound(a, b) + 1):
    product = circle(a, b, j)
    if product:
      rhs = rhs + derivative(product, j + 1) * Fraction(
          (-1)**j, factorial(j + 1))
  if lhs != rhs:
    return f":ab: - p :ba: != sum of derivatives for a = {a}, b = {b}"
  return None


def check_weight(a: State, b: State, c: State) -> Optional[str]:
  grade_a, grade_b = grade_of(a), grade_of(b)
  if grade_a in (None, MIXED) or grade_b in (None, MIXED):
    return None
  for n in range(-2, _bound(a, b)):
    product = circle(a, b, n)
    if not product:
      continue
    expected = (grade_a + grade_b).shifted(-(n + 1))
    if grade_of(product) != expected:
      return (f"grade of a o_{n} b is {grade_of(product)}, expected " +
              f"{expected} for a = {a}, b = {b}")
  return None


def check_locality(a: State, b: State, c: State) -> Optional[str]:
  bound = _bound(a, b)
  for n in (bound, bound + 1):
    if circle(a, b, n):
      return f"a o_{n} b != 0 beyond the depth bound for a = {a}, b = {b}"
  return None


CHECKS: Dict[str, Callable[[State, State, State], Optional[str]]] = {
    "unit": check_unit,
    "derivative": check_derivative,
    "skew-symmetry": check_skew_symmetry,
    "commutator": check_commutator,
    "quasi-commutativity": check_quasi_commutativity,
    "weight": check_weight,
    "locality": check_locality,
}


def sample_system(case: str, samples: int, seed: int) -> List[CheckResult]:
  """Runs every property on `samples` random triples in the system of `case`."""
  system = build_system(case)
  random = np.random.RandomState(seed + CASES.index(case))
  failures: Dict[str, str] = {}
  for _ in range(samples):
    a, b, c = (random_state(system, random) for _ in range(3))
    for name, check in CHECKS.items():
      if name in failures:
        continue
      message = check(a, b, c)
      if message is not None:
        failures[name] = message
  results = []
  for name in CHECKS:
    check_id = f"engine-invariants/{case}/{name}"
    anchor = f"{name} identity of circle products"
    if name in failures:
      results.append(
          CheckResult(check_id, anchor, Status.FAIL,
                      f"holds on {samples} samples", failures[name]))
    else:
      results.append(
          CheckResult(check_id, anchor, Status.PASS,
                      f"holds on {samples} samples",
                      f"holds on {samples} samples"))
  return results


class EngineInvariantsSuite(SuiteDefinition):
  name = "engine-invariants"
  anchor = "identities of circle products in the left regular module"

  def default_options(self) -> Dict[str, Any]:
    return {
        "samples": env_int("FREEFIELD_INVARIANT_SAMPLES", DEFAULT_SAMPLES),
        "seed": env_int("FREEFIELD_SEED", DEFAULT_SEED),
    }

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return list(CASES)

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    return sample_system(task, options["samples"], options["seed"])
