"""Characters of E(C^3) and Odake's algebra, and slice dimensions against them.

The q-series side is pure series arithmetic; the dims-crosscheck suite counts
the same invariants directly as kernels of zero modes on graded slices of the
adjoint bc system.
"""

from fractions import Fraction
from typing import Any, Dict, List, Mapping, Sequence

from ..core.catalog import field_library, theta_currents
from ..core.checks import *
from ..core.fock import GradeVector
from ..core.linalg import annihilator_slice, same_span, slice_basis
from ..core.qseries import *
from ..core.suite_definition import SuiteDefinition
from ..core.utils import env_int

DEFAULT_ORDER = 6
DEFAULT_CUTOFF = 3

CHARACTER_TASKS = ("jacobi", "product-sum", "invariant", "positivity",
                   "coefficients", "table")


class CharactersSuite(SuiteDefinition):
  name = "characters"
  anchor = "characters of E(C^3) and of Odake's algebra"

  def default_options(self) -> Dict[str, Any]:
    return {"order": env_int("FREEFIELD_CHAR_ORDER", DEFAULT_ORDER)}

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return list(CHARACTER_TASKS)

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    order = options["order"]
    prefix = f"{self.name}/{task}"
    if task == "jacobi":
      return [
          compare_values(f"{prefix}/identity", "Jacobi triple product", True,
                         jacobi_check(order)),
          compare_values(f"{prefix}/mutated", "Jacobi triple product",
                         False, jacobi_check(order, mutate=True)),
      ]
    if task == "product-sum":
      return [
          compare_values(f"{prefix}/chE", "ch_E as a sum of theta functions",
                         True,
                         ch_E(order).equal_to_order(ch_E_sum(order)))
      ]
    if task == "invariant":
      return [
          compare_values(f"{prefix}/chO",
                         "SL2 invariants of E(C^3) have character ch_O", True,
                         invariant_extract(ch_E(order)).equal_to_order(
                             ch_O(order)))
      ]
    if task == "positivity":
      negative = [t for t in ch_O(order).triples() if t[3] < 0]
      return [
          compare_values(f"{prefix}/chO", "ch_O has nonnegative coefficients",
                         "[]", str(negative))
      ]
    if task == "coefficients":
      series = ch_O(order)
      spots = (("z^0 q^0", 0, 0, 1), ("z^1 q^1/2", 1, 1, 0),
               ("z^-1 q^1/2", -1, 1, 0), ("z^0 q^1", 0, 2, 1))
      return [
          compare_values(f"{prefix}/{label}", "low coefficients of ch_O",
                         expected, series.coefficient(z=z, half=half))
          for label, z, half, expected in spots
      ]
    return [record(f"{prefix}/chO", "ch_O", "\n" + ch_O(order).to_table())]


################################################################################
# Slice dimensions of E(C^3) against ch_O.
################################################################################
E_CASE = "E-adjoint"


def half_steps(cutoff: int) -> List[Fraction]:
  return [Fraction(h, 2) for h in range(2 * cutoff + 1)]


def _dims_at_weight(prefix: str, weight: Fraction,
                    order: int) -> List[CheckResult]:
  library = field_library(E_CASE)
  currents = list(theta_currents(library, "E").values())
  invariants = invariant_extract(ch_E(order))
  odake = ch_O(order)
  results = []
  for f in range(-3, 4):
    grade = GradeVector(weight, (("F", f), ("Th", 0)))
    grade_id = f"{prefix}/wt={weight}/F={f}"
    zero_modes = annihilator_slice(currents, grade, modes=(0,))
    full = annihilator_slice(currents, grade)
    results.append(
        compare_values(f"{grade_id}/zero-modes", "dimension of E^SL2 vs ch_O",
                       grade_coefficient(odake, weight, f), len(zero_modes)))
    results.append(
        compare_values(f"{grade_id}/extracted",
                       "invariant extraction of ch_E",
                       grade_coefficient(invariants, weight, f),
                       len(zero_modes)))
    status = Status.PASS if len(full) <= len(zero_modes) else Status.FAIL
    total = slice_basis(library.system, grade).dimension
    results.append(
        CheckResult(f"{grade_id}/sl2[t]", "E^(sl2[t]) inside E^SL2", status,
                    f"<= {len(zero_modes)}", f"{len(full)} (slice {total})"))
  return results


def _spot_checks(prefix: str) -> List[CheckResult]:
  """Low-weight invariants: nothing at 1/2, F at 1, C^bbb and C^ccc at 3/2."""
  library = field_library(E_CASE)
  currents = list(theta_currents(library, "E").values())
  anchor = "low-weight elements of E(C^3)^(sl2[t])"

  def invariants(weight, f):
    return annihilator_slice(currents, GradeVector(weight, (("F", f),
                                                            ("Th", 0))))

  results = []
  for f in (-1, 1):
    results.append(
        compare_values(f"{prefix}/spots/wt=1/2/F={f}", anchor, 0,
                       len(invariants(Fraction(1, 2), f))))
  spans = (
      (Fraction(1), 0, "F"),
      (Fraction(3, 2), -3, "C_bbb"),
      (Fraction(3, 2), 3, "C_ccc"),
  )
  for weight, f, name in spans:
    basis = invariants(weight, f)
    spanned = same_span(basis, [library.resolve(name)])
    results.append(
        compare_values(f"{prefix}/spots/wt={weight}/F={f}", anchor,
                       f"spanned by {name}",
                       f"spanned by {name}" if spanned else
                       f"dimension {len(basis)}"))
  return results


class DimsCrosscheckSuite(SuiteDefinition):
  name = "dims-crosscheck"
  anchor = "graded dimensions of E(C^3) invariants against characters"

  def default_options(self) -> Dict[str, Any]:
    return {
        "cutoff": env_int("FREEFIELD_CUTOFF", DEFAULT_CUTOFF),
        "order": env_int("FREEFIELD_CHAR_ORDER", DEFAULT_ORDER),
    }

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return ["spots"] + [f"wt={w}" for w in half_steps(options["cutoff"])]

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    if task == "spots":
      return _spot_checks(self.name)
    weight = Fraction(task[len("wt="):])
    if weight > options["order"]:
      return [
          skipped(f"{self.name}/{task}", self.anchor,
                  f"weight {weight} beyond character order {options['order']}")
      ]
    return _dims_at_weight(self.name, weight, options["order"])
