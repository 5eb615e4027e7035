"""Odake's algebra on its original free-field realization.

The eight generators G, Gbar, X, Xbar (and F, L, Y, Ybar derived from them)
live in a rank 6 Heisenberg algebra tensored with a rank 3 bc system. The same
abstract OPE table is checked here and on the sl2[t] commutant inside W of the
adjoint case.
"""

from fractions import Fraction
from typing import Any, Dict, List, Mapping, Sequence

from ..core.catalog import *
from ..core.checks import *
from ..core.suite_definition import SuiteDefinition

TABLE_BLOCKS = {
    "n2": N2,
    "fx": FX,
    "mixed": MIXED_BLOCK,
    "remaining": REMAINING,
}


def odake_table_checks(prefix: str, library: FieldLibrary,
                       block: str) -> List[CheckResult]:
  """The entries of one block of Odake's OPE table over `library`."""
  anchor = TABLE_BLOCKS[block]
  expectations = [e for e in ODAKE_OPE_TABLE if e.anchor == anchor]
  return closure_check(f"{prefix}/{block}", anchor, library.resolve,
                       library.evaluate_text, expectations)


def odake_relation_checks(prefix: str,
                          library: FieldLibrary) -> List[CheckResult]:
  """d(X) = :FX:, d(Xbar) = -:FXbar:, :YY: = 0 and :YbarYbar: = 0."""
  results = []
  anchor = "normally ordered relations of Odake's algebra"
  for relation, lhs, rhs in ODAKE_RELATIONS:
    check_id = f"{prefix}/relations/{relation}"
    try:
      results.append(
          compare_states(check_id, anchor, library.evaluate_text(rhs),
                         library.evaluate_text(lhs)))
    except FreeFieldError as error:
      results.append(
          CheckResult(check_id, anchor, Status.FAIL, rhs, f"error: {error}"))
  return results


def odake_conformal_checks(prefix: str,
                           library: FieldLibrary) -> List[CheckResult]:
  """L has c = 9; F, G, Gbar, X, Xbar, Y, Ybar are primary of their weights."""
  weights = {
      "F": Fraction(1),
      "G": Fraction(3, 2),
      "Gbar": Fraction(3, 2),
      "X": Fraction(3, 2),
      "Xbar": Fraction(3, 2),
      "Y": Fraction(2),
      "Ybar": Fraction(2),
  }
  fields = [
      FieldSpec(name, library.resolve(name), weight)
      for name, weight in weights.items()
  ]
  return conformal_check(f"{prefix}/conformal", "Virasoro element L, c = 9",
                         library.resolve("L"), fields, Fraction(9))


class OdakeOriginalSuite(SuiteDefinition):
  name = "odake-original"
  anchor = "Odake's algebra on rank 6 Heisenberg (x) rank 3 bc"

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return list(TABLE_BLOCKS) + ["relations", "conformal"]

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    library = field_library("odake-original")
    if task in TABLE_BLOCKS:
      return odake_table_checks(self.name, library, task)
    if task == "relations":
      return odake_relation_checks(self.name, library)
    return odake_conformal_checks(self.name, library)
