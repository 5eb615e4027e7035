"""The standard case C^2, Heisenberg fields and symplectic fermions."""

from fractions import Fraction
from typing import Any, List, Mapping, Sequence

from ..core.catalog import *
from ..core.checks import *
from ..core.suite_definition import SuiteDefinition


def _invariance_checks(prefix: str, library: FieldLibrary, which: str,
                       names: Sequence[str]) -> List[CheckResult]:
  """Every Theta_which current has regular OPE with every field in names."""
  vanishing = [(f"Th{which}_{xi}", name) for xi in SL2_BASIS for name in names]
  return closure_check(f"{prefix}/invariance", f"fields are sl2[t] invariant",
                       library.resolve, library.evaluate_text, [], vanishing)


SL21_OCTET = ("H", "F", "Ep", "Em", "Q1m", "Q1p", "Q2p", "Q2m")


class Sl21Suite(SuiteDefinition):
  name = "sl21"
  anchor = "W(C^2)^(sl2[t]) is generated by an sl(2|1) octet of currents"

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return ["invariance", "closure"]

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    library = field_library("W-standard")
    if task == "invariance":
      return _invariance_checks(self.name, library, "W", SL21_OCTET)
    generators = [(name, library.resolve(name)) for name in SL21_OCTET]
    return span_closure_check(f"{self.name}/closure", self.anchor, generators)


class L1Sl2Suite(SuiteDefinition):
  name = "L1sl2"
  anchor = "E(C^2)^(sl2[t]) is L_1(sl2) on J, E^+ and E^-"

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return ["invariance", "table"]

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    library = field_library("E-standard")
    if task == "invariance":
      return _invariance_checks(self.name, library, "E", ("J", "Ep", "Em"))
    expectations = [
        OpeExpectation("J", "J", {1: "2"}),
        OpeExpectation("J", "Ep", {0: "2 Ep"}),
        OpeExpectation("J", "Em", {0: "-2 Em"}),
        OpeExpectation("Ep", "Em", {1: "-1", 0: "-J"}),
        OpeExpectation("Em", "Ep", {1: "-1", 0: "J"}),
    ]
    return closure_check(f"{self.name}/table", self.anchor, library.resolve,
                         library.evaluate_text, expectations,
                         [("Ep", "Ep"), ("Em", "Em")])


class HeisenbergStandardSuite(SuiteDefinition):
  name = "heisenberg-std"
  anchor = "S(C^2)^(sl2[t]) is a rank one Heisenberg algebra"

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return ["invariance", "table", "heisenberg"]

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    if task == "heisenberg":
      library = field_library("heisenberg")
      results = closure_check(f"{self.name}/heisenberg",
                              "Heisenberg field j(z)j(w) ~ (z-w)^-2",
                              library.resolve, library.evaluate_text,
                              [OpeExpectation("j", "j", {1: "1"})])
      results += conformal_check(
          f"{self.name}/heisenberg/conformal", "L = 1/2 :jj:, c = 1",
          library.resolve("L"),
          [FieldSpec("j", library.resolve("j"), Fraction(1))], Fraction(1))
      return results
    library = field_library("S-standard")
    if task == "invariance":
      return _invariance_checks(self.name, library, "S", ("H",))
    return closure_check(f"{self.name}/table", self.anchor, library.resolve,
                         library.evaluate_text,
                         [OpeExpectation("H", "H", {1: "-2"})])


W3_POLES = {
    5: "-4",
    3: "12 L",
    2: "6 d(L)",
    1: "16 W(L, L) - 3 d2(L)",
    0: "8 d(W(L, L)) - 2 d3(L)",
}


class W3MinusTwoSuite(SuiteDefinition):
  name = "w3-minus2"
  anchor = "W_3 algebra at c = -2 inside symplectic fermions"

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return ["conformal", "table"]

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    library = field_library("symplectic-fermions")
    if task == "conformal":
      fields = [
          FieldSpec(name, library.resolve(name), weight)
          for name, weight in (("chi_p", Fraction(1)), ("chi_m", Fraction(1)),
                               ("Wp", Fraction(3)))
      ]
      return conformal_check(f"{self.name}/conformal",
                             "Virasoro element of symplectic fermions, c = -2",
                             library.resolve("L"), fields, Fraction(-2))
    return closure_check(f"{self.name}/table", self.anchor, library.resolve,
                         library.evaluate_text,
                         [OpeExpectation("Wp", "Wp", W3_POLES)])
