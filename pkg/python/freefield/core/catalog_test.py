"""Unit tests of the built-in field catalog."""

from fractions import Fraction

from .catalog import *
from .fock import *


def test_generator_symbols():
  assert generator_symbol("c_xp") == "c^{x'}"
  assert generator_symbol("b_h") == "b^{h}"
  assert generator_symbol("beta1") == "β^{1}"
  assert generator_symbol("gamma_yp") == "γ^{y'}"
  assert generator_symbol("alpha_p1") == "α^+_1"
  assert generator_symbol("chi_m") == "χ^-"
  assert generator_symbol("j") == "j"


def test_linear_text():
  assert linear_text([(2, "a"), (-1, "b"), (Fraction(1, 2), "c")]) == \
      "2 a - b + 1/2 c"
  assert linear_text([(-1, "a"), (1, "b")]) == "-a + b"
  assert linear_text([(1, "a"), (-1, "a")]) == "0"


def test_aliases():
  assert field_library("adjoint").case == "W-adjoint"
  assert field_library("odake").case == "odake-original"
  assert field_library("standard").has("Q2m")
  try:
    field_library("adjoint").resolve("Q2m")
  except UnknownNameError:
    pass
  else:
    assert False, "Q2m resolved in the adjoint case"


def test_unavailable_definitions_are_dropped():
  e_library = field_library("E-adjoint")
  # Mentions beta and gamma.
  assert not e_library.has("G")
  assert e_library.has("F") and e_library.has("C_bbb")
  system = build_system("heisenberg")
  library = FieldLibrary("heisenberg", system, [
      FieldDefinition("A", "B", ""),
      FieldDefinition("B", "A", ""),
      FieldDefinition("T", "2 j", ""),
  ])
  assert library.names() == ["T"]


def test_theta_currents():
  library = field_library("W-adjoint")
  currents = theta_currents(library, "W")
  assert list(currents) == list(SL2_BASIS)
  assert currents["h"] == library.resolve("ThE_h") + library.resolve("ThS_h")
  assert grade_of(currents["x"]).charge("Th") == 2
  assert grade_of(currents["y"]).charge("Th") == -2
  assert theta_field("E", "h", "E-adjoint") == field_library(
      "E-adjoint").resolve("ThE_h")
  try:
    theta_field("Q", "h", "E-adjoint")
  except UnknownNameError:
    pass
  else:
    assert False, "unknown Theta family accepted"


def test_sugawara_text_rejects_critical_level():
  try:
    sugawara_text("v_", sl2(), "normalized", -2)
  except CriticalLevelError:
    pass
  else:
    assert False, "critical level accepted"


def test_odake_tables():
  names = set(ODAKE_GENERATORS)
  for expectation in ODAKE_OPE_TABLE:
    assert expectation.left in names and expectation.right in names
  pairs = [(e.left, e.right) for e in ODAKE_OPE_TABLE]
  assert len(pairs) == len(set(pairs))
  for library in (field_library("odake"), field_library("adjoint")):
    assert all(library.has(name) for name in ODAKE_GENERATORS), library.case


def main():
  run_unit_tests([
      test_generator_symbols,
      test_linear_text,
      test_aliases,
      test_unavailable_definitions_are_dropped,
      test_theta_currents,
      test_sugawara_text_rejects_critical_level,
      test_odake_tables,
  ])


if __name__ == "__main__":
  main()
