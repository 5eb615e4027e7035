"""Unit tests of the config format."""

from fractions import Fraction

from .catalog import FieldDefinition, field_library
from .config import *
from .fock import *
from .wick import ope

BC_CONFIG = """
# A single bc pair.
[system]
name: bc
generator: b odd 1/2 F=-1
generator: c odd 1/2 F=1
contraction: b c 0 1
[fields]
J = W(b, c)   # the U(1) current
"""


def _config_error(text: str, case=None) -> str:
  try:
    load_library(text, case)
  except ConfigError as error:
    return str(error)
  assert False, "config accepted"


def test_own_system():
  library = load_library(BC_CONFIG)
  system = library.system
  assert system.name == "bc"
  assert [g.name for g in system.generators] == ["b", "c"]
  assert system.generators[0].weight == Fraction(1, 2)
  assert system.charge_names == ("F",)
  J = library.resolve("J")
  # J(z)J(w) ~ (z-w)^-2.
  assert ope(J, J).poles == {1: system.vacuum()}


def test_error_lines():
  assert _config_error("[system]\ngenerator: b fermion 1/2").startswith(
      "config line 2:")
  assert _config_error("[system]\nname: x\ncontraction: b c 0").startswith(
      "config line 3:")
  assert "unknown section" in _config_error("[dynamics]")
  assert "outside of a section" in _config_error("a = b")
  assert "in field Y" in _config_error("[fields]\nY = W(a", "heisenberg")
  conflict = ("[system]\ngenerator: b odd 1/2\ngenerator: c odd 1/2\n" +
              "contraction: b c 0 1\ncontraction: c b 0 2\n")
  assert _config_error(conflict).startswith("config line 5:")


def test_extends_case():
  text = "[fields]\nT = 2 L\n"
  assert "no [system] section" in _config_error(text)
  library = load_library(text, "heisenberg")
  assert library.has("L") and library.has("T")
  assert library.resolve("T") == library.resolve("L") * 2
  # The built-in library is unchanged.
  assert not field_library("heisenberg").has("T")


def test_with_definitions_overrides():
  library = field_library("heisenberg").with_definitions(
      [FieldDefinition("L", "W(j, j)", "doubled")])
  assert library.definition("L").anchor == "doubled"
  assert library.resolve("L") == field_library("heisenberg").resolve("L") * 2


def test_export_round_trip():
  for case in ("heisenberg", "symplectic-fermions", "E-standard"):
    text = export_case(case)
    parsed = parse_config(text)
    assert export_system(parsed.system) == export_system(build_system(case))
    library = field_library(case)
    assert [d.name for d in parsed.definitions] == library.names()
    reloaded = load_library(text)
    for name in library.names():
      assert reloaded.resolve(name).to_text() == library.resolve(
          name).to_text(), name


def main():
  run_unit_tests([
      test_own_system,
      test_error_lines,
      test_extends_case,
      test_with_definitions_overrides,
      test_export_round_trip,
  ])


if __name__ == "__main__":
  main()
