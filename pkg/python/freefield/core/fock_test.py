"""Unit tests of Fock states, generators and contraction tables."""

from fractions import Fraction

from .fock import *
from .systems import build_system, canonical_case


def _raises(error, function, *args) -> bool:
  try:
    function(*args)
  except error:
    return True
  return False


def test_monomial_order():
  heisenberg = build_system("heisenberg")
  s = State.from_modes(heisenberg, [("j", -1), ("j", -3)])
  assert list(s.terms) == [((0, -3), (0, -1))], s.to_text()
  assert s.to_text() == "1 * j(-3) j(-1) |0>"


def test_odd_modes_anticommute():
  fermions = build_system("symplectic-fermions")
  pm = State.from_modes(fermions, [("chi_p", -1), ("chi_m", -1)])
  mp = State.from_modes(fermions, [("chi_m", -1), ("chi_p", -1)])
  assert pm == -mp
  assert State.from_modes(fermions, [("chi_p", -2), ("chi_p", -2)]).is_zero()
  assert pm.parity == Parity.EVEN
  assert fermions.generator_state("chi_p").parity == Parity.ODD


def test_mixed_parity():
  fermions = build_system("symplectic-fermions")
  mixed = fermions.vacuum() + fermions.generator_state("chi_p")
  assert mixed.is_mixed
  assert mixed.parity is None
  assert not fermions.zero().is_mixed


def test_annihilation_modes_are_rejected():
  heisenberg = build_system("heisenberg")
  assert _raises(FreeFieldError, normalize_monomial, heisenberg, [(0, 0)])


def test_contraction_table_conflicts():
  table = ContractionTable().add("a", "b", 0, 1)
  assert _raises(ContractionTableError, table.add, "a", "b", 0, 2)
  assert _raises(ContractionTableError, table.add, "a", "b", -1, 1)


def test_contraction_table_skew_consistency():
  generators = (GeneratorSpec("b", Parity.ODD, Fraction(1, 2)),
                GeneratorSpec("c", Parity.ODD, Fraction(1, 2)))
  one_sided = ContractionTable().add("b", "c", 0, 1, mirror=False)
  assert _raises(ContractionTableError, FreeFieldSystem, "bc", generators,
                 one_sided)
  undeclared = ContractionTable().add("b", "x", 0, 1)
  assert _raises(UnknownGeneratorError, FreeFieldSystem, "bx", generators,
                 undeclared)
  system = FreeFieldSystem("bc", generators,
                           ContractionTable().add("b", "c", 0, 1))
  # c(z)b(w) ~ 1/(z-w) as well for an odd pair at order 0.
  assert system.bracket(1, 0) == {0: Fraction(1)}


def test_generator_validation():
  assert _raises(ConfigError, GeneratorSpec, "1b", Parity.ODD, 1)
  assert _raises(ConfigError, GeneratorSpec, "b", Parity.ODD, -1)
  assert _raises(ConfigError, Parity.parse, "fermion")
  assert Parity.parse(" Odd ") == Parity.ODD
  generators = (GeneratorSpec("j", Parity.EVEN, 1),
                GeneratorSpec("j", Parity.EVEN, 1))
  assert _raises(ConfigError, FreeFieldSystem, "jj", generators,
                 ContractionTable())


def test_grades():
  e_adjoint = build_system("E-adjoint")
  s = State.from_modes(e_adjoint, [("b_x", -1), ("c_xp", -1)])
  assert grade_of(s) == GradeVector(1, (("F", 0), ("Th", 0)))
  raised = State.from_modes(e_adjoint, [("b_x", -1)])
  assert grade_of(raised) == GradeVector(Fraction(1, 2), (("F", -1), ("Th", 2)))
  assert grade_of(s + raised) is MIXED
  assert grade_of(e_adjoint.zero()) is None
  # A weight override moves b to weight 1.
  heavy = grade_of(raised, {"b_x": 1})
  assert heavy.weight == 1


def test_embedding():
  s_adjoint = build_system("S-adjoint")
  w_adjoint = build_system("W-adjoint")
  s = State.from_modes(s_adjoint, [("beta_x", -1), ("gamma_xp", -1)], 3)
  embedded = embed_state(s, w_adjoint)
  assert embedded.system is w_adjoint
  assert embedded == State.from_modes(w_adjoint, [("beta_x", -1),
                                                  ("gamma_xp", -1)], 3)
  assert _raises(SystemMismatchError, lambda: s + embedded)


def test_cases():
  assert canonical_case("adjoint") == "W-adjoint"
  assert _raises(ConfigError, canonical_case, "octonions")
  assert build_system("odake") is build_system("odake-original")
  w = build_system("W-standard")
  assert [g.name for g in w.generators] == [
      "b1", "b2", "c1", "c2", "beta1", "beta2", "gamma1", "gamma2"
  ]
  assert w.charge_names == ("F", "H", "Th")


def main():
  run_unit_tests([
      test_monomial_order,
      test_odd_modes_anticommute,
      test_mixed_parity,
      test_annihilation_modes_are_rejected,
      test_contraction_table_conflicts,
      test_contraction_table_skew_consistency,
      test_generator_validation,
      test_grades,
      test_embedding,
      test_cases,
  ])


if __name__ == "__main__":
  main()
