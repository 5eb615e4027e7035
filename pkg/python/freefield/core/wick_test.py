"""Unit tests of circle products, Wick products and OPEs."""

from fractions import Fraction

from .fock import *
from .systems import build_system
from .wick import *


def test_binomial():
  assert binomial(5, 2) == 10
  assert binomial(3, 5) == 0
  assert [binomial(-1, k) for k in range(4)] == [1, -1, 1, -1]
  assert binomial(-2, 3) == -4
  assert binomial(4, -1) == 0


def test_heisenberg_products():
  system = build_system("heisenberg")
  j = system.generator_state("j")
  assert circle(j, j, 1) == system.vacuum()
  assert circle(j, j, 0).is_zero()
  assert circle(j, j, 2).is_zero()
  assert wick(j, j) == State.from_modes(system, [("j", -1), ("j", -1)])
  assert circle(j, j, -2) == State.from_modes(system, [("j", -2), ("j", -1)])


def test_odd_contractions():
  standard = build_system("E-standard")
  b1, c1 = standard.generator_state("b1"), standard.generator_state("c1")
  assert circle(b1, c1, 0) == standard.vacuum()
  assert circle(c1, b1, 0) == standard.vacuum()
  assert wick(c1, b1) == -wick(b1, c1)
  fermions = build_system("symplectic-fermions")
  chi_p = fermions.generator_state("chi_p")
  chi_m = fermions.generator_state("chi_m")
  assert circle(chi_p, chi_m, 1) == fermions.vacuum()
  assert circle(chi_m, chi_p, 1) == -fermions.vacuum()
  assert circle(chi_p, chi_m, 0).is_zero()


def test_derivative():
  system = build_system("heisenberg")
  j = system.generator_state("j")
  assert derivative(j) == State.from_modes(system, [("j", -2)])
  assert derivative(j, 2) == State.from_modes(system, [("j", -3)], 2)
  jj = wick(j, j)
  assert derivative(jj) == State.from_modes(system, [("j", -2), ("j", -1)],
                                            2)
  assert derivative(system.vacuum()).is_zero()
  assert derivative(j, 0) == j


def test_virasoro_ope():
  system = build_system("heisenberg")
  j = system.generator_state("j")
  L = wick(j, j) * Fraction(1, 2)
  result = ope(L, L, "L", "L")
  assert set(result.poles) == {3, 1, 0}, result.to_text()
  assert result.poles[3] == system.vacuum() * Fraction(1, 2)
  assert result.poles[1] == L * 2
  assert result.poles[0] == derivative(L)
  assert ope(j, L, "j", "L").poles == {1: j}
  assert result.to_text().startswith("L(z) L(w) ~\n  (z-w)^-4: 1/2 * |0>")


def test_regular_ope():
  standard = build_system("E-standard")
  b1, b2 = standard.generator_state("b1"), standard.generator_state("b2")
  result = ope(b1, b2, "b1", "b2")
  assert result.is_regular()
  assert result.to_text() == "b1(z) b2(w) ~ 0"


def test_iterated_wick_is_right_nested():
  system = build_system("E-standard")
  b1, c1, b2 = (system.generator_state(n) for n in ("b1", "c1", "b2"))
  assert wick_many([b1, c1, b2]) == wick(b1, wick(c1, b2))
  assert wick_many([b1]) == b1
  try:
    wick_many([])
  except FreeFieldError:
    pass
  else:
    assert False, "empty Wick product accepted"


def test_depth():
  system = build_system("heisenberg")
  s = State.from_modes(system, [("j", -3), ("j", -1)])
  assert depth(s) == 4
  assert depth(system.vacuum()) == 0


def test_derivative_power_sum():
  system = build_system("heisenberg")
  j = system.generator_state("j")
  total = derivative_power_sum([(0, j), (2, j * 2)], system)
  assert total == j + derivative(j, 2)


def test_system_mismatch():
  a = build_system("heisenberg").generator_state("j")
  b = build_system("E-standard").generator_state("b1")
  try:
    circle(a, b, 0)
  except SystemMismatchError:
    return
  assert False, "product across systems accepted"


def main():
  run_unit_tests([
      test_binomial,
      test_heisenberg_products,
      test_odd_contractions,
      test_derivative,
      test_virasoro_ope,
      test_regular_ope,
      test_iterated_wick_is_right_nested,
      test_depth,
      test_derivative_power_sum,
      test_system_mismatch,
  ])


if __name__ == "__main__":
  main()
