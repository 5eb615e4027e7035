"""Unit tests of Lie superalgebra data and the Sugawara construction."""

from fractions import Fraction

from .catalog import field_library, sugawara_of
from .fock import *
from .lie import *


def _raises(error, function, *args) -> bool:
  try:
    function(*args)
  except error:
    return True
  return False


def test_sl2():
  lie = sl2()
  assert lie.sdim == 3
  assert lie.bracket("y", "x") == {"h": -1}
  assert lie.dual_coxeter("normalized") == 2
  assert lie.dual_coxeter("trace_C2") == 2
  assert lie.dual_coxeter("trace_C3") == Fraction(1, 2)
  assert lie.dual_basis("normalized") == {
      "x": {"y": 1},
      "y": {"x": 1},
      "h": {"h": Fraction(1, 2)},
  }
  assert lie.representations["C3"].trace_form("h", "h") == 8


def test_osp22():
  lie = osp22()
  assert lie.sdim == 0
  assert lie.bracket("Fpm", "Fmp") == {"H": 1, "E": 1}
  # Odd elements anticommute.
  assert lie.bracket("Fmp", "Fpm") == {"H": 1, "E": 1}
  assert lie.bracket("Fpp", "E") == {"Fpp": -1}
  assert lie.form("B", "X", "Y") == Fraction(-1, 2)
  assert lie.form("B", "Y", "X") == Fraction(-1, 2)
  assert lie.form("B", "Fmp", "Fpm") == 1


def test_invalid_data():
  assert _raises(LieDataError, LieData, "bad", ("a", "b"), {
      ("a", "b"): {"a": 1},
      ("b", "a"): {"a": 1},
  }, {})
  # Not invariant: B([h, x], y) = 2 but B(h, [x, y]) = 1.
  assert _raises(LieDataError, LieData, "sl2", ("x", "y", "h"), SL2_BRACKETS,
                 {"skewed": {("x", "y"): 1, ("h", "h"): 1}})
  assert _raises(LieDataError, LieData, "sl2", ("x", "y"), SL2_BRACKETS, {})


def test_critical_level():
  assert _raises(CriticalLevelError, sugawara, {}, sl2(), "normalized", -2)
  assert _raises(CriticalLevelError, sugawara, {}, sl2(), "trace_C3",
                 Fraction(-1, 2))


def test_sugawara_of_v_currents():
  library = field_library("S-adjoint")
  L, c = sugawara_of(library, "v_", sl2(), "normalized", Fraction(-3, 2))
  assert c == -9
  assert L == library.resolve("Sug_v")


def main():
  run_unit_tests([
      test_sl2,
      test_osp22,
      test_invalid_data,
      test_critical_level,
      test_sugawara_of_v_currents,
  ])


if __name__ == "__main__":
  main()
