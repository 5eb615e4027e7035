"""Unit tests of check results, OPE tables and conformal checks."""

from fractions import Fraction

from .catalog import field_library
from .checks import *
from .fock import *
from .wick import derivative


def _by_id(results):
  return {r.id: r for r in results}


def test_statuses():
  assert skipped("s", "", "no data").passed
  assert record("r", "", "3").expected == "(recorded)"
  assert not compare_values("v", "", 1, 2).passed
  assert compare_values("v", "", Fraction(1, 2), Fraction(2, 4)).passed
  assert compare_values("v", "a", 1, 1).to_dict() == {
      "id": "v",
      "anchor": "a",
      "status": "pass",
      "expected": "1",
      "got": "1",
  }


def test_ope_check_reports_difference():
  library = field_library("heisenberg")
  j = library.resolve("j")
  vacuum = library.system.vacuum()
  assert ope_check("jj", "", j, j, {1: vacuum}).passed
  wrong = ope_check("jj", "", j, j, {1: vacuum * 2, 0: j})
  assert not wrong.passed
  assert "[diff: n=1: -1 * |0>; n=0: -1 * j(-1) |0>]" in wrong.got, wrong.got


def test_closure_check():
  library = field_library("heisenberg")
  results = closure_check(
      "heis", "table", library.resolve, library.evaluate_text,
      [OpeExpectation("j", "j", {1: "1"}),
       OpeExpectation("L", "j", {1: "j", 0: "d(j)"}, "Virasoro")],
      vanishing=[("j", "k")])
  results = _by_id(results)
  assert results["heis/j*j"].passed
  assert results["heis/L*j"].passed
  assert results["heis/L*j"].anchor == "Virasoro"
  unknown = results["heis/j*k"]
  assert unknown.status == Status.FAIL
  assert unknown.got.startswith("error:")


def test_span_closure_check():
  library = field_library("heisenberg")
  j, L = library.resolve("j"), library.resolve("L")
  closed = span_closure_check("h", "", [("j", j)])
  assert [r.got for r in closed] == ["n=1: 1*1"]
  results = _by_id(span_closure_check("v", "", [("j", j), ("L", L)]))
  assert results["v/j*L"].got == "n=1: 1*j"
  # L o_0 j = dj is not a generator.
  assert not results["v/L*j"].passed
  assert not results["v/L*L"].passed


def test_conformal_check():
  library = field_library("heisenberg")
  j, L = library.resolve("j"), library.resolve("L")
  fields = [
      FieldSpec("j", j, 1),
      FieldSpec("dj", derivative(j), 2, poles={2: j * 2}),
      FieldSpec("dj_quasi", derivative(j), 2, primary=False),
  ]
  results = _by_id(conformal_check("heis", "", L, fields, 1))
  assert results["heis/central-charge"].passed
  assert results["heis/j/weight"].passed
  assert results["heis/j/primary"].passed
  assert results["heis/dj/higher-poles"].passed
  assert not results["heis/dj_quasi/quasi-primary"].passed
  wrong = _by_id(conformal_check("heis", "", L, [], 2))
  assert not wrong["heis/central-charge"].passed
  assert central_charge(L) == 1
  assert central_charge(j) == 0


def main():
  run_unit_tests([
      test_statuses,
      test_ope_check_reports_difference,
      test_closure_check,
      test_span_closure_check,
      test_conformal_check,
  ])


if __name__ == "__main__":
  main()
