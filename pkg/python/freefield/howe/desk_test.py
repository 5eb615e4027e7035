"""Unit tests of the howe-desk slice grades."""

from fractions import Fraction

from ..core.catalog import field_library
from ..core.fock import grade_of
from ..core.utils import *
from .definitions import H_RANGE, howe_slice_checks, slice_grades


def _f_charges(weight):
  return sorted({grade.charge("F") for grade in slice_grades(weight)})


def test_slice_grades_cover_every_f_charge():
  assert _f_charges(Fraction(0)) == [0]
  assert _f_charges(Fraction(1, 2)) == [-1, 0, 1]
  assert _f_charges(Fraction(2)) == list(range(-4, 5))
  num_h = H_RANGE[1] - H_RANGE[0] + 1
  assert len(slice_grades(Fraction(3, 2))) == 7 * num_h
  # C^ccc and C^bbb sit at |F| = 3 in weight 3/2.
  library = field_library("W-adjoint")
  for name in ("C_ccc", "C_bbb"):
    grade = grade_of(library.resolve(name))
    assert grade in slice_grades(grade.weight), f"{name}: {grade}"


def test_howe_slices_at_weight_one():
  results = howe_slice_checks("howe-desk", Fraction(1))
  assert len(results) == 5 * (H_RANGE[1] - H_RANGE[0] + 1)
  failed = [r.id for r in results if not r.passed]
  assert not failed, failed
  ids = {r.id for r in results}
  assert "howe-desk/wt=1/F=2,H=0" in ids
  assert "howe-desk/wt=1/F=-2,H=0" in ids


def main():
  run_unit_tests([
      test_slice_grades_cover_every_f_charge,
      test_howe_slices_at_weight_one,
  ])


if __name__ == "__main__":
  main()
