"""Unit tests of exact linear algebra and graded slices."""

from fractions import Fraction

from .catalog import field_library, theta_currents
from .fock import *
from .linalg import *
from .systems import build_system
from .wick import derivative


def test_rref_and_kernel():
  matrix = RationalMatrix.from_dense([[1, 2], [2, 4]])
  assert rref(matrix).rank == 1
  assert kernel(matrix) == [[Fraction(-2), Fraction(1)]]
  identity = RationalMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
  assert rref(identity).rank == 3
  assert kernel(identity) == []
  halves = RationalMatrix.from_dense([[2, 1, 0], [0, 3, 1]])
  for vector in kernel(halves):
    assert not any(halves.apply(vector))
  try:
    RationalMatrix.from_dense([[1, 2], [3]])
  except ValueError:
    pass
  else:
    assert False, "ragged matrix accepted"


def test_echelon_is_reduced():
  echelon = Echelon()
  assert echelon.add({0: Fraction(2), 1: Fraction(4)})
  assert echelon.add({1: Fraction(1), 2: Fraction(1)})
  assert not echelon.add({0: Fraction(1), 1: Fraction(3), 2: Fraction(1)})
  assert echelon.rows() == [{0: 1, 2: -2}, {1: 1, 2: 1}]


def test_span_coefficients():
  system = build_system("heisenberg")
  j = system.generator_state("j")
  dj = derivative(j)
  assert span_coefficients(j * 2 + dj * 3, [j, dj]) == [2, 3]
  assert span_coefficients(derivative(j, 2), [j, dj]) is None
  assert span_coefficients(system.zero(), []) == []
  assert same_span([j, dj], [j + dj, j - dj])
  assert not same_span([j], [dj])
  assert same_span([], [])


def test_slice_dimensions():
  heisenberg = build_system("heisenberg")
  # Partitions of 3.
  assert slice_basis(heisenberg, GradeVector(3)).dimension == 3
  e_adjoint = build_system("E-adjoint")
  assert slice_basis(e_adjoint, GradeVector(Fraction(1, 2))).dimension == 6
  grade = GradeVector(1, (("F", 0), ("Th", 0)))
  assert slice_basis(e_adjoint, grade).dimension == 3
  # Only the vacuum at weight 0.
  assert slice_basis(e_adjoint, GradeVector(0)).states() == [
      e_adjoint.vacuum()
  ]


def test_non_finite_slices():
  s_adjoint = build_system("S-adjoint")
  try:
    slice_basis(s_adjoint, GradeVector(1))
  except NonFiniteSliceError:
    pass
  else:
    assert False, "infinite slice accepted"
  # H separates the weight-0 gammas: H = 2 at weight 0 is quadratic in gamma.
  assert slice_basis(s_adjoint, GradeVector(0, (("H", 2),))).dimension == 6


def test_annihilator_slice():
  library = field_library("E-adjoint")
  currents = list(theta_currents(library, "E").values())
  grade = GradeVector(1, (("F", 0), ("Th", 0)))
  invariants = annihilator_slice(currents, grade)
  assert len(invariants) == 1
  assert same_span(invariants, [library.resolve("F")])
  assert len(annihilator_slice(currents, grade, modes=(0,))) == 1
  assert len(annihilator_slice([], grade, system=library.system)) == 3
  try:
    annihilator_slice([], grade)
  except FreeFieldError:
    pass
  else:
    assert False, "annihilator_slice without a system accepted"


def main():
  run_unit_tests([
      test_rref_and_kernel,
      test_echelon_is_reduced,
      test_span_coefficients,
      test_slice_dimensions,
      test_non_finite_slices,
      test_annihilator_slice,
  ])


if __name__ == "__main__":
  main()
