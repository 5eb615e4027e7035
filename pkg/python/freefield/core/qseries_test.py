"""Unit tests of truncated q-series and characters."""

from fractions import Fraction

from .qseries import *


def test_arithmetic():
  plus = TriSeries.one(1) + TriSeries.monomial(1, z=1, half=1)
  minus = TriSeries.one(1) - TriSeries.monomial(1, z=1, half=1)
  product = plus * minus
  assert product.triples() == [(0, 0, 0, 1), (2, 0, 2, -1)]
  # Terms past q^order are dropped.
  assert (TriSeries.monomial(1, half=2) * TriSeries.monomial(1, half=1)) == \
      TriSeries(1)
  assert TriSeries(2, {(0, 0, 5): 1}).coefficients == {}
  assert (TriSeries.one(3) + TriSeries.one(1)).order == 1


def test_negative_order():
  for bad in (lambda: TriSeries(-1), lambda: ch_O(-1)):
    try:
      bad()
    except DivergentSeriesError:
      continue
    assert False, "negative order accepted"


def test_jacobi_triple_product():
  assert jacobi_check(4)
  assert not jacobi_check(4, mutate=True)


def test_characters():
  chE = ch_E(3)
  assert chE.coefficient(0, 0, 0) == 1
  assert chE.coefficient(1, 2, 1) == 1
  assert chE.equal_to_order(ch_E_sum(3))
  assert invariant_extract(chE).equal_to_order(ch_O(3))
  assert character("invariant", 2) == invariant_extract(ch_E(2))
  try:
    character("bogus", 2)
  except ConfigError:
    pass
  else:
    assert False, "unknown character accepted"


def test_grade_coefficient():
  chO = ch_O(3)
  assert grade_coefficient(chO, 0, 0) == 1
  # F is the only invariant of weight 1 and charge 0.
  assert grade_coefficient(chO, 1, 0) == 1
  assert grade_coefficient(chO, Fraction(1, 3), 0) == 0
  assert grade_coefficient(ch_E(2), Fraction(1, 2), 1, 2) == 1


def test_tables():
  frame = ch_O(1).to_frame()
  assert list(frame.columns) == ["q", "z", "w", "coefficient"]
  assert frame.iloc[0].to_dict() == {"q": "0", "z": 0, "w": 0, "coefficient": 1}
  assert TriSeries(2).to_table() == "0"
  assert "coefficient" in ch_E(1).to_table()


def main():
  run_unit_tests([
      test_arithmetic,
      test_negative_order,
      test_jacobi_triple_product,
      test_characters,
      test_grade_coefficient,
      test_tables,
  ])


if __name__ == "__main__":
  main()
