"""Unit tests of the adjoint OPE table."""

from ..core.catalog import field_library
from ..core.checks import Status, closure_check
from ..core.utils import *
from ..core.wick import ope
from .definitions import (ADJOINT_TABLE, CASE, STRONG_GENERATORS,
                          UNLISTED_PRODUCTS, AdjointTableSuite, regular_pairs,
                          table_pairs, unlisted_product_checks)


def _unordered(pairs):
  return [frozenset(pair) for pair in pairs]


def test_every_pair_is_checked_once():
  checked = (list(table_pairs()) + _unordered(UNLISTED_PRODUCTS) +
             _unordered(regular_pairs()))
  n = len(STRONG_GENERATORS)
  assert len(checked) == n * (n + 1) // 2
  assert len(set(checked)) == len(checked)
  for a in STRONG_GENERATORS:
    for b in STRONG_GENERATORS:
      assert frozenset((a, b)) in checked, f"{a}*{b} unchecked"
  assert "regular" in AdjointTableSuite().tasks({})


def test_table_names_are_strong_generators():
  for _, expectations, vanishing in ADJOINT_TABLE.values():
    for e in expectations:
      assert {e.left, e.right} <= set(STRONG_GENERATORS), e
    for pair in vanishing:
      assert set(pair) <= set(STRONG_GENERATORS), pair


def test_g_gbar_zero_pole():
  library = field_library(CASE)
  _, expectations, _ = ADJOINT_TABLE["g-gbar"]
  (result,) = closure_check("g-gbar", "", library.resolve,
                            library.evaluate_text, expectations)
  assert result.status == Status.PASS, result.got
  g0gbar = library.evaluate_text("C(G, Gbar, 0)")
  assert g0gbar == library.resolve("L_Wgt") - library.resolve("L_Sgt_v")
  flipped = library.evaluate_text(expectations[0].poles[0]) + \
      library.evaluate_text("W(v_h, v_h)") * 2
  assert g0gbar != flipped


def test_unlisted_products_are_cubic():
  library = field_library(CASE)
  results = unlisted_product_checks("unlisted", library)
  assert [r.status for r in results] == [Status.PASS] * len(UNLISTED_PRODUCTS)
  for left, right in UNLISTED_PRODUCTS:
    poles = ope(library.resolve(left), library.resolve(right)).poles
    assert list(poles) == [0], f"{left}*{right}: {sorted(poles)}"


def main():
  run_unit_tests([
      test_every_pair_is_checked_once,
      test_table_names_are_strong_generators,
      test_g_gbar_zero_pole,
      test_unlisted_products_are_cubic,
  ])


if __name__ == "__main__":
  main()
