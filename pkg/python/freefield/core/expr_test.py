"""Unit tests of the field expression grammar."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from .catalog import field_library
from .expr import *
from .fock import *
from .wick import derivative, wick


def _syntax_error(text: str) -> ExprSyntaxError:
  try:
    parse_field_expr(text)
  except ExprSyntaxError as error:
    return error
  assert False, f"{text!r} parsed"


def test_displayed_formulas():
  assert parse_field_expr("W(b_x, c_xp)") == Wick((Name("b_x"), Name("c_xp")))
  assert parse_field_expr("1/2 W(Q_bc, Q_gc)") == Scaled(
      Fraction(1, 2), Wick((Name("Q_bc"), Name("Q_gc"))))
  assert parse_field_expr("C(G, Gbar, 0) - 1/2 d(F)") == Sum((
      (1, Circle(Name("G"), Name("Gbar"), 0)),
      (-1, Scaled(Fraction(1, 2), Deriv(1, Name("F")))),
  ))
  assert parse_field_expr("d3(j)") == Deriv(3, Name("j"))
  assert parse_field_expr("C(a, b, -2)") == Circle(Name("a"), Name("b"), -2)
  assert parse_field_expr("-x") == Sum(((-1, Name("x")),))
  assert parse_field_expr("3") == Literal(Fraction(3))


def test_syntax_errors():
  error = _syntax_error("W(a b)")
  assert (error.line, error.column) == (1, 5), str(error)
  error = _syntax_error("a +\n )")
  assert (error.line, error.column) == (2, 2), str(error)
  assert "expected" in str(_syntax_error("C(a, b)"))
  assert "zero denominator" in str(_syntax_error("1/0 a"))
  assert "not a function" in str(_syntax_error("f(a)"))
  assert "empty" in str(_syntax_error("  "))
  assert "unexpected character" in str(_syntax_error("a * b"))


def test_referenced_names():
  node = parse_field_expr("W(F, X) - 1/2 d(C(G, Xbar, 0)) + 2")
  assert referenced_names(node) == ["F", "X", "G", "Xbar"]


def test_evaluate():
  library = field_library("heisenberg")
  j = library.resolve("j")
  assert library.evaluate_text("2 j - j") == j
  assert library.evaluate_text("d2(j)") == derivative(j, 2)
  assert library.evaluate_text("2 L") == wick(j, j)
  assert library.evaluate_text("C(j, j, 1)") == library.system.vacuum()
  assert library.evaluate_text("1/2") == library.system.vacuum() * Fraction(
      1, 2)
  try:
    library.evaluate_text("W(j, k)")
  except UnknownNameError:
    pass
  else:
    assert False, "unknown name accepted"


_NAMES = ("a", "b_x", "c_xp", "Gbar", "v_h", "alpha_p1")
_RATIONALS = st.builds(Fraction, st.integers(1, 30), st.integers(1, 6))


def _extend(children):
  return st.one_of(
      st.builds(Scaled, _RATIONALS, children),
      st.builds(lambda terms: Sum(tuple(terms)),
                st.lists(st.tuples(st.sampled_from((1, -1)), children),
                         min_size=2,
                         max_size=3)),
      st.builds(Deriv, st.integers(1, 3), children),
      st.builds(lambda args: Wick(tuple(args)),
                st.lists(children, min_size=2, max_size=3)),
      st.builds(Circle, children, children, st.integers(-2, 4)),
  )


_NODES = st.recursive(
    st.one_of(st.builds(Name, st.sampled_from(_NAMES)),
              st.builds(Literal, _RATIONALS)), _extend, max_leaves=8)


@settings(derandomize=True, max_examples=200)
@given(_NODES)
def test_format_parse_round_trip(node):
  text = format_expr(node)
  assert parse_field_expr(text) == node, text


def main():
  run_unit_tests([
      test_displayed_formulas,
      test_syntax_errors,
      test_referenced_names,
      test_evaluate,
      test_format_parse_round_trip,
  ])


if __name__ == "__main__":
  main()
