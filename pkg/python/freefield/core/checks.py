"""Check results plus OPE-table closure and conformal-vector checks."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import dataclasses

from .fock import *
from .linalg import span_coefficients
from .wick import circle, depth, derivative, ope


class Status(Enum):
  PASS = "pass"
  FAIL = "fail"
  SKIPPED = "skipped"


@dataclasses.dataclass(frozen=True)
class CheckResult:
  """Outcome of one check.

  Attributes:
    id: Unique, sortable check identifier.
    anchor: Where the checked statement comes from.
    status: pass, fail or skipped.
    expected: Text form of the expected value.
    got: Text form of the computed value (with the difference on failure).
  """
  id: str
  anchor: str
  status: Status
  expected: str
  got: str

  @property
  def passed(self) -> bool:
    return self.status != Status.FAIL

  def to_dict(self) -> Dict[str, str]:
    return {
        "id": self.id,
        "anchor": self.anchor,
        "status": self.status.value,
        "expected": self.expected,
        "got": self.got,
    }


def compare_states(check_id: str, anchor: str, expected: State,
                   got: State) -> CheckResult:
  if got == expected:
    return CheckResult(check_id, anchor, Status.PASS, expected.to_text(),
                       got.to_text())
  return CheckResult(check_id, anchor, Status.FAIL, expected.to_text(),
                     f"{got.to_text()} [diff: {(got - expected).to_text()}]")


def compare_values(check_id: str, anchor: str, expected, got) -> CheckResult:
  status = Status.PASS if expected == got else Status.FAIL
  return CheckResult(check_id, anchor, status, str(expected), str(got))


def record(check_id: str, anchor: str, got: str) -> CheckResult:
  """A recorded measurement without an expected value; always passes."""
  return CheckResult(check_id, anchor, Status.PASS, "(recorded)", got)


def skipped(check_id: str, anchor: str, reason: str) -> CheckResult:
  return CheckResult(check_id, anchor, Status.SKIPPED, "", reason)


def _poles_text(poles: Mapping[int, State]) -> str:
  if not poles:
    return "~ 0"
  return "; ".join(
      f"n={n}: {poles[n].to_text()}" for n in sorted(poles, reverse=True))


def ope_check(check_id: str, anchor: str, left: State, right: State,
              expected: Mapping[int, State]) -> CheckResult:
  """Compares every nonnegative circle product with `expected`.

  Poles missing from `expected` must vanish.
  """
  result = ope(left, right)
  expected = {n: s for n, s in expected.items() if s}
  got = dict(result.poles)
  if got == expected:
    return CheckResult(check_id, anchor, Status.PASS, _poles_text(expected),
                       _poles_text(got))
  diffs = []
  for n in sorted(set(got) | set(expected), reverse=True):
    zero = left.system.zero()
    difference = got.get(n, zero) - expected.get(n, zero)
    if difference:
      diffs.append(f"n={n}: {difference.to_text()}")
  return CheckResult(check_id, anchor, Status.FAIL, _poles_text(expected),
                     _poles_text(got) + " [diff: " + "; ".join(diffs) + "]")


@dataclasses.dataclass(frozen=True)
class OpeExpectation:
  """An expected singular part: pole index -> expression text."""
  left: str
  right: str
  poles: Mapping[int, str]
  anchor: str = ""


def closure_check(prefix: str, anchor: str, resolve: Callable[[str], State],
                  evaluate_text: Callable[[str], State],
                  expectations: Sequence[OpeExpectation],
                  vanishing: Sequence[Tuple[str, str]] = ()) -> List[CheckResult]:
  """Checks an OPE table.

  Args:
    prefix: Prefix of the check ids.
    anchor: Default anchor for the table entries.
    resolve: Maps a field name to its State.
    evaluate_text: Evaluates an expression text to a State.
    expectations: Listed entries; unlisted poles of a listed pair must vanish.
    vanishing: Further ordered pairs whose OPE must be regular.

  Returns:
    One CheckResult per ordered pair.
  """
  results = []
  for e in expectations:
    check_id = f"{prefix}/{e.left}*{e.right}"
    try:
      expected = {n: evaluate_text(text) for n, text in e.poles.items()}
      results.append(
          ope_check(check_id, e.anchor or anchor, resolve(e.left),
                    resolve(e.right), expected))
    except FreeFieldError as error:
      results.append(
          CheckResult(check_id, e.anchor or anchor, Status.FAIL,
                      str(e.poles), f"error: {error}"))
  for left, right in vanishing:
    check_id = f"{prefix}/{left}*{right}"
    try:
      results.append(
          ope_check(check_id, anchor, resolve(left), resolve(right), {}))
    except FreeFieldError as error:
      results.append(
          CheckResult(check_id, anchor, Status.FAIL, "~ 0", f"error: {error}"))
  return results


def span_closure_check(prefix: str, anchor: str,
                       generators: Sequence[Tuple[str, State]]
                      ) -> List[CheckResult]:
  """Checks that every pole a o_n b lies in span(vacuum, generators).

  The coefficients of each pole (central terms included) are recorded.
  """
  system = generators[0][1].system
  basis = [system.vacuum()] + [s for _, s in generators]
  labels = ["1"] + [name for name, _ in generators]
  results = []
  for left, a in generators:
    for right, b in generators:
      pieces = []
      closed = True
      for n, pole in sorted(ope(a, b).poles.items(), reverse=True):
        coefficients = span_coefficients(pole, basis)
        if coefficients is None:
          closed = False
          pieces.append(f"n={n}: outside span: {pole.to_text()}")
          continue
        text = " + ".join(
            f"{c}*{label}" for c, label in zip(coefficients, labels) if c)
        pieces.append(f"n={n}: {text}")
      results.append(
          CheckResult(f"{prefix}/{left}*{right}", anchor,
                      Status.PASS if closed else Status.FAIL,
                      "closes on generators",
                      "; ".join(pieces) if pieces else "~ 0"))
  return results


@dataclasses.dataclass(frozen=True)
class FieldSpec:
  """A field expected to have weight `weight` under a conformal vector.

  With `poles` given, the poles n >= 2 must equal it exactly; otherwise a
  primary field has no poles n >= 2 and a quasi-primary one none at n = 2.
  """
  name: str
  state: State
  weight: Fraction
  primary: bool = True
  poles: Optional[Mapping[int, State]] = None


def central_charge(L: State) -> Optional[Fraction]:
  """c with L o_3 L = (c/2) |0>, or None if that pole is not a vacuum multiple."""
  pole = circle(L, L, 3)
  if pole.is_zero():
    return Fraction(0)
  if set(pole.terms) != {()}:
    return None
  return 2 * pole.terms[()]


def conformal_check(prefix: str, anchor: str, L: State,
                    fields: Sequence[FieldSpec],
                    expected_c: Optional[Fraction] = None) -> List[CheckResult]:
  """Checks that L is a Virasoro element and that `fields` have the stated
  weights and primality."""
  results = []
  system = L.system
  c = central_charge(L)
  if expected_c is None:
    results.append(record(f"{prefix}/central-charge", anchor, f"c = {c}"))
  else:
    results.append(
        compare_values(f"{prefix}/central-charge", anchor,
                       f"c = {Fraction(expected_c)}", f"c = {c}"))
  results.append(
      compare_states(f"{prefix}/L*L/n=2", anchor, system.zero(),
                     circle(L, L, 2)))
  results.append(
      compare_states(f"{prefix}/L*L/n=1", anchor, L * 2, circle(L, L, 1)))
  results.append(
      compare_states(f"{prefix}/L*L/n=0", anchor, derivative(L),
                     circle(L, L, 0)))
  bound = 2 * depth(L)
  higher = [n for n in range(4, bound + 2) if circle(L, L, n)]
  results.append(
      compare_values(f"{prefix}/L*L/n>=4", anchor, "[]", str(higher)))

  for field in fields:
    phi = field.state
    field_id = f"{prefix}/{field.name}"
    results.append(
        compare_states(f"{field_id}/weight", anchor, phi * field.weight,
                       circle(L, phi, 1)))
    results.append(
        compare_states(f"{field_id}/translation", anchor, derivative(phi),
                       circle(L, phi, 0)))
    top = depth(L) + depth(phi)
    got = {n: circle(L, phi, n) for n in range(2, top + 1)}
    got = {n: s for n, s in got.items() if s}
    if field.poles is not None:
      expected = {n: s for n, s in field.poles.items() if s}
      status = Status.PASS if got == expected else Status.FAIL
      results.append(
          CheckResult(f"{field_id}/higher-poles", anchor, status,
                      _poles_text(expected), _poles_text(got)))
    elif field.primary:
      results.append(
          CheckResult(f"{field_id}/primary", anchor,
                      Status.PASS if not got else Status.FAIL, "~ 0",
                      _poles_text(got)))
    else:
      status = Status.PASS if 2 not in got else Status.FAIL
      results.append(
          CheckResult(f"{field_id}/quasi-primary", anchor, status,
                      "n=2 vanishes", _poles_text(got)))
  return results
