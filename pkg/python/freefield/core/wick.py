"""Mode algebra on Fock states: circle products, OPEs, Wick products.

All computations happen on raw vectors (dicts from canonical monomials to
Fractions) with per-system memo tables keyed by monomials, and are wrapped
into States at the API boundary.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import dataclasses

from .fock import *


def binomial(n: int, k: int) -> int:
  """Generalized binomial coefficient binom(n, k) for integer n and k >= 0."""
  if k < 0:
    return 0
  if n >= 0:
    return comb(n, k)
  return (-1)**k * comb(k - n - 1, k)


def monomial_depth(system: FreeFieldSystem, mono: Monomial) -> int:
  extra = max(system.max_order, 1) - 1
  return sum(-n + extra for (_, n) in mono)


def depth(s: State) -> int:
  """Maximum over monomials of the summed mode depths (0 for the vacuum)."""
  return max((monomial_depth(s.system, m) for m in s.terms), default=0)


def _apply_generator(system: FreeFieldSystem, g: int, n: int,
                     mono: Monomial) -> Vector:
  """g(n) applied to the monomial state `mono`."""
  key = (g, n, mono)
  cached = system._gen_cache.get(key)
  if cached is not None:
    return cached
  result: Vector = {}
  if n <= -1:
    normalized = normalize_monomial(system, ((g, n),) + mono)
    if normalized is not None:
      sign, m = normalized
      result[m] = Fraction(sign)
  else:
    odd_g = system.odd[g]
    odd_before = 0
    for position, (h, p) in enumerate(mono):
      # [g(n), h(p)] = sum_k binom(n, k) c_k(g, h) delta_{n+p, k-1}.
      k = n + p + 1
      if 0 <= k <= n:
        c = system.bracket(g, h).get(k)
        if c:
          sign = -1 if (odd_g and odd_before % 2) else 1
          rest = mono[:position] + mono[position + 1:]
          add_to(result, rest, sign * comb(n, k) * c)
      if system.odd[h]:
        odd_before += 1
  system._gen_cache[key] = result
  return result


def _apply_generator_to_vector(system: FreeFieldSystem, g: int, n: int,
                               vector: Mapping[Monomial, Fraction]) -> Vector:
  result: Vector = {}
  for mono, c in vector.items():
    for m, d in _apply_generator(system, g, n, mono).items():
      add_to(result, m, c * d)
  return result


def _apply_field(system: FreeFieldSystem, a: Monomial, n: int,
                 v: Monomial) -> Vector:
  """(Y(a))_(n) v for monomial states a and v."""
  if not a:
    return {v: Fraction(1)} if n == -1 else {}
  key = (a, n, v)
  cached = system._field_cache.get(key)
  if cached is not None:
    return cached

  (g, minus_m), u = a[0], a[1:]
  m = -minus_m
  parity_u = monomial_parity(system, u)
  sign2 = -((-1)**m) * (-1 if (system.odd[g] and parity_u) else 1)
  result: Vector = {}

  if not u:
    # (g(-m)|0>)_(n) = sum_j binom(m+j-1, j) [g(-m-j) delta_{n+j,-1}
    #                                          + sign2 g(j) delta_{n-m-j,-1}].
    j = -1 - n
    if j >= 0:
      for mono, c in _apply_generator(system, g, -m - j, v).items():
        add_to(result, mono, comb(m + j - 1, j) * c)
    j = n - m + 1
    if j >= 0:
      for mono, c in _apply_generator(system, g, j, v).items():
        add_to(result, mono, sign2 * comb(m + j - 1, j) * c)
  else:
    d_u = monomial_depth(system, u)
    d_v = monomial_depth(system, v)
    # Terms vanish once u_(n+j) v = 0 (locality) and g(j) v = 0.
    bound = max(d_u + d_v - n, system.max_order + d_v, 0)
    for j in range(bound):
      coefficient = comb(m + j - 1, j)
      inner = _apply_field(system, u, n + j, v)
      if inner:
        for mono, c in _apply_generator_to_vector(system, g, -m - j,
                                                  inner).items():
          add_to(result, mono, coefficient * c)
      annihilated = _apply_generator(system, g, j, v)
      for w, c in annihilated.items():
        for mono, d in _apply_field(system, u, n - m - j, w).items():
          add_to(result, mono, sign2 * coefficient * c * d)
  system._field_cache[key] = result
  return result


def gen_mode_apply(g: str, n: int, v: State) -> State:
  """Applies the mode g(n) of a generator to a state."""
  system = v.system
  index = system.index(g)
  return State(system, _apply_generator_to_vector(system, index, n, v.terms))


def field_mode_apply(a: State, n: int, v: State) -> State:
  """Applies the n-th mode of the field Y(a, z) to v."""
  system = check_same_system(a, v)
  result: Vector = {}
  for a_mono, a_c in a.terms.items():
    for v_mono, v_c in v.terms.items():
      for mono, c in _apply_field(system, a_mono, n, v_mono).items():
        add_to(result, mono, a_c * v_c * c)
  return State(system, result)


def circle(a: State, b: State, n: int) -> State:
  """The n-th circle product a o_n b."""
  return field_mode_apply(a, n, b)


def wick(a: State, b: State) -> State:
  return circle(a, b, -1)


def wick_many(states: Sequence[State]) -> State:
  """Right-nested iterated Wick product :a1(:a2(...ak):):."""
  if not states:
    raise FreeFieldError("wick_many needs at least one state")
  result = states[-1]
  for s in reversed(states[:-1]):
    result = wick(s, result)
  return result


def derivative(a: State, order: int = 1) -> State:
  """Translation operator: each mode g(-m) becomes m g(-m-1)."""
  system = a.system
  current = dict(a.terms)
  for _ in range(order):
    result: Vector = {}
    for mono, c in current.items():
      for position, (i, n) in enumerate(mono):
        replaced = mono[:position] + ((i, n - 1),) + mono[position + 1:]
        normalized = normalize_monomial(system, replaced)
        if normalized is not None:
          sign, m = normalized
          add_to(result, m, -n * sign * c)
    current = result
  return State(system, current)


def states_equal(a: State, b: State) -> bool:
  return a == b


@dataclasses.dataclass(frozen=True)
class OpeResult:
  """Singular part of a(z)b(w): pole index n -> a o_n b (nonzero only).

  Attributes:
    left: Name of the left field.
    right: Name of the right field.
    poles: Nonzero circle products, keyed by n >= 0.
  """
  left: str
  right: str
  poles: Mapping[int, State]

  def __post_init__(self):
    for n, s in self.poles.items():
      if n < 0:
        raise ValueError(f"OPE pole index must be >= 0, got {n}")
      if s.is_zero():
        raise ValueError(f"OPE stores only nonzero poles, got zero at {n}")

  def is_regular(self) -> bool:
    return not self.poles

  def to_text(self) -> str:
    if not self.poles:
      return f"{self.left}(z) {self.right}(w) ~ 0"
    lines = [f"{self.left}(z) {self.right}(w) ~"]
    for n in sorted(self.poles, reverse=True):
      lines.append(f"  (z-w)^-{n + 1}: {self.poles[n].to_text()}")
    return "\n".join(lines)


def ope(a: State, b: State, left: str = "a", right: str = "b") -> OpeResult:
  """Computes all nonzero circle products a o_n b, n >= 0."""
  check_same_system(a, b)
  bound = depth(a) + depth(b)
  poles = {}
  for n in range(bound):
    value = circle(a, b, n)
    if value:
      poles[n] = value
  for n in (bound, bound + 1):
    assert circle(a, b, n).is_zero(), \
        f'OPE of {left} and {right} does not vanish at n={n} (bound {bound})'
  return OpeResult(left, right, poles)


def derivative_power_sum(terms: Sequence[Tuple[int, State]],
                         system: FreeFieldSystem) -> State:
  """sum over (j, s) of d^j s / j!."""
  result = system.zero()
  for j, s in terms:
    if s:
      result = result + derivative(s, j) * Fraction(1, factorial(j))
  return result
