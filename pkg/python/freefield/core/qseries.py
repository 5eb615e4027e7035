"""Truncated q-series in q^(1/2), z and w for graded characters.

Exponents of q are stored as integers counting half steps, so q^(3/2) is
stored as 3. A series of order N keeps every term up to q^N, that is half
exponents 0 <= h <= 2N.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import dataclasses
import itertools
import math

import numpy as np
import pandas as pd

from .utils import *

Key = Tuple[int, int, int]  # (z exponent, w exponent, q half exponent)


class TriSeries:
  """Exact integer series sum c * z^a w^b q^(h/2), truncated at q^order."""

  def __init__(self, order: int, coefficients: Optional[Mapping[Key,
                                                                int]] = None):
    if order < 0:
      raise DivergentSeriesError(f"truncation order must be >= 0, got {order}")
    self.order = order
    self.coefficients: Dict[Key, int] = {}
    for key, c in (coefficients or {}).items():
      if c and 0 <= key[2] <= 2 * order:
        self.coefficients[key] = self.coefficients.get(key, 0) + c
    self.coefficients = {k: c for k, c in self.coefficients.items() if c}

  @staticmethod
  def one(order: int) -> TriSeries:
    return TriSeries(order, {(0, 0, 0): 1})

  @staticmethod
  def monomial(order: int, z: int = 0, w: int = 0, half: int = 0,
               coefficient: int = 1) -> TriSeries:
    return TriSeries(order, {(z, w, half): coefficient})

  def __add__(self, other: TriSeries) -> TriSeries:
    order = min(self.order, other.order)
    result = dict(self.coefficients)
    for key, c in other.coefficients.items():
      result[key] = result.get(key, 0) + c
    return TriSeries(order, result)

  def __neg__(self) -> TriSeries:
    return TriSeries(self.order, {k: -c for k, c in self.coefficients.items()})

  def __sub__(self, other: TriSeries) -> TriSeries:
    return self + (-other)

  def __mul__(self, other: TriSeries) -> TriSeries:
    order = min(self.order, other.order)
    limit = 2 * order
    result: Dict[Key, int] = {}
    for (za, wa, ha), ca in self.coefficients.items():
      if ha > limit:
        continue
      for (zb, wb, hb), cb in other.coefficients.items():
        if ha + hb <= limit:
          key = (za + zb, wa + wb, ha + hb)
          result[key] = result.get(key, 0) + ca * cb
    return TriSeries(order, result)

  def truncated(self, order: int) -> TriSeries:
    return TriSeries(min(order, self.order), self.coefficients)

  def equal_to_order(self, other: TriSeries,
                     order: Optional[int] = None) -> bool:
    """Coefficientwise equality up to q^order (default: common order)."""
    order = min(self.order, other.order) if order is None else order
    return self.truncated(order).coefficients == other.truncated(
        order).coefficients

  def __eq__(self, other) -> bool:
    if not isinstance(other, TriSeries):
      return NotImplemented
    return self.order == other.order and \
        self.coefficients == other.coefficients

  def coefficient(self, z: int = 0, w: int = 0, half: int = 0) -> int:
    return self.coefficients.get((z, w, half), 0)

  def w_coefficient(self, w: int) -> TriSeries:
    """The coefficient of w^w as a w-free series."""
    return TriSeries(
        self.order, {(z, 0, h): c
                     for (z, b, h), c in self.coefficients.items() if b == w})

  def triples(self) -> List[Tuple[int, int, int, int]]:
    """Sorted (z, w, q-half, coefficient) rows."""
    return sorted((z, w, h, c) for (z, w, h), c in self.coefficients.items())

  def to_frame(self) -> pd.DataFrame:
    rows = [{
        "q": str(Fraction(h, 2)),
        "z": z,
        "w": w,
        "coefficient": c
    } for (z, w, h, c) in sorted(
        self.triples(), key=lambda t: (t[2], t[0], t[1]))]
    return pd.DataFrame(rows, columns=["q", "z", "w", "coefficient"])

  def to_table(self) -> str:
    """Aligned table: one row per q power, one column per z (w-free series);
    the long format otherwise."""
    frame = self.to_frame()
    if frame.empty:
      return "0"
    if (frame["w"] == 0).all():
      frame = frame.assign(half=[
          int(Fraction(q) * 2) for q in frame["q"]
      ])
      table = frame.pivot_table(index=["half", "q"],
                                columns="z",
                                values="coefficient",
                                aggfunc="sum",
                                fill_value=0)
      table.index = table.index.droplevel(0)
      return table.to_string()
    return frame.to_string(index=False)

  def __repr__(self) -> str:
    return f"TriSeries(order={self.order}, terms={len(self.coefficients)})"


################################################################################
# Infinite products.
################################################################################
@dataclasses.dataclass(frozen=True)
class FactorFamily:
  """The family prod_{n>=1} (1 + sign z^z w^w q^((offset + n step)/2))^power.

  Attributes:
    z: Exponent of z.
    w: Exponent of w.
    offset: Half-step offset of the q exponent.
    step: Half-step growth of the q exponent per n; must be positive.
    sign: +1 or -1 in front of the monomial.
    power: +1 for the factor itself, -1 for its inverse.
  """
  z: int = 0
  w: int = 0
  offset: int = 0
  step: int = 2
  sign: int = 1
  power: int = 1

  def __post_init__(self):
    if self.step <= 0:
      raise DivergentSeriesError(
          f"factor family with q step {self.step} does not converge")
    if self.offset + self.step <= 0:
      raise DivergentSeriesError(
          "factor family starts at a nonpositive power of q: " +
          f"offset {self.offset}, step {self.step}")
    if self.sign not in (1, -1) or self.power not in (1, -1):
      raise ValueError("sign and power must be +1 or -1, got " +
                       f"sign {self.sign}, power {self.power}.")


def _multiply_factor(series: TriSeries, family: FactorFamily, n: int) -> TriSeries:
  half = family.offset + n * family.step
  limit = 2 * series.order
  if family.power == 1:
    shifted = {(z + family.z, w + family.w, h + half): family.sign * c
               for (z, w, h), c in series.coefficients.items()
               if h + half <= limit}
    return series + TriSeries(series.order, shifted)
  # 1 / (1 + s x) = sum_k (-s x)^k.
  result = dict(series.coefficients)
  term = series.coefficients
  k = 1
  while k * half <= limit:
    term = {(z + family.z, w + family.w, h + half): -family.sign * c
            for (z, w, h), c in term.items()
            if h + half <= limit}
    for key, c in term.items():
      result[key] = result.get(key, 0) + c
    k += 1
  return TriSeries(series.order, result)


def expand_product(factors: Sequence[FactorFamily], order: int) -> TriSeries:
  """Expands the product of the factor families up to q^order."""
  series = TriSeries.one(order)
  for family in factors:
    n = 1
    while family.offset + n * family.step <= 2 * order:
      series = _multiply_factor(series, family, n)
      n += 1
  return series


def fermion(z: int = 0, w: int = 0) -> FactorFamily:
  """prod (1 + z^z w^w q^(n-1/2))."""
  return FactorFamily(z, w, offset=-1, step=2)


def boson_inverse() -> FactorFamily:
  """prod 1/(1 - q^n)."""
  return FactorFamily(offset=0, step=2, sign=-1, power=-1)


def euler() -> FactorFamily:
  """prod (1 - q^n)."""
  return FactorFamily(offset=0, step=2, sign=-1, power=1)


################################################################################
# Lattice theta sums.
################################################################################
@dataclasses.dataclass(frozen=True)
class ThetaSpec:
  """sum over v in Z^k of sign z^(zl.v + z0) w^(wl.v + w0) q^(h(v)/2).

  The half exponent is h(v) = v.A.v + b.v + c and must be integral.
  """
  quadratic: Tuple[Tuple[int, ...], ...]
  linear: Tuple[int, ...] = ()
  constant: int = 0
  z_linear: Tuple[int, ...] = ()
  z_constant: int = 0
  w_linear: Tuple[int, ...] = ()
  w_constant: int = 0
  sign: int = 1

  def __post_init__(self):
    rank = len(self.quadratic)
    for name in ("linear", "z_linear", "w_linear"):
      value = getattr(self, name)
      if not value:
        object.__setattr__(self, name, (0,) * rank)
      elif len(value) != rank:
        raise ValueError(f"{name} has length {len(value)}, expected {rank}")
    if any(len(row) != rank for row in self.quadratic):
      raise ValueError(f"quadratic form is not square: {self.quadratic}")

  @property
  def rank(self) -> int:
    return len(self.quadratic)

  def half_exponent(self, v: Sequence[int]) -> int:
    a = np.array(self.quadratic, dtype=object)
    x = np.array(v, dtype=object)
    return int(x.dot(a).dot(x) + np.array(self.linear, dtype=object).dot(x) +
               self.constant)

  def radius(self, order: int) -> int:
    """Bound on |v| outside which h(v) > 2 order."""
    a = np.array(self.quadratic, dtype=float)
    eigenvalues = np.linalg.eigvalsh((a + a.T) / 2)
    smallest = float(eigenvalues.min())
    if smallest <= 0:
      raise DivergentSeriesError(
          f"theta sum needs a positive definite form, got eigenvalues " +
          f"{eigenvalues.tolist()}")
    b = float(np.linalg.norm(np.array(self.linear, dtype=float)))
    budget = max(2 * order - self.constant, 0)
    return int(math.ceil((b + math.sqrt(b * b + 4 * smallest * budget)) /
                         (2 * smallest))) + 1


def theta_sum(spec: ThetaSpec, order: int) -> TriSeries:
  """Sums the lattice terms with q half exponent <= 2 order."""
  radius = spec.radius(order)
  coefficients: Dict[Key, int] = {}
  for v in itertools.product(range(-radius, radius + 1), repeat=spec.rank):
    h = spec.half_exponent(v)
    if h > 2 * order:
      continue
    assert h >= 0, f'negative q exponent {h} at {v}'
    z = sum(c * x for c, x in zip(spec.z_linear, v)) + spec.z_constant
    w = sum(c * x for c, x in zip(spec.w_linear, v)) + spec.w_constant
    key = (z, w, h)
    coefficients[key] = coefficients.get(key, 0) + spec.sign
  return TriSeries(order, coefficients)


# sum_m q^(m^2/2) z^m
JACOBI_THETA = ThetaSpec(((1,),), z_linear=(1,))
# sum_{m,s} z^(m+s) w^(2(m-s)) q^(m^2/2 + s^2/2)
E_THETA = ThetaSpec(((1, 0), (0, 1)), z_linear=(1, 1), w_linear=(2, -2))
# sum_m q^(m^2) z^(2m)
O_THETA_EVEN = ThetaSpec(((2,),), z_linear=(2,))
# sum_m q^(m^2 + m + 1/2) z^(2m+1), subtracted
O_THETA_ODD = ThetaSpec(((2,),),
                        linear=(2,),
                        constant=1,
                        z_linear=(2,),
                        z_constant=1,
                        sign=-1)


def jacobi_check(order: int, mutate: bool = False) -> bool:
  """prod (1-q^n)(1+z q^(n-1/2))(1+z^-1 q^(n-1/2)) = sum q^(m^2/2) z^m.

  With `mutate`, the sign of the m = 1 term of the sum is flipped so that the
  comparison must fail once order >= 1/2.
  """
  product = expand_product((euler(), fermion(z=1), fermion(z=-1)), order)
  total = theta_sum(JACOBI_THETA, order)
  if mutate:
    total = total - TriSeries.monomial(order, z=1, half=1, coefficient=2)
  return product.equal_to_order(total)


E_FERMIONS = ((1, 2), (-1, 2), (1, -2), (-1, -2), (1, 0), (-1, 0))


def ch_E(order: int) -> TriSeries:
  """tr q^L(0) z^F(0) w^Theta^h(0) on the adjoint bc system (product form)."""
  return expand_product([fermion(z, w) for z, w in E_FERMIONS], order)


def _prefactor(order: int) -> TriSeries:
  return expand_product(
      (fermion(z=1), fermion(z=-1), boson_inverse(), boson_inverse()), order)


def ch_E_sum(order: int) -> TriSeries:
  """ch_E re-summed with the triple product formula."""
  return _prefactor(order) * theta_sum(E_THETA, order)


def ch_O(order: int) -> TriSeries:
  """The character of Odake's algebra in z and q."""
  return _prefactor(order) * (theta_sum(O_THETA_EVEN, order) +
                              theta_sum(O_THETA_ODD, order))


def invariant_extract(series: TriSeries) -> TriSeries:
  """SL_2 invariants: coefficient of w^0 minus coefficient of w^2."""
  return series.w_coefficient(0) - series.w_coefficient(2)


CHARACTERS = {
    "chE": ch_E,
    "chE-sum": ch_E_sum,
    "chO": ch_O,
    "invariant": lambda order: invariant_extract(ch_E(order)),
}


def character(which: str, order: int) -> TriSeries:
  if which not in CHARACTERS:
    raise ConfigError(f"unknown character {which!r}; expected one of " +
                      ", ".join(CHARACTERS))
  return CHARACTERS[which](order)


def grade_coefficient(series: TriSeries, weight: Fraction, z: int,
                      w: int = 0) -> int:
  """The coefficient at conformal weight `weight` (q^weight)."""
  half = Fraction(weight) * 2
  if half.denominator != 1:
    return 0
  return series.coefficient(z, w, int(half))
