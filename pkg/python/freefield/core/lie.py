"""Lie (super)algebra data: brackets, invariant forms, representations."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import itertools

import numpy as np

from .fock import Parity, State, to_scalar
from .linalg import Echelon
from .utils import *
from .wick import wick

Combination = Dict[str, Fraction]
Matrix = List[List[Fraction]]


def _add_scaled(target: Combination, source: Mapping[str, Fraction], c):
  for name, d in source.items():
    value = target.get(name, 0) + c * d
    if value:
      target[name] = value
    else:
      target.pop(name, None)


def inverse(matrix: Matrix) -> Matrix:
  """Exact inverse; raises LieDataError for singular matrices."""
  size = len(matrix)
  echelon = Echelon()
  for i, row in enumerate(matrix):
    augmented = {j: to_scalar(v) for j, v in enumerate(row) if v}
    augmented[size + i] = Fraction(1)
    echelon.add(augmented)
  if any(p not in echelon.pivots for p in range(size)):
    raise LieDataError("bilinear form is degenerate")
  return [[echelon.pivots[i].get(size + j, Fraction(0))
           for j in range(size)]
          for i in range(size)]


class Representation:
  """Matrices rho(xi) on a module with named basis (columns are images)."""

  def __init__(self, name: str, basis: Sequence[str],
               matrices: Mapping[str, Sequence[Sequence]]):
    self.name = name
    self.basis = tuple(basis)
    self.matrices = {
        xi: [[to_scalar(v) for v in row] for row in m
            ] for xi, m in matrices.items()
    }

  def image(self, xi: str, vector: str) -> Combination:
    """rho(xi) applied to a basis vector, as a combination of basis names."""
    j = self.basis.index(vector)
    column = [row[j] for row in self.matrices[xi]]
    return {self.basis[i]: c for i, c in enumerate(column) if c}

  def trace_form(self, xi: str, eta: str) -> Fraction:
    a, b = self.matrices[xi], self.matrices[eta]
    n = len(self.basis)
    return sum((a[i][k] * b[k][i] for i in range(n) for k in range(n)),
               Fraction(0))


class LieData:
  """A finite-dimensional Lie superalgebra with invariant forms.

  Brackets are given on ordered basis pairs and completed by super
  antisymmetry; forms are completed by super symmetry. Both are validated on
  construction.
  """

  def __init__(self,
               name: str,
               basis: Sequence[str],
               brackets: Mapping[Tuple[str, str], Mapping[str, object]],
               forms: Mapping[str, Mapping[Tuple[str, str], object]],
               parities: Optional[Mapping[str, Parity]] = None,
               representations: Sequence[Representation] = ()):
    self.name = name
    self.basis = tuple(basis)
    self.parity = {x: (parities or {}).get(x, Parity.EVEN) for x in self.basis}
    self._brackets: Dict[Tuple[str, str], Combination] = {}
    for (a, b), value in brackets.items():
      value = {k: to_scalar(v) for k, v in value.items() if v}
      self._set_bracket(a, b, value)
      sign = -self._sign(a, b)
      self._set_bracket(b, a, {k: sign * v for k, v in value.items()})
    self.forms: Dict[str, Matrix] = {}
    for form_name, entries in forms.items():
      matrix = [[Fraction(0)] * len(self.basis) for _ in self.basis]
      for (a, b), v in entries.items():
        i, j = self._index(a), self._index(b)
        v = to_scalar(v)
        for (p, q, value) in ((i, j, v), (j, i, self._sign(a, b) * v)):
          if matrix[p][q] not in (0, value):
            raise LieDataError(
                f"conflicting entries in form {form_name} at ({a}, {b})")
          matrix[p][q] = value
      self.forms[form_name] = matrix
    self.representations = {r.name: r for r in representations}
    for r in representations:
      self.forms.setdefault(
          f"trace_{r.name}",
          [[r.trace_form(a, b) for b in self.basis] for a in self.basis])
    self.validate()

  def _index(self, x: str) -> int:
    if x not in self.basis:
      raise LieDataError(f"{x!r} is not a basis element of {self.name}")
    return self.basis.index(x)

  def _sign(self, a: str, b: str) -> int:
    odd = self.parity[a] == Parity.ODD and self.parity[b] == Parity.ODD
    return -1 if odd else 1

  def _set_bracket(self, a: str, b: str, value: Combination):
    self._index(a)
    self._index(b)
    for k in value:
      self._index(k)
    existing = self._brackets.get((a, b))
    if existing is not None and existing != value:
      raise LieDataError(
          f"bracket [{a}, {b}] given inconsistently: {existing} != {value}")
    self._brackets[(a, b)] = value

  @property
  def sdim(self) -> int:
    return sum(1 if p == Parity.EVEN else -1 for p in self.parity.values())

  def bracket(self, a: str, b: str) -> Combination:
    return dict(self._brackets.get((a, b), {}))

  def bracket_of(self, u: Mapping[str, Fraction],
                 v: Mapping[str, Fraction]) -> Combination:
    result: Combination = {}
    for a, c in u.items():
      for b, d in v.items():
        _add_scaled(result, self.bracket(a, b), c * d)
    return result

  def form(self, form_name: str, a: str, b: str) -> Fraction:
    return self.forms[form_name][self._index(a)][self._index(b)]

  def form_of(self, form_name: str, u: Mapping[str, Fraction],
              v: Mapping[str, Fraction]) -> Fraction:
    return sum((c * d * self.form(form_name, a, b)
                for a, c in u.items()
                for b, d in v.items()), Fraction(0))

  def validate(self):
    """Checks super Jacobi, form invariance and representation brackets."""
    for a, b, c in itertools.product(self.basis, repeat=3):
      # [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
      lhs = self.bracket_of({a: 1}, self.bracket(b, c))
      rhs = self.bracket_of(self.bracket(a, b), {c: 1})
      _add_scaled(rhs, self.bracket_of({b: 1}, self.bracket(a, c)),
                  self._sign(a, b))
      if lhs != rhs:
        raise LieDataError(
            f"Jacobi identity fails in {self.name} for ({a}, {b}, {c})")
    for form_name in self.forms:
      for a, b, c in itertools.product(self.basis, repeat=3):
        lhs = self.form_of(form_name, self.bracket(a, b), {c: 1})
        rhs = self.form_of(form_name, {a: 1}, self.bracket(b, c))
        if lhs != rhs:
          raise LieDataError(
              f"form {form_name} of {self.name} is not invariant at " +
              f"({a}, {b}, {c}): {lhs} != {rhs}")
    for r in self.representations.values():
      for a, b in itertools.product(self.basis, repeat=2):
        ra, rb = (np.array(r.matrices[x], dtype=object) for x in (a, b))
        commutator = ra.dot(rb) - self._sign(a, b) * rb.dot(ra)
        expected = np.zeros_like(ra)
        for k, c in self.bracket(a, b).items():
          expected = expected + c * np.array(r.matrices[k], dtype=object)
        if not (commutator == expected).all():
          raise LieDataError(
              f"representation {r.name} does not respect [{a}, {b}]")

  def dual_basis(self, form_name: str) -> Dict[str, Combination]:
    """xi -> xi' with B(xi', eta) = delta(xi, eta)."""
    gram = self.forms[form_name]
    d = inverse(gram)
    # B(xi', zeta) = sum_eta D[xi][eta] G[eta][zeta] = delta(xi, zeta).
    return {
        xi: {
            eta: d[i][j] for j, eta in enumerate(self.basis) if d[i][j]
        } for i, xi in enumerate(self.basis)
    }

  def dual_coxeter(self, form_name: str) -> Fraction:
    """Half the Casimir eigenvalue on the adjoint representation."""
    dual = self.dual_basis(form_name)
    eigenvalue = None
    for v in self.basis:
      result: Combination = {}
      for xi in self.basis:
        inner = self.bracket_of(dual[xi], {v: 1})
        _add_scaled(result, self.bracket_of({xi: 1}, inner), 1)
      value = result.get(v, Fraction(0))
      if set(result) - {v} or (eigenvalue is not None and value != eigenvalue):
        raise LieDataError(
            f"Casimir of {self.name} does not act by a scalar on the adjoint")
      eigenvalue = value
    return eigenvalue / 2


def sugawara(currents: Mapping[str, State], lie: LieData, form_name: str,
             level) -> Tuple[State, Fraction]:
  """The Sugawara vector of currents X^xi at `level` with respect to a form.

  Returns:
    (L_Sug, predicted central charge k sdim / (k + h^v)).
  """
  level = to_scalar(level)
  h_dual = lie.dual_coxeter(form_name)
  if level + h_dual == 0:
    raise CriticalLevelError(
        f"level {level} is critical for {lie.name} (h^v = {h_dual})")
  dual = lie.dual_basis(form_name)
  system = next(iter(currents.values())).system
  total = system.zero()
  for xi in lie.basis:
    partner = system.zero()
    for eta, c in dual[xi].items():
      partner = partner + currents[eta] * c
    total = total + wick(currents[xi], partner)
  scale = Fraction(1) / (2 * (level + h_dual))
  return total * scale, level * lie.sdim / (level + h_dual)


################################################################################
# Built-in algebras.
################################################################################
SL2_BRACKETS = {
    ("x", "y"): {"h": 1},
    ("h", "x"): {"x": 2},
    ("h", "y"): {"y": -2},
}


def sl2() -> LieData:
  """sl_2 with its normalized form, the standard and adjoint modules."""
  standard = Representation("C2", ("e1", "e2"), {
      "x": [[0, 1], [0, 0]],
      "y": [[0, 0], [1, 0]],
      "h": [[1, 0], [0, -1]],
  })
  # Columns are images of the basis (x, y, h).
  adjoint = Representation("C3", ("x", "y", "h"), {
      "x": [[0, 0, -2], [0, 0, 0], [0, 1, 0]],
      "y": [[0, 0, 0], [0, 0, 2], [-1, 0, 0]],
      "h": [[2, 0, 0], [0, -2, 0], [0, 0, 0]],
  })
  return LieData("sl2", ("x", "y", "h"),
                 SL2_BRACKETS, {"normalized": {
                     ("x", "y"): 1,
                     ("h", "h"): 2
                 }},
                 representations=(standard, adjoint))


def osp22() -> LieData:
  """osp(2|2): even part sl_2 + gl_1 (X, Y, H; E), odd part F^{ab}."""
  odd = ("Fpm", "Fmp", "Fmm", "Fpp")
  basis = ("X", "Y", "H", "E") + odd
  brackets = {
      ("X", "Y"): {"H": 1},
      ("H", "X"): {"X": 2},
      ("H", "Y"): {"Y": -2},
      # [E, F^{ab}] = b F^{ab}, [H, F^{ab}] = a F^{ab}.
      ("E", "Fpp"): {"Fpp": 1},
      ("E", "Fmp"): {"Fmp": 1},
      ("E", "Fpm"): {"Fpm": -1},
      ("E", "Fmm"): {"Fmm": -1},
      ("H", "Fpp"): {"Fpp": 1},
      ("H", "Fpm"): {"Fpm": 1},
      ("H", "Fmp"): {"Fmp": -1},
      ("H", "Fmm"): {"Fmm": -1},
      ("Y", "Fpp"): {"Fmp": -1},
      ("Y", "Fpm"): {"Fmm": -1},
      ("X", "Fmp"): {"Fpp": -1},
      ("X", "Fmm"): {"Fpm": -1},
      ("Fpm", "Fmp"): {"H": 1, "E": 1},
      ("Fpm", "Fpp"): {"X": 2},
      ("Fmm", "Fpp"): {"H": 1, "E": -1},
      ("Fmm", "Fmp"): {"Y": -2},
  }
  form = {
      ("H", "H"): -1,
      ("X", "Y"): Fraction(-1, 2),
      ("E", "E"): 1,
      ("Fpm", "Fmp"): -1,
      ("Fmm", "Fpp"): 1,
  }
  return LieData("osp22",
                 basis,
                 brackets, {"B": form},
                 parities={x: Parity.ODD for x in odd})
