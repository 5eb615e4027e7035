"""Exact rational linear algebra over graded monomial slices."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import dataclasses
import logging

from .fock import *
from .wick import circle, depth, monomial_depth

SparseRow = Dict[int, Fraction]


class RationalMatrix:
  """A sparse matrix of Fractions stored by rows."""

  def __init__(self, num_cols: int, rows: Iterable[Mapping[int, Fraction]] = ()):
    self.num_cols = num_cols
    self.rows: List[SparseRow] = []
    for row in rows:
      self.append_row(row)

  @staticmethod
  def from_dense(entries: Sequence[Sequence]) -> RationalMatrix:
    num_cols = len(entries[0]) if entries else 0
    matrix = RationalMatrix(num_cols)
    for row in entries:
      if len(row) != num_cols:
        raise ValueError("Ragged matrix: " + f"{len(row)} != {num_cols}.")
      matrix.append_row({j: Fraction(v) for j, v in enumerate(row) if v})
    return matrix

  def append_row(self, row: Mapping[int, Fraction]):
    for j in row:
      assert 0 <= j < self.num_cols, f'column {j} out of range {self.num_cols}'
    self.rows.append({j: Fraction(v) for j, v in row.items() if v})

  @property
  def num_rows(self) -> int:
    return len(self.rows)

  def apply(self, vector: Sequence[Fraction]) -> List[Fraction]:
    return [sum((c * vector[j] for j, c in row.items()), Fraction(0))
            for row in self.rows]

  def to_dense(self) -> List[List[Fraction]]:
    return [[row.get(j, Fraction(0))
             for j in range(self.num_cols)]
            for row in self.rows]


class Echelon:
  """Incremental reduced row echelon form.

  Every stored row has a leading 1 at its pivot (its smallest column) and all
  other stored rows are zero at that column.
  """

  def __init__(self):
    self.pivots: Dict[int, SparseRow] = {}

  def reduce(self, row: Mapping[int, Fraction]) -> SparseRow:
    row = {j: c for j, c in row.items() if c}
    for p in sorted(set(row) & set(self.pivots)):
      c = row.get(p)
      if c:
        for j, d in self.pivots[p].items():
          value = row.get(j, 0) - c * d
          if value:
            row[j] = value
          else:
            row.pop(j, None)
    return row

  def add(self, row: Mapping[int, Fraction]) -> bool:
    """Adds a row; returns False when it was already in the span."""
    row = self.reduce(row)
    if not row:
      return False
    pivot = min(row)
    scale = row[pivot]
    row = {j: c / scale for j, c in row.items()}
    for p, other in self.pivots.items():
      c = other.get(pivot)
      if c:
        for j, d in row.items():
          value = other.get(j, 0) - c * d
          if value:
            other[j] = value
          else:
            other.pop(j, None)
    self.pivots[pivot] = row
    return True

  @property
  def rank(self) -> int:
    return len(self.pivots)

  def rows(self) -> List[SparseRow]:
    return [self.pivots[p] for p in sorted(self.pivots)]


def rref(matrix: RationalMatrix) -> Echelon:
  echelon = Echelon()
  for row in matrix.rows:
    echelon.add(row)
  return echelon


def kernel(matrix: RationalMatrix) -> List[List[Fraction]]:
  """Null space basis: one vector per free column, in ascending order."""
  echelon = rref(matrix)
  basis = []
  for free in range(matrix.num_cols):
    if free in echelon.pivots:
      continue
    vector = [Fraction(0)] * matrix.num_cols
    vector[free] = Fraction(1)
    for p, row in echelon.pivots.items():
      vector[p] = -row.get(free, Fraction(0))
    assert not any(matrix.apply(vector)), \
        f'kernel vector {vector} is not annihilated'
    basis.append(vector)
  return basis


def _column_order(states: Iterable[State]) -> List[Monomial]:
  monos = set()
  for s in states:
    monos.update(s.terms)
  return sorted(monos, key=lambda m: (len(m), m))


def span_coefficients(target: State,
                      basis: Sequence[State]) -> Optional[List[Fraction]]:
  """Coefficients c with sum c_i basis_i = target, or None if not in span."""
  if not basis:
    return [] if target.is_zero() else None
  check_same_system(target, *basis)
  monos = _column_order(list(basis) + [target])
  augmented = len(basis)
  matrix = RationalMatrix(augmented + 1)
  for mono in monos:
    row = {j: b.terms[mono] for j, b in enumerate(basis) if mono in b.terms}
    if mono in target.terms:
      row[augmented] = target.terms[mono]
    matrix.append_row(row)
  echelon = rref(matrix)
  if augmented in echelon.pivots:
    return None
  coefficients = [Fraction(0)] * len(basis)
  for p, row in echelon.pivots.items():
    coefficients[p] = row.get(augmented, Fraction(0))
  return coefficients


def canonical_basis(states: Sequence[State],
                    columns: Optional[Sequence[Monomial]] = None
                   ) -> List[State]:
  """Reduced echelon basis of the span of `states` (deterministic)."""
  if not states:
    return []
  system = check_same_system(*states)
  columns = list(columns) if columns is not None else _column_order(states)
  position = {m: j for j, m in enumerate(columns)}
  echelon = Echelon()
  for s in states:
    echelon.add({position[m]: c for m, c in s.terms.items()})
  return [
      State(system, {columns[j]: c for j, c in row.items()})
      for row in echelon.rows()
  ]


def same_span(first: Sequence[State], second: Sequence[State]) -> bool:
  states = list(first) + list(second)
  if not states:
    return True
  columns = _column_order(states)
  return canonical_basis(first, columns) == canonical_basis(second, columns)


################################################################################
# Graded slices.
################################################################################
@dataclasses.dataclass(frozen=True)
class GradedSlice:
  """All canonical monomials of a system at one grade.

  Attributes:
    system: The free-field system.
    grade: Weight plus the constrained charges.
    basis: Monomials in monomial order.
  """
  system: FreeFieldSystem
  grade: GradeVector
  basis: Tuple[Monomial, ...]

  @property
  def dimension(self) -> int:
    return len(self.basis)

  def states(self) -> List[State]:
    return [State(self.system, {m: Fraction(1)}) for m in self.basis]


def _check_finiteness(system: FreeFieldSystem, grade: GradeVector,
                      zero_weight_even: Sequence[int]) -> Optional[str]:
  """Returns a charge separating the weight-0 even generators, if needed."""
  if not zero_weight_even:
    return None
  constrained = [name for name, _ in grade.charges]
  for name in constrained:
    values = [system.generators[i].charge(name) for i in zero_weight_even]
    if all(v > 0 for v in values) or all(v < 0 for v in values):
      return name
  for i in zero_weight_even:
    g = system.generators[i]
    if all(g.charge(name) == 0 for name in constrained):
      raise NonFiniteSliceError(
          f"slice {grade} of {system.name} is infinite: generator " +
          f"{g.name} has weight 0, is even and carries no constrained charge")
  raise NonFiniteSliceError(
      f"slice {grade} of {system.name} is infinite: weight-0 even generators " +
      f"{[system.generators[i].name for i in zero_weight_even]} are not " +
      f"separated by a constrained charge of common sign")


def slice_basis(system: FreeFieldSystem,
                grade: GradeVector,
                weights: WeightAssignment = None) -> GradedSlice:
  """Enumerates every canonical monomial with the given grade."""
  target = grade.weight
  atoms: List[Tuple[int, int, Fraction]] = []
  zero_weight_even: List[int] = []
  for i, g in enumerate(system.generators):
    w = generator_weight(system, i, weights)
    if w == 0 and not g.odd:
      zero_weight_even.append(i)
    m = 2 if (w == 0 and not g.odd) else 1
    while w + m - 1 <= target:
      atoms.append((i, -m, w + m - 1))
      m += 1
  separating = _check_finiteness(system, grade, zero_weight_even)
  constraints = dict(grade.charges)

  def charges_of(modes: Sequence[Mode]) -> Dict[str, int]:
    totals = {name: 0 for name in constraints}
    for (i, _) in modes:
      for name in totals:
        totals[name] += system.generators[i].charge(name)
    return totals

  def zero_weight_fillings(remaining: Dict[str, int]):
    if not zero_weight_even:
      if all(v == 0 for v in remaining.values()):
        yield ()
      return
    charges = [system.generators[i].charge(separating) for i in zero_weight_even]
    budget = remaining[separating]
    if budget == 0 or (budget > 0) != (charges[0] > 0):
      if budget == 0:
        if all(v == 0 for v in remaining.values()):
          yield ()
      return
    steps = [abs(c) for c in charges]
    budget = abs(budget)

    def fill(k: int, left: int, chosen: Tuple[Mode, ...]):
      if k == len(zero_weight_even):
        if left == 0:
          rest = dict(remaining)
          for name in rest:
            rest[name] -= sum(
                system.generators[i].charge(name) for (i, _) in chosen)
          if all(v == 0 for v in rest.values()):
            yield chosen
        return
      for count in range(left // steps[k] + 1):
        yield from fill(k + 1, left - count * steps[k],
                        chosen + ((zero_weight_even[k], -1),) * count)

    yield from fill(0, budget, ())

  found = set()

  def search(k: int, left: Fraction, chosen: Tuple[Mode, ...]):
    if left == 0:
      totals = charges_of(chosen)
      remaining = {name: constraints[name] - totals[name] for name in totals}
      for filling in zero_weight_fillings(remaining):
        found.add(tuple(sorted(chosen + filling)))
    if k == len(atoms):
      return
    i, n, contribution = atoms[k]
    if contribution > left:
      search(k + 1, left, chosen)
      return
    max_count = 1 if system.odd[i] else (
        int(left // contribution) if contribution else 0)
    for count in range(max_count + 1):
      search(k + 1, left - count * contribution, chosen + ((i, n),) * count)

  # Odd atoms of contribution 0 must still be chosen at most once.
  search(0, target, ())
  basis = tuple(sorted(found, key=lambda m: (len(m), m)))
  logging.debug(f"slice {grade} of {system.name}: dimension {len(basis)}")
  return GradedSlice(system, grade, basis)


def annihilator_slice(annihilators: Sequence[State],
                      grade: GradeVector,
                      weights: WeightAssignment = None,
                      modes: Optional[Iterable[int]] = None,
                      system: Optional[FreeFieldSystem] = None) -> List[State]:
  """Basis of {v in slice : a o_n v = 0 for all annihilators a and n in modes}.

  Args:
    annihilators: Homogeneous states whose nonnegative modes are imposed.
    grade: The slice grade.
    weights: Optional per-generator weight override.
    modes: The circle-product indices imposed; all n >= 0 by default.
    system: The system of the slice, needed when `annihilators` is empty.

  Returns:
    The canonical (reduced echelon) basis of the annihilated subspace.
  """
  if system is None:
    if not annihilators:
      raise FreeFieldError("annihilator_slice needs a system or annihilators")
    system = annihilators[0].system
  check_same_system(system.vacuum(), *annihilators)
  graded = slice_basis(system, grade, weights)
  columns = list(graded.basis)
  if not columns:
    return []
  slice_depth = max(monomial_depth(system, m) for m in columns)
  # Current subspace as coordinate vectors over the slice monomials.
  subspace: List[Dict[int, Fraction]] = [{j: Fraction(1)}
                                         for j in range(len(columns))]
  requested = sorted(set(modes)) if modes is not None else None
  for a in annihilators:
    indices = requested if requested is not None else range(
        depth(a) + slice_depth)
    images = []
    for n in indices:
      images.append([
          circle(a, State(system, {m: Fraction(1)}), n) for m in columns
      ])
    # Rows of the constraint matrix: one per (n, target monomial).
    row_keys: Dict[Tuple[int, Monomial], int] = {}
    rows: List[Dict[int, Fraction]] = []
    for k, per_column in enumerate(images):
      for b, vector in enumerate(subspace):
        combined: Vector = {}
        for j, c in vector.items():
          for mono, d in per_column[j].terms.items():
            add_to(combined, mono, c * d)
        for mono, d in combined.items():
          key = (k, mono)
          if key not in row_keys:
            row_keys[key] = len(rows)
            rows.append({})
          rows[row_keys[key]][b] = d
    null = kernel(RationalMatrix(len(subspace), rows))
    narrowed = []
    for vector in null:
      combined: Dict[int, Fraction] = {}
      for b, c in enumerate(vector):
        if c:
          for j, d in subspace[b].items():
            value = combined.get(j, 0) + c * d
            if value:
              combined[j] = value
            else:
              combined.pop(j, None)
      narrowed.append(combined)
    subspace = narrowed
    if not subspace:
      return []
  echelon = Echelon()
  for vector in subspace:
    echelon.add(vector)
  return [
      State(system, {columns[j]: c for j, c in row.items()})
      for row in echelon.rows()
  ]
