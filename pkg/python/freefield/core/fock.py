"""Fock states over free-field systems.

A free-field system is a finite list of generators (even or odd) together with
a table of constant contractions g(z)h(w) ~ sum_k c_k (z-w)^(-k-1). Its vacuum
module is spanned by normally ordered monomials of creation modes g(n), n <= -1,
applied to the vacuum |0>. Every field of the vertex algebra is represented by
the state it creates from the vacuum, stored as an exact rational combination
of canonical monomials.

Modes are pairs (generator index, n); a monomial is a tuple of modes sorted by
(generator declaration index, n), so the most negative mode of a generator
comes first. Odd modes anticommute, so sorting records a sign.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import dataclasses
import itertools
import re

from .utils import *

Scalar = Fraction
Mode = Tuple[int, int]
Monomial = Tuple[Mode, ...]
# Raw vectors are plain dicts without zero entries; State wraps them.
Vector = Dict[Monomial, Fraction]

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


def to_scalar(value: Union[int, str, Fraction]) -> Fraction:
  return value if isinstance(value, Fraction) else Fraction(value)


class Parity(Enum):
  """Parity of a generator or of a homogeneous state."""
  EVEN = 0
  ODD = 1

  def __add__(self, other: Parity) -> Parity:
    return Parity((self.value + other.value) % 2)

  @staticmethod
  def parse(text: str) -> Parity:
    try:
      return Parity[text.strip().upper()]
    except KeyError:
      raise ConfigError(f"parity must be 'even' or 'odd', got {text!r}")


@dataclasses.dataclass(frozen=True)
class GeneratorSpec:
  """A free-field generator.

  Attributes:
    name: An identifier unique within its system.
    parity: Parity.EVEN for bosons, Parity.ODD for fermions.
    weight: The conformal weight used for grading (never for algebra).
    charges: Sorted (charge-name, integer) pairs used for grading.
  """
  name: str
  parity: Parity
  weight: Fraction
  charges: Tuple[Tuple[str, int], ...] = ()

  def __post_init__(self):
    if not _IDENTIFIER.match(self.name):
      raise ConfigError(f"generator name is not an identifier: {self.name!r}")
    object.__setattr__(self, "weight", to_scalar(self.weight))
    if self.weight < 0:
      raise ConfigError("Negative generator weight: " +
                        f"{self.name} has weight {self.weight}.")
    object.__setattr__(self, "charges", tuple(sorted(dict(self.charges).items())))

  @property
  def odd(self) -> bool:
    return self.parity == Parity.ODD

  def charge(self, name: str) -> int:
    return dict(self.charges).get(name, 0)


class ContractionTable:
  """Constant contractions between ordered pairs of generator names.

  `add(g, h, k, c)` records g(z)h(w) ~ c (z-w)^(-k-1) and, unless `mirror` is
  False, the skew partner h(z)g(w) ~ (-1)^(|g||h|+k+1) c (z-w)^(-k-1).
  """

  def __init__(self):
    self._entries: Dict[Tuple[str, str], Dict[int, Fraction]] = {}
    self._pending_mirrors: List[Tuple[str, str, int, Fraction]] = []

  def add(self, g: str, h: str, k: int, c, mirror: bool = True):
    c = to_scalar(c)
    if k < 0:
      raise ContractionTableError(
          f"contraction order must be >= 0, got {k} for ({g}, {h})")
    self._set(g, h, k, c)
    if mirror:
      self._pending_mirrors.append((g, h, k, c))
    return self

  def _set(self, g: str, h: str, k: int, c: Fraction):
    entry = self._entries.setdefault((g, h), {})
    if k in entry and entry[k] != c:
      raise ContractionTableError(
          f"conflicting contraction for ({g}, {h}) at order {k}: " +
          f"{entry[k]} != {c}")
    if c == 0:
      entry.pop(k, None)
    else:
      entry[k] = c

  def items(self):
    return sorted(
        (pair, k, c) for pair, entry in self._entries.items()
        for k, c in entry.items())

  def get(self, g: str, h: str) -> Mapping[int, Fraction]:
    return self._entries.get((g, h), {})

  def resolve(self, odd: Mapping[str, bool]):
    """Fills in skew partners and validates the table against parities."""
    for g, h, k, c in self._pending_mirrors:
      for name in (g, h):
        if name not in odd:
          raise UnknownGeneratorError(
              f"contraction refers to undeclared generator {name!r}")
      sign = (-1)**(int(odd[g]) * int(odd[h]) + k + 1)
      self._set(h, g, k, sign * c)
    self._pending_mirrors = []
    for (g, h), entry in self._entries.items():
      for name in (g, h):
        if name not in odd:
          raise UnknownGeneratorError(
              f"contraction refers to undeclared generator {name!r}")
      for k, c in entry.items():
        sign = (-1)**(int(odd[g]) * int(odd[h]) + k + 1)
        partner = self._entries.get((h, g), {}).get(k, Fraction(0))
        if partner != sign * c:
          raise ContractionTableError(
              f"contraction table is not skew-consistent: c_{k}({g}, {h}) = " +
              f"{c} but c_{k}({h}, {g}) = {partner}")


class FreeFieldSystem:
  """A free-field system: generators plus constant contractions.

  Systems are immutable after construction. They carry memo tables for mode
  application; these are private to the process and never pickled.
  """

  def __init__(self, name: str, generators: Sequence[GeneratorSpec],
               contractions: ContractionTable):
    self.name = name
    self.generators: Tuple[GeneratorSpec, ...] = tuple(generators)
    self._index: Dict[str, int] = {}
    for i, g in enumerate(self.generators):
      if g.name in self._index:
        raise ConfigError(f"duplicate generator {g.name!r} in system {name}")
      self._index[g.name] = i
    contractions.resolve({g.name: g.odd for g in self.generators})
    self.contractions = contractions
    self.odd: Tuple[bool, ...] = tuple(g.odd for g in self.generators)
    self._brackets: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for (g, h), k, c in contractions.items():
      self._brackets.setdefault((self._index[g], self._index[h]), {})[k] = c
    self.max_order = max(
        (k for entry in self._brackets.values() for k in entry), default=0)
    self.signature: Tuple = (name, self.generators,
                             tuple(contractions.items()))
    self.charge_names: Tuple[str, ...] = tuple(
        sorted({c for g in self.generators for c, _ in g.charges}))
    self.clear_caches()

  def clear_caches(self):
    """Drops the mode-application memo tables."""
    self._gen_cache: Dict[Tuple[int, int, Monomial], Vector] = {}
    self._field_cache: Dict[Tuple[Monomial, int, Monomial], Vector] = {}

  @property
  def cache_size(self) -> int:
    return len(self._gen_cache) + len(self._field_cache)

  def __getstate__(self):
    state = dict(self.__dict__)
    state["_gen_cache"] = {}
    state["_field_cache"] = {}
    return state

  def __repr__(self) -> str:
    return f"FreeFieldSystem({self.name}, {[g.name for g in self.generators]})"

  def index(self, name: str) -> int:
    if name not in self._index:
      raise UnknownGeneratorError(
          f"unknown generator {name!r} in system {self.name}")
    return self._index[name]

  def has_generator(self, name: str) -> bool:
    return name in self._index

  def generator(self, name: str) -> GeneratorSpec:
    return self.generators[self.index(name)]

  def bracket(self, i: int, j: int) -> Mapping[int, Fraction]:
    return self._brackets.get((i, j), {})

  def mode(self, name: str, n: int) -> Mode:
    return (self.index(name), n)

  def vacuum(self) -> State:
    return State(self, {(): Fraction(1)})

  def zero(self) -> State:
    return State(self, {})

  def generator_state(self, name: str) -> State:
    return State(self, {((self.index(name), -1),): Fraction(1)})

  def tensor(self, other: FreeFieldSystem,
             name: Optional[str] = None) -> FreeFieldSystem:
    """Disjoint union of two systems without cross-contractions."""
    table = ContractionTable()
    for system in (self, other):
      for (g, h), k, c in system.contractions.items():
        table.add(g, h, k, c, mirror=False)
    return FreeFieldSystem(name or f"{self.name}*{other.name}",
                           self.generators + other.generators, table)


def check_same_system(*states: State) -> FreeFieldSystem:
  system = states[0].system
  for s in states[1:]:
    if s.system is not system and s.system.signature != system.signature:
      raise SystemMismatchError(
          f"states live in different systems: {system.name} and " +
          f"{s.system.name}")
  return system


def normalize_monomial(
    system: FreeFieldSystem,
    modes: Iterable[Mode]) -> Optional[Tuple[int, Monomial]]:
  """Sorts creation modes into canonical order.

  Returns:
    (sign, monomial) with the super-sign of the permutation, or None when an
    odd mode occurs twice (the product vanishes).
  """
  modes = tuple(modes)
  for (i, n) in modes:
    if n >= 0:
      raise FreeFieldError(
          f"mode {system.generators[i].name}({n}) is not a creation mode")
  ordered = tuple(sorted(modes))
  odd_modes = [m for m in modes if system.odd[m[0]]]
  if len(set(odd_modes)) != len(odd_modes):
    return None
  inversions = sum(1 for a, b in itertools.combinations(odd_modes, 2) if a > b)
  return (-1 if inversions % 2 else 1), ordered


def monomial_parity(system: FreeFieldSystem, mono: Monomial) -> int:
  return sum(1 for (i, _) in mono if system.odd[i]) % 2


def add_to(target: Vector, mono: Monomial, c: Fraction):
  value = target.get(mono, 0) + c
  if value:
    target[mono] = value
  else:
    target.pop(mono, None)


class State:
  """An exact rational combination of canonical monomials on the vacuum."""

  __slots__ = ("system", "terms")

  def __init__(self, system: FreeFieldSystem, terms: Mapping[Monomial,
                                                              Fraction]):
    self.system = system
    self.terms: Vector = {m: c for m, c in terms.items() if c}

  @staticmethod
  def from_modes(system: FreeFieldSystem, modes: Sequence[Tuple[str, int]],
                 coefficient=1) -> State:
    """Builds c * g1(n1) g2(n2) ... |0> from named modes in any order."""
    result = normalize_monomial(system,
                                [system.mode(name, n) for name, n in modes])
    if result is None:
      return system.zero()
    sign, mono = result
    return State(system, {mono: sign * to_scalar(coefficient)})

  def is_zero(self) -> bool:
    return not self.terms

  def __bool__(self) -> bool:
    return bool(self.terms)

  def __add__(self, other: State) -> State:
    check_same_system(self, other)
    terms = dict(self.terms)
    for m, c in other.terms.items():
      add_to(terms, m, c)
    return State(self.system, terms)

  def __sub__(self, other: State) -> State:
    return self + (-other)

  def __neg__(self) -> State:
    return State(self.system, {m: -c for m, c in self.terms.items()})

  def __mul__(self, scalar) -> State:
    scalar = to_scalar(scalar)
    return State(self.system, {m: scalar * c for m, c in self.terms.items()})

  __rmul__ = __mul__

  def __eq__(self, other) -> bool:
    if not isinstance(other, State):
      return NotImplemented
    return self.system.signature == other.system.signature and \
        self.terms == other.terms

  def __hash__(self) -> int:
    return hash(frozenset(self.terms.items()))

  @property
  def parity(self) -> Optional[Parity]:
    """Parity of a homogeneous state; None for zero and for mixed states."""
    parities = {monomial_parity(self.system, m) for m in self.terms}
    if len(parities) != 1:
      return None
    return Parity(parities.pop())

  @property
  def is_mixed(self) -> bool:
    return len({monomial_parity(self.system, m) for m in self.terms}) > 1

  def monomials(self) -> List[Monomial]:
    return sorted(self.terms, key=lambda m: (len(m), m))

  def mode_text(self, mono: Monomial) -> str:
    return " ".join(
        f"{self.system.generators[i].name}({n})" for (i, n) in mono)

  def to_text(self) -> str:
    """Deterministic text form `c * g1(n1) g2(n2) ... |0> + ...`."""
    if not self.terms:
      return "0"
    pieces = []
    for k, mono in enumerate(self.monomials()):
      c = self.terms[mono]
      body = (self.mode_text(mono) + " |0>") if mono else "|0>"
      if k == 0:
        pieces.append(f"{c} * {body}")
      else:
        pieces.append(f"{'-' if c < 0 else '+'} {abs(c)} * {body}")
    return " ".join(pieces)

  def __str__(self) -> str:
    return self.to_text()

  def __repr__(self) -> str:
    return f"State({self.to_text()})"


################################################################################
# Grading.
################################################################################
@dataclasses.dataclass(frozen=True)
class GradeVector:
  """Conformal weight plus integer charges.

  A grade used to select a slice may omit charges; omitted charges are left
  unconstrained.
  """
  weight: Fraction
  charges: Tuple[Tuple[str, int], ...] = ()

  def __post_init__(self):
    object.__setattr__(self, "weight", to_scalar(self.weight))
    object.__setattr__(self, "charges", tuple(sorted(dict(self.charges).items())))

  def charge(self, name: str) -> Optional[int]:
    return dict(self.charges).get(name)

  def __add__(self, other: GradeVector) -> GradeVector:
    mine, theirs = dict(self.charges), dict(other.charges)
    names = set(mine) | set(theirs)
    return GradeVector(
        self.weight + other.weight,
        tuple((n, mine.get(n, 0) + theirs.get(n, 0)) for n in names))

  def shifted(self, weight_shift) -> GradeVector:
    return GradeVector(self.weight + to_scalar(weight_shift), self.charges)

  def __str__(self) -> str:
    charges = ",".join(f"{n}={v}" for n, v in self.charges)
    return f"(wt {self.weight}" + (f"; {charges})" if charges else ")")


class _Mixed:
  """Marker for states whose monomials carry different grades."""

  def __repr__(self) -> str:
    return "MIXED"


MIXED = _Mixed()

WeightAssignment = Optional[Mapping[str, Fraction]]


def generator_weight(system: FreeFieldSystem, i: int,
                     weights: WeightAssignment = None) -> Fraction:
  g = system.generators[i]
  if weights is not None and g.name in weights:
    return to_scalar(weights[g.name])
  return g.weight


def monomial_grade(system: FreeFieldSystem,
                   mono: Monomial,
                   weights: WeightAssignment = None) -> GradeVector:
  weight = Fraction(0)
  charges: Dict[str, int] = {name: 0 for name in system.charge_names}
  for (i, n) in mono:
    weight += generator_weight(system, i, weights) - n - 1
    for name, value in system.generators[i].charges:
      charges[name] += value
  return GradeVector(weight, tuple(charges.items()))


def grade_of(s: State,
             weights: WeightAssignment = None
            ) -> Union[GradeVector, _Mixed, None]:
  """Returns the grade of a homogeneous state, MIXED, or None for zero."""
  grades = {monomial_grade(s.system, m, weights) for m in s.terms}
  if not grades:
    return None
  if len(grades) > 1:
    return MIXED
  return grades.pop()


def generator_state(system: FreeFieldSystem, name: str) -> State:
  return system.generator_state(name)


def embed_state(s: State, target: FreeFieldSystem) -> State:
  """Maps a state into a system containing its generators (matched by name)."""
  mapping = {i: target.index(g.name) for i, g in enumerate(s.system.generators)}
  for i, g in enumerate(s.system.generators):
    if target.generators[mapping[i]].parity != g.parity:
      raise SystemMismatchError(
          f"generator {g.name} changes parity between {s.system.name} and " +
          f"{target.name}")
  terms: Vector = {}
  for mono, c in s.terms.items():
    normalized = normalize_monomial(target, [(mapping[i], n) for (i, n) in mono])
    if normalized is not None:
      sign, m = normalized
      add_to(terms, m, sign * c)
  return State(target, terms)
