"""Built-in free-field systems.

The bc system E(V) and the beta-gamma system S(V) are attached to an sl_2
module V with basis x_i; W(V) is their tensor product. Generator names are
ASCII transliterations: b^x -> b_x, c^{x'} -> c_xp, beta^1 -> beta1,
gamma^{1'} -> gamma1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .fock import *

# sl_2 modules: (basis vector, suffix of generator names, h eigenvalue).
MODULES = {
    "adjoint": (("x", "_x", 2), ("y", "_y", -2), ("h", "_h", 0)),
    "standard": (("e1", "1", 1), ("e2", "2", -1)),
}

# Default weights; bc at 1/2 is the grading of the character computations.
BC_WEIGHT = Fraction(1, 2)
BETA_WEIGHT = Fraction(1)
GAMMA_WEIGHT = Fraction(0)

CASES = (
    "E-adjoint",
    "S-adjoint",
    "W-adjoint",
    "E-standard",
    "S-standard",
    "W-standard",
    "odake-original",
    "symplectic-fermions",
    "heisenberg",
)

ALIASES = {
    "adjoint": "W-adjoint",
    "standard": "W-standard",
    "odake": "odake-original",
}


def generator_names(module: str, family: str) -> Dict[str, str]:
  """Maps each basis vector of `module` to its generator name in `family`.

  `family` is one of "b", "c", "beta", "gamma"; c and gamma carry the dual
  basis, which the adjoint case marks with a trailing "p".
  """
  dual = family in ("c", "gamma")
  names = {}
  for vector, suffix, _ in MODULES[module]:
    prime = "p" if dual and module == "adjoint" else ""
    names[vector] = f"{family}{suffix}{prime}"
  return names


def _bc_system(module: str) -> FreeFieldSystem:
  b, c = generator_names(module, "b"), generator_names(module, "c")
  generators = []
  for vector, _, weight in MODULES[module]:
    generators.append(
        GeneratorSpec(b[vector], Parity.ODD, BC_WEIGHT, (("F", -1),
                                                         ("Th", weight))))
  for vector, _, weight in MODULES[module]:
    generators.append(
        GeneratorSpec(c[vector], Parity.ODD, BC_WEIGHT, (("F", 1),
                                                         ("Th", -weight))))
  table = ContractionTable()
  for vector, _, _ in MODULES[module]:
    table.add(b[vector], c[vector], 0, 1)
  return FreeFieldSystem(f"E-{module}", generators, table)


def _beta_gamma_system(module: str) -> FreeFieldSystem:
  beta = generator_names(module, "beta")
  gamma = generator_names(module, "gamma")
  generators = []
  for vector, _, weight in MODULES[module]:
    generators.append(
        GeneratorSpec(beta[vector], Parity.EVEN, BETA_WEIGHT,
                      (("H", -1), ("Th", weight))))
  for vector, _, weight in MODULES[module]:
    generators.append(
        GeneratorSpec(gamma[vector], Parity.EVEN, GAMMA_WEIGHT,
                      (("H", 1), ("Th", -weight))))
  table = ContractionTable()
  for vector, _, _ in MODULES[module]:
    table.add(beta[vector], gamma[vector], 0, 1)
  return FreeFieldSystem(f"S-{module}", generators, table)


def _odake_system() -> FreeFieldSystem:
  generators: List[GeneratorSpec] = []
  for sign in ("p", "m"):
    generators += [
        GeneratorSpec(f"alpha_{sign}{i}", Parity.EVEN, 1) for i in (1, 2, 3)
    ]
  generators += [
      GeneratorSpec(f"b{i}", Parity.ODD, BC_WEIGHT, (("F", 1),))
      for i in (1, 2, 3)
  ]
  generators += [
      GeneratorSpec(f"c{i}", Parity.ODD, BC_WEIGHT, (("F", -1),))
      for i in (1, 2, 3)
  ]
  table = ContractionTable()
  for i in (1, 2, 3):
    table.add(f"alpha_p{i}", f"alpha_m{i}", 1, 1)
    table.add(f"b{i}", f"c{i}", 0, 1)
  return FreeFieldSystem("odake-original", generators, table)


def _symplectic_fermions() -> FreeFieldSystem:
  generators = (
      GeneratorSpec("chi_p", Parity.ODD, 1, (("F", 1),)),
      GeneratorSpec("chi_m", Parity.ODD, 1, (("F", -1),)),
  )
  return FreeFieldSystem("symplectic-fermions", generators,
                         ContractionTable().add("chi_p", "chi_m", 1, 1))


def _heisenberg() -> FreeFieldSystem:
  return FreeFieldSystem("heisenberg", (GeneratorSpec("j", Parity.EVEN, 1),),
                         ContractionTable().add("j", "j", 1, 1))


def canonical_case(case: str) -> str:
  case = ALIASES.get(case, case)
  if case not in CASES:
    raise ConfigError(f"unknown case {case!r}; expected one of " +
                      ", ".join(CASES + tuple(ALIASES)))
  return case


_SYSTEMS: Dict[str, FreeFieldSystem] = {}


def build_system(case: str) -> FreeFieldSystem:
  """Returns the built-in system of `case` (built once per process)."""
  case = canonical_case(case)
  if case in _SYSTEMS:
    return _SYSTEMS[case]
  if case == "odake-original":
    system = _odake_system()
  elif case == "symplectic-fermions":
    system = _symplectic_fermions()
  elif case == "heisenberg":
    system = _heisenberg()
  else:
    family, module = case.split("-")
    if family == "E":
      system = _bc_system(module)
    elif family == "S":
      system = _beta_gamma_system(module)
    else:
      system = build_system(f"E-{module}").tensor(
          build_system(f"S-{module}"), case)
  _SYSTEMS[case] = system
  return system


def clear_system_caches():
  """Empties the memo tables of every built-in system built so far."""
  for system in _SYSTEMS.values():
    system.clear_caches()


def case_module(case: str) -> str:
  """The sl_2 module of an E/S/W case, or "" for the other cases."""
  case = canonical_case(case)
  return case.split("-")[1] if case[:2] in ("E-", "S-", "W-") else ""


def case_family(case: str) -> str:
  case = canonical_case(case)
  return case[0] if case_module(case) else ""
