"""Howe duality between Odake's algebra and S(C^3)^(sl2[t]) inside W(C^3).

Slice by slice, the joint kernel of Theta_W and Odake's generators in
W(C^3) must be the image of the Theta_S kernel of S(C^3).
"""

from fractions import Fraction
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from ..adjoint.definitions import STRONG_GENERATORS
from ..core.catalog import *
from ..core.checks import *
from ..core.fock import *
from ..core.linalg import annihilator_slice, canonical_basis, same_span
from ..core.suite_definition import SuiteDefinition
from ..core.utils import env_int
from ..core.wick import derivative, wick_many

DEFAULT_CUTOFF = 2
H_RANGE = (-2, 2)
# Weights up to which strong generation is probed.
PROBE_WEIGHT = Fraction(1)


def slice_grades(weight: Fraction) -> List[GradeVector]:
  """Grades of one weight with every F-charge it carries, |F| <= 2 weight."""
  f_bound = int(2 * weight)
  grades = []
  for f in range(-f_bound, f_bound + 1):
    for h in range(H_RANGE[0], H_RANGE[1] + 1):
      grades.append(GradeVector(weight, (("F", f), ("H", h), ("Th", 0))))
  return grades


def _grade_id(grade: GradeVector) -> str:
  return ",".join(f"{n}={v}" for n, v in grade.charges if n != "Th")


def howe_slice_checks(prefix: str, weight: Fraction) -> List[CheckResult]:
  """Com(Odake, W^(sl2[t])) = S^(sl2[t]) on every slice of one weight."""
  w_library = field_library("W-adjoint")
  s_library = field_library("S-adjoint")
  annihilators = list(theta_currents(w_library, "W").values())
  annihilators += [w_library.resolve(name) for name in ODAKE_GENERATORS]
  s_currents = list(theta_currents(s_library, "S").values())
  anchor = "Com(Odake, W^(sl2[t])) = S^(sl2[t])"
  results = []
  for grade in slice_grades(weight):
    joint = annihilator_slice(annihilators, grade)
    if grade.charge("F") == 0:
      s_grade = GradeVector(weight, tuple(
          (n, v) for n, v in grade.charges if n != "F"))
      image = [
          embed_state(s, w_library.system)
          for s in annihilator_slice(s_currents, s_grade)
      ]
    else:
      image = []
    equal = same_span(joint, image)
    results.append(
        CheckResult(f"{prefix}/wt={weight}/{_grade_id(grade)}", anchor,
                    Status.PASS if equal else Status.FAIL,
                    f"span of S^(sl2[t]), dimension {len(image)}",
                    f"dimension {len(joint)}" +
                    ("" if equal else ", different span")))
  return results


################################################################################
# Strong generation at low weight.
################################################################################
def _atoms(library: FieldLibrary,
           weight: Fraction) -> List[Tuple[str, int, GradeVector]]:
  """(generator, derivative order, grade) of every derivative up to weight."""
  atoms = []
  for name in STRONG_GENERATORS:
    grade = grade_of(library.resolve(name))
    k = 0
    while grade.weight + k <= weight:
      atoms.append((name, k, grade.shifted(k)))
      k += 1
  return atoms


def normally_ordered_words(library: FieldLibrary,
                           grade: GradeVector) -> List[State]:
  """Normally ordered words in the strong generators with the given grade.

  Factors appear in the fixed order of `_atoms`, each word once.
  """
  atoms = _atoms(library, grade.weight)
  target = dict(grade.charges)
  # Each weight-0 factor adds H = 2; any other factor lowers H by at most its
  # weight.
  zero_weight_cap = int((H_RANGE[1] + grade.weight) // 2)
  words = []

  def search(k: int, left: Fraction, charges: Dict[str, int], zeros: int,
             chosen: Tuple[int, ...]):
    if left == 0 and all(charges.get(n, 0) == v for n, v in target.items()):
      if chosen:
        factors = [
            derivative(library.resolve(atoms[i][0]), atoms[i][1])
            for i in chosen
        ]
        words.append(factors[0] if len(factors) == 1 else wick_many(factors))
      else:
        words.append(library.system.vacuum())
    for i in range(k, len(atoms)):
      _, _, g = atoms[i]
      if g.weight > left:
        continue
      if g.weight == 0 and zeros >= zero_weight_cap:
        continue
      updated = dict(charges)
      for n, v in g.charges:
        updated[n] = updated.get(n, 0) + v
      search(i, left - g.weight, updated, zeros + (g.weight == 0),
             chosen + (i,))

  search(0, grade.weight, {}, 0, ())
  return [w for w in words if w]


def strong_generation_probe(prefix: str, cutoff: int) -> List[CheckResult]:
  """Words in the strong generators lie in W^(sl2[t]); dimensions recorded."""
  library = field_library("W-adjoint")
  currents = list(theta_currents(library, "W").values())
  anchor = "strong generators of W(C^3)^(sl2[t])"
  results = []
  top = min(PROBE_WEIGHT, Fraction(cutoff))
  for half in range(int(2 * top) + 1):
    weight = Fraction(half, 2)
    for grade in slice_grades(weight):
      invariants = annihilator_slice(currents, grade)
      words = normally_ordered_words(library, grade)
      span = canonical_basis(words)
      inside = len(canonical_basis(invariants + words)) == len(invariants)
      results.append(
          CheckResult(f"{prefix}/probe/wt={weight}/{_grade_id(grade)}",
                      anchor, Status.PASS if inside else Status.FAIL,
                      "words inside the slice",
                      f"slice {len(invariants)}, words span {len(span)}" +
                      ("" if inside else ", words outside the slice")))
  return results


class HoweDeskSuite(SuiteDefinition):
  name = "howe-desk"
  anchor = "Howe duality of Odake's algebra and S(C^3)^(sl2[t])"

  def default_options(self) -> Dict[str, Any]:
    return {"cutoff": env_int("FREEFIELD_CUTOFF", DEFAULT_CUTOFF)}

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    weights = [Fraction(h, 2) for h in range(2 * options["cutoff"] + 1)]
    return ["probe"] + [f"wt={w}" for w in weights]

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    if task == "probe":
      return strong_generation_probe(self.name, options["cutoff"])
    return howe_slice_checks(self.name, Fraction(task[len("wt="):]))
