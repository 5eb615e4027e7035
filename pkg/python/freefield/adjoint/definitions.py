"""The adjoint case W(C^3) and the commutant C(sl2, C^3).

The strong generators of W^(sl2[t]) close under OPE into the table below;
the Odake algebra sits inside the commutant as G, Gbar, X = C^ccc and
Xbar = C^bbb.
"""

from fractions import Fraction
from typing import Any, Dict, FrozenSet, List, Mapping, Sequence, Set, Tuple

from ..core.catalog import *
from ..core.checks import *
from ..core.fock import *
from ..core.lie import LieData, osp22, sl2, sugawara
from ..core.linalg import span_coefficients
from ..core.suite_definition import SuiteDefinition
from ..core.wick import circle, field_mode_apply, ope
from ..odake.definitions import *

CASE = "W-adjoint"

################################################################################
# OPE table of the strong generators.
################################################################################
OSP_BLOCK = "osp(2|2) block of v, F and Q fields"
BLOCK_I = "action of osp(2|2) on C^gbb, C^betabb, C^bbb and Gbar"
BLOCK_II = "action of osp(2|2) on C^gcc, C^betacc, C^ccc and G"
CC_BLOCK = "products of the cubic C fields"
G_C_BLOCK = "products of G and Gbar with the cubic C fields"
G_GBAR = "G Gbar product in terms of the strong generators"

ADJOINT_TABLE = {
    "osp": (OSP_BLOCK, [
        OpeExpectation("v_x", "v_y", {1: "-3/2", 0: "v_h"}),
        OpeExpectation("v_h", "v_h", {1: "-3"}),
        OpeExpectation("v_h", "v_x", {0: "2 v_x"}),
        OpeExpectation("v_h", "v_y", {0: "-2 v_y"}),
        OpeExpectation("F", "F", {1: "3"}),
        OpeExpectation("F", "Q_gc", {0: "Q_gc"}),
        OpeExpectation("F", "Q_gb", {0: "-Q_gb"}),
        OpeExpectation("F", "Q_bc", {0: "Q_bc"}),
        OpeExpectation("F", "Q_bb", {0: "-Q_bb"}),
        OpeExpectation("Q_gb", "Q_bc", {1: "-3", 0: "v_h + F"}),
        OpeExpectation("Q_bb", "Q_gc", {1: "3", 0: "v_h - F"}),
        OpeExpectation("Q_gb", "Q_gc", {0: "2 v_x"}),
        OpeExpectation("Q_bb", "Q_bc", {0: "-2 v_y"}),
        OpeExpectation("v_h", "Q_gb", {0: "Q_gb"}),
        OpeExpectation("v_y", "Q_gb", {0: "-Q_bb"}),
        OpeExpectation("v_h", "Q_bb", {0: "-Q_bb"}),
        OpeExpectation("v_x", "Q_bb", {0: "-Q_gb"}),
        OpeExpectation("v_h", "Q_gc", {0: "Q_gc"}),
        OpeExpectation("v_y", "Q_gc", {0: "-Q_bc"}),
        OpeExpectation("v_h", "Q_bc", {0: "-Q_bc"}),
        OpeExpectation("v_x", "Q_bc", {0: "-Q_gc"}),
    ], [("v_x", "v_x"), ("v_y", "v_y"), ("F", "v_h"), ("F", "v_x"),
        ("F", "v_y"), ("Q_gb", "Q_gb"), ("Q_bb", "Q_bb"), ("Q_gc", "Q_gc"),
        ("Q_bc", "Q_bc"), ("Q_gb", "Q_bb"), ("Q_gc", "Q_bc")]),
    "block-1": (BLOCK_I, [
        OpeExpectation("v_h", "C_gbb", {0: "C_gbb"}),
        OpeExpectation("v_y", "C_gbb", {0: "C_betabb"}),
        OpeExpectation("v_h", "C_betabb", {0: "-C_betabb"}),
        OpeExpectation("v_x", "C_betabb", {0: "C_gbb"}),
        OpeExpectation("F", "C_gbb", {0: "-2 C_gbb"}),
        OpeExpectation("F", "C_betabb", {0: "-2 C_betabb"}),
        OpeExpectation("F", "C_bbb", {0: "-3 C_bbb"}),
        OpeExpectation("F", "Gbar", {0: "-Gbar"}),
        OpeExpectation("Q_gb", "C_betabb", {0: "-3 C_bbb"}),
        OpeExpectation("Q_bb", "C_gbb", {0: "-3 C_bbb"}),
        OpeExpectation("Q_bc", "C_gbb", {0: "Gbar"}),
        OpeExpectation("Q_gc", "C_betabb", {0: "Gbar"}),
        OpeExpectation("Gbar", "Q_bb", {0: "C_betabb"}),
        OpeExpectation("Gbar", "Q_gb", {0: "-C_gbb"}),
    ], []),
    "block-2": (BLOCK_II, [
        OpeExpectation("v_h", "C_gcc", {0: "C_gcc"}),
        OpeExpectation("v_y", "C_gcc", {0: "C_betacc"}),
        OpeExpectation("v_h", "C_betacc", {0: "-C_betacc"}),
        OpeExpectation("v_x", "C_betacc", {0: "C_gcc"}),
        OpeExpectation("F", "C_gcc", {0: "2 C_gcc"}),
        OpeExpectation("F", "C_betacc", {0: "2 C_betacc"}),
        OpeExpectation("F", "C_ccc", {0: "3 C_ccc"}),
        OpeExpectation("F", "G", {0: "G"}),
        OpeExpectation("Q_gc", "C_betacc", {0: "-3 C_ccc"}),
        OpeExpectation("Q_bc", "C_gcc", {0: "-3 C_ccc"}),
        OpeExpectation("Q_gb", "C_betacc", {0: "G"}),
        OpeExpectation("Q_bb", "C_gcc", {0: "G"}),
        OpeExpectation("G", "Q_bc", {0: "C_betacc"}),
        OpeExpectation("G", "Q_gc", {0: "-C_gcc"}),
    ], []),
    "cc": (CC_BLOCK, [
        OpeExpectation("C_gbb", "C_gcc", {
            1: "-2 v_x",
            0: "W(Q_gb, Q_gc) + 2 W(v_x, F) - 2 d(v_x)"
        }),
        OpeExpectation("C_betabb", "C_betacc", {
            1: "2 v_y",
            0: "W(Q_bb, Q_bc) - 2 W(v_y, F) + 2 d(v_y)"
        }),
        OpeExpectation(
            "C_gbb", "C_betacc", {
                2: "-3",
                1: "v_h + 2 F",
                0: "-(W(Q_bb, Q_gc) + W(v_h, F) + 1/2 W(F, F) - " +
                   "1/2 d(F) - d(v_h))"
            }),
        OpeExpectation(
            "C_gcc", "C_betabb", {
                2: "-3",
                1: "v_h - 2 F",
                0: "-(W(Q_bc, Q_gb) - W(v_h, F) + 1/2 W(F, F) + " +
                   "1/2 d(F) - d(v_h))"
            }),
        OpeExpectation("C_gcc", "C_bbb", {1: "Q_gb", 0: "W(Q_gb, F)"}),
        OpeExpectation("C_betacc", "C_bbb", {
            1: "-Q_bb",
            0: "-W(Q_bb, F)"
        }),
        OpeExpectation("C_gbb", "C_ccc", {1: "Q_gc", 0: "-W(Q_gc, F)"}),
        OpeExpectation("C_betabb", "C_ccc", {
            1: "-Q_bc",
            0: "W(Q_bc, F)"
        }),
        OpeExpectation("C_ccc", "C_bbb", {
            2: "-1",
            1: "-F",
            0: "-1/2 (W(F, F) + d(F))"
        }),
    ], []),
    "g-c": (G_C_BLOCK, [
        OpeExpectation("G", "C_bbb", {0: "-W(Q_gb, Q_bb)"}),
        OpeExpectation("G", "C_gbb", {
            1: "Q_gb",
            0: "W(v_h, Q_gb) - 2 W(v_x, Q_bb) - d(Q_gb)"
        }),
        OpeExpectation("G", "C_betabb", {
            1: "-Q_bb",
            0: "2 W(v_y, Q_gb) + W(v_h, Q_bb) + d(Q_bb)"
        }),
        OpeExpectation("Gbar", "C_ccc", {0: "W(Q_bc, Q_gc)"}),
        OpeExpectation("Gbar", "C_gcc", {
            1: "Q_gc",
            0: "-(2 W(v_x, Q_bc) - W(v_h, Q_gc) + d(Q_gc))"
        }),
        OpeExpectation("Gbar", "C_betacc", {
            1: "-Q_bc",
            0: "2 W(v_y, Q_gc) + W(v_h, Q_bc) + d(Q_bc)"
        }),
    ], []),
    "g-gbar": (G_GBAR, [
        # -:v^h v^h:, not +. The + sign breaks
        # L_{W^(sl2[t])} = G o_0 Gbar + L_{S^(sl2[t])} and c = 9 for L.
        OpeExpectation(
            "G", "Gbar", {
                2: "3",
                1: "F",
                0: "-4 W(v_x, v_y) - W(v_h, v_h) + W(Q_gb, Q_bc) - " +
                   "W(Q_bb, Q_gc) + 1/2 W(F, F) + 2 d(v_h) - 1/2 d(F)"
            }),
    ], []),
}


STRONG_GENERATORS = ("v_x", "v_y", "v_h", "F", "Q_gb", "Q_bb", "Q_gc", "Q_bc",
                     "C_gbb", "C_betabb", "C_gcc", "C_betacc", "C_bbb",
                     "C_ccc", "G", "Gbar")

# Nonzero products without a table entry; a cubic n=0 pole each.
UNLISTED_PRODUCTS = (("Q_gb", "C_ccc"), ("Q_bb", "C_ccc"), ("Q_gc", "C_bbb"),
                     ("Q_bc", "C_bbb"))
UNLISTED = "cubic products of the Q fields with C^ccc and C^bbb"
REGULAR = "remaining products of the strong generators are regular"


def table_pairs() -> Set[FrozenSet[str]]:
  """Unordered pairs with an entry or a vanishing claim in ADJOINT_TABLE."""
  pairs = set()
  for _, expectations, vanishing in ADJOINT_TABLE.values():
    pairs |= {frozenset((e.left, e.right)) for e in expectations}
    pairs |= {frozenset(pair) for pair in vanishing}
  return pairs


def regular_pairs() -> List[Tuple[str, str]]:
  """Pairs of strong generators that the table and UNLISTED_PRODUCTS omit."""
  covered = table_pairs() | {frozenset(pair) for pair in UNLISTED_PRODUCTS}
  return [(a, b)
          for i, a in enumerate(STRONG_GENERATORS)
          for b in STRONG_GENERATORS[i:]
          if frozenset((a, b)) not in covered]


def unlisted_product_checks(prefix: str,
                            library: FieldLibrary) -> List[CheckResult]:
  """Records the poles of UNLISTED_PRODUCTS; a regular product fails."""
  results = []
  for left, right in UNLISTED_PRODUCTS:
    check_id = f"{prefix}/{left}*{right}"
    result = ope(library.resolve(left), library.resolve(right), left, right)
    if result.is_regular():
      results.append(
          CheckResult(check_id, UNLISTED, Status.FAIL, "nonzero poles",
                      result.to_text()))
    else:
      results.append(record(check_id, UNLISTED, result.to_text()))
  return results


class AdjointTableSuite(SuiteDefinition):
  name = "adjoint-table"
  anchor = "OPEs of the strong generators of W(C^3)^(sl2[t])"

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return list(ADJOINT_TABLE) + ["unlisted", "regular"]

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    library = field_library(CASE)
    prefix = f"{self.name}/{task}"
    if task == "unlisted":
      return unlisted_product_checks(prefix, library)
    if task == "regular":
      return closure_check(prefix, REGULAR, library.resolve,
                           library.evaluate_text, [], regular_pairs())
    anchor, expectations, vanishing = ADJOINT_TABLE[task]
    return closure_check(prefix, anchor, library.resolve,
                         library.evaluate_text, expectations, vanishing)


################################################################################
# Odake's algebra inside the commutant.
################################################################################
V_FIELDS = ("v_x", "v_y", "v_h")


def _theta_checks(prefix: str, library: FieldLibrary) -> List[CheckResult]:
  """Theta_W and the v-fields commute with the eight Odake generators."""
  anchor = "Odake generators lie in C(sl2, C^3)"
  vanishing = [(f"ThW_{xi}", g) for xi in SL2_BASIS for g in ODAKE_GENERATORS]
  results = closure_check(f"{prefix}/theta", anchor, library.resolve,
                          library.evaluate_text, [], vanishing)
  vanishing = [(v, g) for v in V_FIELDS for g in ODAKE_GENERATORS]
  results += closure_check(f"{prefix}/v-commute",
                           "v-fields commute with Odake's algebra",
                           library.resolve, library.evaluate_text, [],
                           vanishing)
  vanishing = [(f"ThW_{xi}", v) for xi in SL2_BASIS for v in V_FIELDS]
  results += closure_check(f"{prefix}/theta-v",
                           "v-fields lie in W^(sl2[t])", library.resolve,
                           library.evaluate_text, [], vanishing)
  return results


def _construction_checks(prefix: str,
                         library: FieldLibrary) -> List[CheckResult]:
  """Y and Ybar from Q bilinears agree with the zero-mode constructions."""
  anchor = "Y = 1/2 Gbar(0) X and Ybar = 1/2 G(0) Xbar"
  return [
      compare_states(f"{prefix}/constructions/Y", anchor,
                     library.resolve("Y_circle"), library.resolve("Y")),
      compare_states(f"{prefix}/constructions/Ybar", anchor,
                     library.resolve("Ybar_circle"),
                     library.resolve("Ybar")),
  ]


def _identity_checks(prefix: str, library: FieldLibrary) -> List[CheckResult]:
  """The G o_0 Gbar identity L_{W^g[t]} = G(0)Gbar + L_{S^g[t]}."""
  anchor = "G o_0 Gbar = L_{W^g[t]} - L_{S^g[t]}"
  g0gbar = library.evaluate_text("C(G, Gbar, 0)")
  results = [
      compare_states(f"{prefix}/identity/L_Wgt", anchor,
                     library.resolve("L_Wgt"),
                     g0gbar + library.resolve("L_Sgt_v")),
  ]
  coefficients = span_coefficients(
      g0gbar, [library.resolve("L_Wgt"),
               library.resolve("L_Sgt_v")])
  got = "not in span" if coefficients is None else \
      "(" + ", ".join(str(c) for c in coefficients) + ")"
  results.append(
      compare_values(f"{prefix}/identity/coefficients", anchor, "(1, -1)",
                     got))
  return results


def _nilpotent_checks(prefix: str,
                      library: FieldLibrary) -> List[CheckResult]:
  """G(0) and Gbar(0) square to zero on the generators."""
  anchor = "G(0)^2 = 0 and Gbar(0)^2 = 0"
  results = []
  for odd in ("G", "Gbar"):
    a = library.resolve(odd)
    for name in ODAKE_GENERATORS + V_FIELDS:
      phi = library.resolve(name)
      twice = field_mode_apply(a, 0, field_mode_apply(a, 0, phi))
      results.append(
          compare_states(f"{prefix}/nilpotent/{odd}/{name}", anchor,
                         library.system.zero(), twice))
  return results


COMMUTANT_TASKS = ("theta", "conformal", "relations", "constructions",
                   "identity", "nilpotent") + tuple(TABLE_BLOCKS)


class OdakeCommutantSuite(SuiteDefinition):
  name = "odake-commutant"
  anchor = "Odake's algebra realized inside C(sl2, C^3)"

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return list(COMMUTANT_TASKS)

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    library = field_library(CASE)
    if task in TABLE_BLOCKS:
      return odake_table_checks(self.name, library, task)
    return {
        "theta": _theta_checks,
        "conformal": odake_conformal_checks,
        "relations": odake_relation_checks,
        "constructions": _construction_checks,
        "identity": _identity_checks,
        "nilpotent": _nilpotent_checks,
    }[task](self.name, library)


################################################################################
# The osp(2|2) currents.
################################################################################
# Basis of osp(2|2) -> the field representing it.
OSP22_IMAGE = {
    "X": "v_x",
    "Y": "v_y",
    "H": "v_h",
    "E": "F",
    "Fpm": "Q_gb",
    "Fmp": "Q_bc",
    "Fmm": "Q_bb",
    "Fpp": "Q_gc",
}
OSP22_LEVEL = Fraction(3)


def osp22_level(library: FieldLibrary, lie: LieData) -> Fraction:
  """k with v_x o_1 v_y = k B(X, Y) |0>."""
  pole = circle(library.resolve("v_x"), library.resolve("v_y"), 1)
  return pole.terms.get((), Fraction(0)) / lie.form("B", "X", "Y")


def _image(library: FieldLibrary, combination: Mapping[str, Fraction]) -> State:
  total = library.system.zero()
  for x, c in combination.items():
    total = total + library.resolve(OSP22_IMAGE[x]) * c
  return total


class Osp22Suite(SuiteDefinition):
  name = "osp22"
  anchor = "v, F and Q fields generate V_k(osp(2|2))"

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return ["level"] + list(OSP22_IMAGE)

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    library = field_library(CASE)
    lie = osp22()
    level = osp22_level(library, lie)
    if task == "level":
      return [
          compare_values(f"{self.name}/level", self.anchor, OSP22_LEVEL,
                         level)
      ]
    results = []
    vacuum = library.system.vacuum()
    left = library.resolve(OSP22_IMAGE[task])
    for other, field in OSP22_IMAGE.items():
      expected = {
          1: vacuum * (level * lie.form("B", task, other)),
          0: _image(library, lie.bracket(task, other)),
      }
      results.append(
          ope_check(f"{self.name}/{task}*{other}",
                    f"[{task}, {other}] and B({task}, {other})", left,
                    library.resolve(field), expected))
    return results


################################################################################
# Virasoro elements and Sugawara vectors.
################################################################################
# (field, case whose library defines it most cheaply, central charge).
CENTRAL_CHARGES = (
    ("L_S", "S-adjoint", 6),
    ("L_E", "E-adjoint", -6),
    ("L_W", "W-adjoint", 0),
    ("L_Sgt", "S-adjoint", 0),
    ("L_Egt", "E-adjoint", -8),
    ("L_Wgt", "W-adjoint", 0),
    ("Sug_S", "S-adjoint", 6),
    ("Sug_E", "E-adjoint", 2),
    ("Sug_W", "W-adjoint", 0),
    ("Sug_v", "S-adjoint", -9),
    ("T_B", "E-adjoint", 1),
)

# Theta family -> case of its library.
THETA_CASES = {"E": "E-adjoint", "S": "S-adjoint", "W": "W-adjoint"}


def _central_charge_checks(prefix: str) -> List[CheckResult]:
  results = []
  for name, case, c in CENTRAL_CHARGES:
    L = field_library(case).resolve(name)
    results.append(
        compare_values(f"{prefix}/central-charge/{name}",
                       f"central charge of {name}", f"c = {Fraction(c)}",
                       f"c = {central_charge(L)}"))
  return results


def _sugawara_checks(prefix: str) -> List[CheckResult]:
  """Sugawara vectors built from LieData agree with the catalog."""
  results = []
  vectors = [(f"Th{which}_", case, "trace_C3", THETA_LEVELS[which],
              f"Sug_{which}") for which, case in THETA_CASES.items()]
  vectors.append(("v_", "S-adjoint", "normalized", Fraction(-3, 2), "Sug_v"))
  for prefix_, case, form, level, name in vectors:
    library = field_library(case)
    anchor = f"Sugawara construction for {name}"
    state, predicted = sugawara_of(library, prefix_, sl2(), form, level)
    results.append(
        compare_states(f"{prefix}/sugawara/{name}", anchor,
                       library.resolve(name), state))
    results.append(
        compare_values(f"{prefix}/sugawara/{name}/central-charge", anchor,
                       f"c = {predicted}", f"c = {central_charge(state)}"))
  return results


def _relation_checks(prefix: str) -> List[CheckResult]:
  anchor = "relations between the Virasoro elements"
  s_library = field_library("S-adjoint")
  e_library = field_library("E-adjoint")
  different = s_library.resolve("Sug_v") != s_library.resolve("L_Sgt_v")
  results = [
      compare_values(f"{prefix}/relations/Sug_v-vs-L_Sgt_v", anchor,
                     "different", "different" if different else "equal"),
      compare_states(f"{prefix}/relations/L_Sgt_v", anchor,
                     s_library.resolve("L_Sgt"),
                     s_library.resolve("L_Sgt_v")),
      compare_states(f"{prefix}/relations/Sug_E-T_B", anchor,
                     e_library.evaluate_text("1/16 W(ThE_h, ThE_h)"),
                     e_library.evaluate_text("Sug_E - T_B")),
      compare_states(f"{prefix}/relations/ThS_x*ThS_y", anchor,
                     s_library.system.vacuum() * -4,
                     s_library.evaluate_text("C(ThS_x, ThS_y, 1)")),
  ]
  return results


def _v_conformal_checks(prefix: str) -> List[CheckResult]:
  """The v-fields under L_{S^g[t]}; v_x has weight 0 and v_y weight 2."""
  library = field_library("S-adjoint")
  vacuum = library.system.vacuum()
  fields = [
      FieldSpec("v_h", library.resolve("v_h"), Fraction(1),
                poles={2: vacuum * 3}),
      FieldSpec("v_x", library.resolve("v_x"), Fraction(0)),
      FieldSpec("v_y", library.resolve("v_y"), Fraction(2)),
  ]
  return conformal_check(f"{prefix}/L_Sgt_v", "v-fields under L_Sgt_v",
                         library.resolve("L_Sgt_v"), fields, Fraction(0))


class SugawaraSuite(SuiteDefinition):
  name = "sugawara"
  anchor = "Virasoro elements of E, S, W and their sl2[t] invariants"

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    return ["central-charges", "sugawara", "relations", "v-conformal"]

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    return {
        "central-charges": _central_charge_checks,
        "sugawara": _sugawara_checks,
        "relations": _relation_checks,
        "v-conformal": _v_conformal_checks,
    }[task](self.name)
