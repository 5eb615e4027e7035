"""Named fields of the built-in cases.

Every field is stored as an expression text over the generators and other
fields of its library, so that the catalog can be exported in the config
format and compared against the displayed formulas. Fields are evaluated
lazily and cached per library.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import dataclasses
import functools
import logging
import re

from .checks import OpeExpectation
from .expr import evaluate, parse_field_expr, referenced_names
from .fock import *
from .lie import LieData, sl2, sugawara
from .systems import *


@dataclasses.dataclass(frozen=True)
class FieldDefinition:
  """A named field.

  Attributes:
    name: ASCII name used in expressions and reports.
    expr: Defining expression text.
    anchor: Where the formula is displayed.
    symbol: Conventional symbol, for the `list` command.
  """
  name: str
  expr: str
  anchor: str
  symbol: str = ""


def _coefficient_text(c: Fraction, first: bool) -> str:
  sign = "-" if c < 0 else ("" if first else "+")
  magnitude = abs(c)
  body = "" if magnitude == 1 else f"{magnitude} "
  if first:
    return f"{sign}{body}"
  return f"{sign} {body}"


def linear_text(terms: Iterable[Tuple[Fraction, str]]) -> str:
  """Formats sum c_i t_i as expression text, dropping zero terms."""
  collected: Dict[str, Fraction] = {}
  for c, text in terms:
    collected[text] = collected.get(text, Fraction(0)) + Fraction(c)
  pieces = []
  for text, c in collected.items():
    if c:
      pieces.append(_coefficient_text(c, not pieces) + text)
  return " ".join(pieces) if pieces else "0"


################################################################################
# Generic constructions over an sl_2 module.
################################################################################
REPRESENTATION_OF_MODULE = {"adjoint": "C3", "standard": "C2"}
SL2_BASIS = ("x", "y", "h")


def theta_definitions(module: str) -> List[FieldDefinition]:
  """Currents Theta^xi_E, Theta^xi_S and Theta^xi_W from rho(xi)."""
  representation = sl2().representations[REPRESENTATION_OF_MODULE[module]]
  b, c = generator_names(module, "b"), generator_names(module, "c")
  beta, gamma = generator_names(module, "beta"), generator_names(module, "gamma")
  definitions = []
  for xi in SL2_BASIS:
    e_terms, s_terms = [], []
    # Theta^xi_E = sum_i :b^{rho(xi) x_i} c^{x_i'}:, and minus that for S.
    for x_i in representation.basis:
      for x_j, r in representation.image(xi, x_i).items():
        e_terms.append((r, f"W({b[x_j]}, {c[x_i]})"))
        s_terms.append((-r, f"W({beta[x_j]}, {gamma[x_i]})"))
    definitions += [
        FieldDefinition(f"ThE_{xi}", linear_text(e_terms),
                        "action of sl2[t] on the bc system",
                        f"Θ^{xi}_E"),
        FieldDefinition(f"ThS_{xi}", linear_text(s_terms),
                        "action of sl2[t] on the beta-gamma system",
                        f"Θ^{xi}_S"),
        FieldDefinition(f"ThW_{xi}", f"ThE_{xi} + ThS_{xi}",
                        "diagonal action of sl2[t] on W = E (x) S",
                        f"Θ^{xi}_W"),
    ]
  return definitions


def sugawara_text(prefix: str, lie: LieData, form_name: str, level) -> str:
  """Expression text of 1/(2(k+h^v)) sum_xi :X^xi X^{xi'}: over `prefix`."""
  level = to_scalar(level)
  h_dual = lie.dual_coxeter(form_name)
  if level + h_dual == 0:
    raise CriticalLevelError(
        f"level {level} is critical for {lie.name} (h^v = {h_dual})")
  scale = Fraction(1) / (2 * (level + h_dual))
  dual = lie.dual_basis(form_name)
  terms = []
  for xi in lie.basis:
    for eta, d in dual[xi].items():
      terms.append((scale * d, f"W({prefix}{xi}, {prefix}{eta})"))
  return linear_text(terms)


# Levels of the Theta currents with respect to the trace form of the module.
THETA_LEVELS = {"E": 1, "S": -1, "W": 0}


def conformal_definitions(module: str) -> List[FieldDefinition]:
  """L_E, L_S, L_W, the Sugawara vectors of Theta and the g[t] cosets."""
  b, c = generator_names(module, "b"), generator_names(module, "c")
  beta, gamma = generator_names(module, "beta"), generator_names(module, "gamma")
  vectors = [v for v, _, _ in MODULES[module]]
  form = f"trace_{REPRESENTATION_OF_MODULE[module]}"
  lie = sl2()
  definitions = [
      FieldDefinition(
          "L_E", linear_text(
              (-1, f"W({b[v]}, d({c[v]}))") for v in vectors),
          "Virasoro element of the bc system, b of weight 1", "L_E"),
      FieldDefinition(
          "L_S", linear_text(
              (1, f"W({beta[v]}, d({gamma[v]}))") for v in vectors),
          "Virasoro element of the beta-gamma system, beta of weight 1",
          "L_S"),
      FieldDefinition("L_W", "L_E + L_S", "Virasoro element of W = E (x) S",
                      "L_W"),
  ]
  for which, level in THETA_LEVELS.items():
    definitions.append(
        FieldDefinition(f"Sug_{which}",
                        sugawara_text(f"Th{which}_", lie, form, level),
                        "Sugawara construction applied to Theta_" + which,
                        f"τ_{which}(L_Sug)"))
    definitions.append(
        FieldDefinition(f"L_{which}gt", f"L_{which} - Sug_{which}",
                        f"Virasoro element of {which}^(g[t])",
                        f"L_{{{which}^{{g[t]}}}}"))
  return definitions


################################################################################
# The adjoint case C^3.
################################################################################
ADJOINT_FIELDS = (
    FieldDefinition(
        "v_h",
        "W(beta_x, gamma_xp) + W(beta_y, gamma_yp) + W(beta_h, gamma_hp)",
        "generators of S^(sl2[t]), isomorphic to V_{-3/2}(sl2)", "v^h"),
    FieldDefinition("v_x",
                    "1/2 W(gamma_hp, gamma_hp) + 1/2 W(gamma_xp, gamma_yp)",
                    "generators of S^(sl2[t]), isomorphic to V_{-3/2}(sl2)",
                    "v^x"),
    FieldDefinition("v_y",
                    "-1/2 W(beta_h, beta_h) - 2 W(beta_x, beta_y)",
                    "generators of S^(sl2[t]), isomorphic to V_{-3/2}(sl2)",
                    "v^y"),
    FieldDefinition("F", "-W(b_h, c_hp) - W(b_x, c_xp) - W(b_y, c_yp)",
                    "strong generators F, C^bbb, C^ccc of E^(sl2[t])", "F"),
    FieldDefinition("C_bbb", "W(b_x, b_y, b_h)",
                    "strong generators F, C^bbb, C^ccc of E^(sl2[t])",
                    "C^{bbb}"),
    FieldDefinition("C_ccc", "W(c_xp, c_yp, c_hp)",
                    "strong generators F, C^bbb, C^ccc of E^(sl2[t])",
                    "C^{ccc}"),
    FieldDefinition("Q_gb",
                    "W(gamma_hp, b_h) + W(gamma_xp, b_x) + W(gamma_yp, b_y)",
                    "quadratic generators of the osp(2|2) action", "Q^{γb}"),
    FieldDefinition(
        "Q_bb", "W(beta_h, b_h) + 2 W(beta_x, b_y) + 2 W(beta_y, b_x)",
        "quadratic generators of the osp(2|2) action", "Q^{βb}"),
    FieldDefinition(
        "Q_gc",
        "W(gamma_hp, c_hp) + 1/2 W(gamma_xp, c_yp) + 1/2 W(gamma_yp, c_xp)",
        "quadratic generators of the osp(2|2) action", "Q^{γc}"),
    FieldDefinition("Q_bc",
                    "W(beta_h, c_hp) + W(beta_x, c_xp) + W(beta_y, c_yp)",
                    "quadratic generators of the osp(2|2) action", "Q^{βc}"),
    FieldDefinition(
        "G", "W(beta_h, gamma_xp, c_yp) - W(beta_h, gamma_yp, c_xp) + " +
        "2 W(beta_x, gamma_hp, c_xp) - 2 W(beta_x, gamma_xp, c_hp) - " +
        "2 W(beta_y, gamma_hp, c_yp) + 2 W(beta_y, gamma_yp, c_hp) - " +
        "W(b_h, c_xp, c_yp) + 2 W(b_x, c_xp, c_hp) - 2 W(b_y, c_yp, c_hp)",
        "cubic invariants from the first fundamental theorem", "G"),
    FieldDefinition(
        "Gbar", "1/2 (-W(beta_h, gamma_xp, b_x) + W(beta_h, gamma_yp, b_y) - " +
        "2 W(beta_x, gamma_hp, b_y) + W(beta_x, gamma_xp, b_h) + " +
        "2 W(beta_y, gamma_hp, b_x) - W(beta_y, gamma_yp, b_h) + " +
        "W(b_x, b_h, c_xp) - 2 W(b_x, b_y, c_hp) - W(b_y, b_h, c_yp))",
        "cubic invariants from the first fundamental theorem", "Ḡ"),
    FieldDefinition(
        "C_gbb", "-W(gamma_hp, b_x, b_y) + 1/2 W(gamma_xp, b_x, b_h) - " +
        "1/2 W(gamma_yp, b_y, b_h)",
        "cubic invariants from the first fundamental theorem", "C^{γbb}"),
    FieldDefinition(
        "C_betabb",
        "W(beta_h, b_x, b_y) + W(beta_x, b_y, b_h) - W(beta_y, b_x, b_h)",
        "cubic invariants from the first fundamental theorem", "C^{βbb}"),
    FieldDefinition(
        "C_gcc", "-W(gamma_hp, c_xp, c_yp) - W(gamma_xp, c_yp, c_hp) + " +
        "W(gamma_yp, c_xp, c_hp)",
        "cubic invariants from the first fundamental theorem", "C^{γcc}"),
    FieldDefinition(
        "C_betacc", "W(beta_h, c_xp, c_yp) - 2 W(beta_x, c_xp, c_hp) + " +
        "2 W(beta_y, c_yp, c_hp)",
        "cubic invariants from the first fundamental theorem", "C^{βcc}"),
    FieldDefinition("L_Sgt_v", "1/2 (4 W(v_x, v_y) + W(v_h, v_h) - d(v_h))",
                    "Virasoro element of S^(sl2[t]) in terms of v-fields",
                    "L_{S^{sl2[t]}}"),
    FieldDefinition("X", "C_ccc", "Odake generators inside C(sl2, C^3)", "X"),
    FieldDefinition("Xbar", "C_bbb", "Odake generators inside C(sl2, C^3)",
                    "X̄"),
    FieldDefinition("Y", "1/2 W(Q_bc, Q_gc)",
                    "Odake generators inside C(sl2, C^3)", "Y"),
    FieldDefinition("Ybar", "-1/2 W(Q_gb, Q_bb)",
                    "Odake generators inside C(sl2, C^3)", "Ȳ"),
    FieldDefinition("Y_circle", "1/2 C(Gbar, X, 0)",
                    "Y as half the zero mode of Gbar on X", "½Ḡ(0)X"),
    FieldDefinition("Ybar_circle", "1/2 C(G, Xbar, 0)",
                    "Ybar as half the zero mode of G on Xbar", "½G(0)X̄"),
    FieldDefinition("L", "C(G, Gbar, 0) - 1/2 d(F)",
                    "Virasoro element of C(sl2, C^3), c = 9", "L"),
    FieldDefinition(
        "T_B", "1/6 (W(ThE_x, ThE_y) - 1/2 d(ThE_h) - 1/8 W(ThE_h, ThE_h))",
        "c = 1 Virasoro element inside the Theta_E currents", "T_B"),
)

################################################################################
# The standard case C^2.
################################################################################
STANDARD_FIELDS = (
    FieldDefinition("H", "W(beta1, gamma1) + W(beta2, gamma2)",
                    "rank one Heisenberg generator of S^(sl2[t])", "H"),
    FieldDefinition("F", "-W(b1, c1) - W(b2, c2)",
                    "sl(2|1) generators of W^(sl2[t])", "F"),
    FieldDefinition("Ep", "W(b1, b2)", "sl(2|1) generators of W^(sl2[t])",
                    "E^+"),
    FieldDefinition("Em", "W(c1, c2)", "sl(2|1) generators of W^(sl2[t])",
                    "E^-"),
    FieldDefinition("Q1m", "W(beta1, c1) + W(beta2, c2)",
                    "sl(2|1) generators of W^(sl2[t])", "Q_1^-"),
    FieldDefinition("Q1p", "W(b1, gamma1) + W(b2, gamma2)",
                    "sl(2|1) generators of W^(sl2[t])", "Q_1^+"),
    FieldDefinition("Q2p", "W(b1, beta2) - W(b2, beta1)",
                    "sl(2|1) generators of W^(sl2[t])", "Q_2^+"),
    FieldDefinition("Q2m", "W(gamma1, c2) - W(gamma2, c1)",
                    "sl(2|1) generators of W^(sl2[t])", "Q_2^-"),
    FieldDefinition("J", "W(b1, c1) + W(b2, c2)",
                    "L_1(sl2) generators of E^(sl2[t])", ":b^1c^1: + :b^2c^2:"),
)

################################################################################
# Odake's original realization, symplectic fermions, Heisenberg.
################################################################################
ODAKE_FIELDS = (
    FieldDefinition(
        "G", "W(b1, alpha_p1) + W(b2, alpha_p2) + W(b3, alpha_p3)",
        "Odake generators on rank 6 Heisenberg (x) rank 3 bc", "G"),
    FieldDefinition(
        "Gbar", "W(c1, alpha_m1) + W(c2, alpha_m2) + W(c3, alpha_m3)",
        "Odake generators on rank 6 Heisenberg (x) rank 3 bc", "Ḡ"),
    FieldDefinition("X", "W(b1, b2, b3)",
                    "Odake generators on rank 6 Heisenberg (x) rank 3 bc",
                    "X"),
    FieldDefinition("Xbar", "W(c1, c2, c3)",
                    "Odake generators on rank 6 Heisenberg (x) rank 3 bc",
                    "X̄"),
    FieldDefinition("F", "C(G, Gbar, 1)", "Odake additional fields", "F"),
    FieldDefinition("L", "C(G, Gbar, 0) - 1/2 d(F)", "Odake additional fields",
                    "L"),
    FieldDefinition("Y", "1/2 C(Gbar, X, 0)", "Odake additional fields", "Y"),
    FieldDefinition("Ybar", "1/2 C(G, Xbar, 0)", "Odake additional fields",
                    "Ȳ"),
)

SYMPLECTIC_FERMION_FIELDS = (
    FieldDefinition("L", "W(chi_m, chi_p)",
                    "Virasoro element of symplectic fermions, c = -2", "L"),
    FieldDefinition("Wp", "W(d(chi_p), chi_m) - W(chi_p, d(chi_m))",
                    "W_3 generator at c = -2, rescaled by sqrt(6)", "√6 W"),
)

HEISENBERG_FIELDS = (FieldDefinition("L", "1/2 W(j, j)",
                                     "Virasoro element of the Heisenberg field",
                                     "L"),)


def _candidate_definitions(case: str) -> List[FieldDefinition]:
  module = case_module(case)
  if module:
    definitions = theta_definitions(module) + conformal_definitions(module)
    if module == "adjoint":
      definitions += list(ADJOINT_FIELDS)
      definitions.append(
          FieldDefinition("Sug_v",
                          sugawara_text("v_", sl2(), "normalized",
                                        Fraction(-3, 2)),
                          "Sugawara vector of V_{-3/2}(sl2)",
                          "L_Sug(v)"))
    else:
      definitions += list(STANDARD_FIELDS)
    return definitions
  return list({
      "odake-original": ODAKE_FIELDS,
      "symplectic-fermions": SYMPLECTIC_FERMION_FIELDS,
      "heisenberg": HEISENBERG_FIELDS,
  }[case])


_GENERATOR = re.compile(r"(beta|gamma|b|c)_?([a-z]|\d)(p?)$")


def generator_symbol(name: str) -> str:
  """Conventional symbol of a built-in generator name."""
  match = _GENERATOR.match(name)
  if match:
    family, index, prime = match.groups()
    head = {"beta": "β", "gamma": "γ"}.get(family, family)
    mark = "'" if prime else ""
    return f"{head}^{{{index}{mark}}}"
  if name.startswith("alpha_"):
    return f"α^{'+' if name[6] == 'p' else '-'}_{name[7:]}"
  if name.startswith("chi_"):
    return f"χ^{'+' if name[4] == 'p' else '-'}"
  return name


class FieldLibrary:
  """The named fields of one case over its free-field system."""

  def __init__(self, case: str, system: FreeFieldSystem,
               definitions: Sequence[FieldDefinition]):
    self.case = case
    self.system = system
    available: Dict[str, FieldDefinition] = {}
    pending = list(definitions)
    # A definition is kept once everything it references is available.
    while True:
      kept = []
      for d in pending:
        names = referenced_names(parse_field_expr(d.expr))
        if all(system.has_generator(n) or n in available for n in names):
          available[d.name] = d
        else:
          kept.append(d)
      if len(kept) == len(pending):
        break
      pending = kept
    self.definitions: Dict[str, FieldDefinition] = {
        d.name: d for d in definitions if d.name in available
    }
    self._cache: Dict[str, State] = {}
    self._resolving: List[str] = []

  def names(self) -> List[str]:
    return list(self.definitions)

  def has(self, name: str) -> bool:
    return name in self.definitions or self.system.has_generator(name)

  def definition(self, name: str) -> FieldDefinition:
    if name not in self.definitions:
      raise UnknownNameError(
          f"no field {name!r} in the {self.case} library")
    return self.definitions[name]

  def resolve(self, name: str) -> State:
    """Generator or named field -> State (evaluated once)."""
    if name in self._cache:
      return self._cache[name]
    if name not in self.definitions:
      if self.system.has_generator(name):
        return self.system.generator_state(name)
      raise UnknownNameError(f"unknown name {name!r} in the {self.case} " +
                             "library")
    if name in self._resolving:
      raise UnknownNameError(
          f"cyclic field definitions: {' -> '.join(self._resolving + [name])}")
    self._resolving.append(name)
    try:
      logging.debug(f"evaluating {name} in {self.case}")
      state = self.evaluate_text(self.definitions[name].expr)
    finally:
      self._resolving.pop()
    if state.is_mixed:
      raise FreeFieldError(f"field {name} of {self.case} has mixed parity")
    self._cache[name] = state
    return state

  def evaluate_text(self, text: str) -> State:
    return evaluate(parse_field_expr(text), self.system, self.resolve)

  def with_definitions(self,
                       definitions: Sequence[FieldDefinition]) -> FieldLibrary:
    """A copy where `definitions` replace or extend the built-in ones."""
    merged = dict(self.definitions)
    for d in definitions:
      merged[d.name] = d
    return FieldLibrary(self.case, self.system, list(merged.values()))


@functools.lru_cache(maxsize=None)
def field_library(case: str) -> FieldLibrary:
  case = canonical_case(case)
  return FieldLibrary(case, build_system(case), _candidate_definitions(case))


def named_field(library: FieldLibrary, name: str) -> State:
  return library.resolve(name)


def theta_field(which: str, xi: str, case: str) -> State:
  """Theta^xi_which for which in {E, S, W} over the system of `case`."""
  if which not in THETA_LEVELS:
    raise UnknownNameError(f"theta family must be E, S or W, got {which!r}")
  return field_library(case).resolve(f"Th{which}_{xi}")


def theta_currents(library: FieldLibrary, which: str) -> Dict[str, State]:
  return {xi: library.resolve(f"Th{which}_{xi}") for xi in SL2_BASIS}


def sugawara_of(library: FieldLibrary, prefix: str, lie: LieData,
                form_name: str, level) -> Tuple[State, Fraction]:
  """Sugawara vector of the currents `prefix` + basis name in `library`."""
  currents = {xi: library.resolve(f"{prefix}{xi}") for xi in lie.basis}
  return sugawara(currents, lie, form_name, level)


################################################################################
# The OPE table of Odake's algebra, shared by both realizations.
################################################################################
N2 = "N=2 superconformal block, c = 9"
FX = "F, X, Xbar block"
MIXED_BLOCK = "products of F, G, Gbar with X, Xbar, Y, Ybar"
REMAINING = "remaining products of X, Xbar, Y, Ybar"

ODAKE_OPE_TABLE = (
    OpeExpectation("F", "F", {1: "3"}, N2),
    OpeExpectation("G", "G", {}, N2),
    OpeExpectation("Gbar", "Gbar", {}, N2),
    OpeExpectation("F", "G", {0: "G"}, N2),
    OpeExpectation("F", "Gbar", {0: "-Gbar"}, N2),
    OpeExpectation("G", "Gbar", {
        2: "3",
        1: "F",
        0: "L + 1/2 d(F)"
    }, N2),
    OpeExpectation("F", "X", {0: "3 X"}, FX),
    OpeExpectation("F", "Xbar", {0: "-3 Xbar"}, FX),
    OpeExpectation("X", "Xbar", {
        2: "-1",
        1: "-F",
        0: "-1/2 (W(F, F) + d(F))"
    }, FX),
    OpeExpectation("F", "Y", {0: "2 Y"}, MIXED_BLOCK),
    OpeExpectation("F", "Ybar", {0: "-2 Ybar"}, MIXED_BLOCK),
    OpeExpectation("G", "X", {}, MIXED_BLOCK),
    OpeExpectation("Gbar", "X", {0: "2 Y"}, MIXED_BLOCK),
    OpeExpectation("Gbar", "Xbar", {}, MIXED_BLOCK),
    OpeExpectation("G", "Xbar", {0: "2 Ybar"}, MIXED_BLOCK),
    OpeExpectation("G", "Y", {1: "3/2 X", 0: "1/2 d(X)"}, MIXED_BLOCK),
    OpeExpectation("G", "Ybar", {}, MIXED_BLOCK),
    OpeExpectation("Gbar", "Ybar", {
        1: "3/2 Xbar",
        0: "1/2 d(Xbar)"
    }, MIXED_BLOCK),
    OpeExpectation("Gbar", "Y", {}, MIXED_BLOCK),
    OpeExpectation(
        "Y", "Ybar", {
            3: "-3/4",
            2: "-1/2 F",
            1: "-1/4 (L + d(F) + 1/2 W(F, F))",
            0: "1/4 (W(G, Gbar) - W(L, F) - d(L) - 1/4 d(W(F, F)))",
        }, REMAINING),
    OpeExpectation("X", "Ybar", {
        1: "-1/2 G",
        0: "-1/2 (W(G, F) + d(G))"
    }, REMAINING),
    OpeExpectation("Xbar", "Y", {
        1: "-1/2 Gbar",
        0: "-1/2 (-W(Gbar, F) + d(Gbar))"
    }, REMAINING),
    OpeExpectation("X", "Y", {}, REMAINING),
    OpeExpectation("Xbar", "Ybar", {}, REMAINING),
)

ODAKE_GENERATORS = ("F", "L", "G", "Gbar", "X", "Xbar", "Y", "Ybar")

# (left, right) of the normally ordered relations d(X) = :FX: and friends.
ODAKE_RELATIONS = (
    ("dX", "d(X)", "W(F, X)"),
    ("dXbar", "d(Xbar)", "-W(F, Xbar)"),
    ("YY", "W(Y, Y)", "0"),
    ("YbarYbar", "W(Ybar, Ybar)", "0"),
)
