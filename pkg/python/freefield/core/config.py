"""The declarative config format for systems and fields.

  # comment
  [system]
  name: my-system
  generator: b odd 1/2 F=-1
  generator: c odd 1/2 F=1
  contraction: b c 0 1
  [fields]
  J = W(b, c)

`contraction: g h k c` records g(z)h(w) ~ c (z-w)^(-k-1); the skew partner is
implied. A file without a [system] section extends a built-in case.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

import dataclasses

from .catalog import FieldDefinition, FieldLibrary, field_library
from .expr import parse_field_expr
from .fock import *
from .systems import build_system, canonical_case


@dataclasses.dataclass
class ParsedConfig:
  system: Optional[FreeFieldSystem]
  definitions: List[FieldDefinition]


def _fail(line_number: int, message: str):
  raise ConfigError(f"config line {line_number}: {message}")


def _parse_generator(line_number: int, text: str) -> GeneratorSpec:
  parts = text.split()
  if len(parts) < 3:
    _fail(line_number, f"expected 'generator: NAME PARITY WEIGHT [C=n ...]'")
  name, parity, weight = parts[:3]
  charges = []
  for item in parts[3:]:
    key, _, value = item.partition("=")
    try:
      charges.append((key, int(value)))
    except ValueError:
      _fail(line_number, f"charge {item!r} is not NAME=INTEGER")
  try:
    return GeneratorSpec(name, Parity.parse(parity), Fraction(weight),
                         tuple(charges))
  except (ValueError, ZeroDivisionError) as error:
    _fail(line_number, str(error))


def parse_config(text: str) -> ParsedConfig:
  """Parses config text; raises ConfigError with the offending line."""
  section = None
  name = "config"
  generators: List[GeneratorSpec] = []
  contractions: List[Tuple[int, str, str, int, Fraction]] = []
  definitions: List[FieldDefinition] = []
  has_system = False
  for line_number, raw in enumerate(text.splitlines(), start=1):
    line = raw.split("#", 1)[0].strip()
    if not line:
      continue
    if line.startswith("[") and line.endswith("]"):
      section = line[1:-1].strip()
      if section not in ("system", "fields"):
        _fail(line_number, f"unknown section [{section}]")
      has_system = has_system or section == "system"
      continue
    if section == "system":
      key, sep, value = line.partition(":")
      if not sep:
        _fail(line_number, f"expected 'key: value', got {line!r}")
      key, value = key.strip(), value.strip()
      if key == "name":
        name = value
      elif key == "generator":
        generators.append(_parse_generator(line_number, value))
      elif key == "contraction":
        parts = value.split()
        if len(parts) != 4:
          _fail(line_number, "expected 'contraction: G H K C'")
        try:
          contractions.append((line_number, parts[0], parts[1], int(parts[2]),
                               Fraction(parts[3])))
        except (ValueError, ZeroDivisionError):
          _fail(line_number, f"bad contraction order or constant in {value!r}")
      else:
        _fail(line_number, f"unknown system key {key!r}")
    elif section == "fields":
      field, sep, expr = line.partition("=")
      if not sep:
        _fail(line_number, f"expected 'NAME = EXPR', got {line!r}")
      field, expr = field.strip(), expr.strip()
      try:
        parse_field_expr(expr)
      except ExprSyntaxError as error:
        _fail(line_number, f"in field {field}: {error}")
      definitions.append(FieldDefinition(field, expr, "config"))
    else:
      _fail(line_number, "content outside of a section")
  system = None
  if has_system:
    table = ContractionTable()
    for line_number, g, h, k, c in contractions:
      try:
        table.add(g, h, k, c)
      except ContractionTableError as error:
        _fail(line_number, str(error))
    system = FreeFieldSystem(name, generators, table)
  return ParsedConfig(system, definitions)


def load_library(text: str, case: Optional[str] = None) -> FieldLibrary:
  """A library from config text, on its own system or extending `case`."""
  parsed = parse_config(text)
  if parsed.system is not None:
    return FieldLibrary(parsed.system.name, parsed.system, parsed.definitions)
  if case is None:
    raise ConfigError("config has no [system] section and no case was given")
  return field_library(case).with_definitions(parsed.definitions)


def _charges_text(g: GeneratorSpec) -> str:
  return "".join(f" {name}={value}" for name, value in g.charges)


def export_system(system: FreeFieldSystem) -> List[str]:
  lines = ["[system]", f"name: {system.name}"]
  for g in system.generators:
    lines.append(f"generator: {g.name} {g.parity.name.lower()} {g.weight}" +
                 _charges_text(g))
  written = set()
  for (g, h), k, c in system.contractions.items():
    # Skew partners are implied on load.
    if (h, g, k) in written:
      continue
    written.add((g, h, k))
    lines.append(f"contraction: {g} {h} {k} {c}")
  return lines


def export_case(case: str) -> str:
  """The built-in system and field library of `case` in config format."""
  case = canonical_case(case)
  library = field_library(case)
  lines = [f"# Built-in case {case}."] + export_system(build_system(case))
  lines.append("[fields]")
  for name in library.names():
    d = library.definition(name)
    lines.append(f"# {d.symbol or name}: {d.anchor}")
    lines.append(f"{name} = {d.expr}")
  return "\n".join(lines) + "\n"
