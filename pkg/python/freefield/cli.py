"""Command-line front end.

  python -m python.freefield ope --case adjoint --left G --right Gbar
  python -m python.freefield check odake-commutant --json out/report.json
  python -m python.freefield dims --case E-adjoint --weight 3/2 --charge F=3 \
      --annihilators theta
  python -m python.freefield char --which invariant --order 2
  python -m python.freefield list --case adjoint
  python -m python.freefield export --case W-standard
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import argparse
import json
import logging
import os
import sys

from .core.catalog import field_library, generator_symbol, theta_currents
from .core.config import export_case, load_library
from .core.fock import GradeVector
from .core.harness import dump_reports, run_suite
from .core.linalg import annihilator_slice, slice_basis
from .core.qseries import CHARACTERS, character
from .core.systems import CASES, case_family
from .core.utils import *
from .core.wick import ope
from .suites import SUITES

LOG_LEVELS = {
    "error": logging.ERROR,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}


def _parse_fraction(text: str) -> Fraction:
  try:
    return Fraction(text)
  except (ValueError, ZeroDivisionError):
    raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _parse_charges(text: str) -> Tuple[Tuple[str, int], ...]:
  """'F=1,H=-2' -> (('F', 1), ('H', -2))."""
  charges = []
  for item in text.split(","):
    name, _, value = item.partition("=")
    try:
      charges.append((name.strip(), int(value)))
    except ValueError:
      raise argparse.ArgumentTypeError(
          f"charge {item!r} is not NAME=INTEGER (e.g. --charge F=1,H=0)")
    if not name.strip():
      raise argparse.ArgumentTypeError(f"charge {item!r} has no name")
  return tuple(charges)


def _library(args: argparse.Namespace):
  if args.config is None:
    return field_library(args.case)
  with open(args.config, encoding="utf-8") as f:
    return load_library(f.read(), args.case)


################################################################################
# Subcommands.
################################################################################
def _ope(args: argparse.Namespace) -> int:
  library = _library(args)
  left = library.evaluate_text(args.left)
  right = library.evaluate_text(args.right)
  print(ope(left, right, args.left, args.right).to_text())
  return 0


def _check(args: argparse.Namespace) -> int:
  names = list(SUITES) if args.suite == "all" else [args.suite]
  given = {
      "cutoff": args.cutoff,
      "order": args.order,
      "samples": args.samples,
      "seed": args.seed,
  }
  given = {k: v for k, v in given.items() if v is not None}
  reports = []
  for name in names:
    overrides = given
    if args.suite == "all":
      known = SUITES[name].default_options()
      overrides = {k: v for k, v in given.items() if k in known}
    report = run_suite(name, overrides, args.num_processes)
    print(report.to_text())
    reports.append(report)
  if args.json:
    dump_reports(reports, args.json)
    log(f"-- report written to {args.json}")
  return 0 if all(r.passed for r in reports) else 1


def _annihilators(library, case: str, spec: str):
  if spec == "none":
    return []
  if spec == "theta":
    family = case_family(case)
    if not family:
      raise ConfigError(f"case {case} has no Theta currents")
    return list(theta_currents(library, family).values())
  return [library.evaluate_text(name) for name in spec.split(",")]


def _dims(args: argparse.Namespace) -> int:
  library = _library(args)
  grade = GradeVector(args.weight, args.charge)
  annihilators = _annihilators(library, library.case, args.annihilators)
  if annihilators:
    modes = (0,) if args.modes == "zero" else None
    basis = annihilator_slice(annihilators, grade, modes=modes,
                              system=library.system)
  else:
    basis = slice_basis(library.system, grade).states()
  print(len(basis))
  if args.basis:
    for state in basis:
      print(f"  {state.to_text()}")
  return 0


def _char(args: argparse.Namespace) -> int:
  series = character(args.which, args.order)
  print(series.to_table())
  if args.json:
    directory = os.path.dirname(args.json)
    if directory and not os.path.exists(directory):
      os.makedirs(directory)
    with open(args.json, "w", encoding="utf-8") as f:
      json.dump({
          "which": args.which,
          "order": args.order,
          "triples": series.triples()
      }, f, indent=2, sort_keys=True)
      f.write("\n")
  return 0


def _list(args: argparse.Namespace) -> int:
  if args.case is None:
    print("suites:")
    for name, suite in SUITES.items():
      print(f"  {name:<18} {suite.anchor}")
    print("cases:")
    for case in CASES:
      print(f"  {case}")
    return 0
  library = field_library(args.case)
  print(f"generators of {library.case}:")
  for g in library.system.generators:
    print(f"  {g.name:<10} {generator_symbol(g.name)}")
  print(f"fields of {library.case}:")
  for name in library.names():
    d = library.definition(name)
    print(f"  {name:<12} {d.symbol or name:<16} {d.anchor}")
  return 0


def _export(args: argparse.Namespace) -> int:
  sys.stdout.write(export_case(args.case))
  return 0


################################################################################
# Argument parsing.
################################################################################
def build_parser() -> argparse.ArgumentParser:
  parser = argparse.ArgumentParser(
      prog="freefield",
      description="Exact OPEs, commutant slices and characters of free fields.")
  parser.add_argument("--log",
                      choices=list(LOG_LEVELS),
                      default="error",
                      help="the logging level (default=error)")
  commands = parser.add_subparsers(dest="command", required=True)

  ope_parser = commands.add_parser("ope", help="print the OPE of two fields")
  ope_parser.add_argument("--case", default="adjoint")
  ope_parser.add_argument("--left", required=True, help="name or expression")
  ope_parser.add_argument("--right", required=True, help="name or expression")
  ope_parser.add_argument("--config", help="config file extending the case")
  ope_parser.set_defaults(run=_ope)

  check = commands.add_parser("check", help="run a verification suite")
  check.add_argument("suite", choices=list(SUITES) + ["all"])
  check.add_argument("--json", help="write the JSON report to this file")
  check.add_argument("--cutoff", type=int, help="largest slice weight")
  check.add_argument("--order", type=int, help="q-series truncation order")
  check.add_argument("--samples", type=int, help="random samples per system")
  check.add_argument("--seed", type=int, help="sampling seed")
  check.add_argument(
      "--num_processes",
      type=int,
      default=env_int("FREEFIELD_NUM_PROCESSES", 1),
      help="the number of processes to run the tasks (default 1)")
  check.set_defaults(run=_check)

  dims = commands.add_parser("dims", help="dimension of a graded slice")
  dims.add_argument("--case", required=True)
  dims.add_argument("--weight", type=_parse_fraction, required=True)
  dims.add_argument("--charge",
                    type=_parse_charges,
                    default=(),
                    help="constrained charges (e.g. F=1,H=0)")
  dims.add_argument("--annihilators",
                    default="none",
                    help="'theta', 'none' or comma separated fields")
  dims.add_argument("--modes", choices=["all", "zero"], default="all")
  dims.add_argument("--basis",
                    action="store_true",
                    help="also print the canonical basis")
  dims.add_argument("--config", help="config file extending the case")
  dims.set_defaults(run=_dims)

  char = commands.add_parser("char", help="expand a character")
  char.add_argument("--which", choices=list(CHARACTERS), required=True)
  char.add_argument("--order", type=int, required=True)
  char.add_argument("--json", help="write the (z, w, q-half, coefficient) rows")
  char.set_defaults(run=_char)

  listing = commands.add_parser("list", help="list suites, cases or fields")
  listing.add_argument("--case")
  listing.set_defaults(run=_list)

  export = commands.add_parser("export", help="print a case as config text")
  export.add_argument("--case", required=True)
  export.set_defaults(run=_export)
  return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
  args = build_parser().parse_args(argv)
  logging.basicConfig(level=LOG_LEVELS[args.log])
  try:
    return args.run(args)
  except FreeFieldError as error:
    print(f"error: {error}", file=sys.stderr)
    return 1
  except OSError as error:
    print(f"error: {error}", file=sys.stderr)
    return 1
