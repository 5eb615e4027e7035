from typing import Any, Callable, Mapping, Sequence

import logging
import os
import sys

# Message to print out when a check fails.
FAILURE_MESSAGE = "FAILURE"


################################################################################
# Errors.
################################################################################
class FreeFieldError(ValueError):
  """Root of all domain errors raised by the engine."""
  pass


class UnknownGeneratorError(FreeFieldError):
  pass


class SystemMismatchError(FreeFieldError):
  pass


class ContractionTableError(FreeFieldError):
  pass


class NonFiniteSliceError(FreeFieldError):
  pass


class LieDataError(FreeFieldError):
  pass


class CriticalLevelError(FreeFieldError):
  pass


class UnknownNameError(FreeFieldError):
  pass


class ConfigError(FreeFieldError):
  pass


class DivergentSeriesError(FreeFieldError):
  pass


class ExprSyntaxError(FreeFieldError):
  """Syntax error in a field expression, positioned at (line, column)."""

  def __init__(self, message: str, line: int, column: int):
    super().__init__(f"{line}:{column}: {message}")
    self.line = line
    self.column = column


################################################################################
# Logging utils.
################################################################################
# Log everything to stderr and flush so that stdout only carries reports.
def log(*args):
  print(*args, file=sys.stderr)
  sys.stderr.flush()


def env_int(name: str, default: int) -> int:
  """Reads an integer knob from the environment, falling back to `default`."""
  if name not in os.environ:
    return default
  try:
    return int(os.environ[name])
  except ValueError:
    raise ConfigError(f"environment variable {name} is not an integer: " +
                      f"{os.environ[name]!r}")


def assert_dict_entries_match_keys(dictionary: Mapping[str, Any],
                                   required_keys: Sequence[str]):
  assert len(
      set(required_keys).symmetric_difference(set(dictionary.keys()))
  ) == 0, f'dictionary:{dictionary}\n does not contain the exact keys: {required_keys}'


################################################################################
# Unit test driver.
################################################################################
def run_unit_tests(tests: Sequence[Callable[[], None]]):
  """Runs `test_*` functions that assert; exits with FAILURE if any fails."""
  logging.basicConfig(level=logging.INFO)
  num_failed = 0
  for test in tests:
    try:
      test()
      logging.info(f"{test.__name__} passed.")
    except (AssertionError, FreeFieldError) as error:
      num_failed += 1
      logging.error(f"{test.__name__} failed: {error}")
  if num_failed:
    logging.error(f"{num_failed} tests failed.")
    sys.exit(FAILURE_MESSAGE)
  logging.info("All test passed.")
