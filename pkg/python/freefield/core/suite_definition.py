from typing import Any, Dict, List, Mapping, Sequence

from .checks import CheckResult
from .utils import *


class SuiteDefinition:
  """ Generic verification suite interface."""

  # Name used on the command line.
  name: str = ""
  # Where the statements checked by the suite come from.
  anchor: str = ""

  def default_options(self) -> Dict[str, Any]:
    """Option names and default values of the suite."""
    return {}

  def options(self, overrides: Mapping[str, Any]) -> Dict[str, Any]:
    """Defaults updated with `overrides`; unknown option names are rejected."""
    options = self.default_options()
    unknown = sorted(set(overrides) - set(options))
    if unknown:
      raise ConfigError(f"suite {self.name} has no option(s) {unknown}; " +
                        f"known options: {sorted(options)}")
    options.update(overrides)
    assert_dict_entries_match_keys(options, list(self.default_options()))
    return options

  def tasks(self, options: Mapping[str, Any]) -> List[str]:
    """Independent units of work, run sequentially or in a process pool.

    Each task must be runnable from its name and the options alone.
    """
    pass

  def run_task(self, task: str,
               options: Mapping[str, Any]) -> Sequence[CheckResult]:
    """Runs one task and returns its checks; never raises on a failed check."""
    pass
