"""Suite runner and report collection."""

# Make dict a generic (type-subscriptable) type for Python <3.9.
from __future__ import annotations

from datetime import datetime, timezone
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import hashlib
import json
import logging
import os
import sys

import pandas

from .checks import CheckResult, Status
from .suite_definition import SuiteDefinition
from .systems import clear_system_caches
from .. import __version__ as ENGINE_VERSION
from .utils import *


def config_hash(suite: str, options: Mapping[str, Any]) -> str:
  """SHA-256 of the canonical JSON of the suite name and options."""
  canonical = json.dumps({
      "suite": suite,
      "options": options
  },
                         sort_keys=True,
                         separators=(",", ":"),
                         default=str)
  return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class SuiteReport:
  """Class storing the checks of one suite run in a data frame."""
  keys = ["id", "anchor", "status", "expected", "got"]

  def __init__(self, suite: str, options: Mapping[str, Any],
               results: Sequence[CheckResult]):
    self.suite = suite
    self.options = dict(options)
    self.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    rows = sorted((r.to_dict() for r in results), key=lambda row: row["id"])
    ids = [row["id"] for row in rows]
    duplicates = sorted({i for i in ids if ids.count(i) > 1})
    assert not duplicates, f'duplicate check ids in {suite}: {duplicates}'
    self.data = pandas.DataFrame(
        dict([(key, [row[key] for row in rows]) for key in self.keys]))

  @property
  def summary(self) -> Dict[str, int]:
    counts = self.data["status"].value_counts()
    summary = {s.value: int(counts.get(s.value, 0)) for s in Status}
    summary["total"] = len(self.data)
    return summary

  @property
  def passed(self) -> bool:
    return self.summary[Status.FAIL.value] == 0

  def failures(self) -> pandas.DataFrame:
    return self.data[self.data["status"] == Status.FAIL.value]

  def to_dict(self) -> Dict[str, Any]:
    """Return a dictionary in the report schema."""
    return {
        "suite": self.suite,
        "engine_version": ENGINE_VERSION,
        "config_hash": config_hash(self.suite, self.options),
        "timestamp": self.timestamp,
        "checks": self.data.to_dict(orient="records"),
        "summary": self.summary,
    }

  def to_data_frame(self) -> pandas.DataFrame:
    return self.data

  def to_text(self) -> str:
    """Aligned check table plus one FAILURE line per failing check."""
    summary = self.summary
    lines = [f"suite {self.suite}: {summary['pass']} passed, " +
             f"{summary['fail']} failed, {summary['skipped']} skipped"]
    if len(self.data):
      lines.append(self.data[["status", "id", "anchor"]].to_string(index=False))
    for row in self.failures().to_dict(orient="records"):
      lines.append(f"{FAILURE_MESSAGE}: {row['id']} ({row['anchor']})")
      lines.append(f"  expected: {row['expected']}")
      lines.append(f"  got:      {row['got']}")
    return "\n".join(lines)

  def dump_to_file(self, file_name: str):
    """Dump the report to a json file."""
    # Create the path if needed.
    directory = os.path.dirname(file_name)
    if directory and not os.path.exists(directory):
      os.makedirs(directory)
    with open(file_name, "w", encoding="utf-8") as f:
      json.dump(self.to_dict(), f, indent=2, sort_keys=True)
      f.write("\n")


def dump_reports(reports: Sequence[SuiteReport], file_name: str):
  """Dump one report as an object, several as a list."""
  if len(reports) == 1:
    reports[0].dump_to_file(file_name)
    return
  directory = os.path.dirname(file_name)
  if directory and not os.path.exists(directory):
    os.makedirs(directory)
  with open(file_name, "w", encoding="utf-8") as f:
    json.dump([r.to_dict() for r in reports], f, indent=2, sort_keys=True)
    f.write("\n")


################################################################################
# Running suites.
################################################################################
def _suite(name: str) -> SuiteDefinition:
  # Imported here: the registry imports every suite package.
  from ..suites import get_suite
  return get_suite(name)


def _run_task(name: str, task: str,
              options: Mapping[str, Any]) -> List[CheckResult]:
  """Runs one task of a suite; errors become a single failing check."""
  suite = _suite(name)
  logging.info(f"{name}: running {task}")
  try:
    return list(suite.run_task(task, options))
  except (FreeFieldError, AssertionError) as error:
    return [
        CheckResult(f"{name}/{task}/error", suite.anchor, Status.FAIL,
                    "task completes", f"error: {error}")
    ]


def _run_tasks_sequential(name: str, tasks: Sequence[str],
                          options: Mapping[str, Any]) -> List[CheckResult]:
  results = []
  for task in tasks:
    results += _run_task(name, task, options)
  return results


def _run_tasks_parallel(num_processes: int, name: str, tasks: Sequence[str],
                        options: Mapping[str, Any]) -> List[CheckResult]:
  from multiprocessing import Pool
  with Pool(num_processes) as pool:
    # One job per task; each returns its list of checks.
    result_objs = [
        pool.apply_async(_run_task, (name, task, options)) for task in tasks
    ]
    results = []
    for result in result_objs:
      results += result.get()
    return results


def run_suite(name: str,
              overrides: Optional[Mapping[str, Any]] = None,
              num_processes: int = 1) -> SuiteReport:
  """Runs a built-in suite and collects its report.

  Args:
    name: The suite name.
    overrides: Option values replacing the suite defaults.
    num_processes: Tasks run in a process pool when this is larger than one.

  Returns:
    The SuiteReport, checks sorted by id.
  """
  suite = _suite(name)
  options = suite.options(overrides or {})
  tasks = suite.tasks(options)
  log(f"-- suite {name}: {len(tasks)} tasks, options {options}")
  try:
    if num_processes <= 1 or len(tasks) <= 1:
      results = _run_tasks_sequential(name, tasks, options)
    else:
      results = _run_tasks_parallel(min(num_processes, len(tasks)), name,
                                    tasks, options)
  finally:
    # Memo tables are per suite; pool workers exit with the pool.
    clear_system_caches()
  return SuiteReport(name, options, results)


def test_suite(name: str,
               overrides: Optional[Mapping[str, Any]] = None,
               num_processes: int = 1):
  """Runs a suite from a test script and exits with FAILURE if a check fails."""
  report = run_suite(name, overrides, num_processes)
  print(report.to_text())
  if not report.passed:
    sys.exit(FAILURE_MESSAGE)
  return report
