"""Unit tests of suite reports and the suite runner."""

from .checks import CheckResult, Status, compare_values, skipped
from .harness import SuiteReport, config_hash, run_suite
from .systems import build_system
from .utils import *
from .wick import circle


def _report(results):
  return SuiteReport("unit", {"order": 2}, results)


def test_config_hash():
  first = config_hash("characters", {"order": 4, "cutoff": 2})
  second = config_hash("characters", {"cutoff": 2, "order": 4})
  assert first == second
  assert len(first) == 64
  assert first != config_hash("characters", {"order": 5, "cutoff": 2})
  assert first != config_hash("dims-crosscheck", {"order": 4, "cutoff": 2})


def test_report_summary():
  report = _report([
      compare_values("unit/b", "anchor b", 1, 1),
      compare_values("unit/a", "anchor a", 1, 2),
      skipped("unit/c", "anchor c", "not applicable"),
  ])
  assert report.summary == {"pass": 1, "fail": 1, "skipped": 1, "total": 3}
  assert not report.passed
  assert list(report.data["id"]) == ["unit/a", "unit/b", "unit/c"]
  assert list(report.failures()["id"]) == ["unit/a"]
  data = report.to_dict()
  assert set(data) == {
      "suite", "engine_version", "config_hash", "timestamp", "checks",
      "summary"
  }
  assert data["checks"][0] == {
      "id": "unit/a",
      "anchor": "anchor a",
      "status": "fail",
      "expected": "1",
      "got": "2",
  }
  text = report.to_text()
  assert text.startswith("suite unit: 1 passed, 1 failed, 1 skipped")
  assert f"{FAILURE_MESSAGE}: unit/a (anchor a)" in text
  assert _report([]).passed


def test_duplicate_ids():
  check = CheckResult("unit/a", "", Status.PASS, "", "")
  try:
    _report([check, check])
  except AssertionError as error:
    assert "unit/a" in str(error)
  else:
    assert False, "duplicate check ids accepted"


def test_run_suite():
  report = run_suite("w3-minus2")
  assert report.passed, report.to_text()
  assert report.summary["total"] > 0
  assert all(i.startswith("w3-minus2/") for i in report.data["id"])


def test_run_suite_clears_caches():
  system = build_system("symplectic-fermions")
  chi = system.generator_state("chi_p")
  assert not circle(chi, system.generator_state("chi_m"), 1).is_zero()
  assert system.cache_size > 0
  run_suite("w3-minus2")
  assert system.cache_size == 0


def test_unknown_suite_and_option():
  for name, overrides in (("no-such-suite", {}), ("characters", {"depth": 1})):
    try:
      run_suite(name, overrides)
    except ConfigError:
      continue
    assert False, f"{name} {overrides} accepted"


def main():
  run_unit_tests([
      test_config_hash,
      test_report_summary,
      test_duplicate_ids,
      test_run_suite,
      test_run_suite_clears_caches,
      test_unknown_suite_and_option,
  ])


if __name__ == "__main__":
  main()
