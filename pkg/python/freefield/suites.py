"""Registry of the built-in verification suites."""

from typing import Dict

from .adjoint.definitions import *
from .characters.definitions import *
from .core.suite_definition import SuiteDefinition
from .core.utils import ConfigError
from .howe.definitions import *
from .invariants.definitions import EngineInvariantsSuite
from .odake.definitions import OdakeOriginalSuite
from .standard.definitions import *

# Suites in the order `check all` runs them; engine invariants come first.
SUITES: Dict[str, SuiteDefinition] = {
    suite.name: suite for suite in (
        EngineInvariantsSuite(),
        OdakeOriginalSuite(),
        AdjointTableSuite(),
        OdakeCommutantSuite(),
        Osp22Suite(),
        SugawaraSuite(),
        Sl21Suite(),
        L1Sl2Suite(),
        HeisenbergStandardSuite(),
        W3MinusTwoSuite(),
        CharactersSuite(),
        DimsCrosscheckSuite(),
        HoweDeskSuite(),
    )
}


def get_suite(name: str) -> SuiteDefinition:
  if name not in SUITES:
    raise ConfigError(f"unknown suite {name!r}; known suites: " +
                      ", ".join(SUITES))
  return SUITES[name]
