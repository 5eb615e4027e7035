# RUN: %PYTHON %s 2>&1 | FileCheck %s

# Samples every built-in system with a reduced number of random triples.

from ..core.harness import *


# CHECK-NOT: FAILURE
def main():
  test_suite("engine-invariants", {"samples": 40, "seed": 7})


if __name__ == "__main__":
  main()
