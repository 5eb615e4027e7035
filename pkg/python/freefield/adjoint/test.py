# RUN: %PYTHON %s 2>&1 | FileCheck %s

from ..core.harness import *


# CHECK: suite adjoint-table
# CHECK: suite odake-commutant
# CHECK: suite osp22
# CHECK: suite sugawara
# CHECK-NOT: FAILURE
def main():
  for name in ("adjoint-table", "odake-commutant", "osp22", "sugawara"):
    test_suite(name)


if __name__ == "__main__":
  main()
