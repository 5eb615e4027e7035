# RUN: %PYTHON %s 2>&1 | FileCheck %s

from ..core.harness import *


# CHECK: suite odake-original
# CHECK-NOT: FAILURE
def main():
  test_suite("odake-original")


if __name__ == "__main__":
  main()
