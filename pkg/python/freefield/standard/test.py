# RUN: %PYTHON %s 2>&1 | FileCheck %s

from ..core.harness import *


# CHECK: suite sl21: 88 passed, 0 failed
# CHECK: suite L1sl2
# CHECK: suite heisenberg-std
# CHECK: suite w3-minus2
# CHECK-NOT: FAILURE
def main():
  for name in ("sl21", "L1sl2", "heisenberg-std", "w3-minus2"):
    test_suite(name)


if __name__ == "__main__":
  main()
