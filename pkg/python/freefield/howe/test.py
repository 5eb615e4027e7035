# RUN: %PYTHON %s 2>&1 | FileCheck %s

# Weight 1 is the smallest cutoff where v_h, F and the Q fields all appear.

from ..core.harness import *


# CHECK: suite howe-desk
# CHECK-NOT: FAILURE
def main():
  test_suite("howe-desk", {"cutoff": 1}, num_processes=2)


if __name__ == "__main__":
  main()
