# RUN: %PYTHON %s 2>&1 | FileCheck %s

from ..core.harness import *


# CHECK: suite characters
# CHECK: suite dims-crosscheck
# CHECK-NOT: FAILURE
def main():
  test_suite("characters", {"order": 4})
  test_suite("dims-crosscheck", {"cutoff": 2, "order": 4})


if __name__ == "__main__":
  main()
