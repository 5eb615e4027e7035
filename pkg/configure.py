#!/usr/bin/env python
# Shortcut script to check deps and configuring the project for use.

import argparse
import importlib.util
import os
import shutil
import subprocess
import sys

REQUIRED_PACKAGES = ["numpy", "pandas", "hypothesis", "lit", "filecheck"]


def parse_arguments():
  parser = argparse.ArgumentParser(description="Configure the project")
  parser.add_argument("--repo-root",
                      help="Directory containing sources",
                      type=str,
                      default=os.path.abspath(os.path.dirname(__file__)))
  # Boolean flags.
  # Activate with e.g. --install.
  # Also supports e.g. --no-install.
  parser.add_argument(
      "--install",
      help="pip install the requirements when packages are missing",
      dest="install",
      default=False,
      action=argparse.BooleanOptionalAction,
  )
  parser.add_argument(
      "--smoke-test",
      help="Run `freefield list` once the project is configured",
      dest="smoke_test",
      default=True,
      action=argparse.BooleanOptionalAction,
  )
  return parser.parse_args()


def missing_packages():
  return [p for p in REQUIRED_PACKAGES if importlib.util.find_spec(p) is None]


def main(args):
  print(f"-- Python version {sys.version} ({sys.executable})")
  if sys.version_info < (3, 9):
    print("ERROR: Python 3.9 or newer is required")
    return 1

  missing = missing_packages()
  if missing and args.install:
    requirements = os.path.join(args.repo_root, "requirements.txt")
    print(f"-- Installing {requirements}")
    subprocess.check_call(
        [sys.executable, "-m", "pip", "install", "-r", requirements])
    missing = missing_packages()
  if missing:
    print(f"ERROR: Missing packages {missing}; run " +
          "`python -m pip install -r requirements.txt` or pass --install")
    return 1

  # Detect the FileCheck executable used by the lit tests.
  file_check = shutil.which("FileCheck") or shutil.which("filecheck")
  if file_check:
    print(f"-- Using FileCheck: {file_check}")
  else:
    print("WARNING: FileCheck not found on path. The lit tests will fail.")
  lit_path = shutil.which("lit")
  if not lit_path:
    print("WARNING: lit not found on path. run_tests.py will fail.")

  # Write out .env.
  with open(f"{os.path.join(args.repo_root, '.env')}", "wt") as f:
    f.write(f"PYTHONPATH={args.repo_root}\n")
  print(f"-- Wrote {os.path.join(args.repo_root, '.env')}")

  if args.smoke_test:
    env = dict(os.environ, PYTHONPATH=args.repo_root)
    subprocess.check_call([sys.executable, "-m", "python.freefield", "list"],
                          cwd=args.repo_root,
                          env=env,
                          stdout=subprocess.DEVNULL)
    print("-- Smoke test passed")
  return 0


if __name__ == "__main__":
  sys.exit(main(parse_arguments()))
