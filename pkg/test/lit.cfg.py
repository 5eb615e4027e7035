import os
import shutil
import sys

import lit.formats

# Configuration file for the 'lit' test runner.

# name: The name of this test suite.
config.name = "freefield cli tests"

# The internal shell provides `not`, `diff` and pipes.
config.test_format = lit.formats.ShTest(execute_external=False)

# suffixes: A list of file extensions to treat as test files.
config.suffixes = [".test"]

# test_source_root: The root path where tests are located.
config.test_source_root = os.path.dirname(__file__)

# test_exec_root: The path where tests shall execute.
config.test_exec_root = os.path.join(config.test_source_root, "Output")

config.excludes = ["lit.cfg.py"]

project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# The `filecheck` package installs a lowercase executable.
file_check = shutil.which("FileCheck") or shutil.which("filecheck") or \
    "filecheck"

config.substitutions.extend([
    ("%PYTHON", sys.executable),
    ("%freefield", f"{sys.executable} -m python.freefield"),
    ("FileCheck", file_check),
])

config.environment["PYTHONPATH"] = project_root + (
    (":" + os.environ["PYTHONPATH"]) if "PYTHONPATH" in os.environ else "")
config.environment["PATH"] = os.environ.get("PATH", "")
config.environment["PYTHONIOENCODING"] = "utf-8"
