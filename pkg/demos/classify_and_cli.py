"""
Classification verdicts and the command line
============================================

Runs the discrete-module search across a sweep of data in process,
then drives the installed command line tool on a JSON case file the
way a batch run would.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from heckelab import HeckeAlgebra, build_root_datum, key_result_search

SWEEP = [
    ("A", 2, [1]),
    ("A", 1, [1, 2]),
    ("C", 2, [1, 1, 1]),
    ("C", 2, [1, 2, 2]),
    ("B", 3, [1, 1]),
    ("D", 4, [1]),
    ("G", 2, [1, 1]),
]

for kind, rank, weights in SWEEP:
    out = key_result_search(HeckeAlgebra(build_root_datum(
        kind, rank, weights=weights)))
    dim = "-" if out.dimension is None else out.dimension
    print(kind + str(rank), str(weights).ljust(12),
          out.case.ljust(16), "dim", dim)

# the same search through the CLI, reading a case description from disk
case = {"type": "C", "rank": 2, "decoration": [1, 2, 2], "p": 5}
tmp = Path(tempfile.mkdtemp())
case_path = tmp / "case.json"
case_path.write_text(json.dumps(case))

proc = subprocess.run(
    [sys.executable, "-m", "heckelab.cli", "classify",
     "--case", str(case_path)],
    capture_output=True, text=True)
print()
print("cli exit code:", proc.returncode)
report = json.loads(proc.stdout)
print("verdict:", report["verdict"])
print("certificate character:", report["certificate"]["character"])

# a verification suite bundles expected verdicts with the cases
suite = {"cases": [
    {"case": {"type": "G", "rank": 2, "decoration": [1, 1], "p": 5},
     "expect": {"verdict": "Character1Dim", "r": 1}},
    {"case": {"type": "D", "rank": 4, "decoration": [1], "p": 5},
     "expect": {"verdict": "ReflectionTwist"}},
]}
suite_path = tmp / "suite.json"
suite_path.write_text(json.dumps(suite))

proc = subprocess.run(
    [sys.executable, "-m", "heckelab.cli", "verify",
     "--suite", str(suite_path)],
    capture_output=True, text=True)
report = json.loads(proc.stdout)
print()
print("verify summary:", report["summary"])
