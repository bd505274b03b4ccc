import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


@pytest.mark.parametrize("name, argv, needle", [
    ("run_census.py", ["--d", "2", "--max-index", "2"], "True"),
    ("betti_table_scan.py", ["--n", "3", "--d", "2"], "feasible"),
    ("duality_scan.py", ["--max-n", "2", "--max-d", "2"], "0 disagreements"),
])
def test_script_runs(name, argv, needle):
    proc = subprocess.run([sys.executable, str(SCRIPTS / name), *argv],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    assert needle in proc.stdout
