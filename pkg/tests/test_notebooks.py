import subprocess
import sys
from pathlib import Path

import pytest

NOTEBOOKS = sorted((Path(__file__).parent.parent / "notebooks").glob("*.py"))


@pytest.mark.parametrize("path", NOTEBOOKS, ids=[p.stem for p in NOTEBOOKS])
def test_notebook_runs(path):
    res = subprocess.run([sys.executable, str(path)], capture_output=True, text=True)
    assert res.returncode == 0, res.stderr[-2000:]
