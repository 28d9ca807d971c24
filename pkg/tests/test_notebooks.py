import subprocess
import sys
from pathlib import Path

import pytest

NOTEBOOKS = sorted((Path(__file__).resolve().parent.parent / "notebooks").glob("*.py"))


@pytest.mark.parametrize("script", NOTEBOOKS, ids=lambda p: p.stem)
def test_narrative_script_runs(script):
    res = subprocess.run([sys.executable, str(script)], capture_output=True, text=True, check=False)
    assert res.returncode == 0, res.stderr[-2000:]
