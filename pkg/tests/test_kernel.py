import os
import subprocess
import sys

import pytest

from qfock import wedge


def _kernel_in_subprocess(**env):
    code = "from qfock.wedge import KERNEL; print(KERNEL)"
    res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={**os.environ, **env}, check=True)
    return res.stdout.strip()


def test_pure_python_can_be_forced():
    assert _kernel_in_subprocess(QFOCK_PURE_PYTHON="1") == "python"


def test_default_prefers_compiled():
    try:
        import qfock._straighten  # noqa: F401
    except ImportError:
        pytest.skip("compiled kernel not built")
    env = {k: v for k, v in os.environ.items() if k != "QFOCK_PURE_PYTHON"}
    res = subprocess.run([sys.executable, "-c", "from qfock.wedge import KERNEL; print(KERNEL)"],
                         capture_output=True, text=True, env=env, check=True)
    assert res.stdout.strip() == "cython"


def test_shared_straightener_is_reused():
    wedge.clear_caches()
    a = wedge.get_straightener(2, 3)
    assert wedge.get_straightener(2, 3) is a
    assert wedge.get_straightener(2, 3, use_cache=False) is not a
    assert a.check
