import os
import subprocess
import sys

import numpy as np
import pytest

from qclone import _kernels
from qclone._kernels import _jacobi_py

try:
    from qclone._kernels import _jacobi as _jacobi_c
except ImportError:
    _jacobi_c = None

MODULES = [m for m in (_jacobi_py, _jacobi_c) if m is not None]


def random_hermitian(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return np.ascontiguousarray(a + a.conj().T)


def run_jacobi(module, mat):
    h = np.array(mat, dtype=np.complex128, order="C")
    v = np.eye(len(h), dtype=np.complex128)
    tol = _kernels.OFFDIAG_TOL * max(1.0, float(np.linalg.norm(h)))
    sweeps = module.jacobi_sweeps(h, v, tol, _kernels.MAX_SWEEPS)
    assert sweeps >= 0
    return np.diag(h).real.copy(), v


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 16, 32])
def test_matches_lapack(module, n):
    mat = random_hermitian(n, seed=10 * n)
    w, _ = run_jacobi(module, mat)
    np.testing.assert_allclose(
        np.sort(w), np.linalg.eigvalsh(mat), rtol=0, atol=1e-11 * max(1.0, abs(mat).max())
    )


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_eigenvectors_reconstruct(module):
    mat = random_hermitian(12, seed=3)
    w, v = run_jacobi(module, mat)
    np.testing.assert_allclose((v * w) @ v.conj().T, mat, rtol=0, atol=1e-11)
    np.testing.assert_allclose(v.conj().T @ v, np.eye(12), rtol=0, atol=1e-12)


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_degenerate_and_diagonal(module):
    w, _ = run_jacobi(module, np.eye(4, dtype=np.complex128))
    np.testing.assert_allclose(w, np.ones(4), rtol=0, atol=0)
    mat = np.diag([3.0, -1.0, 2.0]).astype(np.complex128)
    w, v = run_jacobi(module, mat)
    np.testing.assert_allclose(np.sort(w), [-1.0, 2.0, 3.0], rtol=0, atol=0)
    np.testing.assert_allclose(v, np.eye(3), rtol=0, atol=0)


def test_backends_agree():
    if _jacobi_c is None:
        pytest.skip("compiled backend unavailable")
    mat = random_hermitian(9, seed=77)
    w_py, _ = run_jacobi(_jacobi_py, mat)
    w_c, _ = run_jacobi(_jacobi_c, mat)
    np.testing.assert_allclose(np.sort(w_py), np.sort(w_c), rtol=0, atol=1e-12)


def test_sweep_budget_exhausted():
    h = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
    v = np.eye(2, dtype=np.complex128)
    assert _jacobi_py.jacobi_sweeps(h, v, 1e-13, 0) == -1


def test_eigh_wrapper_sorts_and_validates():
    mat = random_hermitian(6, seed=5)
    w, v = _kernels.eigh(mat)
    assert list(w) == sorted(w)
    np.testing.assert_allclose((v * w) @ v.conj().T, mat, rtol=0, atol=1e-11)
    np.testing.assert_allclose(_kernels.eigvalsh(mat), w, rtol=0, atol=0)
    with pytest.raises(ValueError):
        _kernels.eigh(np.zeros((2, 3)))


def _backend_of(env_value):
    env = dict(os.environ)
    if env_value is None:
        env.pop("QCLONE_BACKEND", None)
    else:
        env["QCLONE_BACKEND"] = env_value
    code = "import qclone._kernels as k; print(k.BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    return out


def test_backend_env_selection():
    """QCLONE_BACKEND picks the implementation at import time."""
    assert _backend_of("python").stdout.strip() == "python"
    auto = _backend_of(None).stdout.strip()
    assert auto in ("compiled", "python")
    if _jacobi_c is not None:
        assert _backend_of("compiled").stdout.strip() == "compiled"
    bad = _backend_of("fortran")
    assert bad.returncode != 0
    assert "QCLONE_BACKEND" in bad.stderr
