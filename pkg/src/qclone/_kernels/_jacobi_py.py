"""Pure-numpy twin of the compiled Jacobi kernel.

Same cyclic sweep order, same rotation formulas, same return contract as
``_jacobi.pyx``.  Row and column updates are vectorized, so this stays usable
up to the 64x64 matrices the package works with, just slower than the
compiled path.
"""
from __future__ import annotations

import numpy as np


def jacobi_sweeps(h: np.ndarray, v: np.ndarray, tol: float, max_sweeps: int) -> int:
    """Diagonalize Hermitian ``h`` in place, accumulating rotations into ``v``.

    Returns the number of sweeps run before the off-diagonal Frobenius norm
    fell below ``tol``, or -1 if that never happened within ``max_sweeps``.
    """
    n = h.shape[0]
    for sweep in range(max_sweeps + 1):
        off = h.copy()
        np.fill_diagonal(off, 0.0)
        if np.linalg.norm(off) <= tol:
            return sweep
        if sweep == max_sweeps:
            return -1
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = h[p, q]
                absb = abs(b)
                if absb == 0.0:
                    continue
                app = h[p, p].real
                aqq = h[q, q].real
                tau = (aqq - app) / (2.0 * absb)
                # smaller root of t^2 - 2*tau*t - 1 = 0 for a minimal angle
                if tau == 0.0:
                    t = 1.0
                elif tau > 0.0:
                    t = -1.0 / (tau + np.sqrt(tau * tau + 1.0))
                else:
                    t = 1.0 / (-tau + np.sqrt(tau * tau + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                phase = b / absb
                cph = phase.conjugate()

                rest = np.ones(n, dtype=bool)
                rest[p] = rest[q] = False
                hip = h[rest, p].copy()
                hiq = h[rest, q].copy()
                h[rest, p] = c * hip + s * cph * hiq
                h[rest, q] = c * hiq - s * phase * hip
                h[p, rest] = h[rest, p].conjugate()
                h[q, rest] = h[rest, q].conjugate()
                h[p, p] = app + t * absb
                h[q, q] = aqq - t * absb
                h[p, q] = 0.0
                h[q, p] = 0.0

                vip = v[:, p].copy()
                viq = v[:, q].copy()
                v[:, p] = c * vip + s * cph * viq
                v[:, q] = c * viq - s * phase * vip
    return -1
