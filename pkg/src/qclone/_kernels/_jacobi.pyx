# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Cyclic Jacobi eigensolver for complex Hermitian matrices (compiled kernel).

The pure-numpy twin lives in ``_jacobi_py``; both expose the same
``jacobi_sweeps`` contract and the package ``__init__`` picks one at import
time.  Keep the two implementations rotation-for-rotation identical.
"""

from libc.math cimport sqrt


def jacobi_sweeps(double complex[:, ::1] h, double complex[:, ::1] v,
                  double tol, int max_sweeps):
    """Diagonalize Hermitian ``h`` in place, accumulating rotations into ``v``.

    One sweep visits every upper-triangle pair (p, q) in cyclic order and
    annihilates h[p, q] with a complex plane rotation.  Returns the number of
    sweeps run before the off-diagonal Frobenius norm fell below ``tol``, or
    -1 if that never happened within ``max_sweeps``.
    """
    cdef Py_ssize_t n = h.shape[0]
    cdef Py_ssize_t p, q, i
    cdef int sweep
    cdef double off2, absb, tau, t, c, s, app, aqq, re, im
    cdef double complex b, phase, cph, hip, hiq, vip, viq

    for sweep in range(max_sweeps + 1):
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                re = h[p, q].real
                im = h[p, q].imag
                off2 += re * re + im * im
        if sqrt(2.0 * off2) <= tol:
            return sweep
        if sweep == max_sweeps:
            return -1
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = h[p, q]
                absb = sqrt(b.real * b.real + b.imag * b.imag)
                if absb == 0.0:
                    continue
                app = h[p, p].real
                aqq = h[q, q].real
                tau = (aqq - app) / (2.0 * absb)
                # smaller root of t^2 - 2*tau*t - 1 = 0 for a minimal angle
                if tau == 0.0:
                    t = 1.0
                elif tau > 0.0:
                    t = -1.0 / (tau + sqrt(tau * tau + 1.0))
                else:
                    t = 1.0 / (-tau + sqrt(tau * tau + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                phase = b / absb
                cph = phase.conjugate()
                for i in range(n):
                    if i == p or i == q:
                        continue
                    hip = h[i, p]
                    hiq = h[i, q]
                    h[i, p] = c * hip + s * cph * hiq
                    h[i, q] = c * hiq - s * phase * hip
                    h[p, i] = h[i, p].conjugate()
                    h[q, i] = h[i, q].conjugate()
                h[p, p] = app + t * absb
                h[q, q] = aqq - t * absb
                h[p, q] = 0.0
                h[q, p] = 0.0
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip + s * cph * viq
                    v[i, q] = c * viq - s * phase * vip
    return -1
