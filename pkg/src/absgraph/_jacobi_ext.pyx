# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi kernel (see _jacobi_py for the reference version)."""

from libc.math cimport sqrt, fabs, copysign


def jacobi_sweeps(double[:, ::1] a, double tol, int max_sweeps):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, k
    cdef double norm = 0.0, off, target
    cdef double apq, app, aqq, theta, t, c, s, akp, akq, vp, vq
    cdef int sweep = 0

    for p in range(n):
        for q in range(n):
            norm += a[p, q] * a[p, q]
    target = tol * sqrt(norm)

    while True:
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += a[p, q] * a[p, q]
        if sqrt(2.0 * off) <= target:
            return sweep
        if sweep == max_sweeps:
            return -1
        sweep += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k, p]
                    akq = a[k, q]
                    vp = c * akp - s * akq
                    vq = s * akp + c * akq
                    a[k, p] = vp
                    a[p, k] = vp
                    a[k, q] = vq
                    a[q, k] = vq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
