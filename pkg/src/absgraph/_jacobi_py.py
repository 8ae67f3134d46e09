"""Pure-Python cyclic Jacobi kernel.

Used when the compiled ``_jacobi_ext`` module is unavailable, or when
``ABSGRAPH_PURE=1`` is set. Same contract as the compiled kernel.
"""

from math import copysign, sqrt


def jacobi_sweeps(a, tol, max_sweeps):
    """Diagonalize the symmetric float64 array ``a`` in place.

    Returns the number of sweeps performed, or -1 if the off-diagonal
    Frobenius norm did not drop to ``tol * ||a||_F`` within
    ``max_sweeps`` sweeps.
    """
    n = a.shape[0]
    rows = a.tolist()
    norm = sqrt(sum(x * x for row in rows for x in row))
    target = tol * norm
    sweep = 0
    while True:
        off = 0.0
        for p in range(n - 1):
            row = rows[p]
            for q in range(p + 1, n):
                off += row[q] * row[q]
        if sqrt(2.0 * off) <= target:
            break
        if sweep == max_sweeps:
            a[:, :] = rows
            return -1
        sweep += 1
        for p in range(n - 1):
            rp = rows[p]
            for q in range(p + 1, n):
                apq = rp[q]
                if apq == 0.0:
                    continue
                rq = rows[q]
                app = rp[p]
                aqq = rq[q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = copysign(1.0, theta) / (abs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    if k == p or k == q:
                        continue
                    rk = rows[k]
                    akp = rk[p]
                    akq = rk[q]
                    vp = c * akp - s * akq
                    vq = s * akp + c * akq
                    rk[p] = vp
                    rp[k] = vp
                    rk[q] = vq
                    rq[k] = vq
                rp[p] = app - t * apq
                rq[q] = aqq + t * apq
                rp[q] = 0.0
                rq[p] = 0.0
    a[:, :] = rows
    return sweep
