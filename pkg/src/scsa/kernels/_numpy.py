"""Pure-numpy kernels. Same signatures and results as the numba versions."""

import math

import numpy as np
from scipy.linalg import toeplitz

EPS = np.finfo(np.float64).eps


def d2_matrix(m, dx):
    delta = 2.0 * np.pi / m
    k = np.arange(1, m, dtype=np.float64)
    half = 0.5 * k * delta
    sign = np.where(k % 2 == 0, 1.0, -1.0)  # (-1)^k
    col = np.empty(m)
    if m % 2 == 0:
        col[0] = -np.pi**2 / (3.0 * delta**2) - 1.0 / 6.0
        col[1:] = -sign * 0.5 / np.sin(half) ** 2
    else:
        col[0] = -np.pi**2 / (3.0 * delta**2) + 1.0 / 12.0  # + sign: rows must sum to zero
        col[1:] = -sign * 0.5 / (np.sin(half) * np.tan(half))
    col *= delta**2 / dx**2
    return toeplitz(col)


def tridiagonalize(a):
    """Householder reduction of symmetric ``a`` to tridiagonal T = Q^T a Q.

    Returns (diag, offdiag, q); ``offdiag[i]`` couples rows i and i+1 and the
    last entry is zero.
    """
    a = np.array(a, dtype=np.float64, copy=True)
    n = a.shape[0]
    q = np.eye(n)
    e = np.zeros(n)
    for k in range(n - 2):
        x = a[k + 1 :, k]
        norm = math.sqrt(float(x @ x))
        if norm == 0.0:
            e[k] = 0.0
            continue
        alpha = -norm if x[0] >= 0.0 else norm
        v = x.copy()
        v[0] -= alpha
        vnorm = math.sqrt(float(v @ v))
        if vnorm == 0.0:
            e[k] = alpha
            continue
        v /= vnorm
        block = a[k + 1 :, k + 1 :]
        p = block @ v
        w = p - (v @ p) * v
        block -= 2.0 * (np.outer(v, w) + np.outer(w, v))
        a[k + 1 :, k] = 0.0
        a[k, k + 1 :] = 0.0
        e[k] = alpha
        qs = q[:, k + 1 :]
        qs -= 2.0 * np.outer(qs @ v, v)
    if n >= 2:
        e[n - 2] = a[n - 1, n - 2]
    return np.diag(a).copy(), e, q


def tql_implicit(d, e, z, max_iter):
    """Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.

    Rotations are accumulated into the columns of ``z``. Returns
    (eigenvalues, vectors, iterations); iterations is -1 when ``max_iter`` is
    exhausted. Output is unsorted.
    """
    d = np.array(d, dtype=np.float64, copy=True)
    e = np.array(e, dtype=np.float64, copy=True)
    z = np.array(z, dtype=np.float64, copy=True)
    n = d.shape[0]
    total = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= EPS * dd:
                    break
                m += 1
            if m == l:
                break
            if total >= max_iter:
                return d, z, -1
            total += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                zi = z[:, i].copy()
                zi1 = z[:, i + 1]
                z[:, i] = c * zi - s * zi1
                z[:, i + 1] = s * zi + c * zi1
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d, z, total


def weighted_square_sum(psi, weights):
    """out_j = sum_n weights_n * psi[j, n]**2."""
    if psi.shape[1] == 0:
        return np.zeros(psi.shape[0])
    return (psi * psi) @ weights
