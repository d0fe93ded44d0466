"""numba-compiled kernels; loop-level twins of the functions in ``_numpy``."""

import math

import numpy as np
from numba import njit

EPS = np.finfo(np.float64).eps


@njit(cache=True)
def d2_matrix(m, dx):
    delta = 2.0 * math.pi / m
    scale = delta * delta / (dx * dx)
    col = np.empty(m)
    if m % 2 == 0:
        col[0] = -math.pi**2 / (3.0 * delta * delta) - 1.0 / 6.0
    else:
        col[0] = -math.pi**2 / (3.0 * delta * delta) + 1.0 / 12.0
    for k in range(1, m):
        half = 0.5 * k * delta
        sign = 1.0 if k % 2 == 0 else -1.0
        if m % 2 == 0:
            col[k] = -sign * 0.5 / math.sin(half) ** 2
        else:
            col[k] = -sign * 0.5 / (math.sin(half) * math.tan(half))
    out = np.empty((m, m))
    for i in range(m):
        for j in range(m):
            out[i, j] = scale * col[abs(i - j)]
    return out


@njit(cache=True)
def tridiagonalize(a_in):
    a = a_in.copy()
    n = a.shape[0]
    q = np.eye(n)
    e = np.zeros(n)
    v = np.empty(n)
    w = np.empty(n)
    for k in range(n - 2):
        norm = 0.0
        for i in range(k + 1, n):
            norm += a[i, k] * a[i, k]
        norm = math.sqrt(norm)
        if norm == 0.0:
            e[k] = 0.0
            continue
        alpha = -norm if a[k + 1, k] >= 0.0 else norm
        vnorm = 0.0
        for i in range(k + 1, n):
            v[i] = a[i, k]
        v[k + 1] -= alpha
        for i in range(k + 1, n):
            vnorm += v[i] * v[i]
        vnorm = math.sqrt(vnorm)
        if vnorm == 0.0:
            e[k] = alpha
            continue
        for i in range(k + 1, n):
            v[i] /= vnorm
        # w = p - (v.p) v with p = A22 v
        vp = 0.0
        for i in range(k + 1, n):
            acc = 0.0
            for j in range(k + 1, n):
                acc += a[i, j] * v[j]
            w[i] = acc
            vp += v[i] * acc
        for i in range(k + 1, n):
            w[i] -= vp * v[i]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i, j] -= 2.0 * (v[i] * w[j] + w[i] * v[j])
        for i in range(k + 1, n):
            a[i, k] = 0.0
            a[k, i] = 0.0
        e[k] = alpha
        for r in range(n):
            acc = 0.0
            for j in range(k + 1, n):
                acc += q[r, j] * v[j]
            acc *= 2.0
            for j in range(k + 1, n):
                q[r, j] -= acc * v[j]
    if n >= 2:
        e[n - 2] = a[n - 1, n - 2]
    d = np.empty(n)
    for i in range(n):
        d[i] = a[i, i]
    return d, e, q


@njit(cache=True)
def tql_implicit(d_in, e_in, z_in, max_iter):
    d = d_in.copy()
    e = e_in.copy()
    z = z_in.copy()
    n = d.shape[0]
    rows = z.shape[0]
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
            s = 1.0
            c = 1.0
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
                for k in range(rows):
                    f = z[k, i + 1]
                    z[k, i + 1] = s * z[k, i] + c * f
                    z[k, i] = c * z[k, i] - s * f
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d, z, total


@njit(cache=True)
def weighted_square_sum(psi, weights):
    rows, cols = psi.shape
    out = np.zeros(rows)
    for j in range(rows):
        acc = 0.0
        for n in range(cols):
            acc += weights[n] * psi[j, n] * psi[j, n]
        out[j] = acc
    return out
