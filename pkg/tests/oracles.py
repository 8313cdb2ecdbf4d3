"""Independent reference computations used to freeze expected values.

Nothing here imports the package's spectral or detection code.
"""

from collections import deque
from fractions import Fraction
from math import comb

import numpy as np


def bfs_distances(adj):
    n = len(adj)
    out = [[None] * n for _ in range(n)]
    for s in range(n):
        out[s][s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in range(n):
                if adj[u][v] and out[s][v] is None:
                    out[s][v] = out[s][u] + 1
                    queue.append(v)
    return out


def triangle_count(rel, x, y, i, j):
    return sum(1 for z in range(len(rel)) if rel[x][z] == i and rel[z][y] == j)


def brute_intersection_numbers(rel, d):
    """``p[i][j][k]`` by plain loops, or ``None`` if some count is not constant."""
    n = len(rel)
    p = [[[None] * (d + 1) for _ in range(d + 1)] for _ in range(d + 1)]
    for x in range(n):
        for y in range(n):
            k = rel[x][y]
            for i in range(d + 1):
                for j in range(d + 1):
                    c = triangle_count(rel, x, y, i, j)
                    if p[i][j][k] is None:
                        p[i][j][k] = c
                    elif p[i][j][k] != c:
                        return None
    return p


def graph_spectrum(adj, tol=1e-6):
    """Distinct eigenvalues (descending) with multiplicities, via eigvalsh."""
    w = np.sort(np.linalg.eigvalsh(np.asarray(adj, dtype=float)))[::-1]
    vals, mults = [], []
    for x in w:
        if vals and abs(vals[-1] - x) < tol:
            mults[-1] += 1
        else:
            vals.append(float(x))
            mults.append(1)
    return vals, mults


def krawtchouk(k, x, n, q):
    return sum(
        (-1) ** j * (q - 1) ** (k - j) * comb(x, j) * comb(n - x, k - j) for j in range(k + 1)
    )


def hamming_P(n, q):
    """``P[j][i]`` = eigenvalue of the distance-i graph on the j-th eigenspace."""
    return np.array([[krawtchouk(i, j, n, q) for i in range(n + 1)] for j in range(n + 1)])


def classical_krein(P, mult, valency, n):
    """``q_ij^k = (m_i m_j / n) sum_h p_h(i) p_h(j) p_h(k) / k_h^2``."""
    P = np.asarray(P, dtype=float)
    d = P.shape[0] - 1
    q = np.zeros((d + 1,) * 3)
    for i in range(d + 1):
        for j in range(d + 1):
            for k in range(d + 1):
                s = sum(P[i, h] * P[j, h] * P[k, h] / valency[h] ** 2 for h in range(d + 1))
                q[i, j, k] = mult[i] * mult[j] / n * s
    return q


def exact_ratios(theta):
    """LRS ratios with exact rational arithmetic."""
    theta = [Fraction(t) for t in theta]
    d = len(theta) - 1
    out = []
    for i in range(1, d + 1):
        prod = Fraction(1)
        for j in range(1, d + 1):
            if j != i:
                prod *= (theta[0] - theta[j]) / (theta[i] - theta[j])
        out.append(prod)
    return out


def lagrange_sum(betas, j, x):
    total = Fraction(0)
    betas = [Fraction(b) for b in betas]
    x = Fraction(x)
    for i, bi in enumerate(betas):
        term = bi**j
        for k, bk in enumerate(betas):
            if k != i:
                term *= (x - bk) / (bi - bk)
        total += term
    return total
