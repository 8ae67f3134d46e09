"""Reference computations independent of the package code paths."""

import math
from itertools import combinations


def t_two_tailed_pvalue(t, nu):
    """P(|T| > |t|) for Student's t with integer ``nu`` via the closed-form
    trigonometric series for the t distribution function."""
    theta = math.atan(abs(t) / math.sqrt(nu))
    s, c2 = math.sin(theta), math.cos(theta) ** 2
    if nu % 2 == 1:
        if nu == 1:
            a = 2.0 * theta / math.pi
        else:
            term = math.cos(theta)
            total = term
            for k in range(1, (nu - 3) // 2 + 1):
                term *= (2.0 * k) / (2.0 * k + 1.0) * c2
                total += term
            a = 2.0 / math.pi * (theta + s * total)
    else:
        term = 1.0
        total = term
        for k in range(1, (nu - 2) // 2 + 1):
            term *= (2.0 * k - 1.0) / (2.0 * k) * c2
            total += term
        a = s * total
    return 1.0 - a


def brute_force_connected_count(n):
    """Count labeled connected graphs on n vertices by trying every edge subset."""
    pairs = list(combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                parent[find(u)] = find(v)
        if len({find(v) for v in range(n)}) == 1:
            count += 1
    return count
