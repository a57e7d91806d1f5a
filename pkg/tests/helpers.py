"""Shared generators and independent oracles for the test suite.

``naive_det`` is a deliberately separate determinant (first-row cofactor
expansion) used to cross-check the production backends; keep it free of any
imports from chowforms.resultant internals.
"""

import random
from fractions import Fraction

from chowforms import BinaryForm, CurveMap, MPoly, Plane, check_curve


def naive_det(M):
    """Cofactor expansion along the first row; exact, O(n!)."""
    n = len(M)
    if n == 1:
        return M[0][0]
    acc = None
    for j in range(n):
        entry = M[0][j]
        if isinstance(entry, MPoly):
            if entry.is_zero:
                continue
        elif not entry:
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = entry * naive_det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        for row in M:
            for entry in row:
                if isinstance(entry, MPoly):
                    return MPoly.zero(entry.names)
        return Fraction(0)
    return acc


def matmul(A, B):
    size = len(A)
    return [
        [sum(Fraction(A[i][k]) * Fraction(B[k][j]) for k in range(size)) for j in range(size)]
        for i in range(size)
    ]


def rand_form(rng, d, lo=-5, hi=5, nonzero=True):
    while True:
        h = BinaryForm([rng.randint(lo, hi) for _ in range(d + 1)])
        if not nonzero or not h.is_zero:
            return h


def rand_curve(rng, n, d, lo=-5, hi=5):
    while True:
        rows = [[rng.randint(lo, hi) for _ in range(d + 1)] for _ in range(n + 1)]
        if any(any(r) for r in rows):
            return CurveMap.from_coeffs(rows)


def rand_curve_birational(rng, n, d, lo=-5, hi=5):
    """Random curve that is base-point-free and one-to-one onto its image."""
    while True:
        f = rand_curve(rng, n, d, lo, hi)
        if check_curve(f, rng=rng).birational:
            return f


def rand_plane(rng, n, lo=-5, hi=5):
    while True:
        u = [rng.randint(lo, hi) for _ in range(n + 1)]
        v = [rng.randint(lo, hi) for _ in range(n + 1)]
        try:
            return Plane(tuple(u), tuple(v))
        except ValueError:
            continue


def plane_through(rng, point, lo=-3, hi=3):
    """Random plane whose kernel contains the given projective point."""
    n = len(point) - 1
    k = next(i for i, c in enumerate(point) if c)
    basis = []
    for i in range(n + 1):
        if i == k:
            continue
        vec = [Fraction(0)] * (n + 1)
        vec[i] = point[k]
        vec[k] = -point[i]
        basis.append(vec)
    while True:
        covs = []
        for _ in range(2):
            cov = [Fraction(0)] * (n + 1)
            for b in basis:
                c = rng.randint(lo, hi)
                if c:
                    cov = [x + c * y for x, y in zip(cov, b)]
            covs.append(tuple(cov))
        try:
            return Plane(covs[0], covs[1])
        except ValueError:
            continue


def rand_invertible(rng, size, lo=-4, hi=4):
    while True:
        M = [[rng.randint(lo, hi) for _ in range(size)] for _ in range(size)]
        if naive_det([[Fraction(x) for x in row] for row in M]):
            return M


def compose_curve(g, phi0, phi1):
    """Curve map z -> g(phi0(z), phi1(z))."""
    return CurveMap(tuple(c.compose(phi0, phi1) for c in g.components))


def rand_base_free_pair(rng, e, lo=-4, hi=4):
    """Two degree-e forms with no common root (a base-point-free pair)."""
    from chowforms import form_gcd

    while True:
        p = rand_form(rng, e, lo, hi)
        q = rand_form(rng, e, lo, hi)
        if form_gcd(p, q).degree == 0:
            return p, q
