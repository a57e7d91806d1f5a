"""Sylvester matrices and exact resultants of equal-degree binary forms.

Two determinant backends are provided.  Fraction-free Bareiss elimination
handles any square matrix with exact entries.  For Sylvester matrices whose
top rows involve one covector block and bottom rows another, a Laplace
expansion along the top block is much cheaper: the determinant becomes a
signed sum over column subsets of products of two d x d minors, and every
top minor collects the u-variables while every bottom minor collects the
v-variables, which makes the bidegree (d, d) of the result explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .polynomial import BinaryForm, MPoly

Entry = Union[Fraction, MPoly]

__all__ = ["SylvesterMatrix", "sylvester", "det_bareiss", "det_laplace_split", "resultant"]


def _is_zero(x: Entry) -> bool:
    if isinstance(x, MPoly):
        return x.is_zero
    return not x


def _exact_div(num: Entry, den: Entry) -> Entry:
    if isinstance(den, MPoly):
        if den.is_constant:
            den = den.constant_value()
        else:
            if isinstance(num, Fraction):
                if not num:
                    return MPoly.zero(den.names)
                raise ValueError("inexact scalar/polynomial division")
            return num / den
    return num / den


@dataclass(frozen=True)
class SylvesterMatrix:
    """2d x 2d Sylvester matrix of two degree-d binary forms.

    Row i (0 <= i < d) carries the d+1 coefficients of the first form in
    columns i..i+d; rows d..2d-1 repeat the pattern for the second form.
    """

    d: int
    entries: tuple[tuple[Entry, ...], ...]

    @property
    def size(self) -> int:
        return 2 * self.d


def sylvester(h1: BinaryForm, h2: BinaryForm) -> SylvesterMatrix:
    """Build the Sylvester matrix; both forms must share a degree d >= 1."""
    d = h1.degree
    if h2.degree != d:
        raise ValueError("forms must have equal degrees")
    if d < 1:
        raise ValueError("degree must be at least 1")
    c1, c2 = _join_coeffs(h1, h2)
    zero = _zero_like(c1 + c2)
    rows = []
    for block in (c1, c2):
        for i in range(d):
            row = [zero] * (2 * d)
            for j, c in enumerate(block):
                row[i + j] = c
            rows.append(tuple(row))
    return SylvesterMatrix(d, tuple(rows))


def _join_coeffs(h1: BinaryForm, h2: BinaryForm) -> tuple[list[Entry], list[Entry]]:
    """Coerce both coefficient lists into one common ring."""
    names = None
    for c in h1.coeffs + h2.coeffs:
        if isinstance(c, MPoly):
            if names is None:
                names = c.names
            elif c.names != names:
                raise ValueError("forms use different coefficient rings")
    if names is None:
        return list(h1.coeffs), list(h2.coeffs)
    lift = lambda c: c if isinstance(c, MPoly) else MPoly.const(names, c)
    return [lift(c) for c in h1.coeffs], [lift(c) for c in h2.coeffs]


def _zero_like(entries: Sequence[Entry]) -> Entry:
    for c in entries:
        if isinstance(c, MPoly):
            return MPoly.zero(c.names)
    return Fraction(0)


def _rows(M) -> list[list[Entry]]:
    if isinstance(M, SylvesterMatrix):
        M = M.entries
    rows = [list(r) for r in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    return rows


def det_bareiss(M) -> Entry:
    """Exact determinant by fraction-free Bareiss elimination.

    Every division against the previous pivot is exact (Sylvester's
    identity), so entries stay in the coefficient ring throughout.  Pivot
    choice is the first row with a nonzero candidate, in column order;
    singular matrices return 0.
    """
    A = _rows(M)
    n = len(A)
    zero = _zero_like([x for row in A for x in row])
    sign = 1
    prev: Entry = Fraction(1)
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if not _is_zero(A[r][k])), None)
        if pivot_row is None:
            return zero
        if pivot_row != k:
            A[k], A[pivot_row] = A[pivot_row], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = _exact_div(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev)
            A[i][k] = zero
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return -det if sign < 0 else det


def det_laplace_split(M) -> Entry:
    """Determinant via Laplace expansion along the first half of the rows.

    det = sum over d-column subsets S of
          (-1)^(sum(S) + d(d-1)/2) * minor(top, S) * minor(bottom, S^c).

    Minors are computed by first-row expansion with shared memoization
    across subsets, so the whole sum costs far less than C(2d, d)
    independent determinants.
    """
    A = _rows(M)
    n = len(A)
    if n % 2:
        raise ValueError("split expansion needs an even-sized matrix")
    d = n // 2
    zero = _zero_like([x for row in A for x in row])
    top = A[:d]
    bottom = A[d:]

    def make_minor(block):
        memo: dict[tuple[int, ...], Entry] = {(): Fraction(1)}

        def minor(cols: tuple[int, ...]) -> Entry:
            val = memo.get(cols)
            if val is not None:
                return val
            row = d - len(cols)
            acc = None
            for idx, c in enumerate(cols):
                entry = block[row][c]
                if _is_zero(entry):
                    continue
                sub = minor(cols[:idx] + cols[idx + 1 :])
                if _is_zero(sub):
                    continue
                term = entry * sub
                if idx % 2:
                    term = -term
                acc = term if acc is None else acc + term
            val = zero if acc is None else acc
            memo[cols] = val
            return val

        return minor

    minor_top = make_minor(top)
    minor_bottom = make_minor(bottom)
    base_sign = (d * (d - 1) // 2) % 2
    acc = None
    cols = range(n)
    for S in combinations(cols, d):
        t = minor_top(S)
        if _is_zero(t):
            continue
        comp = tuple(c for c in cols if c not in set(S))
        b = minor_bottom(comp)
        if _is_zero(b):
            continue
        term = t * b
        if (sum(S) + base_sign) % 2:
            term = -term
        acc = term if acc is None else acc + term
    return zero if acc is None else acc


def resultant(h1: BinaryForm, h2: BinaryForm, method: str = "auto") -> Entry:
    """Resultant of two degree-d binary forms as the Sylvester determinant.

    ``method`` picks the backend: "bareiss", "laplace", or "auto", which
    uses the Laplace split when coefficients are symbolic (the Sylvester
    blocks then separate by covector block) and Bareiss for plain numbers.
    """
    M = sylvester(h1, h2)
    if method == "auto":
        symbolic = any(isinstance(c, MPoly) for c in h1.coeffs + h2.coeffs)
        method = "laplace" if symbolic else "bareiss"
    if method == "bareiss":
        return det_bareiss(M)
    if method == "laplace":
        return det_laplace_split(M)
    raise ValueError(f"unknown method {method!r}")
