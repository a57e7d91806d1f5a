"""Chow forms of rational curves via resultants of contracted binary forms.

Contracting a curve map f against two covector blocks gives two degree-d
binary forms h1 = sum_i u_i f_i and h2 = sum_i v_i f_i; their resultant is
a bidegree-(d, d) polynomial in (u, v) that vanishes exactly on the planes
meeting the image curve.  That biform is the curve's Chow (Cayley) form, up
to scalar; it depends on the covectors only through the wedge u ^ v, so it
also admits a rewrite into Plucker coordinates p_ij = u_i v_j - u_j v_i.

Biform coefficient tables are a faithful, canonical encoding: two curves
have the same image exactly when their normalized biforms agree, which is
why all projective comparisons happen on biforms rather than on Plucker
representatives (those are unique only modulo Plucker relations once
n >= 3 and d >= 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .curves import CurveMap, Plane
from .oracle import check_curve
from .polynomial import BinaryForm, MPoly, ScalarLike, content_primitive
from .resultant import resultant

__all__ = [
    "uv_names",
    "CayleyBiform",
    "PluckerRep",
    "cayley_biform",
    "incident",
    "plucker_rewrite",
    "implicitize_plane_curve",
    "proportional",
]

EPS = "eps"


@lru_cache(maxsize=None)
def uv_names(n: int, eps: bool = False) -> tuple[str, ...]:
    """Variable ring for biforms on P^n: u-block, v-block, optional eps."""
    names = tuple(f"u{i}" for i in range(n + 1)) + tuple(f"v{i}" for i in range(n + 1))
    return names + (EPS,) if eps else names


@dataclass(frozen=True)
class CayleyBiform:
    """Bidegree-(d, d) form in covector blocks u, v (optionally over Q[eps]).

    Every stored term has u-degree d and v-degree d; the zero biform is
    allowed (it arises from parametrizations with base points) and reports
    ``is_zero``.
    """

    n: int
    d: int
    poly: MPoly

    def __post_init__(self):
        plain = uv_names(self.n)
        with_eps = uv_names(self.n, eps=True)
        if self.poly.names not in (plain, with_eps):
            raise ValueError("biform polynomial lives in the wrong ring")
        m = self.n + 1
        for exps in self.poly.terms:
            if sum(exps[:m]) != self.d or sum(exps[m : 2 * m]) != self.d:
                raise ValueError("term violates the (d, d) bidegree")

    @property
    def has_eps(self) -> bool:
        return self.poly.names[-1] == EPS

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def eval(self, u: Sequence[ScalarLike], v: Sequence[ScalarLike]):
        """Value at numeric covectors: a Fraction, or a poly in eps."""
        if len(u) != self.n + 1 or len(v) != self.n + 1:
            raise ValueError(f"covectors must have length {self.n + 1}")
        env: dict[str, object] = {}
        for i in range(self.n + 1):
            env[f"u{i}"] = Fraction(u[i])
            env[f"v{i}"] = Fraction(v[i])
        if self.has_eps:
            env[EPS] = MPoly.var((EPS,), EPS)
            return self.poly.evaluate(env, one=MPoly.const((EPS,), 1))
        return self.poly.evaluate(env)

    def normalized(self) -> "CayleyBiform":
        """Primitive integer coefficients, positive graded-lex leading term."""
        if self.is_zero:
            raise ValueError("cannot normalize the zero biform")
        _, q = content_primitive(self.poly)
        return CayleyBiform(self.n, self.d, q)

    def specialize_eps(self, value: ScalarLike) -> "CayleyBiform":
        if not self.has_eps:
            raise ValueError("biform carries no eps")
        val = Fraction(value)
        parts = self.poly.decompose(EPS)
        acc = MPoly.zero(uv_names(self.n))
        for k, c in parts.items():
            acc = acc + c * val**k
        return CayleyBiform(self.n, self.d, acc)

    def __mul__(self, other):
        if not isinstance(other, CayleyBiform):
            return NotImplemented
        if other.n != self.n or self.has_eps or other.has_eps:
            raise ValueError("can only multiply eps-free biforms on one P^n")
        return CayleyBiform(self.n, self.d + other.d, self.poly * other.poly)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 1:
            raise ValueError("exponent must be a positive integer")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out


def _contraction_resultant(coeff_rows: list[list], names: tuple[str, ...]) -> MPoly:
    """Resultant of sum_i u_i f_i against sum_i v_i f_i over the given ring."""
    m = len(coeff_rows)
    lift = lambda c: c if isinstance(c, MPoly) else MPoly.const(names, c)
    h = []
    for block in ("u", "v"):
        coeffs = []
        for j in range(len(coeff_rows[0])):
            acc = MPoly.zero(names)
            for i in range(m):
                c = coeff_rows[i][j]
                if c:
                    acc = acc + MPoly.var(names, f"{block}{i}") * lift(c)
            coeffs.append(acc)
        h.append(BinaryForm(coeffs))
    return resultant(h[0], h[1], method="laplace")


def cayley_biform(f: CurveMap) -> CayleyBiform:
    """Chow form of the image of f, up to scalar, as a (d, d) biform.

    Total on all curve maps: a parametrization with a base point yields the
    identically zero biform instead of an error.
    """
    names = uv_names(f.n)
    rows = [list(c.coeffs) for c in f.components]
    return CayleyBiform(f.n, f.d, _contraction_resultant(rows, names))


def incident(ca: CayleyBiform, plane: Plane) -> bool:
    """True iff the plane meets the curve, i.e. the biform vanishes on it."""
    if ca.is_zero:
        raise ValueError("degenerate Cayley form")
    if ca.has_eps:
        raise ValueError("incidence needs a numeric biform")
    return ca.eval(plane.u, plane.v) == 0


def proportional(a: CayleyBiform, b: CayleyBiform) -> bool:
    """Projective equality of biforms by exact cross-multiplication."""
    if a.n != b.n or a.d != b.d:
        raise ValueError("biforms must share (n, d)")
    if a.is_zero and b.is_zero:
        raise ValueError("proportionality of zero biforms")
    if a.is_zero or b.is_zero:
        return False
    return a.poly * b.poly.leading_coeff() == b.poly * a.poly.leading_coeff()


# -- Plucker coordinates -----------------------------------------------------


@dataclass(frozen=True)
class PluckerRep:
    """Degree-d polynomial in p_ij with p_ij -> u_i v_j - u_j v_i expanding
    back to the source biform exactly.

    The representative is canonical only when no Plucker relations exist
    (n = 2, or d = 1); otherwise it is the deterministic reduced-echelon
    solution with free coordinates set to zero.
    """

    n: int
    d: int
    poly: MPoly
    canonical: bool

    def expand(self) -> CayleyBiform:
        names = uv_names(self.n)
        env = {
            f"p{i}{j}": _wedge_coord(names, i, j)
            for i in range(self.n + 1)
            for j in range(i + 1, self.n + 1)
        }
        return CayleyBiform(self.n, self.d, self.poly.evaluate(env, one=MPoly.const(names, 1)))


def _wedge_coord(names: tuple[str, ...], i: int, j: int) -> MPoly:
    ui, vj = MPoly.var(names, f"u{i}"), MPoly.var(names, f"v{j}")
    uj, vi = MPoly.var(names, f"u{j}"), MPoly.var(names, f"v{i}")
    return ui * vj - uj * vi


def plucker_names(n: int) -> tuple[str, ...]:
    if n > 9:
        raise ValueError("p_ij naming supports n <= 9")
    return tuple(f"p{i}{j}" for i in range(n + 1) for j in range(i + 1, n + 1))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def depends_only_on_wedge(ca: CayleyBiform) -> bool:
    """Check the two identities forcing the biform to factor through u ^ v:
    invariance under v -> v + lam*u and swap symmetry with sign (-1)^(d*d).
    """
    if ca.has_eps:
        raise ValueError("wedge check needs an eps-free biform")
    names = ca.poly.names
    ext = names + ("lam",)
    lam = MPoly.var(ext, "lam")
    shift = {
        f"v{i}": MPoly.var(ext, f"v{i}") + lam * MPoly.var(ext, f"u{i}")
        for i in range(ca.n + 1)
    }
    lifted = ca.poly.embed(ext)
    if lifted.subs(shift) != lifted:
        return False
    swap = {}
    for i in range(ca.n + 1):
        swap[f"u{i}"] = MPoly.var(names, f"v{i}")
        swap[f"v{i}"] = MPoly.var(names, f"u{i}")
    sign = -1 if (ca.d * ca.d) % 2 else 1
    return ca.poly.subs(swap) == sign * ca.poly


def plucker_rewrite(ca: CayleyBiform) -> PluckerRep:
    """Rewrite a biform as a polynomial in the coordinates p_ij.

    Builds the exact linear system sending degree-d monomials in the p_ij
    to (u, v)-monomials and extracts the reduced-echelon solution, pivoting
    on p-monomials in descending graded-lex order with free monomials set
    to zero.  Raises if the biform is not a function of the wedge.
    """
    if not depends_only_on_wedge(ca):
        raise ValueError("not a function of u wedge v")
    pnames = plucker_names(ca.n)
    uv = uv_names(ca.n)
    if ca.is_zero:
        return PluckerRep(ca.n, ca.d, MPoly.zero(pnames), ca.n == 2 or ca.d == 1)
    base = [
        _wedge_coord(uv, i, j)
        for i in range(ca.n + 1)
        for j in range(i + 1, ca.n + 1)
    ]
    pow_cache = []
    for poly in base:
        table = [MPoly.const(uv, 1)]
        for _ in range(ca.d):
            table.append(table[-1] * poly)
        pow_cache.append(table)
    monos = list(_compositions(ca.d, len(pnames)))
    cols = []
    for exps in monos:
        poly = MPoly.const(uv, 1)
        for k, e in enumerate(exps):
            if e:
                poly = poly * pow_cache[k][e]
        cols.append(poly)
    row_keys = set(ca.poly.terms)
    for c in cols:
        row_keys.update(c.terms)
    row_keys = sorted(row_keys)
    A = [
        [c.terms.get(rk, Fraction(0)) for c in cols] + [ca.poly.terms.get(rk, Fraction(0))]
        for rk in row_keys
    ]
    x = _rref_solve(A, len(cols))
    if x is None:
        raise ValueError("not a function of u wedge v")
    rep = MPoly(pnames, {m: c for m, c in zip(monos, x) if c})
    out = PluckerRep(ca.n, ca.d, rep, ca.n == 2 or ca.d == 1)
    if out.expand().poly != ca.poly:
        raise RuntimeError("plucker rewrite failed to round-trip")
    return out


def _rref_solve(A: list[list[Fraction]], ncols: int) -> Optional[list[Fraction]]:
    """Reduced echelon solve of [A | b]; free variables pinned to zero."""
    nrows = len(A)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        pv = A[r][c]
        A[r] = [x / pv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c]:
                factor = A[i][c]
                A[i] = [x - factor * y for x, y in zip(A[i], A[r])]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if A[i][ncols] and not any(A[i][c] for c in range(ncols)):
            return None
    x = [Fraction(0)] * ncols
    for row, col in pivots:
        x[col] = A[row][ncols]
    return x


# -- plane-curve implicitization ---------------------------------------------


def implicitize_plane_curve(f: CurveMap, rng=None) -> MPoly:
    """Implicit equation of a birationally parametrized plane curve.

    Rewrites the Chow form in p_ij and applies the P^2 duality
    x0 = p12, x1 = -p02, x2 = p01; the normalized result is the degree-d
    equation of the image.
    """
    if f.n != 2:
        raise ValueError("implicitization needs a plane curve (n = 2)")
    report = check_curve(f, rng=rng)
    if not report.birational:
        raise ValueError(
            "parametrization is not birational onto its image: "
            f"base_free={report.base_free} map_degree={report.map_degree}"
        )
    rep = plucker_rewrite(cayley_biform(f))
    xnames = ("x0", "x1", "x2")
    env = {
        "p12": MPoly.var(xnames, "x0"),
        "p02": -MPoly.var(xnames, "x1"),
        "p01": MPoly.var(xnames, "x2"),
    }
    image = rep.poly.evaluate(env, one=MPoly.const(xnames, 1))
    _, q = content_primitive(image)
    return q
