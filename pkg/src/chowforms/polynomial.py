"""Exact sparse multivariate polynomials and homogeneous binary forms.

All arithmetic is over the rationals with ``fractions.Fraction``
coefficients, so every comparison in the package is an exact identity.

An :class:`MPoly` maps exponent tuples (one slot per variable of its ring)
to nonzero coefficients; the ring is fixed by the tuple of variable names.
The monomial order used everywhere (leading terms, sign normalization,
serialized output) is graded lexicographic: higher total degree first, ties
broken by comparing exponent tuples left to right, first declared variable
most significant.

A :class:`BinaryForm` is a homogeneous form of declared degree ``d`` in the
two parameters ``(z0, z1)``, stored densely: ``coeffs[j]`` multiplies
``z0**(d-j) * z1**j``.  Coefficients are either plain ``Fraction`` values
(numeric forms) or :class:`MPoly` values (forms whose coefficients carry
covector variables); one code path serves both.

Values are immutable after construction and all operations are pure, so
everything here is safe to share across threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

ScalarLike = Union[int, Fraction]

__all__ = [
    "MPoly",
    "BinaryForm",
    "content_primitive",
    "poly_divides",
    "form_gcd",
    "form_gcd_all",
    "format_terms",
    "parse_terms",
]


def _as_fraction(x: ScalarLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _grlex_key(exps: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(exps), exps)


class MPoly:
    """Sparse multivariate polynomial over Q with a named variable ring."""

    __slots__ = ("names", "terms")

    def __init__(self, names: Iterable[str], terms: Optional[Mapping] = None):
        names = tuple(names)
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, c in terms.items():
                c = _as_fraction(c)
                if not c:
                    continue
                exps = tuple(exps)
                if len(exps) != len(names):
                    raise ValueError("exponent arity does not match variable count")
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent")
                clean[exps] = c
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, names: Iterable[str]) -> "MPoly":
        return cls(names, {})

    @classmethod
    def const(cls, names: Iterable[str], c: ScalarLike) -> "MPoly":
        names = tuple(names)
        return cls(names, {(0,) * len(names): _as_fraction(c)})

    @classmethod
    def var(cls, names: Iterable[str], name: str) -> "MPoly":
        names = tuple(names)
        i = names.index(name)
        exps = tuple(1 if k == i else 0 for k in range(len(names)))
        return cls(names, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, names: Iterable[str], exps: Sequence[int], c: ScalarLike = 1) -> "MPoly":
        return cls(names, {tuple(exps): _as_fraction(c)})

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.names.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        """Greatest term in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def leading_coeff(self) -> Fraction:
        return self.leading_term()[1]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> Optional["MPoly"]:
        if isinstance(other, MPoly):
            if other.names != self.names:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.names, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, Fraction(0)) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return MPoly(self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return MPoly.zero(self.names)
            return MPoly(self.names, {e: k * c for e, k in self.terms.items()})
        if isinstance(other, MPoly):
            if other.names != self.names:
                raise ValueError("polynomials from different rings")
            out: dict[tuple[int, ...], Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    s = out.get(e, Fraction(0)) + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
            return MPoly(self.names, out)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(self.names, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                raise ZeroDivisionError("division by zero scalar")
            return self * (1 / c)
        if isinstance(other, MPoly):
            q = poly_divides(other, self)
            if q is None:
                raise ValueError("inexact polynomial division")
            return q
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.names == other.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return not self.terms
            return self.terms == {(0,) * len(self.names): c}
        return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if self.is_zero:
            return "MPoly(0)"
        parts = []
        for exps, c in self.sorted_terms():
            mono = " ".join(
                f"{n}^{e}" if e > 1 else n for n, e in zip(self.names, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c} {mono}")
        s = " + ".join(parts).replace("+ -", "- ")
        return f"MPoly({s})"

    # -- substitution and ring changes ------------------------------------

    def evaluate(self, env: Mapping[str, object], one=Fraction(1)):
        """Substitute a value for every variable.

        Values may live in any commutative ring supporting ``+`` and ``*``
        with Fraction scalars (Fractions, MPoly of another ring,
        BinaryForm); ``one`` must be that ring's multiplicative identity.
        """
        maxes = [0] * len(self.names)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e > maxes[i]:
                    maxes[i] = e
        pows: list[Optional[list]] = [None] * len(self.names)
        for i, m in enumerate(maxes):
            if m == 0:
                continue
            name = self.names[i]
            if name not in env:
                raise KeyError(f"no value for variable {name}")
            v = env[name]
            table = [one, v]
            for _ in range(m - 1):
                table.append(table[-1] * v)
            pows[i] = table
        acc = None
        for exps, c in self.terms.items():
            val = c * one
            for i, e in enumerate(exps):
                if e:
                    val = val * pows[i][e]
            acc = val if acc is None else acc + val
        if acc is None:
            return one * Fraction(0)
        return acc

    def subs(self, env: Mapping[str, "MPoly | ScalarLike"]) -> "MPoly":
        """Substitute within the same ring; unnamed variables stay fixed."""
        full: dict[str, MPoly] = {}
        for name in self.names:
            v = env.get(name, None)
            if v is None:
                full[name] = MPoly.var(self.names, name)
            elif isinstance(v, MPoly):
                if v.names != self.names:
                    raise ValueError("substitution value from a different ring")
                full[name] = v
            else:
                full[name] = MPoly.const(self.names, v)
        return self.evaluate(full, one=MPoly.const(self.names, 1))

    def embed(self, names: Iterable[str]) -> "MPoly":
        """Reinterpret in a larger ring containing all current variables."""
        names = tuple(names)
        pos = [names.index(n) for n in self.names]
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(names)
            for p, e in zip(pos, exps):
                new[p] = e
            out[tuple(new)] = c
        return MPoly(names, out)

    def restrict(self, names: Iterable[str]) -> "MPoly":
        """Drop unused variables; errors if a dropped variable occurs."""
        names = tuple(names)
        keep = [self.names.index(n) for n in names]
        dropped = set(range(len(self.names))) - set(keep)
        out = {}
        for exps, c in self.terms.items():
            if any(exps[i] for i in dropped):
                raise ValueError("polynomial uses a dropped variable")
            out[tuple(exps[i] for i in keep)] = c
        return MPoly(names, out)

    def decompose(self, name: str) -> dict[int, "MPoly"]:
        """Coefficient polynomials by power of one variable.

        Returned values live in the ring without that variable.
        """
        i = self.names.index(name)
        rest = self.names[:i] + self.names[i + 1 :]
        buckets: dict[int, dict] = {}
        for exps, c in self.terms.items():
            k = exps[i]
            buckets.setdefault(k, {})[exps[:i] + exps[i + 1 :]] = c
        return {k: MPoly(rest, t) for k, t in buckets.items()}


def content_primitive(p: MPoly) -> tuple[Fraction, MPoly]:
    """Split ``p = c * q`` with q having coprime integer coefficients.

    The sign of ``c`` is chosen so the leading coefficient of ``q`` (in
    graded-lex order) is positive.  Raises on the zero polynomial.
    """
    if p.is_zero:
        raise ValueError("content of zero polynomial")
    num_gcd = 0
    den_lcm = 1
    for c in p.terms.values():
        num_gcd = math.gcd(num_gcd, abs(c.numerator))
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    c = Fraction(num_gcd, den_lcm)
    if p.leading_coeff() < 0:
        c = -c
    return c, p * (1 / c)


def poly_divides(a: MPoly, b: MPoly) -> Optional[MPoly]:
    """Exact quotient ``q`` with ``b = a * q``, or None if none exists.

    Division reduces the leading term of the remainder against the leading
    term of ``a`` in graded-lex order; for a single divisor this succeeds
    exactly when the division is exact.
    """
    if a.is_zero:
        raise ValueError("division by zero polynomial")
    if a.names != b.names:
        raise ValueError("polynomials from different rings")
    la_exps, la_c = a.leading_term()
    q: dict[tuple[int, ...], Fraction] = {}
    r = b
    while not r.is_zero:
        le, lc = r.leading_term()
        diff = tuple(x - y for x, y in zip(le, la_exps))
        if any(d < 0 for d in diff):
            return None
        t = MPoly.monomial(a.names, diff, lc / la_c)
        q[diff] = lc / la_c
        r = r - t * a
    return MPoly(a.names, q)


# -- serialization ---------------------------------------------------------


def format_terms(p: MPoly) -> str:
    """One term per line: ``{sign}{coeff} * var^exp var^exp ...``.

    Terms appear in descending graded-lex order; the zero polynomial
    serializes to the single line ``0``.
    """
    if p.is_zero:
        return "0"
    lines = []
    for exps, c in p.sorted_terms():
        coeff = f"+{c}" if c > 0 else str(c)
        factors = " ".join(f"{n}^{e}" for n, e in zip(p.names, exps) if e)
        lines.append(f"{coeff} * {factors}" if factors else coeff)
    return "\n".join(lines)


def parse_terms(text: str, names: Iterable[str]) -> MPoly:
    """Parse the :func:`format_terms` wire format back into an MPoly."""
    names = tuple(names)
    index = {n: i for i, n in enumerate(names)}
    terms: dict[tuple[int, ...], Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "0":
            continue
        head, _, tail = line.partition(" * ")
        try:
            c = Fraction(head)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: invalid coefficient {head!r}") from exc
        exps = [0] * len(names)
        for factor in tail.split():
            if factor == "*":
                continue
            name, sep, power = factor.partition("^")
            if name not in index:
                raise ValueError(f"line {lineno}: unknown variable {name!r}")
            exps[index[name]] += int(power) if sep else 1
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + c
    return MPoly(names, terms)


# -- binary forms ----------------------------------------------------------


class BinaryForm:
    """Homogeneous form of declared degree d in (z0, z1).

    The zero form of any degree is representable (all coefficients zero)
    and reports ``is_zero``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if len(coeffs) < 1:
            raise ValueError("a form needs at least one coefficient")
        cs = []
        for c in coeffs:
            if isinstance(c, int):
                c = Fraction(c)
            elif not isinstance(c, (Fraction, MPoly)):
                raise TypeError(f"bad coefficient type {type(c).__name__}")
            cs.append(c)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls([Fraction(0)] * (degree + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(_entry_is_zero(c) for c in self.coeffs)

    @property
    def is_numeric(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def evaluate(self, z0, z1):
        d = self.degree
        acc = None
        for j, c in enumerate(self.coeffs):
            val = c * z0 ** (d - j) * z1**j
            acc = val if acc is None else acc + val
        return acc

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degrees")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("cannot subtract forms of different degrees")
        return BinaryForm([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if _entry_is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return BinaryForm(out)
        if isinstance(other, (int, Fraction, MPoly)):
            return BinaryForm([c * other for c in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, MPoly)):
            return BinaryForm([other * c for c in self.coeffs])
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BinaryForm([Fraction(1)])
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        d = self.degree
        parts = []
        for j, c in enumerate(self.coeffs):
            if _entry_is_zero(c):
                continue
            mono = "".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in (("z0", d - j), ("z1", j))
                if e
            )
            cs = str(c) if isinstance(c, Fraction) else f"({c!r})"
            parts.append(f"{cs}*{mono}" if mono else cs)
        return f"BinaryForm({' + '.join(parts) or '0'}, degree={d})"

    def compose(self, p: "BinaryForm", q: "BinaryForm") -> "BinaryForm":
        """Substitute z0 -> p, z1 -> q for forms p, q of one common degree."""
        if p.degree != q.degree:
            raise ValueError("substituted forms must share a degree")
        d = self.degree
        out = BinaryForm.zero(d * p.degree)
        for j, c in enumerate(self.coeffs):
            if _entry_is_zero(c):
                continue
            out = out + c * (p ** (d - j) * q**j)
        return out

    def substitute_gl2(self, A: Sequence[Sequence[ScalarLike]]) -> "BinaryForm":
        """Return h(a z0 + b z1, c z0 + d z1) for A = [[a, b], [c, d]].

        A may be singular; callers that need a group action enforce
        invertibility themselves.
        """
        (a, b), (c, d) = A
        return self.compose(BinaryForm([a, b]), BinaryForm([c, d]))

    def normalized(self) -> "BinaryForm":
        """Primitive integer representative with positive first nonzero coefficient."""
        if not self.is_numeric:
            raise ValueError("normalization needs numeric coefficients")
        if self.is_zero:
            raise ValueError("cannot normalize the zero form")
        num_gcd = 0
        den_lcm = 1
        for c in self.coeffs:
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        scale = Fraction(den_lcm, num_gcd)
        lead = next(c for c in self.coeffs if c)
        if lead < 0:
            scale = -scale
        return BinaryForm([c * scale for c in self.coeffs])


def _entry_is_zero(c) -> bool:
    if isinstance(c, MPoly):
        return c.is_zero
    return not c


# -- gcd of numeric binary forms --------------------------------------------


def _split_monomial(h: BinaryForm) -> tuple[int, int, BinaryForm]:
    """Write h = z0^p0 * z1^p1 * core with core nonzero at both ends."""
    nz = [j for j, c in enumerate(h.coeffs) if c]
    j0, j1 = nz[0], nz[-1]
    p1 = j0
    p0 = h.degree - j1
    core = BinaryForm(h.coeffs[j0 : j1 + 1])
    return p0, p1, core


def _int_list(core: BinaryForm) -> list[int]:
    """Dehomogenize at z1 = 1 as an integer list, low power first."""
    den_lcm = 1
    for c in core.coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in reversed(core.coeffs)]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    return [v // g for v in ints]


def _deg(p: list[int]) -> int:
    return len(p) - 1


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, over Z."""
    r = _trim(list(a))
    db = _deg(b)
    lb = b[-1]
    delta = _deg(r) - db
    steps = 0
    while r != [0] and _deg(r) >= db:
        shift = _deg(r) - db
        lr = r[-1]
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[i + shift] -= lr * bc
        _trim(r)
        steps += 1
    if r != [0]:
        r = [c * lb ** (delta + 1 - steps) for c in r]
    return r


def _primitive(p: list[int]) -> list[int]:
    g = 0
    for v in p:
        g = math.gcd(g, abs(v))
    p = [v // g for v in p]
    if p[-1] < 0:
        p = [-v for v in p]
    return p


def _int_poly_gcd(u: list[int], v: list[int]) -> list[int]:
    """Primitive gcd of integer polynomials via the subresultant PRS.

    Fraction-free: every division in the remainder sequence is exact over
    Z, which keeps intermediate coefficients from exploding the way naive
    rational elimination would.
    """
    a, b = _primitive(list(u)), _primitive(list(v))
    if _deg(a) < _deg(b):
        a, b = b, a
    g = 1
    h = 1
    while True:
        if b == [0]:
            return _primitive(a)
        if _deg(b) == 0:
            return [1]
        delta = _deg(a) - _deg(b)
        r = _prem(a, b)
        if r == [0]:
            return _primitive(b)
        divisor = g * h**delta
        a, b = b, [c // divisor for c in r]
        g = a[-1]
        if delta >= 1:
            h = g**delta // h ** (delta - 1)


def form_gcd(a: BinaryForm, b: BinaryForm) -> BinaryForm:
    """Primitive gcd of two numeric binary forms, positive leading coefficient.

    Common z0/z1 powers come out first, the dehomogenized cores go through
    the integer subresultant gcd, and the result is rehomogenized to the
    gcd degree.  Degree 0 output means the forms share no projective root.
    """
    if not (a.is_numeric and b.is_numeric):
        raise ValueError("gcd needs numeric coefficients")
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of zero forms")
    if a.is_zero:
        return b.normalized()
    if b.is_zero:
        return a.normalized()
    p0a, p1a, core_a = _split_monomial(a)
    p0b, p1b, core_b = _split_monomial(b)
    p0, p1 = min(p0a, p0b), min(p1a, p1b)
    g = _int_poly_gcd(_int_list(core_a), _int_list(core_b))
    e = _deg(g)
    out = [Fraction(0)] * (e + p0 + p1 + 1)
    for j in range(e + 1):
        out[p1 + j] = Fraction(g[e - j])
    return BinaryForm(out)


def form_gcd_all(forms: Iterable[BinaryForm]) -> BinaryForm:
    """Iterated gcd over a collection, ignoring zero forms."""
    acc: Optional[BinaryForm] = None
    for h in forms:
        if h.is_zero:
            continue
        acc = h.normalized() if acc is None else form_gcd(acc, h)
        if acc.degree == 0:
            return acc
    if acc is None:
        raise ValueError("gcd of zero forms")
    return acc
