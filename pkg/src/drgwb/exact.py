"""Exact rational scalars, dense rational matrices and integer polynomials.

Every verdict in the package is computed through this module.  Scalars are
``fractions.Fraction`` (always reduced, denominator positive), so equality of
two rationals is structural equality.  Nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Fraction",
    "as_fraction",
    "RationalMatrix",
    "IntPolynomial",
    "AffineSolution",
    "RootReport",
    "rref",
    "rank",
    "nullspace",
    "det",
    "solve_linear_combination",
    "char_poly",
    "rational_roots",
    "isolate_real_roots",
    "squarefree_decomposition",
    "poly_mul",
    "poly_mod",
    "poly_inverse_mod",
]


def as_fraction(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected on purpose.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; pass an int, Fraction or 'p/q' string")
    try:
        return Fraction(int(value))
    except (TypeError, ValueError):
        raise TypeError(f"cannot interpret {value!r} as an exact rational") from None


class RationalMatrix:
    """Immutable dense matrix of Fractions.

    Products skip zero entries, which keeps the 0/1 operators of a graph
    cheap to multiply.
    """

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged rows")
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def _trusted(cls, rows: tuple, ncols: int) -> "RationalMatrix":
        m = object.__new__(cls)
        object.__setattr__(m, "_rows", rows)
        object.__setattr__(m, "nrows", len(rows))
        object.__setattr__(m, "ncols", ncols)
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        z = Fraction(0)
        return cls._trusted(tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        one, z = Fraction(1), Fraction(0)
        return cls._trusted(tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "RationalMatrix":
        n = len(entries)
        z = Fraction(0)
        vals = [as_fraction(e) for e in entries]
        return cls._trusted(tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"RationalMatrix({self.nrows}x{self.ncols}: [{body}])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def transpose(self) -> "RationalMatrix":
        if not self.nrows:
            return RationalMatrix._trusted(tuple(() for _ in range(self.ncols)), 0)
        return RationalMatrix._trusted(tuple(zip(*self._rows)), self.nrows)

    T = property(transpose)

    def _check_same(self, other: "RationalMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"dimension mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same(other)
        return RationalMatrix._trusted(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)), self.ncols
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same(other)
        return RationalMatrix._trusted(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)), self.ncols
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix._trusted(tuple(tuple(-a for a in r) for r in self._rows), self.ncols)

    def scale(self, c) -> "RationalMatrix":
        c = as_fraction(c)
        return RationalMatrix._trusted(tuple(tuple(c * a for a in r) for r in self._rows), self.ncols)

    def __rmul__(self, c) -> "RationalMatrix":
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            z = Fraction(0)
            out = []
            orows = other._rows
            for r in self._rows:
                acc = [z] * other.ncols
                for k, a in enumerate(r):
                    if a:
                        ok = orows[k]
                        for j, b in enumerate(ok):
                            if b:
                                acc[j] += a * b
                out.append(tuple(acc))
            return RationalMatrix._trusted(tuple(out), other.ncols)
        return self.apply(other)

    def apply(self, vector: Sequence) -> list[Fraction]:
        if len(vector) != self.ncols:
            raise ValueError("vector length does not match matrix")
        return [sum((a * v for a, v in zip(r, vector) if a and v), Fraction(0)) for r in self._rows]

    def flatten(self) -> list[Fraction]:
        return [x for r in self._rows for x in r]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix._trusted(tuple(tuple(self._rows[i][j] for j in cols) for i in rows), len(cols))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._rows for x in r)


# --------------------------------------------------------------------------
# elimination


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan elimination; returns rows and pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [a - f * b if b else a for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: RationalMatrix) -> tuple[RationalMatrix, int]:
    """Reduced row echelon form and rank."""
    rows, pivots = _rref_rows(m.tolist(), m.ncols)
    return RationalMatrix._trusted(tuple(tuple(r) for r in rows), m.ncols), len(pivots)


def rank(m: RationalMatrix) -> int:
    """Rank over Q.  Integer input goes through fraction-free elimination."""
    if m.is_integral():
        return _bareiss_rank([[int(x) for x in r] for r in m.rows])
    return rref(m)[1]


def _bareiss_rank(a: list[list[int]]) -> int:
    nrows = len(a)
    if not nrows:
        return 0
    ncols = len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            row_i = a[i]
            row_r = a[r]
            a[i] = [(piv * row_i[j] - f * row_r[j]) // prev for j in range(ncols)]
        prev = piv
        r += 1
    return r


def det(m: RationalMatrix) -> Fraction:
    """Determinant by Bareiss fraction-free elimination after clearing denominators."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    scale = 1
    for r in m.rows:
        for x in r:
            scale = math.lcm(scale, x.denominator)
    a = [[int(x * scale) for x in r] for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], scale ** n)


def nullspace(m: RationalMatrix) -> list[list[Fraction]]:
    """Basis of {x : m x = 0}, one vector per free column."""
    rows, pivots = _rref_rows(m.tolist(), m.ncols)
    pivset = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * m.ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][free]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class AffineSolution:
    """The affine set ``particular + span(homogeneous)``."""

    particular: tuple[Fraction, ...]
    homogeneous: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.homogeneous)

    @property
    def unique(self) -> bool:
        return not self.homogeneous

    def point(self, params: Sequence) -> tuple[Fraction, ...]:
        if len(params) != len(self.homogeneous):
            raise ValueError("wrong number of free parameters")
        out = list(self.particular)
        for t, h in zip(params, self.homogeneous):
            t = as_fraction(t)
            if t:
                out = [a + t * b for a, b in zip(out, h)]
        return tuple(out)


def solve_linear_combination(targets: Sequence[RationalMatrix], rhs: RationalMatrix) -> AffineSolution | None:
    """All coefficient vectors x with ``sum_k x[k] * targets[k] == rhs``.

    Returns None when no such x exists.
    """
    for t in targets:
        if t.shape != rhs.shape:
            raise ValueError(f"dimension mismatch: target {t.shape} vs rhs {rhs.shape}")
    cols = [t.flatten() for t in targets]
    b = rhs.flatten()
    nvars = len(targets)
    # only rows where something is nonzero carry information
    system = []
    for idx, bi in enumerate(b):
        row = [c[idx] for c in cols]
        if bi or any(row):
            system.append(row + [bi])
    rows, pivots = _rref_rows(system, nvars + 1)
    if nvars in pivots:
        return None
    particular = [Fraction(0)] * nvars
    for r, pc in enumerate(pivots):
        particular[pc] = rows[r][nvars]
    pivset = set(pivots)
    homogeneous = []
    for free in range(nvars):
        if free in pivset:
            continue
        v = [Fraction(0)] * nvars
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][free]
        homogeneous.append(tuple(v))
    return AffineSolution(tuple(particular), tuple(homogeneous))


# --------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_rational(cls, coeffs: Sequence) -> "IntPolynomial":
        """Scale a rational coefficient list by the lcm of its denominators."""
        fr = [as_fraction(c) for c in coeffs]
        scale = 1
        for c in fr:
            scale = math.lcm(scale, c.denominator)
        return cls(tuple(int(c * scale) for c in fr))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide by the content; leading coefficient made positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def __call__(self, x):
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _poly_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    q = [Fraction(0)] * max(len(num) - dd, 1)
    while len(num) - 1 >= dd and any(num):
        shift = len(num) - 1 - dd
        coef = num[-1] / lead
        q[shift] = coef
        for i, d in enumerate(den):
            num[i + shift] -= coef * d
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    while num and num[-1] == 0:
        num.pop()
    return q, num


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b and any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _squarefree_part(p: IntPolynomial) -> IntPolynomial:
    f = [Fraction(c) for c in p.coeffs]
    g = _poly_gcd(f, [Fraction(c) for c in p.derivative().coeffs])
    if len(g) <= 1:
        return p.primitive()
    q, r = _poly_divmod(f, g)
    assert not r
    return IntPolynomial.from_rational(q).primitive()


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: p = c * prod g_e^e with each g_e square-free and the
    g_e pairwise coprime.  Only factors of positive degree are returned."""
    f = [Fraction(c) for c in p.coeffs]
    df = [Fraction(c) for c in p.derivative().coeffs]
    a = _poly_gcd(f, df)
    if len(a) <= 1:
        return [(p.primitive(), 1)] if p.degree >= 1 else []
    b, _ = _poly_divmod(f, a)
    c, _ = _poly_divmod(df, a)
    out = []
    e = 1
    while len(b) > 1:
        db = [i * x for i, x in enumerate(b)][1:]
        d = [x - y for x, y in zip(c + [Fraction(0)] * (len(db) - len(c)), db + [Fraction(0)] * (len(c) - len(db)))]
        while d and d[-1] == 0:
            d.pop()
        g = _poly_gcd(b, d) if d else [x / b[-1] for x in b]
        if len(g) > 1:
            out.append((IntPolynomial.from_rational(g).primitive(), e))
        b, _ = _poly_divmod(b, g)
        c, _ = _poly_divmod(d, g) if d else ([], [])
        e += 1
    return out


def poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    return _poly_divmod(a, m)[1] if len(a) >= len(m) else _trim(list(a))


def _trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    """The inverse of a modulo m over Q; raises ValueError if they share a factor."""
    r0, r1 = list(m), poly_mod(a, m)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        qs = poly_mul(q, s1)
        n = max(len(s0), len(qs))
        s0, s1 = s1, _trim([(s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0) for i in range(n)])
    if len(r0) != 1:
        raise ValueError("not invertible modulo the given polynomial")
    return poly_mod([x / r0[0] for x in s0], m)


def _sturm_chain(p: IntPolynomial) -> list[list[Fraction]]:
    chain = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in p.derivative().coeffs]]
    while len(chain[-1]) > 1:
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _eval(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign_changes(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = [s for s in ((v > 0) - (v < 0) for v in (_eval(c, x) for c in chain)) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _cauchy_bound(p: IntPolynomial) -> Fraction:
    lead = abs(p.leading)
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), lead) if p.degree > 0 else Fraction(1)


def isolate_real_roots(p: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint half-open intervals ``(lo, hi]``, one per distinct real root.

    Sturm sequence bisection on the square-free part; sorted increasingly.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no isolated roots")
    sf = _squarefree_part(p)
    if sf.degree < 1:
        return []
    chain = _sturm_chain(sf)
    bound = _cauchy_bound(sf)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = _sign_changes(chain, lo) - _sign_changes(chain, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return out


def _refine(p: IntPolynomial, chain, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _sign_changes(chain, lo) - _sign_changes(chain, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


@dataclass(frozen=True)
class RootReport:
    """Rational roots with multiplicities, plus what is left over.

    ``remainder`` has no rational roots; ``remainder_intervals`` isolate its
    distinct real roots (metadata only, never used for verdicts) and
    ``remainder_multiplicities`` gives each one's multiplicity as a root.
    """

    roots: tuple[tuple[Fraction, int], ...]
    remainder: IntPolynomial
    remainder_intervals: tuple[tuple[Fraction, Fraction], ...]
    remainder_multiplicities: tuple[int, ...] = ()

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots)


def rational_roots(p: IntPolynomial) -> RootReport:
    """Exact rational roots of an integer polynomial.

    Real roots of the square-free part are isolated with a Sturm sequence,
    each interval is shrunk below ``1/(2 a_n^2)`` and the only rational with
    denominator dividing ``a_n`` that can sit inside is tested exactly.
    Multiplicities come from repeated exact deflation.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = p.primitive() if p.content() != 1 or p.leading < 0 else p
    found: list[tuple[Fraction, int]] = []
    work = [Fraction(c) for c in p.coeffs]

    # zero roots first; they are cheap and would spoil the bound below
    zero_mult = 0
    while len(work) > 1 and work[0] == 0:
        work.pop(0)
        zero_mult += 1
    if zero_mult:
        found.append((Fraction(0), zero_mult))

    core = IntPolynomial.from_rational(work).primitive()
    if core.degree >= 1:
        sf = _squarefree_part(core)
        lead = abs(sf.leading)
        chain = _sturm_chain(sf)
        width = Fraction(1, 2 * lead * lead)
        for lo, hi in isolate_real_roots(sf):
            lo, hi = _refine(sf, chain, lo, hi, width)
            mid = (lo + hi) / 2
            cand = mid.limit_denominator(lead)
            if not (lo < cand <= hi) or sf(cand) != 0:
                continue
            mult = 0
            lin = [-cand, Fraction(1)]
            while True:
                q, r = _poly_divmod(work, lin)
                if r:
                    break
                work = q
                mult += 1
            found.append((cand, mult))
    remainder = IntPolynomial.from_rational(work).primitive()
    found.sort(key=lambda rm: rm[0], reverse=True)
    located = []
    if remainder.degree >= 1:
        for g, e in squarefree_decomposition(remainder):
            chain = _sturm_chain(g)
            for lo, hi in isolate_real_roots(g):
                # shrink so no interval contains a rational root; g(r) != 0
                for r, _ in found:
                    if lo < r <= hi:
                        if _sign_changes(chain, lo) - _sign_changes(chain, r) == 1:
                            hi = r
                        else:
                            lo = r
                located.append((lo, hi, e))
    located.sort()
    return RootReport(tuple(found), remainder, tuple((lo, hi) for lo, hi, _ in located),
                      tuple(e for _, _, e in located))


# --------------------------------------------------------------------------
# characteristic polynomial


def char_poly(m: RationalMatrix) -> IntPolynomial:
    """``det(tI - m)`` with its content cleared.

    For integer input the result is exactly det(tI - m) (monic).  Rational
    input is reduced to the integer case with ``d * m`` and rescaled, so the
    returned polynomial equals ``d^n det(tI - m)`` up to a positive content.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    if n == 0:
        return IntPolynomial((1,))
    scale = 1
    for r in m.rows:
        for x in r:
            scale = math.lcm(scale, x.denominator)
    a = [[int(x * scale) for x in r] for r in m.rows]
    coeffs = _charpoly_integer(a)
    if scale == 1:
        return IntPolynomial(tuple(coeffs))
    # p_{dM}(t) = d^n p_M(t/d); recover d^n p_M(t) = sum c_k d^k t^k
    return IntPolynomial(tuple(c * scale ** k for k, c in enumerate(coeffs))).primitive()


def _charpoly_integer(a: list[list[int]]) -> list[int]:
    """Integer characteristic polynomial by Hessenberg reduction modulo
    several primes and Chinese remaindering against a Gershgorin bound."""
    n = len(a)
    rho = max(sum(abs(x) for x in row) for row in a) if n else 0
    # |e_k| <= C(n, k) rho^k; coefficients bounded by 2^n * max(rho, 1)^n
    bound = (2 ** n) * max(rho, 1) ** n
    modulus = 1
    residues: list[int] | None = None
    prime = (1 << 61) - 1
    primes_used = 0
    while modulus <= 2 * bound:
        prime = _prev_prime(prime - 1) if primes_used else prime
        primes_used += 1
        cp = _charpoly_mod(a, prime)
        if residues is None:
            residues = cp
            modulus = prime
        else:
            residues = [_crt(r, modulus, c, prime) for r, c in zip(residues, cp)]
            modulus *= prime
    half = modulus // 2
    return [r - modulus if r > half else r for r in residues]


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    t = ((r2 - r1) * pow(m1, -1, m2)) % m2
    return r1 + m1 * t


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prev_prime(n: int) -> int:
    while not _is_probable_prime(n):
        n -= 1
    return n


def _charpoly_mod(a: list[list[int]], p: int) -> list[int]:
    n = len(a)
    h = [[x % p for x in row] for row in a]
    # reduce to upper Hessenberg form by similarity
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if h[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            h[piv], h[m] = h[m], h[piv]
            for row in h:
                row[piv], row[m] = row[m], row[piv]
        inv = pow(h[m][m - 1], -1, p)
        for i in range(m + 1, n):
            u = h[i][m - 1] * inv % p
            if not u:
                continue
            hi, hm = h[i], h[m]
            for j in range(n):
                if hm[j]:
                    hi[j] = (hi[j] - u * hm[j]) % p
            for row in h:
                if row[i]:
                    row[m] = (row[m] + u * row[i]) % p
    # charpoly of the Hessenberg matrix by the standard recurrence
    polys: list[list[int]] = [[1]]
    for k in range(n):
        # p_{k+1} = (t - h_kk) p_k - sum_{i<k} h_ik * prod_{j=i+1}^{k} h_{j,j-1} * p_i
        prev = polys[k]
        nxt = [0] + prev[:]
        hk = h[k][k]
        for i, c in enumerate(prev):
            nxt[i] = (nxt[i] - hk * c) % p
        prod = 1
        for i in range(k - 1, -1, -1):
            prod = prod * h[i + 1][i] % p
            if not prod:
                break
            coef = h[i][k] * prod % p
            if coef:
                for j, c in enumerate(polys[i]):
                    nxt[j] = (nxt[j] - coef * c) % p
        polys.append(nxt)
    return polys[n]
