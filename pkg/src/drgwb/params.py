"""Quantities determined by classical parameters (D, q, alpha, beta) alone.

Intersection arrays, the intersection numbers p^h_ij, the spectrum with
multiplicities, the printed closed forms used by the elimination arguments,
the four candidate local eigenvalues, the local strongly regular parameters
and the scalar sequences of thin endpoint-1 modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .exact import (
    IntPolynomial,
    RationalMatrix,
    as_fraction,
    char_poly,
    poly_inverse_mod,
    poly_mod,
    poly_mul,
    rational_roots,
)

__all__ = [
    "InvalidParameters",
    "NonPositiveIntersectionNumber",
    "FamilyMismatch",
    "AlphaZero",
    "ClassicalParams",
    "IntersectionArray",
    "IrrationalEigenvalue",
    "SpectrumEntry",
    "SrgParams",
    "LocalEigenvalues",
    "ThinModuleScalars",
    "INFINITY",
    "qbracket",
    "intersection_array",
    "p_hij",
    "intersection_tensor",
    "p633_closed_form",
    "spectrum",
    "family1",
    "family2",
    "multiplicity_closed_forms",
    "CLOSED_FORMS",
    "tilde",
    "local_eig_candidates",
    "srg_from_local",
    "thin_module_scalars",
]


class InvalidParameters(ValueError):
    pass


class NonPositiveIntersectionNumber(ValueError):
    def __init__(self, name: str, index: int, value: Fraction):
        self.name, self.index, self.value = name, index, value
        super().__init__(f"{name}_{index} = {value} is not positive")


class FamilyMismatch(ValueError):
    pass


class AlphaZero(ValueError):
    pass


def qbracket(j: int, q) -> Fraction:
    """Gaussian bracket [j] = 1 + q + ... + q^(j-1); zero for j = 0."""
    if j < 0:
        raise ValueError("bracket index must be nonnegative")
    if int(q) != q:
        raise ValueError(f"q must be an integer, got {q}")
    q = int(q)
    if q == 1:
        return Fraction(j)
    return Fraction((q**j - 1) // (q - 1))


@dataclass(frozen=True)
class ClassicalParams:
    D: int
    q: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        if int(self.D) != self.D or self.D < 1:
            raise InvalidParameters(f"diameter must be an integer >= 1, got {self.D}")
        if int(self.q) != self.q:
            raise InvalidParameters(f"q must be an integer, got {self.q}")
        if self.q in (0, -1):
            raise InvalidParameters("q must satisfy q not in {0, -1}")
        object.__setattr__(self, "D", int(self.D))
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "beta", as_fraction(self.beta))

    def bracket(self, j: int) -> Fraction:
        return qbracket(j, self.q) if j >= 0 else Fraction(0)

    def c(self, i: int) -> Fraction:
        return self.bracket(i) * (1 + self.alpha * self.bracket(i - 1))

    def b(self, i: int) -> Fraction:
        return (self.bracket(self.D) - self.bracket(i)) * (self.beta - self.alpha * self.bracket(i))


@dataclass(frozen=True)
class IntersectionArray:
    """{b_0, ..., b_{D-1}; c_1, ..., c_D} with derived a_i and k_i.

    ``b[i]`` is b_i (0 <= i < D) and ``c[i]`` is c_{i+1}.  Use the accessor
    methods, which apply the conventions c_0 = 0 and b_D = 0.
    """

    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]

    def __post_init__(self):
        b = tuple(as_fraction(x) for x in self.b)
        c = tuple(as_fraction(x) for x in self.c)
        if len(b) != len(c) or not b:
            raise ValueError("need b_0..b_{D-1} and c_1..c_D of the same length D >= 1")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_lists(cls, b: Sequence, c: Sequence) -> "IntersectionArray":
        return cls(tuple(b), tuple(c))

    @property
    def D(self) -> int:
        return len(self.b)

    @property
    def k(self) -> Fraction:
        return self.b[0]

    def b_(self, i: int) -> Fraction:
        return self.b[i] if 0 <= i < self.D else Fraction(0)

    def c_(self, i: int) -> Fraction:
        return self.c[i - 1] if 1 <= i <= self.D else Fraction(0)

    def a_(self, i: int) -> Fraction:
        if not 0 <= i <= self.D:
            return Fraction(0)
        return self.k - self.b_(i) - self.c_(i)

    @cached_property
    def a(self) -> tuple[Fraction, ...]:
        return tuple(self.a_(i) for i in range(self.D + 1))

    @cached_property
    def valencies(self) -> tuple[Fraction, ...]:
        ks = [Fraction(1)]
        for i in range(1, self.D + 1):
            ks.append(ks[-1] * self.b_(i - 1) / self.c_(i))
        return tuple(ks)

    @property
    def n(self) -> Fraction:
        return sum(self.valencies, Fraction(0))

    def tridiagonal(self) -> RationalMatrix:
        """(D+1)x(D+1) matrix with sub/diag/super entries c_i, a_i, b_i."""
        d = self.D
        rows = []
        for i in range(d + 1):
            row = [Fraction(0)] * (d + 1)
            if i > 0:
                row[i - 1] = self.c_(i)
            row[i] = self.a_(i)
            if i < d:
                row[i + 1] = self.b_(i)
            rows.append(row)
        return RationalMatrix(rows)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.b) + ";" + ",".join(str(x) for x in self.c) + "}"


def intersection_array(cp: ClassicalParams) -> IntersectionArray:
    """Intersection array of classical parameters; rejects non-positive b_i, c_i."""
    b, c = [], []
    for i in range(cp.D):
        bi = cp.b(i)
        if bi <= 0:
            raise NonPositiveIntersectionNumber("b", i, bi)
        b.append(bi)
    for i in range(1, cp.D + 1):
        ci = cp.c(i)
        if ci <= 0:
            raise NonPositiveIntersectionNumber("c", i, ci)
        c.append(ci)
    return IntersectionArray(tuple(b), tuple(c))


# --------------------------------------------------------------------------
# intersection numbers
#
# In the basis {A_0..A_D}, multiplication by A_i has matrix P_i with
# (P_i)[h][j] = p^h_ij.  P_1 is the tridiagonal matrix with
# P_1 e_j = b_{j-1} e_{j-1} + a_j e_j + c_{j+1} e_{j+1}, and
# A A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1} gives
# P_{i+1} = (P_1 P_i - b_{i-1} P_{i-1} - a_i P_i) / c_{i+1}.
# Column j of P_i only needs the same recurrence applied to vectors.


def _apply_p1(ia: IntersectionArray, v: list[Fraction]) -> list[Fraction]:
    d = ia.D
    out = [Fraction(0)] * (d + 1)
    for j, x in enumerate(v):
        if not x:
            continue
        if j > 0:
            out[j - 1] += ia.b_(j - 1) * x
        out[j] += ia.a_(j) * x
        if j < d:
            out[j + 1] += ia.c_(j + 1) * x
    return out


def _column(ia: IntersectionArray, i: int, j: int) -> list[Fraction]:
    """The vector (p^h_ij)_h for fixed i, j."""
    d = ia.D
    e = [Fraction(0)] * (d + 1)
    e[j] = Fraction(1)
    prev, cur = None, e
    for m in range(i):
        nxt = _apply_p1(ia, cur)
        am = ia.a_(m)
        nxt = [x - am * y for x, y in zip(nxt, cur)]
        if prev is not None:
            bm = ia.b_(m - 1)
            nxt = [x - bm * y for x, y in zip(nxt, prev)]
        cm = ia.c_(m + 1)
        nxt = [x / cm for x in nxt]
        prev, cur = cur, nxt
    return cur


def p_hij(ia: IntersectionArray, h: int, i: int, j: int) -> Fraction:
    """Intersection number p^h_ij from the three-term recurrence."""
    d = ia.D
    if not 0 <= h <= d:
        raise ValueError(f"h = {h} out of range 0..{d}")
    if not (0 <= i <= d and 0 <= j <= d):
        return Fraction(0)
    return _column(ia, i, j)[h]


def intersection_tensor(ia: IntersectionArray) -> list[list[list[Fraction]]]:
    """Full table ``t[h][i][j] = p^h_ij``; O(D^3) work."""
    d = ia.D
    mats = []  # mats[i][h][j]
    ident = [[Fraction(int(h == j)) for j in range(d + 1)] for h in range(d + 1)]
    mats.append(ident)
    cols_prev = None
    cols_cur = [[ident[h][j] for h in range(d + 1)] for j in range(d + 1)]  # column j of P_0
    for m in range(d):
        am, cm = ia.a_(m), ia.c_(m + 1)
        bm = ia.b_(m - 1)
        cols_next = []
        for j in range(d + 1):
            v = _apply_p1(ia, cols_cur[j])
            v = [x - am * y for x, y in zip(v, cols_cur[j])]
            if cols_prev is not None:
                v = [x - bm * y for x, y in zip(v, cols_prev[j])]
            cols_next.append([x / cm for x in v])
        cols_prev, cols_cur = cols_cur, cols_next
        mats.append([[cols_cur[j][h] for j in range(d + 1)] for h in range(d + 1)])
    return [[[mats[i][h][j] for j in range(d + 1)] for i in range(d + 1)] for h in range(d + 1)]


def p633_closed_form(q: int) -> Fraction:
    """p^6_33 for the alpha = q+1 family, as a closed form in q (D >= 6)."""
    q = Fraction(q)
    a1 = q**4 + q**3 + q**2 + q + 1
    a2 = q**4 + 2 * q**3 + 2 * q**2 + 2 * q + 2
    a3 = q**5 + 2 * q**4 + 2 * q**3 + 2 * q**2 + 2 * q + 2
    num = (q + 1) * (q**2 + 1) * (q**2 - q + 1) * (q**3 + 2 * q**2 + 2 * q + 2) * a1 * a2 * a3
    return num / ((q + 2) * (q**2 + 2 * q + 2))


# --------------------------------------------------------------------------
# spectrum


@dataclass(frozen=True)
class IrrationalEigenvalue:
    """A real root of ``factor`` isolated in ``(lo, hi]``; not rational."""

    factor: IntPolynomial
    lo: Fraction
    hi: Fraction

    def __str__(self) -> str:
        return f"root of {self.factor} in ({self.lo}, {self.hi}]"


@dataclass(frozen=True)
class SpectrumEntry:
    theta: Fraction | IrrationalEigenvalue
    multiplicity: Fraction | None

    @property
    def rational(self) -> bool:
        return isinstance(self.theta, Fraction)


def _multiplicity(ia: IntersectionArray, theta: Fraction) -> Fraction:
    """n / sum_j k_j u_j(theta)^2 with the standard sequence u."""
    d = ia.D
    u = [Fraction(1), theta / ia.k]
    for j in range(1, d):
        # c_j u_{j-1} + a_j u_j + b_j u_{j+1} = theta u_j
        u.append((theta * u[j] - ia.c_(j) * u[j - 1] - ia.a_(j) * u[j]) / ia.b_(j))
    u = u[: d + 1]
    denom = sum((k * x * x for k, x in zip(ia.valencies, u)), Fraction(0))
    return ia.n / denom


def _multiplicity_mod(ia: IntersectionArray, g: IntPolynomial) -> Fraction | None:
    """The multiplicity formula evaluated in Q[t]/(g).

    Returns a Fraction when the residue is constant, i.e. every root of g
    shares that multiplicity, and None otherwise.
    """
    m = [Fraction(c) for c in g.coeffs]
    t = [Fraction(0), Fraction(1)]
    u = [[Fraction(1)], [Fraction(0), 1 / ia.k]]
    for j in range(1, ia.D):
        nxt = poly_mul(t, u[j])
        for i, x in enumerate(u[j - 1]):
            nxt[i] -= ia.c_(j) * x
        for i, x in enumerate(u[j]):
            nxt[i] -= ia.a_(j) * x
        u.append(poly_mod([x / ia.b_(j) for x in nxt], m))
    denom: list[Fraction] = []
    for k, x in zip(ia.valencies, u[: ia.D + 1]):
        sq = poly_mod(poly_mul(x, x), m)
        denom = [(denom[i] if i < len(denom) else 0) + (k * sq[i] if i < len(sq) else 0)
                 for i in range(max(len(denom), len(sq)))]
    res = poly_mod([ia.n * x for x in poly_inverse_mod(poly_mod(denom, m), m)], m)
    if len(res) > 1:
        return None
    return res[0] if res else Fraction(0)


def spectrum(ia: IntersectionArray) -> list[SpectrumEntry]:
    """Eigenvalues of the tridiagonal intersection matrix, decreasing, with
    multiplicities.  Irrational eigenvalues are returned as
    :class:`IrrationalEigenvalue` entries; their multiplicity is computed
    modulo the remainder polynomial and is None when it differs between
    conjugate roots."""
    for i in range(ia.D):
        if ia.b[i] <= 0 or ia.c[i] <= 0:
            raise NonPositiveIntersectionNumber("b" if ia.b[i] <= 0 else "c", i if ia.b[i] <= 0 else i + 1,
                                                ia.b[i] if ia.b[i] <= 0 else ia.c[i])
    report = rational_roots(char_poly(ia.tridiagonal()))
    entries: list[SpectrumEntry] = [SpectrumEntry(th, _multiplicity(ia, th)) for th, _ in report.roots]
    if report.remainder.degree >= 1:
        mult = _multiplicity_mod(ia, report.remainder)
        for lo, hi in report.remainder_intervals:
            entries.append(SpectrumEntry(IrrationalEigenvalue(report.remainder, lo, hi), mult))

    def key(e: SpectrumEntry):
        t = e.theta
        # an interval may end exactly at a rational root; its root lies below
        return (t, 1) if isinstance(t, Fraction) else (t.hi, 0)

    # remainder intervals are shrunk clear of every rational root, so sorting
    # on the right endpoint orders them correctly against the rationals
    entries.sort(key=key, reverse=True)
    return entries


# --------------------------------------------------------------------------
# the two parameter families that survive the alpha classification


def family1(q: int, D: int) -> ClassicalParams:
    """(D, q, q+1, (q^{D+1}(q+1) - q^2 - 1)/(q-1))."""
    beta = Fraction(q ** (D + 1) * (q + 1) - q * q - 1, q - 1)
    return ClassicalParams(D, q, Fraction(q + 1), beta)


def family2(q: int, D: int) -> ClassicalParams:
    """(D, q, q, q^2 (q^D - 1)/(q-1))."""
    return ClassicalParams(D, q, Fraction(q), Fraction(q * q * (q**D - 1), q - 1))


def _which_family(cp: ClassicalParams) -> int | None:
    if cp.q < 2:
        return None
    if cp == family1(cp.q, cp.D):
        return 1
    if cp == family2(cp.q, cp.D):
        return 2
    return None


def _f2_family1(q: int, D: int) -> Fraction:
    Q = Fraction(q)
    num = ((Q**D - 1) * (Q**D - Q) * (Q ** (D + 1) + Q**D + 2) * (Q ** (D + 2) + Q ** (D + 1) - Q**2 - 1)
           * (Q ** (2 * D + 1) + Q ** (2 * D) - Q ** (D + 1) + Q**D - 2 * Q**3))
    den = (Q - 1) ** 2 * (Q + 1) ** 2 * (Q ** (D + 1) + Q**D - 3 * Q + 1) * (Q ** (D + 1) + Q**D - 2 * Q**2)
    return num / den


def _f2_family1_d4(q: int) -> Fraction:
    Q = Fraction(q)
    num = (Q**2 * (Q**2 + 1) * (Q**2 + Q + 1) ** 2 * (Q**3 + Q**2 + 1) * (Q**5 + Q**4 + 2)
           * (Q**5 + 2 * Q**4 + 2 * Q**3 + 2 * Q**2 + Q + 2))
    den = (Q + 1) * (Q**2 + 2 * Q + 2) * (Q**4 + 2 * Q**3 + 2 * Q**2 + 2 * Q - 1)
    return num / den


def _k2_family1_d5(q: int) -> Fraction:
    Q = Fraction(q)
    num = (Q**3 * (Q**2 + 1) * (Q**4 + Q**3 + Q**2 + Q + 1) * (Q**4 + 2 * Q**3 + 2 * Q**2 + 2 * Q + 2)
           * (Q**6 + 2 * Q**5 + 2 * Q**4 + 2 * Q**3 + 2 * Q**2 + Q + 1))
    return num / (Q + 2)


def _f2_family2(q: int, D: int) -> Fraction:
    Q = Fraction(q)
    num = Q**2 * (Q**D - 1) * (Q ** (D + 1) + 1) * (Q ** (2 * D - 2) - Q ** (D - 2) + Q ** (D - 3) - 1)
    return num / ((Q - 1) ** 2 * (Q + 1))


def _f3_family2(q: int, D: int) -> Fraction:
    Q = Fraction(q)
    num = ((Q**D - 1) * (Q ** (D + 1) + 1) * (Q ** (2 * D + 1) - Q ** (D + 1) + Q**D - Q)
           * (Q ** (2 * D - 2) - Q ** (D - 2) + Q ** (D - 3) - Q**2))
    return num / ((Q - 1) ** 3 * (Q + 1) * (Q**2 + Q + 1))


def kD_factors(q: int, D: int) -> tuple[int, list[tuple[int, int]]]:
    """k_D of family 2 as ``prefix * prod(num/den)`` with integer pieces.

    Factor i is q(q^D-1)/(q^i-1) - 1 = (q^{D+1} - q - q^i + 1)/(q^i - 1).
    """
    prefix = q ** (D * (D + 1) // 2 + 1)
    qd1 = q ** (D + 1)
    factors = []
    for i in range(1, D):
        qi = q**i
        factors.append((qd1 - q - qi + 1, qi - 1))
    return prefix, factors


def fD_factors(q: int, D: int) -> tuple[int, list[tuple[int, int]]]:
    """f_D of family 2 as ``prefix * prod(num/den)``.

    Factor i is q^{i+1}(q^D-1)/(q^i-1) + 1 = (q^{i+1}(q^D-1) + q^i - 1)/(q^i - 1).
    """
    prefix = q**D * (q + 1) - q
    qd = q**D
    factors = []
    for i in range(2, D + 1):
        qi = q**i
        factors.append((q * qi * (qd - 1) + qi - 1, qi - 1))
    return prefix, factors


def _product(prefix: int, factors: list[tuple[int, int]]) -> Fraction:
    out = Fraction(prefix)
    for n, d in factors:
        out *= Fraction(n, d)
    return out


def _kD_family2(q: int, D: int) -> Fraction:
    return _product(*kD_factors(q, D))


def _fD_family2(q: int, D: int) -> Fraction:
    return _product(*fD_factors(q, D))


# name -> (family, required D or None, evaluator(q, D))
CLOSED_FORMS = {
    "f2_family1": (1, None, _f2_family1),
    "f2_family1_D4": (1, 4, lambda q, D: _f2_family1_d4(q)),
    "k2_family1_D5": (1, 5, lambda q, D: _k2_family1_d5(q)),
    "f2_family2": (2, None, _f2_family2),
    "f3_family2": (2, None, _f3_family2),
    "kD_family2": (2, None, _kD_family2),
    "fD_family2": (2, None, _fD_family2),
}


def multiplicity_closed_forms(cp: ClassicalParams, which: str) -> Fraction:
    """Evaluate one of the printed closed forms exactly.

    Raises FamilyMismatch when ``cp`` is not a member of the form's family
    (or has the wrong diameter for a diameter-specific form).
    """
    try:
        fam, need_d, fn = CLOSED_FORMS[which]
    except KeyError:
        raise ValueError(f"unknown closed form {which!r}; choose from {sorted(CLOSED_FORMS)}") from None
    if _which_family(cp) != fam:
        raise FamilyMismatch(f"{which} needs family-{fam} parameters, got {cp}")
    if need_d is not None and cp.D != need_d:
        raise FamilyMismatch(f"{which} needs D = {need_d}, got D = {cp.D}")
    return fn(cp.q, cp.D)


# --------------------------------------------------------------------------
# local eigenvalues and local strongly regular graphs


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"


INFINITY = _Infinity()


def tilde(z, b1) -> Fraction | _Infinity:
    """z -> -1 - b1/(1+z), with z = -1 sent to INFINITY."""
    z, b1 = as_fraction(z), as_fraction(b1)
    if z == -1:
        return INFINITY
    return -1 - b1 / (1 + z)


@dataclass(frozen=True)
class LocalEigenvalues:
    values: tuple[Fraction, Fraction, Fraction, Fraction]
    eta4_eq_eta2: bool
    eta4_eq_eta3: bool


def local_eig_candidates(cp: ClassicalParams) -> LocalEigenvalues:
    """The four possible local eigenvalues of thin endpoint-1 modules."""
    q, a, b = cp.q, cp.alpha, cp.beta
    eta1 = Fraction(-q - 1)
    eta2 = b - a - 1
    eta3 = Fraction(-1)
    eta4 = a * q * cp.bracket(cp.D - 1) - 1
    return LocalEigenvalues(
        (eta1, eta2, eta3, eta4),
        eta4_eq_eta2=(b == a * cp.bracket(cp.D)),
        eta4_eq_eta3=(a == 0),
    )


@dataclass(frozen=True)
class SrgParams:
    n: Fraction
    k: Fraction
    lambda_: Fraction
    mu: Fraction
    r: Fraction
    s: Fraction
    forced_beta: Fraction | None = None
    beta_matches: bool | None = None

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.n, self.k, self.lambda_, self.mu

    @classmethod
    def from_graph_params(cls, n, k, lambda_, mu) -> "SrgParams":
        """Parameters (n, k, lambda, mu) plus the eigenvalues r > s they force."""
        from .exact import IntPolynomial as _P, rational_roots as _rr

        n, k, lambda_, mu = (as_fraction(x) for x in (n, k, lambda_, mu))
        # r, s are the roots of t^2 - (lambda - mu) t - (k - mu)
        poly = _P.from_rational([-(k - mu), -(lambda_ - mu), 1])
        roots = [t for t, _ in _rr(poly).roots]
        if len(roots) != 2:
            raise ValueError("non-rational or repeated restricted eigenvalues")
        r, s = max(roots), min(roots)
        return cls(n, k, lambda_, mu, r, s)


def srg_from_local(cp: ClassicalParams) -> SrgParams:
    """Parameters of the local graph forced by a uniform structure.

    Evaluates the printed n, k, lambda, mu displays literally (valid for
    q != 1) and reports the beta value those displays presuppose.
    """
    if cp.alpha == 0:
        raise AlphaZero("local strongly regular parameters need alpha != 0")
    if cp.q == 1:
        raise InvalidParameters("the local-graph displays divide by q - 1")
    q, a, D = Fraction(cp.q), cp.alpha, cp.D
    n = (q**D - 1) * (a * q ** (D + 1) - q**2 + q - a) / (q - 1) ** 2
    k = (q + 1) * (a * q**D - q - a + 1) / (q - 1)
    lam = (a * q**D + a * q**2 - q**2 - a * q - q - a + 2) / (q - 1)
    mu = a * (q + 1)
    forced = a * (q ** (D + 1) - 1) / (q - 1) - q
    eta4 = local_eig_candidates(cp).values[3]
    return SrgParams(n, k, lam, mu, r=eta4, s=-q - 1, forced_beta=forced, beta_matches=(cp.beta == forced))


# --------------------------------------------------------------------------
# thin endpoint-1 module scalars


@dataclass(frozen=True)
class ThinModuleScalars:
    """Index -> value maps for beta_i, beta'_i (1 <= i <= d) and gamma_i (0 <= i < d)."""

    diameter: int
    beta: dict
    beta_prime: dict
    gamma: dict


def thin_module_scalars(cp: ClassicalParams, diameter_class: str) -> ThinModuleScalars:
    """Scalars of the two non-isomorphic thin endpoint-1 modules of a class.

    ``diameter_class`` is ``"D-2"`` (local eigenvalues eta_1, eta_2) or
    ``"D-1"`` (eta_3, eta_4).
    """
    if cp.q == 1:
        raise InvalidParameters("the module scalar displays divide by q - 1")
    q, a, bt, D = Fraction(cp.q), cp.alpha, cp.beta, cp.D
    if diameter_class in ("D-2", "D - 2"):
        d = D - 2
        beta = {i: cp.b(i + 1) for i in range(1, d + 1)}
        beta_p = {
            i: cp.c(i + 1) / cp.c(i) * (q**D - q ** (i + 1)) / (q ** (i + 1) - 1) * (q**i - 1) / (q - 1)
            * (bt - a * (q**i - 1) / (q - 1))
            for i in range(1, d + 1)
        }
    elif diameter_class in ("D-1", "D - 1"):
        d = D - 1
        beta = {i: cp.b(i) for i in range(1, d + 1)}
        beta_p = {
            i: cp.c(i + 1) / cp.c(i) * (q**D - q**i) / (q ** (i + 1) - 1) * (q**i - 1) / (q - 1)
            * (bt - a * (q ** (i + 1) - 1) / (q - 1))
            for i in range(1, d + 1)
        }
    else:
        raise ValueError("diameter_class must be 'D-2' or 'D-1'")
    gamma = {i: cp.c(i + 1) for i in range(d)}
    return ThinModuleScalars(d, beta, beta_p, gamma)
