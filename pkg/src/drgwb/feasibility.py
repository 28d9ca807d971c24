"""Parameter-level verdicts with re-checkable certificates.

Integrality screens over an intersection array, Neumaier's claw-bound cases
for the local strongly regular graph, the alpha classification, and the two
elimination chains for the alpha = q+1 and alpha = q families.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .params import (
    ClassicalParams,
    NonPositiveIntersectionNumber,
    SrgParams,
    family1,
    family2,
    intersection_array,
    intersection_tensor,
    multiplicity_closed_forms,
    p633_closed_form,
    p_hij,
    qbracket,
    spectrum,
    srg_from_local,
)

__all__ = [
    "Check",
    "FeasibilityReport",
    "HypothesisViolated",
    "DNotCovered",
    "integrality_screen",
    "neumaier_cases",
    "conference_check",
    "claw_bound_inequality",
    "AlphaCandidate",
    "alpha_candidates",
    "alpha_classification",
    "family1_eliminate",
    "family2_eliminate",
]

PASS, FAIL, INAPPLICABLE = "pass", "fail", "inapplicable"


class HypothesisViolated(ValueError):
    pass


class DNotCovered(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    name: str
    verdict: str
    certificate: str = ""
    values: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL


@dataclass
class FeasibilityReport:
    params: ClassicalParams | None
    checks: list[Check] = field(default_factory=list)
    label: str = ""

    @property
    def overall(self) -> str:
        return "eliminated" if any(c.failed for c in self.checks) else "feasible-so-far"

    @property
    def eliminated(self) -> bool:
        return self.overall == "eliminated"

    @property
    def certificate(self) -> Check | None:
        """The first failing check, which is the elimination certificate."""
        return next((c for c in self.checks if c.failed), None)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check


def _fmt(x: Fraction) -> str:
    return str(x)


def _is_nonneg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def _non_integer_cert(label: str, value: Fraction) -> str:
    return f"{label} = {value} is not an integer (reduced denominator {value.denominator})"


# --------------------------------------------------------------------------
# generic integrality screen


def _screen_check(name: str, failures: list[tuple[str, Fraction]], ok_note: str, what: str) -> Check:
    if not failures:
        return Check(name, PASS, ok_note)
    label, value = failures[0]
    return Check(
        name,
        FAIL,
        f"{label} = {value} is not {what} (reduced denominator {value.denominator})"
        if value.denominator != 1 else f"{label} = {value} is not {what}",
        {"quantity": label, "value": _fmt(value), "failures": {k: _fmt(v) for k, v in failures}},
    )


def integrality_screen(cp: ClassicalParams) -> FeasibilityReport:
    """b_i, c_i, k_i, every p^h_ij and every rational multiplicity must be
    nonnegative integers.

    Each check's certificate names its first failure; ``values["failures"]``
    lists every failing quantity of that kind.
    """
    report = FeasibilityReport(cp, label=f"integrality screen for {cp}")
    try:
        ia = intersection_array(cp)
    except NonPositiveIntersectionNumber as exc:
        report.add(Check("intersection_array", FAIL, str(exc),
                         {"quantity": f"{exc.name}_{exc.index}", "value": _fmt(exc.value)}))
        for name in ("valencies", "intersection_numbers", "multiplicities"):
            report.add(Check(name, INAPPLICABLE, "intersection array is not feasible"))
        return report

    fails = [(f"b_{i}", x) for i, x in enumerate(ia.b) if x.denominator != 1]
    fails += [(f"c_{i + 1}", x) for i, x in enumerate(ia.c) if x.denominator != 1]
    report.add(_screen_check("intersection_array", fails, "all b_i and c_i are positive integers", "an integer"))

    fails = [(f"k_{i}", x) for i, x in enumerate(ia.valencies) if not _is_nonneg_int(x)]
    report.add(_screen_check("valencies", fails, "all k_i are integers", "an integer"))

    tensor = intersection_tensor(ia)
    d = ia.D
    fails = [
        (f"p^{h}_{{{i},{j}}}", tensor[h][i][j])
        for h in range(d + 1) for i in range(d + 1) for j in range(i, d + 1)
        if not _is_nonneg_int(tensor[h][i][j])
    ]
    report.add(_screen_check("intersection_numbers", fails, "all p^h_ij are nonnegative integers",
                             "a nonnegative integer"))

    entries = spectrum(ia)
    irrational = sum(1 for e in entries if not e.rational)
    fails = [
        (f"f_{idx}", e.multiplicity) for idx, e in enumerate(entries)
        if e.rational and not (e.multiplicity.denominator == 1 and e.multiplicity > 0)
    ]
    check = _screen_check("multiplicities", fails,
                          "all rational-eigenvalue multiplicities are positive integers", "a positive integer")
    check.values["eigenvalues"] = [str(e.theta) for e in entries]
    check.values["irrational_eigenvalues"] = irrational
    report.add(check)
    return report


# --------------------------------------------------------------------------
# strongly regular screens


def claw_bound_inequality(q: int, D: int, alpha) -> bool:
    """alpha (2q^{D-1} - q^3 - q^2 + q - 1) <= q^2 - 1."""
    alpha = Fraction(alpha)
    return alpha * (2 * q ** (D - 1) - q**3 - q**2 + q - 1) <= q * q - 1


def neumaier_cases(srg: SrgParams) -> set[str]:
    """Which of Neumaier's three alternatives hold for an SRG with integral s < -1."""
    s, r, mu = srg.s, srg.r, srg.mu
    if s.denominator != 1 or s >= -1:
        raise HypothesisViolated(f"need integral s < -1, got s = {s}")
    out = set()
    if r <= s * (s + 1) * (mu + 1) / 2 - 1:
        out.add("case_i")
    if mu == s * s:
        out.add("case_ii_steiner")
    if mu == s * (s + 1):
        out.add("case_iii_latin")
    return out


def conference_check(srg: SrgParams) -> bool:
    return srg.lambda_ == srg.mu - 1 and srg.k == 2 * srg.mu


@dataclass(frozen=True)
class AlphaCandidate:
    alpha: Fraction
    survives: bool
    reason: str


def _local_srg_candidate(q: int, D: int, alpha: Fraction) -> AlphaCandidate:
    beta = alpha * qbracket(D + 1, q) - q
    cp = ClassicalParams(D, q, alpha, beta)
    srg = srg_from_local(cp)
    for name, val in (("n", srg.n), ("k", srg.k), ("lambda", srg.lambda_), ("mu", srg.mu)):
        if not _is_nonneg_int(val):
            return AlphaCandidate(alpha, False, f"{name} = {val} is not a nonnegative integer")
    if conference_check(srg):
        return AlphaCandidate(alpha, False, "local graph would be a conference graph")
    cases = neumaier_cases(srg)
    # case (i) for these parameters is the displayed claw-bound inequality
    assert ("case_i" in cases) == claw_bound_inequality(q, D, alpha)
    if not cases:
        return AlphaCandidate(alpha, False, "none of Neumaier's alternatives holds")
    try:
        intersection_array(cp)
    except NonPositiveIntersectionNumber as exc:
        return AlphaCandidate(alpha, False, str(exc))
    return AlphaCandidate(alpha, True, "+".join(sorted(cases)))


def alpha_candidates(q: int, D: int) -> list[AlphaCandidate]:
    """Every alpha that needs individual inspection, with its fate.

    mu = alpha (q+1) must be a positive integer m.  Outside the finitely many
    m allowed by the claw-bound inequality, only m = q(q+1) and m = (q+1)^2
    can satisfy a Neumaier alternative, so the list below is complete.
    """
    if q < 2 or D < 4:
        raise ValueError("alpha classification needs q >= 2 and D >= 4")
    coeff = 2 * q ** (D - 1) - q**3 - q**2 + q - 1
    assert coeff > 0
    m_claw = (q + 1) * (q * q - 1) // coeff
    ms = sorted(set(range(1, m_claw + 1)) | {q * (q + 1), (q + 1) ** 2})
    return [_local_srg_candidate(q, D, Fraction(m, q + 1)) for m in ms]


def alpha_classification(q: int, D: int) -> set[Fraction]:
    return {c.alpha for c in alpha_candidates(q, D) if c.survives}


# --------------------------------------------------------------------------
# family 1: alpha = q + 1


def _divides_check(name: str, modulus: int, dividend: int, mod_label: str, div_label: str, quantity: str) -> Check:
    rem = dividend % modulus
    values = {"modulus": modulus, "dividend": dividend, "remainder": rem, "quantity": quantity}
    if rem:
        return Check(name, FAIL, f"{mod_label} = {modulus} does not divide {div_label} = {dividend}", values)
    return Check(name, PASS, f"{mod_label} = {modulus} divides {div_label} = {dividend}", values)


def _integrality_check(name: str, label: str, value: Fraction) -> Check:
    values = {"quantity": label, "value": _fmt(value), "denominator": value.denominator}
    if value.denominator != 1:
        return Check(name, FAIL, _non_integer_cert(label, value), values)
    return Check(name, PASS, f"{label} = {value} is an integer", values)


def family1_eliminate(q: int, D: int) -> FeasibilityReport:
    """Certificate chain showing (D, q, q+1, beta) is not feasible."""
    if q < 2 or D < 4:
        raise ValueError("family 1 elimination covers q >= 2 and D >= 4")
    cp = family1(q, D)
    rep = FeasibilityReport(cp, label=f"family 1 (alpha = q+1), q = {q}, D = {D}")
    if D >= 6:
        c = rep.add(_divides_check("p633_divisibility", q * q + 2 * q + 2, 40 * (3 * q + 1),
                                   "q^2+2q+2", "40(3q+1)", "p^6_33"))
        if c.failed:
            return rep
        c = rep.add(_integrality_check("p633_integrality", "p^6_33", p633_closed_form(q)))
        if c.failed:
            return rep
        if D >= 8:
            rep.add(_integrality_check("p844_integrality", "p^8_44", p_hij(intersection_array(cp), 8, 4, 4)))
        else:
            rep.add(_integrality_check("f2_integrality", "f_2", multiplicity_closed_forms(cp, "f2_family1")))
        return rep
    if D == 4:
        c = rep.add(_divides_check("f2_divisibility", q * q + 2 * q + 2, 60 * (3 * q + 4),
                                   "q^2+2q+2", "60(3q+4)", "f_2"))
        if c.failed:
            return rep
        rep.add(_integrality_check("f2_integrality", "f_2", multiplicity_closed_forms(cp, "f2_family1_D4")))
        return rep
    # D == 5
    c = rep.add(_divides_check("k2_divisibility", q + 2, 60720, "q+2", "60720", "k_2"))
    if c.failed:
        return rep
    rep.add(_integrality_check("f2_integrality", "f_2", multiplicity_closed_forms(cp, "f2_family1")))
    return rep


# --------------------------------------------------------------------------
# family 2: alpha = q


def _v2(n: int) -> int:
    n = abs(n)
    return (n & -n).bit_length() - 1


def family2_eliminate(q: int, D: int) -> FeasibilityReport:
    """Certificate chain showing (D, q, q, q^2(q^D-1)/(q-1)) is not feasible
    for D not divisible by 6."""
    if q < 2 or D < 4:
        raise ValueError("family 2 elimination covers q >= 2 and D >= 4")
    if D % 6 == 0:
        raise DNotCovered(f"D = {D} is divisible by 6; this case is open (use the sweep)")
    cp = family2(q, D)
    rep = FeasibilityReport(cp, label=f"family 2 (alpha = q), q = {q}, D = {D}")
    if D % 2 == 1:
        num = q * q * (q**D - 1) * (q ** (D + 1) + 1) * (q ** (2 * D - 2) - q ** (D - 2) + q ** (D - 3) - 1)
        c = rep.add(_divides_check("f2_divisibility", q + 1, 8, "q+1", "8", "f_2"))
        c.values["numerator_residue"] = num % (q + 1)
        if c.failed:
            return rep
        # q in {3, 7}: three factors, each 2 mod 4, over a denominator with 2-adic valuation >= 4
        tail = {3: 27, 7: 343}[q]
        factors = (q**D - 1, q ** (D + 1) + 1, q ** (2 * D + 1) - (q - 1) * q**D - tail)
        den = {3: 48, 7: 2016}[q]
        residues = [f % 4 for f in factors]
        v_num = sum(_v2(f) for f in factors)
        values = {"quantity": "f_2", "factors_mod_4": residues, "denominator": den,
                  "v2_numerator": v_num, "v2_denominator": _v2(den)}
        exact = multiplicity_closed_forms(cp, "f2_family2")
        assert exact == Fraction(factors[0] * factors[1] * factors[2], den)
        if residues == [2, 2, 2] and v_num < _v2(den):
            rep.add(Check("f2_mod4", FAIL,
                          f"f_2 = XYZ/{den} with X, Y, Z all 2 mod 4: 2-adic valuation {v_num} < {_v2(den)}",
                          values))
        else:
            rep.add(_integrality_check("f2_integrality", "f_2", exact))
        return rep
    num = ((q**D - 1) * (q ** (D + 1) + 1) * (q ** (2 * D + 1) - q ** (D + 1) + q**D - q)
           * (q ** (2 * D - 2) - q ** (D - 2) + q ** (D - 3) - q**2))
    m = q * q + q + 1
    if D % 6 == 2:
        c = rep.add(_divides_check("f3_divisibility", m, 18 * q, "q^2+q+1", "18q", "f_3"))
    else:
        c = rep.add(_divides_check("f3_divisibility", m, 9, "q^2+q+1", "9", "f_3"))
    c.values["numerator_residue"] = num % m
    if not c.failed:
        rep.add(_integrality_check("f3_integrality", "f_3", multiplicity_closed_forms(cp, "f3_family2")))
    return rep
