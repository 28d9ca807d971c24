"""
Ruling out the two surviving families
=====================================

The local strongly regular graph leaves only alpha = q and alpha = q + 1.
Each family is then killed by a short chain of divisibility tests, and every
verdict carries a certificate that can be re-checked with one modular
reduction or one reduced fraction.
"""

# %%
from drgwb.feasibility import alpha_candidates, alpha_classification

for cand in alpha_candidates(2, 4):
    print(f"alpha = {cand.alpha}: {'survives' if cand.survives else 'dies'} ({cand.reason})")
print("survivors at (q, D) = (2, 4):", sorted(alpha_classification(2, 4)))

# %%
# alpha = q + 1: for most q a single divisibility fails.
from drgwb.feasibility import family1_eliminate

for q, D in [(3, 6), (2, 6), (2, 9), (2, 4), (5, 5)]:
    rep = family1_eliminate(q, D)
    print(f"q={q} D={D}: {rep.certificate.name}: {rep.certificate.certificate}")

# %%
# alpha = q: odd D narrows q to 3 or 7, then a 2-adic count finishes it.
from drgwb.feasibility import DNotCovered, family2_eliminate

for q, D in [(3, 5), (4, 5), (2, 8), (2, 10)]:
    rep = family2_eliminate(q, D)
    print(f"q={q} D={D}: {rep.certificate.name}: {rep.certificate.certificate}")

try:
    family2_eliminate(2, 12)
except DNotCovered as exc:
    print("D = 12:", exc)

# %%
# The open case D = 0 mod 6: k_D and f_D are products of q-fractions; the
# sweep records whether either is ever an integer.
from drgwb.sweep import conjecture_sweep, full_value

print("k_D at (2, 6) =", full_value(2, 6, "kD"))
res = conjecture_sweep(40, 60)
print(res.summary())
