"""
Classical parameters, by hand and by machine
============================================

Everything in this walk-through is exact: intersection numbers, eigenvalues
and multiplicities are Fractions, and irrational eigenvalues come back as an
integer polynomial plus an isolating interval.
"""

# %%
# Four numbers (D, q, alpha, beta) determine the whole intersection array.
from drgwb.params import ClassicalParams, intersection_array, p_hij, spectrum

cp = ClassicalParams(4, 2, 2, 60)
ia = intersection_array(cp)
print("array:", ia)
print("valencies:", [str(k) for k in ia.valencies])

# %%
# The eigenvalues of the tridiagonal intersection matrix, with multiplicities.
# Non-integral multiplicities already rule these parameters out.
for entry in spectrum(ia):
    print(f"  theta = {entry.theta}, m = {entry.multiplicity}")

# %%
# Intersection numbers p^h_ij come from a three-term recurrence.
print("p^2_11 =", p_hij(ia, 2, 1, 1))
print("p^4_22 =", p_hij(ia, 4, 2, 2))

# %%
# A graph with these parameters would have a strongly regular local graph.
# Its parameters and the four candidate local eigenvalues are closed forms.
from drgwb.params import local_eig_candidates, srg_from_local

print("local eigenvalue candidates:", [str(x) for x in local_eig_candidates(cp).values])
srg = srg_from_local(cp)
print("local srg:", [str(x) for x in srg.as_tuple()], "r =", srg.r, "s =", srg.s)
print("beta these displays assume:", srg.forced_beta)

# %%
# A concrete check: the Grassmann graph J_2(4, 2) has classical parameters
# (2, 2, 2, 6), and the brute-force array agrees.
from drgwb import graphs

g = graphs.grassmann_q(4, 2, 2)
print(g.name, "->", graphs.is_distance_regular(g))
print("from parameters ->", intersection_array(ClassicalParams(2, 2, 2, 6)))

# %%
# The 5-cycle has an irrational pair of eigenvalues; both have multiplicity 2.
c5 = graphs.is_distance_regular(graphs.cycle(5))
for entry in spectrum(c5):
    print(" ", entry.theta, "multiplicity", entry.multiplicity)
