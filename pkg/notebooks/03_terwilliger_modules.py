"""
Irreducible modules of the subconstituent algebra
=================================================

Pick a base vertex, cut the vertex set into distance cells, and split the
standard module into irreducible pieces.  Bases are integer vectors level by
level, so thinness and local eigenvalues are read off exactly.
"""

# %%
from drgwb import graphs
from drgwb.talg import build_context, decompose, local_eigenvalue_counts

ctx = build_context(graphs.hypercube(4), 0)
for W in decompose(ctx):
    print(f"endpoint {W.endpoint} diameter {W.diameter} dims {W.dims} "
          f"products {[str(p) for p in W.products]}")

# %%
# The Grassmann graph J_2(4, 2): 17 endpoint-1 modules, labelled by the
# eigenvalue of the local graph on their first level.
ctx = build_context(graphs.grassmann_q(4, 2, 2), 0)
mods = decompose(ctx)
print({str(k): v for k, v in local_eigenvalue_counts(mods).items()})

# %%
# The canonical basis of a thin endpoint-1 module: w_i = E*_{i+1} A_i v.
from drgwb.talg import canonical_basis

W = next(W for W in mods if W.local_eigenvalue == -1)
cb = canonical_basis(ctx, W)
print("gamma:", [str(x) for x in cb.gamma], "beta:", [str(x) for x in cb.beta])

# %%
# A reducible invariant subspace is split, and each piece is certified.
from drgwb.talg import TModule, split_module

ctx = build_context(graphs.complete_bipartite(2, 3), 2)
for piece in split_module(ctx, TModule({1: [(1, -1)], 2: [(1, -1)]})):
    print(piece.summary())
