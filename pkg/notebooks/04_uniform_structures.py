"""
Uniform structures
==================

On a bipartite graph we solve, level by level, for scalars making

    e^- R L^2 + L R L + e^+ L^2 R = f L

hold on each subconstituent, then look for a choice of free coordinates that
makes the tridiagonal parameter matrix U admissible.
"""

# %%
from drgwb import graphs
from drgwb.talg import build_context
from drgwb.uniform import solution_to_json, solve_uniform, supports_uniform

verdict = solve_uniform(build_context(graphs.hypercube(5), 0))
print(verdict.outcome, solution_to_json(verdict.solution))

# %%
# A non-bipartite graph is handled through its quotient that drops every edge
# inside a distance cell.
verdict = supports_uniform(graphs.folded_hypercube(7), 0)
print(verdict.outcome, verdict.checks["all_modules_thin"], verdict.checks["same_shape_isomorphic"])

# %%
# When a level has no solution, the verdict comes with a Farkas vector: it is
# orthogonal to every target operator but not to the right-hand side.
g = graphs.from_edge_list("5\n0 1\n0 2\n1 3\n1 4\n2 3")
verdict = solve_uniform(build_context(g, 0))
print(verdict.outcome, verdict.infeasible)
