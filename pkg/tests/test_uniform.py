from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drgwb import graphs as G
from drgwb.exact import det
from drgwb.talg import BIPARTITE_QUOTIENT, FULL, build_context, decompose
from drgwb.uniform import (
    NO_UNIFORM,
    UNIFORM,
    Bipartite,
    NotBipartite,
    ParameterMatrixU,
    level_operators,
    solution_from_json,
    solution_to_json,
    solve_uniform,
    supports_uniform,
    verify_uniform_solution,
)

# edge lists of small bipartite graphs without a uniform structure at vertex 0
INFEASIBLE_LEVEL = "5\n0 1\n0 2\n1 3\n1 4\n2 3"
INVALID_U = "4\n0 1\n0 2\n1 3"


def _flat_dot(y, m):
    return sum(a * b for a, b in zip(y, m.flatten()))


@pytest.mark.parametrize("D", [3, 4, 5, 6])
def test_hypercubes_are_uniform(D):
    ctx = build_context(G.hypercube(D), 0)
    verdict = solve_uniform(ctx)
    assert verdict.outcome == UNIFORM
    sol = verdict.solution
    assert verify_uniform_solution(ctx, sol.U, sol.f)
    assert sol.U.size == D and sol.U.e_minus[0] == 0 and sol.U.e_plus[-1] == 0


def test_resubstitution_rejects_perturbed_solution():
    ctx = build_context(G.hypercube(4), 0)
    sol = solve_uniform(ctx).solution
    f = list(sol.f)
    f[1] += 1
    assert not verify_uniform_solution(ctx, sol.U, tuple(f))
    assert not verify_uniform_solution(ctx, sol.U, sol.f[:-1])


@pytest.mark.parametrize("m", [5, 7])
def test_folded_hypercubes_support_uniform(m):
    g = G.folded_hypercube(m)
    verdict = supports_uniform(g, 0)
    assert verdict.outcome == UNIFORM
    assert verdict.checks["all_modules_thin"] and verdict.checks["same_shape_isomorphic"]
    ctx = build_context(g, 0, BIPARTITE_QUOTIENT)
    assert verify_uniform_solution(ctx, verdict.solution.U, verdict.solution.f)


def test_cycle5_verdict_is_rechecked():
    g = G.cycle(5)
    verdict = supports_uniform(g, 0)
    ctx = build_context(g, 0, BIPARTITE_QUOTIENT)
    if verdict.outcome == UNIFORM:
        assert verify_uniform_solution(ctx, verdict.solution.U, verdict.solution.f)
    else:
        assert verdict.outcome in (NO_UNIFORM, "undetermined_validation")


def test_mode_errors():
    with pytest.raises(NotBipartite):
        solve_uniform(build_context(G.petersen(), 0, FULL))
    with pytest.raises(Bipartite):
        supports_uniform(G.hypercube(3), 0)


def test_star_is_single_level():
    ctx = build_context(G.complete_bipartite(1, 4), 0)
    verdict = solve_uniform(ctx)
    assert verdict.outcome == UNIFORM
    assert verdict.solution.U.matrix().rows == ((1,),)
    assert verdict.solution.f == (4,)


def test_infeasible_level_has_farkas_and_column_witness():
    g = G.from_edge_list(INFEASIBLE_LEVEL)
    ctx = build_context(g, 0)
    verdict = solve_uniform(ctx)
    assert verdict.outcome == NO_UNIFORM
    wit = verdict.infeasible
    assert wit.level == 2 and wit.column == 3
    ops = level_operators(ctx, wit.level)
    y = wit.farkas
    for name in ("RLL", "L"):
        assert _flat_dot(y, ops[name]) == 0
    assert _flat_dot(y, ops["LRL"]) != 0
    # the witness vertex alone: LRL e_v is not in the span of the targets applied to e_v
    j = ctx.cells[wit.level].index(wit.column)
    col = lambda m: [row[j] for row in m.rows]
    a, b, c = col(ops["RLL"]), col(ops["L"]), col(ops["LRL"])
    for e in (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2)):
        for f in (Fraction(0), Fraction(1), Fraction(2), Fraction(-1)):
            residual = [e * x + z - f * w for x, w, z in zip(a, b, c)]
            assert any(residual)


def test_invalid_parameter_matrix():
    ctx = build_context(G.from_edge_list(INVALID_U), 0)
    verdict = solve_uniform(ctx)
    assert verdict.outcome == NO_UNIFORM and verdict.infeasible is None
    assert "violates" in verdict.reason


def test_parameter_matrix_conditions():
    U = ParameterMatrixU((Fraction(0), Fraction(2), Fraction(3)), (Fraction(1), Fraction(1), Fraction(0)))
    assert U.valid()
    m = U.matrix()
    assert m.rows[1][0] == 2 and m.rows[0][1] == 1
    # contiguous minor det [[1,1],[2,1]] = -1
    assert U.minors()[(1, 2)] == -1
    bad = ParameterMatrixU((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))
    assert bad.singular_minors() == [(1, 2)] and not bad.valid()
    mixed = ParameterMatrixU((Fraction(0), Fraction(0), Fraction(2)), (Fraction(1), Fraction(0), Fraction(0)))
    cii = mixed.condition_ii()
    assert cii["per_index"] and not cii["whole_range"]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=2, max_size=6),
       st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=2, max_size=6))
def test_continuant_minors_match_determinants(lo, up):
    n = min(len(lo), len(up))
    U = ParameterMatrixU((Fraction(0),) + tuple(lo[1:n]), tuple(up[: n - 1]) + (Fraction(0),))
    m = U.matrix()
    for (s, t), v in U.minors().items():
        idx = range(s - 1, t)
        assert det(m.submatrix(idx, idx)) == v


def test_json_roundtrip():
    ctx = build_context(G.hypercube(3), 0)
    sol = solve_uniform(ctx).solution
    U, f = solution_from_json(solution_to_json(sol))
    assert U == sol.U and f == sol.f


def test_module_checks_use_given_modules():
    g = G.folded_hypercube(5)
    mods = decompose(build_context(g, 0, BIPARTITE_QUOTIENT))
    verdict = supports_uniform(g, 0, modules=mods)
    assert verdict.checks["modules"] == len(mods)
