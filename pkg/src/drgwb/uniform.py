"""Uniform structures on a bipartite context.

On every subconstituent i >= 1 we look for scalars with

    e_i^- R L^2 + L R L + e_i^+ L^2 R = f_i L      (restricted to E_i* V)

and then for a choice of the free coordinates making the tridiagonal matrix
U (unit diagonal, e_i^- below, e_i^+ above) satisfy the nonvanishing and
nonsingularity conditions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .exact import AffineSolution, RationalMatrix, as_fraction, nullspace, solve_linear_combination
from .graphs import Graph
from .talg import BIPARTITE_QUOTIENT, FULL, TerwilligerContext, build_context, decompose, level_products

__all__ = [
    "NotBipartite",
    "Bipartite",
    "UNIFORM",
    "NO_UNIFORM",
    "UNDETERMINED",
    "ParameterMatrixU",
    "LevelSolution",
    "UniformSolution",
    "InfeasibleLevel",
    "UniformVerdict",
    "level_operators",
    "solve_uniform",
    "validate_parameter_matrix",
    "supports_uniform",
    "verify_uniform_solution",
    "solution_to_json",
    "solution_from_json",
]

UNIFORM, NO_UNIFORM, UNDETERMINED = "uniform", "no_uniform", "undetermined_validation"

# small rationals tried for free coordinates after the canonical choice of 1
SEARCH_VALUES = tuple(Fraction(x) for x in ("1", "2", "-1", "1/2", "3", "-2", "-1/2", "1/3", "5", "-3"))
SEARCH_LIMIT = 4096


class NotBipartite(ValueError):
    pass


class Bipartite(ValueError):
    pass


@dataclass(frozen=True)
class ParameterMatrixU:
    """Tridiagonal eps x eps matrix with unit diagonal.

    ``e_minus[i-1]`` is e_i^- (so e_minus[0] = e_1^- = 0) and ``e_plus[i-1]``
    is e_i^+ (so e_plus[eps-1] = e_eps^+ = 0).
    """

    e_minus: tuple[Fraction, ...]
    e_plus: tuple[Fraction, ...]

    @property
    def size(self) -> int:
        return len(self.e_minus)

    def matrix(self) -> RationalMatrix:
        n = self.size
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = Fraction(1)
            if i > 0:
                rows[i][i - 1] = self.e_minus[i]
            if i + 1 < n:
                rows[i][i + 1] = self.e_plus[i]
        return RationalMatrix(rows)

    def minors(self) -> dict[tuple[int, int], Fraction]:
        """det of every contiguous principal submatrix U[s..t] (1-based), by
        the continuant recurrence."""
        n = self.size
        out = {}
        for s in range(n):
            prev2, prev = Fraction(1), Fraction(1)
            out[(s + 1, s + 1)] = prev
            for t in range(s + 1, n):
                cur = prev - self.e_plus[t - 1] * self.e_minus[t] * prev2
                out[(s + 1, t + 1)] = cur
                prev2, prev = prev, cur
        return out

    def condition_ii(self) -> dict:
        """Both readings of the nonvanishing condition."""
        n = self.size
        lower = all(self.e_minus[i] != 0 for i in range(1, n))
        upper = all(self.e_plus[i - 1] != 0 for i in range(1, n))
        per_index = all(self.e_minus[i] != 0 or self.e_plus[i - 1] != 0 for i in range(1, n))
        return {"whole_range": lower or upper, "all_lower_nonzero": lower, "all_upper_nonzero": upper,
                "per_index": per_index}

    def singular_minors(self) -> list[tuple[int, int]]:
        return [k for k, v in self.minors().items() if v == 0]

    def valid(self) -> bool:
        return self.condition_ii()["whole_range"] and not self.singular_minors()


@dataclass(frozen=True)
class LevelSolution:
    """Solution set at level i; coordinates are (e_i^-, e_i^+, f_i) with the
    boundary slots fixed at 0."""

    level: int
    slots: tuple[str, ...]
    affine: AffineSolution

    def values(self, params) -> dict[str, Fraction]:
        point = self.affine.point(params)
        out = {"e_minus": Fraction(0), "e_plus": Fraction(0)}
        for name, x in zip(self.slots, point):
            out[name] = -x if name == "f" else x
        return out


@dataclass(frozen=True)
class UniformSolution:
    U: ParameterMatrixU
    f: tuple[Fraction, ...]
    levels: tuple[LevelSolution, ...] = ()
    free_choice: tuple[tuple[Fraction, ...], ...] = ()
    policy: str = ""


@dataclass(frozen=True)
class InfeasibleLevel:
    """No scalars satisfy the identity on level i.

    ``column`` is a vertex of Gamma_i(x) whose basis vector alone already
    admits no coefficients, when one exists.  ``farkas`` is a vector y with
    y . target = 0 for every target but y . rhs != 0, which certifies the
    infeasibility of the whole level.
    """

    level: int
    column: int | None
    farkas: tuple[Fraction, ...]


@dataclass
class UniformVerdict:
    outcome: str
    solution: UniformSolution | None = None
    infeasible: InfeasibleLevel | None = None
    reason: str = ""
    checks: dict = field(default_factory=dict)

    @property
    def uniform(self) -> bool:
        return self.outcome == UNIFORM


def _op_matrix(ctx: TerwilligerContext, i: int, word: str) -> RationalMatrix:
    """Matrix of a word in L, R applied to level i, as a map into level
    i - (number of L) + (number of R).  The word is read right to left."""
    cols = []
    for j in range(ctx.size(i)):
        w = tuple(1 if t == j else 0 for t in range(ctx.size(i)))
        lvl = i
        for ch in reversed(word):
            if ch == "L":
                w = ctx.lower(lvl, w) if lvl > 0 else ()
                lvl -= 1
            else:
                w = ctx.raise_(lvl, w) if lvl < ctx.eccentricity else ()
                lvl += 1
            if not w:
                break
        cols.append(w if w else (0,) * ctx.size(i - 1))
    return RationalMatrix([[cols[j][r] for j in range(len(cols))] for r in range(ctx.size(i - 1))])


def level_operators(ctx: TerwilligerContext, i: int) -> dict[str, RationalMatrix]:
    return {w: _op_matrix(ctx, i, w) for w in ("RLL", "LLR", "LRL", "L")}


def _require_bipartite(ctx: TerwilligerContext) -> None:
    if ctx.mode == FULL and ctx.uses_flat:
        raise NotBipartite("context has edges inside a cell; use the bipartite quotient")


def _solve_level(ctx: TerwilligerContext, i: int):
    ops = level_operators(ctx, i)
    slots, targets = [], []
    if i > 1:
        slots.append("e_minus")
        targets.append(ops["RLL"])
    if i < ctx.eccentricity:
        slots.append("e_plus")
        targets.append(ops["LLR"])
    slots.append("f")
    targets.append(ops["L"])
    rhs = ops["LRL"].scale(-1)
    sol = solve_linear_combination(targets, rhs)
    return slots, targets, rhs, sol


def _farkas(targets: list[RationalMatrix], rhs: RationalMatrix) -> tuple[Fraction, ...]:
    cols = [t.flatten() for t in targets]
    b = rhs.flatten()
    # y with y . col = 0 for all columns and y . b != 0
    mt = RationalMatrix([list(c) for c in cols]) if cols else RationalMatrix.zeros(1, len(b))
    for y in nullspace(mt):
        if sum(a * c for a, c in zip(y, b)):
            return tuple(y)
    raise AssertionError("infeasible system without a Farkas vector")


def _column_witness(targets: list[RationalMatrix], rhs: RationalMatrix) -> int | None:
    for j in range(rhs.ncols):
        sub = [t.submatrix(range(t.nrows), [j]) for t in targets]
        if solve_linear_combination(sub, rhs.submatrix(range(rhs.nrows), [j])) is None:
            return j
    return None


def _conditions(U: ParameterMatrixU) -> dict:
    return {"condition_ii": U.condition_ii(), "singular_minors": [list(k) for k in U.singular_minors()]}


def validate_parameter_matrix(levels: list[LevelSolution]) -> tuple[str, UniformSolution | None, dict]:
    """Pick free coordinates so that U is valid.

    Returns ("valid", solution, info), ("invalid", None, info) when the
    solution is unique and fails, or ("undetermined", None, info) when the
    bounded search over free coordinates found nothing.
    """
    dims = [lv.affine.dimension for lv in levels]

    def assemble(choice):
        vals = [lv.values(c) for lv, c in zip(levels, choice)]
        U = ParameterMatrixU(tuple(v["e_minus"] for v in vals), tuple(v["e_plus"] for v in vals))
        return U, tuple(v["f"] for v in vals)

    canonical = tuple(tuple(Fraction(1) for _ in range(d)) for d in dims)
    U, f = assemble(canonical)
    info = {"free_parameters": sum(dims), "canonical": _conditions(U)}
    if U.valid():
        info.update(_conditions(U))
        policy = "unique" if not sum(dims) else "canonical representative (free coordinates = 1)"
        return "valid", UniformSolution(U, f, tuple(levels), canonical, policy), info
    if not sum(dims):
        return "invalid", None, info
    tried = 0
    for flat in product(SEARCH_VALUES, repeat=sum(dims)):
        tried += 1
        if tried > SEARCH_LIMIT:
            break
        choice, pos = [], 0
        for d in dims:
            choice.append(tuple(flat[pos:pos + d]))
            pos += d
        U, f = assemble(choice)
        if U.valid():
            info["searched"] = tried
            info.update(_conditions(U))
            return "valid", UniformSolution(U, f, tuple(levels), tuple(choice),
                                            "bounded search over small rationals"), info
    info["searched"] = min(tried, SEARCH_LIMIT)
    return "undetermined", None, info


def solve_uniform(ctx: TerwilligerContext) -> UniformVerdict:
    _require_bipartite(ctx)
    levels = []
    for i in range(1, ctx.eccentricity + 1):
        slots, targets, rhs, sol = _solve_level(ctx, i)
        if sol is None:
            # re-check the infeasibility by rank comparison before reporting it
            farkas = _farkas(targets, rhs)
            col = _column_witness(targets, rhs)
            wit = InfeasibleLevel(i, ctx.cells[i][col] if col is not None else None, farkas)
            return UniformVerdict(NO_UNIFORM, infeasible=wit,
                                  reason=f"no coefficients satisfy the identity on level {i}")
        levels.append(LevelSolution(i, tuple(slots), sol))
    if not levels:
        return UniformVerdict(UNDETERMINED, reason="base vertex has no neighbours")
    status, solution, info = validate_parameter_matrix(levels)
    if status == "valid":
        assert verify_uniform_solution(ctx, solution.U, solution.f)
        return UniformVerdict(UNIFORM, solution=solution, checks={"validation": info})
    if status == "invalid":
        return UniformVerdict(NO_UNIFORM, reason="the unique parameter matrix violates the conditions on U",
                              checks={"validation": info})
    return UniformVerdict(UNDETERMINED, reason="bounded search over free coordinates was inconclusive",
                          checks={"validation": info})


def verify_uniform_solution(ctx: TerwilligerContext, U: ParameterMatrixU, f) -> bool:
    """Re-substitute (U, f) on every basis vector of every subconstituent."""
    if U.size != ctx.eccentricity or len(f) != U.size:
        return False
    for i in range(1, ctx.eccentricity + 1):
        ops = level_operators(ctx, i)
        lhs = ops["RLL"].scale(U.e_minus[i - 1]) + ops["LRL"] + ops["LLR"].scale(U.e_plus[i - 1])
        if lhs != ops["L"].scale(f[i - 1]):
            return False
    return U.valid()


def _module_checks(ctx: TerwilligerContext, modules) -> dict:
    thin = all(W.thin for W in modules)
    iso = True
    if thin:
        by_shape: dict[tuple[int, int], list] = {}
        for W in modules:
            by_shape.setdefault((W.endpoint, W.diameter), []).append(level_products(ctx, W))
        iso = all(all(p == ps[0] for p in ps) for ps in by_shape.values())
    return {"all_modules_thin": thin, "same_shape_isomorphic": iso, "modules": len(modules)}


def supports_uniform(g: Graph, x: int, modules=None) -> UniformVerdict:
    """Uniform structure on the bipartite quotient of a non-bipartite graph."""
    if g.is_bipartite():
        raise Bipartite("graph is bipartite; call solve_uniform on its own context")
    ctx = build_context(g, x, BIPARTITE_QUOTIENT)
    modules = decompose(ctx) if modules is None else modules
    checks = _module_checks(ctx, modules)
    bad = next((W for W in modules if not W.thin and W.irreducibility == "verified"), None)
    if bad is not None:
        return UniformVerdict(NO_UNIFORM, reason=(
            f"irreducible module with endpoint {bad.endpoint} and level dimensions {bad.dims} is not thin"),
            checks=checks)
    verdict = solve_uniform(ctx)
    verdict.checks.update(checks)
    return verdict


# ---------------------------------------------------------------------------
# serialization


def solution_to_json(sol: UniformSolution) -> dict:
    return {
        "e_minus": [str(x) for x in sol.U.e_minus],
        "e_plus": [str(x) for x in sol.U.e_plus],
        "f": [str(x) for x in sol.f],
        "policy": sol.policy,
    }


def solution_from_json(data: dict) -> tuple[ParameterMatrixU, tuple[Fraction, ...]]:
    U = ParameterMatrixU(tuple(as_fraction(x) for x in data["e_minus"]),
                         tuple(as_fraction(x) for x in data["e_plus"]))
    return U, tuple(as_fraction(x) for x in data["f"])
