"""Terwilliger algebra of a graph with respect to a base vertex.

Vectors are handled one subconstituent at a time: a level vector is an integer
tuple indexed by the cell Gamma_i(x).  Every T-module is the direct sum of its
levels, so modules are stored as mutually orthogonal, primitive integer bases
per level, and no square roots are ever taken.

Two modes are supported: ``full`` uses A = L + F + R, ``bipartite_quotient``
uses A_f = L + R (the graph with every edge inside a cell deleted).  F is kept
in both modes because local eigenvalues are defined through it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exact import RationalMatrix, char_poly, nullspace, rational_roots
from .graphs import Graph, distance_table, distances

__all__ = [
    "FULL",
    "BIPARTITE_QUOTIENT",
    "NotThin",
    "NotEndpointOne",
    "TerwilligerContext",
    "TModule",
    "CanonicalBasis",
    "ThinnessReport",
    "build_context",
    "closure",
    "split_module",
    "decompose",
    "local_eigenvalue",
    "level_products",
    "tf_isomorphic",
    "canonical_basis",
    "thinness_report",
    "local_eigenvalue_counts",
    "module_vectors",
    "check_action_containment",
]

FULL = "full"
BIPARTITE_QUOTIENT = "bipartite_quotient"
VERIFIED, UNVERIFIED = "verified", "unverified"

# commutant systems larger than this many unknowns are not attempted
COMMUTANT_CAP = 900


class NotThin(ValueError):
    pass


class NotEndpointOne(ValueError):
    pass


Vec = tuple[int, ...]


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _primitive(w: list[int]) -> Vec:
    g = 0
    for x in w:
        g = gcd(g, x)
    if g == 0:
        return tuple(w)
    # fix the sign so the first nonzero entry is positive
    first = next(x for x in w if x)
    if first < 0:
        g = -g
    return tuple(x // g for x in w)


def _residual(w, basis: list[Vec], norms: list[int]) -> Vec:
    """w minus its orthogonal projection onto the span of ``basis``, scaled to
    a primitive integer vector (zero if w lies in the span)."""
    w = list(w)
    for b, bb in zip(basis, norms):
        d = _dot(w, b)
        if d:
            w = [bb * x - d * y for x, y in zip(w, b)]
            w = list(_primitive(w))
    return _primitive(w) if any(w) else tuple(0 for _ in w)


def _integral(vec) -> Vec:
    """Clear denominators of a rational vector."""
    den = 1
    for x in vec:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return _primitive([int(Fraction(x) * den) for x in vec])


@dataclass(frozen=True, eq=False)
class TerwilligerContext:
    graph: Graph
    base: int
    mode: str
    cells: tuple[tuple[int, ...], ...]
    # position of each vertex: (level, index within its cell)
    position: tuple[tuple[int, int], ...]
    down: tuple[tuple[tuple[int, ...], ...], ...]
    flat: tuple[tuple[tuple[int, ...], ...], ...]
    up: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def eccentricity(self) -> int:
        return len(self.cells) - 1

    @property
    def n(self) -> int:
        return self.graph.n

    def size(self, i: int) -> int:
        return len(self.cells[i]) if 0 <= i < len(self.cells) else 0

    # level operators ------------------------------------------------------
    def lower(self, i: int, w) -> Vec:
        """L on a level-i vector, giving a level-(i-1) vector."""
        return tuple(sum(w[j] for j in nb) for nb in self.down[i])

    def raise_(self, i: int, w) -> Vec:
        """R on a level-i vector, giving a level-(i+1) vector."""
        return tuple(sum(w[j] for j in nb) for nb in self.up[i])

    def flatten(self, i: int, w) -> Vec:
        """F on a level-i vector."""
        return tuple(sum(w[j] for j in nb) for nb in self.flat[i])

    @property
    def uses_flat(self) -> bool:
        return self.mode == FULL and any(any(nb for nb in lvl) for lvl in self.flat)

    def moves(self, i: int, w) -> list[tuple[int, Vec]]:
        out = []
        if i > 0:
            out.append((i - 1, self.lower(i, w)))
        if self.uses_flat:
            out.append((i, self.flatten(i, w)))
        if i < self.eccentricity:
            out.append((i + 1, self.raise_(i, w)))
        return out

    def embed(self, i: int, w) -> list[Fraction]:
        full = [Fraction(0)] * self.n
        for j, v in enumerate(self.cells[i]):
            full[v] = Fraction(w[j])
        return full

    # matrices -------------------------------------------------------------
    def dual_idempotent(self, i: int) -> RationalMatrix:
        cell = set(self.cells[i])
        return RationalMatrix.diagonal([1 if v in cell else 0 for v in range(self.n)])

    def _component(self, kind: str) -> RationalMatrix:
        rows = [[0] * self.n for _ in range(self.n)]
        lvl = [self.position[v][0] for v in range(self.n)]
        for u in range(self.n):
            for v in self.graph.adjacency[u]:
                if (kind == "L" and lvl[u] == lvl[v] - 1) or (kind == "F" and lvl[u] == lvl[v]) or \
                        (kind == "R" and lvl[u] == lvl[v] + 1):
                    rows[u][v] = 1
        return RationalMatrix(rows)

    @property
    def L(self) -> RationalMatrix:
        return self._component("L")

    @property
    def F(self) -> RationalMatrix:
        return self._component("F")

    @property
    def R(self) -> RationalMatrix:
        return self._component("R")

    def adjacency(self) -> RationalMatrix:
        """A in full mode, A_f = L + R in the bipartite quotient."""
        base = self.L + self.R
        return base + self.F if self.mode == FULL else base


def build_context(g: Graph, x: int, mode: str = FULL, check: bool = True) -> TerwilligerContext:
    if mode not in (FULL, BIPARTITE_QUOTIENT):
        raise ValueError(f"unknown mode {mode!r}")
    part = distances(g, x)
    cells = part.cells
    position = [None] * g.n
    for i, cell in enumerate(cells):
        for j, v in enumerate(cell):
            position[v] = (i, j)
    down, flat, up = [], [], []
    for i, cell in enumerate(cells):
        def nbrs(target_level, own):
            return tuple(
                tuple(sorted(position[w][1] for w in g.adjacency[y] if position[w][0] == own))
                for y in (cells[target_level] if 0 <= target_level < len(cells) else ())
            )
        down.append(nbrs(i - 1, i))
        flat.append(nbrs(i, i))
        up.append(nbrs(i + 1, i))
    ctx = TerwilligerContext(g, x, mode, cells, tuple(position), tuple(down), tuple(flat), tuple(up))
    if check:
        _check_context(ctx)
    return ctx


def _check_context(ctx: TerwilligerContext) -> None:
    n = ctx.n
    E = [ctx.dual_idempotent(i) for i in range(ctx.eccentricity + 1)]
    total = RationalMatrix.zeros(n, n)
    for e in E:
        total = total + e
    assert total == RationalMatrix.identity(n), "dual idempotents do not sum to I"
    for i in range(len(E)):
        for j in range(len(E)):
            prod = E[i] @ E[j]
            assert prod == (E[i] if i == j else RationalMatrix.zeros(n, n)), "E_i* E_j* != delta_ij E_i*"
    L, F, R = ctx.L, ctx.F, ctx.R
    A = RationalMatrix([[1 if j in ctx.graph.adjacency[i] else 0 for j in range(n)] for i in range(n)])
    assert L + F + R == A, "A != L + F + R"
    assert R == L.transpose(), "R != L^T"
    for i in range(len(E)):
        below = E[i - 1] if i > 0 else RationalMatrix.zeros(n, n)
        assert L @ E[i] == below @ L @ E[i], "L does not lower"
    if ctx.mode == BIPARTITE_QUOTIENT:
        af = ctx.adjacency()
        assert af == A - F
        quotient = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if af[u, v]],
                                    connected=True)
        assert distances(quotient, ctx.base).cells == ctx.cells, "Gamma_f changes the distance partition"


# ---------------------------------------------------------------------------
# modules


@dataclass
class TModule:
    """An invariant subspace given by orthogonal integer bases per level."""

    levels: dict[int, list[Vec]]
    irreducibility: str = UNVERIFIED
    local_eigenvalue: Fraction | None = None
    products: list[Fraction] | None = None
    note: str = ""

    def __post_init__(self):
        self.levels = {i: list(b) for i, b in sorted(self.levels.items()) if b}

    @property
    def dims(self) -> list[int]:
        return [len(self.levels.get(i, ())) for i in range(self.endpoint, self.endpoint + self.diameter + 1)]

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.levels.values())

    @property
    def endpoint(self) -> int:
        return min(self.levels)

    @property
    def diameter(self) -> int:
        return max(self.levels) - min(self.levels)

    @property
    def thin(self) -> bool:
        return all(len(b) <= 1 for b in self.levels.values())

    def vectors(self):
        for i, basis in self.levels.items():
            for v in basis:
                yield i, v

    def summary(self) -> dict:
        return {
            "endpoint": self.endpoint,
            "diameter": self.diameter,
            "dims": self.dims,
            "thin": self.thin,
            "local_eigenvalue": None if self.local_eigenvalue is None else str(self.local_eigenvalue),
            "level_products": None if self.products is None else [str(p) for p in self.products],
            "irreducibility": self.irreducibility,
        }


def closure(ctx: TerwilligerContext, seeds) -> TModule:
    """Smallest T-module containing the given (level, vector) pairs."""
    basis: dict[int, list[Vec]] = {}
    norms: dict[int, list[int]] = {}
    queue = list(seeds)
    while queue:
        i, w = queue.pop()
        r = _residual(w, basis.get(i, []), norms.get(i, []))
        if not any(r):
            continue
        basis.setdefault(i, []).append(r)
        norms.setdefault(i, []).append(_dot(r, r))
        queue.extend(ctx.moves(i, r))
    return TModule(basis)


def _is_invariant(ctx: TerwilligerContext, W: TModule) -> bool:
    norms = {i: [_dot(b, b) for b in bs] for i, bs in W.levels.items()}
    for i, v in W.vectors():
        for j, w in ctx.moves(i, v):
            if any(w) and any(_residual(w, W.levels.get(j, []), norms.get(j, []))):
                return False
    return True


def _complement_in(W: TModule, sub: TModule) -> TModule:
    out = {}
    for i, basis in W.levels.items():
        have = list(sub.levels.get(i, []))
        hn = [_dot(b, b) for b in have]
        rest = []
        for v in basis:
            r = _residual(v, have, hn)
            if any(r):
                have.append(r)
                hn.append(_dot(r, r))
                rest.append(r)
        if rest:
            out[i] = rest
    return TModule(out)


def _regenerates(ctx: TerwilligerContext, W: TModule) -> TModule | None:
    """None if every level vector regenerates W, else a proper submodule."""
    for i, v in W.vectors():
        sub = closure(ctx, [(i, v)])
        if sub.dimension < W.dimension:
            return sub
    return None


def _coords(v: Vec, basis: list[Vec], norms: list[int]) -> list[Fraction]:
    return [Fraction(_dot(v, b), nb) for b, nb in zip(basis, norms)]


def _commutant(ctx: TerwilligerContext, W: TModule) -> list[dict[int, list[list[Fraction]]]] | None:
    """Basis of the level-preserving maps W -> W commuting with L, R (and F)."""
    levels = sorted(W.levels)
    dims = {i: len(W.levels[i]) for i in levels}
    if sum(d * d for d in dims.values()) > COMMUTANT_CAP:
        return None
    offset, pos = {}, 0
    for i in levels:
        offset[i] = pos
        pos += dims[i] ** 2
    nvars = pos
    norms = {i: [_dot(b, b) for b in W.levels[i]] for i in levels}

    def var(i, a, b):
        return offset[i] + a * dims[i] + b

    # matrix of each operator block (level i -> level j) in the level bases
    blocks: dict[tuple[int, int], list[list[Fraction]]] = {}
    for i in levels:
        for c, v in enumerate(W.levels[i]):
            for j, w in ctx.moves(i, v):
                if j not in dims:
                    continue
                col = _coords(w, W.levels[j], norms[j])
                M = blocks.setdefault((i, j), [[Fraction(0)] * dims[i] for _ in range(dims[j])])
                for a in range(dims[j]):
                    M[a][c] = col[a]
    # X_j M - M X_i = 0 for every block
    rows = []
    for (i, j), M in blocks.items():
        for a in range(dims[j]):
            for c in range(dims[i]):
                row = [Fraction(0)] * nvars
                for b in range(dims[j]):
                    if M[b][c]:
                        row[var(j, a, b)] += M[b][c]
                for b in range(dims[i]):
                    if M[a][b]:
                        row[var(i, b, c)] -= M[a][b]
                if any(row):
                    rows.append(row)
    if not rows:
        rows = [[Fraction(0)] * nvars]
    sols = nullspace(RationalMatrix(rows))
    out = []
    for s in sols:
        out.append({i: [[s[var(i, a, b)] for b in range(dims[i])] for a in range(dims[i])] for i in levels})
    return out


def _split_by_commutant(ctx: TerwilligerContext, W: TModule, basis) -> TModule | None:
    for X in basis:
        scalars = {X[i][a][b] for i in X for a in range(len(X[i])) for b in range(len(X[i]))
                   if a == b}
        offdiag = any(X[i][a][b] for i in X for a in range(len(X[i])) for b in range(len(X[i])) if a != b)
        if len(scalars) == 1 and not offdiag:
            continue
        for i in sorted(X):
            roots = rational_roots(char_poly(RationalMatrix(X[i]))).roots
            for lam, _ in roots:
                kernel = {}
                for j in X:
                    m = RationalMatrix(X[j]) - RationalMatrix.identity(len(X[j])).scale(lam)
                    vecs = []
                    for coeffs in nullspace(m):
                        comb = [sum(Fraction(c) * b[t] for c, b in zip(coeffs, W.levels[j]))
                                for t in range(ctx.size(j))]
                        vecs.append(_integral(comb))
                    if vecs:
                        kernel[j] = vecs
                sub = closure(ctx, [(j, v) for j, vs in kernel.items() for v in vs])
                if 0 < sub.dimension < W.dimension:
                    return sub
    return None


def split_module(ctx: TerwilligerContext, W: TModule) -> list[TModule]:
    """Split an invariant subspace into irreducible pieces where this can be
    certified.

    Thin pieces are irreducible exactly when each level vector regenerates
    the whole piece.  Non-thin pieces are irreducible when their commutant is
    one-dimensional, and are otherwise split along a rational eigenspace of a
    commutant element; pieces that resist both are left unverified.
    """
    if W.thin:
        sub = _regenerates(ctx, W)
        if sub is None:
            W.irreducibility = VERIFIED
            return [W]
        return split_module(ctx, sub) + split_module(ctx, _complement_in(W, sub))
    basis = _commutant(ctx, W)
    if basis is None:
        W.note = "commutant too large to compute"
        return [W]
    if len(basis) == 1:
        W.irreducibility = VERIFIED
        return [W]
    sub = _split_by_commutant(ctx, W, basis)
    if sub is None:
        W.note = f"commutant has dimension {len(basis)} but no rational eigenspace splits it"
        return [W]
    return split_module(ctx, sub) + split_module(ctx, _complement_in(W, sub))


def _level_operators(ctx: TerwilligerContext, r: int):
    """Deterministic self-adjoint maps of level r to itself, in refinement order."""
    def lr(k):
        def op(w):
            for s in range(k):
                w = ctx.raise_(r + s, w)
            for s in range(k, 0, -1):
                w = ctx.lower(r + s, w)
            return w
        return op

    def lfr(k):
        def op(w):
            for s in range(k):
                w = ctx.raise_(r + s, w)
            w = ctx.flatten(r + k, w)
            for s in range(k, 0, -1):
                w = ctx.lower(r + s, w)
            return w
        return op

    ops = []
    if ctx.mode == FULL:
        ops.append(("F", lambda w: ctx.flatten(r, w)))
    for k in range(1, ctx.eccentricity - r + 1):
        ops.append((f"L^{k}R^{k}", lr(k)))
        if ctx.mode == FULL:
            ops.append((f"L^{k}FR^{k}", lfr(k)))
    return ops


def _refine(ctx: TerwilligerContext, r: int, block: list[Vec]) -> list[Vec]:
    """Shrink a level-r block to a common eigenspace of the level operators,
    using each operator only while the current block is invariant under it."""
    for _, op in _level_operators(ctx, r):
        if len(block) <= 1:
            break
        norms = [_dot(b, b) for b in block]
        images = [op(b) for b in block]
        C = [[Fraction(_dot(img, bi), ni) for img in images] for bi, ni in zip(block, norms)]
        invariant = all(
            not any(_residual(img, block, norms)) for img in images
        )
        if not invariant:
            continue
        roots = rational_roots(char_poly(RationalMatrix(C))).roots
        if not roots or (len(roots) == 1 and roots[0][1] == len(block)):
            continue
        lam = roots[0][0]
        m = RationalMatrix(C) - RationalMatrix.identity(len(block)).scale(lam)
        new = []
        nn = []
        for coeffs in nullspace(m):
            v = _integral([sum(Fraction(c) * b[t] for c, b in zip(coeffs, block)) for t in range(len(block[0]))])
            v = _residual(v, new, nn)
            if any(v):
                new.append(v)
                nn.append(_dot(v, v))
        block = new
    return block


def _complement_basis(size: int, used: list[Vec], norms: list[int]) -> list[Vec]:
    out, on = [], []
    for j in range(size):
        e = tuple(1 if t == j else 0 for t in range(size))
        r = _residual(e, used + out, norms + on)
        if any(r):
            out.append(r)
            on.append(_dot(r, r))
        if len(used) + len(out) == size:
            break
    return out


def decompose(ctx: TerwilligerContext) -> list[TModule]:
    """Orthogonal decomposition of the standard module into T-modules.

    The first module is the closure of the base vertex.  Afterwards the
    lowest level r that is not yet exhausted is refined to a common
    eigenspace of self-adjoint level operators (at r = 1 in full mode this
    begins with the local adjacency action), the first vector of that block
    is closed up, and the closure is split where it is not irreducible.
    """
    used: dict[int, list[Vec]] = {i: [] for i in range(ctx.eccentricity + 1)}
    unorm: dict[int, list[int]] = {i: [] for i in range(ctx.eccentricity + 1)}
    modules: list[TModule] = []

    def take(W: TModule):
        for piece in split_module(ctx, W):
            _annotate(ctx, piece)
            modules.append(piece)
            for i, v in piece.vectors():
                used[i].append(v)
                unorm[i].append(_dot(v, v))

    take(closure(ctx, [(0, (1,))]))
    while True:
        r = next((i for i in range(ctx.eccentricity + 1) if len(used[i]) < ctx.size(i)), None)
        if r is None:
            break
        block = _complement_basis(ctx.size(r), used[r], unorm[r])
        block = _refine(ctx, r, block)
        take(closure(ctx, [(r, block[0])]))
    assert sum(W.dimension for W in modules) == ctx.n, "decomposition is incomplete"
    return modules


def _annotate(ctx: TerwilligerContext, W: TModule) -> None:
    if W.thin:
        W.products = level_products(ctx, W)
        if W.endpoint == 1:
            try:
                W.local_eigenvalue = local_eigenvalue(ctx, W)
            except ValueError:
                W.local_eigenvalue = None


def _line_scalar(w: Vec, v: Vec) -> Fraction | None:
    """The c with w = c v, or None when w is not a multiple of v."""
    nv = _dot(v, v)
    c = Fraction(_dot(w, v), nv)
    if any(Fraction(a) != c * b for a, b in zip(w, v)):
        return None
    return c


def local_eigenvalue(ctx: TerwilligerContext, W: TModule) -> Fraction:
    """Eigenvalue of E_1* A E_1* on the line E_1* W."""
    if W.endpoint != 1:
        raise NotEndpointOne(f"module has endpoint {W.endpoint}")
    if not W.thin:
        raise NotThin("local eigenvalue needs a thin module")
    v = W.levels[1][0]
    eta = _line_scalar(ctx.flatten(1, v), v)
    if eta is None:
        raise ValueError("first level is not an eigenvector of the local adjacency action")
    return eta


def level_products(ctx: TerwilligerContext, W: TModule) -> list[Fraction]:
    """pi_i: the scalar by which LR acts on level r+i of a thin module."""
    if not W.thin:
        raise NotThin("level products need a thin module")
    r, d = W.endpoint, W.diameter
    out = []
    for i in range(d):
        lvl = r + i
        v = W.levels[lvl][0]
        w = ctx.lower(lvl + 1, ctx.raise_(lvl, v))
        pi = _line_scalar(w, v)
        assert pi is not None, "LR does not preserve a level line of a module"
        out.append(pi)
    return out


def tf_isomorphic(ctx: TerwilligerContext, W: TModule, W2: TModule) -> bool:
    if not (W.thin and W2.thin):
        raise NotThin("isomorphism test needs thin modules")
    return (W.endpoint, W.diameter) == (W2.endpoint, W2.diameter) and \
        level_products(ctx, W) == level_products(ctx, W2)


@dataclass(frozen=True)
class CanonicalBasis:
    """w_i = E*_{i+1} A_i v with R w_i = gamma_i w_{i+1} and L w_{i+1} = beta_{i+1} w_i."""

    vectors: tuple[Vec, ...]
    beta: tuple[Fraction, ...]
    gamma: tuple[Fraction, ...]
    diameter: int
    note: str = ""


def canonical_basis(ctx: TerwilligerContext, W: TModule, v: Vec | None = None, table=None) -> CanonicalBasis:
    if W.endpoint != 1:
        raise NotEndpointOne(f"module has endpoint {W.endpoint}")
    if not W.thin:
        raise NotThin("canonical basis needs a thin module")
    v = v if v is not None else W.levels[1][0]
    if _line_scalar(v, W.levels[1][0]) is None or not any(v):
        raise ValueError("v must be a nonzero vector of E_1* W")
    table = table or distance_table(ctx.graph)
    full_v = ctx.embed(1, v)
    support = [y for y in range(ctx.n) if full_v[y]]
    vectors: list[Vec] = []
    note = ""
    for i in range(W.diameter + 1):
        lvl = 1 + i
        if lvl > ctx.eccentricity:
            break
        w = tuple(int(sum(full_v[z] for z in support if table[y][z] == i)) for y in ctx.cells[lvl])
        if not any(w) or lvl not in W.levels or _line_scalar(w, W.levels[lvl][0]) is None:
            note = f"E*_{lvl} A_{i} v leaves the module or vanishes; actual diameter {i - 1}"
            break
        vectors.append(w)
    gamma, beta = [], []
    for i in range(len(vectors) - 1):
        gamma.append(_line_scalar(ctx.raise_(1 + i, vectors[i]), vectors[i + 1]))
        beta.append(_line_scalar(ctx.lower(2 + i, vectors[i + 1]), vectors[i]))
    return CanonicalBasis(tuple(vectors), tuple(beta), tuple(gamma), len(vectors) - 1, note)


@dataclass
class ThinnessReport:
    flags: list[bool] = field(default_factory=list)
    modules: list[TModule] = field(default_factory=list)

    @property
    def all_thin(self) -> bool:
        return all(self.flags)

    def first_non_thin(self) -> TModule | None:
        return next((W for W, f in zip(self.modules, self.flags) if not f), None)


def thinness_report(ctx: TerwilligerContext, modules: list[TModule] | None = None) -> ThinnessReport:
    modules = decompose(ctx) if modules is None else modules
    return ThinnessReport([W.thin for W in modules], modules)


def local_eigenvalue_counts(modules: list[TModule]) -> dict[Fraction, int]:
    """How many endpoint-1 thin modules carry each local eigenvalue."""
    out: dict[Fraction, int] = {}
    for W in modules:
        if W.endpoint == 1 and W.local_eigenvalue is not None:
            out[W.local_eigenvalue] = out.get(W.local_eigenvalue, 0) + 1
    return dict(sorted(out.items(), reverse=True))


def module_vectors(ctx: TerwilligerContext, W: TModule) -> list[list[Fraction]]:
    """Basis of W as full-length vectors."""
    return [ctx.embed(i, v) for i, v in W.vectors()]


def check_action_containment(ctx: TerwilligerContext, W: TModule) -> bool:
    """L, F, R move each level vector exactly one level down, across, up,
    and the images stay inside W."""
    return _is_invariant(ctx, W)
