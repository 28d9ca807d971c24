"""Small concrete graphs: generators, edge-list ingestion, distances and
distance-regularity detection.

Vertices are integers 0..n-1. Generators keep their natural labels in
``Graph.labels`` for debugging only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .exact import RationalMatrix, char_poly, isolate_real_roots, rank, rational_roots, squarefree_decomposition
from .params import IntersectionArray

__all__ = [
    "ParseError",
    "NotSimple",
    "Disconnected",
    "Graph",
    "DistancePartition",
    "NotDistanceRegular",
    "from_edge_list",
    "to_edge_list",
    "hypercube",
    "folded_hypercube",
    "hamming",
    "johnson",
    "cycle",
    "grassmann_q",
    "petersen",
    "complete",
    "path",
    "complete_bipartite",
    "from_spec",
    "distances",
    "distance_table",
    "is_distance_regular",
    "intersection_numbers",
    "local_graph",
    "distance_matrix",
    "adjacency_matrix",
    "concrete_spectrum",
]


class ParseError(ValueError):
    pass


class NotSimple(ValueError):
    pass


class Disconnected(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[frozenset[int], ...]
    name: str = ""
    labels: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must list one neighbourhood per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise NotSimple(f"loop at vertex {v}")
            for w in nbrs:
                if not 0 <= w < self.n or v not in self.adjacency[w]:
                    raise NotSimple(f"edge {v}-{w} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges, name: str = "", labels=None, connected: bool = True) -> "Graph":
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise NotSimple(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"edge {u}-{v} out of range for n = {n}")
            if v in nbrs[u]:
                raise NotSimple(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        g = cls(n, tuple(frozenset(s) for s in nbrs), name, tuple(labels) if labels is not None else None)
        if connected and not g.is_connected():
            raise Disconnected(f"{name or 'graph'} is not connected")
        return g

    @classmethod
    def from_relation(cls, items, adjacent, name: str = "", connected: bool = True) -> "Graph":
        items = list(items)
        edges = [(i, j) for i, j in combinations(range(len(items)), 2) if adjacent(items[i], items[j])]
        return cls.from_edges(len(items), edges, name, items, connected)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_bfs(self, 0)) == self.n

    def is_regular(self) -> bool:
        return len({len(a) for a in self.adjacency}) <= 1

    def is_bipartite(self) -> bool:
        colour = {}
        for s in range(self.n):
            if s in colour:
                continue
            colour[s] = 0
            todo = deque([s])
            while todo:
                v = todo.popleft()
                for w in self.adjacency[v]:
                    if w not in colour:
                        colour[w] = 1 - colour[v]
                        todo.append(w)
                    elif colour[w] == colour[v]:
                        return False
        return True

    def triangle_free(self) -> bool:
        return all(not (self.adjacency[u] & self.adjacency[v]) for u, v in self.edges())


def _bfs(g: Graph, x: int) -> dict[int, int]:
    dist = {x: 0}
    todo = deque([x])
    while todo:
        v = todo.popleft()
        for w in g.adjacency[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                todo.append(w)
    return dist


# ---------------------------------------------------------------------------
# edge lists


def from_edge_list(text: str, name: str = "") -> Graph:
    """Parse ``n`` on the first data line, then one ``u v`` pair per line."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty edge list")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}") from None
    if n < 1:
        raise ParseError("vertex count must be positive")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}") from None
    return Graph.from_edges(n, edges, name)


def to_edge_list(g: Graph) -> str:
    head = [f"# {g.name}"] if g.name else []
    return "\n".join(head + [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# ---------------------------------------------------------------------------
# generators


def hypercube(D: int) -> Graph:
    if D < 1:
        raise ValueError("hypercube needs D >= 1")
    n = 1 << D
    edges = [(v, v ^ (1 << i)) for v in range(n) for i in range(D) if v < v ^ (1 << i)]
    return Graph.from_edges(n, edges, f"hypercube({D})")


def folded_hypercube(m: int) -> Graph:
    """Q_m with antipodal vertices identified: Q_{m-1} plus complement edges."""
    if m < 2:
        raise ValueError("folded_hypercube needs m >= 2")
    D = m - 1
    n = 1 << D
    full = n - 1
    edges = {(min(v, v ^ (1 << i)), max(v, v ^ (1 << i))) for v in range(n) for i in range(D)}
    edges |= {(min(v, v ^ full), max(v, v ^ full)) for v in range(n)}
    if m == 2:
        edges = {e for e in edges if e[0] != e[1]}
    return Graph.from_edges(n, sorted(edges), f"folded_hypercube({m})")


def hamming(D: int, n: int) -> Graph:
    if D < 1 or n < 2:
        raise ValueError("hamming needs D >= 1 and n >= 2")
    words = list(product(range(n), repeat=D))
    return Graph.from_relation(words, lambda a, b: sum(x != y for x, y in zip(a, b)) == 1, f"hamming({D},{n})")


def johnson(n: int, d: int) -> Graph:
    if not 1 <= d < n:
        raise ValueError("johnson needs 1 <= d < n")
    sets = [frozenset(c) for c in combinations(range(n), d)]
    return Graph.from_relation(sets, lambda a, b: len(a & b) == d - 1, f"johnson({n},{d})")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"cycle({n})")


def complete(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)), f"complete({n})")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"path({n})")


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)], f"complete_bipartite({m},{n})")


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets adjacent when disjoint."""
    sets = [frozenset(c) for c in combinations(range(5), 2)]
    g = Graph.from_relation(sets, lambda a, b: not (a & b), "petersen")
    return g


def _rank_mod(rows: list[list[int]], p: int) -> int:
    rows = [r[:] for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _rref_subspaces(n: int, d: int, q: int) -> list[tuple[tuple[int, ...], ...]]:
    """All d x n reduced row echelon matrices of rank d over GF(q)."""
    out = []
    for pivots in combinations(range(n), d):
        free = [(r, c) for r in range(d) for c in range(n) if c > pivots[r] and c not in pivots]
        for vals in product(range(q), repeat=len(free)):
            m = [[0] * n for _ in range(d)]
            for r, c in enumerate(pivots):
                m[r][c] = 1
            for (r, c), v in zip(free, vals):
                m[r][c] = v
            out.append(tuple(tuple(row) for row in m))
    return out


def grassmann_q(n: int, d: int, q: int) -> Graph:
    """d-subspaces of GF(q)^n, adjacent when they meet in dimension d-1."""
    if q not in (2, 3):
        raise ValueError("grassmann_q supports field orders 2 and 3")
    if not (1 <= d < n <= 5):
        raise ValueError("grassmann_q needs 1 <= d < n <= 5")
    spaces = _rref_subspaces(n, d, q)
    return Graph.from_relation(
        spaces, lambda a, b: _rank_mod([list(r) for r in a + b], q) == d + 1, f"grassmann_q({n},{d},{q})"
    )


_GENERATORS = {
    "hypercube": hypercube,
    "folded_hypercube": folded_hypercube,
    "hamming": hamming,
    "johnson": johnson,
    "cycle": cycle,
    "grassmann_q": grassmann_q,
    "petersen": petersen,
    "complete": complete,
    "path": path,
    "complete_bipartite": complete_bipartite,
}


def from_spec(spec: str) -> Graph:
    """Build a generated graph from ``name:arg,arg`` such as ``hypercube:4``."""
    name, _, args = spec.partition(":")
    if name not in _GENERATORS:
        raise ValueError(f"unknown generator {name!r}; known: {', '.join(sorted(_GENERATORS))}")
    try:
        ints = [int(a) for a in args.split(",") if a.strip()]
    except ValueError:
        raise ValueError(f"generator arguments must be integers: {spec!r}") from None
    return _GENERATORS[name](*ints)


# ---------------------------------------------------------------------------
# distances


@dataclass(frozen=True)
class DistancePartition:
    base: int
    dist: tuple[int, ...]
    cells: tuple[tuple[int, ...], ...]

    @property
    def eccentricity(self) -> int:
        return len(self.cells) - 1

    def cell(self, i: int) -> tuple[int, ...]:
        return self.cells[i] if 0 <= i < len(self.cells) else ()

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]


def distances(g: Graph, x: int) -> DistancePartition:
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    d = _bfs(g, x)
    if len(d) != g.n:
        raise Disconnected("distance partition needs a connected graph")
    ecc = max(d.values())
    cells = [[] for _ in range(ecc + 1)]
    for v in range(g.n):
        cells[d[v]].append(v)
    return DistancePartition(x, tuple(d[v] for v in range(g.n)), tuple(tuple(c) for c in cells))


def distance_table(g: Graph) -> list[tuple[int, ...]]:
    return [distances(g, x).dist for x in range(g.n)]


@dataclass(frozen=True)
class NotDistanceRegular:
    """Two vertex pairs at the same distance that disagree on a count."""

    quantity: str
    first: tuple[int, int]
    second: tuple[int, int]
    values: tuple[int, int]

    def __str__(self) -> str:
        return (f"{self.quantity} is {self.values[0]} at pair {self.first} "
                f"but {self.values[1]} at pair {self.second}")


def is_distance_regular(g: Graph, full: bool = False) -> IntersectionArray | NotDistanceRegular:
    """Check constancy of c_i, a_i, b_i over all pairs (x, y).

    With ``full`` the definition is checked directly: every p^h_ij is
    constant over pairs at distance h.
    """
    table = distance_table(g)
    seen: dict[tuple[str, int], tuple[int, tuple[int, int]]] = {}
    for x in range(g.n):
        dx = table[x]
        for y in range(g.n):
            i = dx[y]
            counts = {"c": 0, "a": 0, "b": 0}
            for z in g.adjacency[y]:
                step = dx[z] - i
                counts["c" if step < 0 else "a" if step == 0 else "b"] += 1
            for key, val in counts.items():
                prev = seen.setdefault((key, i), (val, (x, y)))
                if prev[0] != val:
                    return NotDistanceRegular(f"{key}_{i}", prev[1], (x, y), (prev[0], val))
    D = max(i for _, i in seen)
    ia = IntersectionArray.from_lists([seen[("b", i)][0] for i in range(D)],
                                      [seen[("c", i)][0] for i in range(1, D + 1)])
    if full:
        res = intersection_numbers(g, table)
        if isinstance(res, NotDistanceRegular):
            return res
    return ia


def intersection_numbers(g: Graph, table=None) -> list[list[list[int]]] | NotDistanceRegular:
    """Brute-force p^h_ij = |Gamma_i(x) & Gamma_j(y)| for d(x,y) = h, as t[h][i][j]."""
    table = table or distance_table(g)
    D = max(max(r) for r in table)
    t: list[list[list[int | None]]] = [[[None] * (D + 1) for _ in range(D + 1)] for _ in range(D + 1)]
    where: dict[int, tuple[int, int]] = {}
    for x in range(g.n):
        dx = table[x]
        for y in range(g.n):
            h = dx[y]
            dy = table[y]
            counts = [[0] * (D + 1) for _ in range(D + 1)]
            for z in range(g.n):
                counts[dx[z]][dy[z]] += 1
            if t[h][0][0] is None:
                t[h] = counts
                where[h] = (x, y)
            elif counts != t[h]:
                for i in range(D + 1):
                    for j in range(D + 1):
                        if counts[i][j] != t[h][i][j]:
                            return NotDistanceRegular(f"p^{h}_{{{i},{j}}}", where[h], (x, y),
                                                      (t[h][i][j], counts[i][j]))
    return t


def local_graph(g: Graph, x: int) -> Graph:
    """Induced subgraph on the neighbours of x (need not be connected)."""
    nbrs = sorted(g.adjacency[x])
    index = {v: i for i, v in enumerate(nbrs)}
    edges = [(index[u], index[v]) for u in nbrs for v in g.adjacency[u] if v in index and u < v]
    return Graph.from_edges(len(nbrs), edges, f"local graph of {g.name or 'graph'} at {x}", nbrs, connected=False)


def adjacency_matrix(g: Graph) -> RationalMatrix:
    one, zero = Fraction(1), Fraction(0)
    return RationalMatrix([[one if j in g.adjacency[i] else zero for j in range(g.n)] for i in range(g.n)])


def distance_matrix(g: Graph, i: int, table=None) -> RationalMatrix:
    """0/1 matrix A_i with (y, z) entry 1 iff d(y, z) = i."""
    table = table or distance_table(g)
    diam = max(max(r) for r in table)
    if not 0 <= i <= diam:
        raise IndexError(f"distance index {i} outside 0..{diam}")
    one, zero = Fraction(1), Fraction(0)
    return RationalMatrix([[one if table[y][z] == i else zero for z in range(g.n)] for y in range(g.n)])


def concrete_spectrum(g: Graph) -> list[tuple[object, int]]:
    """Adjacency eigenvalues with multiplicities, decreasing.

    Rational eigenvalues carry the rank of their eigenspace; irrational ones
    are ``(factor, lo, hi)`` with the exponent of their squarefree factor.
    """
    A = adjacency_matrix(g)
    report = rational_roots(char_poly(A))
    out: list[tuple[object, int]] = []
    for theta, alg in report.roots:
        geo = g.n - rank(A - RationalMatrix.identity(g.n).scale(theta))
        # A is symmetric, so the two multiplicities agree
        assert geo == alg, (theta, geo, alg)
        out.append((theta, geo))
    if report.remainder.degree >= 1:
        for factor, e in squarefree_decomposition(report.remainder):
            for lo, hi in isolate_real_roots(factor):
                out.append(((factor, lo, hi), e))
    out.sort(key=lambda t: (t[0], 1) if isinstance(t[0], Fraction) else (t[0][2], 0), reverse=True)
    return out
