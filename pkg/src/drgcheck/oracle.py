"""Brute-force ground truth on small named graphs."""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from . import poly
from .algebraic import real_roots
from .params import IntersectionArray
from .spectrum import Spectrum

MAX_VERTICES = 256
MAX_CLIQUE_VERTICES = 64


@dataclass(frozen=True)
class SmallGraph:
    n: int
    adj: Tuple[Tuple[bool, ...], ...]
    name: str = ""

    def __post_init__(self):
        if self.n > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported")
        if len(self.adj) != self.n or any(len(row) != self.n for row in self.adj):
            raise ValueError("adjacency matrix must be n x n")
        for i in range(self.n):
            if self.adj[i][i]:
                raise ValueError(f"loop at vertex {i}")
            for j in range(i):
                if self.adj[i][j] != self.adj[j][i]:
                    raise ValueError(f"asymmetric adjacency at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges, name: str = "") -> "SmallGraph":
        m = [[False] * n for _ in range(n)]
        for u, v in edges:
            m[u][v] = m[v][u] = True
        return cls(n, tuple(tuple(r) for r in m), name)

    @classmethod
    def from_relation(cls, vertices, adjacent, name: str = "") -> "SmallGraph":
        vs = list(vertices)
        edges = [(i, j) for i, j in itertools.combinations(range(len(vs)), 2) if adjacent(vs[i], vs[j])]
        return cls.from_edges(len(vs), edges, name)

    def neighbors(self, v: int) -> List[int]:
        return [u for u in range(self.n) if self.adj[v][u]]

    def degrees(self) -> List[int]:
        return [sum(row) for row in self.adj]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def complement(self) -> "SmallGraph":
        return SmallGraph(self.n, tuple(tuple(i != j and not self.adj[i][j] for j in range(self.n))
                                        for i in range(self.n)), f"complement({self.name})")


def complete(n: int) -> SmallGraph:
    return SmallGraph.from_relation(range(n), lambda x, y: True, f"complete({n})")


def cycle(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"cycle({n})")


def petersen() -> SmallGraph:
    """Kneser graph K(5,2)."""
    pairs = [frozenset(p) for p in itertools.combinations(range(5), 2)]
    return SmallGraph.from_relation(pairs, lambda x, y: not (x & y), "petersen")


def cube(d: int) -> SmallGraph:
    return SmallGraph.from_relation(range(1 << d), lambda x, y: bin(x ^ y).count("1") == 1, f"cube({d})")


def triangular(n: int) -> SmallGraph:
    """Johnson graph J(n,2): 2-subsets, adjacent when they meet."""
    pairs = [frozenset(p) for p in itertools.combinations(range(n), 2)]
    return SmallGraph.from_relation(pairs, lambda x, y: len(x & y) == 1, f"triangular({n})")


def cocktail(n: int) -> SmallGraph:
    """Cocktail party graph: ``K_{2n}`` minus a perfect matching."""
    return SmallGraph.from_relation(range(2 * n), lambda x, y: x // 2 != y // 2, f"cocktail({n})")


FAMILIES = {
    "complete": complete,
    "cycle": cycle,
    "cube": cube,
    "triangular": triangular,
    "cocktail": cocktail,
}

# Named instances used by the CLI listing and the equivalence suite.
STANDARD_GRAPHS = ("petersen", "cube(3)", "triangular(5)", "cycle(5)", "complete(5)", "cocktail(3)")

_NAME = re.compile(r"^\s*([a-z]+)\s*(?:\(\s*(\d+)\s*\))?\s*$")


def build_named_graph(name: str) -> SmallGraph:
    """``petersen`` or ``family(n)`` for family in complete, cycle, cube, triangular, cocktail."""
    m = _NAME.match(name)
    if not m:
        raise ValueError(f"unknown graph {name!r}")
    family, arg = m.group(1), m.group(2)
    if family == "petersen" and arg is None:
        return petersen()
    if family in FAMILIES and arg is not None:
        return FAMILIES[family](int(arg))
    raise ValueError(f"unknown graph {name!r}")


@dataclass(frozen=True)
class DistanceData:
    dist: Tuple[Tuple[int, ...], ...]
    diameter: int


def distances(g: SmallGraph) -> DistanceData:
    rows = []
    nbrs = [g.neighbors(v) for v in range(g.n)]
    for s in range(g.n):
        d = [-1] * g.n
        d[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in nbrs[u]:
                if d[w] < 0:
                    d[w] = d[u] + 1
                    q.append(w)
        if -1 in d:
            raise ValueError(f"graph {g.name or ''} is disconnected")
        rows.append(tuple(d))
    return DistanceData(tuple(rows), max(max(r) for r in rows))


def pair_counts(g: SmallGraph, data: DistanceData, x: int, y: int) -> Tuple[int, int, int]:
    """``(c_i(x,y), a_i(x,y), b_i(x,y))`` for ``i = d(x,y)``."""
    i = data.dist[x][y]
    c = a = b = 0
    for z in g.neighbors(y):
        dz = data.dist[x][z]
        if dz == i - 1:
            c += 1
        elif dz == i:
            a += 1
        else:
            b += 1
    return c, a, b


@dataclass(frozen=True)
class NotDistanceRegular:
    x: int
    y: int
    distance: int
    reason: str


def extract_intersection_array(g: SmallGraph) -> Union[IntersectionArray, NotDistanceRegular]:
    """Intersection array by checking every ordered pair; raises on disconnected input."""
    data = distances(g)
    seen: Dict[int, Tuple[Tuple[int, int, int], Tuple[int, int]]] = {}
    for x in range(g.n):
        for y in range(g.n):
            i = data.dist[x][y]
            cab = pair_counts(g, data, x, y)
            if i not in seen:
                seen[i] = (cab, (x, y))
            elif seen[i][0] != cab:
                (px, py) = seen[i][1]
                return NotDistanceRegular(x, y, i, f"(c,a,b) = {cab} at ({x},{y}) but {seen[i][0]} at ({px},{py})")
    D = data.diameter
    if D == 0:
        return NotDistanceRegular(0, 0, 0, "single vertex")
    b = tuple(seen[i][0][2] for i in range(D))
    c = tuple(seen[i][0][0] for i in range(1, D + 1))
    return IntersectionArray(b, c)


def _bareiss_charpoly(mat: List[List[int]]) -> List[int]:
    """``det(x I - A)`` by fraction-free (Bareiss) elimination over ``Z[x]``.

    Leading principal minors of ``x I - A`` are monic, so no pivoting is
    needed and each Bareiss step divides exactly by a monic polynomial.
    """
    n = len(mat)
    if n == 0:
        return [1]
    M = [[([-mat[i][j], 1] if i == j else poly.trim([-mat[i][j]])) for j in range(n)] for i in range(n)]
    prev = [1]
    for k in range(n - 1):
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = poly.sub(poly.mul(pivot, M[i][j]), poly.mul(M[i][k], M[k][j]))
                M[i][j] = [int(x) for x in poly.exact_div(num, prev)] if num else []
        prev = pivot
    return [int(x) for x in M[n - 1][n - 1]]


def characteristic_polynomial(g: SmallGraph) -> List[int]:
    return _bareiss_charpoly([[int(x) for x in row] for row in g.adj])


def brute_spectrum(g: SmallGraph) -> Spectrum:
    """Exact adjacency spectrum with multiplicities from squarefree factorization."""
    p = characteristic_polynomial(g)
    entries = []
    for factor, mult in poly.squarefree_decomposition(p):
        for root in real_roots(factor):
            entries.append((root, mult))
    entries.sort(key=lambda e: e[0], reverse=True)
    return Spectrum(tuple(entries))


def local_graph(g: SmallGraph, v: int) -> SmallGraph:
    nb = g.neighbors(v)
    return SmallGraph(len(nb), tuple(tuple(g.adj[a][b] for b in nb) for a in nb), f"local({g.name},{v})")


def _max_clique_size(g: SmallGraph) -> int:
    nbr = [sum(1 << u for u in range(g.n) if g.adj[v][u]) for v in range(g.n)]
    best = 0

    def expand(size: int, cand: int, excl: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        pivot_pool = cand | excl
        pivot = max((u for u in range(g.n) if pivot_pool >> u & 1), key=lambda u: bin(cand & nbr[u]).count("1"))
        rest = cand & ~nbr[pivot]
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            expand(size + 1, cand & nbr[v], excl & nbr[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return best


def max_clique_and_coclique(g: SmallGraph) -> Tuple[int, int]:
    """Exact clique and coclique numbers (Bron-Kerbosch with pivoting and a size cut)."""
    if g.n > MAX_CLIQUE_VERTICES:
        raise ValueError(f"clique search capped at {MAX_CLIQUE_VERTICES} vertices")
    return _max_clique_size(g), _max_clique_size(g.complement())


def max_nonadjacent_mu(g: SmallGraph) -> int:
    """Largest number of common neighbours over distinct non-adjacent pairs (0 if none)."""
    best = 0
    for x, y in itertools.combinations(range(g.n), 2):
        if not g.adj[x][y]:
            best = max(best, sum(g.adj[x][z] and g.adj[y][z] for z in range(g.n)))
    return best


def min_eigenvalue(g: SmallGraph) -> Optional[object]:
    spec = brute_spectrum(g)
    return spec.theta_min if spec.entries else None
