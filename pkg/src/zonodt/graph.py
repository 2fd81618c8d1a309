"""Loop-free multigraphs: connectivity, bonds, genus, spanning trees, Tutte."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import ValidationError
from .linalg import bareiss_determinant


@dataclass(frozen=True)
class Multigraph:
    """Multigraph on vertices ``1..n``.

    ``edges`` is a sorted tuple of ``(i, j, multiplicity)`` with ``i < j``; each
    unordered pair appears at most once.  Instances are immutable values.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("a multigraph needs at least one vertex")
        seen = set()
        for e in self.edges:
            if len(e) != 3:
                raise ValidationError(f"edge {e!r} is not a triple (i, j, multiplicity)")
            i, j, m = e
            if i == j:
                raise ValidationError(f"self-loop at vertex {i}")
            if not (i < j):
                raise ValidationError(f"edge ({i}, {j}) must be listed with i < j")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValidationError(f"edge ({i}, {j}) has a label outside 1..{self.n}")
            if m < 1:
                raise ValidationError(f"edge ({i}, {j}) has non-positive multiplicity {m}")
            if (i, j) in seen:
                raise ValidationError(f"edge ({i}, {j}) listed twice")
            seen.add((i, j))
        if list(self.edges) != sorted(self.edges):
            raise ValidationError("edges must be sorted")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Multigraph":
        """Build from pairs ``(i, j)`` or triples ``(i, j, m)``; repeats accumulate."""
        mult: dict[tuple[int, int], int] = {}
        for e in edges:
            if len(e) == 2:
                i, j, m = e[0], e[1], 1
            else:
                i, j, m = e
            if i == j:
                raise ValidationError(f"self-loop at vertex {i}")
            if m < 1:
                raise ValidationError(f"edge ({i}, {j}) has non-positive multiplicity {m}")
            key = (min(i, j), max(i, j))
            mult[key] = mult.get(key, 0) + m
        return cls(n, tuple(sorted((i, j, m) for (i, j), m in mult.items())))

    @property
    def num_edges(self) -> int:
        return sum(m for _, _, m in self.edges)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j, _ in self.edges)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, _, m in self.edges)

    def multiplicity(self, i: int, j: int) -> int:
        a, b = min(i, j), max(i, j)
        for u, v, m in self.edges:
            if (u, v) == (a, b):
                return m
        return 0

    def degree(self, v: int) -> int:
        return sum(m for i, j, m in self.edges if v in (i, j))

    def neighbors(self) -> dict[int, set[int]]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for i, j, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def relabel(self, perm: Mapping[int, int]) -> "Multigraph":
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return Multigraph.from_edges(self.n, ((perm[i], perm[j], m) for i, j, m in self.edges))

    # JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data) -> "Multigraph":
        """Strict parse of ``{"n": ..., "edges": [[i, j, m], ...]}``."""
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or set(data) - {"n", "edges"} or "n" not in data:
            raise ValidationError('graph JSON must be an object with keys "n" and "edges"')
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValidationError(f'"n" must be a positive integer, got {n!r}')
        triples = []
        for e in data.get("edges", []):
            if not (isinstance(e, list) and len(e) == 3 and all(isinstance(v, int) and not isinstance(v, bool) for v in e)):
                raise ValidationError(f"edge {e!r} is not an integer triple [i, j, multiplicity]")
            triples.append(tuple(e))
        return cls(n, tuple(sorted(triples)))


def _components(n: int, pairs: Iterable[tuple[int, int]], vertices: Iterable[int] | None = None) -> list[set[int]]:
    verts = set(range(1, n + 1)) if vertices is None else set(vertices)
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in pairs:
        if i in parent and j in parent:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    comps: dict[int, set[int]] = {}
    for v in verts:
        comps.setdefault(find(v), set()).add(v)
    return list(comps.values())


def is_connected(G: Multigraph) -> bool:
    return len(_components(G.n, G.pairs)) == 1


def is_connected_on(G: Multigraph, S: Iterable[int]) -> bool:
    """Whether the induced subgraph ``G[S]`` is connected (S nonempty)."""
    S = set(S)
    if not S:
        return False
    pairs = [(i, j) for i, j in G.pairs if i in S and j in S]
    return len(_components(G.n, pairs, S)) == 1


def _require_connected(G: Multigraph) -> None:
    if not is_connected(G):
        raise ValidationError("graph is not connected")


def genus(G: Multigraph) -> int:
    _require_connected(G)
    return G.num_edges - G.n + 1


def subset_genus(G: Multigraph, S: Iterable[int]) -> int:
    """``|E(G[S])| - |S| + 1``, the genus formula applied to an induced subgraph."""
    S = set(S)
    return edges_within(G, S) - len(S) + 1


def edges_within(G: Multigraph, S: set[int]) -> int:
    return sum(m for i, j, m in G.edges if i in S and j in S)


def cut_size(G: Multigraph, S: Iterable[int]) -> int:
    S = set(S)
    return sum(m for i, j, m in G.edges if (i in S) != (j in S))


def induced_subgraph(G: Multigraph, S: Iterable[int]) -> tuple[Multigraph, dict[int, int]]:
    """Induced subgraph on ``S`` relabelled to ``1..|S|``, with the label map old -> new."""
    verts = sorted(set(S))
    if not verts:
        raise ValidationError("induced subgraph of the empty vertex set")
    if verts[0] < 1 or verts[-1] > G.n:
        raise ValidationError("vertex subset is out of range")
    label = {v: k + 1 for k, v in enumerate(verts)}
    edges = [(label[i], label[j], m) for i, j, m in G.edges if i in label and j in label]
    return Multigraph(len(verts), tuple(sorted(edges))), label


@dataclass(frozen=True)
class Bond:
    side: frozenset[int]
    cut_size: int

    def complement(self, n: int) -> frozenset[int]:
        return frozenset(range(1, n + 1)) - self.side


def proper_subsets_with_one(n: int) -> Iterator[frozenset[int]]:
    """Every nonempty proper vertex subset containing vertex 1 (one per complement pair)."""
    rest = list(range(2, n + 1))
    for r in range(0, n - 1):
        for extra in combinations(rest, r):
            yield frozenset((1,) + extra)


def enumerate_bonds(G: Multigraph) -> list[Bond]:
    """All bonds, each given by the side containing vertex 1."""
    _require_connected(G)
    full = set(range(1, G.n + 1))
    bonds = []
    for S in proper_subsets_with_one(G.n):
        if is_connected_on(G, S) and is_connected_on(G, full - S):
            bonds.append(Bond(S, cut_size(G, S)))
    bonds.sort(key=lambda b: (len(b.side), sorted(b.side)))
    return bonds


def laplacian(G: Multigraph) -> list[list[int]]:
    L = [[0] * G.n for _ in range(G.n)]
    for i, j, m in G.edges:
        L[i - 1][i - 1] += m
        L[j - 1][j - 1] += m
        L[i - 1][j - 1] -= m
        L[j - 1][i - 1] -= m
    return L


def spanning_tree_count(G: Multigraph) -> int:
    """Matrix-tree theorem, with an exact Bareiss determinant."""
    _require_connected(G)
    L = laplacian(G)
    return bareiss_determinant([row[1:] for row in L[1:]])


# Tutte polynomial ---------------------------------------------------------


@dataclass(frozen=True)
class TuttePoly:
    """Tutte polynomial as a map ``(x-degree, y-degree) -> coefficient``."""

    coeffs: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, int], int]) -> "TuttePoly":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coeffs)

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coeffs)

    def matrix(self) -> list[list[int]]:
        if not self.coeffs:
            return [[0]]
        dx = max(i for (i, _), _ in self.coeffs)
        dy = max(j for (_, j), _ in self.coeffs)
        M = [[0] * (dy + 1) for _ in range(dx + 1)]
        for (i, j), c in self.coeffs:
            M[i][j] = c
        return M

    def hilbert_specialization(self, g: int) -> list[int]:
        """Coefficients of ``q^g T(1, 1/q)``, low degree first."""
        dims = [0] * (g + 1)
        for (i, j), c in self.coeffs:
            dims[g - j] += c
        while len(dims) > 1 and dims[-1] == 0:
            dims.pop()
        return dims

    def __str__(self) -> str:
        terms = []
        for (i, j), c in sorted(self.coeffs, key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


def _poly_add(a: dict, b: dict, shift=(0, 0), scale: dict | None = None) -> None:
    """a += (scale * x^shift) * b, where scale is a y-polynomial {j: c}."""
    scale = scale or {0: 1}
    for (i, j), c in b.items():
        for sj, sc in scale.items():
            key = (i + shift[0], j + shift[1] + sj)
            a[key] = a.get(key, 0) + c * sc


class TutteEngine:
    """Deletion–contraction with a memo keyed on a relabelled edge multiset.

    Parallel classes are processed whole: for a class of multiplicity k
    between u and v,
      T(G) = T(G - class) + (1 + y + ... + y^{k-1}) T(G / class)      (non-bridge)
      T(G) = (x + y + ... + y^{k-1}) T(G / class)                     (bridge)
    where contracting the class turns its k copies into loops; ``k - 1`` of
    them and the single contracted edge account for the factors above.
    """

    def __init__(self):
        self.memo: dict[tuple, dict] = {}
        self.hits = 0

    def tutte(self, G: Multigraph) -> TuttePoly:
        _require_connected(G)
        return TuttePoly.from_dict(self._tutte(G.n, {(i, j): m for i, j, m in G.edges}))

    def _key(self, n: int, edges: dict) -> tuple:
        # colour refinement, then relabel by (final colour, old label)
        adj: dict[int, dict[int, int]] = {v: {} for v in range(n)}
        for (i, j), m in edges.items():
            adj[i - 1][j - 1] = m
            adj[j - 1][i - 1] = m
        colour = [sum(adj[v].values()) for v in range(n)]
        for _ in range(n):
            sig = [(colour[v], tuple(sorted((colour[u], m) for u, m in adj[v].items()))) for v in range(n)]
            table = {s: k for k, s in enumerate(sorted(set(sig)))}
            new = [table[s] for s in sig]
            if len(set(new)) == len(set(colour)):
                colour = new
                break
            colour = new
        order = sorted(range(n), key=lambda v: (colour[v], v))
        pos = {v: k for k, v in enumerate(order)}
        relabelled = sorted(
            (min(pos[i - 1], pos[j - 1]), max(pos[i - 1], pos[j - 1]), m) for (i, j), m in edges.items()
        )
        return (n, tuple(relabelled))

    def _tutte(self, n: int, edges: dict) -> dict:
        if not edges:
            return {(0, 0): 1}
        key = self._key(n, edges)
        hit = self.memo.get(key)
        if hit is not None:
            self.hits += 1
            return hit
        # pivot: lowest-index parallel class
        (u, v) = min(edges)
        k = edges[(u, v)]
        rest = dict(edges)
        del rest[(u, v)]
        contracted_n, contracted = _contract(n, rest, u, v)
        result: dict = {}
        if len(_components(n, rest.keys())) == 1:
            _poly_add(result, self._tutte(n, rest))
            _poly_add(result, self._tutte(contracted_n, contracted), scale={j: 1 for j in range(k)})
        else:
            tc = self._tutte(contracted_n, contracted)
            _poly_add(result, tc, shift=(1, 0))
            if k > 1:
                _poly_add(result, tc, scale={j: 1 for j in range(1, k)})
        result = {kk: c for kk, c in result.items() if c}
        self.memo[key] = result
        return result


def _contract(n: int, edges: dict, u: int, v: int) -> tuple[int, dict]:
    """Merge v into u and relabel to 1..n-1.  Edges u-v must already be removed."""

    def lab(w):
        w = u if w == v else w
        return w if w < v else w - 1

    out: dict[tuple[int, int], int] = {}
    for (i, j), m in edges.items():
        a, b = lab(i), lab(j)
        if a == b:
            raise AssertionError("contraction produced a loop from a non-parallel edge")
        key = (min(a, b), max(a, b))
        out[key] = out.get(key, 0) + m
    return n - 1, out


_DEFAULT_ENGINE = TutteEngine()


def tutte(G: Multigraph, engine: TutteEngine | None = None) -> TuttePoly:
    return (engine or _DEFAULT_ENGINE).tutte(G)


def evaluate_tutte(T: TuttePoly, x, y) -> Fraction:
    return Fraction(T(Fraction(x), Fraction(y)))


# Small constructors used throughout ----------------------------------------


def complete_graph(n: int, m: int = 1) -> Multigraph:
    """``K_n^m``: every pair of distinct vertices joined by m edges."""
    return Multigraph.from_edges(n, ((i, j, m) for i, j in combinations(range(1, n + 1), 2)))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph.from_edges(a + b, ((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)))


def path_graph(n: int) -> Multigraph:
    return Multigraph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Multigraph:
    return Multigraph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def k4_minus_edge() -> Multigraph:
    """K_4 with the edge {1, 3} removed.

    With this labelling the single-vertex bonds have sizes 2, 3, 2, 3 and the
    two-vertex bonds are {1, 2} and {1, 4}, both of size 3.
    """
    return Multigraph.from_edges(4, [(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)])
