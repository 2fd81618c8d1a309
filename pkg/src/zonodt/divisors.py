"""Break divisors, orientable divisors, G-parking functions, and numerical DT.

Divisors are plain integer tuples indexed by vertex (position ``i - 1`` holds
the value at vertex ``i``).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from .errors import CapExceeded, ValidationError
from .graph import (
    Multigraph,
    _components,
    _require_connected,
    cut_size,
    enumerate_bonds,
    genus,
    is_connected,
    is_connected_on,
    subset_genus,
)
from .groups import Orbit, PermGroup, orbits, young_subgroup

Divisor = tuple[int, ...]

DEFAULT_MAX_EDGES = 24


def _positive_genus_subsets(G: Multigraph) -> list[tuple[frozenset[int], int]]:
    """Connected induced vertex subsets with positive genus (trees constrain nothing)."""
    out = []
    verts = range(1, G.n + 1)
    for r in range(2, G.n + 1):
        for S in combinations(verts, r):
            g = subset_genus(G, S)
            if g > 0 and is_connected_on(G, S):
                out.append((frozenset(S), g))
    return out


def is_break_divisor(G: Multigraph, D: Sequence[int], constraints=None) -> bool:
    if len(D) != G.n or any(v < 0 for v in D) or sum(D) != genus(G):
        return False
    if constraints is None:
        constraints = _positive_genus_subsets(G)
    return all(sum(D[i - 1] for i in S) >= g for S, g in constraints)


def _break_search(n: int, g: int, constraints, first_values: Sequence[int]) -> list[Divisor]:
    # constraint S is fully decided once its largest vertex is assigned
    by_last: dict[int, list] = {}
    for S, gs in constraints:
        by_last.setdefault(max(S), []).append((tuple(sorted(S)), gs))
    out: list[Divisor] = []
    vals = [0] * n

    def rec(k: int, remaining: int):
        # k = number of vertices already assigned
        if k == n - 1:
            vals[n - 1] = remaining
            if _ok(n):
                out.append(tuple(vals))
            return
        for v in range(remaining, -1, -1) if k else first_values:
            if v > remaining:
                continue
            vals[k] = v
            if _ok(k + 1) and _feasible(k + 1, remaining - v):
                rec(k + 1, remaining - v)

    def _ok(k: int) -> bool:
        for S, gs in by_last.get(k, ()):
            if sum(vals[i - 1] for i in S) < gs:
                return False
        return True

    def _feasible(k: int, remaining: int) -> bool:
        # a partially assigned constraint can still borrow every remaining chip
        for S, gs in constraints:
            if max(S) > k:
                assigned = sum(vals[i - 1] for i in S if i <= k)
                if assigned + remaining < gs:
                    return False
        return True

    if n == 1:
        return [(g,)] if g >= 0 else []
    rec(0, g)
    return out


def enumerate_break_divisors(G: Multigraph, *, threads: int = 1) -> list[Divisor]:
    """All break divisors of a connected multigraph, lexicographically sorted.

    Search runs over compositions of g(G) into n parts, pruned by the
    constraints of connected induced subsets with positive genus.  With
    ``threads > 1`` the value at vertex 1 is split across worker processes.
    """
    g = genus(G)
    constraints = _positive_genus_subsets(G)
    first = list(range(g, -1, -1))
    if threads > 1 and G.n > 1 and g > 0:
        chunks = [first[k::threads] for k in range(threads)]
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            parts = pool.map(_break_search, [G.n] * len(chunks), [g] * len(chunks),
                             [constraints] * len(chunks), chunks)
            found = [d for part in parts for d in part]
    else:
        found = _break_search(G.n, g, constraints, first)
    return sorted(set(found))


def break_divisors_all_subgraphs(G: Multigraph, max_edges: int = 14) -> list[Divisor]:
    """Reference enumeration using every connected (not necessarily induced) subgraph.

    Exponential in |E|; only meant for cross-checking on small graphs.
    """
    g = genus(G)
    if G.num_edges > max_edges:
        raise CapExceeded(f"{G.num_edges} edges exceeds the reference cap {max_edges}")
    # individual parallel copies are separate edges
    copies = [(i, j) for i, j, m in G.edges for _ in range(m)]
    constraints = set()
    for mask in range(1, 1 << len(copies)):
        chosen = [copies[k] for k in range(len(copies)) if mask >> k & 1]
        verts = {v for e in chosen for v in e}
        if len(_components(G.n, chosen, verts)) != 1:
            continue
        gh = len(chosen) - len(verts) + 1
        if gh > 0:
            constraints.add((frozenset(verts), gh))
    out = []
    for D in _compositions(g, G.n):
        if all(sum(D[i - 1] for i in S) >= gh for S, gh in constraints):
            out.append(D)
    return sorted(out)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for v in range(total + 1):
        for rest in _compositions(total - v, parts - 1):
            yield (v,) + rest


def spanning_trees(G: Multigraph) -> list[tuple[tuple[int, int], ...]]:
    """Spanning trees of the underlying simple graph, as sorted vertex pairs."""
    _require_connected(G)
    pairs = G.pairs
    out = []
    for T in combinations(pairs, G.n - 1):
        if len(_components(G.n, T)) == 1:
            out.append(tuple(sorted(T)))
    return out


def tree_chip_divisors(G: Multigraph, tree: Sequence[tuple[int, int]]) -> list[Divisor]:
    """Divisors from giving each non-tree edge's chip to one of its endpoints."""
    tree = [tuple(sorted(e)) for e in tree]
    if len(tree) != G.n - 1 or len(_components(G.n, tree)) != 1:
        raise ValidationError("input is not a spanning tree")
    used = {}
    for e in tree:
        used[e] = used.get(e, 0) + 1
    spare = []
    for i, j, m in G.edges:
        k = m - used.pop((i, j), 0)
        if k < 0:
            raise ValidationError(f"tree edge ({i}, {j}) is not an edge of the graph")
        if k:
            spare.append((i, j, k))
    if used:
        raise ValidationError(f"tree edges {sorted(used)} are not edges of the graph")
    out = set()
    # for k parallel spare copies only the number sent to i matters
    for split in product(*(range(k + 1) for _, _, k in spare)):
        D = [0] * G.n
        for (i, j, k), a in zip(spare, split):
            D[i - 1] += a
            D[j - 1] += k - a
        out.add(tuple(D))
    return sorted(out)


def enumerate_orientable_divisors(G: Multigraph, *, max_edges: int = DEFAULT_MAX_EDGES) -> list[Divisor]:
    """Indegree-minus-one vectors over all edge orientations."""
    _require_connected(G)
    if G.num_edges > max_edges:
        raise CapExceeded(f"{G.num_edges} edges exceeds the orientation cap {max_edges}")
    out = set()
    for split in product(*(range(m + 1) for _, _, m in G.edges)):
        D = [-1] * G.n
        for (i, j, m), a in zip(G.edges, split):
            D[i - 1] += a
            D[j - 1] += m - a
        out.add(tuple(D))
    return sorted(out)


def _all_proper_subsets(n: int):
    for r in range(1, n):
        for S in combinations(range(1, n + 1), r):
            yield S


def interior_orientable_divisors(G: Multigraph, *, max_edges: int = DEFAULT_MAX_EDGES) -> list[Divisor]:
    """Orientable divisors strictly inside every subset bound of the zonotope."""
    pts = enumerate_orientable_divisors(G, max_edges=max_edges)
    bounds = [(S, subset_genus(G, S) - 1, cut_size(G, S)) for S in _all_proper_subsets(G.n)]
    out = []
    for p in pts:
        if all(lo < sum(p[i - 1] for i in S) < lo + d for S, lo, d in bounds):
            out.append(p)
    return out


def numerical_dt(Q, gamma, *, threads: int = 1) -> int:
    """Number of S_γ-orbits of break divisors on the covering graph."""
    from .quiver import covering_graph

    cg = covering_graph(Q, gamma)
    return len(orbits(enumerate_break_divisors(cg.graph, threads=threads), young_subgroup(cg.gamma)))


# vanishing checks -------------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    checked: int = 0
    counterexample: dict | None = None
    details: list = field(default_factory=list)

    def fail(self, **witness) -> None:
        if self.passed:
            self.passed = False
            self.counterexample = witness

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "counterexample": self.counterexample}


def _values(points, S) -> set[int]:
    return {sum(p[i - 1] for i in S) for p in points}


def _interpolant_vanishes(points, S, lo, hi) -> bool:
    for p in points:
        v = sum(p[i - 1] for i in S)
        acc = 1
        for c in range(lo, hi + 1):
            acc *= v - c
        if acc != 0:
            return False
    return True


def check_break_vanishing(G: Multigraph, points: Sequence[Divisor] | None = None) -> CheckReport:
    """Value ranges of x_S on break divisors for every bond, and the vanishing they imply."""
    report = CheckReport("break_vanishing")
    g = genus(G)
    pts = enumerate_break_divisors(G) if points is None else list(points)
    full = frozenset(range(1, G.n + 1))
    for p in pts:
        if sum(p) != g:
            report.fail(kind="degree", point=list(p))
    for bond in enumerate_bonds(G):
        report.checked += 1
        S, Sbar = bond.side, full - bond.side
        lo, hi = subset_genus(G, S), g - subset_genus(G, Sbar)
        vals = _values(pts, S)
        if hi - lo + 1 != bond.cut_size:
            report.fail(kind="interval-length", side=sorted(S), interval=[lo, hi], cut_size=bond.cut_size)
        if vals != set(range(lo, hi + 1)):
            report.fail(kind="value-set", side=sorted(S), expected=[lo, hi], got=sorted(vals))
        if not _interpolant_vanishes(pts, S, lo, hi):
            report.fail(kind="interpolant", side=sorted(S))
        report.details.append({"side": sorted(S), "interval": [lo, hi], "cut_size": bond.cut_size})
    return report


def check_orientable_vanishing(G: Multigraph, *, max_edges: int = DEFAULT_MAX_EDGES) -> CheckReport:
    """Value ranges of x_S on orientable divisors and on their interior, for every proper S."""
    report = CheckReport("orientable_vanishing")
    g = genus(G)
    ori = enumerate_orientable_divisors(G, max_edges=max_edges)
    inner = interior_orientable_divisors(G, max_edges=max_edges)
    for pts in (ori, inner):
        for p in pts:
            if sum(p) != g - 1:
                report.fail(kind="degree", point=list(p))
    full = set(range(1, G.n + 1))
    for S in _all_proper_subsets(G.n):
        report.checked += 1
        lo, d = subset_genus(G, S) - 1, cut_size(G, S)
        bond = is_connected_on(G, S) and is_connected_on(G, full - set(S))
        vals = _values(ori, S)
        if vals != set(range(lo, lo + d + 1)):
            report.fail(kind="external-value-set", side=list(S), expected=[lo, lo + d], got=sorted(vals))
        if not _interpolant_vanishes(ori, S, lo, lo + d):
            report.fail(kind="external-interpolant", side=list(S))
        if inner:
            # only bond sides reach every interior value; any S stays inside
            ivals = _values(inner, S)
            allowed = set(range(lo + 1, lo + d))
            if (ivals != allowed) if bond else not (ivals <= allowed):
                report.fail(kind="internal-value-set", side=list(S), expected=[lo + 1, lo + d - 1],
                            got=sorted(ivals))
            if not _interpolant_vanishes(inner, S, lo + 1, lo + d - 1):
                report.fail(kind="internal-interpolant", side=list(S))
    return report


# G-parking functions ----------------------------------------------------------


def g_parking_functions(G: Multigraph, root: int) -> list[tuple[int, ...]]:
    """G-parking functions on ``V \\ {root}`` (Postnikov–Shapiro convention).

    ``a`` qualifies when every nonempty S of non-root vertices has a vertex i
    with ``a_i`` below the number of edges from i to vertices outside S.
    Results are listed in vertex order with the root omitted.
    """
    _require_connected(G)
    if not (1 <= root <= G.n):
        raise ValidationError(f"root {root} is not a vertex")
    others = [v for v in range(1, G.n + 1) if v != root]
    mult = {}
    for i, j, m in G.edges:
        mult[(i, j)] = mult[(j, i)] = m
    subsets = [S for r in range(1, len(others) + 1) for S in combinations(others, r)]
    out_deg = {}
    for S in subsets:
        Sset = set(S)
        out_deg[S] = [(i, sum(mult.get((i, u), 0) for u in range(1, G.n + 1) if u not in Sset)) for i in S]
    pos = {v: k for k, v in enumerate(others)}
    out = []
    for a in product(*(range(G.degree(v)) for v in others)):
        if all(any(a[pos[i]] < d for i, d in out_deg[S]) for S in subsets):
            out.append(tuple(a))
    return out


def parking_generating_function(G: Multigraph, root: int) -> list[int]:
    dims: list[int] = []
    for a in g_parking_functions(G, root):
        d = sum(a)
        dims.extend([0] * (d + 1 - len(dims)))
        dims[d] += 1
    return dims


def orbit_report(points: Sequence[Divisor], grp: PermGroup) -> dict:
    return {"orbits": [o.to_json() for o in orbits(points, grp)]}


__all__ = [
    "CheckReport",
    "Divisor",
    "Orbit",
    "break_divisors_all_subgraphs",
    "check_break_vanishing",
    "check_orientable_vanishing",
    "enumerate_break_divisors",
    "enumerate_orientable_divisors",
    "g_parking_functions",
    "interior_orientable_divisors",
    "is_break_divisor",
    "numerical_dt",
    "orbit_report",
    "parking_generating_function",
    "spanning_trees",
    "tree_chip_divisors",
]
