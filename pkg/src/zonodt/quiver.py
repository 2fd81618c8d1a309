"""Symmetric quivers, dimension vectors and the covering graph G_{Q,γ}."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .errors import ValidationError
from .graph import Multigraph, _components


@dataclass(frozen=True)
class SymmetricQuiver:
    """Symmetric arrow-count matrix; ``a[i][i]`` counts loops and must be ≥ 1."""

    a: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.a)
        if k == 0:
            raise ValidationError("quiver needs at least one vertex")
        for i, row in enumerate(self.a):
            if len(row) != k:
                raise ValidationError(f"row {i + 1} has length {len(row)}, expected {k}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                    raise ValidationError(f"entry ({i + 1}, {j + 1}) must be a nonnegative integer, got {v!r}")
        for i in range(k):
            if self.a[i][i] < 1:
                raise ValidationError(f"entry ({i + 1}, {i + 1}) is {self.a[i][i]}; every vertex needs a loop")
            for j in range(i + 1, k):
                if self.a[i][j] != self.a[j][i]:
                    raise ValidationError(
                        f"matrix is not symmetric at ({i + 1}, {j + 1}): {self.a[i][j]} != {self.a[j][i]}"
                    )

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "SymmetricQuiver":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.a)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.a]


def loop_quiver(loops: int) -> SymmetricQuiver:
    return SymmetricQuiver(((loops,),))


def multipartite_quiver(m: int, k: int) -> SymmetricQuiver:
    """k vertices, m + 1 loops each, m arrows between distinct vertices."""
    return SymmetricQuiver(tuple(tuple(m + 1 if i == j else m for j in range(k)) for i in range(k)))


def check_dimension_vector(Q: SymmetricQuiver, gamma: Sequence[int]) -> tuple[int, ...]:
    gamma = tuple(gamma)
    if len(gamma) != Q.k:
        raise ValidationError(f"dimension vector has length {len(gamma)}, quiver has {Q.k} vertices")
    for i, g in enumerate(gamma):
        if not isinstance(g, int) or isinstance(g, bool) or g < 1:
            raise ValidationError(f"dimension vector entry {i + 1} is {g!r}; entries must be positive integers")
    return gamma


def parse_quiver_json(data) -> tuple[SymmetricQuiver, tuple[int, ...]]:
    """Strict parse of ``{"matrix": [[...]], "gamma": [...]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or set(data) != {"matrix", "gamma"}:
        raise ValidationError('quiver JSON must be an object with exactly the keys "matrix" and "gamma"')
    rows = data["matrix"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValidationError('"matrix" must be a list of lists')
    Q = SymmetricQuiver.from_matrix(rows)
    if not isinstance(data["gamma"], list):
        raise ValidationError('"gamma" must be a list')
    return Q, check_dimension_vector(Q, data["gamma"])


def block_starts(gamma: Sequence[int]) -> list[int]:
    """Global index of v_{i,1} for each block i (1-based)."""
    out, s = [], 1
    for g in gamma:
        out.append(s)
        s += g
    return out


def global_index(gamma: Sequence[int], i: int, alpha: int) -> int:
    """Global label of v_{i,α}; i and α are 1-based."""
    return block_starts(gamma)[i - 1] + alpha - 1


@dataclass(frozen=True)
class CoveringGraph:
    graph: Multigraph
    gamma: tuple[int, ...]

    @property
    def blocks(self) -> list[list[int]]:
        starts = block_starts(self.gamma)
        return [list(range(s, s + g)) for s, g in zip(starts, self.gamma)]


def covering_graph(Q: SymmetricQuiver, gamma: Sequence[int]) -> CoveringGraph:
    """Blow each quiver vertex i up into a block of γ_i vertices.

    Inside block i every pair gets ``a_ii - 1`` edges; across blocks i ≠ j every
    pair gets ``a_ij`` edges.  Raises if the result is disconnected.
    """
    gamma = check_dimension_vector(Q, gamma)
    n = sum(gamma)
    starts = block_starts(gamma)
    blocks = [list(range(s, s + g)) for s, g in zip(starts, gamma)]
    edges = []
    for i in range(Q.k):
        m = Q.a[i][i] - 1
        if m:
            edges.extend((u, v, m) for u, v in combinations(blocks[i], 2))
        for j in range(i + 1, Q.k):
            m = Q.a[i][j]
            if m:
                edges.extend((u, v, m) for u, v in product(blocks[i], blocks[j]))
    G = Multigraph(n, tuple(sorted(edges)))
    comps = _components(n, G.pairs)
    if len(comps) > 1:
        first = min(comps, key=min)
        rest = sorted(set(range(1, n + 1)) - first)
        raise ValidationError(
            f"covering graph is disconnected: vertices {sorted(first)} are cut off from {rest}"
        )
    return CoveringGraph(G, gamma)


def plus_one_loop(Q: SymmetricQuiver) -> SymmetricQuiver:
    """Q⁺: one extra loop at every vertex."""
    return SymmetricQuiver(tuple(tuple(v + (i == j) for j, v in enumerate(row)) for i, row in enumerate(Q.a)))


def euler_form(Q: SymmetricQuiver, gamma: Sequence[int], delta: Sequence[int]) -> int:
    if len(gamma) != Q.k or len(delta) != Q.k:
        raise ValidationError("dimension vectors must match the number of quiver vertices")
    return sum(g * d for g, d in zip(gamma, delta)) - sum(
        Q.a[i][j] * gamma[i] * delta[j] for i in range(Q.k) for j in range(Q.k)
    )


def n_gamma(Q: SymmetricQuiver, gamma: Sequence[int]) -> int:
    gamma = check_dimension_vector(Q, gamma)
    twice = sum(Q.a[i][j] * gamma[i] * gamma[j] for i in range(Q.k) for j in range(Q.k) if i != j)
    twice += sum((Q.a[i][i] - 1) * gamma[i] * (gamma[i] - 1) for i in range(Q.k))
    return twice // 2 - sum(gamma) + 2


def grading_shift(Q: SymmetricQuiver, gamma: Sequence[int], degree: int) -> int:
    """Efimov grading ``2d + χ_Q(γ, γ)`` of a degree-d polynomial."""
    if degree < 0:
        raise ValidationError("degree must be nonnegative")
    return 2 * degree + euler_form(Q, gamma, gamma)
