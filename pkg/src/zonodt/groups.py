"""Permutation groups on ``1..n`` given by generators, and orbit machinery."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, ValidationError

# a permutation is a tuple p with p[i-1] = image of i
Perm = tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """``p ∘ q`` (apply q first)."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def sign(p: Perm) -> int:
    seen = [False] * len(p)
    s = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j] - 1
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def transposition(n: int, a: int, b: int) -> Perm:
    p = list(range(1, n + 1))
    p[a - 1], p[b - 1] = b, a
    return tuple(p)


def act(p: Perm, point: Sequence[int]) -> tuple[int, ...]:
    """Move the value at coordinate i to coordinate p(i)."""
    out = [0] * len(point)
    for i, v in enumerate(point):
        out[p[i] - 1] = v
    return tuple(out)


@dataclass(frozen=True)
class PermGroup:
    degree: int
    generators: tuple[Perm, ...]
    blocks: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        for g in self.generators:
            if sorted(g) != list(range(1, self.degree + 1)):
                raise ValidationError(f"generator {g} is not a permutation of 1..{self.degree}")

    @property
    def is_full_symmetric(self) -> bool:
        return self.blocks is not None and len(self.blocks) == 1

    def order(self) -> int:
        if self.blocks is not None:
            return prod(factorial(b) for b in self.blocks)
        return len(self.elements())

    def elements(self, cap: int | None = None) -> list[Perm]:
        """All group elements, sorted.  ``cap`` bounds the group order."""
        if self.blocks is not None:
            order = prod(factorial(b) for b in self.blocks)
            if cap is not None and order > cap:
                raise CapExceeded(f"group order {order} exceeds cap {cap}")
            return sorted(_young_elements(self.blocks))
        ident = tuple(range(1, self.degree + 1))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.generators:
                    q = compose(g, p)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
                        if cap is not None and len(seen) > cap:
                            raise CapExceeded(f"group order exceeds cap {cap}")
            frontier = nxt
        return sorted(seen)


def _young_elements(blocks: Sequence[int]) -> Iterator[Perm]:
    starts = [sum(blocks[:k]) for k in range(len(blocks))]
    per_block = [
        [tuple(s + x for x in perm) for perm in permutations(range(1, b + 1))]
        for s, b in zip(starts, blocks)
    ]
    for choice in product(*per_block):
        yield tuple(v for part in choice for v in part)


def young_subgroup(gamma: Sequence[int]) -> PermGroup:
    """``S_γ``: adjacent transpositions inside consecutive blocks of sizes γ."""
    if any(g < 1 for g in gamma):
        raise ValidationError("block sizes must be positive")
    n = sum(gamma)
    gens = []
    start = 0
    for b in gamma:
        for a in range(start + 1, start + b):
            gens.append(transposition(n, a, a + 1))
        start += b
    return PermGroup(n, tuple(gens), tuple(gamma))


def symmetric_group(n: int) -> PermGroup:
    return young_subgroup((n,))


def trivial_group(n: int) -> PermGroup:
    return young_subgroup((1,) * n)


@dataclass(frozen=True)
class Orbit:
    rep: tuple[int, ...]
    size: int
    stab_type: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {"rep": list(self.rep), "size": self.size,
                "stab_type": None if self.stab_type is None else list(self.stab_type)}


def multiplicity_type(point: Iterable[int]) -> tuple[int, ...]:
    """Partition formed by how often each value occurs."""
    return tuple(sorted(Counter(point).values(), reverse=True))


def orbits(points: Sequence[Sequence[int]], grp: PermGroup) -> list[Orbit]:
    """Orbit partition of a group-stable point set by union-find over generators.

    Representatives are lexicographic maxima; orbits are listed by decreasing
    representative.
    """
    pts = [tuple(p) for p in points]
    for p in pts:
        if len(p) != grp.degree:
            raise ValidationError(f"point {p} has length {len(p)}, group degree is {grp.degree}")
    index = {p: k for k, p in enumerate(pts)}
    parent = list(range(len(pts)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for k, p in enumerate(pts):
        for g in grp.generators:
            q = act(g, p)
            j = index.get(q)
            if j is None:
                raise ValidationError(f"point set is not stable: {p} maps to {q}")
            a, b = find(k), find(j)
            if a != b:
                parent[a] = b
    classes: dict[int, list[tuple[int, ...]]] = {}
    for k, p in enumerate(pts):
        classes.setdefault(find(k), []).append(p)
    out = []
    for members in classes.values():
        rep = max(members)
        stab = multiplicity_type(rep) if grp.is_full_symmetric else None
        out.append(Orbit(rep, len(members), stab))
    out.sort(key=lambda o: o.rep, reverse=True)
    return out
