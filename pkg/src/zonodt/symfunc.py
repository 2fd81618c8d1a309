"""Symmetric functions in the h, m and s bases, indexed by partitions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

from .closed_form import check_partition, partitions
from .errors import CapExceeded, ValidationError
from .graph import Multigraph
from .groups import multiplicity_type

BASES = ("h", "m", "s")
MAX_DEGREE = 10

Partition = tuple[int, ...]


def _norm(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


@dataclass
class SymFunc:
    basis: str
    coeffs: dict[Partition, Fraction | int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValidationError(f"unknown basis {self.basis!r}; use one of {', '.join(BASES)}")
        clean = {}
        sizes = set()
        for lam, c in self.coeffs.items():
            lam = check_partition(lam)
            if c:
                clean[lam] = _norm(c)
                sizes.add(sum(lam))
        if len(sizes) > 1:
            raise ValidationError(f"mixed degrees {sorted(sizes)} in one symmetric function")
        self.coeffs = clean

    @property
    def degree(self) -> int | None:
        return sum(next(iter(self.coeffs))) if self.coeffs else None

    def __getitem__(self, lam) -> Fraction | int:
        return self.coeffs.get(tuple(lam), 0)

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.basis == other.basis and self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for lam in sorted(self.coeffs, reverse=True):
            c = self.coeffs[lam]
            idx = "".join(map(str, lam)) if max(lam) < 10 else ",".join(map(str, lam))
            parts.append(f"{'' if c == 1 else c}{self.basis}_{{{idx}}}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        rows = []
        for lam in sorted(self.coeffs, reverse=True):
            c = Fraction(self.coeffs[lam])
            rows.append({"partition": list(lam), "num": str(c.numerator), "den": str(c.denominator)})
        return {"basis": self.basis, "coeffs": rows}

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        try:
            coeffs = {tuple(r["partition"]): Fraction(int(r["num"]), int(r["den"])) for r in data["coeffs"]}
            return cls(data["basis"], coeffs)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"malformed symmetric function: {exc}") from exc


# Kostka numbers and N_{λμ} -----------------------------------------------------


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def _horizontal_strips(shape: Partition, count: int) -> list[Partition]:
    """Shapes obtained from ``shape`` by adding ``count`` boxes, no two in one column."""
    rows = list(shape) + [0]
    out = []

    def rec(i: int, left: int, cur: list[int]):
        if i == len(rows):
            if left == 0:
                out.append(tuple(x for x in cur if x))
            return
        room = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(room, -1, -1):
            rec(i + 1, left - add, cur + [rows[i] + add])

    rec(0, count, [])
    return out


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: Partition) -> int:
    # place the entries 1, 2, ... one horizontal strip at a time
    current = Counter({(): 1})
    for part in mu:
        nxt: Counter = Counter()
        for shape, ways in current.items():
            for s in _horizontal_strips(shape, part):
                if len(s) <= len(lam) and all(x <= y for x, y in zip(s, lam)):
                    nxt[s] += ways
        current = nxt
    return current.get(tuple(lam), 0)


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape λ and content μ."""
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValidationError(f"|λ| = {sum(lam)} differs from |μ| = {sum(mu)}")
    return _kostka(lam, mu)


@lru_cache(maxsize=None)
def _matrix_count(rows: Partition, cols: Partition) -> int:
    if not rows:
        return 1 if not any(cols) else 0
    first, rest = rows[0], rows[1:]
    total = 0
    # distribute the first row over the columns
    def rec(k: int, left: int, remaining: list[int]):
        nonlocal total
        if k == len(cols):
            if left == 0:
                total += _matrix_count(rest, tuple(remaining))
            return
        for v in range(min(left, remaining[k]), -1, -1):
            remaining[k] -= v
            rec(k + 1, left - v, remaining)
            remaining[k] += v

    rec(0, first, list(cols))
    return total


def matrix_count(lam: Sequence[int], mu: Sequence[int]) -> int:
    """N_{λμ}: nonnegative integer matrices with row sums λ and column sums μ."""
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValidationError(f"|λ| = {sum(lam)} differs from |μ| = {sum(mu)}")
    return _matrix_count(lam, mu)


# basis changes ---------------------------------------------------------------


def _check_degree(n: int) -> None:
    if n > MAX_DEGREE:
        raise CapExceeded(f"degree {n} exceeds the enumeration bound {MAX_DEGREE}")


def _solve(matrix: dict[Partition, dict[Partition, int]], target: dict[Partition, Fraction], shapes: list[Partition]):
    """Solve Σ_μ x_μ · matrix[μ] = target, with matrix[μ][λ] the λ-coefficient of h_μ."""
    from .linalg import solve_rational

    a = [[matrix[mu].get(lam, 0) for mu in shapes] for lam in shapes]
    b = [target.get(lam, 0) for lam in shapes]
    return dict(zip(shapes, solve_rational(a, b)))


def _h_expansion_table(n: int, basis: str) -> dict[Partition, dict[Partition, int]]:
    shapes = list(partitions(n))
    fn = kostka if basis == "s" else matrix_count
    return {mu: {lam: fn(lam, mu) for lam in shapes if fn(lam, mu)} for mu in shapes}


def convert(f: SymFunc, target: str) -> SymFunc:
    """Exact change of basis, routed through h."""
    if target not in BASES:
        raise ValidationError(f"unknown basis {target!r}")
    if f.basis == target or not f.coeffs:
        return SymFunc(target, dict(f.coeffs))
    n = f.degree
    _check_degree(n)
    shapes = list(partitions(n))
    if f.basis == "h":
        h = dict(f.coeffs)
    else:
        h = _solve(_h_expansion_table(n, f.basis), f.coeffs, shapes)
    if target == "h":
        return SymFunc("h", h)
    table = _h_expansion_table(n, target)
    out: dict[Partition, Fraction] = {}
    for mu, c in h.items():
        for lam, k in table[mu].items():
            out[lam] = out.get(lam, 0) + c * k
    return SymFunc(target, out)


# Frobenius characteristics of break divisors ------------------------------------


def complete_multipartite_params(G: Multigraph) -> tuple[int, int]:
    """(n, m) when G is K_n^m; raises otherwise."""
    n = G.n
    mults = set(G.multiplicities)
    if n < 2 or len(G.edges) != n * (n - 1) // 2 or len(mults) != 1:
        raise ValidationError("frobenius characteristic is only computed for K_n^m (full S_n symmetry)")
    return n, mults.pop()


def frobenius_h(G: Multigraph, *, threads: int = 1) -> SymFunc:
    """Σ over S_n-orbits of break divisors of h_{multiplicity type}."""
    from .divisors import enumerate_break_divisors

    n, _ = complete_multipartite_params(G)
    reps = {tuple(sorted(D, reverse=True)) for D in enumerate_break_divisors(G, threads=threads)}
    return SymFunc("h", Counter(multiplicity_type(r) for r in reps))


def h_dimension(f: SymFunc) -> int:
    """Dimension of the permutation module with h-expansion f: Σ c_λ n!/∏λ_i!."""
    from math import factorial, prod

    if f.basis != "h":
        raise ValidationError("dimension is read off the h-expansion")
    return sum(c * factorial(sum(lam)) // prod(factorial(p) for p in lam) for lam, c in f.coeffs.items())


def monomial_coefficient(G: Multigraph, lam: Sequence[int], *, threads: int = 1) -> int:
    """Number of S_λ-orbits on the break divisors of K_n^m."""
    from .divisors import enumerate_break_divisors

    n, _ = complete_multipartite_params(G)
    lam = check_partition(lam)
    if sum(lam) != n:
        raise ValidationError(f"λ must be a partition of {n}")
    reps = set()
    for D in enumerate_break_divisors(G, threads=threads):
        key, start = [], 0
        for part in lam:
            key.append(tuple(sorted(D[start:start + part])))
            start += part
        reps.add(tuple(key))
    return len(reps)


# parking functions -------------------------------------------------------------


def classical_parking_functions(k: int) -> list[tuple[int, ...]]:
    """Sequences of length k whose sorted form is bounded by (0, 1, ..., k-1)."""
    return [a for a in product(range(k), repeat=k) if all(x <= i for i, x in enumerate(sorted(a)))]


def degree_histogram(seqs) -> list[int]:
    hist: list[int] = []
    for a in seqs:
        d = sum(a)
        hist.extend([0] * (d + 1 - len(hist)))
        hist[d] += 1
    return hist


__all__ = [
    "SymFunc", "classical_parking_functions", "complete_multipartite_params", "convert",
    "degree_histogram", "dominates", "frobenius_h", "h_dimension", "kostka", "matrix_count",
    "monomial_coefficient",
]
