"""Number-theoretic closed forms for DT invariants of multipartite quivers."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import reduce
from itertools import combinations_with_replacement, product
from math import comb, gcd
from typing import Iterator, Sequence

from .errors import CapExceeded, ValidationError

DSET_CAP = 2_000_000


def _positive(d: int, name: str = "d") -> None:
    if not isinstance(d, int) or d < 1:
        raise ValidationError(f"{name} must be a positive integer, got {d!r}")


def factorize(d: int) -> dict[int, int]:
    _positive(d)
    out: dict[int, int] = {}
    p = 2
    while p * p <= d:
        while d % p == 0:
            out[p] = out.get(p, 0) + 1
            d //= p
        p += 1
    if d > 1:
        out[d] = out.get(d, 0) + 1
    return out


def mobius(d: int) -> int:
    f = factorize(d)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(d: int) -> int:
    result = d
    for p in factorize(d):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    _positive(n, "n")
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small) | {n // d for d in small})


def ramanujan_sum(d: int, b: int) -> int:
    """C_d(b), the sum of b-th powers of the primitive d-th roots of unity."""
    _positive(d)
    q = d // gcd(b, d)
    return mobius(q) * euler_phi(d) // euler_phi(q)


@dataclass
class CohenReport:
    p: int
    q: int
    ds: tuple[int, ...]
    lhs: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.expected

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "ds": list(self.ds), "lhs": self.lhs,
                "expected": self.expected, "passed": self.passed}


def _residue_convolution(vectors: Sequence[Sequence[int]], q: int) -> list[int]:
    acc = [1] + [0] * (q - 1)
    for v in vectors:
        nxt = [0] * q
        for a, x in enumerate(acc):
            if x:
                for b, y in enumerate(v):
                    if y:
                        nxt[(a + b) % q] += x * y
        acc = nxt
    return acc


def cohen_check(p: int, q: int, ds: Sequence[int], *, brute: bool = True) -> CohenReport:
    """Σ over a_1+...+a_k ≡ p (mod q) of ∏ C_{d_i}(a_i) against q^{k-1} C_d(p) or 0.

    ``brute=True`` enumerates all q^k tuples; otherwise residues are convolved.
    """
    _positive(q, "q")
    ds = tuple(ds)
    if not ds:
        raise ValidationError("need at least one divisor")
    for d in ds:
        _positive(d)
        if q % d:
            raise ValidationError(f"{d} does not divide {q}")
    tables = [[ramanujan_sum(d, a) for a in range(q)] for d in ds]
    if brute:
        if q ** len(ds) > DSET_CAP:
            raise CapExceeded(f"{q}^{len(ds)} tuples exceeds the cap")
        lhs = 0
        for tup in product(range(q), repeat=len(ds)):
            if sum(tup) % q == p % q:
                term = 1
                for t, a in zip(tables, tup):
                    term *= t[a]
                lhs += term
    else:
        lhs = _residue_convolution(tables, q)[p % q]
    if len(set(ds)) == 1:
        expected = q ** (len(ds) - 1) * ramanujan_sum(ds[0], p)
    else:
        expected = 0
    return CohenReport(p, q, ds, lhs, expected)


def cohen_orthogonality_check(p: int, q: int, d: int, e: int) -> CohenReport:
    return cohen_check(p, q, (d, e))


# partitions and the D-sets ----------------------------------------------------


def check_partition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if not lam:
        raise ValidationError("partition must be nonempty")
    for x in lam:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValidationError(f"partition parts must be positive integers, got {x!r}")
    return tuple(sorted(lam, reverse=True))


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _check_residue(m: int, n: int, s: int) -> int:
    _positive(m, "m")
    _positive(n, "n")
    if not 0 <= s < m * n:
        raise ValidationError(f"s must lie in [0, {m * n - 1}], got {s}")
    return m * n


def enumerate_dset(m: int, n: int, r: int, s: int, *, cap: int = DSET_CAP) -> list[tuple[int, ...]]:
    """All y in {0..mn-1}^r with Σ y ≡ s (mod mn), in lexicographic order."""
    q = _check_residue(m, n, s)
    if r < 0:
        raise ValidationError("r must be nonnegative")
    if q**r > cap:
        raise CapExceeded(f"(mn)^r = {q**r} exceeds the cap {cap}")
    if r == 0:
        return [()] if s == 0 else []
    out = []
    for prefix in product(range(q), repeat=r - 1):
        last = (s - sum(prefix)) % q
        out.append(prefix + (last,))
    return out


def dset_orbit_count(m: int, n: int, lam: Sequence[int], s: int) -> int:
    """Number of S_λ-orbits on D_{m,n,|λ|,s}, by direct counting.

    An orbit is a tuple of multisets, one per block.  Multisets of each block
    are tallied by their sum mod mn, and the tallies are convolved.
    """
    lam = check_partition(lam)
    q = _check_residue(m, n, s)
    tallies = []
    for part in lam:
        t = [0] * q
        for ms in combinations_with_replacement(range(q), part):
            t[sum(ms) % q] += 1
        tallies.append(t)
    return _residue_convolution(tallies, q)[s]


def orbit_count_by_sorting(m: int, n: int, lam: Sequence[int], s: int, *, cap: int = DSET_CAP) -> int:
    """Same count via canonical representatives (sorted within blocks)."""
    lam = check_partition(lam)
    pts = enumerate_dset(m, n, sum(lam), s, cap=cap)
    reps = set()
    for y in pts:
        out, start = [], 0
        for part in lam:
            out.extend(sorted(y[start:start + part]))
            start += part
        reps.add(tuple(out))
    return len(reps)


# closed forms ------------------------------------------------------------------


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what} is not an integer: {num}/{den}")
    return q


def _block_product(q: int, lam: Sequence[int], d: int) -> int:
    out = 1
    for part in lam:
        out *= comb((q + part) // d - 1, part // d)
    return out


def orbit_formula(m: int, lam: Sequence[int], s: int) -> int:
    """O_{m,λ,s} = (1/mn) Σ_{d | gcd(λ), d | mn} C_d(s) ∏ binom((mn+λ_i)/d - 1, λ_i/d)."""
    lam = check_partition(lam)
    n = sum(lam)
    q = _check_residue(m, n, s)
    g = gcd(reduce(gcd, lam), q)
    total = sum(ramanujan_sum(d, s) * _block_product(q, lam, d) for d in divisors(g))
    return _exact_div(total, q, "orbit count")


def genus_complete(m: int, n: int) -> int:
    """g(K_n^m)."""
    return m * n * (n - 1) // 2 - n + 1


def dt_multipartite(m: int, lam: Sequence[int]) -> int:
    """DT of the multipartite quiver (a_ii = m+1, a_ij = m) at dimension vector λ."""
    lam = check_partition(lam)
    _positive(m, "m")
    n = sum(lam)
    if n < 2:
        raise ValidationError("|λ| must be at least 2")
    q = m * n
    total = 0
    for d in divisors(reduce(gcd, lam)):
        sign = -1 if (q + q // d) % 2 else 1
        total += sign * mobius(d) * _block_product(q, lam, d)
    return _exact_div(total, m * n * n, "DT invariant")


def reineke_dt(m: int, n: int) -> int:
    """DT of the (m+1)-loop quiver at dimension n."""
    _positive(m, "m")
    _positive(n, "n")
    total = 0
    for d in divisors(n):
        sign = -1 if (m * n + m * n // d) % 2 else 1
        total += sign * mobius(d) * comb((m + 1) * n // d - 1, n // d)
    return _exact_div(total, m * n * n, "DT invariant")


def dt_via_orbits(m: int, lam: Sequence[int]) -> int:
    """O_{m,λ,g}/n with g = g(K_n^m) reduced mod mn."""
    lam = check_partition(lam)
    n = sum(lam)
    return _exact_div(orbit_formula(m, lam, genus_complete(m, n) % (m * n)), n, "orbit quotient")


def ramanujan_genus_identity(m: int, n: int) -> bool:
    """C_d(g(K_n^m)) = (-1)^{mn + mn/d} μ(d) for every d | n."""
    g = genus_complete(m, n)
    q = m * n
    return all(ramanujan_sum(d, g) == (-1) ** ((q + q // d) % 2) * mobius(d) for d in divisors(n))


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


__all__ = [
    "CohenReport", "catalan", "check_partition", "cohen_check", "cohen_orthogonality_check",
    "divisors", "dset_orbit_count", "dt_multipartite", "dt_via_orbits", "enumerate_dset",
    "euler_phi", "factorize", "genus_complete", "mobius", "orbit_count_by_sorting",
    "orbit_formula", "partitions", "ramanujan_genus_identity", "ramanujan_sum", "reineke_dt",
]
