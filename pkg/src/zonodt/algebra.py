"""Slim-subgraph spaces P(G), power ideals and their inverse systems.

An edge sub-multiset Y of G is written as a tuple of counts aligned with
``G.edges``: ``Y[k]`` copies of the k-th parallel class.  The parallel copies
are distinct edges, so one count vector stands for ``prod(binom(m_k, Y[k]))``
edge subsets, all with the same polynomial p_Y.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb, factorial, prod
from typing import Callable, Iterable, Sequence

from .errors import CapExceeded, ValidationError
from .graph import Multigraph, _components, _require_connected, enumerate_bonds, genus
from .groups import PermGroup, act, sign, young_subgroup
from .linalg import matmul, nullspace, rank, row_space_basis
from .poly import MultiPoly, apply_operator
from .quiver import SymmetricQuiver, covering_graph, euler_form, n_gamma, plus_one_loop

DEFAULT_MAX_EDGES = 24
DEFAULT_MAX_GROUP_ORDER = 3628800  # 10!

EdgeCounts = tuple[int, ...]


# linear forms and p_Y ------------------------------------------------------


def edge_form(n: int, i: int, j: int) -> MultiPoly:
    """x_i - x_j with the smaller index positive."""
    i, j = min(i, j), max(i, j)
    coeffs = [0] * n
    coeffs[i - 1], coeffs[j - 1] = 1, -1
    return MultiPoly.linear(coeffs)


def as_counts(G: Multigraph, Y) -> EdgeCounts:
    """Accept either a count vector or a list of vertex pairs (with repeats)."""
    Y = list(Y)
    if all(isinstance(y, int) for y in Y) and len(Y) == len(G.edges):
        counts = tuple(Y)
    else:
        c = Counter((min(i, j), max(i, j)) for i, j in Y)
        index = {(i, j): k for k, (i, j, _) in enumerate(G.edges)}
        missing = set(c) - set(index)
        if missing:
            raise ValidationError(f"pairs {sorted(missing)} are not edges of the graph")
        counts = tuple(c.get((i, j), 0) for i, j, _ in G.edges)
    for k, ((i, j, m), y) in enumerate(zip(G.edges, counts)):
        if not 0 <= y <= m:
            raise ValidationError(f"edge ({i}, {j}) used {y} times but has multiplicity {m}")
    return counts


def p_of_edges(G: Multigraph, Y) -> MultiPoly:
    """Product of the edge forms over the sub-multiset Y."""
    counts = as_counts(G, Y)
    p = MultiPoly.constant(G.n)
    for (i, j, _), y in zip(G.edges, counts):
        if y:
            p = p * edge_form(G.n, i, j) ** y
    return p


def _complement_connected(G: Multigraph, counts: EdgeCounts) -> bool:
    kept = [(i, j) for (i, j, m), y in zip(G.edges, counts) if y < m]
    return len(_components(G.n, kept)) == 1


def slim_subsets(G: Multigraph, *, max_edges: int = DEFAULT_MAX_EDGES) -> list[EdgeCounts]:
    """Count vectors Y whose removal leaves G connected, in lexicographic order."""
    _require_connected(G)
    if G.num_edges > max_edges:
        raise CapExceeded(f"{G.num_edges} edges exceeds the cap {max_edges}")
    out = []
    for counts in product(*(range(m + 1) for m in G.multiplicities)):
        if _complement_connected(G, counts):
            out.append(counts)
    return out


def subset_weight(G: Multigraph, counts: EdgeCounts) -> int:
    """Number of edge subsets represented by a count vector."""
    return prod(comb(m, y) for m, y in zip(G.multiplicities, counts))


def count_slim_subsets(G: Multigraph, *, max_edges: int = DEFAULT_MAX_EDGES) -> int:
    return sum(subset_weight(G, Y) for Y in slim_subsets(G, max_edges=max_edges))


def slim_polynomials(G: Multigraph, *, max_edges: int = DEFAULT_MAX_EDGES,
                     subsets: Sequence[EdgeCounts] | None = None) -> dict[EdgeCounts, MultiPoly]:
    """p_Y for every slim Y (or for the given subsets), sharing partial products."""
    if subsets is None:
        subsets = slim_subsets(G, max_edges=max_edges)
    forms = [edge_form(G.n, i, j) for i, j, _ in G.edges]
    cache: dict[EdgeCounts, MultiPoly] = {(): MultiPoly.constant(G.n)}

    def prefix(counts: EdgeCounts) -> MultiPoly:
        got = cache.get(counts)
        if got is None:
            head = prefix(counts[:-1])
            y = counts[-1]
            got = head * forms[len(counts) - 1] ** y if y else head
            cache[counts] = got
        return got

    return {Y: prefix(Y) for Y in subsets}


# graded rank ------------------------------------------------------------------


def trim(dims: list[int]) -> list[int]:
    dims = list(dims)
    while dims and dims[-1] == 0:
        dims.pop()
    return dims


def _rank_of_vectors(vectors: list[dict]) -> int:
    cols = sorted({k for v in vectors for k in v}, reverse=True)
    if not cols:
        return 0
    index = {c: k for k, c in enumerate(cols)}
    rows = []
    for v in vectors:
        row = [0] * len(cols)
        for k, c in v.items():
            row[index[k]] = c
        rows.append(row)
    return rank(rows)


def graded_rank_of_vectors(by_degree: dict[int, list[dict]], *, threads: int = 1) -> list[int]:
    """Rank of each degree's coordinate vectors; result indexed by degree."""
    if not by_degree:
        return []
    top = max(by_degree)
    degrees = list(range(top + 1))
    vecs = [by_degree.get(d, []) for d in degrees]
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            ranks = list(pool.map(_rank_of_vectors, vecs))
    else:
        ranks = [_rank_of_vectors(v) for v in vecs]
    return trim(ranks)


def graded_rank(polys: Iterable[MultiPoly], *, threads: int = 1) -> list[int]:
    """Dimension of the span of homogeneous polynomials, degree by degree.

    Columns are monomials in graded lexicographic order.
    """
    by_degree: dict[int, list[dict]] = {}
    for p in polys:
        if not p:
            continue
        if not p.is_homogeneous():
            raise ValidationError(f"graded_rank needs homogeneous input, got {p!r}")
        by_degree.setdefault(p.degree(), []).append(p.terms)
    return graded_rank_of_vectors(by_degree, threads=threads)


def pspace_hilbert(G: Multigraph, *, max_edges: int = DEFAULT_MAX_EDGES, threads: int = 1) -> list[int]:
    """Hilbert series of P(G) as the graded rank of all slim p_Y."""
    return graded_rank(slim_polynomials(G, max_edges=max_edges).values(), threads=threads)


def top_degree_dim(G: Multigraph, **kwargs) -> int:
    dims = pspace_hilbert(G, **kwargs)
    g = genus(G)
    return dims[g] if len(dims) > g else 0


# power ideals and inverse systems ------------------------------------------


@dataclass
class PowerIdeal:
    n: int
    generators: list[MultiPoly]
    unit: bool = False
    labels: list[str] = field(default_factory=list)
    # (support of the linear form, exponent) for every generator
    powers: list[tuple[frozenset[int], int]] = field(default_factory=list)


def _power_ideal(G: Multigraph, shift: int) -> PowerIdeal:
    _require_connected(G)
    n = G.n
    full = MultiPoly.subset_sum(n, range(1, n + 1))
    gens, labels, unit = [full], ["x_[n]"], False
    everything = frozenset(range(1, n + 1))
    powers = [(everything, 1)]
    for bond in enumerate_bonds(G):
        e = bond.cut_size + shift
        for side in (bond.side, everything - bond.side):
            if e <= 0:
                unit = True
                gens.append(MultiPoly.constant(n))
            else:
                gens.append(MultiPoly.subset_sum(n, side) ** e)
            labels.append(f"x_{{{','.join(map(str, sorted(side)))}}}^{max(e, 0)}")
            powers.append((side, max(e, 0)))
    return PowerIdeal(n, gens, unit, labels, powers)


def apply_linear_power(S: Iterable[int], e: int, f: MultiPoly) -> MultiPoly:
    """(Σ_{i∈S} ∂_i)^e f, without expanding the power."""
    idx = sorted(i - 1 for i in S)
    if e > f.degree():
        return MultiPoly(f.n)
    terms = f.terms
    for _ in range(e):
        nxt: dict = {}
        for exp, c in terms.items():
            for i in idx:
                a = exp[i]
                if a:
                    low = exp[:i] + (a - 1,) + exp[i + 1:]
                    nxt[low] = nxt.get(low, 0) + a * c
        terms = {k: v for k, v in nxt.items() if v}
        if not terms:
            break
    return MultiPoly(f.n, terms)


def central_power_ideal(G: Multigraph) -> PowerIdeal:
    """x_[n] and x_S^{d(S)} for both sides of every bond."""
    return _power_ideal(G, 0)


def pm_power_ideal(G: Multigraph, shift: int) -> PowerIdeal:
    """External (shift +1) or internal (shift -1) power ideal.

    For the internal ideal a bridge gives x_S^0 = 1, and ``unit`` is set.
    """
    if shift not in (1, -1):
        raise ValidationError("shift must be +1 (external) or -1 (internal)")
    return _power_ideal(G, shift)


def macaulay_check(G: Multigraph, *, max_edges: int = DEFAULT_MAX_EDGES):
    """Every central power-ideal generator kills every slim p_Y under p(∂)."""
    from .divisors import CheckReport

    report = CheckReport("macaulay")
    ideal = central_power_ideal(G)
    polys = slim_polynomials(G, max_edges=max_edges)
    for Y, f in polys.items():
        for label, (side, e) in zip(ideal.labels, ideal.powers):
            report.checked += 1
            if apply_linear_power(side, e, f):
                report.fail(generator=label, subset=list(Y))
                return report
    return report


def _monomials(n: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def _falling(a: int, b: int) -> int:
    r = 1
    for t in range(b):
        r *= a - t
    return r


def _operator_rows(gen: MultiPoly, monos: list[tuple[int, ...]], col: dict) -> list[list[int]]:
    """Matrix of f -> gen(∂) f on the degree-d monomial basis, one row per output monomial."""
    rows: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for alpha in monos:
        ca = col[alpha]
        for beta, c in gen.terms.items():
            if all(a >= b for a, b in zip(alpha, beta)):
                coeff = c * prod(_falling(a, b) for a, b in zip(alpha, beta))
                out = tuple(a - b for a, b in zip(alpha, beta))
                r = rows.setdefault(out, {})
                r[ca] = r.get(ca, 0) + coeff
    width = len(monos)
    dense = []
    for r in rows.values():
        row = [0] * width
        for k, v in r.items():
            row[k] = v
        dense.append(row)
    return dense


def _check_generators(generators: Sequence[MultiPoly], n: int) -> dict[int, list[MultiPoly]]:
    by_degree: dict[int, list[MultiPoly]] = {}
    seen = set()
    for g in generators:
        if g.n != n:
            raise ValidationError("generator variable count does not match n")
        if not g.is_homogeneous():
            raise ValidationError(f"generator {g!r} is not homogeneous")
        if not g or g in seen or -g in seen:
            continue
        seen.add(g)
        by_degree.setdefault(g.degree(), []).append(g)
    return by_degree


def _direct_dims(by_degree: dict[int, list[MultiPoly]], n: int, degree_cap: int) -> list[int]:
    dims = []
    for d in range(degree_cap + 1):
        monos = _monomials(n, d)
        col = {a: k for k, a in enumerate(monos)}
        rows = []
        for e, gs in by_degree.items():
            if e <= d:
                for g in gs:
                    rows.extend(_operator_rows(g, monos, col))
        dim = len(monos) - rank(rows) if rows else len(monos)
        if dim == 0:
            return dims
        dims.append(dim)
    raise CapExceeded(f"inverse system still nonzero at the degree cap {degree_cap}")


def _incremental_dims(by_degree: dict[int, list[MultiPoly]], n: int, degree_cap: int) -> list[int]:
    """Build each K_d from K_{d-1}.

    f of degree d is killed by every generator of degree < d exactly when each
    ∂_l f lies in K_{d-1}.  So write ∂_l f = φ_l = Σ_j c_{lj} b_j over a basis
    b of K_{d-1}; the φ_l come from a single f iff ∂_m φ_l = ∂_l φ_m, and then
    d·f = Σ_l x_l φ_l.  Both sides of that condition lie in K_{d-2}, so it is
    enough to compare them on the pivot columns of K_{d-2}.  The generators of
    degree d add one scalar condition each.
    """
    monos_prev = [(0,) * n]
    basis_prev = [[1]]  # K_0: constants
    piv_prev = [0]
    piv2: list[tuple[int, ...]] = []
    dims = [1]
    for d in range(1, degree_cap + 1):
        k = len(basis_prev)
        idx_prev = {a: t for t, a in enumerate(monos_prev)}
        nk = n * k
        rows: list[list[int]] = []
        for gamma in piv2:
            for l in range(n):
                gl = list(gamma)
                gl[l] += 1
                tl = idx_prev[tuple(gl)]
                for m in range(l + 1, n):
                    gm = list(gamma)
                    gm[m] += 1
                    tm = idx_prev[tuple(gm)]
                    row = [0] * nk
                    for j, b in enumerate(basis_prev):
                        row[l * k + j] = (gamma[m] + 1) * b[tm]
                        row[m * k + j] = -(gamma[l] + 1) * b[tl]
                    if any(row):
                        rows.append(row)
        for g in by_degree.get(d, []):
            row = [0] * nk
            for alpha, c in g.terms.items():
                l = next(i for i, a in enumerate(alpha) if a)
                beta = list(alpha)
                beta[l] -= 1
                t = idx_prev[tuple(beta)]
                w = c * prod(factorial(a) for a in beta)
                for j, b in enumerate(basis_prev):
                    row[l * k + j] += w * b[t]
            rows.append(row)
        null = nullspace(rows, nk) if rows else [[int(i == j) for j in range(nk)] for i in range(nk)]
        if not null:
            return dims
        # d·f = Σ_l x_l φ_l, gathered through the shift β -> β + e_l
        monos = _monomials(n, d)
        idx = {a: t for t, a in enumerate(monos)}
        shifts = []
        for l in range(n):
            pairs = []
            for t, beta in enumerate(monos_prev):
                up = list(beta)
                up[l] += 1
                pairs.append((idx[tuple(up)], t))
            shifts.append(pairs)
        phis = [matmul([v[l * k:(l + 1) * k] for v in null], basis_prev) for l in range(n)]
        F = []
        for r in range(len(null)):
            acc = [0] * len(monos)
            for l in range(n):
                phi = phis[l][r]
                for t_up, t in shifts[l]:
                    if phi[t]:
                        acc[t_up] += phi[t]
            F.append(acc)
        basis, pivots = row_space_basis(F, len(monos))
        if len(basis) != len(null):
            raise ArithmeticError("inverse-system basis lost rank")  # pragma: no cover
        dims.append(len(basis))
        piv2 = [monos_prev[t] for t in piv_prev]
        monos_prev, basis_prev, piv_prev = monos, basis, pivots
    raise CapExceeded(f"inverse system still nonzero at the degree cap {degree_cap}")


def inverse_system_dims(generators: Sequence[MultiPoly], n: int, degree_cap: int, *,
                        method: str = "incremental") -> list[int]:
    """Graded dimension of {f : g(∂) f = 0 for every generator g}.

    Computed degree by degree as an exact kernel dimension; stops at the first
    degree with a zero kernel (the annihilator is closed under ∂_i, so higher
    degrees vanish too).  Raises CapExceeded if that never happens by
    ``degree_cap``.

    ``method="direct"`` stacks every generator's operator matrix in each
    degree; ``"incremental"`` (default) derives K_d from K_{d-1} on far smaller
    matrices.  Both are exact and agree.
    """
    by_degree = _check_generators(generators, n)
    if 0 in by_degree:
        return []
    if method == "direct":
        return _direct_dims(by_degree, n, degree_cap)
    if method == "incremental":
        return _incremental_dims(by_degree, n, degree_cap)
    raise ValidationError(f"unknown method {method!r}")


# group projections ------------------------------------------------------------


def reynolds(f: MultiPoly, grp: PermGroup, *, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> MultiPoly:
    """Average of σ·f over the group."""
    elems = grp.elements(cap=max_order)
    acc: dict = {}
    for s in elems:
        for e, c in f.permute(s).terms.items():
            acc[e] = acc.get(e, 0) + c
    return MultiPoly(f.n, {e: Fraction(c, len(elems)) for e, c in acc.items()})


def sign_projection(f: MultiPoly, grp: PermGroup, *, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> MultiPoly:
    """(1/|G|) Σ sign(σ) σ·f."""
    elems = grp.elements(cap=max_order)
    acc: dict = {}
    for s in elems:
        sg = sign(s)
        for e, c in f.permute(s).terms.items():
            acc[e] = acc.get(e, 0) + sg * c
    return MultiPoly(f.n, {e: Fraction(c, len(elems)) for e, c in acc.items()})


def _sort_within_blocks(e: tuple[int, ...], blocks: Sequence[int]) -> tuple[tuple[int, ...], int, bool]:
    """Canonical exponent (descending inside each block), sign of the sorting
    permutation, and whether some block repeats an exponent."""
    out: list[int] = []
    sgn, repeated, start = 1, False, 0
    for b in blocks:
        part = list(e[start:start + b])
        inv = sum(1 for x in range(b) for y in range(x + 1, b) if part[x] < part[y])
        if inv % 2:
            sgn = -sgn
        if len(set(part)) < b:
            repeated = True
        out.extend(sorted(part, reverse=True))
        start += b
    return tuple(out), sgn, repeated


def invariant_coordinates(f: MultiPoly, blocks: Sequence[int]) -> dict:
    """Coordinates of the Young-subgroup Reynolds image of f.

    The average of σ·f is Σ_O (mean of f over monomial orbit O) · (orbit sum
    of O); rescaling each coordinate by |O| gives the plain orbit sums used
    here.  Linear in f, so ranks agree with those of the averaged polynomials.
    """
    out: dict = {}
    for e, c in f.terms.items():
        key, _, _ = _sort_within_blocks(e, blocks)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def sign_coordinates(f: MultiPoly, blocks: Sequence[int]) -> dict:
    """Coordinates of the sign projection of f for a Young subgroup.

    A monomial whose stabiliser holds a transposition projects to zero; the
    others contribute ± their coefficient to their orbit's alternating sum.
    """
    out: dict = {}
    for e, c in f.terms.items():
        key, sgn, repeated = _sort_within_blocks(e, blocks)
        if repeated:
            continue
        out[key] = out.get(key, 0) + sgn * c
    return {k: v for k, v in out.items() if v}


def _pair_permutation(G: Multigraph, perm) -> list[int]:
    index = {(i, j): k for k, (i, j, _) in enumerate(G.edges)}
    out = []
    for i, j, m in G.edges:
        a, b = perm[i - 1], perm[j - 1]
        k = index.get((min(a, b), max(a, b)))
        if k is None or G.edges[k][2] != m:
            raise ValidationError(f"permutation {perm} is not an automorphism of the graph")
        out.append(k)
    return out


def orbit_representatives(G: Multigraph, subsets: Sequence[EdgeCounts], grp: PermGroup) -> list[EdgeCounts]:
    """One count vector per orbit of the induced action on edge sub-multisets."""
    moves = [_pair_permutation(G, g) for g in grp.generators]
    index = {Y: k for k, Y in enumerate(subsets)}
    parent = list(range(len(subsets)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for k, Y in enumerate(subsets):
        for mv in moves:
            Z = [0] * len(Y)
            for src, dst in enumerate(mv):
                Z[dst] = Y[src]
            j = index[tuple(Z)]
            a, b = find(k), find(j)
            if a != b:
                parent[a] = b
    reps: dict[int, EdgeCounts] = {}
    for k, Y in enumerate(subsets):
        r = find(k)
        if r not in reps or Y > reps[r]:
            reps[r] = Y
    return sorted(reps.values())


def _projected_hilbert(G: Multigraph, blocks: Sequence[int], coords: Callable, *,
                       method: str, projector: Callable, max_edges: int, max_order: int,
                       threads: int) -> list[int]:
    grp = young_subgroup(blocks)
    if grp.degree != G.n:
        raise ValidationError("block sizes do not add up to the vertex count")
    subsets = slim_subsets(G, max_edges=max_edges)
    reps = orbit_representatives(G, subsets, grp)
    polys = slim_polynomials(G, subsets=reps)
    if method == "average":
        return graded_rank((projector(p, grp, max_order=max_order) for p in polys.values()), threads=threads)
    if method != "orbit-sum":
        raise ValidationError(f"unknown method {method!r}")
    by_degree: dict[int, list[dict]] = {}
    for Y, p in polys.items():
        v = coords(p, blocks)
        if v:
            by_degree.setdefault(sum(Y), []).append(v)
    return graded_rank_of_vectors(by_degree, threads=threads)


def invariant_hilbert(G: Multigraph, blocks: Sequence[int], *, method: str = "orbit-sum",
                      max_edges: int = DEFAULT_MAX_EDGES, max_order: int = DEFAULT_MAX_GROUP_ORDER,
                      threads: int = 1) -> list[int]:
    """Hilbert series of P(G)^{S_blocks}."""
    return _projected_hilbert(G, blocks, invariant_coordinates, method=method, projector=reynolds,
                              max_edges=max_edges, max_order=max_order, threads=threads)


def sign_isotypic_dims(G: Multigraph, blocks: Sequence[int], *, method: str = "orbit-sum",
                       max_edges: int = DEFAULT_MAX_EDGES, max_order: int = DEFAULT_MAX_GROUP_ORDER,
                       threads: int = 1) -> list[int]:
    """Hilbert series of the sign-isotypic part of P(G) under S_blocks."""
    return _projected_hilbert(G, blocks, sign_coordinates, method=method, projector=sign_projection,
                              max_edges=max_edges, max_order=max_order, threads=threads)


@dataclass
class QuantumDT:
    """Ω̃_γ(q) with its Efimov grading data."""

    dims: list[int]
    chi: int
    n_gamma: int

    @property
    def value_at_one(self) -> int:
        return sum(self.dims)

    def efimov_gradings(self) -> dict[int, int]:
        """Grading 2d + χ_Q(γ,γ) -> c_{γ,k}."""
        return {2 * d + self.chi: c for d, c in enumerate(self.dims) if c}

    def to_json(self) -> dict:
        return {
            "omega_tilde": self.dims,
            "chi": self.chi,
            "n_gamma": self.n_gamma,
            "dt": self.value_at_one,
            "efimov_gradings": [[k, c] for k, c in sorted(self.efimov_gradings().items())],
        }


def quantum_dt(Q: SymmetricQuiver, gamma: Sequence[int], *, method: str = "orbit-sum",
               max_edges: int = DEFAULT_MAX_EDGES, max_order: int = DEFAULT_MAX_GROUP_ORDER,
               threads: int = 1) -> QuantumDT:
    """Hilbert series of P(G_{Q,γ})^{S_γ}."""
    cg = covering_graph(Q, gamma)
    grp = young_subgroup(cg.gamma)
    if grp.order() > max_order:
        raise CapExceeded(f"|S_γ| = {grp.order()} exceeds the cap {max_order}")
    dims = invariant_hilbert(cg.graph, cg.gamma, method=method, max_edges=max_edges,
                             max_order=max_order, threads=threads)
    return QuantumDT(dims, euler_form(Q, cg.gamma, cg.gamma), n_gamma(Q, cg.gamma))


def sign_isotypic_dt(Q: SymmetricQuiver, gamma: Sequence[int], **kwargs) -> list[int]:
    """Sign-isotypic Hilbert series of P(G⁺), G⁺ the covering graph of Q⁺."""
    cg = covering_graph(plus_one_loop(Q), gamma)
    return sign_isotypic_dims(cg.graph, cg.gamma, **kwargs)


def vandermonde_degree(gamma: Sequence[int]) -> int:
    return sum(g * (g - 1) // 2 for g in gamma)


# Efimov's cut elements ------------------------------------------------------


def efimov_f(Q: SymmetricQuiver, gamma: Sequence[int], delta: Sequence[int]) -> MultiPoly:
    """f_{δ,δ̄} written in the global variables x_1..x_n of the covering graph."""
    from .quiver import check_dimension_vector, global_index

    gamma = check_dimension_vector(Q, gamma)
    if len(delta) != len(gamma) or any(not 0 <= d <= g for d, g in zip(delta, gamma)):
        raise ValidationError("δ must satisfy 0 <= δ_i <= γ_i")
    if sum(delta) == 0 or tuple(delta) == gamma:
        raise ValidationError("δ and γ - δ must both be nonzero")
    n = sum(gamma)
    f = MultiPoly.constant(n)
    for i in range(1, Q.k + 1):
        for j in range(1, Q.k + 1):
            e = Q.a[i - 1][j - 1] - (1 if i == j else 0)
            if e == 0:
                continue
            for a1 in range(1, delta[i - 1] + 1):
                for a2 in range(delta[j - 1] + 1, gamma[j - 1] + 1):
                    u, v = global_index(gamma, j, a2), global_index(gamma, i, a1)
                    form = MultiPoly.var(n, u) - MultiPoly.var(n, v)
                    f = f * form**e
    return f


def cut_polynomial(G: Multigraph, S: Iterable[int]) -> MultiPoly:
    """p_Y for Y the full edge cut ∂(S)."""
    S = set(S)
    counts = tuple(m if (i in S) != (j in S) else 0 for i, j, m in G.edges)
    return p_of_edges(G, counts)


def initial_segment_side(gamma: Sequence[int], delta: Sequence[int]) -> list[int]:
    from .quiver import global_index

    return [global_index(gamma, i + 1, a) for i, d in enumerate(delta) for a in range(1, d + 1)]
