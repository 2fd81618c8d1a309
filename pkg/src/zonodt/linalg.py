"""Exact integer/rational linear algebra.

Everything here works over arbitrary-precision integers.  Rational input is
scaled row by row to a common denominator before elimination, which leaves
ranks unchanged.

Large rank computations are delegated to FLINT (``python-flint``) when it is
importable; the pure-Python Bareiss routines below are the reference
implementation and are used for small matrices and as the fallback.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

try:  # pragma: no cover - exercised implicitly when installed
    import flint as _flint
except ImportError:  # pragma: no cover
    _flint = None

# below this many entries the pure-Python path is fast enough
FLINT_THRESHOLD = 4000


def integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for row in rows:
        fracs = [v.denominator for v in row if type(v) is Fraction]
        if not fracs:
            out.append([int(v) for v in row])
            continue
        den = lcm(*fracs)
        out.append([int(v * den) for v in row])
    return out


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    a = [list(map(int, row)) for row in rows if any(row)]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, len(a)):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pivot = a[rank][col]
        row_p = a[rank]
        for i in range(rank + 1, len(a)):
            row_i = a[i]
            f = row_i[col]
            if f == 0:
                # still needs the division step to stay fraction free
                for j in range(col + 1, ncols):
                    row_i[j] = (row_i[j] * pivot) // prev
            else:
                for j in range(col + 1, ncols):
                    row_i[j] = (row_i[j] * pivot - f * row_p[j]) // prev
                row_i[col] = 0
        prev = pivot
        rank += 1
        if rank == len(a):
            break
    return rank


def rank(rows: Sequence[Sequence], *, backend: str = "auto") -> int:
    """Exact rank of a matrix with integer or Fraction entries.

    ``backend`` is one of ``"auto"``, ``"bareiss"`` or ``"flint"``.
    """
    irows = integer_rows(rows)
    irows = [r for r in irows if any(r)]
    if not irows:
        return 0
    if backend == "auto":
        use_flint = _flint is not None and len(irows) * len(irows[0]) > FLINT_THRESHOLD
    elif backend == "flint":
        if _flint is None:
            raise RuntimeError("python-flint is not installed")
        use_flint = True
    elif backend == "bareiss":
        use_flint = False
    else:
        raise ValueError(f"unknown backend {backend!r}")
    if use_flint:
        return _flint.fmpz_mat(irows).rank()
    return bareiss_rank(irows)


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    lead = next((v for v in row if v), 0)
    return [-v for v in row] if lead < 0 else row


def _fraction_rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    a = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        a[r] = [v / p for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def _use_flint(nrows: int, ncols: int, backend: str) -> bool:
    if backend == "flint":
        if _flint is None:
            raise RuntimeError("python-flint is not installed")
        return True
    if backend == "bareiss":
        return False
    if backend != "auto":
        raise ValueError(f"unknown backend {backend!r}")
    return _flint is not None and nrows * ncols > FLINT_THRESHOLD


def row_space_basis(rows: Sequence[Sequence], ncols: int, *, backend: str = "auto") -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon basis of the row space, each row scaled to primitive integers.

    Returns the rows and their pivot columns.
    """
    irows = [r for r in integer_rows(rows) if any(r)]
    if not irows:
        return [], []
    if _use_flint(len(irows), ncols, backend):
        R, _den, rk = _flint.fmpz_mat(irows).rref()
        table = R.table()
        out = [[int(v) for v in table[i]] for i in range(rk)]
    else:
        fr, _ = _fraction_rref(irows, ncols)
        out = integer_rows(fr)
    out = [_primitive(r) for r in out]
    pivots = [next(j for j, v in enumerate(r) if v) for r in out]
    return out, pivots


def nullspace(rows: Sequence[Sequence], ncols: int, *, backend: str = "auto") -> list[list[int]]:
    """Integer basis of {v : A v = 0} for the matrix with the given rows."""
    irows = [r for r in integer_rows(rows) if any(r)]
    if not irows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    if _use_flint(len(irows), ncols, backend):
        X, nullity = _flint.fmpz_mat(irows).nullspace()
        tab = X.table()
        return [_primitive([int(tab[i][k]) for i in range(ncols)]) for k in range(nullity)]
    fr, pivots = _fraction_rref(irows, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(fr, pivots):
            v[p] = -row[f]
        basis.append(_primitive(integer_rows([v])[0]))
    return basis


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    """Integer matrix product."""
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    if _flint is not None and len(a) * len(b) * len(b[0]) > FLINT_THRESHOLD:
        prod_ = _flint.fmpz_mat([list(r) for r in a]) * _flint.fmpz_mat([list(r) for r in b])
        return [[int(v) for v in row] for row in prod_.table()]
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def solve_rational(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a nonsingular square system exactly over the rationals."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]
