"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import ValidationError

Exp = tuple[int, ...]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class MultiPoly:
    """Polynomial in ``x_1..x_n`` stored as ``{exponent tuple: coefficient}``.

    Coefficients are ``int`` or ``Fraction``; zero coefficients are never
    stored.  Instances are treated as immutable.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exp, Rational] | None = None):
        self.n = n
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != n:
                raise ValidationError(f"exponent {e} has length {len(e)}, expected {n}")
            if c:
                clean[tuple(e)] = _norm(c)
        self.terms = clean

    # constructors ------------------------------------------------------

    @classmethod
    def constant(cls, n: int, c=1) -> "MultiPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, i: int) -> "MultiPoly":
        """The variable x_i (1-based)."""
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "MultiPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms)

    @classmethod
    def subset_sum(cls, n: int, S: Iterable[int]) -> "MultiPoly":
        """x_S = sum of x_i over i in S."""
        S = set(S)
        return cls.linear([1 if i + 1 in S else 0 for i in range(n)])

    # arithmetic --------------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if other.n != self.n:
            raise ValidationError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.n, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return MultiPoly(self.n, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exp, Rational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.n, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return MultiPoly(self.n, {e: Fraction(c) / scalar for e, c in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # structure ---------------------------------------------------------

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def top_part(self) -> "MultiPoly":
        return self.homogeneous_part(self.degree())

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Substitute x_i -> x_{perm(i)}; ``perm`` is 1-based images."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.n
            for i, a in enumerate(e):
                new[perm[i] - 1] = a
            out[tuple(new)] = c
        return MultiPoly(self.n, out)

    def diff(self, i: int) -> "MultiPoly":
        """∂/∂x_i (1-based)."""
        k = i - 1
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                new = list(e)
                new[k] -= 1
                out[tuple(new)] = c * e[k]
        return MultiPoly(self.n, out)

    def __call__(self, point: Sequence) -> Rational:
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, a in zip(point, e):
                if a:
                    t *= v**a
            total += t
        return _norm(total) if isinstance(total, Fraction) else total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-a for a in e))):
            c = self.terms[e]
            mono = "*".join(f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # serialization -----------------------------------------------------

    def to_json(self) -> dict:
        out = []
        for e in sorted(self.terms):
            c = Fraction(self.terms[e])
            out.append({"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)})
        return {"terms": out}

    @classmethod
    def from_json(cls, data: Mapping, n: int | None = None) -> "MultiPoly":
        terms = data.get("terms")
        if not isinstance(terms, list):
            raise ValidationError('polynomial JSON needs a "terms" list')
        out = {}
        for t in terms:
            try:
                e = tuple(int(a) for a in t["exp"])
                c = Fraction(int(t["num"]), int(t["den"]))
            except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
                raise ValidationError(f"bad polynomial term {t!r}") from exc
            if any(a < 0 for a in e):
                raise ValidationError(f"negative exponent in {t!r}")
            out[e] = out.get(e, 0) + c
        if n is None:
            if not out:
                raise ValidationError("cannot infer the variable count of the zero polynomial")
            n = len(next(iter(out)))
        return cls(n, out)


def apply_operator(p: MultiPoly, f: MultiPoly) -> MultiPoly:
    """p(∂_1, ..., ∂_n) applied to f."""
    p._check(f)
    result = MultiPoly(f.n)
    for e, c in p.terms.items():
        g = f
        for i, a in enumerate(e):
            for _ in range(a):
                g = g.diff(i + 1)
                if not g:
                    break
            if not g:
                break
        if g:
            result = result + g * c
    return result
