"""Sparse multivariate polynomials with exact rational coefficients.

Variables are ``x1 .. xN`` and every index exposed by this module is
1-based, matching the notation ``D_i = d/dx_i``.  Coefficients are kept as
``int`` whenever they are integral and as :class:`fractions.Fraction`
otherwise; both compare and hash consistently.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

__all__ = [
    "ArityError",
    "Poly",
    "mono",
    "const",
    "var",
    "det",
    "det_cofactor",
    "det_bareiss",
    "grlex_key",
    "parse_poly",
    "parse_rational",
    "format_rational",
]


class ArityError(ValueError):
    """Operands live in polynomial rings with different numbers of variables."""


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(exps: Sequence[int]) -> tuple:
    """Sort key for graded lexicographic order (ascending, x1 most significant)."""
    return (sum(exps), tuple(exps))


class Poly:
    """Immutable sparse polynomial ``{exponent tuple: coefficient}``.

    No stored coefficient is ever zero, so two polynomials are equal exactly
    when their term dictionaries are equal.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        if nvars < 0:
            raise ArityError(f"negative arity {nvars}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ArityError(f"exponent {exps} does not have length {nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = _norm(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
            if c:
                c = _norm(clean.get(exps, 0) + c)
                if c:
                    clean[exps] = c
                else:
                    clean.pop(exps, None)
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Poly":
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- construction helpers -------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    # -- basic protocol ---------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def _check(self, other: "Poly") -> None:
        if other.nvars != self.nvars:
            raise ArityError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return const(other, self.nvars)
        return NotImplemented

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._raw(self.nvars, {e: _norm(c) for e, c in out.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out = const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Poly":
        c = _norm(Fraction(c)) if not isinstance(c, (int, Fraction)) else _norm(c)
        if not c:
            return Poly._raw(self.nvars, {})
        return Poly._raw(self.nvars, {e: _norm(v * c) for e, v in self.terms.items()})

    # -- calculus ---------------------------------------------------------
    def deriv(self, i: int) -> "Poly":
        """Partial derivative with respect to ``x_i`` (1-based)."""
        if not 1 <= i <= self.nvars:
            raise IndexError(f"axis {i} out of range 1..{self.nvars}")
        k = i - 1
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = e[:k] + (e[k] - 1,) + e[k + 1:]
                out[ne] = c * e[k]
        return Poly._raw(self.nvars, out)

    # -- inspection -------------------------------------------------------
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def sorted_terms(self, reverse: bool = True) -> list:
        """Terms in graded lexicographic order, leading term first by default."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=reverse)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ArityError("evaluation point has wrong length")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for x, k in zip(point, e):
                t *= Fraction(x) ** k
            total += t
        return _norm(total)

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient of an exact division; raises ``ValueError`` if it is not exact."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = other.leading_term()
        rem = self
        quot: dict = {}
        while rem.terms:
            re_, rc = rem.leading_term()
            qe = tuple(a - b for a, b in zip(re_, le))
            if any(x < 0 for x in qe):
                raise ValueError("division is not exact")
            qc = _norm(Fraction(rc) / lc)
            quot[qe] = _norm(quot.get(qe, 0) + qc)
            rem = rem - Poly._raw(self.nvars, {qe: qc}) * other
        return Poly._raw(self.nvars, {e: c for e, c in quot.items() if c})


def mono(exps: Sequence[int], nvars: int | None = None, coeff=1) -> Poly:
    """The monomial ``coeff * x^exps``; ``nvars`` guards the expected arity."""
    exps = tuple(int(e) for e in exps)
    if nvars is not None and len(exps) != nvars:
        raise ArityError(f"multi-index {exps} does not have length {nvars}")
    if any(e < 0 for e in exps):
        raise ValueError(f"negative exponent in {exps}")
    return Poly(len(exps), {exps: coeff})


def const(c, nvars: int) -> Poly:
    return Poly(nvars, {(0,) * nvars: c})


def var(i: int, nvars: int) -> Poly:
    """The coordinate ``x_i`` (1-based)."""
    if not 1 <= i <= nvars:
        raise IndexError(f"variable {i} out of range 1..{nvars}")
    e = [0] * nvars
    e[i - 1] = 1
    return Poly._raw(nvars, {tuple(e): 1})


# -- determinants ------------------------------------------------------------

def _square(rows) -> int:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    return n


def _arity(rows) -> int:
    arities = {p.nvars for r in rows for p in r}
    if len(arities) > 1:
        raise ArityError(f"mixed arities {sorted(arities)} in matrix")
    return arities.pop() if arities else 0


def det_cofactor(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Laplace expansion along the first row."""
    n = _square(rows)
    nv = _arity(rows)
    if n == 0:
        return const(1, nv)
    return _laplace([list(r) for r in rows], tuple(range(n)), nv)


def _laplace(rows, cols, nv) -> Poly:
    depth = len(rows) - len(cols)
    if len(cols) == 1:
        return rows[depth][cols[0]]
    if len(cols) == 2:
        a, b = cols
        r0, r1 = rows[depth], rows[depth + 1]
        return r0[a] * r1[b] - r0[b] * r1[a]
    total = Poly.zero(nv)
    for k, c in enumerate(cols):
        entry = rows[depth][c]
        if not entry:
            continue
        minor = _laplace(rows, cols[:k] + cols[k + 1:], nv)
        total = total + entry * minor if k % 2 == 0 else total - entry * minor
    return total


def det_bareiss(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Fraction-free Gaussian elimination (Bareiss) with exact polynomial division."""
    n = _square(rows)
    nv = _arity(rows)
    if n == 0:
        return const(1, nv)
    m = [list(r) for r in rows]
    sign = 1
    prev = const(1, nv)
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(nv)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = Poly.zero(nv)
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def det(rows: Sequence[Sequence[Poly]], method: str = "auto") -> Poly:
    """Exact determinant: cofactor expansion up to 4x4, Bareiss above."""
    n = _square(rows)
    if method == "cofactor" or (method == "auto" and n <= 4):
        return det_cofactor(rows)
    if method in ("bareiss", "auto"):
        return det_bareiss(rows)
    raise ValueError(f"unknown determinant method {method!r}")


def det_leibniz(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Permutation-sum determinant; slow, kept as an independent check."""
    n = _square(rows)
    nv = _arity(rows)
    total = Poly.zero(nv)
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = const(1, nv)
        for r, c in enumerate(perm):
            term = term * rows[r][c]
            if not term:
                break
        total = total - term if inv % 2 else total + term
    return total


# -- text form ---------------------------------------------------------------

def format_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_rational(s: str) -> Fraction | int:
    return _norm(Fraction(s.strip()))


def format_poly(p: Poly) -> str:
    """Canonical text: ``c * x1^a1*...*xN^aN`` terms joined by `` + ``."""
    if not p.terms:
        return "0"
    parts = []
    for e, c in p.sorted_terms():
        if p.nvars:
            body = "*".join(f"x{i + 1}^{k}" for i, k in enumerate(e))
            parts.append(f"{format_rational(c)} * {body}")
        else:
            parts.append(format_rational(c))
    return " + ".join(parts)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_poly(text: str, nvars: int) -> Poly:
    """Parse the canonical form, or looser input such as ``x1^2*x2 - 3/2*x1 + 1``."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    # split on top-level signs that are not part of a rational like "1/-2"
    tokens = _TERM_SPLIT.split(s if s[0] in "+-" else "+" + s)
    if not tokens[-1].strip():
        raise ValueError(f"malformed polynomial {text!r}")
    terms: dict = {}
    negative = False
    for sign, body in zip(tokens[1::2], tokens[2::2]):
        negative ^= sign == "-"
        body = body.strip()
        if not body:
            # consecutive signs, as in the canonical "+ -3/2 * ..."
            continue
        sign = "-" if negative else "+"
        negative = False
        coeff: Fraction | int = 1
        exps = [0] * nvars
        for factor in (f.strip() for f in body.split("*")):
            if not factor:
                raise ValueError(f"malformed term {body!r}")
            m = _FACTOR.match(factor)
            if m:
                i = int(m.group(1))
                if not 1 <= i <= nvars:
                    raise ArityError(f"variable x{i} outside 1..{nvars}")
                exps[i - 1] += int(m.group(2) or 1)
            else:
                coeff = coeff * Fraction(factor)
        c = -coeff if sign == "-" else coeff
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + c
    return Poly(nvars, terms)


def from_terms(nvars: int, items: Iterable[tuple]) -> Poly:
    """Build from ``(coeff, exps)`` pairs."""
    d: dict = {}
    for c, e in items:
        d[tuple(e)] = d.get(tuple(e), 0) + c
    return Poly(nvars, d)
