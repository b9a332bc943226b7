"""The four simple linearly compact n-Lie brackets and identity checkers.

* ``W^n``: polynomials in ``n-1`` variables, determinant with a row of values
  on top of the ``n-1`` rows of partial derivatives.
* ``S^n``: polynomials in ``n`` variables, Jacobian determinant.
* ``C^{n+1}``: the generalized vector product.
* ``SW^n``: ``n-1`` copies of one-variable series.

Series are always truncated to polynomials; brackets never raise degrees
beyond the inputs' sum so nothing is lost.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import linalg
from .poly import ArityError, Poly, det, mono

__all__ = [
    "bracket_w",
    "bracket_s",
    "bracket_vp",
    "bracket_sw",
    "TaggedSeries",
    "adjoint_action",
    "WAlgebra",
    "SAlgebra",
    "VPAlgebra",
    "SWAlgebra",
    "algebra",
    "filippov_residual",
    "derivation_residual",
    "corrupted_bracket_w",
]


def _w_matrix(fs: Sequence[Poly]) -> list[list[Poly]]:
    n = len(fs)
    for f in fs:
        if f.nvars != n - 1:
            raise ArityError(f"W^{n} bracket needs polynomials in {n - 1} variables")
    return [list(fs)] + [[f.deriv(i) for f in fs] for i in range(1, n)]


def bracket_w(fs: Sequence[Poly]) -> Poly:
    """``[f_1, ..., f_n]`` of W^n."""
    if len(fs) < 3:
        raise ValueError("W^n brackets need n >= 3 arguments")
    return det(_w_matrix(fs))


def adjoint_action(fs: Sequence[Poly], h: Poly) -> Poly:
    """``ad(f_1 ^ ... ^ f_{n-1})(h) = [f_1, ..., f_{n-1}, h]``."""
    return bracket_w(list(fs) + [h])


def bracket_s(fs: Sequence[Poly]) -> Poly:
    """``det(D_i f_j)`` for ``n`` polynomials in ``n`` variables."""
    n = len(fs)
    for f in fs:
        if f.nvars != n:
            raise ArityError(f"S^{n} bracket needs polynomials in {n} variables")
    return det([[f.deriv(i) for f in fs] for i in range(1, n + 1)])


def bracket_vp(vs: Sequence[Sequence]) -> tuple:
    """Generalized vector product on ``F^{n+1}``.

    Coordinate ``i`` is ``(-1)^(n+i-1)`` times the determinant of the
    argument matrix with column ``i`` removed, which reproduces
    ``[e_1, ..., ^e_i, ..., e_{n+1}] = (-1)^(n+i-1) e_i``.
    """
    n = len(vs)
    if any(len(v) != n + 1 for v in vs):
        raise ArityError(f"vector product of {n} vectors needs length {n + 1}")
    rows = [[Fraction(x) for x in v] for v in vs]
    out = []
    for i in range(1, n + 2):
        minor = [r[: i - 1] + r[i:] for r in rows]
        out.append(Fraction(linalg.det(minor)) * (-1) ** (n + i - 1))
    return tuple(out)


@dataclass(frozen=True)
class TaggedSeries:
    """``series^{(copy)}``: an element of the ``copy``-th summand of SW^n."""

    copy: int
    series: Poly

    def __post_init__(self):
        if self.copy < 1:
            raise ValueError(f"copy tag {self.copy} must be >= 1")
        if self.series.nvars != 1:
            raise ArityError("SW^n series are polynomials in one variable")


def _perm_sign(order: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(order)
    for start in range(len(order)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = order[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def bracket_sw(fs: Sequence[TaggedSeries]) -> TaggedSeries | None:
    """SW^n bracket on tagged series; ``None`` stands for zero.

    The bracket is only displayed for the canonical argument pattern
    ``(1, ..., k-1, k, k, k+1, ..., n-1)``; other orders are sorted into it and
    pick up the sign of the sorting permutation.
    """
    n = len(fs)
    if n < 3:
        raise ValueError("SW^n brackets need n >= 3 arguments")
    for f in fs:
        if not 1 <= f.copy <= n - 1:
            raise ValueError(f"copy tag {f.copy} outside 1..{n - 1}")
    tags = sorted(f.copy for f in fs)
    if set(tags) != set(range(1, n)):
        return None
    k = next(t for a, t in zip(tags, tags[1:]) if a == t)
    order = sorted(range(n), key=lambda i: fs[i].copy)
    sign = _perm_sign(order)
    g = [fs[i].series for i in order]
    d = lambda p: p.deriv(1)  # noqa: E731
    core = d(g[k - 1]) * g[k] - d(g[k]) * g[k - 1]
    for idx, p in enumerate(g):
        if idx not in (k - 1, k):
            core = core * p
    if not core:
        return None
    return TaggedSeries(k, core.scale(sign * (-1) ** (k + n)))


# -- algebra descriptors used by the identity checkers --------------------------

class _Algebra:
    n: int

    def zero(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def bracket(self, args):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def random_element(self, rng: random.Random, max_degree: int = 3):
        raise NotImplementedError


def _random_poly(rng: random.Random, nvars: int, max_degree: int, nterms: int = 1) -> Poly:
    p = Poly.zero(nvars)
    while not p:
        for _ in range(nterms):
            exps = [0] * nvars
            for _ in range(rng.randint(0, max_degree)):
                exps[rng.randrange(nvars)] += 1
            p = p + mono(exps).scale(rng.choice([-2, -1, 1, 2, 3]))
    return p


class WAlgebra(_Algebra):
    name = "w"

    def __init__(self, n: int, bracket: Callable | None = None):
        if n < 3:
            raise ValueError("n >= 3 required")
        self.n = n
        self._bracket = bracket or bracket_w

    def zero(self):
        return Poly.zero(self.n - 1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def bracket(self, args):
        return self._bracket(list(args))

    def random_element(self, rng, max_degree=3):
        return _random_poly(rng, self.n - 1, max_degree)


class SAlgebra(WAlgebra):
    name = "s"

    def __init__(self, n: int):
        super().__init__(n, bracket_s)

    def zero(self):
        return Poly.zero(self.n)

    def random_element(self, rng, max_degree=3):
        return _random_poly(rng, self.n, max_degree)


class VPAlgebra(_Algebra):
    name = "vp"

    def __init__(self, n: int):
        self.n = n

    def zero(self):
        return (Fraction(0),) * (self.n + 1)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def bracket(self, args):
        return bracket_vp(args)

    def random_element(self, rng, max_degree=3):
        return tuple(Fraction(rng.randint(-2, 2)) for _ in range(self.n + 1))


class SWAlgebra(_Algebra):
    """Elements are tuples of ``n-1`` one-variable polynomials (one per copy)."""

    name = "sw"

    def __init__(self, n: int):
        self.n = n

    def zero(self):
        return (Poly.zero(1),) * (self.n - 1)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def bracket(self, args):
        # multilinear extension over the copy decomposition
        out = list(self.zero())
        pieces = [[TaggedSeries(j + 1, p) for j, p in enumerate(a) if p] for a in args]
        for combo in _product(pieces):
            r = bracket_sw(combo)
            if r is not None:
                out[r.copy - 1] = out[r.copy - 1] + r.series
        return tuple(out)

    def random_element(self, rng, max_degree=3):
        out = list(self.zero())
        j = rng.randrange(self.n - 1)
        out[j] = _random_poly(rng, 1, max_degree)
        return tuple(out)


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _product(lists[1:]):
            yield (head,) + rest


def algebra(name: str, n: int) -> _Algebra:
    table = {"w": WAlgebra, "s": SAlgebra, "vp": VPAlgebra, "sw": SWAlgebra}
    try:
        return table[name](n)
    except KeyError:
        raise ValueError(f"unknown algebra {name!r}; choose from {sorted(table)}") from None


def filippov_residual(alg: _Algebra, as_: Sequence, bs: Sequence):
    """LHS minus RHS of the Filippov-Jacobi identity.

    ``[a_1..a_{n-1}, [b_1..b_n]] - sum_i [b_1, .., [a_1..a_{n-1}, b_i], .., b_n]``
    """
    n = alg.n
    if len(as_) != n - 1 or len(bs) != n:
        raise ArityError(f"need {n - 1} a's and {n} b's")
    lhs = alg.bracket(list(as_) + [alg.bracket(bs)])
    rhs = alg.zero()
    for i in range(n):
        inner = alg.bracket(list(as_) + [bs[i]])
        rhs = alg.add(rhs, alg.bracket(list(bs[:i]) + [inner] + list(bs[i + 1:])))
    return alg.add(lhs, alg.neg(rhs))


def derivation_residual(alg: _Algebra, D: Callable, bs: Sequence):
    """``D([b_1..b_n]) - sum_i [b_1, .., D(b_i), .., b_n]``."""
    out = D(alg.bracket(bs))
    for i in range(len(bs)):
        out = alg.add(out, alg.neg(alg.bracket(list(bs[:i]) + [D(bs[i])] + list(bs[i + 1:]))))
    return out


def corrupted_bracket_w(fs: Sequence[Poly]) -> Poly:
    """W^n bracket with the sign of the last first-row cofactor flipped (mutation fixture)."""
    m = _w_matrix(fs)
    n = len(fs)
    total = Poly.zero(n - 1)
    for c in range(n):
        minor = [row[:c] + row[c + 1:] for row in m[1:]]
        term = m[0][c] * det(minor)
        sign = (-1) ** c
        if c == n - 1:
            sign = -sign
        total = total + term.scale(sign)
    return total
