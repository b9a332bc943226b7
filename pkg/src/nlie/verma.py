"""Generalized Verma modules ``M(F) = S(D_1, .., D_N) (x) F`` for W_N.

A vector is a sparse dict ``{(I, b): coeff}`` where ``I`` is the exponent
tuple of a monomial in the creation symbols ``D_1..D_N`` and ``b`` indexes
the basis of the gl_N-module slice ``F``.  Fields of positive degree kill
``1 (x) F``, degree-zero fields act through ``x_i D_j -> E_{i,j}`` and
constant fields create a new ``D``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from . import linalg
from .cartan import VectorField
from .glrep import GLModuleSlice, TruncationError
from .poly import Poly, mono
from .wedge import monomials_upto

__all__ = [
    "DegreeOverflow",
    "FSliceTruncation",
    "VermaSlice",
    "act",
    "act_word",
    "singular_vectors",
    "singplus_span",
    "in_singplus",
    "positive_generators",
    "degree_of",
]


class DegreeOverflow(ArithmeticError):
    """The result would leave the slice's creation-degree bound."""

    code = "degree-overflow"


class FSliceTruncation(ArithmeticError):
    """The computation needed an F-vector outside an incomplete slice."""

    code = "f-slice-truncation"


def _add_into(out: dict, key, c) -> None:
    s = out.get(key, 0) + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def degree_of(v: dict) -> set:
    return {sum(I) for I, _ in v}


class VermaSlice:
    """Degrees ``0..maxdeg`` of ``M(F)``."""

    def __init__(self, F: GLModuleSlice, maxdeg: int = 2):
        if maxdeg < 0:
            raise ValueError("maxdeg must be non-negative")
        self.F = F
        self.N = F.N
        self.maxdeg = maxdeg
        self._mono_cache: dict = {}

    def d_monomials(self, k: int) -> list[tuple]:
        return [e for e in monomials_upto(self.N, k) if sum(e) == k]

    def basis(self, k: int) -> list[tuple]:
        return [(I, b) for I in self.d_monomials(k) for b in self.F.basis()]

    def component_dim(self, k: int) -> int:
        return comb(k + self.N - 1, k) * self.F.dim

    def hw(self) -> dict:
        """``w_lam = 1 (x) v_lam``."""
        return {((0,) * self.N, 0): Fraction(1)}

    def lift(self, fvec: dict, I: Sequence[int] | None = None) -> dict:
        I = tuple(I) if I is not None else (0,) * self.N
        return {(I, b): c for b, c in fvec.items() if c}

    # -- the action ---------------------------------------------------------

    def _act_mono(self, e: tuple, k: int, I: tuple, b: int) -> dict:
        """``x^e D_k . (D^I (x) f_b)`` without degree checks."""
        key = (e, k, I, b)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        N = self.N
        out: dict = {}
        if not any(I):
            d = sum(e)
            if d == 0:
                J = tuple(1 if t == k - 1 else 0 for t in range(N))
                out[(J, b)] = Fraction(1)
            elif d == 1:
                i = e.index(1) + 1
                try:
                    img = self.F.apply(i, k, {b: 1})
                except TruncationError as exc:
                    raise FSliceTruncation(str(exc)) from None
                for t, c in img.items():
                    out[(I, t)] = c
        else:
            a = next(t for t in range(N) if I[t])
            J = I[:a] + (I[a] - 1,) + I[a + 1:]
            # X D_a u = D_a X u - (D_a X) u   since [X, D_a] = -(D_a X)
            for (K, t), c in self._act_mono(e, k, J, b).items():
                _add_into(out, (K[:a] + (K[a] + 1,) + K[a + 1:], t), c)
            if e[a]:
                e2 = e[:a] + (e[a] - 1,) + e[a + 1:]
                for key2, c in self._act_mono(e2, k, J, b).items():
                    _add_into(out, key2, -e[a] * c)
        self._mono_cache[key] = out
        return out

    def act(self, X: VectorField, v: dict) -> dict:
        if X.nvars != self.N:
            raise ValueError(f"field in {X.nvars} variables acting on a W_{self.N} module")
        out: dict = {}
        for k, p in enumerate(X.coeffs, start=1):
            for e, c in p.terms.items():
                for (I, b), x in v.items():
                    for key, y in self._act_mono(e, k, I, b).items():
                        _add_into(out, key, c * x * y)
        for I, _ in out:
            if sum(I) > self.maxdeg:
                raise DegreeOverflow(f"degree {sum(I)} exceeds maxdeg {self.maxdeg}")
        return out

    def act_word(self, Xs: Sequence[VectorField], v: dict) -> dict:
        """``Xs[0] Xs[1] ... v``: the rightmost field acts first."""
        for X in reversed(Xs):
            v = self.act(X, v)
            if not v:
                break
        return v


def act(X: VectorField, v: dict, slice: VermaSlice) -> dict:
    return slice.act(X, v)


def act_word(Xs: Sequence[VectorField], v: dict, slice: VermaSlice) -> dict:
    return slice.act_word(Xs, v)


def positive_generators(N: int) -> list[VectorField]:
    """The degree-one fields ``x_i x_j D_l`` (``i <= j``)."""
    out = []
    for i, j in combinations_with_replacement(range(N), 2):
        e = [0] * N
        e[i] += 1
        e[j] += 1
        for l in range(1, N + 1):
            out.append(VectorField.basis(mono(e), l))
    return out


def _degree0_generators(N: int) -> list[VectorField]:
    out = []
    for i in range(N):
        e = tuple(1 if t == i else 0 for t in range(N))
        for l in range(1, N + 1):
            out.append(VectorField.basis(mono(e), l))
    return out


def _creation_generators(N: int) -> list[VectorField]:
    return [VectorField.basis(mono((0,) * N), l) for l in range(1, N + 1)]


def _require_complete(slice: VermaSlice) -> None:
    if not slice.F.complete:
        raise FSliceTruncation("singular vectors need a complete F")


def singular_vectors(slice: VermaSlice, k: int) -> list[dict]:
    """Basis of the degree-``k`` vectors killed by every ``x_i x_j D_l``.

    For ``k = 0`` every vector of ``F`` qualifies, since positive fields
    kill ``1 (x) F``.
    """
    _require_complete(slice)
    if not 0 <= k <= slice.maxdeg:
        raise ValueError(f"degree {k} outside 0..{slice.maxdeg}")
    basis = slice.basis(k)
    if k == 0:
        return [{bv: Fraction(1)} for bv in basis]
    gens = positive_generators(slice.N)
    columns = []
    for bv in basis:
        col = {}
        for g, X in enumerate(gens):
            for key, c in slice.act(X, {bv: Fraction(1)}).items():
                col[(g, key)] = c
        columns.append(col)
    out = []
    for vec in linalg.nullspace(columns):
        out.append({bv: Fraction(c) for bv, c in zip(basis, vec) if c})
    return out


def singplus_span(slice: VermaSlice) -> dict:
    """Degree pieces of the submodule generated by the non-trivial singular vectors.

    Returns ``{degree: EchelonBasis}`` for degrees ``0..maxdeg``.  The span is
    closed under creation, degree-zero and degree-one fields within the bound.
    """
    _require_complete(slice)
    spans = {d: linalg.EchelonBasis() for d in range(slice.maxdeg + 1)}
    queue = []
    for k in range(1, slice.maxdeg + 1):
        for v in singular_vectors(slice, k):
            if spans[k].add(v):
                queue.append((k, v))
    gens = (_creation_generators(slice.N) + _degree0_generators(slice.N)
            + positive_generators(slice.N))
    while queue:
        d, v = queue.pop()
        for X in gens:
            try:
                w = slice.act(X, v)
            except DegreeOverflow:
                continue
            if not w:
                continue
            dw = sum(next(iter(w))[0])
            if spans[dw].add(w):
                queue.append((dw, w))
    return spans


def in_singplus(v: dict, spans: dict) -> bool:
    parts: dict = {}
    for (I, b), c in v.items():
        parts.setdefault(sum(I), {})[(I, b)] = c
    for d, part in parts.items():
        if d not in spans or part not in spans[d]:
            return False
    return True


def is_stable(slice: VermaSlice, spans: dict) -> bool:
    """Post-hoc check that ``spans`` is closed under the generating fields."""
    gens = (_creation_generators(slice.N) + _degree0_generators(slice.N)
            + positive_generators(slice.N))
    for d, basis in spans.items():
        for row in basis.rows:
            for X in gens:
                try:
                    w = slice.act(X, row)
                except DegreeOverflow:
                    continue
                if w and not in_singplus(w, spans):
                    return False
    return True
