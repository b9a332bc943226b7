"""Polynomial vector fields: the Lie algebra W_N of fields sum_i f_i D_i.

``N`` is the number of variables (``N = n - 1`` for the n-Lie algebra W^n).
The graded piece of degree ``j`` holds fields whose coefficients are
homogeneous of degree ``j + 1``; degree 0 is identified with ``gl_N`` by
``x_i D_j -> E_{i,j}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import ArityError, Poly, const, format_poly, parse_poly, var

__all__ = [
    "VectorField",
    "commutator",
    "graded_parts",
    "gl_of_degree0",
    "field_of_matrix",
    "divergence",
    "density_action",
    "partial_field",
    "euler_field",
    "GradingError",
]


class GradingError(ValueError):
    """A field was expected to be homogeneous of a given degree and is not."""


class VectorField:
    """``sum_k coeffs[k-1] * D_k`` with polynomial coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Sequence[Poly]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ArityError("a vector field needs at least one coefficient")
        n = len(coeffs)
        for c in coeffs:
            if c.nvars != n:
                raise ArityError(f"coefficient arity {c.nvars} != {n} variables")
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def zero(cls, nvars: int) -> "VectorField":
        return cls([Poly.zero(nvars)] * nvars)

    @classmethod
    def basis(cls, poly: Poly, k: int) -> "VectorField":
        """``poly * D_k``."""
        n = poly.nvars
        z = Poly.zero(n)
        return cls([poly if i == k - 1 else z for i in range(n)])

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _check(self, other: "VectorField") -> None:
        if other.nvars != self.nvars:
            raise ArityError(f"field arity mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        return VectorField([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        return VectorField([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "VectorField":
        return VectorField([-a for a in self.coeffs])

    def scale(self, c) -> "VectorField":
        return VectorField([a.scale(c) for a in self.coeffs])

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, h: Poly) -> Poly:
        """Apply the field as a derivation: ``X(h) = sum_k X_k D_k h``."""
        if h.nvars != self.nvars:
            raise ArityError("function and field have different arity")
        out = Poly.zero(self.nvars)
        for k, c in enumerate(self.coeffs, start=1):
            if c:
                out = out + c * h.deriv(k)
        return out

    def deriv(self, a: int) -> "VectorField":
        """Coefficient-wise ``D_a``; note ``[X, D_a] = -X.deriv(a)``."""
        return VectorField([c.deriv(a) for c in self.coeffs])

    def __repr__(self) -> str:
        return f"VectorField({format_field(self)!r})"

    def __str__(self) -> str:
        return format_field(self)


def commutator(X: VectorField, Y: VectorField) -> VectorField:
    """``[X, Y]_k = sum_i (X_i D_i Y_k - Y_i D_i X_k)``."""
    X._check(Y)
    return VectorField([X(yk) - Y(xk) for xk, yk in zip(X.coeffs, Y.coeffs)])


def graded_parts(X: VectorField) -> dict[int, VectorField]:
    """Split ``X`` by grading: part ``j`` collects coefficient terms of degree ``j + 1``."""
    degrees = sorted({sum(e) for c in X.coeffs for e in c.terms})
    return {d - 1: VectorField([c.homogeneous_part(d) for c in X.coeffs]) for d in degrees}


def gl_of_degree0(X0: VectorField) -> list[list]:
    """Matrix ``M`` with ``M[i-1][j-1]`` the coefficient of ``x_i D_j``."""
    n = X0.nvars
    m = [[0] * n for _ in range(n)]
    for j, c in enumerate(X0.coeffs):
        for e, v in c.terms.items():
            if sum(e) != 1:
                raise GradingError(f"{format_field(X0)} is not of degree 0")
            m[e.index(1)][j] = v
    return m


def field_of_matrix(m: Sequence[Sequence]) -> VectorField:
    """Inverse of :func:`gl_of_degree0`."""
    n = len(m)
    coeffs = []
    for j in range(n):
        p = Poly.zero(n)
        for i in range(n):
            if m[i][j]:
                p = p + var(i + 1, n).scale(m[i][j])
        coeffs.append(p)
    return VectorField(coeffs)


def divergence(X: VectorField) -> Poly:
    out = Poly.zero(X.nvars)
    for k, c in enumerate(X.coeffs, start=1):
        out = out + c.deriv(k)
    return out


def density_action(X: VectorField, h: Poly, weight) -> Poly:
    """``X(h) + weight * div(X) * h``; the adjoint module of W^n has ``weight = -1/N``."""
    return X(h) + (divergence(X) * h).scale(weight)


def partial_field(k: int, nvars: int) -> VectorField:
    """``D_k``."""
    return VectorField.basis(const(1, nvars), k)


def euler_field(nvars: int) -> VectorField:
    return VectorField([var(i, nvars) for i in range(1, nvars + 1)])


def format_field(X: VectorField) -> str:
    parts = [f"({format_poly(c)}) D{k}" for k, c in enumerate(X.coeffs, start=1) if c]
    return " + ".join(parts) if parts else "0"


def parse_field(text: str, nvars: int) -> VectorField:
    """Parse ``(p1) D1 + (p2) D2 ...``; coefficients in :func:`parse_poly` syntax."""
    import re

    coeffs = [Poly.zero(nvars) for _ in range(nvars)]
    s = text.strip()
    if s == "0":
        return VectorField(coeffs)
    pattern = re.compile(r"\(([^()]*)\)\s*D(\d+)")
    pos = 0
    found = False
    for m in pattern.finditer(s):
        gap = s[pos:m.start()].strip()
        if gap not in ("", "+"):
            raise ValueError(f"unexpected text {gap!r} in field {text!r}")
        k = int(m.group(2))
        if not 1 <= k <= nvars:
            raise ArityError(f"D{k} outside 1..{nvars}")
        coeffs[k - 1] = coeffs[k - 1] + parse_poly(m.group(1), nvars)
        pos = m.end()
        found = True
    if not found or s[pos:].strip():
        raise ValueError(f"cannot parse vector field {text!r}")
    return VectorField(coeffs)
