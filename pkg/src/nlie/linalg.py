"""Exact linear algebra over Q on sparse vectors (dicts keyed by any hashable)."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

__all__ = ["rank", "nullspace", "solve", "det", "EchelonBasis"]


def _q(c):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def _frac(q) -> Fraction:
    f = Fraction(int(q.numerator), int(q.denominator))
    return f.numerator if f.denominator == 1 else f


def _matrix(rows: Sequence[Mapping], index: dict) -> DomainMatrix:
    dense = [[QQ(0)] * len(index) for _ in rows]
    for r, row in zip(dense, rows):
        for k, v in row.items():
            if v:
                r[index[k]] = _q(v)
    return DomainMatrix(dense, (len(rows), len(index)), QQ)


def _index(vectors: Iterable[Mapping]) -> dict:
    index: dict = {}
    for v in vectors:
        for k in v:
            index.setdefault(k, len(index))
    return index


def det(rows: Sequence[Sequence]) -> Fraction | int:
    """Determinant of a square matrix of rationals."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = DomainMatrix([[_q(x) for x in r] for r in rows], (n, n), QQ)
    return _frac(m.det())


def rank(vectors: Sequence[Mapping]) -> int:
    index = _index(vectors)
    if not vectors or not index:
        return 0
    return _matrix(vectors, index).rank()


def nullspace(columns: Sequence[Mapping]) -> list[list]:
    """Basis of ``{c : sum_j c_j columns[j] = 0}``."""
    if not columns:
        return []
    index = _index(columns)
    if not index:
        return [[1 if i == j else 0 for i in range(len(columns))] for j in range(len(columns))]
    m = _matrix(columns, index).transpose()
    return [[_frac(x) for x in row] for row in m.nullspace().to_list()]


def solve(columns: Sequence[Mapping], target: Mapping) -> list | None:
    """Some ``c`` with ``sum_j c_j columns[j] = target``, or ``None``."""
    index = _index(list(columns) + [target])
    if not index:
        return [0] * len(columns)
    a = _matrix(columns, index).transpose()
    b = _matrix([target], index).transpose()
    aug = a.hstack(b)
    rref, pivots = aug.rref()
    ncols = len(columns)
    if ncols in pivots:
        return None
    sol = [0] * ncols
    dense = rref.to_list()
    for r, p in enumerate(pivots):
        sol[p] = _frac(dense[r][ncols])
    return sol


class EchelonBasis:
    """Incrementally maintained row-echelon basis of a subspace.

    Rows are reduced against each other's pivots, so membership is a single
    reduction pass.
    """

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self._rows: dict[Hashable, dict] = {}
        self._order: list = []
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> list[dict]:
        return [self._rows[p] for p in self._order]

    def reduce(self, v: Mapping) -> dict:
        w = {k: Fraction(c) for k, c in v.items() if c}
        for p in self._order:
            c = w.get(p)
            if c:
                for k, x in self._rows[p].items():
                    s = w.get(k, 0) - c * x
                    if s:
                        w[k] = s
                    else:
                        w.pop(k, None)
        return w

    def add(self, v: Mapping) -> bool:
        """Insert ``v``; return ``True`` when it enlarged the span."""
        w = self.reduce(v)
        if not w:
            return False
        pivot = min(w, key=repr) if len(w) > 1 else next(iter(w))
        lead = w[pivot]
        w = {k: x / lead for k, x in w.items()}
        for p in self._order:
            row = self._rows[p]
            c = row.get(pivot)
            if c:
                for k, x in w.items():
                    s = row.get(k, 0) - c * x
                    if s:
                        row[k] = s
                    else:
                        row.pop(k, None)
        self._rows[pivot] = w
        self._order.append(pivot)
        return True

    def __contains__(self, v: Mapping) -> bool:
        return not self.reduce(v)
