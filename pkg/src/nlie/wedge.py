"""The basic Lie algebra on (n-1)-wedges of W^n and its map onto vector fields.

A wedge element is stored over chains of monomials in normal form: each
chain is a strictly increasing (graded-lex) tuple of ``n-1`` exponent
vectors.  General polynomials enter through multilinear expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from . import linalg
from .brackets import bracket_w
from .cartan import VectorField, commutator, divergence
from .poly import ArityError, Poly, det, grlex_key, mono

__all__ = [
    "WedgeElement",
    "wedge_normalize",
    "lie_bracket",
    "ad_to_field",
    "ad_field_of",
    "UGenerator",
    "abstract_qgen",
    "ker_ad_injectivity",
    "monomials_upto",
    "adjoint_operator",
]


def _sort_chain(exps: Sequence[tuple]) -> tuple[int, tuple] | None:
    """Sort a chain of exponent vectors; ``None`` for a repeated factor."""
    items = list(exps)
    if len(set(items)) < len(items):
        return None
    sign = 1
    # insertion sort keeps the transposition count
    for i in range(1, len(items)):
        j = i
        while j > 0 and grlex_key(items[j - 1]) > grlex_key(items[j]):
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(items)


class WedgeElement:
    """Sparse rational combination of normal-form monomial chains."""

    __slots__ = ("nvars", "chains")

    def __init__(self, nvars: int, chains: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        clean: dict = {}
        for chain, c in (chains or {}).items():
            if len(chain) != nvars:
                raise ArityError(f"chain length {len(chain)} != {nvars}")
            s = _sort_chain(chain)
            if s is None or not c:
                continue
            sign, key = s
            v = clean.get(key, 0) + sign * c
            if v:
                clean[key] = v
            else:
                clean.pop(key, None)
        self.chains = clean

    @property
    def n(self) -> int:
        return self.nvars + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, WedgeElement):
            return NotImplemented
        return self.nvars == other.nvars and self.chains == other.chains

    def __bool__(self) -> bool:
        return bool(self.chains)

    def __add__(self, other: "WedgeElement") -> "WedgeElement":
        out = dict(self.chains)
        for k, c in other.chains.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        w = WedgeElement(self.nvars)
        w.chains = out
        return w

    def __neg__(self) -> "WedgeElement":
        w = WedgeElement(self.nvars)
        w.chains = {k: -c for k, c in self.chains.items()}
        return w

    def __sub__(self, other: "WedgeElement") -> "WedgeElement":
        return self + (-other)

    def scale(self, c) -> "WedgeElement":
        w = WedgeElement(self.nvars)
        w.chains = {k: v * c for k, v in self.chains.items()} if c else {}
        return w

    def __repr__(self) -> str:
        def fmt(chain):
            return " ^ ".join("*".join(f"x{i + 1}^{e}" for i, e in enumerate(m)) or "1" for m in chain)

        body = " + ".join(f"{c}*({fmt(ch)})" for ch, c in sorted(self.chains.items()))
        return f"WedgeElement({body or '0'})"


def wedge_normalize(raw: Sequence[Poly]) -> WedgeElement:
    """Expand ``f_1 ^ ... ^ f_{n-1}`` into normal-form monomial chains."""
    if not raw:
        raise ArityError("empty wedge")
    nvars = raw[0].nvars
    if len(raw) != nvars:
        raise ArityError(f"a wedge of W^{nvars + 1} needs {nvars} factors, got {len(raw)}")
    for f in raw:
        if f.nvars != nvars:
            raise ArityError("factor arity mismatch")
    chains: dict = {}
    for combo in product(*(list(f.terms.items()) for f in raw)):
        exps = [e for e, _ in combo]
        s = _sort_chain(exps)
        if s is None:
            continue
        sign, key = s
        c = sign
        for _, v in combo:
            c = c * v
        chains[key] = chains.get(key, 0) + c
    w = WedgeElement(nvars)
    w.chains = {k: v for k, v in chains.items() if v}
    return w


def _chain_polys(chain: tuple) -> list[Poly]:
    return [mono(e) for e in chain]


def lie_bracket(a: WedgeElement, b: WedgeElement) -> WedgeElement:
    """``[a, b] = sum_i b_1 ^ .. ^ [a_1..a_{n-1}, b_i] ^ .. ^ b_{n-1}`` extended bilinearly."""
    if a.nvars != b.nvars:
        raise ArityError("wedge arity mismatch")
    out = WedgeElement(a.nvars)
    for ca, coef_a in a.chains.items():
        fa = _chain_polys(ca)
        for cb, coef_b in b.chains.items():
            fb = _chain_polys(cb)
            for i in range(len(fb)):
                inner = bracket_w(fa + [fb[i]])
                if not inner:
                    continue
                term = wedge_normalize(fb[:i] + [inner] + fb[i + 1:])
                out = out + term.scale(coef_a * coef_b)
    return out


def ad_field_of(fs: Sequence[Poly]) -> VectorField:
    """Vector field of ``ad(f_1 ^ .. ^ f_{n-1})``.

    The coefficient of ``D_i`` is ``(-1)^(n+1-i)`` times the determinant of
    ``[f; D_1 f; ..; D_{n-1} f]`` with the ``D_i`` row left out.
    """
    nvars = len(fs)
    n = nvars + 1
    for f in fs:
        if f.nvars != nvars:
            raise ArityError(f"ad needs {nvars} polynomials in {nvars} variables")
    rows = [list(fs)] + [[f.deriv(i) for f in fs] for i in range(1, n)]
    coeffs = []
    for i in range(1, n):
        minor = rows[:i] + rows[i + 1:]
        coeffs.append(det(minor).scale((-1) ** (n + 1 - i)))
    return VectorField(coeffs)


@lru_cache(maxsize=200_000)
def _chain_field(chain: tuple) -> VectorField:
    return ad_field_of(_chain_polys(chain))


def ad_to_field(a: WedgeElement) -> VectorField:
    out = VectorField.zero(a.nvars)
    for chain, c in a.chains.items():
        out = out + _chain_field(chain).scale(c)
    return out


def adjoint_operator(fs: Sequence[Poly]):
    """``h -> [f_1, .., f_{n-1}, h]`` as a callable."""
    fs = list(fs)
    return lambda h: bracket_w(fs + [h])


@dataclass(frozen=True)
class UGenerator:
    """``head - sum_i sign_i * first_i * second_i`` in the enveloping algebra of W_{n-1}.

    ``tail`` holds ``(sign, first, second)`` triples; in a product the
    right-hand factor acts first.
    """

    head: VectorField
    tail: tuple

    @property
    def nvars(self) -> int:
        return self.head.nvars

    def is_zero_data(self) -> bool:
        return not self.head and all(not (a and b) for _, a, b in self.tail)

    def apply_density(self, h: Poly, weight) -> Poly:
        """Act on a function through ``X -> X(h) + weight * div(X) * h``."""
        def rho(X, g):
            return X(g) + (divergence(X) * g).scale(weight)

        out = rho(self.head, h)
        for sign, first, second in self.tail:
            out = out - rho(first, rho(second, h)).scale(sign)
        return out


def abstract_qgen(fs: Sequence[Poly]) -> UGenerator:
    """Ideal generator built by composing the bracket and the wedge-to-field map."""
    fs = list(fs)
    m = len(fs)
    if m % 2 or m < 4:
        raise ArityError("need 2n-2 arguments with n >= 3")
    n = m // 2 + 1
    nvars = n - 1
    for f in fs:
        if f.nvars != nvars:
            raise ArityError(f"arguments must be polynomials in {nvars} variables")
    inner = bracket_w(fs[:n])
    head = ad_to_field(wedge_normalize([inner] + fs[n:])) if inner else VectorField.zero(nvars)
    tail = []
    for i in range(1, n + 1):
        first = ad_to_field(wedge_normalize(fs[: i - 1] + fs[i:n]))
        second = ad_to_field(wedge_normalize([fs[i - 1]] + fs[n:]))
        tail.append(((-1) ** (i + n), first, second))
    return UGenerator(head, tuple(tail))


def monomials_upto(nvars: int, max_degree: int) -> list[tuple]:
    """All exponent vectors of total degree <= ``max_degree`` in graded-lex order."""
    out = []
    for d in range(max_degree + 1):
        out.extend(_compositions(d, nvars))
    return sorted(out, key=grlex_key)


def _compositions(total: int, parts: int) -> Iterable[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _field_vector(X: VectorField) -> dict:
    return {(k, e): c for k, p in enumerate(X.coeffs) for e, c in p.terms.items()}


def ker_ad_injectivity(n: int, max_degree: int) -> dict:
    """Kernel of the wedge-to-field map on chains with factor degrees <= ``max_degree``.

    Returns the number of chains, the rank of the map, the kernel dimension
    and (when nonzero) one kernel element as a :class:`WedgeElement`.
    """
    if n < 3 or max_degree < 0:
        raise ValueError("need n >= 3 and max_degree >= 0")
    nvars = n - 1
    monos = monomials_upto(nvars, max_degree)
    chains = list(combinations(monos, nvars))
    columns = [_field_vector(_chain_field(ch)) for ch in chains]
    r = linalg.rank(columns)
    report = {
        "n": n,
        "max_degree": max_degree,
        "chains": len(chains),
        "rank": r,
        "kernel_dim": len(chains) - r,
        "witness": None,
    }
    if len(chains) > r:
        ns = linalg.nullspace(columns)
        vec = ns[0]
        report["witness"] = WedgeElement(nvars, {ch: c for ch, c in zip(chains, vec) if c})
    return report
