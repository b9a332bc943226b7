"""Weights and finite-dimensional module fragments for gl_N.

Conventions: ``E_{i,j}`` with ``i < j`` raise, a weight ``lam`` is the tuple
``(lam(E_11), ..., lam(E_NN))`` of rationals, and the simple roots are
``alpha_k = eps_k - eps_{k+1}``.  Root-lattice vectors ``beta`` are tuples of
simple-root coordinates; ``height(beta) = sum(beta)``.  Operator indices
``(i, j)`` are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from . import linalg

__all__ = [
    "NotDominantError",
    "TruncationError",
    "is_dominant",
    "SLWeight",
    "to_sl",
    "from_sl",
    "gram_matrix",
    "form",
    "fundamental_weight",
    "positive_roots",
    "rho",
    "freudenthal",
    "weyl_dim",
    "exceptional_index",
    "exceptional_weight",
    "GLModuleSlice",
    "scalar_module",
    "exceptional_module",
    "standard_module",
    "GLVerma",
    "truncated_irreducible",
    "betas_of_height",
    "height_of",
    "contravariant_ranks",
]


class NotDominantError(ValueError):
    pass


class TruncationError(RuntimeError):
    """A computation needed a vector outside an incomplete module slice."""


def _frac(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def is_dominant(lam: Sequence) -> bool:
    """Successive differences are non-negative integers."""
    for a, b in zip(lam, lam[1:]):
        d = Fraction(a) - Fraction(b)
        if d < 0 or d.denominator != 1:
            return False
    return True


@dataclass(frozen=True)
class SLWeight:
    """Fundamental-weight coordinates of the sl part plus the trace ``sum(lam)``."""

    fund: tuple
    central: Fraction | int = 0

    @property
    def rank(self) -> int:
        return len(self.fund)


def to_sl(lam: Sequence) -> SLWeight:
    lam = [Fraction(x) for x in lam]
    fund = tuple(_frac(a - b) for a, b in zip(lam, lam[1:]))
    return SLWeight(fund, _frac(sum(lam)))


def from_sl(w: SLWeight) -> tuple:
    N = w.rank + 1
    tails = [Fraction(sum(w.fund[i:])) for i in range(N)]
    shift = (Fraction(w.central) - sum(tails)) / N
    return tuple(_frac(t + shift) for t in tails)


# -- root data with the (alpha_i, alpha_i) = 1 normalization ---------------------

@lru_cache(maxsize=None)
def gram_matrix(rank: int, scale=Fraction(1)) -> tuple:
    g = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        g[i][i] = Fraction(scale)
        if i + 1 < rank:
            g[i][i + 1] = g[i + 1][i] = -Fraction(scale) / 2
    return tuple(tuple(r) for r in g)


def form(mu: Sequence, nu: Sequence, scale=Fraction(1)) -> Fraction:
    """Bilinear form on simple-root coordinates."""
    g = gram_matrix(len(mu), Fraction(scale))
    return sum(Fraction(mu[i]) * g[i][j] * Fraction(nu[j])
               for i in range(len(mu)) for j in range(len(nu)) if g[i][j])


def fundamental_weight(i: int, rank: int) -> tuple:
    """``pi_i`` in simple-root coordinates for sl_{rank+1}.

    Coefficient of ``alpha_j`` is ``j (N - i) / N`` for ``j <= i`` and
    ``i (N - j) / N`` for ``j >= i``, with ``N = rank + 1``.
    """
    N = rank + 1
    return tuple(
        Fraction(j * (N - i), N) if j <= i else Fraction(i * (N - j), N)
        for j in range(1, rank + 1)
    )


@lru_cache(maxsize=None)
def positive_roots(rank: int) -> tuple:
    """``eps_i - eps_j`` (i < j) as simple-root coordinate tuples."""
    out = []
    for i in range(rank + 1):
        for j in range(i + 1, rank + 1):
            out.append(tuple(1 if i <= k < j else 0 for k in range(rank)))
    return tuple(out)


def rho(rank: int) -> tuple:
    """Half the sum of the positive roots."""
    tot = [Fraction(0)] * rank
    for a in positive_roots(rank):
        for k in range(rank):
            tot[k] += a[k]
    return tuple(x / 2 for x in tot)


def _root_coords(w: SLWeight) -> tuple:
    r = w.rank
    out = [Fraction(0)] * r
    for i, a in enumerate(w.fund, start=1):
        if a:
            pi = fundamental_weight(i, r)
            for k in range(r):
                out[k] += Fraction(a) * pi[k]
    return tuple(out)


def _check_dominant_sl(w: SLWeight) -> None:
    for a in w.fund:
        a = Fraction(a)
        if a < 0 or a.denominator != 1:
            raise NotDominantError(f"{w.fund} is not dominant integral")


def betas_of_height(rank: int, h: int) -> list[tuple]:
    """Non-negative root-lattice vectors of height ``h``."""
    if rank == 0:
        return [()] if h == 0 else []

    def rec(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in rec(total - first, parts - 1):
                yield (first,) + rest

    return sorted(rec(h, rank))


def freudenthal(w: SLWeight, depth: int, scale=Fraction(1)) -> dict:
    """Weight multiplicities ``m(lam - beta)`` for all ``beta`` of height <= ``depth``.

    Keys are the ``beta`` tuples.  ``scale`` rescales the form; results do not
    depend on it.
    """
    _check_dominant_sl(w)
    r = w.rank
    lam = _root_coords(w)
    d = rho(r)
    roots = positive_roots(r)
    ld = tuple(a + b for a, b in zip(lam, d))
    top = form(ld, ld, scale)
    mult: dict = {tuple([0] * r): 1}
    for h in range(1, depth + 1):
        for beta in betas_of_height(r, h):
            mu = tuple(a - b for a, b in zip(lam, beta))
            md = tuple(a + b for a, b in zip(mu, d))
            gap = top - form(md, md, scale)
            rhs = Fraction(0)
            for a in roots:
                k = 1
                while True:
                    nb = tuple(b - k * x for b, x in zip(beta, a))
                    if min(nb) < 0:
                        break
                    m = mult.get(nb, 0)
                    if m:
                        shifted = tuple(u + k * x for u, x in zip(mu, a))
                        rhs += form(shifted, a, scale) * m
                    k += 1
            rhs *= 2
            if gap == 0:
                if rhs != 0:
                    raise ArithmeticError(f"inconsistent Freudenthal data at beta={beta}")
                mult[beta] = 0
            else:
                m = rhs / gap
                if m.denominator != 1 or m < 0:
                    raise ArithmeticError(f"non-integral multiplicity {m} at beta={beta}")
                mult[beta] = int(m)
    return mult


def weyl_dim(w: SLWeight) -> int:
    _check_dominant_sl(w)
    r = w.rank
    lam = _root_coords(w)
    d = rho(r)
    num = Fraction(1)
    for a in positive_roots(r):
        num *= form(tuple(x + y for x, y in zip(lam, d)), a) / form(d, a)
    assert num.denominator == 1
    return int(num)


def exceptional_weight(p: int, N: int) -> tuple:
    """``(0, .., 0, -1, .., -1)`` with ``p`` trailing ``-1`` entries."""
    if not 1 <= p <= N:
        raise ValueError(f"p={p} outside 1..{N}")
    return tuple([0] * (N - p) + [-1] * p)


def exceptional_index(lam: Sequence) -> int | None:
    N = len(lam)
    for p in range(1, N + 1):
        if tuple(Fraction(x) for x in lam) == exceptional_weight(p, N):
            return p
    return None


def height_of(lam: Sequence, mu: Sequence) -> tuple:
    """Simple-root coordinates of ``lam - mu``."""
    diff = [Fraction(a) - Fraction(b) for a, b in zip(lam, mu)]
    if sum(diff) != 0:
        raise ValueError("weights differ by a non-root")
    out, acc = [], Fraction(0)
    for x in diff[:-1]:
        acc += x
        out.append(_frac(acc))
    return tuple(out)


# -- module slices ---------------------------------------------------------

@dataclass
class GLModuleSlice:
    """Finite fragment of a gl_N module.

    ``ops[(i, j)][b]`` is the sparse image of basis vector ``b`` under
    ``E_{i,j}``, or ``None`` when the image leaves an incomplete slice.
    Basis vector 0 is the highest-weight vector.
    """

    N: int
    weights: list
    betas: list
    ops: dict
    depth: int
    complete: bool
    labels: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def highest_weight(self) -> tuple:
        return self.weights[0]

    def basis(self) -> range:
        return range(self.dim)

    def apply(self, i: int, j: int, vec: dict) -> dict:
        col = self.ops[(i, j)]
        out: dict = {}
        for b, c in vec.items():
            img = col[b]
            if img is None:
                raise TruncationError(f"E_{i},{j} leaves the slice from basis vector {b}")
            for t, v in img.items():
                s = out.get(t, 0) + c * v
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return out

    def apply_word(self, word: Sequence[tuple], vec: dict) -> dict:
        """Apply ``E_{w_1} E_{w_2} ... vec`` (rightmost first)."""
        for i, j in reversed(word):
            vec = self.apply(i, j, vec)
            if not vec:
                break
        return vec

    def check_relations(self) -> list:
        """Violations of ``[E_ij, E_kl] = d_jk E_il - d_li E_kj`` on basis vectors."""
        bad = []
        N = self.N
        idx = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
        for b in self.basis():
            v = {b: 1}
            for (i, j) in idx:
                for (k, l) in idx:
                    try:
                        lhs = _sub(self.apply(i, j, self.apply(k, l, v)),
                                   self.apply(k, l, self.apply(i, j, v)))
                    except TruncationError:
                        continue
                    rhs: dict = {}
                    if j == k:
                        rhs = _add(rhs, self.apply(i, l, v))
                    if l == i:
                        rhs = _sub(rhs, self.apply(k, j, v))
                    if _sub(lhs, rhs):
                        bad.append((b, (i, j), (k, l)))
        return bad


def _add(a: dict, b: dict, c=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + c * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _sub(a: dict, b: dict) -> dict:
    return _add(a, b, -1)


def scalar_module(c, N: int) -> GLModuleSlice:
    """One-dimensional module, ``E_ii -> c`` and ``E_ij -> 0``."""
    c = _frac(c)
    ops = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            ops[(i, j)] = [{0: c} if (i == j and c) else {}]
    return GLModuleSlice(N, [tuple([c] * N)], [tuple([0] * (N - 1))], ops, 0, True, ["v"])


def _wedge_sign(seq: list) -> int:
    sign = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return sign


def exceptional_module(p: int, N: int) -> GLModuleSlice:
    """Dual of the p-th exterior power of the standard module.

    ``E_ij`` acts on dual wedges by the negative transpose of its action on
    ``Lambda^p``.  The highest weight is ``(0, .., 0, -1, .., -1)``.
    """
    if not 1 <= p <= N:
        raise ValueError(f"p={p} outside 1..{N}")
    subsets = list(combinations(range(1, N + 1), p))
    weights = [tuple(-1 if k in S else 0 for k in range(1, N + 1)) for S in subsets]
    lam = exceptional_weight(p, N)
    order = sorted(range(len(subsets)), key=lambda t: height_of(lam, weights[t]))
    order.sort(key=lambda t: sum(height_of(lam, weights[t])))
    subsets = [subsets[t] for t in order]
    weights = [weights[t] for t in order]
    pos = {S: t for t, S in enumerate(subsets)}
    ops = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            col = []
            for S in subsets:
                # E_ij e_S^* = -(coefficient of e_S in E_ij e_T) e_T^*, T = S - i + j
                if i == j:
                    col.append({pos[S]: -1} if i in S else {})
                elif i in S and j not in S:
                    T_seq = [j if s == i else s for s in S]
                    T = tuple(sorted(T_seq))
                    # E_ij e_T replaces e_j by e_i, giving e_{S} up to reordering
                    img_seq = [i if t == j else t for t in T]
                    col.append({pos[T]: -_wedge_sign(img_seq)})
                else:
                    col.append({})
            ops[(i, j)] = col
    betas = [height_of(lam, w) for w in weights]
    labels = ["e*" + "".join(map(str, S)) for S in subsets]
    return GLModuleSlice(N, weights, betas, ops, max(sum(b) for b in betas), True, labels)


def standard_module(N: int) -> GLModuleSlice:
    """The defining representation, highest weight ``(1, 0, .., 0)``."""
    weights = [tuple(1 if k == a else 0 for k in range(1, N + 1)) for a in range(1, N + 1)]
    ops = {(i, j): [({i - 1: 1} if j == b + 1 else {}) for b in range(N)]
           for i in range(1, N + 1) for j in range(1, N + 1)}
    lam = weights[0]
    betas = [height_of(lam, w) for w in weights]
    return GLModuleSlice(N, weights, betas, ops, N - 1, True, [f"e{a}" for a in range(1, N + 1)])


# -- gl Verma module and the contravariant form -------------------------------

class GLVerma:
    """PBW model of the gl_N Verma module ``M(lam)``.

    A basis word is a non-decreasing tuple of lowering-root indices and
    stands for ``y_{w_1} y_{w_2} ... v_lam``.
    """

    def __init__(self, lam: Sequence):
        self.lam = tuple(Fraction(x) for x in lam)
        self.N = N = len(lam)
        roots = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1) if i > j]
        roots.sort(key=lambda r: (r[0] - r[1], r[0]))
        self.roots = roots
        self.index = {r: k for k, r in enumerate(roots)}
        self._cache: dict = {}

    def weight(self, word: tuple) -> tuple:
        w = list(self.lam)
        for k in word:
            i, j = self.roots[k]
            w[i - 1] += 1
            w[j - 1] -= 1
        return tuple(w)

    def beta(self, word: tuple) -> tuple:
        b = [0] * (self.N - 1)
        for k in word:
            i, j = self.roots[k]
            for t in range(j - 1, i - 1):
                b[t] += 1
        return tuple(b)

    def left_mul(self, op: tuple, word: tuple) -> dict:
        """``E_op * (word v_lam)`` as a combination of basis words."""
        a, b = op
        if a == b:
            c = self.weight(word)[a - 1]
            return {word: c} if c else {}
        key = (op, word)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not word:
            res = {} if a < b else {(self.index[op],): Fraction(1)}
        elif a > b and self.index[op] <= word[0]:
            res = {(self.index[op],) + word: Fraction(1)}
        else:
            first, rest = word[0], word[1:]
            fop = self.roots[first]
            res = {}
            for w, c in self.left_mul(op, rest).items():
                res = _add(res, self.left_mul(fop, w), c)
            for op2, c in _commutator(op, fop):
                for w, c2 in self.left_mul(op2, rest).items():
                    s = res.get(w, 0) + c * c2
                    if s:
                        res[w] = s
                    else:
                        res.pop(w, None)
        self._cache[key] = res
        return res

    def apply(self, op: tuple, vec: dict) -> dict:
        out: dict = {}
        for w, c in vec.items():
            out = _add(out, self.left_mul(op, w), c)
        return out

    def words(self, beta: tuple) -> list:
        """PBW words of weight ``lam - beta`` (Kostant partitions)."""
        root_betas = [self.beta((k,)) for k in range(len(self.roots))]
        out = []

        def rec(start, remaining, acc):
            if not any(remaining):
                out.append(tuple(acc))
                return
            for k in range(start, len(self.roots)):
                rb = root_betas[k]
                nxt = tuple(x - y for x, y in zip(remaining, rb))
                if min(nxt) >= 0:
                    acc.append(k)
                    rec(k, nxt, acc)
                    acc.pop()

        rec(0, tuple(beta), [])
        return out

    def pairing(self, w1: tuple, w2: tuple) -> Fraction:
        """Contravariant form ``<w1 v, w2 v>`` with ``E_ij -> E_ji`` as the anti-involution."""
        vec = {w2: Fraction(1)}
        for k in w1:
            i, j = self.roots[k]
            vec = self.apply((j, i), vec)
            if not vec:
                return Fraction(0)
        return vec.get((), Fraction(0))

    def gram(self, beta: tuple) -> tuple[list, list]:
        ws = self.words(beta)
        return ws, [[self.pairing(a, b) for b in ws] for a in ws]


def _commutator(x: tuple, y: tuple) -> list:
    """``[E_ab, E_cd] = d_bc E_ad - d_da E_cb`` as ``(op, coeff)`` pairs."""
    a, b = x
    c, d = y
    out = []
    if b == c:
        out.append(((a, d), 1))
    if d == a:
        out.append(((c, b), -1))
    return out


def truncated_irreducible(lam: Sequence, depth: int) -> GLModuleSlice:
    """Weight spaces of ``L(lam)`` down to height ``depth``.

    Built as the gl Verma module modulo the radical of the contravariant
    form, weight space by weight space.  ``complete`` is set when the slice
    dimension reaches the Weyl dimension.
    """
    if not is_dominant(lam):
        raise NotDominantError(f"{tuple(lam)} is not dominant")
    N = len(lam)
    V = GLVerma(lam)
    spaces = {}  # beta -> (words, gram, chosen word positions)
    basis = []  # (beta, word)
    for h in range(depth + 1):
        for beta in betas_of_height(N - 1, h):
            ws, g = V.gram(beta)
            if not ws:
                continue
            chosen = _independent_columns(g)
            spaces[beta] = (ws, g, chosen)
            basis.extend((beta, ws[k]) for k in chosen)
    total = len(basis)
    complete = total == weyl_dim(to_sl(lam))
    pos = {bw: t for t, bw in enumerate(basis)}

    def project(vec: dict) -> dict:
        if not vec:
            return {}
        beta = V.beta(next(iter(vec)))
        ws, g, chosen = spaces.get(beta, ([], [], []))
        if not chosen:
            return {}
        where = {w: k for k, w in enumerate(ws)}
        target = {r: sum(g[r][where[w]] * c for w, c in vec.items()) for r in range(len(ws))}
        cols = [{r: g[r][k] for r in range(len(ws))} for k in chosen]
        sol = linalg.solve(cols, target)
        if sol is None:
            raise ArithmeticError("projection onto the irreducible quotient failed")
        return {pos[(beta, ws[k])]: c for k, c in zip(chosen, sol) if c}

    ops = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            col = []
            for beta, w in basis:
                img = V.left_mul((i, j), w)
                if not img:
                    col.append({})
                    continue
                tb = V.beta(next(iter(img)))
                if sum(tb) > depth:
                    col.append({} if complete else None)
                else:
                    col.append(project(img))
            ops[(i, j)] = col
    weights = [V.weight(w) for _, w in basis]
    weights = [tuple(_frac(x) for x in wt) for wt in weights]
    labels = [_word_label(V, w) for _, w in basis]
    return GLModuleSlice(N, weights, [b for b, _ in basis], ops, depth, complete, labels)


def _word_label(V: GLVerma, word: tuple) -> str:
    if not word:
        return "v"
    return "".join(f"E{V.roots[k][0]}{V.roots[k][1]}" for k in word) + "v"


def _independent_columns(g: list) -> list:
    basis = linalg.EchelonBasis()
    chosen = []
    for k in range(len(g)):
        col = {r: g[r][k] for r in range(len(g)) if g[r][k]}
        if col and basis.add(col):
            chosen.append(k)
    return chosen


def contravariant_ranks(lam: Sequence, depth: int) -> dict:
    """Rank of the contravariant form on each weight space of height <= ``depth``."""
    V = GLVerma(lam)
    out = {}
    for h in range(depth + 1):
        for beta in betas_of_height(len(lam) - 1, h):
            ws, g = V.gram(beta)
            out[beta] = linalg.rank([{c: x for c, x in enumerate(row) if x} for row in g]) if ws else 0
    return out
