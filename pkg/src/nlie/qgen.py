"""Explicit generators of the ideal Q_A(W^n) on monomial arguments.

For monomials ``f_l = x^{I_l}`` every determinant in the abstract generator
factors as a monomial times an integer determinant of exponent data.  This
module builds those integer matrices, assembles the generator from them,
compares it with :func:`nlie.wedge.abstract_qgen`, and evaluates generators
on the highest-weight vector of a generalized Verma module.

It also carries the catalog of monomial families used in the classification
argument together with the closed-form images they are claimed to have.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Iterable, Sequence

from .cartan import VectorField
from .poly import ArityError, Poly, const, det, grlex_key, mono
from .verma import VermaSlice
from .wedge import UGenerator, abstract_qgen, monomials_upto

__all__ = [
    "GeneratorSpec",
    "kronecker_step",
    "CoeffMatrices",
    "coeff_matrices",
    "Reading",
    "CORRECTED",
    "LITERAL",
    "explicit_qgen",
    "generators_equal",
    "compare_readings",
    "apply_to_hw",
    "enumerate_specs",
    "SCENARIOS",
    "scenario",
    "EQUATIONS",
    "reproduce_equation",
    "admissible_params",
    "rhs_vector",
    "EquationReport",
    "format_generator",
]


# -- specs ---------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSpec:
    """Exponent vectors ``I_1, .., I_{2n-2}`` of the monomial arguments."""

    fs: tuple

    def __post_init__(self):
        fs = tuple(tuple(int(x) for x in I) for I in self.fs)
        object.__setattr__(self, "fs", fs)
        if len(fs) < 4 or len(fs) % 2:
            raise ArityError("a generator needs 2n-2 >= 4 monomials")
        nvars = len(fs) // 2
        for I in fs:
            if len(I) != nvars:
                raise ArityError(f"multi-index {I} should have length {nvars}")
            if min(I) < 0:
                raise ValueError(f"negative exponent in {I}")

    @property
    def n(self) -> int:
        return len(self.fs) // 2 + 1

    @property
    def nvars(self) -> int:
        return self.n - 1

    def polys(self) -> list[Poly]:
        return [mono(I) for I in self.fs]

    def total_degree(self) -> int:
        return sum(sum(I) for I in self.fs)

    def canonical(self) -> tuple[int, "GeneratorSpec"]:
        """Sort each argument group; returns ``(sign, spec)``, sign 0 for a repeat."""
        n = self.n
        sign = 1
        groups = []
        for part in (self.fs[:n], self.fs[n:]):
            items = list(part)
            if len(set(items)) < len(items):
                return 0, self
            for i in range(1, len(items)):
                j = i
                while j > 0 and grlex_key(items[j - 1]) > grlex_key(items[j]):
                    items[j - 1], items[j] = items[j], items[j - 1]
                    sign = -sign
                    j -= 1
            groups.append(tuple(items))
        return sign, GeneratorSpec(groups[0] + groups[1])

    def __str__(self) -> str:
        return ";".join(",".join(map(str, I)) for I in self.fs)

    @classmethod
    def parse(cls, text: str) -> "GeneratorSpec":
        return cls(tuple(tuple(int(x) for x in part.split(",")) for part in text.split(";")))


def kronecker_step(i: int, j: int) -> int:
    """1 if ``i >= j`` else 0."""
    return 1 if i >= j else 0


# -- integer exponent matrices -------------------------------------------------

@dataclass(frozen=True)
class CoeffMatrices:
    A: tuple
    A_minors: dict  # (q, i) -> A with row q+1 and column i removed
    B: dict  # k -> B_{k+1}
    C: dict  # (i, s) -> C^{(i)}_{s+1}


@dataclass(frozen=True)
class Reading:
    """How to read the three index-ambiguous pieces of the explicit formula.

    * ``beta_upto_n``: the prefactor of ``beta(i, q)`` runs over
      ``f_1..f_n`` without ``f_i`` (otherwise it stops at ``f_{n-1}``).
    * ``gamma_skip``: the prefactor of ``gamma(i, s)`` is
      ``f_i f_{n+1} .. f_{2n-2}`` (otherwise ``f_i f_{i+1} .. f_{2n-2}``).
    * ``b_full_sum``: the first column of ``B`` is ``sum_{r<=n} i^r - 1``
      (otherwise ``sum_{r<=n-1} (i^r - 1)``).
    """

    beta_upto_n: bool = True
    gamma_skip: bool = True
    b_full_sum: bool = True

    @property
    def name(self) -> str:
        if self == CORRECTED:
            return "corrected"
        if self == LITERAL:
            return "literal"
        return f"beta_upto_n={self.beta_upto_n},gamma_skip={self.gamma_skip},b_full_sum={self.b_full_sum}"


CORRECTED = Reading(True, True, True)
LITERAL = Reading(False, False, False)


def _int_det(rows: list[list[int]]) -> int:
    if not rows:
        return 1
    return int(det([[const(x, 0) for x in r] for r in rows]).coefficient(()))


def _with_ones(columns: Sequence[Sequence[int]]) -> list[list[int]]:
    """Matrix whose first row is all ones and whose column ``c`` continues with ``columns[c]``."""
    if not columns:
        return []
    m = len(columns[0])
    return [[1] * len(columns)] + [[col[q] for col in columns] for q in range(m)]


def _drop(rows: list[list[int]], row: int | None = None, col: int | None = None) -> list[list[int]]:
    out = [r for t, r in enumerate(rows) if t != row]
    if col is not None:
        out = [r[:col] + r[col + 1:] for r in out]
    return out


def _b_first_column(spec: GeneratorSpec, reading: Reading) -> list[int]:
    n, N = spec.n, spec.nvars
    if reading.b_full_sum:
        return [sum(spec.fs[r][q] for r in range(n)) - 1 for q in range(N)]
    return [sum(spec.fs[r][q] - 1 for r in range(n - 1)) for q in range(N)]


def coeff_matrices(spec: GeneratorSpec, reading: Reading = CORRECTED) -> CoeffMatrices:
    """Integer matrices of the explicit formula.

    ``A`` is ``n x n``: a row of ones over the exponent columns ``I_1..I_n``.
    Minors are indexed by 1-based ``(q, i)``; ``B[k]`` drops row ``k+1`` of
    the ones-headed matrix with columns ``(J, I_{n+1}, .., I_{2n-2})``;
    ``C[(i, s)]`` drops row ``s+1`` of the one with columns
    ``(I_i, I_{n+1}, .., I_{2n-2})``.
    """
    n, N = spec.n, spec.nvars
    fs = spec.fs
    A = _with_ones(fs[:n])
    minors = {(q, i): _drop(A, q, i - 1) for q in range(1, N + 1) for i in range(1, n + 1)}
    Bfull = _with_ones([_b_first_column(spec, reading)] + list(fs[n:]))
    B = {k: _drop(Bfull, k) for k in range(1, N + 1)}
    C = {}
    for i in range(1, n + 1):
        Cfull = _with_ones([fs[i - 1]] + list(fs[n:]))
        for s in range(1, N + 1):
            C[(i, s)] = _drop(Cfull, s)
    return CoeffMatrices(tuple(map(tuple, A)), minors, B, C)


def _quotient(num: Sequence[int], den: Sequence[int]) -> tuple | None:
    """Exponents of ``x^num / x^den``, or ``None`` when one is negative."""
    e = tuple(a - b for a, b in zip(num, den))
    return None if min(e) < 0 else e


def _esum(vectors: Iterable[Sequence[int]], N: int) -> list[int]:
    out = [0] * N
    for v in vectors:
        for t in range(N):
            out[t] += v[t]
    return out


def _field(N: int, coeffs: dict) -> VectorField:
    """``{k: (exponents, value)}`` to a vector field."""
    polys = [Poly.zero(N) for _ in range(N)]
    for k, (e, c) in coeffs.items():
        if e is not None and c:
            polys[k - 1] = mono(e, N, c)
    return VectorField(polys)


def explicit_qgen(spec: GeneratorSpec, reading: Reading = CORRECTED) -> UGenerator:
    """Generator assembled from the monomial/determinant coefficient formulas."""
    n, N = spec.n, spec.nvars
    fs = spec.fs
    m = coeff_matrices(spec, reading)
    detA = _int_det([list(r) for r in m.A])
    ones = [1] * N
    all_prod = _esum(fs, N)

    head = {}
    for k in range(1, N + 1):
        den = [2] * N
        den[k - 1] = 1
        e = _quotient(all_prod, den)
        c = (-1) ** (n + 1 + k) * detA * _int_det(m.B[k]) if detA else 0
        head[k] = (e, c)

    tail = []
    for i in range(1, n + 1):
        upto = n if reading.beta_upto_n else n - 1
        beta_num = _esum([fs[r] for r in range(upto) if r != i - 1], N)
        first = {}
        for q in range(1, N + 1):
            den = ones.copy()
            den[q - 1] = 0
            e = _quotient(beta_num, den)
            c = (-1) ** (n + 1 + q) * _int_det(m.A_minors[(q, i)])
            first[q] = (e, c)
        if reading.gamma_skip:
            gamma_num = _esum([fs[i - 1]] + list(fs[n:]), N)
        else:
            gamma_num = _esum(fs[i - 1:], N)
        second = {}
        for s in range(1, N + 1):
            den = ones.copy()
            den[s - 1] = 0
            e = _quotient(gamma_num, den)
            c = (-1) ** (n + 1 + s) * _int_det(m.C[(i, s)])
            second[s] = (e, c)
        tail.append(((-1) ** (i + n), _field(N, first), _field(N, second)))
    return UGenerator(_field(N, head), tuple(tail))


def generators_equal(a: UGenerator, b: UGenerator) -> bool:
    """Equality as enveloping-algebra data: heads and signed tail products agree termwise."""
    if a.head != b.head or len(a.tail) != len(b.tail):
        return False
    for (sa, fa, ga), (sb, fb, gb) in zip(a.tail, b.tail):
        za = not (fa and ga)
        zb = not (fb and gb)
        if za and zb:
            continue
        if za != zb or sa != sb or fa != fb or ga != gb:
            return False
    return True


def enumerate_specs(n: int, slot_deg: int = 2, total_deg: int | None = None,
                    distinct: bool = True, ordered: bool = False) -> Iterable[GeneratorSpec]:
    """Monomial argument lists grouped as (first ``n``, last ``n-2``).

    ``distinct`` uses sets in each group (repeats give the zero generator);
    otherwise multisets.  ``ordered`` yields every tuple instead.
    """
    N = n - 1
    if total_deg is None:
        total_deg = 2 * n - 2
    monos = monomials_upto(N, slot_deg)
    if ordered:
        for fs in product(monos, repeat=2 * n - 2):
            if sum(map(sum, fs)) <= total_deg:
                yield GeneratorSpec(fs)
        return
    pick = combinations if distinct else combinations_with_replacement
    firsts = list(pick(monos, n))
    seconds = list(pick(monos, n - 2))
    for a in firsts:
        da = sum(map(sum, a))
        if da > total_deg:
            continue
        for b in seconds:
            if da + sum(map(sum, b)) <= total_deg:
                yield GeneratorSpec(a + b)


def compare_readings(specs: Iterable[GeneratorSpec], readings: Sequence[Reading] | None = None) -> dict:
    """For each reading: number of specs checked, matches against the abstract form, first mismatch."""
    if readings is None:
        readings = [Reading(a, b, c) for a in (True, False) for b in (True, False) for c in (True, False)]
    report = {r.name: {"checked": 0, "matched": 0, "first_mismatch": None} for r in readings}
    for spec in specs:
        truth = abstract_qgen(spec.polys())
        for r in readings:
            row = report[r.name]
            row["checked"] += 1
            if generators_equal(explicit_qgen(spec, r), truth):
                row["matched"] += 1
            elif row["first_mismatch"] is None:
                row["first_mismatch"] = str(spec)
    return report


# -- action on the highest-weight vector ----------------------------------------

def apply_to_hw(gen: UGenerator, slice: VermaSlice) -> dict:
    """``gen . (1 (x) v_lam)``; in each product the right factor acts first."""
    w = slice.hw()
    out = dict(slice.act(gen.head, w)) if gen.head else {}
    for sign, first, second in gen.tail:
        if not (first and second):
            continue
        img = slice.act(second, w)
        if not img:
            continue
        for key, c in slice.act(first, img).items():
            s = out.get(key, 0) - sign * c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def format_generator(gen: UGenerator) -> dict:
    from .cartan import format_field

    return {
        "head": format_field(gen.head),
        "tail": [{"sign": s, "first": format_field(a), "second": format_field(b)} for s, a, b in gen.tail],
    }


# -- monomial families of the classification argument ----------------------------

def _x(N: int, *vs: int) -> tuple:
    e = [0] * N
    for v in vs:
        if not 1 <= v <= N:
            raise ValueError(f"variable x_{v} outside 1..{N}")
        e[v - 1] += 1
    return tuple(e)


def _skip(N: int, *drop: int) -> list[int]:
    """Variables ``1..N`` without ``drop``, increasing.

    This is what the interval recipes ``x_s (s < a)``, ``x_{s+1}
    (a <= s < b-1)``, ``x_{s+2} (s >= b-1)`` enumerate; reading them as a set
    also covers the interchanged order the text allows.
    """
    return [v for v in range(1, N + 1) if v not in drop]


def _first_group(N: int, skip: int, overrides: dict, d: Callable) -> list[tuple]:
    """Slots ``1..N-1`` list the variables without ``x_skip``; ``overrides`` maps slot -> monomial."""
    slots = [_x(N, v) for v in _skip(N, skip)]
    for slot, value in overrides.items():
        if not 1 <= slot <= N - 1:
            raise ValueError(f"slot {slot} outside 1..{N - 1}")
        slots[slot - 1] = value
    return slots


def _distinct(*vals: int) -> bool:
    return len(set(vals)) == len(vals)


@dataclass(frozen=True)
class Scenario:
    label: str
    min_n: int
    params: tuple
    build: Callable
    constraint: Callable = field(default=lambda n, p: True)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _case_1a_i(n, j, k):
    N = n - 1
    fs = [_x(N, s) for s in range(1, n)]
    fs[k - 1] = _x(N, k, k)
    fs.append(_x(N))
    fs += [_x(N, v) for v in _skip(N, j)]
    return fs


def _case_1a_ii(n, l, j, k):
    N, d = n - 1, kronecker_step
    first = _first_group(N, j, {l - d(l, j): _x(N, l, j), k - d(k, j): _x(N, k, k)}, d)
    return first + [_x(N), _x(N, l)] + [_x(N, v) for v in _skip(N, l, j)] + [_x(N)]


def _case_1a_iii(n, l, j, k, m):
    N, d = n - 1, kronecker_step
    first = _first_group(N, k, {m - d(m, k): _x(N, m, k), l - d(l, k): _x(N, l, k)}, d)
    return first + [_x(N), _x(N, l)] + [_x(N, v) for v in _skip(N, l, j)] + [_x(N)]


def _case_1a_iv(n, l, j, k):
    return _case_1a_iii(n, l, j, k, j)


def _case_1a_v(n, l, j, k, m):
    N, d = n - 1, kronecker_step
    first = _first_group(N, m, {k - d(k, m): _x(N, m, k), l - d(l, k): _x(N, l, k)}, d)
    return first + [_x(N), _x(N, m)] + [_x(N, v) for v in _skip(N, j, m)] + [_x(N)]


def _case_1a_vi(n, l, j, k, m):
    N, d = n - 1, kronecker_step
    first = _first_group(N, m, {l - d(l, m): _x(N, m, l), k - d(k, m): _x(N, k, k)}, d)
    return first + [_x(N), _x(N, k)] + [_x(N, v) for v in _skip(N, j, k)] + [_x(N)]


def _case_1a_vii(n, l, j, k, m, t):
    N, d = n - 1, kronecker_step
    first = _first_group(N, t, {m - d(m, t): _x(N, m, t), l - d(l, t): _x(N, l, k)}, d)
    return first + [_x(N), _x(N, m)] + [_x(N, v) for v in _skip(N, m, j)] + [_x(N)]


def _case_1a_viii(n, l, j, k):
    N, d = n - 1, kronecker_step
    first = _first_group(N, j, {l - d(l, j): _x(N, l, k), k - d(k, j): _x(N, k, k)}, d)
    return first + [_x(N), _x(N, j)] + [_x(N, v) for v in _skip(N, j, k)] + [_x(N)]


def _case_1a_ix(n, l, j, k):
    N, d = n - 1, kronecker_step
    first = _first_group(N, j, {l - d(l, j): _x(N, l, k), k - d(k, j): _x(N, k, k)}, d)
    return first + [_x(N), _x(N, k)] + [_x(N, v) for v in _skip(N, l, k)] + [_x(N)]


def _first_x(n, j, k):
    N, d = n - 1, kronecker_step
    return _first_group(N, j, {k - d(k, j): _x(N, k, k)}, d)


def _case_1a_x(n, l, j, k):
    N = n - 1
    return _first_x(n, j, k) + [_x(N), _x(N, j)] + [_x(N, v) for v in _skip(N, l, j)] + [_x(N)]


def _case_1a_xi(n, l, j, k):
    N = n - 1
    return _first_x(n, j, k) + [_x(N), _x(N, l)] + [_x(N, v) for v in _skip(N, l, j)] + [_x(N)]


def _case_1a_xii(n, j, k):
    N = n - 1
    return _first_x(n, j, k) + [_x(N), _x(N, k)] + [_x(N, v) for v in _skip(N, j, k)] + [_x(N)]


def _first_xiii(n, j, k):
    N = n - 1
    fs = [_x(N, s) for s in range(1, n)]
    fs[j - 1] = _x(N, j, k)
    return fs


def _case_1a_xiii(n, j, k):
    N = n - 1
    return _first_xiii(n, j, k) + [_x(N)] + [_x(N, v) for v in _skip(N, k)]


def _case_1a_xiv(n, l, j, k):
    # f_n is not restated for this family; it keeps its value 1 from the previous one
    N, d = n - 1, kronecker_step
    second = [_x(N, v) for v in _skip(N, j, k)]
    slot = l - d(l, j) - d(l, k)
    _need(1 <= slot <= len(second), "l must differ from j and k")
    second[slot - 1] = _x(N, l, j)
    return _first_xiii(n, j, k) + [_x(N)] + second + [_x(N)]


def _case_1b_i(n, l, j, k, m):
    N, d = n - 1, kronecker_step
    first = _first_group(N, j, {l - d(l, j): _x(N, l, k)}, d)
    return first + [_x(N), _x(N, l, m)] + [_x(N, v) for v in _skip(N, l, m)] + [_x(N)]


def _case_1b_ii(n, l, j, k, m):
    N, d = n - 1, kronecker_step
    first = _first_group(N, m, {l - d(l, m): _x(N, m, l)}, d)
    return first + [_x(N), _x(N, j, k)] + [_x(N, v) for v in _skip(N, j, k)] + [_x(N)]


def _case_2a_i(n, l, j, k):
    N, d = n - 1, kronecker_step
    first = _first_group(N, k, {l - d(l, j): _x(N, l, k)}, d)
    return first + [_x(N), _x(N, l)] + [_x(N, v) for v in _skip(N, l, j)] + [_x(N)]


SCENARIOS = {
    "1a-i": Scenario("1a-i", 3, ("j", "k"), _case_1a_i, lambda n, p: p["j"] < p["k"]),
    "1a-ii": Scenario("1a-ii", 4, ("l", "j", "k"), _case_1a_ii, lambda n, p: _distinct(p["l"], p["j"], p["k"])),
    "1a-iii": Scenario("1a-iii", 5, ("l", "j", "k", "m"), _case_1a_iii,
                       lambda n, p: p["j"] < p["k"] and _distinct(p["l"], p["j"], p["k"], p["m"])),
    "1a-iv": Scenario("1a-iv", 4, ("l", "j", "k"), _case_1a_iv, lambda n, p: _distinct(p["l"], p["j"], p["k"])),
    "1a-v": Scenario("1a-v", 5, ("l", "j", "k", "m"), _case_1a_v,
                     lambda n, p: _distinct(p["l"], p["j"], p["k"], p["m"])),
    "1a-vi": Scenario("1a-vi", 5, ("l", "j", "k", "m"), _case_1a_vi,
                      lambda n, p: _distinct(p["l"], p["j"], p["k"], p["m"])),
    "1a-vii": Scenario("1a-vii", 6, ("l", "j", "k", "m", "t"), _case_1a_vii,
                       lambda n, p: p["j"] < p["k"] and _distinct(p["l"], p["j"], p["k"], p["m"], p["t"])),
    "1a-viii": Scenario("1a-viii", 4, ("l", "j", "k"), _case_1a_viii, lambda n, p: _distinct(p["l"], p["j"], p["k"])),
    "1a-ix": Scenario("1a-ix", 4, ("l", "j", "k"), _case_1a_ix, lambda n, p: _distinct(p["l"], p["j"], p["k"])),
    "1a-x": Scenario("1a-x", 4, ("l", "j", "k"), _case_1a_x, lambda n, p: _distinct(p["l"], p["j"], p["k"])),
    "1a-xi": Scenario("1a-xi", 4, ("l", "j", "k"), _case_1a_xi,
                      lambda n, p: p["j"] < p["k"] and _distinct(p["l"], p["j"], p["k"])),
    "1a-xii": Scenario("1a-xii", 4, ("j", "k"), _case_1a_xii, lambda n, p: p["j"] < p["k"]),
    "1a-xiii": Scenario("1a-xiii", 3, ("j", "k"), _case_1a_xiii, lambda n, p: p["j"] < p["k"]),
    "1a-xiv": Scenario("1a-xiv", 4, ("l", "j", "k"), _case_1a_xiv, lambda n, p: _distinct(p["l"], p["j"], p["k"])),
    "1b-i": Scenario("1b-i", 4, ("l", "j", "k", "m"), _case_1b_i,
                     lambda n, p: _distinct(p["l"], p["j"], p["k"], p["m"])),
    "1b-ii": Scenario("1b-ii", 5, ("l", "j", "k", "m"), _case_1b_ii,
                      lambda n, p: _distinct(p["l"], p["j"], p["k"], p["m"])),
    "2a-i": Scenario("2a-i", 4, ("l", "j", "k"), _case_2a_i, lambda n, p: _distinct(p["l"], p["j"], p["k"])),
}


def scenario(label: str, n: int, **params) -> GeneratorSpec:
    """Monomial arguments of a named family, e.g. ``scenario("1a-i", 3, j=1, k=2)``."""
    try:
        sc = SCENARIOS[label]
    except KeyError:
        raise ValueError(f"unknown family {label!r}") from None
    _need(n >= sc.min_n, f"family {label} needs n >= {sc.min_n}")
    missing = [p for p in sc.params if p not in params]
    _need(not missing, f"family {label} needs parameters {missing}")
    for p in sc.params:
        _need(1 <= params[p] <= n - 1, f"{p}={params[p]} outside 1..{n - 1}")
    _need(sc.constraint(n, params), f"parameters {params} violate the constraints of {label}")
    fs = sc.build(n, *(params[p] for p in sc.params))
    return GeneratorSpec(tuple(fs))


# -- closed-form right-hand sides ----------------------------------------------------

# a right-hand side is a list of (coefficient, creation index or None, word of (a, b) pairs);
# the term means coefficient * (D_index (x) E_w1 E_w2 .. v_lam)

def _lam(lam, i):
    return Fraction(lam[i - 1])


def _sig(e: int) -> int:
    return -1 if e % 2 else 1


def _rhs_22(n, p, lam):
    j, k = p["j"], p["k"]
    return [(_sig(j + 1) * 2 * (sum(map(Fraction, lam)) + 1), None, [(k, j)])]


def _rhs_23(n, p, lam):
    l, k = p["l"], p["k"]
    return [(_sig(n + l + k) * 2 * (_lam(lam, l) - _lam(lam, k)), None, [])]


def _rhs_24(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(l + k + j) * (_lam(lam, k) - _lam(lam, l) + 1), None, [(k, j)])]


def _rhs_25(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(j + l + k + 1) * (_lam(lam, k) - _lam(lam, j) + 1), None, [(k, j)])]


def _rhs_26(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    s = _sig(j + l + k + 1)
    return [(s * (_lam(lam, k) - _lam(lam, j) + 1), None, [(k, j)]), (-s, None, [(k, l), (l, j)])]


def _rhs_27(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(j + l + k + 1) * (_lam(lam, j) - _lam(lam, k)), None, [(k, j)])]


def _rhs_28(n, p, lam):
    return [(_sig(p["j"]), None, [(p["k"], p["j"])])]


def _rhs_29(n, p, lam):
    l, j, k, m = p["l"], p["j"], p["k"], p["m"]
    return [(_sig(j + m + k) * 2 * (_lam(lam, m) - _lam(lam, l)), None, [(k, j)])]


def _rhs_31(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    s = _sig(j + 1) * 2
    return [(s * (_lam(lam, k) - _lam(lam, l) + 2), None, [(k, j)]), (s, None, [(l, j), (k, l)])]


def _rhs_32(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(j) * 2 * (_lam(lam, k) - _lam(lam, l) + 2), None, [(k, j)])]


def _rhs_33(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(j + 1) * 2 * (_lam(lam, k) - _lam(lam, l) + 1), None, [(k, j)])]


def _rhs_34(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(l + 1) * 2, None, [(k, j), (k, l)])]


def _rhs_35(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    s = _sig(j) * 2
    return [(s, j, [(k, l)]), (-s, l, [(k, j)])]


def _rhs_36(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(l) * 2, j, [(k, l)])]


def _rhs_37(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(l) * 2, l, [(k, j)])]


def _rhs_38(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(l + 1) * (_lam(lam, j) - _lam(lam, l)), None, [(k, j)])]


def _rhs_39(n, p, lam):
    j, k = p["j"], p["k"]
    return [(_sig(j + 1) * 2, None, [(k, j), (k, j)])]


def _rhs_40(n, p, lam):
    j, k = p["j"], p["k"]
    return [(_sig(k) * (_lam(lam, j) - _lam(lam, k)) * (sum(map(Fraction, lam)) + 1), None, [])]


def _rhs_41(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(n + l + k) * (_lam(lam, j) - _lam(lam, k)) * (1 + _lam(lam, l) - _lam(lam, j)), None, [])]


def _rhs_42(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(n + l + k) * (_lam(lam, l) - _lam(lam, j)) * (1 + _lam(lam, j) - _lam(lam, k)), None, [])]


_rhs_43 = _rhs_41


def _rhs_44(n, p, lam):
    l, j, k, m = p["l"], p["j"], p["k"], p["m"]
    s = _sig(j + l + m)
    return [(s, None, [(k, m), (m, j)]), (-s * (_lam(lam, l) - _lam(lam, m)), None, [(k, j)])]


def _rhs_45(n, p, lam):
    l, j, k, m = p["l"], p["j"], p["k"], p["m"]
    return [(_sig(j + l + m) * (1 + _lam(lam, l) - _lam(lam, m)), None, [(k, j)])]


def _rhs_46(n, p, lam):
    l, j, k, m = p["l"], p["j"], p["k"], p["m"]
    return [(_sig(j + l + m + 1) * (_lam(lam, l) - _lam(lam, m)), None, [(k, j)])]


def _rhs_47(n, p, lam):
    l, j, k, m = p["l"], p["j"], p["k"], p["m"]
    return [(_sig(m + j + k + 1) * (_lam(lam, m) - _lam(lam, l)) * (_lam(lam, j) - _lam(lam, k)), None, [])]


def _rhs_50(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    s = _sig(j + l + 1 + k)
    return [(s, l, [(l, j)]), (-s, k, [(k, j)]), (-s * (_lam(lam, k) - _lam(lam, l)), j, [])]


def _rhs_51(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    s = _sig(j + k + l + 1)
    return [(s, l, [(l, j)]), (-s * (_lam(lam, k) - _lam(lam, l)), j, [])]


def _rhs_52(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    s = _sig(j + l + k + 1)
    return [(s, k, [(k, j)]), (-s * (_lam(lam, k) - _lam(lam, l)), j, [])]


def _rhs_53(n, p, lam):
    l, j, k = p["l"], p["j"], p["k"]
    return [(_sig(j + l + k + 1) * (_lam(lam, k) - _lam(lam, l)), j, [])]


def _rhs_54(n, p, lam):
    # displayed without the factor 2 that the family carries; restored here
    return [(2 * (_lam(lam, 1) + _lam(lam, 2) + 1), None, [(2, 1)])]


def _rhs_55(n, p, lam):
    return [((_lam(lam, 1) - _lam(lam, 2)) * (_lam(lam, 1) + _lam(lam, 2) + 1), None, [])]


def _order(*names):
    """Constraint: parameters strictly increasing in the given order."""
    def check(p):
        vals = [p[x] for x in names]
        return all(a < b for a, b in zip(vals, vals[1:]))
    return check


def _any(*checks):
    return lambda p: any(c(p) for c in checks)


@dataclass(frozen=True)
class Equation:
    number: int
    family: str
    min_n: int
    orders: Callable
    rhs: Callable
    max_n: int | None = None
    fixed: dict = field(default_factory=dict)


EQUATIONS = {
    22: Equation(22, "1a-i", 3, _order("j", "k"), _rhs_22),
    23: Equation(23, "1a-ii", 4, _order("l", "k", "j"), _rhs_23),
    24: Equation(24, "1a-iii", 5, _order("j", "k"), _rhs_24),
    25: Equation(25, "1a-iv", 4, _order("l", "j", "k"), _rhs_25),
    26: Equation(26, "1a-iv", 4, _order("j", "l", "k"), _rhs_26),
    27: Equation(27, "1a-iv", 4, _order("j", "k", "l"), _rhs_27),
    28: Equation(28, "1a-v", 5, _any(_order("l", "j", "k", "m"), _order("l", "j", "m", "k"),
                                     _order("j", "m", "k", "l")), _rhs_28),
    29: Equation(29, "1a-vi", 5, _any(_order("l", "j", "m", "k"), _order("l", "j", "k", "m"),
                                      _order("j", "k", "m", "l")), _rhs_29),
    30: Equation(30, "1a-vii", 6, _order("j", "k"), _rhs_28),
    31: Equation(31, "1a-viii", 4, _order("j", "l", "k"), _rhs_31),
    32: Equation(32, "1a-viii", 4, _order("j", "k", "l"), _rhs_32),
    33: Equation(33, "1a-viii", 4, _order("l", "j", "k"), _rhs_33),
    34: Equation(34, "1a-ix", 4, _any(_order("l", "j", "k"), _order("j", "l", "k")), _rhs_34),
    35: Equation(35, "1a-x", 4, _any(_order("j", "l", "k"), _order("l", "j", "k")), _rhs_35),
    36: Equation(36, "1a-x", 4, _order("l", "k", "j"), _rhs_36),
    37: Equation(37, "1a-x", 4, _order("j", "k", "l"), _rhs_37),
    38: Equation(38, "1a-xi", 4, _order("j", "k"), _rhs_38),
    39: Equation(39, "1a-xii", 4, _order("j", "k"), _rhs_39),
    40: Equation(40, "1a-xiii", 3, _order("j", "k"), _rhs_40),
    41: Equation(41, "1a-xiv", 4, _order("j", "k", "l"), _rhs_41),
    42: Equation(42, "1a-xiv", 4, _order("l", "j", "k"), _rhs_42),
    43: Equation(43, "1a-xiv", 4, _order("k", "l", "j"), _rhs_43),
    44: Equation(44, "1b-i", 4, _any(_order("j", "l", "m", "k"), _order("j", "m", "k", "l"),
                                     _order("l", "j", "m", "k"), _order("j", "m", "l", "k")), _rhs_44),
    45: Equation(45, "1b-i", 4, _any(_order("j", "k", "l", "m"), _order("j", "k", "m", "l"),
                                     _order("j", "l", "k", "m"), _order("l", "j", "k", "m")), _rhs_45),
    46: Equation(46, "1b-i", 4, _any(_order("l", "m", "j", "k"), _order("m", "l", "j", "k"),
                                     _order("m", "j", "k", "l"), _order("m", "j", "l", "k")), _rhs_46),
    47: Equation(47, "1b-ii", 5, lambda p: True, _rhs_47),
    50: Equation(50, "2a-i", 4, _any(_order("j", "l", "k"), _order("j", "k", "l")), _rhs_50),
    51: Equation(51, "2a-i", 4, _order("k", "j", "l"), _rhs_51),
    52: Equation(52, "2a-i", 4, _order("l", "j", "k"), _rhs_52),
    53: Equation(53, "2a-i", 4, _any(_order("l", "k", "j"), _order("k", "l", "j")), _rhs_53),
    54: Equation(54, "1a-i", 3, lambda p: True, _rhs_54, max_n=3, fixed={"j": 1, "k": 2}),
    55: Equation(55, "1a-xiii", 3, lambda p: True, _rhs_55, max_n=3, fixed={"j": 1, "k": 2}),
}


@dataclass
class EquationReport:
    equation: int
    n: int
    params: dict
    weight: tuple
    spec: GeneratorSpec
    lhs: dict
    rhs: dict

    @property
    def match(self) -> bool:
        return self.lhs == self.rhs

    @property
    def status(self) -> str:
        return "MATCH" if self.match else "MISMATCH"


def admissible_params(eq: int, n: int) -> list[dict]:
    """All parameter assignments in ``1..n-1`` satisfying an equation's constraints."""
    e = EQUATIONS[eq]
    if n < e.min_n or (e.max_n is not None and n > e.max_n):
        return []
    if e.fixed:
        return [dict(e.fixed)]
    sc = SCENARIOS[e.family]
    out = []
    for vals in product(range(1, n), repeat=len(sc.params)):
        p = dict(zip(sc.params, vals))
        if sc.constraint(n, p) and e.orders(p):
            out.append(p)
    return out


def rhs_vector(eq: int, n: int, params: dict, lam: Sequence, slice: VermaSlice) -> dict:
    """Evaluate an equation's closed form inside the Verma slice."""
    e = EQUATIONS[eq]
    N = n - 1
    out: dict = {}
    for coeff, d, word in e.rhs(n, params, lam):
        if not coeff:
            continue
        fvec = slice.F.apply_word(word, {0: 1})
        I = tuple(1 if d is not None and t == d - 1 else 0 for t in range(N))
        for b, c in fvec.items():
            key = (I, b)
            s = out.get(key, 0) + coeff * c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def reproduce_equation(eq: int, n: int, params: dict, lam: Sequence,
                       slice: VermaSlice | None = None) -> EquationReport:
    """Compare the generator's image of ``1 (x) v_lam`` with the closed form."""
    from .classify import module_for

    if eq not in EQUATIONS:
        raise ValueError(f"no closed form recorded for equation {eq}")
    e = EQUATIONS[eq]
    _need(n >= e.min_n, f"equation {eq} needs n >= {e.min_n}")
    _need(e.max_n is None or n <= e.max_n, f"equation {eq} needs n <= {e.max_n}")
    params = dict(e.fixed or params)
    _need(len(lam) == n - 1, f"weight needs {n - 1} entries")
    _need(e.orders(params), f"parameters {params} outside the ordering of equation {eq}")
    spec = scenario(e.family, n, **params)
    if slice is None:
        slice = VermaSlice(module_for(lam), 2)
    lhs = apply_to_hw(abstract_qgen(spec.polys()), slice)
    rhs = rhs_vector(eq, n, params, lam, slice)
    return EquationReport(eq, n, params, tuple(lam), spec, lhs, rhs)
