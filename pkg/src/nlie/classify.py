"""Which generalized Verma modules are representations of the n-Lie algebra W^n.

``theorem7_predicate`` states the published answer; ``brute_verify`` checks it
by evaluating every bounded monomial generator of the ideal on the highest
weight vector of ``M(F)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .glrep import (
    GLModuleSlice,
    exceptional_index,
    exceptional_module,
    height_of,
    is_dominant,
    scalar_module,
    NotDominantError,
    truncated_irreducible,
)
from .qgen import GeneratorSpec, apply_to_hw, enumerate_specs
from .verma import VermaSlice, in_singplus, singplus_span
from .wedge import abstract_qgen

__all__ = [
    "M_KIND",
    "J_KIND",
    "Verdict",
    "theorem7_predicate",
    "module_for",
    "brute_verify",
    "scan",
    "dominant_box",
    "ScanRow",
]

M_KIND = "M(F)"
J_KIND = "J(F)"


def _fr(lam) -> tuple:
    out = []
    for x in lam:
        x = Fraction(x)
        out.append(x.numerator if x.denominator == 1 else x)
    return tuple(out)


def theorem7_predicate(n: int, lam: Sequence) -> tuple[bool, str]:
    """The published classification: ``(accepted, module kind)``.

    Exceptional weights are those of the form ``(0, .., 0, -1, .., -1)`` with
    at least one ``-1``; their module is the quotient ``J(F^p)``.
    """
    lam = _fr(lam)
    if n < 3 or len(lam) != n - 1:
        raise ValueError(f"need n >= 3 and a weight with {n - 1} entries")
    if not is_dominant(lam):
        raise NotDominantError(f"{lam} is not dominant")
    p = exceptional_index(lam)
    if n == 3:
        if p is not None:
            return True, J_KIND
        l1, l2 = lam
        ok = (l1 == l2 and l1 != -1) or (l1 == -1 - l2 and l2 != 0)
        return ok, M_KIND
    if p is not None:
        return p == n - 1, J_KIND
    return len(set(lam)) == 1 and lam[0] != -1, M_KIND


def _lowest_height(lam: Sequence) -> int:
    return sum(height_of(lam, tuple(reversed(lam))))


def module_for(lam: Sequence, depth: int | None = None, max_complete_height: int = 12) -> GLModuleSlice:
    """The irreducible gl-module of highest weight ``lam`` as a slice.

    Scalar and exceptional weights use their explicit realizations; other
    weights use the contravariant-form quotient, complete when the lowest
    weight is within ``max_complete_height``.  Results are cached.
    """
    return _module_for(_fr(lam), depth, max_complete_height)


@lru_cache(maxsize=64)
def _module_for(lam: tuple, depth: int | None, max_complete_height: int) -> GLModuleSlice:
    N = len(lam)
    if len(set(lam)) == 1:
        return scalar_module(lam[0], N)
    p = exceptional_index(lam)
    if p is not None:
        return exceptional_module(p, N)
    if depth is None:
        full = _lowest_height(lam)
        depth = full if full <= max_complete_height else 2 * (N - 1)
    return truncated_irreducible(lam, depth)


@dataclass
class Verdict:
    n: int
    weight: tuple
    accepted: bool
    module_kind: str
    checked_tuples: int
    witness: tuple | None = None  # (GeneratorSpec, image vector)
    singplus_dims: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "weight": [str(x) for x in self.weight],
            "accepted": self.accepted,
            "module_kind": self.module_kind,
            "checked_tuples": self.checked_tuples,
            "singplus_dims": {str(k): v for k, v in self.singplus_dims.items()},
            "witness": None,
        }
        if self.witness is not None:
            spec, vec = self.witness
            out["witness"] = {
                "spec": str(spec),
                "image": [[list(I), b, str(c)] for (I, b), c in sorted(vec.items())],
            }
        return out


@lru_cache(maxsize=8)
def _generators(n: int, slot_deg: int, total_deg: int) -> tuple:
    """Nonzero abstract generators for all bounded specs, in enumeration order."""
    out = []
    for spec in enumerate_specs(n, slot_deg, total_deg):
        gen = abstract_qgen(spec.polys())
        if not gen.is_zero_data():
            out.append((spec, gen))
    return tuple(out)


def brute_verify(n: int, lam: Sequence, slot_deg: int = 2, total_deg: int | None = None,
                 maxdeg: int = 2) -> Verdict:
    """Test every bounded generator on ``1 (x) v_lam``.

    ``M(F)`` is accepted when every image vanishes.  Otherwise, if ``M(F)``
    has non-trivial singular vectors (computed, not assumed), the quotient
    ``J(F)`` is accepted when every image lies in the submodule they
    generate.  The witness is the first failing spec in enumeration order.
    """
    lam = _fr(lam)
    if len(lam) != n - 1:
        raise ValueError(f"weight needs {n - 1} entries")
    if not is_dominant(lam):
        raise NotDominantError(f"{lam} is not dominant")
    if total_deg is None:
        total_deg = 2 * n - 2
    F = module_for(lam)
    vslice = VermaSlice(F, maxdeg)
    gens = _generators(n, slot_deg, total_deg)
    images = []
    checked = 0
    for spec, gen in gens:
        checked += 1
        img = apply_to_hw(gen, vslice)
        if img:
            images.append((spec, img))
    if not images:
        return Verdict(n, lam, True, M_KIND, checked)
    witness = images[0]
    dims = {}
    if F.complete:
        spans = singplus_span(vslice)
        dims = {d: len(b) for d, b in spans.items()}
    if any(dims.values()):
        bad = [(s, v) for s, v in images if not in_singplus(v, spans)]
        if not bad:
            return Verdict(n, lam, True, J_KIND, checked, None, dims)
        witness = bad[0]
    return Verdict(n, lam, False, M_KIND, checked, witness, dims)


def dominant_box(n: int, lo: int, hi: int) -> list[tuple]:
    """Dominant integral weights with entries in ``lo..hi``."""
    return [lam for lam in product(range(lo, hi + 1), repeat=n - 1) if is_dominant(lam)]


@dataclass
class ScanRow:
    weight: tuple
    predicate: tuple
    verdict: Verdict

    @property
    def agree_accept(self) -> bool:
        return self.predicate[0] == self.verdict.accepted

    @property
    def agree_kind(self) -> bool:
        """The predicted module is a representation.

        A representation on ``M(F)`` descends to its quotient ``J(F)``, so a
        predicted ``J(F)`` is confirmed by either verdict kind.
        """
        if not (self.predicate[0] and self.verdict.accepted):
            return True
        return self.predicate[1] == J_KIND or self.verdict.module_kind == M_KIND

    @property
    def agree(self) -> bool:
        return self.agree_accept and self.agree_kind


def scan(n: int, weights: Iterable[Sequence], slot_deg: int = 2, total_deg: int | None = None,
         jobs: int = 1) -> list[ScanRow]:
    weights = [tuple(w) for w in weights]
    if jobs > 1 and len(weights) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(_verify_star, [(n, w, slot_deg, total_deg) for w in weights]))
    else:
        verdicts = [brute_verify(n, w, slot_deg, total_deg) for w in weights]
    return [ScanRow(_fr(w), theorem7_predicate(n, w), v) for w, v in zip(weights, verdicts)]


def _verify_star(args):
    return brute_verify(*args)
