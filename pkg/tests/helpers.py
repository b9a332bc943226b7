"""Shared strategies and the acceptance report store."""

from hypothesis import strategies as st

from nlie.poly import Poly

ACCEPTANCE_LINES: list[str] = []


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def polys(nvars: int, max_degree: int = 3, max_terms: int = 3):
    """Small polynomials with rational coefficients."""
    coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(bool)
    return st.dictionaries(monomial_exps(nvars, max_degree), coeffs, max_size=max_terms).map(
        lambda d: Poly(nvars, d))


def monomial_exps(nvars: int, max_degree: int = 2):
    return st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars).filter(
        lambda e: sum(e) <= max_degree).map(tuple)
