"""Exact elimination primitives over the Gaussian rationals.

Provides the linear algebra and univariate gcd machinery behind the
nonsingularity decisions: rank of a coefficient matrix for linear sections,
gcd-based common-zero tests for binary forms, and a graded surjectivity test
for three ternary forms.
"""

from __future__ import annotations

from functools import reduce

from .polynomials import Polynomial
from .rationals import GaussianRational
from .sections import weak_compositions


def matrix_rank(rows) -> int:
    """Rank of a matrix given as a list of GaussianRational rows."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(work)):
            if work[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        for r in range(rank + 1, len(work)):
            if work[r][col]:
                factor = work[r][col] / pivot
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def _uni_trim(coeffs) -> list:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return out


def uni_degree(coeffs) -> int:
    """Degree of a univariate polynomial given low-to-high; zero polynomial -> -1."""
    trimmed = _uni_trim(coeffs)
    return len(trimmed) - 1


def uni_remainder(f, g) -> list:
    f = _uni_trim(f)
    g = _uni_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    while len(f) >= len(g):
        factor = f[-1] / g[-1]
        shift = len(f) - len(g)
        for i, c in enumerate(g):
            f[i + shift] = f[i + shift] - factor * c
        f = _uni_trim(f)
        if not f:
            break
    return f


def uni_gcd(f, g) -> list:
    """Monic gcd of two univariate polynomials over the Gaussian rationals."""
    a, b = _uni_trim(f), _uni_trim(g)
    while b:
        a, b = b, uni_remainder(a, b)
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def uni_derivative(f) -> list:
    return _uni_trim([c * k for k, c in enumerate(f)][1:])


def distinct_root_count(f) -> int:
    """Number of distinct complex roots: deg f minus deg gcd(f, f')."""
    f = _uni_trim(f)
    if not f:
        raise ValueError("the zero polynomial has no root count")
    if len(f) == 1:
        return 0
    return uni_degree(f) - uni_degree(uni_gcd(f, uni_derivative(f)))


def _check_forms(forms, n: int):
    degrees = []
    for f in forms:
        if f.n != n:
            raise ValueError(f"expected forms in {n} variables")
        d = f.homogeneous_degree()
        if f.is_zero() or d is None or d < 1:
            raise ValueError("expected nonzero homogeneous forms of positive degree")
        degrees.append(d)
    return degrees


def dehomogenize_binary(form: Polynomial) -> list:
    """Coefficient list of F(t, 1) for a binary form, low-to-high in t."""
    d = form.homogeneous_degree()
    coeffs = [GaussianRational(0)] * (d + 1)
    for (j, _), c in form.terms():
        coeffs[j] = c
    return coeffs


def binary_forms_have_common_zero(forms) -> bool:
    """Whether nonzero binary forms of positive degree share a projective zero."""
    forms = list(forms)
    degrees = _check_forms(forms, 2)
    if all(not f.coefficient((d, 0)) for f, d in zip(forms, degrees)):
        return True  # common zero at (1 : 0)
    qs = [dehomogenize_binary(f) for f in forms]
    return uni_degree(reduce(uni_gcd, qs)) >= 1


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    return list(weak_compositions(degree, nvars))


def ternary_forms_have_common_zero(f1: Polynomial, f2: Polynomial, f3: Polynomial) -> bool:
    """Whether three ternary forms share a projective common zero.

    Decided exactly by a graded surjectivity test: in degree
    D = d1 + d2 + d3 - 2 the multiplication map out of the three forms hits
    every monomial precisely when the forms have no common zero away from the
    origin, so a rank computation settles the question without any extraneous
    factors.
    """
    forms = [f1, f2, f3]
    degrees = _check_forms(forms, 3)
    target_degree = sum(degrees) - 2
    codomain = monomials_of_degree(3, target_degree)
    index = {m: i for i, m in enumerate(codomain)}
    rows = []
    for f, d in zip(forms, degrees):
        for mon in monomials_of_degree(3, target_degree - d):
            row = [GaussianRational(0)] * len(codomain)
            for e, c in f.terms():
                shifted = tuple(a + b for a, b in zip(mon, e))
                row[index[shifted]] = c
            rows.append(row)
    return matrix_rank(rows) < len(codomain)
