"""Shared oracles and random object generators.

The brute-force counters here deliberately avoid the library's stars-and-bars
enumeration: they walk a covering exponent box and test the defining key
equality directly, so solver bugs cannot cancel out.
"""

from fractions import Fraction
from itertools import product

import pytest

from hopfkit import BundleParam, DifferentialForm, GaussianRational, Polynomial, VectorField
from hopfkit.sections import SectionSpace, _exponents, _shift


def _targets(space, ms, param):
    """Per-component key targets, mirroring the defining monomial identities."""
    space = SectionSpace(space)
    if space is SectionSpace.TANGENT:
        base = _exponents(ms, param.inverse())
        delta = +1
    elif space is SectionSpace.ONE_FORM:
        base = _exponents(ms, param)
        delta = -1
    else:
        base = tuple(v - 1 for v in _exponents(ms, param))
        delta = +1
    return [ms.class_of(_shift(base, k, delta)) for k in range(1, ms.n + 1)]


def brute_force_entries(space, ms, param):
    """All (component, alpha) solutions found by scanning a covering box.

    Any solution alpha is non-negative with per-group sums equal to the
    target key, so every coordinate is bounded by the largest target entry.
    """
    if param.is_unrelated:
        return []
    targets = _targets(space, ms, param)
    bound = max((t for key in targets for t in key), default=0)
    if bound < 0:
        return []
    entries = []
    for k, target in enumerate(targets, start=1):
        if any(t < 0 for t in target):
            continue
        for alpha in product(range(bound + 1), repeat=ms.n):
            if list(ms.class_of(alpha)) == list(target):
                entries.append((k, alpha))
    entries.sort()
    return entries


def brute_force_dim(space, ms, param):
    return len(brute_force_entries(space, ms, param))


def minimal_hitting_sets_oracle(supports, n):
    """Minimal hitting sets by exhaustive subset scan (exponential, tiny n only)."""
    if not supports:
        return [()]
    hitting = []
    for size in range(1, n + 1):
        for candidate in product(*([range(1, n + 1)] * size)):
            s = tuple(sorted(set(candidate)))
            if len(s) != size:
                continue
            if s in hitting:
                continue
            if any(set(h) <= set(s) for h in hitting):
                continue
            if all(set(s) & set(sup) for sup in supports):
                hitting.append(s)
    return sorted(hitting, key=lambda s: (len(s), s))


def rand_fraction(rng, zero_ok=False):
    num = rng.randint(-4, 4)
    if not zero_ok:
        while num == 0:
            num = rng.randint(-4, 4)
    return Fraction(num, rng.randint(1, 4))


def rand_scalar(rng, zero_ok=False):
    re = rand_fraction(rng, zero_ok=True)
    im = rand_fraction(rng, zero_ok=True)
    if not zero_ok:
        while not (re or im):
            re = rand_fraction(rng, zero_ok=True)
            im = rand_fraction(rng, zero_ok=True)
    return GaussianRational(re, im)


def rand_poly(rng, n, max_degree=3, max_terms=2, zero_ok=False):
    terms = {}
    for _ in range(rng.randint(0 if zero_ok else 1, max_terms)):
        exps = tuple(rng.randint(0, max_degree) for _ in range(n))
        terms[exps] = rand_scalar(rng)
    return Polynomial(n, terms)


def rand_homogeneous_poly(rng, n, degree, max_terms=2):
    from hopfkit.sections import weak_compositions

    monos = list(weak_compositions(degree, n))
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(monos)] = rand_scalar(rng)
    return Polynomial(n, terms)


def rand_form(rng, n, degree, max_degree=3, max_terms=2):
    from itertools import combinations

    indices = list(combinations(range(1, n + 1), degree))
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(indices)] = rand_poly(rng, n, max_degree=max_degree)
    return DifferentialForm(n, degree, terms)


def rand_field(rng, n, max_degree=3):
    return VectorField(
        tuple(rand_poly(rng, n, max_degree=max_degree, zero_ok=True) for _ in range(n))
    )


@pytest.fixture
def rng():
    import random

    return random.Random(20260814)
