"""Monomial bases of twisted section spaces.

On the quotient of C^n minus the origin by a diagonal contraction, the global
sections of the tangent sheaf, of 1-forms, and of (n-1)-forms twisted by a
line bundle are spanned by monomials whose exponents satisfy one monomial
identity in the multipliers per component.  With the relation pattern encoded
as a :class:`~hopfkit.multipliers.MultiplierStructure`, each identity becomes
an equality of equivalence keys, and the solution set per component is a
product of stars-and-bars enumerations, one per group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import product

from .errors import UnsupportedComputationError
from .multipliers import BundleParam, MultiplierStructure, StructureKind


def weak_compositions(total: int, parts: int):
    """Yield every tuple of ``parts`` non-negative integers summing to ``total``.

    Tuples appear in lexicographic order; there are C(total+parts-1, parts-1)
    of them.
    """
    if parts < 0:
        raise ValueError("parts must be non-negative")
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in weak_compositions(total - head, parts - 1):
            yield (head,) + rest


def _alphas_with_class(ms: MultiplierStructure, key) -> list[tuple[int, ...]]:
    """All alpha in N^n whose equivalence key equals ``key``, sorted lexicographically."""
    choices = []
    for group, target in zip(ms.groups, key):
        if target < 0:
            return []
        choices.append(list(weak_compositions(target, len(group))))
    out = []
    for combo in product(*choices):
        alpha = [0] * ms.n
        for group, part in zip(ms.groups, combo):
            for index, value in zip(group, part):
                alpha[index - 1] = value
        out.append(tuple(alpha))
    out.sort()
    return out


@dataclass(frozen=True)
class SolutionSet:
    """Finite monomial basis of a twisted section space.

    Entries are pairs ``(k, alpha)``: a component index and the exponent
    vector of one basis monomial, ordered by component and then
    lexicographically.  What the pair denotes (a field z^alpha d/dz_k, a form
    z^alpha dz_k, or an (n-1)-form omitting dz_k) depends on the solver that
    produced the set.
    """

    entries: tuple[tuple[int, tuple[int, ...]], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def exponents_for(self, component: int) -> list[tuple[int, ...]]:
        return [alpha for k, alpha in self.entries if k == component]


def _exponents(ms: MultiplierStructure, param: BundleParam) -> tuple[int, ...]:
    if param.exponents is None:
        raise ValueError("bundle parameter has no monomial expression")
    if len(param.exponents) != ms.n:
        raise ValueError(
            f"bundle exponent vector has length {len(param.exponents)}, expected {ms.n}"
        )
    return param.exponents


def _shift(exponents, delta_index: int, amount: int) -> tuple[int, ...]:
    return tuple(
        v + (amount if i == delta_index else 0) for i, v in enumerate(exponents, start=1)
    )


def solve_tangent_sections(ms: MultiplierStructure, bundle: BundleParam) -> SolutionSet:
    """Monomial vector fields pairing with a rank-one tangent subsheaf parameter.

    For subsheaf parameter b the matching global sections live in the tangent
    sheaf twisted by the inverse parameter, spanned by monomials
    z^alpha d/dz_k with mu^alpha = mu_k * b^(-1).  An unrelated parameter has
    no sections at all.
    """
    if bundle.is_unrelated:
        return SolutionSet(())
    inverse = _exponents(ms, bundle.inverse())
    entries = []
    for k in range(1, ms.n + 1):
        target = ms.class_of(_shift(inverse, k, +1))
        entries.extend((k, alpha) for alpha in _alphas_with_class(ms, target))
    entries.sort()
    return SolutionSet(tuple(entries))


def solve_oneform_sections(ms: MultiplierStructure, twist: BundleParam) -> SolutionSet:
    """Monomial 1-forms z^alpha dz_k twisted by ``twist``.

    The component-k equation is mu^alpha * mu_k = twist.
    """
    if twist.is_unrelated:
        return SolutionSet(())
    exps = _exponents(ms, twist)
    entries = []
    for k in range(1, ms.n + 1):
        target = ms.class_of(_shift(exps, k, -1))
        entries.extend((k, alpha) for alpha in _alphas_with_class(ms, target))
    entries.sort()
    return SolutionSet(tuple(entries))


def solve_nminus1form_sections(ms: MultiplierStructure, twist: BundleParam) -> SolutionSet:
    """Monomial (n-1)-forms z^alpha dz_1^...^dz_n with dz_k omitted, twisted by ``twist``.

    The component-k equation is mu^(alpha + 1) / mu_k = twist, with 1 the
    all-ones vector.  Requires n >= 3; at n = 2 these coincide with 1-forms
    and the dedicated solver should be used.
    """
    if ms.n < 3:
        raise ValueError("(n-1)-form sections need ambient dimension at least 3")
    if twist.is_unrelated:
        return SolutionSet(())
    exps = _exponents(ms, twist)
    shifted = tuple(v - 1 for v in exps)
    entries = []
    for k in range(1, ms.n + 1):
        target = ms.class_of(_shift(shifted, k, +1))
        entries.extend((k, alpha) for alpha in _alphas_with_class(ms, target))
    entries.sort()
    return SolutionSet(tuple(entries))


class SectionSpace(str, Enum):
    """Which twisted section space a dimension query refers to."""

    TANGENT = "tangent"
    ONE_FORM = "one-form"
    TOP_MINUS_ONE_FORM = "top-minus-one-form"


_SOLVERS = {
    SectionSpace.TANGENT: solve_tangent_sections,
    SectionSpace.ONE_FORM: solve_oneform_sections,
    SectionSpace.TOP_MINUS_ONE_FORM: solve_nminus1form_sections,
}


def dim_h0(space, ms: MultiplierStructure, param: BundleParam) -> int:
    """Dimension of the requested twisted section space.

    The parameter convention matches the underlying solver: for
    ``SectionSpace.TANGENT`` the argument is the subsheaf parameter b (the
    sections are twisted by b^(-1)); for the form spaces it is the twist
    itself.

    Evaluated through the closed binomial count per component rather than by
    enumerating the basis, so it stays cheap for large exponents; it always
    equals ``len`` of the corresponding solver output.
    """
    space = SectionSpace(space)
    if param.is_unrelated:
        return 0
    if space is SectionSpace.TANGENT:
        base = _exponents(ms, param.inverse())
        delta = +1
    elif space is SectionSpace.ONE_FORM:
        base = _exponents(ms, param)
        delta = -1
    else:
        if ms.n < 3:
            raise ValueError("(n-1)-form sections need ambient dimension at least 3")
        base = tuple(v - 1 for v in _exponents(ms, param))
        delta = +1
    return sum(
        solution_count_formula(ms, ms.class_of(_shift(base, k, delta)))
        for k in range(1, ms.n + 1)
    )


def solution_count_formula(ms: MultiplierStructure, key) -> int:
    """Closed count of exponent vectors with a given equivalence key.

    Product over groups of C(target + size - 1, size - 1); zero when any
    group target is negative.
    """
    count = 1
    for group, target in zip(ms.groups, key):
        if target < 0:
            return 0
        count *= math.comb(target + len(group) - 1, len(group) - 1)
    return count


class Predicate(str, Enum):
    """Closed-form positivity tests for twisted section spaces.

    Values name the space whose positivity is decided; the parameter
    convention is listed with :func:`predicate_existence`.
    """

    TANGENT = "tangent"
    ONE_FORM = "one-form"
    TOP_MINUS_ONE_FORM = "top-minus-one-form"
    CONORMAL = "conormal"


def _key_parts(ms: MultiplierStructure, exponents):
    """Split an equivalence key into the block value and the singleton values."""
    key = ms.class_of(exponents)
    if ms.kind is StructureKind.INTERMEDIARY:
        block_position = next(
            pos for pos, g in enumerate(ms.groups) if len(g) > 1
        )
        block_value = key[block_position]
        singles = [v for pos, v in enumerate(key) if pos != block_position]
        return block_value, singles
    return None, list(key)


def predicate_existence(predicate, ms: MultiplierStructure, param: BundleParam) -> bool:
    """Decide positivity of a twisted section space without enumeration.

    Parameter conventions:

    * ``TANGENT``: param is the twist a; decides dim of the tangent sheaf
      twisted by a.
    * ``ONE_FORM``: param is the twist a of the 1-forms.
    * ``TOP_MINUS_ONE_FORM``: param is the twist b of the (n-1)-forms.
    * ``CONORMAL``: param is the conormal parameter b of a codimension-one
      distribution; the condition constrains b^(-1) and equals the ONE_FORM
      test at b^(-1).

    Supported for classical, generic, and intermediary structures.  For a
    general partition no closed form is claimed and callers should fall back
    to ``dim_h0(...) > 0``; requesting one raises
    :class:`UnsupportedComputationError`.
    """
    predicate = Predicate(predicate)
    kind = ms.kind
    if kind is StructureKind.GENERAL:
        raise UnsupportedComputationError(
            "no closed-form existence test for a general relation pattern"
        )
    if predicate is Predicate.TOP_MINUS_ONE_FORM and ms.n < 3:
        raise ValueError("the (n-1)-form test needs ambient dimension at least 3")
    if param.is_unrelated:
        return False
    if predicate is Predicate.CONORMAL:
        return predicate_existence(Predicate.ONE_FORM, ms, param.inverse())

    exps = _exponents(ms, param)
    if kind is StructureKind.CLASSICAL:
        total = sum(exps)
        if predicate is Predicate.TANGENT:
            return total >= -1
        if predicate is Predicate.ONE_FORM:
            return total >= 1
        return total >= ms.n - 1

    block, singles = _key_parts(ms, exps)
    if kind is StructureKind.GENERIC:
        # every group is a singleton; treat the key entries uniformly
        if predicate is Predicate.TANGENT:
            return any(
                v >= -1 and all(w >= 0 for j, w in enumerate(singles) if j != i)
                for i, v in enumerate(singles)
            )
        if predicate is Predicate.ONE_FORM:
            return all(v >= 0 for v in singles) and any(v >= 1 for v in singles)
        return any(
            v >= 0 and all(w >= 1 for j, w in enumerate(singles) if j != i)
            for i, v in enumerate(singles)
        )

    r = ms.block_size
    if predicate is Predicate.TANGENT:
        if block >= -1 and all(v >= 0 for v in singles):
            return True
        return block >= 0 and any(
            v >= -1 and all(w >= 0 for j, w in enumerate(singles) if j != i)
            for i, v in enumerate(singles)
        )
    if predicate is Predicate.ONE_FORM:
        if any(v < 0 for v in singles):
            return False
        return block >= 1 or (block >= 0 and any(v >= 1 for v in singles))
    if block >= r - 1 and all(v >= 1 for v in singles):
        return True
    return block >= r and any(
        v >= 0 and all(w >= 1 for j, w in enumerate(singles) if j != i)
        for i, v in enumerate(singles)
    )
