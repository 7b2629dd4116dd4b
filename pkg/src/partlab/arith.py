"""Number theory on part sets: gcd, coprime prefixes, representability.

A part set with gcd 1 represents every large enough integer; the least
such starting point (the Frobenius number plus one) is found by a
reachability scan.  The strict-monotonicity criterion for finite part
sets with unrestricted multiplicities checks coprimality of every
(k-1)-element subset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .setspec import (
    AllFrom,
    ArithmeticProgression,
    DoublyExponential,
    Finite,
    IntegerSetSpec,
    InvalidSetError,
    Powers,
    SparseConstructed,
    WithZero,
)


@dataclass(frozen=True)
class FiniteCoprimeSet:
    """Sorted distinct positive integers a_1 < ... < a_k with gcd 1."""

    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(set(int(e) for e in self.elements)))
        if not elems or elems[0] < 1:
            raise InvalidSetError("need at least one positive element")
        if math.gcd(*elems) != 1:
            raise InvalidSetError(f"gcd is {math.gcd(*elems)}, not 1")
        object.__setattr__(self, "elements", elems)

    @property
    def k(self) -> int:
        return len(self.elements)

    def product(self) -> int:
        return math.prod(self.elements)


@dataclass(frozen=True)
class PrefixGcdTrace:
    """g_i = gcd(a_1, ..., a_i) for the shortest prefix reaching gcd 1."""

    gcds: tuple[int, ...]

    def __post_init__(self):
        if not self.gcds or self.gcds[-1] != 1:
            raise InvalidSetError("trace must end at gcd 1")
        if any(b > a for a, b in zip(self.gcds, self.gcds[1:])):
            raise InvalidSetError("prefix gcds must be nonincreasing")

    @property
    def prefix_length(self) -> int:
        return len(self.gcds)


def gcd_of_set(spec: IntegerSetSpec) -> int:
    """gcd of all elements, computed analytically per variant."""
    if isinstance(spec, Finite):
        return math.gcd(*spec.elements)
    if isinstance(spec, AllFrom):
        return 1
    if isinstance(spec, ArithmeticProgression):
        return math.gcd(spec.first, spec.step)
    if isinstance(spec, Powers):
        return 1  # contains base^0 = 1
    if isinstance(spec, DoublyExponential):
        # gcd(b, b^b, b^(b^2), ...) = b: every element is a multiple of b.
        return spec.base
    if isinstance(spec, SparseConstructed):
        return math.gcd(*spec.anchors)
    if isinstance(spec, WithZero):
        raise InvalidSetError("gcd_of_set applies to part sets, not multiplicity sets")
    raise TypeError(f"unknown set variant {type(spec).__name__}")


def is_eventually_positive(spec: IntegerSetSpec) -> bool:
    """True iff p(n; spec, all multiplicities) > 0 for all large n, i.e. gcd 1."""
    return gcd_of_set(spec) == 1


def coprime_prefix(spec: IntegerSetSpec) -> tuple[FiniteCoprimeSet, PrefixGcdTrace]:
    """Shortest initial segment with gcd 1, plus the full prefix-gcd trace."""
    g = gcd_of_set(spec)
    if g != 1:
        raise InvalidSetError(f"set has gcd {g}; it contains no coprime subset")
    prefix: list[int] = []
    gcds: list[int] = []
    acc = 0
    for a in spec.iter_elements():
        acc = math.gcd(acc, a)
        prefix.append(a)
        gcds.append(acc)
        if acc == 1:
            return FiniteCoprimeSet(tuple(prefix)), PrefixGcdTrace(tuple(gcds))
    raise InvalidSetError("finite set exhausted before reaching gcd 1")


def frobenius_threshold(cset: FiniteCoprimeSet) -> int:
    """Least N such that every n >= N is a nonnegative combination of the
    elements.

    Scans reachability with growing horizon and stops at the first run of
    a_1 consecutive representable integers: from its start t on, every n
    is representable by adding copies of a_1, and t is least with that
    property.
    """
    elems = cset.elements
    a1 = elems[0]
    if a1 == 1:
        return 0
    limit = 2 * max(elems) + a1
    while True:
        reachable = bytearray(limit + 1)
        reachable[0] = 1
        for a in elems:
            for v in range(a, limit + 1):
                if reachable[v - a]:
                    reachable[v] = 1
        run = 0
        for v in range(limit + 1):
            run = run + 1 if reachable[v] else 0
            if run == a1:
                return v - a1 + 1
        limit *= 2


def eventually_strictly_increasing(cset: FiniteCoprimeSet) -> bool:
    """Criterion for p(n; A, all multiplicities) to be strictly increasing
    from some point on: no prime divides all but one of the elements,
    i.e. every (k-1)-subset is coprime.

    For k = 1 the empty subset has gcd 0, so the answer is False; p is
    eventually constant there.
    """
    if cset.k == 1:
        return False
    for i in range(cset.k):
        rest = cset.elements[:i] + cset.elements[i + 1 :]
        if math.gcd(*rest) != 1:
            return False
    return True
