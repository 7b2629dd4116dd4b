"""Structured integer-set specifications for parts and multiplicities.

A partition problem here is a pair of integer sets: the allowed parts S
(positive integers) and the allowed multiplicities M (nonnegative
integers, always containing 0 so that a part may be omitted).  Both are
described by small structured specs that enumerate lazily in increasing
order, so infinite sets are first-class.

Spec mini-language (ASCII, no whitespace):

    all            every positive integer            (part sets)
    all-from:K     {K, K+1, K+2, ...}
    finite:A,B,..  explicit finite set
    ap:A,D         arithmetic progression {A, A+D, A+2D, ...}
    pow:B          {B^j : j >= 0}, includes 1        (B >= 2)
    dexp:B         {B^(B^j) : j >= 0}                (B >= 2)
    nat            all nonnegative integers          (multiplicity sets)
    zero|SPEC      {0} union SPEC                    (multiplicity sets)
    sparse:@FILE   anchors from FILE, one integer per line, ascending

Counting thresholds are exact rationals: M(n/a) is evaluated through the
integer predicate mu * a <= n, never through floating point.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count as _count
from typing import Iterator


class SetSpecError(ValueError):
    """Base class for set-spec problems."""


class SpecSyntaxError(SetSpecError):
    """Malformed spec text; carries the offset where parsing failed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvalidSetError(SetSpecError):
    """Structurally valid text describing a semantically invalid set."""


Threshold = int | Fraction


class IntegerSetSpec:
    """Common interface of all set variants.

    Instances are immutable; every operation is pure.
    """

    def iter_elements(self) -> Iterator[int]:
        """Yield the elements in strictly increasing order (possibly forever)."""
        raise NotImplementedError

    def count_leq(self, x: Threshold) -> int:
        """|{s in set : s <= x}|, exact for rational x."""
        raise NotImplementedError

    def spec_string(self) -> str:
        """Canonical text form, parseable by parse_set_spec."""
        raise NotImplementedError

    def contains_zero(self) -> bool:
        return self.count_leq(0) >= 1

    def min_positive(self) -> int:
        """Smallest positive element."""
        for e in self.iter_elements():
            if e > 0:
                return e
        raise InvalidSetError("set has no positive element")

    def elements_upto(self, bound: int) -> list[int]:
        """All members <= bound, ascending."""
        out = []
        for e in self.iter_elements():
            if e > bound:
                break
            out.append(e)
        return out

    def __str__(self) -> str:
        return self.spec_string()


@dataclass(frozen=True)
class Finite(IntegerSetSpec):
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(set(int(e) for e in self.elements)))
        if not elems:
            raise InvalidSetError("finite set must be nonempty")
        if elems[0] < 0:
            raise InvalidSetError("set elements must be nonnegative")
        object.__setattr__(self, "elements", elems)

    def iter_elements(self):
        return iter(self.elements)

    def count_leq(self, x):
        return bisect_right(self.elements, x)

    def spec_string(self):
        return "finite:" + ",".join(str(e) for e in self.elements)


@dataclass(frozen=True)
class AllFrom(IntegerSetSpec):
    start: int = 1

    def __post_init__(self):
        if self.start < 1:
            raise InvalidSetError("all-from start must be positive")

    def iter_elements(self):
        return _count(self.start)

    def count_leq(self, x):
        if x < self.start:
            return 0
        return math.floor(x) - self.start + 1

    def spec_string(self):
        return "all" if self.start == 1 else f"all-from:{self.start}"


@dataclass(frozen=True)
class ArithmeticProgression(IntegerSetSpec):
    first: int
    step: int

    def __post_init__(self):
        if self.first < 1 or self.step < 1:
            raise InvalidSetError("progression first and step must be positive")

    def iter_elements(self):
        return _count(self.first, self.step)

    def count_leq(self, x):
        if x < self.first:
            return 0
        return math.floor(Fraction(x - self.first, self.step)) + 1

    def spec_string(self):
        return f"ap:{self.first},{self.step}"


@dataclass(frozen=True)
class Powers(IntegerSetSpec):
    base: int

    def __post_init__(self):
        if self.base < 2:
            raise InvalidSetError("power base must be at least 2")

    def iter_elements(self):
        v = 1
        while True:
            yield v
            v *= self.base

    def count_leq(self, x):
        n = 0
        v = 1
        while v <= x:
            n += 1
            v *= self.base
        return n

    def spec_string(self):
        return f"pow:{self.base}"


@dataclass(frozen=True)
class DoublyExponential(IntegerSetSpec):
    """{base^(base^j) : j >= 0}; successive elements satisfy e' = e^base."""

    base: int

    def __post_init__(self):
        if self.base < 2:
            raise InvalidSetError("power base must be at least 2")

    def iter_elements(self):
        v = self.base
        while True:
            yield v
            v = v**self.base

    def count_leq(self, x):
        n = 0
        v = self.base
        while v <= x:
            n += 1
            v = v**self.base
        return n

    def spec_string(self):
        return f"dexp:{self.base}"


@dataclass(frozen=True)
class WithZero(IntegerSetSpec):
    """{0} union inner; the only way an infinite multiplicity set gets its 0."""

    inner: IntegerSetSpec

    def __post_init__(self):
        if self.inner.contains_zero():
            raise InvalidSetError("inner set of zero| already contains 0")

    def iter_elements(self):
        yield 0
        yield from self.inner.iter_elements()

    def count_leq(self, x):
        if x < 0:
            return 0
        return 1 + self.inner.count_leq(x)

    def spec_string(self):
        if self.inner == AllFrom(1):
            return "nat"
        return "zero|" + self.inner.spec_string()


@dataclass(frozen=True)
class SparseConstructed(IntegerSetSpec):
    """A finite anchor list produced by construct_sparse_set or loaded from file.

    The source path is bookkeeping only and does not take part in equality.
    """

    anchors: tuple[int, ...]
    source: str | None = field(default=None, compare=False)

    def __post_init__(self):
        anchors = tuple(int(a) for a in self.anchors)
        if not anchors:
            raise InvalidSetError("sparse set must have at least one anchor")
        if anchors[0] < 1 or any(b <= a for a, b in zip(anchors, anchors[1:])):
            raise InvalidSetError("anchors must be strictly increasing positive integers")
        object.__setattr__(self, "anchors", anchors)

    def iter_elements(self):
        return iter(self.anchors)

    def count_leq(self, x):
        return bisect_right(self.anchors, x)

    def spec_string(self):
        if self.source is None:
            raise InvalidSetError("sparse set has no source file; save anchors first")
        return f"sparse:@{self.source}"


ALL_PARTS = AllFrom(1)
NAT_MULTS = WithZero(AllFrom(1))


# ---------------------------------------------------------------------------
# Operations (free-function form of the methods above)

def count_leq(spec: IntegerSetSpec, x: Threshold) -> int:
    return spec.count_leq(x)


def elements_upto(spec: IntegerSetSpec, bound: int) -> list[int]:
    return spec.elements_upto(bound)


def min_positive(spec: IntegerSetSpec) -> int:
    return spec.min_positive()


def validate_kind(spec: IntegerSetSpec, kind: str) -> IntegerSetSpec:
    """Enforce the part-set / multiplicity-set rules; returns spec unchanged."""
    if kind == "parts":
        if spec.contains_zero():
            raise InvalidSetError("part set must not contain 0")
    elif kind == "mults":
        if not spec.contains_zero():
            raise InvalidSetError("multiplicity set must contain 0")
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return spec


# ---------------------------------------------------------------------------
# Parser

def _parse_int(text: str, pos: int) -> tuple[int, int]:
    end = pos
    while end < len(text) and text[end].isdigit():
        end += 1
    if end == pos:
        raise SpecSyntaxError("expected an integer", pos)
    return int(text[pos:end]), end


def _parse_int_list(text: str, pos: int) -> tuple[list[int], int]:
    values, pos = [], pos
    v, pos = _parse_int(text, pos)
    values.append(v)
    while pos < len(text) and text[pos] == ",":
        v, pos = _parse_int(text, pos + 1)
        values.append(v)
    return values, pos


def _load_anchor_file(path: str) -> SparseConstructed:
    try:
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise InvalidSetError(f"cannot read anchors file {path}: {exc}") from exc
    try:
        anchors = [int(ln) for ln in lines]
    except ValueError as exc:
        raise InvalidSetError(f"anchors file {path} must hold one integer per line") from exc
    return SparseConstructed(tuple(anchors), source=path)


def _parse(text: str, pos: int) -> tuple[IntegerSetSpec, int]:
    rest = text[pos:]
    if rest.startswith("zero|"):
        inner, end = _parse(text, pos + 5)
        return WithZero(inner), end
    if rest.startswith("all-from:"):
        start, end = _parse_int(text, pos + 9)
        return AllFrom(start), end
    if rest.startswith("all"):
        return AllFrom(1), pos + 3
    if rest.startswith("nat"):
        return WithZero(AllFrom(1)), pos + 3
    if rest.startswith("finite:"):
        values, end = _parse_int_list(text, pos + 7)
        return Finite(tuple(values)), end
    if rest.startswith("ap:"):
        first, end = _parse_int(text, pos + 3)
        if end >= len(text) or text[end] != ",":
            raise SpecSyntaxError("ap: needs 'first,step'", end)
        step, end = _parse_int(text, end + 1)
        return ArithmeticProgression(first, step), end
    if rest.startswith("pow:"):
        base, end = _parse_int(text, pos + 4)
        return Powers(base), end
    if rest.startswith("dexp:"):
        base, end = _parse_int(text, pos + 5)
        return DoublyExponential(base), end
    if rest.startswith("sparse:@"):
        path = text[pos + 8 :]
        if not path:
            raise SpecSyntaxError("sparse:@ needs a file path", pos + 8)
        return _load_anchor_file(path), len(text)
    raise SpecSyntaxError(f"unrecognized set form {rest!r}", pos)


def parse_set_spec(text: str, kind: str) -> IntegerSetSpec:
    """Parse a spec string and validate it for the given kind (parts|mults)."""
    spec, end = _parse(text, 0)
    if end != len(text):
        raise SpecSyntaxError(f"trailing input {text[end:]!r}", end)
    return validate_kind(spec, kind)


# ---------------------------------------------------------------------------
# Sparse-set construction

def step_function_value(table: list[tuple[int, int]], x: int) -> int | None:
    """Value of the tabulated step function at x, or None left of the table."""
    val = None
    for threshold, value in table:
        if threshold > x:
            break
        val = value
    return val


def validate_step_table(table: list[tuple[int, int]]) -> None:
    if not table:
        raise InvalidSetError("epsilon table is empty")
    thresholds = [t for t, _ in table]
    values = [v for _, v in table]
    if any(b <= a for a, b in zip(thresholds, thresholds[1:])):
        raise InvalidSetError("epsilon thresholds must be strictly increasing")
    if thresholds[0] < 1:
        raise InvalidSetError("epsilon thresholds must be positive")
    if any(b < a for a, b in zip(values, values[1:])):
        raise InvalidSetError("epsilon values must be nondecreasing")


def construct_sparse_set(
    epsilon: list[tuple[int, int]],
    count: int | None = None,
    source: str | None = None,
) -> SparseConstructed:
    """Build anchors a_1 < a_2 < ... with a_i the least x > a_{i-1} where
    epsilon(x) >= i + 1.

    For the resulting set S the counting function A(n) = |S inter [1, n]|
    then satisfies A(n) + 1 <= epsilon(n) for every n >= a_1 inside the
    tabulated range, because epsilon is nondecreasing.  With count given,
    raises when the table cannot supply that many anchors.
    """
    validate_step_table(epsilon)
    anchors: list[int] = []
    prev = 0
    while True:
        target = len(anchors) + 2
        hit = None
        for threshold, value in epsilon:
            if value >= target:
                hit = threshold
                break
        if hit is None:
            break
        anchors.append(max(prev + 1, hit))
        prev = anchors[-1]
        if count is not None and len(anchors) == count:
            break
    if count is not None and len(anchors) < count:
        raise InvalidSetError(
            f"epsilon table supports only {len(anchors)} anchors, {count} requested"
        )
    if not anchors:
        raise InvalidSetError("epsilon table never reaches 2; no anchors exist")
    return SparseConstructed(tuple(anchors), source=source)
