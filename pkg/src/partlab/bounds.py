"""Evaluators for the growth bounds on p(n; S, M), and rigorous comparison
of exact counts against them.

Two value families, kept strictly apart:

* polynomial / factorial bounds evaluate as exact rationals (Fraction),
  so inequality checks are plain integer arithmetic;
* transcendental bounds evaluate in mpmath, and rigorous verdicts go
  through interval arithmetic: a bound's enclosure is widened outward, so
  "satisfied" can only be claimed when it would survive any amount of
  extra precision.  When an enclosure is too wide to decide, precision is
  escalated.

Directions are from the point of view of the exact count: an "upper"
bound claims exact <= value, a "lower" bound claims exact >= value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

import mpmath
from mpmath import iv, mp

from .arith import FiniteCoprimeSet, gcd_of_set
from .counting import CountTable
from .setspec import IntegerSetSpec, min_positive

DEFAULT_DIGITS = 50
_MAX_DIGITS = 3200


class HighPrecisionReal(NamedTuple):
    """An mpmath value tagged with the decimal precision it was computed at."""

    value: mpmath.mpf
    digits: int

    def __str__(self) -> str:
        return mpmath.nstr(self.value, self.digits)


class PrecisionError(ArithmeticError):
    """Comparison still ambiguous at the maximum working precision."""


def _raw_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    if man == 0 and exp != 0:
        raise PrecisionError("interval endpoint is not finite")
    f = Fraction(int(man)) * Fraction(2) ** exp
    return -f if sign else f


def interval_endpoints(builder: Callable[[], "iv.mpf"], digits: int) -> tuple[Fraction, Fraction]:
    """Evaluate an interval expression at the given precision; endpoints as
    exact binary rationals."""
    old = iv.prec
    iv.dps = digits
    try:
        val = builder()
        # read endpoints before restoring: lazy constants (iv.pi alone, say)
        # materialize only on access, at whatever precision is then current
        lo, hi = val._mpi_
    finally:
        iv.prec = old
    return _raw_to_fraction(lo), _raw_to_fraction(hi)


def _certify(
    exact: int | Fraction,
    builder: Callable[[], "iv.mpf"],
    want_leq: bool,
    digits: int,
) -> bool:
    d = digits
    while d <= _MAX_DIGITS:
        lo, hi = interval_endpoints(builder, d)
        if want_leq:
            if exact <= lo:
                return True
            if exact > hi:
                return False
        else:
            if exact >= hi:
                return True
            if exact < lo:
                return False
        d *= 2
    raise PrecisionError(f"cannot separate {exact} from bound at {_MAX_DIGITS} digits")


def certified_leq(exact, builder, digits: int = DEFAULT_DIGITS) -> bool:
    """Rigorous verdict of exact <= bound; never flips with more precision."""
    return _certify(exact, builder, True, digits)


def certified_geq(exact, builder, digits: int = DEFAULT_DIGITS) -> bool:
    """Rigorous verdict of exact >= bound."""
    return _certify(exact, builder, False, digits)


def _hp(expr: Callable[[], mpmath.mpf], digits: int) -> HighPrecisionReal:
    with mp.workdps(digits):
        return HighPrecisionReal(expr(), digits)


# ---------------------------------------------------------------------------
# Exact rational bounds

def product_upper_bound(n: int, parts: IntegerSetSpec, mults: IntegerSetSpec) -> int:
    """prod over parts a of M(n/a), truncated where the factor becomes 1.

    A factor is 1 exactly when only multiplicity 0 fits, i.e. when
    a * min_positive(M) > n, so the product runs over a <= n // min_positive(M).
    """
    mp_min = min_positive(mults)
    out = 1
    for a in parts.elements_upto(n // mp_min if n >= mp_min else 0):
        out *= mults.count_leq(Fraction(n, a))
    return out


class ExistenceWitness(NamedTuple):
    r: int
    witness: int
    threshold: Fraction


def check_existence_lower_bound(
    n: int, parts: IntegerSetSpec, mults: IntegerSetSpec, table: CountTable | None = None
) -> ExistenceWitness:
    """Smallest r <= n^2 with p(r) >= prod M(n/a_i) / (n^2 + 1).

    Such r always exists: the multiplicity assignments bounded by n/a_i
    produce prod M(n/a_i) partitions of integers <= n^2, so some value
    <= n^2 is hit at least the average number of times.  A missing witness
    is therefore a counting bug, reported as LookupError.
    """
    from .counting import count_table  # local import to avoid cycle at module load

    if n < 1:
        raise ValueError("n must be positive")
    threshold = Fraction(product_upper_bound(n, parts, mults), n * n + 1)
    if table is None or table.upto < n * n:
        table = count_table(n * n, parts, mults)
    for r in range(n * n + 1):
        if table.values[r] >= threshold:
            return ExistenceWitness(r, table.values[r], threshold)
    raise LookupError(f"no witness r <= {n * n}; counting is inconsistent")


def monotone_lower_bound(n: int, parts: IntegerSetSpec, mults: IntegerSetSpec) -> Fraction:
    """(1/(n+1)) prod over parts a of |{mu in M : mu * a <= sqrt(n)}|.

    Exact: mu * a <= sqrt(n) iff mu * a <= isqrt(n) for integers.
    Meaningful as a lower bound only when p(.; S, M) is nondecreasing.
    """
    if n < 1:
        raise ValueError("n must be positive")
    root = math.isqrt(n)
    mp_min = min_positive(mults)
    prod = 1
    for a in parts.elements_upto(root // mp_min if root >= mp_min else 0):
        prod *= mults.count_leq(Fraction(root, a))
    return Fraction(prod, n + 1)


def schur_asymptotic(n: int, cset: FiniteCoprimeSet) -> Fraction:
    """n^(k-1) / ((k-1)! a_1 ... a_k), the polynomial growth law for finite
    coprime part sets."""
    k = cset.k
    return Fraction(n ** (k - 1), math.factorial(k - 1) * cset.product())


def padberg_lower(n: int, cset: FiniteCoprimeSet) -> Fraction:
    """(n+1)^k / (k! a_1 ... a_k), a lower bound for the cumulative count r'(n)."""
    k = cset.k
    return Fraction((n + 1) ** k, math.factorial(k) * cset.product())


def schur_style_point_lower(n: int, cset: FiniteCoprimeSet) -> Fraction:
    """(n+1)^(k-1) / (k! a_1 ... a_k); valid at record indices of p(.; A)."""
    k = cset.k
    return Fraction((n + 1) ** (k - 1), math.factorial(k) * cset.product())


def j_of_n(n: int, parts: IntegerSetSpec) -> int:
    """Least j >= 1 with j * a_j >= n, where a_j is the j-th smallest part."""
    if n < 1:
        raise ValueError("n must be positive")
    for j, a in enumerate(parts.iter_elements(), start=1):
        if j * a >= n:
            return j
    raise ValueError("finite part set exhausted before j * a_j reached n")


def refined_lower_bound(n: int, parts: IntegerSetSpec) -> Fraction:
    """(n+1)^(j-1) / (j! a_1 ... a_j) with j = j_of_n(n), the optimized
    prefix-extension lower bound; requires gcd(parts) = 1."""
    g = gcd_of_set(parts)
    if g != 1:
        raise ValueError(f"part set has gcd {g}; bound needs a coprime set")
    j = j_of_n(n, parts)
    prefix = []
    for a in parts.iter_elements():
        prefix.append(a)
        if len(prefix) == j:
            break
    return Fraction((n + 1) ** (j - 1), math.factorial(j) * math.prod(prefix))


def harmonic_number(n: int) -> Fraction:
    """H_n as an exact rational."""
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


# ---------------------------------------------------------------------------
# Transcendental bounds: plain evaluation + interval builders

def hrr_leading_term(n: int, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """(1/(4 n sqrt(3))) exp(pi sqrt(2n/3)), the classical leading term."""
    if n < 1:
        raise ValueError("n must be positive")
    return _hp(
        lambda: mpmath.exp(mpmath.pi * mpmath.sqrt(mpmath.mpf(2 * n) / 3))
        / (4 * n * mpmath.sqrt(3)),
        digits,
    )


def hrr_leading_term_iv(n: int):
    return iv.exp(iv.pi * iv.sqrt(iv.mpf(2 * n) / 3)) / (4 * n * iv.sqrt(3))


def debruijn_leading_term(n: int, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """(1/(2 log 2)) (log(n / log n))^2: leading log-asymptotic of binary
    partitions of 2n.  Needs n >= 3 so log log n > 0."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return _hp(
        lambda: (mpmath.log(n / mpmath.log(n))) ** 2 / (2 * mpmath.log(2)),
        digits,
    )


def debruijn_leading_term_iv(n: int):
    return (iv.log(iv.mpf(n) / iv.log(iv.mpf(n)))) ** 2 / (2 * iv.log(iv.mpf(2)))


def debruijn_upper_bound(n: int, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """log(2n+1) * log2(2n), an upper bound for log of the binary-partition
    count of 2n."""
    if n < 1:
        raise ValueError("n must be positive")
    return _hp(
        lambda: mpmath.log(2 * n + 1) * mpmath.log(2 * n) / mpmath.log(2), digits
    )


def debruijn_count_upper_iv(n: int):
    """exp of the de Bruijn log bound: direct upper bound for the count."""
    return iv.exp(iv.log(iv.mpf(2 * n + 1)) * iv.log(iv.mpf(2 * n)) / iv.log(iv.mpf(2)))


def harmonic_chain_bound(
    n: int, parts: IntegerSetSpec, digits: int = DEFAULT_DIGITS
) -> HighPrecisionReal:
    """n^A(n) * e^(H_n) with A(n) the part-counting function; upper bound for
    p(n; parts, all multiplicities)."""
    if n < 1:
        raise ValueError("n must be positive")
    a_n = parts.count_leq(n)
    h = harmonic_number(n)
    return _hp(
        lambda: mpmath.mpf(n) ** a_n
        * mpmath.exp(mpmath.mpf(h.numerator) / h.denominator),
        digits,
    )


def exp_harmonic_iv(h: Fraction):
    return iv.exp(iv.mpf(h.numerator) / iv.mpf(h.denominator))


def classical_sqrt_lower(n: int, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """e^sqrt(n) / n; holds for the classical p(n) once n is large enough."""
    if n < 1:
        raise ValueError("n must be positive")
    return _hp(lambda: mpmath.exp(mpmath.sqrt(n)) / n, digits)


def classical_sqrt_lower_iv(n: int):
    return iv.exp(iv.sqrt(iv.mpf(n))) / n


def classical_refined_comparison(n: int, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """e^(2 sqrt(n)) / (2 pi n^2): the refined lower bound specialized to
    parts = all positive integers."""
    if n < 1:
        raise ValueError("n must be positive")
    return _hp(
        lambda: mpmath.exp(2 * mpmath.sqrt(n)) / (2 * mpmath.pi * n * n), digits
    )


def classical_refined_iv(n: int):
    return iv.exp(2 * iv.sqrt(iv.mpf(n))) / (2 * iv.pi * n * n)


def slow_growth_closed_form(n: int, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """(lg n) (lg lg n)^(lg lg n) with base-2 logs; needs n >= 16."""
    if n < 16:
        raise ValueError("n must be at least 16")
    def expr():
        lg_n = mpmath.log(n, 2)
        lg_lg = mpmath.log(lg_n, 2)
        return lg_n * mpmath.power(lg_lg, lg_lg)
    return _hp(expr, digits)


def slow_growth_closed_form_iv(n: int):
    ln2 = iv.log(iv.mpf(2))
    lg_n = iv.log(iv.mpf(n)) / ln2
    lg_lg = iv.log(lg_n) / ln2
    return lg_n * iv.exp(lg_lg * iv.log(lg_lg))


# ---------------------------------------------------------------------------
# Per-n bound report

@dataclass(frozen=True)
class BoundEntry:
    bound_id: str
    direction: str  # "upper" | "lower" | "asymptotic"
    applicable: bool
    value: object | None = None  # int | Fraction | HighPrecisionReal
    satisfied: bool | None = None  # None for asymptotic reference values


@dataclass(frozen=True)
class BoundReport:
    n: int
    exact: int
    entries: tuple[BoundEntry, ...]


def _finite_coprime(parts: IntegerSetSpec) -> FiniteCoprimeSet | None:
    from .setspec import Finite

    if isinstance(parts, Finite) and math.gcd(*parts.elements) == 1:
        return FiniteCoprimeSet(parts.elements)
    return None


def _is_all_parts(parts: IntegerSetSpec) -> bool:
    from .setspec import AllFrom

    return parts == AllFrom(1)


def _is_binary_parts(parts: IntegerSetSpec) -> bool:
    from .setspec import Powers

    return parts == Powers(2)


class _Bound(NamedTuple):
    direction: str
    applies: Callable  # (n, parts, mults, table) -> bool
    value: Callable    # (n, parts, mults, table, digits) -> value
    holds: Callable | None  # rigorous verdict; None for asymptotic entries


def _mk_registry() -> dict[str, _Bound]:
    from .counting import has_all_multiplicities

    def nat(mults):
        return has_all_multiplicities(mults)

    reg: dict[str, _Bound] = {}

    reg["product_upper"] = _Bound(
        "upper",
        lambda n, p, m, t: True,
        lambda n, p, m, t, d: product_upper_bound(n, p, m),
        lambda n, p, m, t, d, exact: exact <= product_upper_bound(n, p, m),
    )
    reg["monotone_lower"] = _Bound(
        "lower",
        lambda n, p, m, t: n >= 1
        and all(b >= a for a, b in zip(t.values[: n + 1], t.values[1 : n + 1])),
        lambda n, p, m, t, d: monotone_lower_bound(n, p, m),
        lambda n, p, m, t, d, exact: exact >= monotone_lower_bound(n, p, m),
    )
    reg["schur"] = _Bound(
        "asymptotic",
        lambda n, p, m, t: nat(m) and _finite_coprime(p) is not None,
        lambda n, p, m, t, d: schur_asymptotic(n, _finite_coprime(p)),
        None,
    )
    reg["hrr"] = _Bound(
        "asymptotic",
        lambda n, p, m, t: n >= 1 and nat(m) and _is_all_parts(p),
        lambda n, p, m, t, d: hrr_leading_term(n, d),
        None,
    )
    reg["debruijn_upper"] = _Bound(
        "upper",
        lambda n, p, m, t: n >= 2 and n % 2 == 0 and nat(m) and _is_binary_parts(p),
        lambda n, p, m, t, d: _hp(
            lambda: mpmath.exp(debruijn_upper_bound(n // 2, d).value), d
        ),
        lambda n, p, m, t, d, exact: certified_leq(
            exact, lambda: debruijn_count_upper_iv(n // 2), d
        ),
    )
    reg["harmonic_chain"] = _Bound(
        "upper",
        lambda n, p, m, t: n >= 1 and nat(m),
        lambda n, p, m, t, d: harmonic_chain_bound(n, p, d),
        lambda n, p, m, t, d, exact: certified_leq(
            Fraction(exact, n ** p.count_leq(n)),
            lambda: exp_harmonic_iv(harmonic_number(n)),
            d,
        ),
    )
    reg["sqrt_lower"] = _Bound(
        "lower",
        lambda n, p, m, t: n >= 1 and nat(m) and _is_all_parts(p),
        lambda n, p, m, t, d: classical_sqrt_lower(n, d),
        lambda n, p, m, t, d, exact: certified_geq(
            exact, lambda: classical_sqrt_lower_iv(n), d
        ),
    )
    reg["classical_refined"] = _Bound(
        "lower",
        lambda n, p, m, t: n >= 1 and nat(m) and _is_all_parts(p),
        lambda n, p, m, t, d: classical_refined_comparison(n, d),
        lambda n, p, m, t, d, exact: certified_geq(
            exact, lambda: classical_refined_iv(n), d
        ),
    )
    reg["padberg"] = _Bound(
        "lower",  # compares the cumulative count, not p(n) itself
        lambda n, p, m, t: nat(m) and _finite_coprime(p) is not None,
        lambda n, p, m, t, d: padberg_lower(n, _finite_coprime(p)),
        lambda n, p, m, t, d, exact: sum(t.values[: n + 1])
        >= padberg_lower(n, _finite_coprime(p)),
    )
    reg["eq10"] = _Bound(
        "lower",
        lambda n, p, m, t: nat(m)
        and _finite_coprime(p) is not None
        and t.values[n] == max(t.values[: n + 1]),
        lambda n, p, m, t, d: schur_style_point_lower(n, _finite_coprime(p)),
        lambda n, p, m, t, d, exact: exact
        >= schur_style_point_lower(n, _finite_coprime(p)),
    )
    reg["refined"] = _Bound(
        "lower",
        lambda n, p, m, t: n >= 1 and nat(m) and _can_refine(n, p),
        lambda n, p, m, t, d: refined_lower_bound(n, p),
        lambda n, p, m, t, d, exact: exact >= refined_lower_bound(n, p),
    )
    reg["slow_growth"] = _Bound(
        "asymptotic",
        lambda n, p, m, t: n >= 16,
        lambda n, p, m, t, d: slow_growth_closed_form(n, d),
        None,
    )
    return reg


def _can_refine(n: int, parts: IntegerSetSpec) -> bool:
    if gcd_of_set(parts) != 1:
        return False
    try:
        j_of_n(n, parts)
    except ValueError:  # finite set exhausted before j * a_j reached n
        return False
    return True


BOUND_REGISTRY = _mk_registry()
BOUND_IDS = tuple(sorted(BOUND_REGISTRY))


def bound_report(
    table: CountTable,
    n: int,
    bound_ids: list[str] | None = None,
    digits: int = DEFAULT_DIGITS,
) -> BoundReport:
    """Evaluate the requested bounds at one n against the exact count."""
    ids = list(bound_ids) if bound_ids is not None else list(BOUND_IDS)
    exact = table.values[n]
    entries = []
    for bid in ids:
        try:
            b = BOUND_REGISTRY[bid]
        except KeyError:
            raise ValueError(f"unknown bound id {bid!r}") from None
        if not b.applies(n, table.parts, table.mults, table):
            entries.append(BoundEntry(bid, b.direction, False))
            continue
        value = b.value(n, table.parts, table.mults, table, digits)
        sat = None
        if b.holds is not None:
            sat = b.holds(n, table.parts, table.mults, table, digits, exact)
        entries.append(BoundEntry(bid, b.direction, True, value, sat))
    return BoundReport(n, exact, tuple(entries))
