"""Closed-form counts and the audit that checks them against enumeration.

Every count in the library comes from one registry entry pairing a formula
with an independent enumeration oracle; the audit walks the admissible
parameter tuples up to a size bound and compares the two, exactly, in
arbitrary-precision integers.  One entry (ri_order_variant) is a
deliberately wrong variant kept to document that it disagrees with
enumeration everywhere; its audit passes only when the disagreement shows
up as expected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .core import all_endomorphisms, constant


class DomainError(ValueError):
    """Parameters outside the formula's admissible range."""


def catalan(k: int) -> int:
    if k < 0:
        raise DomainError(f"catalan index must be >= 0, got {k}")
    return math.comb(2 * k, k) // (k + 1)


def nilpotent_count(n: int, a: int) -> int:
    """Maps with some power constantly a: catalan(a) * catalan(n - 1 - a)."""
    if n < 2 or not 0 <= a <= n - 1:
        raise DomainError(f"need n >= 2 and 0 <= a < n, got n={n}, a={a}")
    return catalan(a) * catalan(n - 1 - a)


def idempotent_count(n: int, fixed: tuple[int, ...]) -> int:
    """Idempotents with the given fixed-point set: product of the gaps."""
    fixed = tuple(sorted(fixed))
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    if not fixed or len(set(fixed)) != len(fixed):
        raise DomainError(f"fixed-point set must be nonempty, got {fixed}")
    if fixed[0] < 0 or fixed[-1] >= n:
        raise DomainError(f"fixed points {fixed} outside the chain")
    if len(fixed) > n - 1:
        raise DomainError("formula is stated for at most n - 1 fixed points")
    return math.prod(y - x for x, y in zip(fixed, fixed[1:]))


def simplex_order(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    return math.comb(n + k - 1, k - 1)


def triangle_order(n: int) -> int:
    if n < 3:
        raise DomainError(f"triangles need n >= 3, got {n}")
    return math.comb(n + 2, 2)


def _check_string(n: int, a: int, b: int) -> None:
    if n < 2 or not 0 <= a < b <= n - 1:
        raise DomainError(f"need 0 <= a < b <= n - 1, got {(n, a, b)}")


def string_nil_low_order(n: int, a: int, b: int) -> int:
    """Elements squaring down to const a: the top n - b of the chain."""
    _check_string(n, a, b)
    return n - b


def string_idem_order(n: int, a: int, b: int) -> int:
    _check_string(n, a, b)
    return b - a


def string_nil_high_order(n: int, a: int, b: int) -> int:
    """Elements squaring up to const b: the bottom a + 1 of the chain."""
    _check_string(n, a, b)
    return a + 1


def _check_triangle(n: int, a: int, b: int, c: int) -> None:
    if n < 3 or not 0 <= a < b < c <= n - 1:
        raise DomainError(f"need 0 <= a < b < c <= n - 1, got {(n, a, b, c)}")


def ri_order(n: int, a: int, b: int, c: int) -> int:
    """Right identities of the triangle: (b - a) * (c - b)."""
    _check_triangle(n, a, b, c)
    return (b - a) * (c - b)


def ri_order_variant(n: int, a: int, b: int, c: int) -> int:
    """Plausible-looking variant (b - a) * (c - a); always wrong since a < b."""
    _check_triangle(n, a, b, c)
    return (b - a) * (c - a)


def it_order(n: int, a: int, b: int, c: int) -> int:
    """Maps in the triangle fixing both a and c."""
    _check_triangle(n, a, b, c)
    return (c - a) * (c - a + 1) // 2


def it_rest_order(n: int, a: int, b: int, c: int) -> int:
    """Fixing a and c but not a right identity."""
    _check_triangle(n, a, b, c)
    return ((c - b) ** 2 + (b - a) ** 2 + (c - a)) // 2


def l_tri_order(n: int, a: int, b: int, c: int) -> int:
    _check_triangle(n, a, b, c)
    return (c - b) * (c - b + 1) // 2


def r_tri_order(n: int, a: int, b: int, c: int) -> int:
    _check_triangle(n, a, b, c)
    return (b - a) * (b - a + 1) // 2


def nil_a_order(n: int, a: int, b: int, c: int) -> int:
    """Triangle maps with some power constantly a."""
    _check_triangle(n, a, b, c)
    return (n - c) * (n + c - 2 * b + 1) // 2


def nil_b_order(n: int, a: int, b: int, c: int) -> int:
    _check_triangle(n, a, b, c)
    return (a + 1) * (n - c)


def nil_c_order(n: int, a: int, b: int, c: int) -> int:
    _check_triangle(n, a, b, c)
    return (a + 1) * (2 * b - a + 2) // 2


def l_par_order(n: int, a: int, b: int, c: int) -> int:
    _check_triangle(n, a, b, c)
    return (b - a) * (n - c)


def r_par_order(n: int, a: int, b: int, c: int) -> int:
    _check_triangle(n, a, b, c)
    return (a + 1) * (c - b)


# --- enumeration oracles -------------------------------------------------
#
# Each oracle counts by brute force from definitions that do not reuse the
# formula under audit: full enumeration of the chain's monotone maps, power
# iteration for nilpotency, literal fixed-point filters, and the index-range
# constructions for the triangle regions.  Imports are local to keep this
# module importable from the triangle module.


def _oracle_nilpotent(n, a):
    target = constant(n, a)
    count = 0
    for e in all_endomorphisms(n):
        power = e
        for _ in range(n):
            if power == target:
                count += 1
                break
            power = power * e
    return count


def _oracle_idempotent(n, fixed):
    fixed = tuple(sorted(fixed))
    count = 0
    for e in all_endomorphisms(n):
        if e * e == e and e.fixed_points() == fixed:
            count += 1
    return count


def _oracle_simplex(n, k):
    # Counts for the lowest k vertices; the order depends only on k, which
    # the per-subset claim in the registry checks separately.
    vertices = set(range(k))
    return sum(
        1 for e in all_endomorphisms(n) if set(e.image()) <= vertices
    )


def _oracle_triangle(n):
    from . import triangle

    spec = triangle.TriangleSpec(n, 0, 1, 2)
    return len(triangle.elements(spec))


def _classify_string(n, a, b):
    # Right identities before nilpotency: the two constants are idempotent
    # in every string but belong to the blocks that collapse onto them.
    from . import strings

    spec = strings.StringSpec(n, a, b)
    els = strings.elements(spec)
    rids = {e for e in els if all(x * e == x for x in els)}
    low = high = idem = 0
    for e in els:
        if e in rids:
            idem += 1
        elif e.is_nilpotent_to(a):
            low += 1
        elif e.is_nilpotent_to(b):
            high += 1
        else:
            raise AssertionError(f"unclassifiable string element {e}")
    return low, idem, high


def _oracle_string_nil_low(n, a, b):
    return _classify_string(n, a, b)[0]


def _oracle_string_idem(n, a, b):
    return _classify_string(n, a, b)[1]


def _oracle_string_nil_high(n, a, b):
    return _classify_string(n, a, b)[2]


def _triangle_members(n, a, b, c):
    from . import triangle

    return triangle.elements(triangle.TriangleSpec(n, a, b, c))


def _oracle_ri(n, a, b, c):
    return sum(
        1
        for e in _triangle_members(n, a, b, c)
        if e.values[a] == a and e.values[b] == b and e.values[c] == c
    )


def _oracle_it(n, a, b, c):
    return sum(
        1
        for e in _triangle_members(n, a, b, c)
        if e.values[a] == a and e.values[c] == c
    )


def _oracle_it_rest(n, a, b, c):
    return _oracle_it(n, a, b, c) - _oracle_ri(n, a, b, c)


def _oracle_l_tri(n, a, b, c):
    # Index-range construction: at least b + 1 copies of a and at least
    # n - c copies of c.
    count = 0
    for e in _triangle_members(n, a, b, c):
        k = e.values.count(a)
        i = e.values.count(c)
        if k >= b + 1 and i >= n - c:
            count += 1
    return count


def _oracle_r_tri(n, a, b, c):
    count = 0
    for e in _triangle_members(n, a, b, c):
        k = e.values.count(a)
        i = e.values.count(c)
        if k >= a + 1 and i >= n - b:
            count += 1
    return count


def _oracle_nil_to(value):
    def oracle(n, a, b, c):
        target = {"a": a, "b": b, "c": c}[value]
        return sum(
            1
            for e in _triangle_members(n, a, b, c)
            if e.is_nilpotent_to(target)
        )

    return oracle


def _oracle_l_par(n, a, b, c):
    # Left blocks of the basic layers at the a corner: a + 1 <= k <= b
    # copies of a, at most n - c - 1 copies of c.
    count = 0
    for e in _triangle_members(n, a, b, c):
        k = e.values.count(a)
        i = e.values.count(c)
        if a + 1 <= k <= b and i <= n - c - 1:
            count += 1
    return count


def _oracle_r_par(n, a, b, c):
    count = 0
    for e in _triangle_members(n, a, b, c):
        k = e.values.count(a)
        i = e.values.count(c)
        if k <= a and n - c <= i <= n - b - 1:
            count += 1
    return count


# --- admissible parameter domains ---------------------------------------


def _chain_domain(n_max):
    for n in range(2, n_max + 1):
        for a in range(n):
            yield (n, a)


def _fixed_set_domain(n_max):
    from itertools import combinations

    for n in range(3, n_max + 1):
        for size in range(1, n):
            for fixed in combinations(range(n), size):
                yield (n, fixed)


def _simplex_domain(n_max):
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            yield (n, k)


def _triangle_n_domain(n_max):
    for n in range(3, n_max + 1):
        yield (n,)


def _string_domain(n_max):
    for n in range(2, n_max + 1):
        for a in range(n - 1):
            for b in range(a + 1, n):
                yield (n, a, b)


def _triangle_domain(n_max):
    for n in range(3, n_max + 1):
        for a in range(n - 2):
            for b in range(a + 1, n - 1):
                for c in range(b + 1, n):
                    yield (n, a, b, c)


@dataclass(frozen=True)
class CountFormula:
    """One audited count: closed form, oracle, and admissible tuples."""

    id: str
    params: tuple[str, ...]
    evaluate: Callable[..., int]
    oracle: Callable[..., int]
    domain: Callable[[int], Iterator[tuple]]
    expect_equal: bool = True  # False marks a documented-wrong variant


FORMULAS: dict[str, CountFormula] = {
    f.id: f
    for f in (
        CountFormula(
            "nilpotent_count",
            ("n", "a"),
            nilpotent_count,
            _oracle_nilpotent,
            _chain_domain,
        ),
        CountFormula(
            "idempotent_count",
            ("n", "fixed"),
            idempotent_count,
            _oracle_idempotent,
            _fixed_set_domain,
        ),
        CountFormula(
            "simplex_order",
            ("n", "k"),
            simplex_order,
            _oracle_simplex,
            _simplex_domain,
        ),
        CountFormula(
            "triangle_order",
            ("n",),
            triangle_order,
            _oracle_triangle,
            _triangle_n_domain,
        ),
        CountFormula(
            "string_nil_low_order",
            ("n", "a", "b"),
            string_nil_low_order,
            _oracle_string_nil_low,
            _string_domain,
        ),
        CountFormula(
            "string_idem_order",
            ("n", "a", "b"),
            string_idem_order,
            _oracle_string_idem,
            _string_domain,
        ),
        CountFormula(
            "string_nil_high_order",
            ("n", "a", "b"),
            string_nil_high_order,
            _oracle_string_nil_high,
            _string_domain,
        ),
        CountFormula(
            "ri_order", ("n", "a", "b", "c"), ri_order, _oracle_ri, _triangle_domain
        ),
        CountFormula(
            "ri_order_variant",
            ("n", "a", "b", "c"),
            ri_order_variant,
            _oracle_ri,
            _triangle_domain,
            expect_equal=False,
        ),
        CountFormula(
            "it_order", ("n", "a", "b", "c"), it_order, _oracle_it, _triangle_domain
        ),
        CountFormula(
            "it_rest_order",
            ("n", "a", "b", "c"),
            it_rest_order,
            _oracle_it_rest,
            _triangle_domain,
        ),
        CountFormula(
            "l_tri_order",
            ("n", "a", "b", "c"),
            l_tri_order,
            _oracle_l_tri,
            _triangle_domain,
        ),
        CountFormula(
            "r_tri_order",
            ("n", "a", "b", "c"),
            r_tri_order,
            _oracle_r_tri,
            _triangle_domain,
        ),
        CountFormula(
            "nil_a_order",
            ("n", "a", "b", "c"),
            nil_a_order,
            _oracle_nil_to("a"),
            _triangle_domain,
        ),
        CountFormula(
            "nil_b_order",
            ("n", "a", "b", "c"),
            nil_b_order,
            _oracle_nil_to("b"),
            _triangle_domain,
        ),
        CountFormula(
            "nil_c_order",
            ("n", "a", "b", "c"),
            nil_c_order,
            _oracle_nil_to("c"),
            _triangle_domain,
        ),
        CountFormula(
            "l_par_order",
            ("n", "a", "b", "c"),
            l_par_order,
            _oracle_l_par,
            _triangle_domain,
        ),
        CountFormula(
            "r_par_order",
            ("n", "a", "b", "c"),
            r_par_order,
            _oracle_r_par,
            _triangle_domain,
        ),
    )
}


def evaluate(formula_id: str, params: tuple) -> int:
    """Closed-form value for one registry entry; DomainError outside."""
    if formula_id not in FORMULAS:
        raise KeyError(f"unknown formula {formula_id!r}")
    return FORMULAS[formula_id].evaluate(*params)


@dataclass(frozen=True)
class FormulaAudit:
    id: str
    checked: int
    ok: bool
    first_mismatch: tuple | None  # (params, formula value, enumerated)


@dataclass(frozen=True)
class AuditReport:
    n_max: int
    results: tuple[FormulaAudit, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


def audit(n_max: int) -> AuditReport:
    """Compare every formula with its oracle on all tuples up to n_max."""
    results = []
    for formula in FORMULAS.values():
        checked = 0
        mismatch = None
        expected_equal = formula.expect_equal
        ok = True
        for params in formula.domain(n_max):
            checked += 1
            value = formula.evaluate(*params)
            counted = formula.oracle(*params)
            if expected_equal and value != counted:
                ok = False
                mismatch = (params, value, counted)
                break
            if not expected_equal and value == counted:
                # The variant is documented to disagree everywhere.
                ok = False
                mismatch = (params, value, counted)
                break
        results.append(FormulaAudit(formula.id, checked, ok, mismatch))
    return AuditReport(n_max, tuple(results))
