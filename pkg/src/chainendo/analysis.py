"""Structure checks over arbitrary sets of chain endomorphisms.

Everything here is exhaustive and deterministic: sets are normalised to
lexicographic order, pair scans run in that order, and the first violation
found is the witness reported.  The closure scan is vectorised with numpy
because it is the one hot loop (full simplices reach a few thousand
elements, hence millions of pairs); all other checks are plain loops over
sets that stay small.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Mapping

import numpy as np

from .core import ChainEndo, SizeMismatch


class NotClosed(ValueError):
    """The operation needs a multiplicatively closed set."""


class NotSubset(ValueError):
    """The candidate ideal is not contained in the ambient set."""


def canonical(elements: Iterable[ChainEndo]) -> tuple[ChainEndo, ...]:
    """Sorted, de-duplicated tuple; rejects mixed chain sizes."""
    if isinstance(elements, Subset):
        return elements.elements
    result = tuple(sorted(set(elements)))
    if not result:
        raise ValueError("empty set of endomorphisms")
    sizes = {e.n for e in result}
    if len(sizes) > 1:
        raise SizeMismatch(f"mixed chain sizes {sorted(sizes)}")
    return result


@dataclass(frozen=True)
class Subset:
    """A normalised set of endomorphisms of one chain."""

    n: int
    elements: tuple[ChainEndo, ...]

    @classmethod
    def of(cls, elements: Iterable[ChainEndo]) -> "Subset":
        normalised = canonical(elements)
        return cls(normalised[0].n, normalised)

    def __contains__(self, item: object) -> bool:
        return item in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class ClosureWitness:
    """First pair whose combination escapes the set."""

    left: ChainEndo
    right: ChainEndo
    op: str  # "+" or "*"
    result: ChainEndo


def _value_matrix(els: tuple[ChainEndo, ...]) -> np.ndarray:
    return np.array([e.values for e in els], dtype=np.int64)


def _pack(matrix: np.ndarray, n: int) -> np.ndarray:
    # Big-endian base-n packing, so code order matches lexicographic order.
    weights = n ** np.arange(matrix.shape[-1] - 1, -1, -1, dtype=np.int64)
    return matrix @ weights

def _closure_scan(els, ops):
    """First (i, j, op) whose result escapes, scanning pairs in lex order.

    Within one pair "+" is tried before "*".  Returns None when closed.
    """
    n = els[0].n
    V = _value_matrix(els)
    codes = _pack(V, n)
    assert (np.diff(codes) > 0).all()  # canonical() sorted and de-duplicated
    for i in range(len(els)):
        best = None
        for op in ops:
            if op == "+":
                R = np.maximum(V, V[i])
            else:
                R = V[:, V[i]]  # row j becomes els[j] after els[i]
            out = _pack(R, n)
            pos = np.searchsorted(codes, out)
            pos[pos == len(els)] = 0
            bad = codes[pos] != out
            if bad.any():
                j = int(bad.argmax())
                if best is None or j < best[0]:
                    best = (j, op, tuple(int(v) for v in R[j]))
        if best is not None:
            j, op, values = best
            return i, j, op, ChainEndo._wrap(n, values)
    return None


def is_closed(
    elements: Iterable[ChainEndo], op: Literal["+", "*"]
) -> tuple[bool, ClosureWitness | None]:
    """Closure under one operation, with the first escaping pair."""
    if op not in ("+", "*"):
        raise ValueError(f"op must be '+' or '*', got {op!r}")
    els = canonical(elements)
    hit = _closure_scan(els, (op,))
    if hit is None:
        return True, None
    i, j, op_hit, result = hit
    return False, ClosureWitness(els[i], els[j], op_hit, result)


def is_subsemiring(
    elements: Iterable[ChainEndo],
) -> tuple[bool, ClosureWitness | None]:
    """Closure under both + and *, with the first escaping pair."""
    els = canonical(elements)
    hit = _closure_scan(els, ("+", "*"))
    if hit is None:
        return True, None
    i, j, op_hit, result = hit
    return False, ClosureWitness(els[i], els[j], op_hit, result)


@dataclass(frozen=True)
class IdealWitness:
    kind: str  # "add", "left-absorb", "right-absorb"
    inner: ChainEndo
    outer: ChainEndo
    result: ChainEndo


def is_ideal(
    ideal: Iterable[ChainEndo], ambient: Iterable[ChainEndo]
) -> tuple[bool, IdealWitness | None]:
    """Additively closed and absorbing on both sides inside ambient."""
    inner = canonical(ideal)
    outer = canonical(ambient)
    inner_set = set(inner)
    if not inner_set <= set(outer):
        raise NotSubset("candidate ideal is not inside the ambient set")
    for x in inner:
        for y in inner:
            s = x + y
            if s not in inner_set:
                return False, IdealWitness("add", x, y, s)
    for x in inner:
        for r in outer:
            p = r * x
            if p not in inner_set:
                return False, IdealWitness("left-absorb", x, r, p)
            q = x * r
            if q not in inner_set:
                return False, IdealWitness("right-absorb", x, r, q)
    return True, None


@dataclass(frozen=True)
class TrivialityVerdict:
    """Whether every product collapses to one element iota.

    iota_is_min / iota_is_max refer to the additive (pointwise) order on the
    set itself.  A one-element set satisfies both; flavor then reads
    "upper".  flavor is "neither" when iota is an inner element or when the
    set is not trivial at all.
    """

    is_trivial: bool
    iota: ChainEndo | None
    iota_is_min: bool
    iota_is_max: bool

    @property
    def flavor(self) -> str:
        if not self.is_trivial:
            return "none"
        if self.iota_is_max:
            return "upper"
        if self.iota_is_min:
            return "lower"
        return "neither"


def triviality(elements: Iterable[ChainEndo]) -> TrivialityVerdict:
    """Detect one-product-value semirings; needs multiplicative closure."""
    els = canonical(elements)
    closed, witness = is_closed(els, "*")
    if not closed:
        raise NotClosed(f"not multiplicatively closed: {witness}")
    products = {x * y for x in els for y in els}
    if len(products) != 1:
        return TrivialityVerdict(False, None, False, False)
    iota = products.pop()
    is_min = all(iota.pointwise_le(x) for x in els)
    is_max = all(x.pointwise_le(iota) for x in els)
    return TrivialityVerdict(True, iota, is_min, is_max)


@dataclass(frozen=True)
class Identities:
    left: tuple[ChainEndo, ...]
    right: tuple[ChainEndo, ...]

    @property
    def two_sided(self) -> tuple[ChainEndo, ...]:
        right = set(self.right)
        return tuple(e for e in self.left if e in right)


def identities(elements: Iterable[ChainEndo]) -> Identities:
    """Left and right multiplicative identities of the set."""
    els = canonical(elements)
    left = tuple(e for e in els if all(e * x == x for x in els))
    right = tuple(e for e in els if all(x * e == x for x in els))
    return Identities(left, right)


def similar_pairs(
    elements: Iterable[ChainEndo], side: Literal["left", "right"]
) -> tuple[tuple[ChainEndo, ChainEndo], ...]:
    """Distinct pairs indistinguishable by one-sided multiplication.

    Left-similar: gamma * alpha == gamma * beta for every gamma in the set.
    Right-similar: alpha * gamma == beta * gamma for every gamma.  Pairs are
    returned in lexicographic order with alpha < beta.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    els = canonical(elements)
    pairs = []
    for i, alpha in enumerate(els):
        for beta in els[i + 1 :]:
            if side == "left":
                same = all(g * alpha == g * beta for g in els)
            else:
                same = all(alpha * g == beta * g for g in els)
            if same:
                pairs.append((alpha, beta))
    return tuple(pairs)


@dataclass(frozen=True)
class ElementClass:
    """Multiplicative behaviour of one element under iterated powers."""

    kind: Literal["idempotent", "nilpotent", "root_of_idempotent"]
    idempotent: ChainEndo
    exponent: int  # least power equal to the idempotent
    target: int | None  # constant value when nilpotent


def classify_element(
    alpha: ChainEndo, members: Iterable[ChainEndo] | None = None
) -> ElementClass:
    """Idempotent, nilpotent onto a constant, or a root of an idempotent."""
    if members is not None and alpha not in set(members):
        raise ValueError(f"{alpha} is not a member of the given set")
    limit = alpha.eventual_idempotent()
    exponent = 1
    power = alpha
    while power != limit:
        power = power * alpha
        exponent += 1
    if exponent == 1:
        return ElementClass("idempotent", limit, 1, None)
    if limit.is_constant():
        return ElementClass("nilpotent", limit, exponent, limit.values[0])
    return ElementClass("root_of_idempotent", limit, exponent, None)


def iso_check(
    first: Iterable[ChainEndo], second: Iterable[ChainEndo]
) -> tuple[bool, Mapping[ChainEndo, ChainEndo] | None]:
    """Search for a semiring isomorphism between two closed sets.

    Both sets must be closed under + and *.  Candidate bijections must
    preserve both operations; the search prunes by order-theoretic and
    multiplicative invariants (down-set and up-set sizes, idempotency, the
    square's down-set size) and, when both sets are chains, collapses to the
    unique monotone bijection.  Returns the first isomorphism found in
    lexicographic assignment order, or (False, None).
    """
    S = canonical(first)
    T = canonical(second)
    for name, els in (("first", S), ("second", T)):
        closed, witness = is_subsemiring(els)
        if not closed:
            raise NotClosed(f"{name} set is not a subsemiring: {witness}")
    if len(S) != len(T):
        return False, None

    def profile(els):
        size = len(els)
        index = {e: i for i, e in enumerate(els)}
        leq = [
            [els[i].pointwise_le(els[j]) for j in range(size)]
            for i in range(size)
        ]
        down = [sum(row[i] for row in leq) for i in range(size)]
        up = [sum(leq[i]) for i in range(size)]
        sig = [
            (
                down[i],
                up[i],
                els[i].is_idempotent(),
                down[index[els[i] * els[i]]],
            )
            for i in range(size)
        ]
        return index, sig

    index_s, sig_s = profile(S)
    index_t, sig_t = profile(T)
    if sorted(sig_s) != sorted(sig_t):
        return False, None

    size = len(S)

    def verify(assign):
        for i in range(size):
            for j in range(size):
                if assign[index_s[S[i] + S[j]]] != assign[i] + assign[j]:
                    return False
                if assign[index_s[S[i] * S[j]]] != assign[i] * assign[j]:
                    return False
        return True

    down_sizes = sorted(d for d, _, _, _ in sig_s)
    both_chains = down_sizes == list(range(1, size + 1))
    if both_chains:
        # Total additive order on both sides: the only candidate is the
        # order-matching bijection.
        assign = list(T)
        if verify(assign):
            return True, dict(zip(S, assign))
        return False, None

    candidates = [
        [t for t in T if sig_t[index_t[t]] == sig_s[i]] for i in range(size)
    ]

    assign: list[ChainEndo | None] = [None] * size
    used: set[ChainEndo] = set()

    def backtrack(i: int) -> bool:
        if i == size:
            return verify(assign)
        for t in candidates[i]:
            if t in used:
                continue
            assign[i] = t
            used.add(t)
            ok = True
            for j in range(i):
                s_sum = S[i] + S[j]
                k = index_s[s_sum]
                if k <= i and assign[k] != assign[i] + assign[j]:
                    ok = False
                    break
                s_mul = S[i] * S[j]
                k = index_s[s_mul]
                if k <= i and assign[k] != assign[i] * assign[j]:
                    ok = False
                    break
                s_mul = S[j] * S[i]
                k = index_s[s_mul]
                if k <= i and assign[k] != assign[j] * assign[i]:
                    ok = False
                    break
            if ok and backtrack(i + 1):
                return True
            used.discard(t)
            assign[i] = None
        return False

    if backtrack(0):
        return True, dict(zip(S, assign))
    return False, None
