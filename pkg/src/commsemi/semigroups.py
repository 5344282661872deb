"""Finite sets of (partial) transformations viewed as semigroups.

A :class:`SemigroupSet` is an immutable, canonically sorted collection of
same-degree elements of one kind (``"full"`` or ``"partial"``) plus two
cached tri-state flags (closed / commutative: True, False or unknown).
Everything else — closure, center, idempotents, the structural predicates,
restriction, and the invariant-complement machinery — lives in module-level
functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .transform import (
    AnyTransformation,
    PartialTransformation,
    Transformation,
    compose,
    compose_partial,
    is_idempotent as _is_idempotent_el,
    product as _product,
    restrict as _restrict,
)

FULL = "full"
PARTIAL = "partial"

# Enumeration guards; an explicit force=True overrides (T_8 has 16.7M elements).
MAX_FULL_DEGREE = 7
MAX_PARTIAL_DEGREE = 5
MAX_SYM_DEGREE = 8


class ClosureLimitExceeded(RuntimeError):
    """Raised when a closure grows past the caller-supplied size limit."""


class SemigroupSet:
    """Duplicate-free, canonically sorted set of transformations of one kind."""

    __slots__ = ("degree", "kind", "elements", "_set", "_closed", "_commutative")

    def __init__(
        self,
        elements: Iterable[AnyTransformation],
        *,
        closed: bool | None = None,
        commutative: bool | None = None,
    ):
        elems = tuple(sorted(set(elements)))
        if not elems:
            raise ValueError("a SemigroupSet needs at least one element")
        first = elems[0]
        if isinstance(first, Transformation):
            kind = FULL
            ok = all(isinstance(a, Transformation) for a in elems)
        elif isinstance(first, PartialTransformation):
            kind = PARTIAL
            ok = all(isinstance(a, PartialTransformation) for a in elems)
        else:
            raise TypeError(f"unsupported element type {type(first).__name__}")
        if not ok:
            raise TypeError("elements must all be of the same kind")
        degree = first.degree
        if any(a.degree != degree for a in elems):
            raise ValueError("elements must all share one degree")
        self.degree = degree
        self.kind = kind
        self.elements = elems
        self._set = frozenset(elems)
        self._closed = closed
        self._commutative = commutative

    # -- container protocol -------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[AnyTransformation]:
        return iter(self.elements)

    def __contains__(self, a: object) -> bool:
        return a in self._set

    def __getitem__(self, i: int) -> AnyTransformation:
        return self.elements[i]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SemigroupSet)
            and self.kind == other.kind
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.degree, self.elements))

    def __repr__(self) -> str:
        return f"<SemigroupSet kind={self.kind} degree={self.degree} size={len(self)}>"

    # -- products and cached predicates --------------------------------------

    def product(self, a: AnyTransformation, b: AnyTransformation) -> AnyTransformation:
        return compose(a, b) if self.kind == FULL else compose_partial(a, b)

    def is_closed(self) -> bool:
        if self._closed is None:
            prod = self.product
            members = self._set
            self._closed = all(
                prod(a, b) in members for a in self.elements for b in self.elements
            )
        return self._closed

    def is_commutative(self) -> bool:
        if self._commutative is None:
            elems = self.elements
            prod = self.product
            result = True
            for i, a in enumerate(elems):
                for b in elems[i + 1 :]:
                    if prod(a, b) != prod(b, a):
                        result = False
                        break
                if not result:
                    break
            self._commutative = result
        return self._commutative

    def identity_element(self) -> AnyTransformation:
        if self.kind == FULL:
            return Transformation.identity(self.degree)
        return PartialTransformation.identity(self.degree)


def is_commutative(S: SemigroupSet) -> bool:
    return S.is_commutative()


def closure(
    generators: Iterable[AnyTransformation] | SemigroupSet,
    *,
    limit: int | None = None,
) -> SemigroupSet:
    """Smallest product-closed superset of the generators.

    Processes each element against everything seen before it (both orders),
    so every pair is eventually covered.  ``limit`` aborts runaway growth
    with :class:`ClosureLimitExceeded`.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("closure needs at least one generator")
    prod: Callable = compose if isinstance(gens[0], Transformation) else compose_partial
    items = list(dict.fromkeys(gens))
    seen = set(items)
    i = 0
    while i < len(items):
        a = items[i]
        for b in items[: i + 1]:
            for p in (prod(a, b), prod(b, a)):
                if p not in seen:
                    seen.add(p)
                    items.append(p)
                    if limit is not None and len(items) > limit:
                        raise ClosureLimitExceeded(
                            f"closure exceeded the size limit of {limit}"
                        )
        i += 1
    return SemigroupSet(items, closed=True)


def _require_closed(S: SemigroupSet, op: str) -> None:
    if not S.is_closed():
        raise ValueError(f"{op} requires a product-closed set")


def center(S: SemigroupSet) -> SemigroupSet:
    """Z(S): the elements commuting with everything in S."""
    _require_closed(S, "center")
    prod = S.product
    central = [
        a for a in S if all(prod(a, b) == prod(b, a) for b in S)
    ]
    return SemigroupSet(central, commutative=True)


def idempotents(S: SemigroupSet) -> list[AnyTransformation]:
    return [a for a in S if _is_idempotent_el(a)]


def has_unique_idempotent(S: SemigroupSet) -> bool:
    return len(idempotents(S)) == 1


def unique_idempotent(S: SemigroupSet) -> AnyTransformation:
    es = idempotents(S)
    if len(es) != 1:
        raise ValueError(f"expected exactly one idempotent, found {len(es)}")
    return es[0]


def is_null(S: SemigroupSet) -> tuple[bool, AnyTransformation | None]:
    """True iff every product equals one fixed element z (the zero); returns z."""
    _require_closed(S, "is_null")
    prod = S.product
    z = prod(S[0], S[0])
    for a in S:
        for b in S:
            if prod(a, b) != z:
                return False, None
    return True, z


def _find_zero(S: SemigroupSet) -> AnyTransformation | None:
    prod = S.product
    for z in S:
        if all(prod(z, a) == z == prod(a, z) for a in S):
            return z
    return None


def is_nilpotent(S: SemigroupSet) -> bool:
    """True iff S has a zero z and S^k = {z} for some k ≤ |S|."""
    _require_closed(S, "is_nilpotent")
    z = _find_zero(S)
    if z is None:
        return False
    prod = S.product
    current = set(S.elements)
    target = {z}
    for _ in range(len(S)):
        if current == target:
            return True
        nxt = {prod(a, b) for a in S for b in current}
        if nxt == current:
            return current == target
        current = nxt
    return current == target


def is_group(S: SemigroupSet) -> bool:
    if not S.is_closed():
        return False
    prod = S.product
    e = None
    for cand in S:
        if all(prod(cand, a) == a == prod(a, cand) for a in S):
            e = cand
            break
    if e is None:
        return False
    for a in S:
        if not any(prod(a, b) == e == prod(b, a) for b in S):
            return False
    return True


def classify_small_abelian_group(S: SemigroupSet) -> str:
    """Tag in {C1, C2, C3, C4, C2xC2, OTHER}.

    Order-4 groups are split by maximal element order (4 → C4, else C2xC2).
    Anything that is not an abelian group of order ≤ 4 is OTHER.
    """
    if not is_group(S) or not S.is_commutative():
        return "OTHER"
    order = len(S)
    if order == 1:
        return "C1"
    if order == 2:
        return "C2"
    if order == 3:
        return "C3"
    if order == 4:
        prod = S.product
        e = next(c for c in S if all(prod(c, a) == a for a in S))
        max_order = 1
        for a in S:
            p, k = a, 1
            while p != e:
                p = prod(p, a)
                k += 1
            max_order = max(max_order, k)
        return "C4" if max_order == 4 else "C2xC2"
    return "OTHER"


def enumerate_full(n: int, force: bool = False) -> SemigroupSet:
    """All n^n total maps of degree n (the full transformation semigroup)."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n > MAX_FULL_DEGREE and not force:
        raise ValueError(
            f"degree {n} exceeds the full-enumeration cap {MAX_FULL_DEGREE}; pass force=True"
        )
    elems = []
    for img in itertools.product(range(n), repeat=n):
        t = Transformation.__new__(Transformation)
        t.img = img
        elems.append(t)
    return SemigroupSet(elems, closed=True, commutative=(n <= 1))


def enumerate_partial(n: int, force: bool = False) -> SemigroupSet:
    """All (n+1)^n partial maps of degree n."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n > MAX_PARTIAL_DEGREE and not force:
        raise ValueError(
            f"degree {n} exceeds the partial-enumeration cap {MAX_PARTIAL_DEGREE}; pass force=True"
        )
    elems = []
    for img in itertools.product(range(n + 1), repeat=n):
        p = PartialTransformation.__new__(PartialTransformation)
        p.img = img
        elems.append(p)
    return SemigroupSet(elems, closed=True, commutative=(n <= 1))


def enumerate_sym(n: int, force: bool = False) -> SemigroupSet:
    """The symmetric group on n points, as a closed SemigroupSet of full maps."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n > MAX_SYM_DEGREE and not force:
        raise ValueError(
            f"degree {n} exceeds the permutation-enumeration cap {MAX_SYM_DEGREE}; pass force=True"
        )
    elems = []
    for img in itertools.permutations(range(n)):
        t = Transformation.__new__(Transformation)
        t.img = img
        elems.append(t)
    return SemigroupSet(elems, closed=True, commutative=(n <= 2))


def restrict_set(S: SemigroupSet, points: Iterable[int]) -> SemigroupSet:
    """Pointwise restriction {α|_Y : α ∈ S}, re-indexed over sorted Y.

    Distinct elements may collide after restriction, so the result can be
    smaller than S.  Closure and commutativity survive restriction, and the
    cached flags are carried over when present.
    """
    if S.kind != FULL:
        raise ValueError("restrict_set is defined for full transformations")
    ys = sorted(set(points))
    restricted = [_restrict(a, ys) for a in S]
    return SemigroupSet(
        restricted,
        closed=True if S._closed else None,
        commutative=True if S._commutative else None,
    )


def image_union(S: SemigroupSet) -> tuple[int, ...]:
    """Union of the images of all elements (defined values only for partial maps)."""
    out: set[int] = set()
    for a in S:
        out.update(a.image())
    return tuple(sorted(out))


@dataclass(frozen=True)
class InvariantReport:
    """Minimum-size members of C(S, X) plus the cycle witness when |I| ≥ 2.

    C(S, X) collects the nonempty proper subsets I whose complement is
    invariant under every element of S.  The witness, when present, is an
    element whose restriction to ``minimal_I`` is a permutation made of
    equal-length cycles of length ≥ 2.
    """

    minimal_I: tuple[int, ...]
    all_minimal: tuple[tuple[int, ...], ...]
    witness_cycle_element: AnyTransformation | None


def _invariant_complements_by_subsets(S: SemigroupSet) -> list[frozenset[int]]:
    n = S.degree
    imgs = [a.img for a in S]
    invariant = []
    for bits in range(1, (1 << n) - 1):
        w = [x for x in range(n) if bits >> x & 1]
        ok = True
        wset = set(w)
        for img in imgs:
            for x in w:
                if img[x] not in wset:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            invariant.append(frozenset(w))
    return invariant


def _forward_orbit(imgs: Sequence[tuple[int, ...]], x: int) -> frozenset[int]:
    out = {x}
    frontier = [x]
    while frontier:
        y = frontier.pop()
        for img in imgs:
            v = img[y]
            if v not in out:
                out.add(v)
                frontier.append(v)
    return frozenset(out)


def _invariant_complements_by_orbits(S: SemigroupSet) -> list[frozenset[int]]:
    """Maximal proper invariant subsets via singleton forward closures.

    Every invariant set is a union of single-point orbit closures, so the
    largest invariant set avoiding a given point y is the union of the orbit
    closures that miss y.  Only those maximal candidates are returned; they
    suffice for minimum-size complements.
    """
    n = S.degree
    imgs = [a.img for a in S]
    orbits = [_forward_orbit(imgs, x) for x in range(n)]
    candidates = set()
    for y in range(n):
        w: set[int] = set()
        for orb in orbits:
            if y not in orb:
                w |= orb
        if w and len(w) < n:
            candidates.add(frozenset(w))
    return list(candidates)


def _equal_length_cycles(a: AnyTransformation, points: Sequence[int]) -> bool:
    pts = list(points)
    pset = set(pts)
    imgs = {x: a.img[x] for x in pts}
    if set(imgs.values()) != pset:
        return False  # not a permutation of the set
    lengths = set()
    visited: set[int] = set()
    for x in pts:
        if x in visited:
            continue
        length = 0
        y = x
        while y not in visited:
            visited.add(y)
            y = imgs[y]
            length += 1
        lengths.add(length)
    return len(lengths) == 1 and lengths.pop() >= 2


_SUBSET_ENUM_MAX_DEGREE = 20


def minimal_invariant_complement(S: SemigroupSet) -> InvariantReport:
    """All minimum-size I with (X∖I) invariant under every element of S.

    Requires S commutative and not contained in the permutations (otherwise
    the class may be empty and the contract rejects the input).  Degrees up
    to 20 use plain subset enumeration; beyond that, maximal invariant sets
    are assembled from singleton forward closures.
    """
    if S.kind != FULL:
        raise ValueError("minimal_invariant_complement is defined for full transformations")
    if not S.is_commutative():
        raise ValueError("minimal_invariant_complement requires a commutative set")
    if all(a.is_permutation() for a in S):
        raise ValueError(
            "every element is a permutation; invariant complements are not guaranteed"
        )
    n = S.degree
    if n <= _SUBSET_ENUM_MAX_DEGREE:
        invariant = _invariant_complements_by_subsets(S)
    else:
        invariant = _invariant_complements_by_orbits(S)
    if not invariant:
        raise ValueError("C(S, X) is empty")
    best = max(len(w) for w in invariant)
    ground = set(range(n))
    minimal = sorted(
        tuple(sorted(ground - w)) for w in invariant if len(w) == best
    )
    minimal_I = minimal[0]
    witness = None
    if len(minimal_I) >= 2:
        for a in S:
            if _equal_length_cycles(a, minimal_I):
                witness = a
                break
    return InvariantReport(minimal_I, tuple(minimal), witness)
