"""Subsets of a finite AG-groupoid: products, ideal predicates, closures,
exhaustive family enumeration and primality-type predicates.

Subsets are bitmasks over the universe.  Ideals and bi-ideals are nonempty by
convention; predicates reject the empty set with ``EmptySubsetError``.
"""

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    CapExceededError,
    EmptySubsetError,
    HypothesisNotMet,
    KindMismatchError,
    UniverseMismatchError,
    subset_cap,
)
from .results import holds, not_applicable, violated, witness
from .table import left_identity


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class ElemSet:
    n: int
    mask: int

    @classmethod
    def of(cls, n, items=()):
        mask = 0
        for x in items:
            if not 0 <= x < n:
                raise ValueError(f"element {x} outside universe of order {n}")
            mask |= 1 << x
        return cls(n, mask)

    @classmethod
    def full(cls, n):
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n):
        return cls(n, 0)

    @property
    def members(self):
        return tuple(_bits(self.mask))

    def __iter__(self):
        return _bits(self.mask)

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, x):
        return 0 <= x < self.n and bool(self.mask >> x & 1)

    def _other(self, other):
        if not isinstance(other, ElemSet):
            return NotImplemented
        if other.n != self.n:
            raise UniverseMismatchError(f"universes of order {self.n} and {other.n}")
        return other

    def __and__(self, other):
        other = self._other(other)
        return ElemSet(self.n, self.mask & other.mask)

    def __or__(self, other):
        other = self._other(other)
        return ElemSet(self.n, self.mask | other.mask)

    def __le__(self, other):
        other = self._other(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return self._other(other) <= self

    def __gt__(self, other):
        return self._other(other) < self

    def is_full(self):
        return self.mask == (1 << self.n) - 1

    def sort_key(self):
        return self.members

    def to_list(self):
        return list(self.members)

    def __str__(self):
        return "{" + ",".join(str(x) for x in self.members) + "}"

    __repr__ = __str__


def sorted_sets(sets):
    return sorted(sets, key=ElemSet.sort_key)


class IdealKind(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"
    SUBGROUPOID = "sub"
    BI = "bi"


class _Multiplier:
    """Set products via per-element 8-bit chunk lookup tables."""

    def __init__(self, t):
        n = t.order
        self.n = n
        self.full = (1 << n) - 1
        nchunks = (n + 7) // 8
        self.chunks = []
        for a in range(n):
            row = t.table[a]
            tabs = []
            for c in range(nchunks):
                tab = [0] * 256
                width = min(8, n - 8 * c)
                for sub in range(1, 1 << width):
                    low = sub & -sub
                    j = low.bit_length() - 1
                    tab[sub] = tab[sub ^ low] | (1 << row[8 * c + j])
                tabs.append(tab)
            self.chunks.append(tabs)
        self.row_all = [self.image(a, self.full) for a in range(n)]
        self.col = [0] * n
        for a in range(n):
            for b in range(n):
                self.col[b] |= 1 << t.table[a][b]

    def image(self, a, mask):
        out = 0
        for c, tab in enumerate(self.chunks[a]):
            out |= tab[(mask >> (8 * c)) & 255]
        return out

    def product(self, A, B):
        out = 0
        for a in _bits(A):
            out |= self.image(a, B)
        return out

    def left_of(self, X):
        """S*X"""
        out = 0
        for x in _bits(X):
            out |= self.col[x]
        return out

    def right_of(self, X):
        """X*S"""
        out = 0
        for x in _bits(X):
            out |= self.row_all[x]
        return out


@lru_cache(maxsize=4096)
def _mult(t):
    return _Multiplier(t)


def _check_universe(t, *sets):
    for X in sets:
        if X.n != t.order:
            raise UniverseMismatchError(f"subset over order {X.n}, table has order {t.order}")


def _nonempty(X):
    if not X.mask:
        raise EmptySubsetError("ideals are nonempty; got the empty set")


def set_product(t, A, B):
    _check_universe(t, A, B)
    return ElemSet(t.order, _mult(t).product(A.mask, B.mask))


def full_set(t):
    return ElemSet.full(t.order)


# -- ideal predicates ----------------------------------------------------------

def _mask_in_kind(m, X, kind):
    if kind is IdealKind.LEFT:
        return m.left_of(X) & ~X == 0
    if kind is IdealKind.RIGHT:
        return m.right_of(X) & ~X == 0
    if kind is IdealKind.TWO_SIDED:
        return (m.left_of(X) | m.right_of(X)) & ~X == 0
    if kind is IdealKind.SUBGROUPOID:
        return m.product(X, X) & ~X == 0
    if kind is IdealKind.BI:
        return m.product(X, X) & ~X == 0 and m.product(m.right_of(X), X) & ~X == 0
    raise ValueError(kind)


def _first_escape(t, X, factor_lists):
    """First factor tuple (lex order) whose left-bracketed product leaves X."""
    for factors in itertools.product(*factor_lists):
        z = factors[0]
        for f in factors[1:]:
            z = t.table[z][f]
        if z not in X:
            return {"factors": list(factors), "product": z}
    return None


def kind_violation(t, X, kind):
    """None if X is of the given kind, else an offending product and its factors.

    For bi-ideals the three-factor witness reads ``(x*s)*y``.
    """
    t.require_validated()
    _check_universe(t, X)
    _nonempty(X)
    S = range(t.order)
    xs = X.members
    clauses = {
        IdealKind.LEFT: [("SX", (S, xs))],
        IdealKind.RIGHT: [("XS", (xs, S))],
        IdealKind.TWO_SIDED: [("SX", (S, xs)), ("XS", (xs, S))],
        IdealKind.SUBGROUPOID: [("XX", (xs, xs))],
        IdealKind.BI: [("XX", (xs, xs)), ("(XS)X", (xs, S, xs))],
    }[kind]
    for label, lists in clauses:
        w = _first_escape(t, X, lists)
        if w is not None:
            w["clause"] = label
            return w
    return None


def is_ideal_kind(t, X, kind):
    t.require_validated()
    _check_universe(t, X)
    _nonempty(X)
    return _mask_in_kind(_mult(t), X.mask, kind)


def enumerate_subsets_of_kind(t, kind, cap=None):
    """All nonempty subsets of the given kind, ascending by bitmask."""
    t.require_validated()
    cap = subset_cap() if cap is None else cap
    if t.order > cap:
        raise CapExceededError(f"subset enumeration capped at order {cap}, got {t.order}")
    return _enumerate(t, kind)


@lru_cache(maxsize=4096)
def _enumerate(t, kind):
    m = _mult(t)
    n = t.order
    size = 1 << n
    if kind in (IdealKind.LEFT, IdealKind.RIGHT, IdealKind.TWO_SIDED):
        # incremental images: img[X] = img[X - lowbit] | img[lowbit]
        left = [0] * size
        right = [0] * size
        for X in range(1, size):
            low = X & -X
            j = low.bit_length() - 1
            left[X] = left[X ^ low] | m.col[j]
            right[X] = right[X ^ low] | m.row_all[j]
        if kind is IdealKind.LEFT:
            keep = (X for X in range(1, size) if left[X] & ~X == 0)
        elif kind is IdealKind.RIGHT:
            keep = (X for X in range(1, size) if right[X] & ~X == 0)
        else:
            keep = (X for X in range(1, size) if (left[X] | right[X]) & ~X == 0)
    else:
        keep = (X for X in range(1, size) if _mask_in_kind(m, X, kind))
    return tuple(ElemSet(n, X) for X in keep)


def all_nonempty_subsets(t, cap=None):
    cap = subset_cap() if cap is None else cap
    if t.order > cap:
        raise CapExceededError(f"subset enumeration capped at order {cap}, got {t.order}")
    return (ElemSet(t.order, X) for X in range(1, 1 << t.order))


def generated_closure(t, X, kind, cap=None):
    """Least superset of X of the given kind, by fixpoint iteration."""
    t.require_validated()
    _check_universe(t, X)
    _nonempty(X)
    cap = subset_cap() if cap is None else cap
    if t.order > cap:
        raise CapExceededError(f"closure capped at order {cap}, got {t.order}")
    m = _mult(t)
    Y = X.mask
    while True:
        if kind is IdealKind.LEFT:
            grow = m.left_of(Y)
        elif kind is IdealKind.RIGHT:
            grow = m.right_of(Y)
        elif kind is IdealKind.TWO_SIDED:
            grow = m.left_of(Y) | m.right_of(Y)
        elif kind is IdealKind.SUBGROUPOID:
            grow = m.product(Y, Y)
        else:
            grow = m.product(Y, Y) | m.product(m.right_of(Y), Y)
        if grow & ~Y == 0:
            return ElemSet(t.order, Y)
        Y |= grow


# -- principal ideals ----------------------------------------------------------

@dataclass(frozen=True)
class PrincipalIdeals:
    generator: int
    left: ElemSet
    right: ElemSet
    two_sided: ElemSet


def _require_left_identity(t):
    e = left_identity(t)
    if e is None:
        raise HypothesisNotMet("no left identity")
    return e


def principal_ideals(t, a):
    """S*a, a*S and (S*a)*S."""
    t.require_validated()
    _require_left_identity(t)
    m = _mult(t)
    left = m.left_of(1 << a)
    return PrincipalIdeals(
        a,
        ElemSet(t.order, left),
        ElemSet(t.order, m.right_of(1 << a)),
        ElemSet(t.order, m.right_of(left)),
    )


def _L(t, a):
    return ElemSet(t.order, _mult(t).left_of(1 << a))


def _R(t, a):
    return ElemSet(t.order, _mult(t).right_of(1 << a))


def _sq(t, a):
    return t.table[a][a]


def _pt(t, a):
    return ElemSet.of(t.order, [a])


P = set_product
PRINCIPAL_IDENTITIES = {
    "L(ab)=L(a)L(b)": (2, lambda t, a, b: (_L(t, t.table[a][b]), P(t, _L(t, a), _L(t, b)))),
    "R(ab)=R(a)R(b)": (2, lambda t, a, b: (_R(t, t.table[a][b]), P(t, _R(t, a), _R(t, b)))),
    "R(ab)=L(b)L(a)": (2, lambda t, a, b: (_R(t, t.table[a][b]), P(t, _L(t, b), _L(t, a)))),
    "R(a)R(b)=L(b)L(a)": (2, lambda t, a, b: (P(t, _R(t, a), _R(t, b)), P(t, _L(t, b), _L(t, a)))),
    "L(a)L(b)=R(b)R(a)": (2, lambda t, a, b: (P(t, _L(t, a), _L(t, b)), P(t, _R(t, b), _R(t, a)))),
    "L(a)R(b)=L(b)R(a)": (2, lambda t, a, b: (P(t, _L(t, a), _R(t, b)), P(t, _L(t, b), _R(t, a)))),
    "L(a^2)=L(a)^2": (1, lambda t, a, b: (_L(t, _sq(t, a)), P(t, _L(t, a), _L(t, a)))),
    "R(a^2)=R(a)^2": (1, lambda t, a, b: (_R(t, _sq(t, a)), P(t, _R(t, a), _R(t, a)))),
    "L(a^2)=R(a^2)": (1, lambda t, a, b: (_L(t, _sq(t, a)), _R(t, _sq(t, a)))),
    "L(a)=R(a) if aa=a": (1, lambda t, a, b: (_L(t, a), _R(t, a)) if _sq(t, a) == a else None),
    "R(a)a^2=a^2L(a)": (1, lambda t, a, b: (P(t, _R(t, a), _pt(t, _sq(t, a))),
                                          P(t, _pt(t, _sq(t, a)), _L(t, a)))),
}


def principal_identity_observation(t, identity, a, b=0):
    sides = PRINCIPAL_IDENTITIES[identity][1](t, a, b)
    if sides is None:
        return {"ok": True, "lhs": None, "rhs": None}
    lhs, rhs = sides
    return {"ok": lhs == rhs, "lhs": lhs.to_list(), "rhs": rhs.to_list()}


def check_principal_identities(t):
    """One ClaimResult per identity in the principal-ideal battery."""
    t.require_validated()
    if left_identity(t) is None:
        return [not_applicable("C19", "no left identity") for _ in PRINCIPAL_IDENTITIES]
    n = t.order
    results = []
    for name, (arity, _) in PRINCIPAL_IDENTITIES.items():
        pairs = ((a, b) for a in range(n) for b in (range(n) if arity == 2 else (0,)))
        result = holds("C19", note=name)
        for a, b in pairs:
            obs = principal_identity_observation(t, name, a, b)
            if not obs["ok"]:
                args = {"identity": name, "a": a, "b": b}
                result = violated("C19", witness("principal_identity", args, obs), note=name)
                break
        results.append(result)
    return results


# -- idempotence, primality ----------------------------------------------------

def is_idempotent_subset(t, X):
    _check_universe(t, X)
    _nonempty(X)
    return _mult(t).product(X.mask, X.mask) == X.mask


def _family(t, kind, cap=None):
    return enumerate_subsets_of_kind(t, kind, cap)


def _require_member(t, P, kind):
    _check_universe(t, P)
    _nonempty(P)
    if not is_ideal_kind(t, P, kind):
        raise KindMismatchError(f"{P} is not a {kind.value} ideal")


def prime_violation(t, P, kind=IdealKind.BI, cap=None):
    """First pair (A, B) of the family with A*B <= P but neither A <= P nor B <= P."""
    _require_member(t, P, kind)
    m = _mult(t)
    fam = _family(t, kind, cap)
    for A in fam:
        if A.mask & ~P.mask == 0:
            continue
        for B in fam:
            if B.mask & ~P.mask == 0:
                continue
            if m.product(A.mask, B.mask) & ~P.mask == 0:
                return (A, B)
    return None


def is_prime_member(t, P, kind=IdealKind.BI, cap=None):
    return prime_violation(t, P, kind, cap) is None


def semiprime_violation(t, P, kind=IdealKind.BI, cap=None):
    """First C in the family with C*C <= P but C not <= P."""
    _require_member(t, P, kind)
    m = _mult(t)
    for C in _family(t, kind, cap):
        if C.mask & ~P.mask and m.product(C.mask, C.mask) & ~P.mask == 0:
            return C
    return None


def is_semiprime_member(t, P, kind=IdealKind.BI, cap=None):
    return semiprime_violation(t, P, kind, cap) is None


def strong_irreducibility_violation(t, P, kind=IdealKind.BI, cap=None):
    _require_member(t, P, kind)
    fam = _family(t, kind, cap)
    for A in fam:
        if A.mask & ~P.mask == 0:
            continue
        for B in fam:
            if B.mask & ~P.mask == 0:
                continue
            if A.mask & B.mask & ~P.mask == 0:
                return (A, B)
    return None


def is_strongly_irreducible(t, P, kind=IdealKind.BI, cap=None):
    return strong_irreducibility_violation(t, P, kind, cap) is None


def quasi_prime_violation(t, P, cap=None):
    return prime_violation(t, P, IdealKind.LEFT, cap)


def is_quasi_prime(t, P, cap=None):
    return quasi_prime_violation(t, P, cap) is None


def theorem4_violation(t, P):
    """First (a, b) with (S*a)*b <= P while a, b are both outside P."""
    t.require_validated()
    _require_left_identity(t)
    _check_universe(t, P)
    _nonempty(P)
    if not is_ideal_kind(t, P, IdealKind.LEFT):
        raise KindMismatchError(f"{P} is not a left ideal")
    m = _mult(t)
    n = t.order
    for a in range(n):
        if a in P:
            continue
        Sa = m.left_of(1 << a)
        for b in range(n):
            if b in P:
                continue
            if m.product(Sa, 1 << b) & ~P.mask == 0:
                return (a, b)
    return None


def theorem4_criterion(t, P):
    return theorem4_violation(t, P) is None


def H_set(t, a):
    """{x : (x*a)*x = a}"""
    return ElemSet.of(t.order, [x for x in range(t.order) if t.table[t.table[x][a]][x] == a])


def H_set_fixed(t, a):
    """{x : (x*a)*x = x}; the variant appearing in the proof of the H(a) lemma."""
    return ElemSet.of(t.order, [x for x in range(t.order) if t.table[t.table[x][a]][x] == x])


def solutions_to_identity(t, a, e=None):
    """{x : (x*a)*x = e} for the smallest left identity e unless given."""
    if e is None:
        e = _require_left_identity(t)
    return ElemSet.of(t.order, [x for x in range(t.order) if t.table[t.table[x][a]][x] == e])


# -- family-level properties ---------------------------------------------------

@dataclass(frozen=True)
class FamilyProperties:
    all_idempotent: bool
    totally_ordered: bool
    intersection_closed: bool
    semilattice_under_product: bool


def semilattice_violation(t, family):
    """None if the product is a semilattice operation on ``family``.

    Checks closure, idempotence, commutativity and associativity in that order.
    """
    m = _mult(t)
    masks = [X.mask for X in family]
    members = set(masks)
    n = t.order
    prod = {}
    for A in masks:
        for B in masks:
            AB = m.product(A, B)
            if AB not in members:
                return {"law": "closure", "sets": [ElemSet(n, A).to_list(), ElemSet(n, B).to_list()],
                        "product": ElemSet(n, AB).to_list()}
            prod[A, B] = AB
    for A in masks:
        if prod[A, A] != A:
            return {"law": "idempotent", "sets": [ElemSet(n, A).to_list()]}
    for A in masks:
        for B in masks:
            if prod[A, B] != prod[B, A]:
                return {"law": "commutative", "sets": [ElemSet(n, A).to_list(), ElemSet(n, B).to_list()]}
    for A in masks:
        for B in masks:
            for C in masks:
                if prod[prod[A, B], C] != prod[A, prod[B, C]]:
                    return {"law": "associative",
                            "sets": [ElemSet(n, X).to_list() for X in (A, B, C)]}
    return None


def family_properties(t, kind, cap=None):
    fam = _family(t, kind, cap)
    m = _mult(t)
    masks = [X.mask for X in fam]
    members = set(masks)
    idem = [X for X in fam if m.product(X.mask, X.mask) == X.mask]
    return FamilyProperties(
        all_idempotent=len(idem) == len(fam),
        totally_ordered=all(A & ~B == 0 or B & ~A == 0 for A in masks for B in masks),
        intersection_closed=all(A & B == 0 or A & B in members for A in masks for B in masks),
        semilattice_under_product=semilattice_violation(t, idem) is None,
    )
