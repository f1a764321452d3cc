"""Exhaustive backtracking search for left-invertive Cayley tables."""

from dataclasses import dataclass
from typing import Optional

from .errors import CapExceededError, search_cap
from .table import (
    AGTable,
    canonical_form,
    check_anti_rectangular,
    find_zero,
    is_associative,
    left_identity,
)


@dataclass(frozen=True)
class SearchSpec:
    order: int
    require_left_identity: bool = False
    require_zero: bool = False
    require_anti_rectangular: bool = False
    up_to_isomorphism: bool = False
    limit: Optional[int] = None

    def __post_init__(self):
        cap = search_cap()
        if not 1 <= self.order <= cap:
            raise CapExceededError(f"table search supports orders 1..{cap}, got {self.order}")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be >= 1")


def _left_invertive_tables(n):
    """Yield every left-invertive table of order n in lexicographic order.

    Cells are filled row-major with values tried in ascending order.  After
    each assignment, every equation (x*y)*z = (z*y)*x whose cells have all
    become known through the new cell is checked.
    """
    t = [[-1] * n for _ in range(n)]
    cells = [(a, b) for a in range(n) for b in range(n)]
    # positions[v]: cells currently holding value v
    positions = [[] for _ in range(n)]

    def consistent(a, b, v):
        # new cell as inner product: (a*b)*z = (z*b)*a
        row_v = t[v]
        for z in range(n):
            lhs = row_v[z]
            if lhs < 0:
                continue
            zb = t[z][b]
            if zb < 0:
                continue
            rhs = t[zb][a]
            if rhs >= 0 and rhs != lhs:
                return False
        # new cell as outer product: (x*y)*b with x*y = a, against (b*y)*x
        for x, y in positions[a]:
            by = t[b][y]
            if by < 0:
                continue
            rhs = t[by][x]
            if rhs >= 0 and rhs != v:
                return False
        return True

    def rec(k):
        if k == len(cells):
            yield AGTable(tuple(tuple(row) for row in t))
            return
        a, b = cells[k]
        for v in range(n):
            t[a][b] = v
            positions[v].append((a, b))
            if consistent(a, b, v):
                yield from rec(k + 1)
            positions[v].pop()
            t[a][b] = -1

    yield from rec(0)


def _accept(t, spec):
    if spec.require_left_identity and left_identity(t) is None:
        return False
    if spec.require_zero and find_zero(t) is None:
        return False
    if spec.require_anti_rectangular and not check_anti_rectangular(t).holds:
        return False
    if spec.up_to_isomorphism and canonical_form(t) != t:
        return False
    return True


def enumerate_ag_groupoids(spec):
    """Stream of tables satisfying the left invertive law and the filters.

    With ``up_to_isomorphism`` only canonical forms are emitted, so each
    isomorphism class appears exactly once.
    """
    emitted = 0
    for t in _left_invertive_tables(spec.order):
        if not _accept(t, spec):
            continue
        yield t
        emitted += 1
        if spec.limit is not None and emitted >= spec.limit:
            return


def corpus(max_order, up_to_isomorphism=True, min_order=1, **filters):
    """All AG-groupoids with orders in [min_order, max_order], in order."""
    for n in range(min_order, max_order + 1):
        yield from enumerate_ag_groupoids(
            SearchSpec(n, up_to_isomorphism=up_to_isomorphism, **filters))


def census_counts(spec):
    counts = dict.fromkeys(
        ("total", "withLeftIdentity", "withZero", "antiRectangular", "associative", "nonAssociative"), 0)
    for t in enumerate_ag_groupoids(spec):
        counts["total"] += 1
        counts["withLeftIdentity"] += left_identity(t) is not None
        counts["withZero"] += find_zero(t) is not None
        counts["antiRectangular"] += bool(check_anti_rectangular(t).holds)
        if is_associative(t):
            counts["associative"] += 1
        else:
            counts["nonAssociative"] += 1
    return counts
