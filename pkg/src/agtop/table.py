"""Cayley tables of finite magmas and element-level axiom checks.

Elements are the indices ``0..n-1``; ``table[a][b]`` is the product ``a*b``
with the row giving the left operand.
"""

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

import numpy as np

from .errors import AGTParseError, CANON_CAP, CapExceededError, NotLeftInvertiveError


class Law(enum.Enum):
    LEFT_INVERTIVE = "left-invertive"
    MEDIAL = "medial"
    PARAMEDIAL3 = "paramedial3"
    PERMUTATION_IDENTITY = "permutation-identity"
    ANTI_RECTANGULAR = "anti-rectangular"


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking one law on one table.

    ``holds`` is ``None`` when the law's precondition is not met; ``witness``
    is the lexicographically smallest failing tuple when ``holds`` is False.
    """

    law: Law
    holds: Optional[bool]
    witness: Optional[tuple] = None
    note: str = ""

    @property
    def applicable(self):
        return self.holds is not None


@dataclass(frozen=True, eq=True)
class AGTable:
    table: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.table)
        n = len(rows)
        if n == 0:
            raise ValueError("a table needs at least one element")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError(f"entry {x} in row {i} out of range [0,{n})")
        object.__setattr__(self, "table", rows)

    @classmethod
    def from_function(cls, n, op, name=""):
        return cls(tuple(tuple(op(a, b) % n for b in range(n)) for a in range(n)), name)

    @property
    def order(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    @cached_property
    def array(self):
        arr = np.array(self.table, dtype=np.intp)
        arr.setflags(write=False)
        return arr

    def flat(self):
        return tuple(x for row in self.table for x in row)

    @cached_property
    def is_left_invertive(self):
        return check_left_invertive(self).holds

    def require_validated(self):
        if not self.is_left_invertive:
            raise NotLeftInvertiveError(check_left_invertive(self).witness)
        return self

    def __str__(self):
        return emit_table(self).rstrip("\n")


# -- AGT text format ---------------------------------------------------------

def _significant_lines(text):
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("ascii")
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if line.startswith("#") or not line.strip():
            continue
        yield lineno, line


def parse_table(text, name=""):
    """Parse one AGT block. Entries are range-checked; Eq. axioms are not."""
    lines = list(_significant_lines(text))
    if not lines:
        raise AGTParseError("missing order header", 1)
    head_no, head = lines[0]
    try:
        n = int(head.strip())
    except ValueError:
        raise AGTParseError(f"malformed header {head.strip()!r}", head_no) from None
    if n <= 0:
        raise AGTParseError(f"order must be positive, got {n}", head_no)
    body = lines[1:]
    if len(body) < n:
        last = body[-1][0] if body else head_no
        raise AGTParseError(f"expected {n} rows, found {len(body)}", last)
    if len(body) > n:
        raise AGTParseError(f"expected {n} rows, found {len(body)}", body[n][0])
    rows = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != n:
            raise AGTParseError(f"expected {n} entries, found {len(parts)}", lineno)
        row = []
        for part in parts:
            try:
                x = int(part)
            except ValueError:
                raise AGTParseError(f"non-integer entry {part!r}", lineno) from None
            if not 0 <= x < n:
                raise AGTParseError(f"entry {x} out of range [0,{n})", lineno)
            row.append(x)
        rows.append(tuple(row))
    return AGTable(tuple(rows), name)


def parse_stream(text):
    """Parse concatenated AGT blocks separated by ``---`` lines."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("ascii")
    blocks, current = [], []
    for line in text.split("\n"):
        if line.rstrip("\r") == "---":
            blocks.append("\n".join(current))
            current = []
        else:
            current.append(line)
    blocks.append("\n".join(current))
    return [parse_table(b) for b in blocks if any(True for _ in _significant_lines(b))]


def emit_table(t):
    n = t.order
    out = [str(n)]
    out.extend(" ".join(str(x) for x in row) for row in t.table)
    return "\n".join(out) + "\n"


def emit_stream(tables):
    return "---\n".join(emit_table(t) for t in tables)


# -- laws --------------------------------------------------------------------

def _first_failure(mask):
    idx = np.argwhere(mask)
    if idx.size == 0:
        return None
    return tuple(int(i) for i in idx[0])


def _square_products(t):
    T = t.array
    # prod[a, b, c, d] = (a*b)*(c*d)
    return T[T[:, :, None, None], T[None, None, :, :]]


def check_left_invertive(t):
    T = t.array
    lhs = T[T]  # lhs[a, b, c] = (a*b)*c
    witness = _first_failure(lhs != lhs.transpose(2, 1, 0))
    return AxiomReport(Law.LEFT_INVERTIVE, witness is None, witness)


def check_medial(t):
    prod = _square_products(t)
    witness = _first_failure(prod != prod.transpose(0, 2, 1, 3))
    return AxiomReport(Law.MEDIAL, witness is None, witness)


def check_paramedial3(t):
    prod = _square_products(t)
    # (a*b)*(c*d) against (d*b)*(c*a)
    witness = _first_failure(prod != prod.transpose(3, 1, 2, 0))
    return AxiomReport(Law.PARAMEDIAL3, witness is None, witness)


def check_anti_rectangular(t):
    T = t.array
    n = t.order
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    witness = _first_failure(T[T[b, a], b] != a)
    return AxiomReport(Law.ANTI_RECTANGULAR, witness is None, witness)


def is_associative(t):
    T = t.array
    lhs = T[T]  # (a*b)*c
    rhs = T[:, T]  # rhs[a, b, c] = a*(b*c)
    return bool(np.array_equal(lhs, rhs))


def left_identities(t):
    from .subsets import ElemSet

    n = t.order
    ids = [e for e in range(n) if all(t.table[e][a] == a for a in range(n))]
    return ElemSet.of(n, ids)


def left_identity(t):
    """Smallest left identity, or None."""
    ids = left_identities(t)
    return min(ids) if ids else None


def find_zero(t):
    n = t.order
    zeros = [z for z in range(n)
             if all(t.table[z][s] == z and t.table[s][z] == z for s in range(n))]
    assert len(zeros) <= 1, f"two absorbing elements {zeros}"
    return zeros[0] if zeros else None


def power(t, a, k):
    """Left-iterated power: a^1 = a, a^(k+1) = a^k * a."""
    if k < 1:
        raise ValueError("power exponent must be >= 1")
    x = a
    for _ in range(k - 1):
        x = t.table[x][a]
    return x


def power_map(t, k):
    return np.array([power(t, a, k) for a in range(t.order)], dtype=np.intp)


def permute_axes(x, p):
    """Return y with y[i_0, .., i_3] = x[i_p(0), .., i_p(3)]."""
    inv = [0] * len(p)
    for k, pk in enumerate(p):
        inv[pk] = k
    return x.transpose(inv)


def _permutation_failures(values, exps_label, first):
    for perm in itertools.permutations(range(4)):
        w = _first_failure(values != permute_axes(values, perm))
        if w is not None:
            cand = w + (perm,) + exps_label
            if first is None or cand < first:
                first = cand
    return first


def check_permutation_identity(t, max_exp=2):
    """(x1^m x2^n)(x3^q x4^r) against every reordering of the x's.

    Exponents stay attached to positions.  Witness layout:
    ``(x1, x2, x3, x4, permutation, (m, n, q, r))``.
    """
    if max_exp < 2:
        raise ValueError("max_exp must be >= 2")
    if left_identity(t) is None:
        return AxiomReport(Law.PERMUTATION_IDENTITY, None, note="no left identity")
    T = t.array
    powers = {k: power_map(t, k) for k in range(2, max_exp + 1)}
    first = None
    for exps in itertools.product(range(2, max_exp + 1), repeat=4):
        m, n_, q, r = (powers[e] for e in exps)
        left = T[m[:, None], n_[None, :]]
        right = T[q[:, None], r[None, :]]
        values = T[left[:, :, None, None], right[None, None, :, :]]
        first = _permutation_failures(values, (exps,), first)
    return AxiomReport(Law.PERMUTATION_IDENTITY, first is None, first)


def check_power_corollary(t, max_exp=3):
    """((x1 x2)(x3 x4))^k against every reordering, for 2 <= k <= max_exp.

    Witness layout: ``(x1, x2, x3, x4, permutation, k)``.
    """
    if left_identity(t) is None:
        return AxiomReport(Law.PERMUTATION_IDENTITY, None, note="no left identity")
    prod = _square_products(t)
    first = None
    for k in range(2, max_exp + 1):
        values = power_map(t, k)[prod]
        first = _permutation_failures(values, (k,), first)
    return AxiomReport(Law.PERMUTATION_IDENTITY, first is None, first,
                       note="k-th power corollary")


# -- relabeling --------------------------------------------------------------

def relabel(t, perm):
    """Apply the bijection a -> perm[a]: result[perm[a]][perm[b]] = perm[a*b]."""
    n = t.order
    perm = np.asarray(perm, dtype=np.intp)
    inv = np.empty(n, dtype=np.intp)
    inv[perm] = np.arange(n)
    new = perm[t.array[np.ix_(inv, inv)]]
    return AGTable(tuple(map(tuple, new.tolist())), t.name)


def canonical_form(t):
    """Lexicographically least relabeling (row-major flattening)."""
    n = t.order
    if n > CANON_CAP:
        raise CapExceededError(f"canonical form is capped at order {CANON_CAP}, got {n}")
    rows = t.table
    cells = [(x, y) for x in range(n) for y in range(n)]
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for a, pa in enumerate(perm):
            inv[pa] = a
        flat = tuple(perm[rows[inv[x]][inv[y]]] for x, y in cells)
        if best is None or flat < best:
            best = flat
    return AGTable(tuple(best[i * n:(i + 1) * n] for i in range(n)), t.name)


def is_isomorphic(t, u):
    return t.order == u.order and canonical_form(t) == canonical_form(u)
