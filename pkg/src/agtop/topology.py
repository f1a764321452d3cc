"""Finite topologies on strongly irreducible bi-ideals and on prime ideals.

For a family of generating subsets G and a set of points (themselves
subsets), every B in G yields the open set ``O_B = {J : B not <= J}``.
"""

import itertools
import json
from dataclasses import dataclass

from .errors import HypothesisNotMet
from .results import holds, violated, witness
from .subsets import (
    ElemSet,
    IdealKind,
    enumerate_subsets_of_kind,
    generated_closure,
    is_prime_member,
    is_strongly_irreducible,
    sorted_sets,
)
from .table import find_zero

EXHAUSTIVE_FAMILY_LIMIT = 12

MODES = {
    "biIdeal": IdealKind.BI,
    "primeSpectrum": IdealKind.TWO_SIDED,
}


@dataclass(frozen=True)
class FiniteTopology:
    points: tuple  # ElemSet per point, sorted by member list
    opens: tuple  # frozenset of point indices per open, sorted
    labels: tuple  # per open: tuple of generating ElemSets

    def open_of(self, B):
        return open_set(self.points, B)

    def to_json(self):
        return {
            "points": [J.to_list() for J in self.points],
            "opens": [
                {"members": sorted(members), "labels": [B.to_list() for B in labels]}
                for members, labels in zip(self.opens, self.labels)
            ],
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def open_set(points, B):
    return frozenset(j for j, J in enumerate(points) if not B <= J)


def _require_zero(t):
    t.require_validated()
    z = find_zero(t)
    if z is None:
        raise HypothesisNotMet("no zero")
    return z


def omega_points(t, cap=None):
    """Proper bi-ideals that are strongly irreducible within the bi-ideal family."""
    _require_zero(t)
    fam = enumerate_subsets_of_kind(t, IdealKind.BI, cap)
    return tuple(B for B in fam
                 if not B.is_full() and is_strongly_irreducible(t, B, IdealKind.BI, cap))


def spectrum_points(t, cap=None):
    """Proper prime two-sided ideals containing the zero."""
    z = _require_zero(t)
    fam = enumerate_subsets_of_kind(t, IdealKind.TWO_SIDED, cap)
    return tuple(J for J in fam
                 if not J.is_full() and z in J and is_prime_member(t, J, IdealKind.TWO_SIDED, cap))


def build_topology(points, generators):
    points = tuple(sorted_sets(points))
    by_open = {}
    for B in generators:
        by_open.setdefault(open_set(points, B), []).append(B)
    keys = sorted(by_open, key=lambda o: sorted(o))
    return FiniteTopology(
        points,
        tuple(keys),
        tuple(tuple(sorted_sets(by_open[k])) for k in keys),
    )


def build_gamma_omega(t, cap=None):
    points = omega_points(t, cap)
    return build_topology(points, enumerate_subsets_of_kind(t, IdealKind.BI, cap))


def build_gamma_ps(t, cap=None):
    points = spectrum_points(t, cap)
    return build_topology(points, enumerate_subsets_of_kind(t, IdealKind.TWO_SIDED, cap))


def verify_topology(T, claim_id="topology"):
    """Empty set, whole space, and closure under pairwise meet and join."""
    opens = set(T.opens)
    everything = frozenset(range(len(T.points)))
    for required, name in ((frozenset(), "empty set"), (everything, "whole space")):
        if required not in opens:
            return violated(claim_id, witness("topology_axiom", {"axiom": name},
                                              {"ok": False, "missing": sorted(required)}),
                            note=f"{name} is not open")
    ordered = list(T.opens)
    for i, U in enumerate(ordered):
        for V in ordered[i + 1:]:
            for op, W in (("intersection", U & V), ("union", U | V)):
                if W not in opens:
                    return violated(claim_id, witness(
                        "topology_axiom",
                        {"axiom": op, "opens": [sorted(U), sorted(V)]},
                        {"ok": False, "result": sorted(W)}),
                        note=f"{op} of two opens is not open")
    for members, labels in zip(T.opens, T.labels):
        for B in labels:
            if open_set(T.points, B) != members:
                return violated(claim_id, witness(
                    "topology_axiom", {"axiom": "label", "label": B.to_list()},
                    {"ok": False, "result": sorted(open_set(T.points, B))}),
                    note="label does not regenerate its open")
    return holds(claim_id, points=len(T.points), opens=len(T.opens))


def _points_for(t, mode, cap):
    return omega_points(t, cap) if mode == "biIdeal" else spectrum_points(t, cap)


def verify_phi_preservation(t, mode, claim_id="phi", cap=None):
    """Check that B -> O_B turns meets into intersections and joins into unions.

    Joins are taken as the generated closure of the union.  All nonempty
    sub-collections are checked when the generating family has at most
    ``EXHAUSTIVE_FAMILY_LIMIT`` members; otherwise pairs plus the whole family.
    """
    kind = MODES[mode]
    points = tuple(sorted_sets(_points_for(t, mode, cap)))
    fam = enumerate_subsets_of_kind(t, kind, cap)
    O = {B: open_set(points, B) for B in fam}

    def O_of(X):
        return O[X] if X in O else open_set(points, X)

    for i, A in enumerate(fam):
        for B in fam[i:]:
            meet = A & B
            if not meet.mask:
                continue
            if O_of(meet) != O[A] & O[B]:
                return violated(claim_id, witness(
                    "phi_meet", {"mode": mode, "sets": [A.to_list(), B.to_list()]},
                    phi_meet_observation(t, mode, A.to_list(), B.to_list())),
                    note="O of an intersection differs from the intersection of opens")

    exhaustive = len(fam) <= EXHAUSTIVE_FAMILY_LIMIT
    if exhaustive:
        collections = itertools.chain.from_iterable(
            itertools.combinations(fam, r) for r in range(1, len(fam) + 1))
    else:
        collections = itertools.chain(itertools.combinations(fam, 2), [tuple(fam)])
    checked = 0
    for coll in collections:
        checked += 1
        union = ElemSet(t.order, 0)
        opens = frozenset()
        for B in coll:
            union = union | B
            opens = opens | O[B]
        if O_of(generated_closure(t, union, kind, cap)) != opens:
            sets = [B.to_list() for B in coll]
            return violated(claim_id, witness(
                "phi_join", {"mode": mode, "sets": sets},
                phi_join_observation(t, mode, sets)),
                note="O of a generated join differs from the union of opens")
    scope = "all sub-collections" if exhaustive else "checked pairs + full only"
    return holds(claim_id, note=scope, collections=checked, family=len(fam))


def phi_meet_observation(t, mode, sets, cap=None):
    points = tuple(sorted_sets(_points_for(t, mode, cap)))
    A, B = (ElemSet.of(t.order, s) for s in sets)
    lhs = sorted(open_set(points, A & B))
    rhs = sorted(open_set(points, A) & open_set(points, B))
    return {"ok": lhs == rhs, "lhs": lhs, "rhs": rhs}


def phi_join_observation(t, mode, sets, cap=None):
    kind = MODES[mode]
    points = tuple(sorted_sets(_points_for(t, mode, cap)))
    union = ElemSet(t.order, 0)
    rhs = frozenset()
    for s in sets:
        B = ElemSet.of(t.order, s)
        union = union | B
        rhs = rhs | open_set(points, B)
    lhs = sorted(open_set(points, generated_closure(t, union, kind, cap)))
    return {"ok": lhs == sorted(rhs), "lhs": lhs, "rhs": sorted(rhs)}


def specialization_dot(T, name="specialization"):
    """DOT graph with an edge J -> K iff every open containing J contains K."""
    lines = [f"digraph {name} {{"]
    for j, J in enumerate(T.points):
        lines.append(f'  p{j} [label="{J}"];')
    for j in range(len(T.points)):
        for k in range(len(T.points)):
            if all(k in U for U in T.opens if j in U):
                lines.append(f"  p{j} -> p{k};")
    lines.append("}")
    return "\n".join(lines) + "\n"
