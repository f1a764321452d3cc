"""Registry of checkable claims about AG-groupoids and a corpus runner.

Every claim is a function of one validated table returning a ClaimResult.
Violations carry a witness ``{"check", "args", "observed"}``; feeding the
check name and args back through ``OBSERVATIONS`` reproduces ``observed``
(see ``recheck``).
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import CapExceededError, HypothesisNotMet
from .results import Status, holds, not_applicable, vacuous, violated, witness
from .subsets import (
    ElemSet,
    IdealKind,
    H_set,
    H_set_fixed,
    all_nonempty_subsets,
    check_principal_identities,
    enumerate_subsets_of_kind,
    family_properties,
    is_ideal_kind,
    is_idempotent_subset,
    is_prime_member,
    is_quasi_prime,
    is_semiprime_member,
    kind_violation,
    principal_identity_observation,
    principal_ideals,
    prime_violation,
    semilattice_violation,
    set_product,
    theorem4_violation,
)
from .table import (
    check_anti_rectangular,
    check_medial,
    check_paramedial3,
    check_permutation_identity,
    check_power_corollary,
    emit_table,
    find_zero,
    left_identities,
    left_identity,
)
from .topology import (
    build_gamma_omega,
    build_gamma_ps,
    phi_join_observation,
    phi_meet_observation,
    verify_phi_preservation,
    verify_topology,
)

PERMUTATION_MAX_EXP = 3

KINDS = {k.value: k for k in IdealKind}


def _set(t, members):
    return ElemSet.of(t.order, members)


def _fam(t, kind):
    return enumerate_subsets_of_kind(t, kind)


# -- observations (re-checkable building blocks) ------------------------------

def obs_medial(t, a, b, c, d):
    T = t.table
    lhs, rhs = T[T[a][b]][T[c][d]], T[T[a][c]][T[b][d]]
    return {"ok": lhs == rhs, "lhs": lhs, "rhs": rhs}


def obs_paramedial3(t, a, b, c, d):
    T = t.table
    lhs, rhs = T[T[a][b]][T[c][d]], T[T[d][b]][T[c][a]]
    return {"ok": lhs == rhs, "lhs": lhs, "rhs": rhs}


def _pow(t, x, k):
    y = x
    for _ in range(k - 1):
        y = t.table[y][x]
    return y


def obs_permutation_identity(t, xs, perm, exps):
    T = t.table

    def side(ys):
        p = [_pow(t, y, e) for y, e in zip(ys, exps)]
        return T[T[p[0]][p[1]]][T[p[2]][p[3]]]

    lhs, rhs = side(xs), side([xs[i] for i in perm])
    return {"ok": lhs == rhs, "lhs": lhs, "rhs": rhs}


def obs_power_corollary(t, xs, perm, k):
    T = t.table

    def side(ys):
        return _pow(t, T[T[ys[0]][ys[1]]][T[ys[2]][ys[3]]], k)

    lhs, rhs = side(xs), side([xs[i] for i in perm])
    return {"ok": lhs == rhs, "lhs": lhs, "rhs": rhs}


def obs_zero(t, z):
    bad = [s for s in range(t.order) if t.table[z][s] != z or t.table[s][z] != z]
    return {"ok": not bad, "nonAbsorbing": bad}


def _expr(t, expr, sets):
    X = [_set(t, s) for s in sets]
    if expr == "XY":
        return set_product(t, X[0], X[1])
    if expr == "XX":
        return set_product(t, X[0], X[0])
    if expr == "(XX)Y":
        return set_product(t, set_product(t, X[0], X[0]), X[1])
    raise ValueError(expr)


def obs_product_kind(t, expr, sets, kind):
    Y = _expr(t, expr, sets)
    bad = kind_violation(t, Y, KINDS[kind])
    return {"ok": bad is None, "result": Y.to_list(), "violation": bad}


def obs_idempotent_bi_is_ideal(t, set):
    B = _set(t, set)
    idem = is_idempotent_subset(t, B)
    bi = is_ideal_kind(t, B, IdealKind.BI)
    two = is_ideal_kind(t, B, IdealKind.TWO_SIDED)
    return {"ok": not (idem and bi) or two, "idempotent": idem, "bi": bi, "twoSided": two}


def obs_proper_bi_excludes_identity(t, set, e):
    B = _set(t, set)
    proper_bi = not B.is_full() and is_ideal_kind(t, B, IdealKind.BI)
    is_e = e in left_identities(t)
    return {"ok": not (proper_bi and is_e and e in B), "properBi": proper_bi, "leftIdentity": is_e}


def _pairs_equal_intersection(t, fam):
    for A in fam:
        for B in fam:
            if A & B != set_product(t, A, B):
                return [A.to_list(), B.to_list()]
    return None


def obs_idempotent_battery(t, kind):
    """All members idempotent / meet equals product / product is a semilattice."""
    fam = _fam(t, KINDS[kind])
    not_idem = next((X.to_list() for X in fam if not is_idempotent_subset(t, X)), None)
    meet_bad = _pairs_equal_intersection(t, fam)
    lattice_bad = semilattice_violation(t, fam)
    verdicts = [not_idem is None, meet_bad is None, lattice_bad is None]
    return {"ok": len(set(verdicts)) == 1, "allIdempotent": verdicts[0],
            "meetIsProduct": verdicts[1], "semilattice": verdicts[2],
            "notIdempotent": not_idem, "meetMismatch": meet_bad, "semilatticeFailure": lattice_bad}


def obs_prime_battery(t, kind):
    k = KINDS[kind]
    fam = _fam(t, k)
    nonprime = next((P for P in fam if not is_prime_member(t, P, k)), None)
    props = family_properties(t, k)
    all_prime = nonprime is None
    rhs = props.all_idempotent and props.totally_ordered
    out = {"ok": all_prime == rhs, "allPrime": all_prime,
           "allIdempotent": props.all_idempotent, "totallyOrdered": props.totally_ordered}
    if nonprime is not None:
        A, B = prime_violation(t, nonprime, k)
        out["nonPrime"] = {"set": nonprime.to_list(), "pair": [A.to_list(), B.to_list()]}
    return out


def obs_gamma_topology(t, mode):
    T = build_gamma_omega(t) if mode == "biIdeal" else build_gamma_ps(t)
    r = verify_topology(T)
    return {"ok": r.status is Status.HOLDS, "axiomWitness": r.witness,
            "points": [J.to_list() for J in T.points]}


def obs_zero_in_ideals(t):
    z = find_zero(t)
    missing = [I.to_list() for I in _fam(t, IdealKind.TWO_SIDED) if z not in I]
    return {"ok": not missing, "zero": z, "idealsWithoutZero": missing}


def obs_theorem4(t, set):
    P = _set(t, set)
    qp = is_quasi_prime(t, P)
    bad = theorem4_violation(t, P)
    return {"ok": qp == (bad is None), "quasiPrime": qp, "criterion": bad is None,
            "criterionWitness": list(bad) if bad else None}


def obs_left_iff_right(t, set):
    X = _set(t, set)
    left = is_ideal_kind(t, X, IdealKind.LEFT)
    right = is_ideal_kind(t, X, IdealKind.RIGHT)
    return {"ok": left == right, "left": left, "right": right}


def obs_h_set(t, set, a):
    I = _set(t, set)
    H = H_set(t, a)
    return {"ok": H <= I, "H": H.to_list()}


def obs_principal_bi(t, a):
    p = principal_ideals(t, a)
    bad = [name for name, X in (("left", p.left), ("right", p.right), ("twoSided", p.two_sided))
           if not is_ideal_kind(t, X, IdealKind.BI)]
    return {"ok": not bad, "notBiIdeal": bad}


def obs_idempotent_bi_semilattice(t):
    fam = [B for B in _fam(t, IdealKind.BI) if is_idempotent_subset(t, B)]
    bad = semilattice_violation(t, fam)
    return {"ok": bad is None, "failure": bad}


def obs_idempotent_sandwich(t, set):
    C = _set(t, set)
    Y = set_product(t, set_product(t, C, ElemSet.full(t.order)), C)
    bi = is_ideal_kind(t, Y, IdealKind.BI)
    idem = is_idempotent_subset(t, Y)
    return {"ok": bi and idem, "result": Y.to_list(), "bi": bi, "idempotent": idem}


def obs_right_is_bi(t, set):
    X = _set(t, set)
    right = is_ideal_kind(t, X, IdealKind.RIGHT)
    bi = is_ideal_kind(t, X, IdealKind.BI)
    return {"ok": not right or bi, "right": right, "bi": bi}


def obs_intersection_bi(t, sets):
    A, B = (_set(t, s) for s in sets)
    meet = A & B
    ok = not meet.mask or is_ideal_kind(t, meet, IdealKind.BI)
    return {"ok": ok, "intersection": meet.to_list()}


def obs_prime_intersection_semiprime(t):
    primes = [B for B in _fam(t, IdealKind.BI) if is_prime_member(t, B, IdealKind.BI)]
    meet = ElemSet.full(t.order)
    for B in primes:
        meet = meet & B
    out = {"intersection": meet.to_list(), "primes": len(primes), "bi": False, "semiprime": False}
    if meet.mask and is_ideal_kind(t, meet, IdealKind.BI):
        out["bi"] = True
        out["semiprime"] = is_semiprime_member(t, meet, IdealKind.BI)
    out["ok"] = out["bi"] and out["semiprime"]
    return out


def obs_square_bi(t, set):
    B = _set(t, set)
    S = ElemSet.full(t.order)
    B2 = set_product(t, B, B)
    bi = is_ideal_kind(t, B2, IdealKind.BI)
    SB2 = set_product(t, S, B2)
    B2S = set_product(t, B2, S)
    return {"ok": bi and B2 <= SB2 and SB2 == B2S, "square": B2.to_list(), "bi": bi,
            "SB2": SB2.to_list(), "B2S": B2S.to_list()}


def obs_anti_rect_remark(t, remark, set=None):
    S = ElemSet.full(t.order)
    if remark == "S=SS":
        SS = set_product(t, S, S)
        return {"ok": SS == S, "SS": SS.to_list()}
    I = _set(t, set)
    if remark == "SI=IS":
        SI, IS = set_product(t, S, I), set_product(t, I, S)
        return {"ok": SI == IS, "SI": SI.to_list(), "IS": IS.to_list()}
    if remark == "quasi-prime=>prime":
        qp = is_quasi_prime(t, I)
        prime = is_prime_member(t, I, IdealKind.TWO_SIDED)
        return {"ok": not qp or prime, "quasiPrime": qp, "prime": prime}
    raise ValueError(remark)


OBSERVATIONS = {
    "medial": obs_medial,
    "paramedial3": obs_paramedial3,
    "permutation_identity": obs_permutation_identity,
    "power_corollary": obs_power_corollary,
    "zero": obs_zero,
    "product_kind": obs_product_kind,
    "idempotent_bi_is_ideal": obs_idempotent_bi_is_ideal,
    "proper_bi_excludes_identity": obs_proper_bi_excludes_identity,
    "idempotent_battery": obs_idempotent_battery,
    "prime_battery": obs_prime_battery,
    "gamma_topology": obs_gamma_topology,
    "phi_meet": phi_meet_observation,
    "phi_join": phi_join_observation,
    "zero_in_ideals": obs_zero_in_ideals,
    "theorem4": obs_theorem4,
    "left_iff_right": obs_left_iff_right,
    "h_set": obs_h_set,
    "principal_identity": principal_identity_observation,
    "principal_bi": obs_principal_bi,
    "idempotent_bi_semilattice": obs_idempotent_bi_semilattice,
    "idempotent_sandwich": obs_idempotent_sandwich,
    "right_is_bi": obs_right_is_bi,
    "intersection_bi": obs_intersection_bi,
    "prime_intersection_semiprime": obs_prime_intersection_semiprime,
    "square_bi": obs_square_bi,
    "anti_rect_remark": obs_anti_rect_remark,
}


def observe(t, check, args):
    return OBSERVATIONS[check](t, **args)


def recheck(t, w):
    """True iff the witness reproduces exactly and still shows a violation."""
    got = observe(t, w["check"], w["args"])
    return got == w["observed"] and not got["ok"]


# -- claim plumbing -------------------------------------------------------------

class _Claim:
    """Accumulates checks for one claim and stops at the first violation."""

    def __init__(self, cid, t):
        self.cid = cid
        self.t = t
        self.count = 0
        self.failure = None

    def check(self, name, **args):
        if self.failure is not None:
            return False
        self.count += 1
        obs = observe(self.t, name, args)
        if not obs["ok"]:
            self.failure = witness(name, args, obs)
            return False
        return True

    def result(self, empty_note="empty quantification domain", note=""):
        if self.failure is not None:
            return violated(self.cid, self.failure, note)
        if self.count == 0:
            return vacuous(self.cid, empty_note)
        return holds(self.cid, note=note, checks=self.count)


def _needs_left_identity(t):
    if left_identity(t) is None:
        raise HypothesisNotMet("no left identity")


def _needs_zero(t):
    if find_zero(t) is None:
        raise HypothesisNotMet("no zero")


def _needs_anti_rectangular(t):
    if not check_anti_rectangular(t).holds:
        raise HypothesisNotMet("not anti-rectangular")


def _tuples(n, k):
    return itertools.product(range(n), repeat=k)


# -- the claims ----------------------------------------------------------------

def c1_medial(t):
    rep = check_medial(t)
    if rep.holds:
        return holds("C1", checks=t.order ** 4)
    a, b, c, d = rep.witness
    args = {"a": a, "b": b, "c": c, "d": d}
    return violated("C1", witness("medial", args, obs_medial(t, **args)))


def c2_paramedial(t):
    _needs_left_identity(t)
    rep = check_paramedial3(t)
    if rep.holds:
        return holds("C2", checks=t.order ** 4)
    a, b, c, d = rep.witness
    args = {"a": a, "b": b, "c": c, "d": d}
    return violated("C2", witness("paramedial3", args, obs_paramedial3(t, **args)))


def c3_permutation(t):
    _needs_left_identity(t)
    rep = check_permutation_identity(t, PERMUTATION_MAX_EXP)
    flag = " (left-iterated powers; another power convention may be intended)"
    if not rep.holds:
        *xs, perm, exps = rep.witness
        args = {"xs": xs, "perm": list(perm), "exps": list(exps)}
        return violated("C3", witness("permutation_identity", args,
                                      obs_permutation_identity(t, **args)),
                        note="positional-exponent identity fails" + flag)
    rep = check_power_corollary(t, PERMUTATION_MAX_EXP)
    if not rep.holds:
        *xs, perm, k = rep.witness
        args = {"xs": xs, "perm": list(perm), "k": k}
        return violated("C3", witness("power_corollary", args, obs_power_corollary(t, **args)),
                        note="k-th power corollary fails" + flag)
    return holds("C3", note=f"exponents 2..{PERMUTATION_MAX_EXP}")


def c4_zero(t):
    z = find_zero(t)
    if z is None:
        raise HypothesisNotMet("no zero")
    c = _Claim("C4", t)
    c.check("zero", z=z)
    return c.result()


def c5_prop1(t):
    _needs_left_identity(t)
    c = _Claim("C5", t)
    for T in _fam(t, IdealKind.LEFT):
        for B in _fam(t, IdealKind.BI):
            sets = [B.to_list(), T.to_list()]
            c.check("product_kind", expr="XY", sets=sets, kind="bi")
            c.check("product_kind", expr="(XX)Y", sets=[T.to_list(), B.to_list()], kind="bi")
    return c.result()


def c6_prop2(t):
    _needs_left_identity(t)
    c = _Claim("C6", t)
    fam = _fam(t, IdealKind.BI)
    for A in fam:
        for B in fam:
            c.check("product_kind", expr="XY", sets=[A.to_list(), B.to_list()], kind="bi")
    return c.result()


def c7_lemma1(t):
    _needs_left_identity(t)
    c = _Claim("C7", t)
    for B in _fam(t, IdealKind.BI):
        if is_idempotent_subset(t, B):
            c.check("idempotent_bi_is_ideal", set=B.to_list())
    return c.result("no idempotent bi-ideals")


def c8_lemma2(t):
    _needs_left_identity(t)
    c = _Claim("C8", t)
    for B in _fam(t, IdealKind.BI):
        if B.is_full():
            continue
        for e in left_identities(t):
            c.check("proper_bi_excludes_identity", set=B.to_list(), e=e)
    return c.result("no proper bi-ideals")


def c9_prop3(t):
    _needs_left_identity(t)
    c = _Claim("C9", t)
    c.check("idempotent_battery", kind="bi")
    return c.result()


def c10_theorem1(t):
    _needs_left_identity(t)
    c = _Claim("C10", t)
    c.check("prime_battery", kind="bi")
    return c.result()


def _topology_claim(cid, t, mode):
    _needs_zero(t)
    c = _Claim(cid, t)
    c.check("gamma_topology", mode=mode)
    if cid == "C12":
        c.check("zero_in_ideals")
    res = c.result()
    if res.status is Status.VIOLATED:
        return res
    phi = verify_phi_preservation(t, mode, claim_id=cid)
    if phi.status is Status.VIOLATED:
        return phi
    return holds(cid, note=phi.note, **phi.details)


def c11_theorem2(t):
    return _topology_claim("C11", t, "biIdeal")


def c12_theorem3(t):
    return _topology_claim("C12", t, "primeSpectrum")


def c13_theorem4(t):
    _needs_left_identity(t)
    c = _Claim("C13", t)
    for P in _fam(t, IdealKind.LEFT):
        c.check("theorem4", set=P.to_list())
    return c.result()


def c14_prop4(t):
    _needs_anti_rectangular(t)
    c = _Claim("C14", t)
    fam = _fam(t, IdealKind.TWO_SIDED)
    for A in fam:
        for B in fam:
            c.check("product_kind", expr="XY", sets=[A.to_list(), B.to_list()], kind="two-sided")
    return c.result()


def c15_lemma3(t):
    _needs_anti_rectangular(t)
    c = _Claim("C15", t)
    for X in all_nonempty_subsets(t):
        c.check("left_iff_right", set=X.to_list())
    return c.result()


def c16_lemma4(t):
    _needs_anti_rectangular(t)
    c = _Claim("C16", t)
    variant_escapes = 0
    for I in _fam(t, IdealKind.TWO_SIDED):
        for a in I:
            c.check("h_set", set=I.to_list(), a=a)
            variant_escapes += not H_set_fixed(t, a) <= I
    note = f"variant (xa)x=x escapes the ideal in {variant_escapes} cases"
    return c.result(note=note)


def c17_prop5(t):
    _needs_anti_rectangular(t)
    c = _Claim("C17", t)
    c.check("idempotent_battery", kind="two-sided")
    return c.result()


def c18_theorem5(t):
    _needs_anti_rectangular(t)
    c = _Claim("C18", t)
    c.check("prime_battery", kind="two-sided")
    return c.result()


def c19_principal(t):
    _needs_left_identity(t)
    for r in check_principal_identities(t):
        if r.status is Status.VIOLATED:
            return r
    c = _Claim("C19", t)
    for a in range(t.order):
        c.check("principal_bi", a=a)
    return c.result()


def c20_idempotent_semilattice(t):
    _needs_left_identity(t)
    c = _Claim("C20", t)
    c.check("idempotent_bi_semilattice")
    for C in all_nonempty_subsets(t):
        if is_idempotent_subset(t, C):
            c.check("idempotent_sandwich", set=C.to_list())
    return c.result()


def c21_right_is_bi(t):
    c = _Claim("C21", t)
    for X in _fam(t, IdealKind.RIGHT):
        c.check("right_is_bi", set=X.to_list())
    return c.result()


def c22_intersections(t):
    c = _Claim("C22", t)
    fam = _fam(t, IdealKind.BI)
    # pairwise closure implies closure under arbitrary intersections
    for i, A in enumerate(fam):
        for B in fam[i + 1:]:
            c.check("intersection_bi", sets=[A.to_list(), B.to_list()])
    return c.result("fewer than two bi-ideals")


def c23_semiprime(t):
    c = _Claim("C23", t)
    c.check("prime_intersection_semiprime")
    return c.result()


def c24_square(t):
    _needs_left_identity(t)
    c = _Claim("C24", t)
    for B in _fam(t, IdealKind.BI):
        c.check("square_bi", set=B.to_list())
    return c.result()


def c25_anti_rect_remarks(t):
    _needs_anti_rectangular(t)
    c = _Claim("C25", t)
    c.check("anti_rect_remark", remark="S=SS")
    for I in _fam(t, IdealKind.TWO_SIDED):
        c.check("anti_rect_remark", remark="SI=IS", set=I.to_list())
        c.check("anti_rect_remark", remark="quasi-prime=>prime", set=I.to_list())
    return c.result()


def c26_left_square(t):
    c = _Claim("C26", t)
    for I in _fam(t, IdealKind.LEFT):
        c.check("product_kind", expr="XX", sets=[I.to_list()], kind="two-sided")
    return c.result()


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    summary: str
    tier: str  # "assert", "assert-with-left-identity" or "report"
    run: object


_ASSERT = "assert"
_ASSERT_LI = "assert-with-left-identity"
_REPORT = "report"

CLAIMS = {c.claim_id: c for c in [
    ClaimSpec("C1", "medial law", _ASSERT, c1_medial),
    ClaimSpec("C2", "(ab)(cd)=(db)(ca) with left identity", _ASSERT_LI, c2_paramedial),
    ClaimSpec("C3", "permutation identity on powers", _REPORT, c3_permutation),
    ClaimSpec("C4", "zero absorbs", _REPORT, c4_zero),
    ClaimSpec("C5", "BT and T^2B are bi-ideals", _ASSERT_LI, c5_prop1),
    ClaimSpec("C6", "product of bi-ideals is a bi-ideal", _ASSERT_LI, c6_prop2),
    ClaimSpec("C7", "idempotent bi-ideal is an ideal", _ASSERT_LI, c7_lemma1),
    ClaimSpec("C8", "proper bi-ideal excludes left identities", _ASSERT_LI, c8_lemma2),
    ClaimSpec("C9", "bi-ideals idempotent <=> meet=product <=> semilattice", _REPORT, c9_prop3),
    ClaimSpec("C10", "all bi-ideals prime <=> idempotent and totally ordered", _REPORT, c10_theorem1),
    ClaimSpec("C11", "topology on strongly irreducible bi-ideals", _REPORT, c11_theorem2),
    ClaimSpec("C12", "topology on prime ideals", _REPORT, c12_theorem3),
    ClaimSpec("C13", "quasi-prime <=> (Sa)b criterion", _REPORT, c13_theorem4),
    ClaimSpec("C14", "product of ideals is an ideal (anti-rectangular)", _REPORT, c14_prop4),
    ClaimSpec("C15", "left ideal <=> right ideal (anti-rectangular)", _REPORT, c15_lemma3),
    ClaimSpec("C16", "H(a) inside every ideal containing a", _REPORT, c16_lemma4),
    ClaimSpec("C17", "fully idempotent battery (anti-rectangular)", _REPORT, c17_prop5),
    ClaimSpec("C18", "all ideals prime <=> idempotent and totally ordered", _REPORT, c18_theorem5),
    ClaimSpec("C19", "principal ideal identities", _REPORT, c19_principal),
    ClaimSpec("C20", "idempotent bi-ideals form a semilattice", _REPORT, c20_idempotent_semilattice),
    ClaimSpec("C21", "right ideal is a bi-ideal", _ASSERT, c21_right_is_bi),
    ClaimSpec("C22", "bi-ideal intersections are empty or bi-ideals", _REPORT, c22_intersections),
    ClaimSpec("C23", "intersection of prime bi-ideals is semiprime", _REPORT, c23_semiprime),
    ClaimSpec("C24", "B^2 bi-ideal and B^2 <= SB^2 = B^2S", _ASSERT_LI, c24_square),
    ClaimSpec("C25", "anti-rectangular remarks", _REPORT, c25_anti_rect_remarks),
    ClaimSpec("C26", "square of a left ideal is an ideal", _REPORT, c26_left_square),
]}


def run_claim(t, claim_id):
    try:
        spec = CLAIMS[claim_id]
    except KeyError:
        raise KeyError(f"unknown claim {claim_id!r}") from None
    t.require_validated()
    try:
        return spec.run(t)
    except HypothesisNotMet as exc:
        return not_applicable(claim_id, str(exc))
    except CapExceededError as exc:
        return not_applicable(claim_id, f"enumeration cap: {exc}")


def _run_instance(args):
    t, claim_ids = args
    return [run_claim(t, cid) for cid in claim_ids]


def run_corpus(corpus, claim_filter=None, jobs=1):
    """Aggregate per-claim tallies and violation witnesses over a corpus."""
    claim_ids = list(claim_filter) if claim_filter else list(CLAIMS)
    for cid in claim_ids:
        if cid not in CLAIMS:
            raise KeyError(f"unknown claim {cid!r}")
    report = {cid: {"holds": 0, "violated": 0, "notApplicable": 0, "vacuous": 0,
                    "notApplicableReasons": {}, "witnesses": []} for cid in claim_ids}
    tables = list(corpus)
    work = [(t, claim_ids) for t in tables]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            per_instance = list(pool.map(_run_instance, work, chunksize=16))
    else:
        per_instance = map(_run_instance, work)
    for idx, (t, results) in enumerate(zip(tables, per_instance)):
        for r in results:
            entry = report[r.claim_id]
            entry[r.status.value] += 1
            if r.status is Status.NOT_APPLICABLE:
                reasons = entry["notApplicableReasons"]
                reasons[r.note] = reasons.get(r.note, 0) + 1
            elif r.status is Status.VIOLATED:
                entry["witnesses"].append({"instance": idx, "table": emit_table(t),
                                           "witness": r.witness, "note": r.note})
    return {"claims": report, "corpusSize": len(tables)}


def violations(report):
    return sum(c["violated"] for c in report["claims"].values())
