"""agtop command line: check | ideals | topology | enumerate | verify | canon."""

import argparse
import json
import sys

from .errors import AGTParseError, CapExceededError, NotLeftInvertiveError
from .harness import CLAIMS, run_corpus, violations
from .search import SearchSpec, census_counts, corpus, enumerate_ag_groupoids
from .subsets import (
    IdealKind,
    enumerate_subsets_of_kind,
    is_idempotent_subset,
    is_prime_member,
    is_quasi_prime,
    is_semiprime_member,
    is_strongly_irreducible,
)
from .table import (
    canonical_form,
    check_anti_rectangular,
    check_left_invertive,
    check_medial,
    check_paramedial3,
    emit_table,
    find_zero,
    left_identities,
    parse_stream,
    parse_table,
)
from .topology import (
    build_gamma_omega,
    build_gamma_ps,
    specialization_dot,
    verify_phi_preservation,
    verify_topology,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_AXIOM = 3
EXIT_VIOLATED = 4
EXIT_CAP = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _read(path):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(path):
    return parse_table(_read(path), name=path)


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _verdict(rep):
    if rep.holds:
        return "OK"
    return f"FAIL at {rep.witness}"


def cmd_check(args, out):
    t = _load(args.file)
    reports = {
        "left-invertive": check_left_invertive(t),
        "medial": check_medial(t),
        "paramedial3": check_paramedial3(t),
        "anti-rectangular": check_anti_rectangular(t),
    }
    ids = left_identities(t)
    zero = find_zero(t)
    if args.json:
        payload = {name: {"holds": r.holds, "witness": list(r.witness) if r.witness else None}
                   for name, r in reports.items()}
        payload["leftIdentities"] = ids.to_list()
        payload["zero"] = zero
        payload["order"] = t.order
        out.write(_dump(payload))
    else:
        for name, r in reports.items():
            out.write(f"{name}: {_verdict(r)}\n")
        out.write(f"left identities: {ids}\n")
        out.write(f"zero: {'none' if zero is None else zero}\n")
    return EXIT_OK if reports["left-invertive"].holds else EXIT_AXIOM


KIND_NAMES = {"left": IdealKind.LEFT, "right": IdealKind.RIGHT, "two-sided": IdealKind.TWO_SIDED,
              "bi": IdealKind.BI, "sub": IdealKind.SUBGROUPOID}


def _predicates(t, X, kind):
    preds = {
        "idempotent": is_idempotent_subset(t, X),
        "prime": is_prime_member(t, X, kind),
        "semiprime": is_semiprime_member(t, X, kind),
        "stronglyIrreducible": is_strongly_irreducible(t, X, kind),
    }
    if kind is IdealKind.LEFT:
        preds["quasiPrime"] = is_quasi_prime(t, X)
    return preds


def cmd_ideals(args, out):
    t = _load(args.file).require_validated()
    kind = KIND_NAMES[args.kind]
    fam = enumerate_subsets_of_kind(t, kind)
    rows = []
    for X in fam:
        row = {"members": X.to_list()}
        if args.predicates:
            row.update(_predicates(t, X, kind))
        rows.append(row)
    if args.json:
        out.write(_dump({"kind": args.kind, "count": len(rows), "family": rows,
                         "semiprimeDefinition": "C*C <= P implies C <= P"}))
    else:
        out.write(f"{len(fam)} {args.kind} ideals\n")
        for X, row in zip(fam, rows):
            flags = [k for k, v in row.items() if k != "members" and v]
            out.write(str(X) + (f"  {' '.join(flags)}" if args.predicates else "") + "\n")
    return EXIT_OK


def topology_payload(t, space):
    """JSON-ready description of one of the two spaces, or a not-applicable note."""
    if find_zero(t) is None:
        return {"space": space, "status": "notApplicable", "note": "no zero"}
    if space == "omega":
        T, mode = build_gamma_omega(t), "biIdeal"
    else:
        T, mode = build_gamma_ps(t), "primeSpectrum"
    payload = T.to_json()
    payload["space"] = space
    ver = verify_topology(T)
    phi = verify_phi_preservation(t, mode)
    payload["verifier"] = ver.status.value
    payload["phi"] = {"status": phi.status.value, "note": phi.note}
    if ver.witness:
        payload["verifierWitness"] = ver.witness
    if phi.witness:
        payload["phi"]["witness"] = phi.witness
    return payload, T


def cmd_topology(args, out):
    t = _load(args.file).require_validated()
    result = topology_payload(t, args.space)
    if isinstance(result, dict):
        if args.json:
            out.write(_dump(result))
        else:
            out.write("not-applicable: no zero\n")
        return EXIT_OK
    payload, T = result
    if args.dot:
        out.write(specialization_dot(T))
    elif args.json:
        out.write(_dump(payload))
    else:
        out.write(f"space: {args.space}\n")
        out.write(f"points ({len(T.points)}):\n")
        for j, J in enumerate(T.points):
            out.write(f"  p{j} = {J}\n")
        out.write(f"opens ({len(T.opens)}):\n")
        for members, labels in zip(T.opens, T.labels):
            pts = "{" + ",".join(f"p{j}" for j in sorted(members)) + "}"
            out.write(f"  {pts}  from {' '.join(str(B) for B in labels)}\n")
        out.write(f"topology axioms: {payload['verifier']}\n")
        out.write(f"phi preservation: {payload['phi']['status']} ({payload['phi']['note']})\n")
    return EXIT_OK


def cmd_enumerate(args, out):
    try:
        spec = SearchSpec(args.order, args.left_identity, args.zero, args.anti_rectangular,
                          args.iso, args.limit)
    except CapExceededError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.census:
        out.write(_dump(census_counts(spec)))
        return EXIT_OK
    first = True
    for t in enumerate_ag_groupoids(spec):
        if not first:
            out.write("---\n")
        out.write(emit_table(t))
        first = False
    return EXIT_OK


def cmd_verify(args, out):
    claims = None
    if args.claims:
        claims = [c.strip() for c in args.claims.split(",") if c.strip()]
        unknown = [c for c in claims if c not in CLAIMS]
        if unknown:
            raise UsageError(f"unknown claim id(s): {', '.join(unknown)}")
    if args.files and args.order:
        raise UsageError("give either files or --order, not both")
    if args.files:
        tables = [t for path in args.files for t in parse_stream(_read(path))]
        for t in tables:
            t.require_validated()
    elif args.order:
        try:
            SearchSpec(args.order)
        except CapExceededError as exc:
            raise UsageError(str(exc)) from None
        tables = list(corpus(args.order, up_to_isomorphism=args.iso, min_order=args.order))
    else:
        raise UsageError("verify needs files or --order")
    report = run_corpus(tables, claims, jobs=args.jobs)
    if args.json:
        out.write(_dump(report))
    else:
        out.write(f"corpus size: {report['corpusSize']}\n")
        for cid, e in report["claims"].items():
            out.write(f"{cid:>4} {CLAIMS[cid].summary}: holds={e['holds']} violated={e['violated']} "
                      f"notApplicable={e['notApplicable']} vacuous={e['vacuous']}\n")
            for w in e["witnesses"][: args.show]:
                out.write(f"       instance {w['instance']}: {json.dumps(w['witness'], sort_keys=True)}\n")
    return EXIT_VIOLATED if violations(report) else EXIT_OK


def cmd_canon(args, out):
    t = _load(args.file)
    out.write(emit_table(canonical_form(t)))
    return EXIT_OK


def build_parser():
    p = _Parser(prog="agtop", description="Ideals and topologies of finite AG-groupoids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="axiom checks for one table")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("ideals", help="list ideals of one kind")
    c.add_argument("file")
    c.add_argument("--kind", choices=sorted(KIND_NAMES), default="two-sided")
    c.add_argument("--predicates", action="store_true")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_ideals)

    c = sub.add_parser("topology", help="topology on strongly irreducible bi-ideals or prime ideals")
    c.add_argument("file")
    c.add_argument("--space", choices=("omega", "spectrum"), default="spectrum")
    c.add_argument("--json", action="store_true")
    c.add_argument("--dot", action="store_true")
    c.set_defaults(func=cmd_topology)

    c = sub.add_parser("enumerate", help="all AG-groupoids of an order")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--left-identity", action="store_true")
    c.add_argument("--zero", action="store_true")
    c.add_argument("--anti-rectangular", action="store_true")
    c.add_argument("--iso", action="store_true", help="one table per isomorphism class")
    c.add_argument("--limit", type=int)
    c.add_argument("--census", action="store_true")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("verify", help="run claims over files or a generated corpus")
    c.add_argument("files", nargs="*")
    c.add_argument("--order", type=int)
    c.add_argument("--iso", action="store_true")
    c.add_argument("--claims")
    c.add_argument("--json", action="store_true")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--show", type=int, default=3, help="witnesses printed per claim in text mode")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("canon", help="canonical form of a table")
    c.add_argument("file")
    c.set_defaults(func=cmd_canon)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except AGTParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotLeftInvertiveError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_AXIOM
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
