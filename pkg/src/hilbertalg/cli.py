"""Command-line interface.

Exit codes: 0 success, 1 semantic failure (axiom or theorem check), 2 input
error (unreadable, unparsable or structurally malformed files).  Reports are
rendered deterministically: repeated runs and runs with different --jobs
values produce byte-identical output (timings are shown only on request).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .adjoint import adjoint_semilattice, minimal_brouwerian_extension
from .closure import all_closure_endos, is_isotone
from .core import (
    FiniteHilbertAlgebra,
    HilbertAxiomError,
    MalformedTableError,
    axiom_violations,
    classify,
)
from .enumeration import (
    EnumerationBound,
    SEARCH_BOUND_DEFAULT,
    cross_survey_report,
    enumerate_algebras,
)
from .files import (
    ParseError,
    default_labels,
    dot_of_order,
    dump_algebra,
    load_algebra_file,
)
from .filters import all_filters, is_monomial
from .multipliers import all_multipliers, fixpoints, kernel
from .suites import CROSS_SUITE, resolve_suites, run_catalog_suites, suite_names

OK, SEMANTIC_FAIL, INPUT_ERROR = 0, 1, 2


def _default_jobs():
    try:
        return max(1, int(os.environ.get("HILBERTALG_JOBS", "1")))
    except ValueError:
        return 1


def _load(path):
    """(algebra-or-None, violations, labels); raises ParseError/MalformedTableError."""
    table, one, labels = load_algebra_file(path)
    bad = axiom_violations(table, one)  # raises MalformedTableError on bad shape
    alg = None if bad else FiniteHilbertAlgebra(table, one)
    if labels is None:
        labels = default_labels(len(table))
    return alg, bad, labels


def _fset(members, labels):
    return "{" + ",".join(labels[i] for i in sorted(members)) + "}"


def _fmap(f, labels):
    return "(" + ",".join(labels[v] for v in f) + ")"


def cmd_validate(args):
    try:
        alg, bad, labels = _load(args.path)
    except (ParseError, MalformedTableError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return INPUT_ERROR
    if bad:
        for v in bad:
            print(v.render(labels))
        return SEMANTIC_FAIL
    print(f"valid Hilbert algebra: n={alg.n} one={labels[alg.one]}")
    return OK


def _analyze_payload(alg, labels, args):
    flags = classify(alg)
    out = {
        "size": alg.n,
        "one": labels[alg.one],
        "implication_algebra": flags.implication_algebra,
        "implicative_semilattice": flags.implicative_semilattice,
    }
    if args.filters:
        fl = all_filters(alg)
        out["filters"] = [
            {"members": _fset(j, labels), "monomial": is_monomial(alg, j)}
            for j in fl.filters
        ]
        out["filter_lattice_covers"] = _cover_list(fl.lattice.leq)
    if args.multipliers:
        mult = all_multipliers(alg)
        out["multipliers"] = [
            {"map": _fmap(f, labels), "isotone": is_isotone(alg, f)}
            for f in mult.carrier
        ]
    if args.ce:
        ce = all_closure_endos(alg)
        out["closure_endomorphisms"] = [
            {
                "map": _fmap(f, labels),
                "kernel": _fset(kernel(alg, f), labels),
                "fixpoints": _fset(fixpoints(alg, f), labels),
            }
            for f in ce.carrier
        ]
        out["ce_lattice_covers"] = _cover_list(ce.lattice.leq)
    if args.adjoint:
        adj = adjoint_semilattice(alg)
        out["adjoint"] = {
            "maps": [_fmap(f, labels) for f in adj.carrier],
            "join": [list(r) for r in adj.join_table],
            "subtraction": [list(r) for r in adj.subtraction_table],
        }
    if args.extension:
        ext = minimal_brouwerian_extension(alg)
        out["extension"] = {
            "filters": [_fset(j, labels) for j in ext.filters],
            "unit": ext.unit,
            "meet": [list(r) for r in ext.meet_table],
            "implication": [list(r) for r in ext.imp_table],
            "embedding": list(ext.embedding),
        }
    return out


def _cover_list(leq):
    n = len(leq)
    return [
        [i, j]
        for i in range(n)
        for j in range(n)
        if i != j
        and leq[i][j]
        and not any(k != i and k != j and leq[i][k] and leq[k][j] for k in range(n))
    ]


def _print_analysis(payload):
    print(f"size: {payload['size']}  one: {payload['one']}")
    print(f"implication algebra: {payload['implication_algebra']}")
    print(f"implicative semilattice: {payload['implicative_semilattice']}")
    if "filters" in payload:
        print(f"filters ({len(payload['filters'])}):")
        for row in payload["filters"]:
            print(f"  {row['members']} monomial={row['monomial']}")
    if "multipliers" in payload:
        print(f"multipliers ({len(payload['multipliers'])}):")
        for row in payload["multipliers"]:
            print(f"  {row['map']} isotone={row['isotone']}")
    if "closure_endomorphisms" in payload:
        print(f"closure endomorphisms ({len(payload['closure_endomorphisms'])}):")
        for row in payload["closure_endomorphisms"]:
            print(f"  {row['map']} kernel={row['kernel']} fixpoints={row['fixpoints']}")
    if "adjoint" in payload:
        print(f"adjoint semilattice ({len(payload['adjoint']['maps'])} elements):")
        for i, m in enumerate(payload["adjoint"]["maps"]):
            print(f"  [{i}] {m}")
        print(f"  join: {payload['adjoint']['join']}")
        print(f"  subtraction: {payload['adjoint']['subtraction']}")
    if "extension" in payload:
        ext = payload["extension"]
        print(f"minimal Brouwerian extension ({len(ext['filters'])} elements, reverse inclusion):")
        for i, m in enumerate(ext["filters"]):
            print(f"  [{i}] {m}")
        print(f"  unit: [{ext['unit']}]  embedding: {ext['embedding']}")
        print(f"  meet: {ext['meet']}")
        print(f"  implication: {ext['implication']}")


def cmd_analyze(args):
    try:
        alg, bad, labels = _load(args.path)
    except (ParseError, MalformedTableError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return INPUT_ERROR
    if bad:
        print(HilbertAxiomError(bad), file=sys.stderr)
        return SEMANTIC_FAIL
    payload = _analyze_payload(alg, labels, args)
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _print_analysis(payload)
    return OK


def _table_json(alg):
    return json.dumps([list(r) for r in alg.imp], separators=(",", ":"))


def cmd_verify(args):
    try:
        names = resolve_suites(args.suite or ["all"])
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return INPUT_ERROR

    if args.enumerate is not None:
        try:
            catalog = enumerate_algebras(args.enumerate)
        except (ValueError, EnumerationBound) as e:
            print(f"input error: {e}", file=sys.stderr)
            return INPUT_ERROR
        algebras = catalog.algebras()
        entries = catalog.entries
        header = f"enumerated {len(algebras)} algebra(s) of size {args.enumerate}"
    else:
        if args.path is None:
            print("input error: give an algebra file or --enumerate N", file=sys.stderr)
            return INPUT_ERROR
        try:
            alg, bad, _labels = _load(args.path)
        except (ParseError, MalformedTableError) as e:
            print(f"input error: {e}", file=sys.stderr)
            return INPUT_ERROR
        if bad:
            print(HilbertAxiomError(bad), file=sys.stderr)
            return SEMANTIC_FAIL
        algebras = [alg]
        entries = None
        header = f"verifying {args.path}"

    per_algebra = run_catalog_suites(algebras, names, jobs=args.jobs)

    cross = None
    if CROSS_SUITE in names:
        if entries is not None:
            cross = cross_survey_report(entries)

    npass = nfail = nskip = 0
    doc = {"header": header, "algebras": [], "cross_survey": None}
    for alg, reports in zip(algebras, per_algebra):
        adoc = {
            "n": alg.n,
            "one": alg.one,
            "table": [list(r) for r in alg.imp],
            "suites": [r.as_dict(include_timing=args.timings) for r in reports],
        }
        doc["algebras"].append(adoc)
        for r in reports:
            p, f, s = r.counts()
            npass, nfail, nskip = npass + p, nfail + f, nskip + s
    if cross is not None:
        doc["cross_survey"] = cross.as_dict(include_timing=args.timings)
        p, f, s = cross.counts()
        npass, nfail, nskip = npass + p, nfail + f, nskip + s
    elif CROSS_SUITE in names:
        doc["cross_survey"] = {"skipped": "cross-survey needs --enumerate"}
        nskip += 1
    verdict = "PASS" if nfail == 0 else "FAIL"
    doc["ok"] = nfail == 0
    doc["counts"] = {"pass": npass, "fail": nfail, "skip": nskip}

    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(header)
        for alg, reports in zip(algebras, per_algebra):
            print(f"== algebra n={alg.n} one={alg.one} table={_table_json(alg)}")
            for r in reports:
                print(f"-- {r.name}")
                for line in r.lines(include_timing=args.timings):
                    print(f"   {line}")
        if cross is not None:
            print(f"== {CROSS_SUITE}")
            for line in cross.lines(include_timing=args.timings):
                print(f"   {line}")
        elif CROSS_SUITE in names:
            print(f"== {CROSS_SUITE}")
            print("   [SKIP] cross-survey (needs --enumerate)")
        print(f"RESULT: {verdict} ({npass} passed, {nfail} failed, {nskip} skipped)")
    return OK if nfail == 0 else SEMANTIC_FAIL


def cmd_export(args):
    try:
        alg, bad, labels = _load(args.path)
    except (ParseError, MalformedTableError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return INPUT_ERROR
    if bad:
        print(HilbertAxiomError(bad), file=sys.stderr)
        return SEMANTIC_FAIL
    if args.dot == "hasse":
        text = dot_of_order("hasse", alg.leq, labels)
    elif args.dot == "filters":
        fl = all_filters(alg)
        text = dot_of_order("filters", fl.lattice.leq, [_fset(j, labels) for j in fl.filters])
    else:
        ce = all_closure_endos(alg)
        text = dot_of_order("ce", ce.lattice.leq, [_fmap(f, labels) for f in ce.carrier])
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_enumerate(args):
    try:
        catalog = enumerate_algebras(args.size, bound=args.bound)
    except (ValueError, EnumerationBound) as e:
        print(f"input error: {e}", file=sys.stderr)
        return INPUT_ERROR
    n_impl = sum(e.implication_algebra for e in catalog.entries)
    n_semi = sum(e.implicative_semilattice for e in catalog.entries)
    lines = [
        f"size {args.size}: {len(catalog.entries)} algebra(s) up to isomorphism, "
        f"{catalog.raw_count} raw table(s), {n_impl} implication algebra(s), "
        f"{n_semi} implicative semilattice(s)"
    ]
    for i, e in enumerate(catalog.entries):
        lines.append(
            f"[{i}] filters={e.filter_count} multipliers={e.multiplier_count} "
            f"ce={e.ce_count} implication={e.implication_algebra} "
            f"semilattice={e.implicative_semilattice} table={_table_json(e.algebra)}"
        )
    summary = "\n".join(lines) + "\n"
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for i, e in enumerate(catalog.entries):
            path = os.path.join(args.out_dir, f"algebra_{args.size}_{i:03d}.json")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(dump_algebra(e.algebra))
        with open(os.path.join(args.out_dir, f"summary_{args.size}.txt"), "w", encoding="utf-8") as fh:
            fh.write(summary)
        print(f"wrote {len(catalog.entries)} algebra file(s) to {args.out_dir}")
    else:
        sys.stdout.write(summary)
    return OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hilbertalg",
        description="Finite Hilbert algebra toolkit: validation, analysis, "
        "theorem verification, enumeration and export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a table against the axioms")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="compute structures of one algebra")
    p.add_argument("path")
    p.add_argument("--filters", action="store_true")
    p.add_argument("--multipliers", action="store_true")
    p.add_argument("--ce", action="store_true")
    p.add_argument("--adjoint", action="store_true")
    p.add_argument("--extension", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("path", nargs="?")
    p.add_argument("--enumerate", type=int, metavar="N")
    p.add_argument("--suite", action="append", metavar="NAME",
                   help=f"all or one of: {', '.join(suite_names())}")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="export a lattice as a DOT digraph")
    p.add_argument("path")
    p.add_argument("--dot", choices=["hasse", "ce", "filters"], required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("enumerate", help="enumerate all algebras of a size")
    p.add_argument("size", type=int)
    p.add_argument("--out-dir")
    p.add_argument("--bound", type=int, default=SEARCH_BOUND_DEFAULT)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
