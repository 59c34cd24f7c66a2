"""Command-line front end.

Exit status: 0 on success, 1 when a structure fails its axioms or a proved
claim fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import fields, is_dataclass

from . import __version__
from .claims import (CATALOG, PROVED, SearchReport, Witness, check_all,
                     get_claim, search_counterexamples)
from .congruences import (Partition, check_congruence, class_order,
                          enumerate_semilattice_congruences, quotient,
                          relation_N, smallest_semilattice_congruence)
from .core import (GROUPOID, SEMIGROUP, AxiomError, ElementSet,
                   PoGammaStructure, StructureError, structural_profile,
                   up_set, validate)
from .enumerate import (ALL_COMPATIBLE, DISCRETE_ONLY, EnumConfig,
                        enumerate_structures, random_structure)
from .filters import MAX_SUBSET_SCAN_N, all_filters, is_filter, principal_filter
from .io import hasse_dot, parse_structure, serialize_structure


def jsonable(obj):
    """Plain JSON data for the domain types."""
    if isinstance(obj, PoGammaStructure):
        return {"n": obj.n, "g": obj.g, "kind": obj.kind,
                "op": obj.tables(), "leq": obj.order_rows()}
    if isinstance(obj, ElementSet):
        return obj.tolist()
    if isinstance(obj, Partition):
        return {"class_of": list(obj.class_of), "k": obj.k}
    if isinstance(obj, SearchReport):
        d = {f.name: jsonable(getattr(obj, f.name)) for f in fields(obj) if f.name != "elapsed"}
        d["truncated"] = obj.truncated
        return d
    if is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in fields(obj)
                if f.name != "predicate"}
    if isinstance(obj, bytes):
        return list(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    return obj


def emit_json(data) -> None:
    sys.stdout.write(json.dumps(jsonable(data), sort_keys=True, indent=2, ensure_ascii=False) + "\n")


def _load(path: str, check: bool = True) -> PoGammaStructure:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_structure(text, validate=check)


def _fmt_matrix(rows) -> str:
    return "\n".join("  " + " ".join(str(int(x)) for x in row) for row in rows)


def cmd_validate(args) -> int:
    s = _load(args.file, check=False)
    report = validate(s)
    name = "po-Γ-semigroup" if s.kind == SEMIGROUP else "po-Γ-groupoid"
    if args.json:
        emit_json({"valid": report.ok, "kind": s.kind, "n": s.n, "g": s.g,
                   "violations": [{"axiom": v.axiom, "witness": list(v.witness)} for v in report]})
    elif report.ok:
        print(f"valid {name}, n={s.n} g={s.g}")
    else:
        print(f"invalid {name}: {len(report)} violation(s)")
        for v in report:
            print(f"  {v}")
    return 0 if report.ok else 1


def cmd_profile(args) -> int:
    s = _load(args.file)
    prof = structural_profile(s)
    if args.json:
        emit_json(prof)
    else:
        for f in fields(prof):
            print(f"{f.name}: {str(getattr(prof, f.name)).lower()}")
    return 0


def cmd_filters(args) -> int:
    s = _load(args.file)
    elems = [args.element] if args.element is not None else list(range(s.n))
    for a in elems:
        s.check_element(a)
    data = {"principal": {a: principal_filter(s, a) for a in elems},
            "up_set": {a: up_set(s, a) for a in elems}}
    if s.n <= MAX_SUBSET_SCAN_N:
        data["all_filters"] = all_filters(s)
    if args.json:
        emit_json(data)
        return 0
    for a in elems:
        print(f"N({a})={data['principal'][a]}")
        print(f"[{a})={data['up_set'][a]}")
    if "all_filters" in data:
        print("filters: " + " ".join(map(repr, data["all_filters"])))
    return 0


def cmd_nrel(args) -> int:
    s = _load(args.file)
    p = relation_N(s)
    order = class_order(s, p)
    if args.json:
        emit_json({"partition": p, "class_order": [[int(x) for x in r] for r in order]})
        return 0
    print(f"N classes ({p.k}): {p!r}")
    print("class order (row precedes column):")
    print(_fmt_matrix(order))
    return 0


def cmd_congruences(args) -> int:
    s = _load(args.file)
    congs = enumerate_semilattice_congruences(s)
    checks = [check_congruence(s, p) for p in congs]
    smallest = smallest_semilattice_congruence(s, complete=args.complete)
    if args.json:
        emit_json({"congruences": [{"partition": p, "is_complete": c.is_complete}
                                   for p, c in zip(congs, checks)],
                   "smallest": smallest, "complete": args.complete})
        return 0
    print(f"{len(congs)} semilattice congruence(s):")
    for p, c in zip(congs, checks):
        print(f"  {p!r}" + ("  complete" if c.is_complete else ""))
    label = "smallest complete" if args.complete else "smallest"
    print(f"{label}: {smallest!r}")
    return 0


def _parse_partition(text: str, n: int) -> Partition:
    try:
        labels = [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError:
        raise StructureError(f"--partition must be comma-separated integers, got {text!r}") from None
    if len(labels) != n:
        raise StructureError(f"--partition needs {n} labels, got {len(labels)}")
    return Partition.from_labels(labels)


def cmd_quotient(args) -> int:
    s = _load(args.file)
    p = _parse_partition(args.partition, s.n) if args.partition else relation_N(s)
    q = quotient(s, p)
    qs = q.as_structure()
    qreport = validate(qs)
    rows = []
    for x in range(s.n):
        i = p.class_of[x]
        T = ElementSet.of(q.k, (j for j in range(q.k) if q.precedes(i, j)))
        rows.append({"x": x, "T": T, "is_filter": is_filter(qs, T).verdict})
    if args.json:
        emit_json({"partition": p, "quotient": qs, "quotient_valid": qreport.ok, "T": rows})
        return 0
    print(f"partition: {p!r}")
    print(serialize_structure(qs), end="")
    print(f"quotient validates: {str(qreport.ok).lower()}")
    for r in rows:
        print(f"T(x={r['x']})={r['T']} filter={str(r['is_filter']).lower()}")
    return 0


def _render_witness(w: Witness) -> str:
    parts = [f"elements={w.elements}"]
    if w.partition is not None:
        parts.append(f"partition={w.partition!r}")
    if w.note:
        parts.append(w.note)
    return " ".join(parts)


def cmd_claims(args) -> int:
    s = _load(args.file)
    ids = [get_claim(c).id for c in args.claim] if args.claim else None
    verdicts = check_all(s, ids)
    proved_fail = any(not v.holds and CATALOG[v.claim_id].statement_kind == PROVED for v in verdicts)
    if args.json:
        emit_json(verdicts)
    else:
        for v in verdicts:
            tag = " (vacuous)" if v.vacuous else ""
            line = f"{v.claim_id} [{CATALOG[v.claim_id].statement_kind}]: {v.status}{tag}"
            if v.witness:
                line += "  " + _render_witness(v.witness)
            print(line)
    return 1 if proved_fail else 0


def _cfg(args) -> EnumConfig:
    return EnumConfig(args.n, args.g, DISCRETE_ONLY if args.discrete else ALL_COMPATIBLE,
                      not args.no_dedup, GROUPOID if args.groupoid else SEMIGROUP)


def cmd_search(args) -> int:
    claim = get_claim(args.claim)
    cfg = _cfg(args)
    report = search_counterexamples(claim.id, cfg, limit=args.limit, cumulative=not args.exact_shape,
                                    samples=args.random, seed=args.seed)
    if args.json:
        data = jsonable(report)
        if args.timing:
            data["elapsed"] = round(report.elapsed, 3)
        sys.stdout.write(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        print(f"claim {claim.id} [{claim.statement_kind}]: {claim.statement}")
        print(f"corpus: {report.mode}, n<={cfg.n} g<={cfg.g}, orders={cfg.order_mode}, "
              f"dedup={cfg.iso_dedup}, kind={cfg.kind}")
        print(f"structures_checked: {report.structures_checked}")
        print(f"vacuous: {report.vacuous}")
        print(f"counterexamples: {report.failures}"
              + (f" (showing first {len(report.counterexamples)})" if report.truncated else ""))
        for w in report.counterexamples:
            print("  " + _render_witness(w))
            print("    " + serialize_structure(w.structure).rstrip("\n").replace("\n", "\n    "))
        if args.timing:
            print(f"elapsed: {report.elapsed:.2f}s")
    return 1 if report.failures and claim.statement_kind == PROVED else 0


def cmd_gen(args) -> int:
    cfg = _cfg(args)
    if args.random:
        structures = [random_structure(cfg, args.seed + i) for i in range(args.random)]
    else:
        structures = list(enumerate_structures(cfg))
    docs = [serialize_structure(s) for s in structures]
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        width = max(4, len(str(len(docs))))
        for i, doc in enumerate(docs):
            with open(os.path.join(args.out, f"s{i:0{width}d}.pgs"), "w", encoding="utf-8") as fh:
                fh.write(doc)
        print(f"wrote {len(docs)} structure(s) to {args.out}")
    else:
        sys.stdout.write("---\n".join(docs))
    return 0


def cmd_hasse(args) -> int:
    s = _load(args.file)
    sys.stdout.write(hasse_dot(s))
    return 0


def _shape_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="carrier size")
    p.add_argument("--g", type=int, default=1, help="label count")
    p.add_argument("--discrete", action="store_true", help="discrete orders only")
    p.add_argument("--no-dedup", action="store_true", help="keep isomorphic copies")
    p.add_argument("--groupoid", action="store_true", help="drop associativity")
    p.add_argument("--random", type=int, default=0, metavar="K",
                   help="K seeded random structures instead of exhaustive enumeration")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gammalab",
                                     description="Filters and the relation N on finite ordered Γ-semigroups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, func, help_, file=True):
        p = sub.add_parser(name, help=help_)
        if file:
            p.add_argument("file", help=".pgs file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check every axiom")
    add("profile", cmd_profile, "band / commutative / semilattice / order flags")
    p = add("filters", cmd_filters, "principal filters, up-sets and all filters")
    p.add_argument("--element", type=int)
    add("nrel", cmd_nrel, "the relation N and its class order")
    p = add("congruences", cmd_congruences, "semilattice congruences")
    p.add_argument("--complete", action="store_true", help="smallest complete congruence")
    p = add("quotient", cmd_quotient, "quotient by N or by --partition")
    p.add_argument("--partition", help="comma-separated class labels, e.g. 0,1,1")
    p = add("claims", cmd_claims, "check catalog claims on one structure")
    p.add_argument("--claim", action="append", help="claim id (repeatable)")
    p = add("search", cmd_search, "counterexample search over a corpus", file=False)
    p.add_argument("--claim", required=True)
    _shape_args(p)
    p.add_argument("--exhaustive", action="store_true",
                   help="exhaustive corpus (the default unless --random is given)")
    p.add_argument("--exact-shape", action="store_true",
                   help="only the given n and g instead of every smaller shape")
    p.add_argument("--limit", type=int, default=10, help="counterexamples to keep")
    p.add_argument("--timing", action="store_true", help="report elapsed time")
    p = add("gen", cmd_gen, "emit enumerated or random structures", file=False)
    _shape_args(p)
    p.add_argument("--out", help="directory for one .pgs file per structure")
    add("hasse", cmd_hasse, "Hasse diagram of the order in DOT format")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "random", 0) and getattr(args, "exhaustive", False):
        parser.error("--random and --exhaustive are mutually exclusive")
    try:
        return args.func(args)
    except AxiomError as exc:
        print("axiom violation:", file=sys.stderr)
        for v in exc.report:
            print(f"  {v}", file=sys.stderr)
        return 1
    except (StructureError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # bounds, unknown claim, bad partition and similar misuse
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
