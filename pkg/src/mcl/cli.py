"""Command-line front end: ``mcl check|rank|entail|model|oracle-compare``.

Exit status: 0 success or entailed, 1 not entailed (or a failed check),
2 error or resource limit, 3 vacuous ``mclt`` verdict.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .canonical import DEFAULT_MAX_ATOMS, AtomCapError, SignatureError
from .concepts import concept_names, to_string
from .entailment import InconsistentKBError, Session, classical_verdict
from .kb import TypicalityInclusion, validate
from .parser import KBSyntaxError, load_kb, parse_concept, parse_query
from .ranking import compute_ranks, format_rank
from .tableau import DEFAULT_NODE_LIMIT, ResourceLimitError, TBoxView
from .validation import check_max_atoms, check_mode

EXIT_OK, EXIT_NO, EXIT_ERROR, EXIT_VACUOUS = 0, 1, 2, 3


def _rank_json(r):
    return format_rank(r) if r == float("inf") else int(r)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_check(args) -> int:
    kb = load_kb(args.kb)
    t = TBoxView(kb.strict, args.node_limit)
    consistent = t.abox_consistent(kb.abox)
    diags = validate(kb)
    payload = {
        "consistent": consistent,
        "modules": [m.name for m in kb.modules],
        "defaults": len(kb.defaults),
        "diagnostics": [{"level": d.level, "message": d.message} for d in diags],
    }
    lines = ["consistent" if consistent else "inconsistent"]
    lines += [str(d) for d in diags]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if consistent else EXIT_NO


def cmd_rank(args) -> int:
    kb = load_kb(args.kb)
    rt = compute_ranks(kb, TBoxView(kb.strict, args.node_limit))
    concepts: dict[str, float] = {}
    seen_names: list[str] = []
    for c in kb.concepts():
        for n in sorted(concept_names(c)):
            if n not in seen_names:
                seen_names.append(n)
    for n in seen_names:
        concepts[n] = rt.rank(parse_concept(n))
    for c in rt.concept_rank:
        concepts.setdefault(to_string(c), rt.concept_rank[c])
    for text in args.concept or ():
        c = parse_concept(text)
        concepts[to_string(c)] = rt.rank(c)
    payload = {
        "order": rt.order,
        "concepts": {k: _rank_json(v) for k, v in concepts.items()},
        "defaults": {str(d): _rank_json(r) for d, r in rt.default_rank.items()},
        "sequence": [[str(d) for d in level] for level in rt.sequence],
    }
    lines = [f"order {rt.order}", "concepts:"]
    lines += [f"  {format_rank(v):>3}  {k}" for k, v in concepts.items()]
    lines.append("defaults:")
    lines += [f"  {format_rank(r):>3}  {d}" for d, r in rt.default_rank.items()]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def verdict_json(v, timings: bool = False) -> dict:
    stats = {k: v.stats[k] for k in ("types", "atoms") if k in v.stats}
    if timings and "millis" in v.stats:
        stats["millis"] = v.stats["millis"]
    compliance = None
    if v.t_compliance is not None:
        compliance = {"status": v.t_compliance, "violated": list(v.violated)}
    return {
        "verdict": v.label,
        "entailed": v.entailed,
        "mode": v.mode,
        "query": v.query,
        "tCompliance": compliance,
        "witness": None if v.witness is None else {"type": v.witness, "bits": v.witness_bits},
        "stats": stats,
    }


def cmd_entail(args) -> int:
    kb = load_kb(args.kb)
    mode = check_mode(args.mode, kb)
    q = parse_query(args.query)
    if mode == "classical":
        v = classical_verdict(kb, q, TBoxView(kb.strict, args.node_limit))
    else:
        if not isinstance(q, TypicalityInclusion):
            raise ValueError(f"mode {mode} needs a query of the form T(C) <= D.")
        session = Session(kb, [q], max_atoms=args.max_atoms, node_limit=args.node_limit)
        v = session.entails(q, mode)
    lines = [v.label]
    if v.vacuous:
        lines.append("no T-compliant combined model; violated at the minimal elements:")
        lines += [f"  {d}" for d in v.violated]
    if v.witness_bits is not None:
        true = [k for k, b in v.witness_bits.items() if b]
        lines.append(f"witness type {v.witness}: {', '.join(true)}")
    _emit(args, verdict_json(v, args.timings), "\n".join(lines))
    if v.vacuous:
        return EXIT_VACUOUS
    return EXIT_OK if v.entailed else EXIT_NO


def cmd_model(args) -> int:
    kb = load_kb(args.kb)
    queries = [parse_query(q) for q in args.query or ()]
    s = Session(kb, queries, max_atoms=args.max_atoms, node_limit=args.node_limit)
    dom = s.domain
    n = len(dom)
    show_edges = args.edges == "all" or (args.edges == "auto" and n <= 200)
    modules = {}
    for m in kb.modules:
        pref = s.prefs[m.name]
        subj = dom.extension(m.subject)
        modules[m.name] = {
            "subject": to_string(m.subject),
            "vectors": [list(pref.vector(i)) for i in range(n)],
            "minimal": [int(i) for i in pref.minimal_mask(subj).nonzero()[0]],
            "globalMinimal": [int(i) for i in s.glob.minimal_mask(subj).nonzero()[0]],
        }
    edges = None
    if show_edges:
        edges = []
        for x in range(n):
            for y in range(n):
                if s.glob.less(x, y):
                    why = [m.name for m in kb.modules if s.prefs[m.name].less(x, y)]
                    edges.append([x, y, why])
    payload = {
        "atoms": [to_string(a) for a in dom.atoms],
        "types": [{"id": i, "true": dom.positive_atoms(i)} for i in range(n)],
        "modules": modules,
        "globalEdges": edges,
    }
    lines = [f"{n} types over {len(dom.atoms)} atoms"]
    if n <= 200:
        for i in range(n):
            vecs = " ".join(f"{name}={s.prefs[name].vector(i)}" for name in s.prefs)
            lines.append(f"  t{i}: {{{', '.join(dom.positive_atoms(i))}}} {vecs}")
    for name, info in modules.items():
        lines.append(f"module {name} (subject {info['subject']}):")
        lines.append(f"  <_{name}-minimal subject types: {len(info['minimal'])}")
        lines.append(f"  <-minimal subject types: {len(info['globalMinimal'])}")
    if edges is not None:
        lines.append(f"global order: {len(edges)} edges")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_oracle_compare(args) -> int:
    from .generate import random_prop_kb, random_query
    from .oracle import cross_check

    rng = random.Random(args.seed)
    if args.kb:
        kb = load_kb(args.kb)
        if args.query:
            queries = [parse_query(q) for q in args.query]
        else:
            names = tuple(sorted({n for c in kb.concepts() for n in concept_names(c)})) or ("A",)
            queries = [random_query(rng, names) for _ in range(args.queries)]
        kbs = [(kb, queries)]
    else:
        kbs = []
        for _ in range(args.count):
            kb = random_prop_kb(rng)
            names = tuple(sorted({n for c in kb.concepts() for n in concept_names(c)})) or ("A",)
            kbs.append((kb, [random_query(rng, names) for _ in range(args.queries)]))
    total, disagreements, mismatches = 0, [], []
    for i, (kb, queries) in enumerate(kbs):
        report = cross_check(kb, queries, max_atoms=args.max_atoms)
        total += report.queries
        disagreements += [{"kb": i, "query": q, "engine": e, "oracle": o} for q, e, o in report.disagreements]
        mismatches += [{"kb": i, "default": d, "engine": _rank_json(a), "oracle": _rank_json(b)}
                       for d, a, b in report.rank_mismatches]
    payload = {
        "kbs": len(kbs),
        "queries": total,
        "disagreements": disagreements,
        "rankMismatches": mismatches,
    }
    text = f"{len(kbs)} knowledge bases, {total} queries, {len(disagreements)} disagreements, " \
           f"{len(mismatches)} rank mismatches"
    _emit(args, payload, text)
    return EXIT_OK if not disagreements and not mismatches else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcl", description="Multi-concept lexicographic closure reasoner")
    sub = parser.add_subparsers(dest="command", required=True)
    env_atoms = os.environ.get("MCL_MAX_ATOMS")

    def common(p, kb_required=True):
        p.add_argument("--kb", required=kb_required, help="knowledge base file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--max-atoms",
            type=check_max_atoms,
            default=check_max_atoms(env_atoms) if env_atoms else DEFAULT_MAX_ATOMS,
            help="cap on independent signature atoms (env MCL_MAX_ATOMS)",
        )
        p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT, help="tableau node budget")

    p = sub.add_parser("check", help="classical consistency and KB diagnostics")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("rank", help="rational-closure ranks")
    common(p)
    p.add_argument("--concept", action="append", help="also rank this concept (repeatable)")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("entail", help="answer a query")
    common(p)
    p.add_argument("--query", required=True, help='e.g. "T(PhDStudent) <= Young."')
    p.add_argument("--mode", required=True, help="mcl, mclt, module=<name> or classical")
    p.add_argument("--timings", action="store_true", help="include wall-clock millis in stats")
    p.set_defaults(func=cmd_entail)

    p = sub.add_parser("model", help="dump the canonical combined model")
    common(p)
    p.add_argument("--query", action="append", help="extend the signature with this query (repeatable)")
    p.add_argument("--edges", choices=("auto", "all", "none"), default="auto",
                   help="list global-order edges (auto: only for up to 200 types)")
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("oracle-compare", help="cross-check against the propositional oracle")
    common(p, kb_required=False)
    p.add_argument("--query", action="append", help="query to compare (repeatable)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200, help="random KBs when --kb is absent")
    p.add_argument("--queries", type=int, default=20, help="random queries per KB")
    p.set_defaults(func=cmd_oracle_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ValueError as exc:
        print(f"mcl: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (KBSyntaxError, AtomCapError, SignatureError, ResourceLimitError, InconsistentKBError) as exc:
        print(f"mcl: error: {exc}", file=sys.stderr)
    except KeyError as exc:
        print(f"mcl: error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
    except (OSError, ValueError, TypeError) as exc:
        print(f"mcl: error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
