"""Command line front-end.

Exit codes: 0 success; 1 a validation or hypothesis check failed;
2 a step budget ran out; 3 I/O or input format error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .budget import Budget, BudgetExhausted, DEFAULT_LIMIT
from .category import validate_category
from .coverage import check_axioms
from . import document
from .fixtures import FIXTURES, SIEVES, SUBS, fixture, fixture_sieve, \
    fixture_sub
from .kzero import (devissage_check, k0, k0_map_is_isomorphism,
                    localization_check, scissors_congruent)
from .morphisms import check_assembler_morphism, quotient, subassembler_on
from .nerve import diagonal_level_space, homology, truncated_nerve
from .sinks import check_sink_conditions, find_sink, sink_projection
from .wcat import build_w, check_w_properties, pi0_wcat


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits with 2 by default; 2 means "budget" here
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        sys.exit(3)


class _Failure(Exception):
    """A check failed; carries the report payload."""


def _load(path):
    try:
        return document.load(path)
    except document.DocumentError as e:
        print("format error: %s" % e, file=sys.stderr)
        sys.exit(3)
    except OSError as e:
        print("i/o error: %s" % e, file=sys.stderr)
        sys.exit(3)


def _named_objects(sieves, name, what):
    if name not in sieves:
        print("format error: no %s named %r in the document (have: %s)"
              % (what, name, ", ".join(sorted(sieves)) or "none"),
              file=sys.stderr)
        sys.exit(3)
    return sieves[name]


def _emit(payload, as_json):
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2, default=str))
    else:
        for line in payload.get("lines", []):
            print(line)


def _invariants_str(rank, torsion):
    parts = ["Z"] * rank + ["Z/%d" % t for t in torsion]
    return " + ".join(parts) if parts else "0"


def cmd_validate(args, budget):
    asm, _, _ = _load(args.file)
    vrep = validate_category(asm.cat, budget)
    lines = []
    ok = vrep.ok
    for kind, detail in vrep.errors:
        if kind == "composition-missing":
            lines.append("incomplete composition (%s, %s)" % detail)
        else:
            lines.append("%s: %s" % (kind, detail))
    arep = check_axioms(asm, budget)
    for name in ("category_ok", "initial_ok", "axiom_i", "axiom_r",
                 "axiom_m"):
        v = getattr(arep, name)
        lines.append("%s: %s" % (name, "OK" if v is True else v))
        if v is not True:
            ok = False
    payload = {"lines": lines, "ok": ok,
               "category_errors": ["%s: %s" % e for e in vrep.errors],
               "axioms": {n: getattr(arep, n) for n in
                          ("category_ok", "initial_ok", "axiom_i",
                           "axiom_r", "axiom_m")},
               "witnesses": {k: str(v)
                             for k, v in arep.witnesses.items()}}
    if not ok:
        raise _Failure(payload)
    return payload


def cmd_k0(args, budget):
    asm, _, _ = _load(args.file)
    group = k0(asm, args.relations, budget)
    lines = ["rank: %d" % group.rank,
             "torsion: %s" % (list(group.torsion) or "none"),
             "group: %s" % _invariants_str(group.rank, group.torsion)]
    classes = {}
    for obj in sorted(asm.noninitial):
        cls = group.class_of(obj)
        classes[obj] = list(cls)
        lines.append("class [%s] = %s" % (obj, list(cls)))
    rel_lines = []
    for fam in group.families:
        srcs = sorted(asm.cat.src(m) for m in fam.members)
        if srcs == [fam.target]:
            continue  # zero row
        rel_lines.append("%s = %s" % (fam.target, " + ".join(srcs) or "0"))
    for r in sorted(set(rel_lines)):
        lines.append("relation %s" % r)
    return {"lines": lines, "rank": group.rank,
            "torsion": list(group.torsion), "classes": classes,
            "relations": sorted(set(rel_lines))}


def cmd_sc(args, budget):
    asm, _, _ = _load(args.file)
    for obj in (args.a, args.b):
        if obj not in asm.cat.objects:
            print("format error: unknown object %r" % obj, file=sys.stderr)
            sys.exit(3)
    verdict, witness = scissors_congruent(asm, args.a, args.b,
                                          max_pieces=args.depth,
                                          relations=args.relations,
                                          budget=budget)
    lines = ["scissors congruent: %s" % ("YES" if verdict else "no")]
    payload = {"lines": lines, "congruent": verdict}
    if witness is not None:
        fam_a, fam_b, pairing = witness
        lines.append("pieces of %s: %s" % (args.a, list(fam_a.members)))
        lines.append("pieces of %s: %s" % (args.b, list(fam_b.members)))
        for ma, mb in pairing:
            lines.append("  %s ~ %s" % (ma, mb))
        payload["witness"] = {"family_a": list(fam_a.members),
                              "family_b": list(fam_b.members),
                              "pairing": [list(p) for p in pairing]}
    return payload


def cmd_quotient(args, budget):
    asm, sieves, _ = _load(args.file)
    objs = _named_objects(sieves, args.sieve, "sieve")
    q, proj = quotient(asm, objs)
    rep = check_assembler_morphism(proj, budget)
    doc = document.assembler_to_document(q)
    lines = ["quotient objects: %s" % ", ".join(sorted(q.cat.objects)),
             "projection is an assembler morphism: %s"
             % ("OK" if rep.ok else rep.errors)]
    lines.append(json.dumps(doc, sort_keys=True, indent=2))
    payload = {"lines": lines, "document": doc,
               "projection_ok": rep.ok}
    if not rep.ok:
        raise _Failure(payload)
    return payload


def cmd_devissage(args, budget):
    asm, sieves, _ = _load(args.file)
    objs = _named_objects(sieves, args.sub, "object set")
    sub, inc = subassembler_on(asm, objs)
    rep = devissage_check(asm, sub, inc, args.relations, budget)
    lines = ["hypothesis: %s" % ("OK" if rep["hypothesis"] else "FAIL")]
    for obj, fam in sorted(rep["witnesses"].items()):
        lines.append("  %s: %s" % (obj, list(fam.members)
                                   if fam is not None else "NO WITNESS"))
    iso = rep["k0_isomorphism"]
    lines.append("pi0: induced map is %s" %
                 ("an isomorphism" if iso else "NOT an isomorphism"))
    payload = {"lines": lines, "hypothesis": rep["hypothesis"],
               "k0_isomorphism": iso,
               "witnesses": {o: (list(f.members) if f else None)
                             for o, f in rep["witnesses"].items()}}
    if not (rep["hypothesis"] and iso):
        raise _Failure(payload)
    return payload


def cmd_localize(args, budget):
    asm, sieves, _ = _load(args.file)
    objs = _named_objects(sieves, args.sieve, "sieve")
    rep = localization_check(asm, objs, args.relations, budget)
    lines = ["hypothesis checks:",
             "  sieve: %s" % ("OK" if rep["sieve"] else "FAIL")]
    payload = {"lines": lines, "sieve": rep["sieve"]}
    if rep["sieve"]:
        comp = rep["complements"]
        lines.append("  complements hypothesis: %s"
                     % ("OK" if comp else "FAIL"))
        payload["complements"] = comp
        if not comp:
            missing = sorted(
                m for _, wit in rep["complement_witnesses"].values()
                for m, fam in wit.items() if fam is None)
            for m in missing:
                lines.append("    no complement for %s (%s -> %s)"
                             % (m, asm.cat.src(m), asm.cat.tgt(m)))
            payload["missing_complements"] = missing
        lines.append("conclusion checks:")
        lines.append("  coker(K0(D) -> K0(C)): %s"
                     % _invariants_str(*_split(rep["coker_invariants"])))
        lines.append("  K0(C\\D): %s"
                     % _invariants_str(*_split(rep["k0_quotient_invariants"])))
        lines.append("  pi0 exact: %s" % ("OK" if rep["pi0_exact"]
                                          else "FAIL"))
        payload["coker"] = list(rep["coker_invariants"])
        payload["k0_quotient"] = list(rep["k0_quotient_invariants"])
        payload["pi0_exact"] = rep["pi0_exact"]
    ok = rep["sieve"] and payload.get("complements") \
        and payload.get("pi0_exact")
    payload["ok"] = bool(ok)
    if not ok:
        raise _Failure(payload)
    return payload


def _split(invariants):
    rank, torsion = invariants
    return rank, torsion


def cmd_sink_group(args, budget):
    asm, _, _ = _load(args.file)
    sink = find_sink(asm)
    rep = check_sink_conditions(asm, sink, budget)
    lines = ["sink object: %s" % sink]
    conds = {"sink": rep.sink, "epi": rep.epi,
             "singleton_covers": rep.singleton_covers,
             "no_disjoint": rep.no_disjoint}
    for k, v in conds.items():
        lines.append("  %s: %s" % (k, "OK" if v else "FAIL"))
    payload = {"lines": lines, "conditions": conds}
    if not all(conds.values()):
        payload["ok"] = False
        raise _Failure(payload)
    group, sphere, proj, _ = sink_projection(asm, sink=sink, budget=budget)
    lines.append("group order: %d" % group.order)
    morph_ok = check_assembler_morphism(proj, budget).ok
    iso_ok = k0_map_is_isomorphism(proj, budget=budget)
    lines.append("projection is an assembler morphism: %s"
                 % ("OK" if morph_ok else "FAIL"))
    lines.append("pi0: iso %s -> %s: %s"
                 % (_invariants_str(1, ()), _invariants_str(1, ()),
                    "OK" if iso_ok else "FAIL"))
    payload.update({"order": group.order, "projection_ok": morph_ok,
                    "k0_isomorphism": iso_ok, "ok": morph_ok and iso_ok})
    if not payload["ok"]:
        raise _Failure(payload)
    return payload


def cmd_wcat(args, budget):
    asm, _, _ = _load(args.file)
    w = build_w(asm, args.max_tuple)
    rep = check_w_properties(w, budget, sample=args.sample)
    comps = pi0_wcat(w, budget)
    lines = ["objects (tuples up to length %d): %d"
             % (args.max_tuple, len(w.objects())),
             "monomorphisms: %s" % rep.monomorphisms,
             "cospan squares: %s" % rep.cospan_completion,
             "pi0 components: %d" % len(comps)]
    payload = {"lines": lines, "objects": len(w.objects()),
               "monomorphisms": rep.monomorphisms,
               "cospans": rep.cospan_completion, "pi0": len(comps)}
    if rep.monomorphisms is False or rep.cospan_completion is False:
        raise _Failure(payload)
    return payload


def cmd_homology(args, budget):
    asm, _, _ = _load(args.file)
    depth = args.degree + 1
    if args.space == "level0":
        x = truncated_nerve(build_w(asm, args.max_tuple), depth, budget)
    else:
        x = diagonal_level_space(asm, 1, depth, args.max_tuple, budget)
    lines = []
    groups = {}
    for i in range(args.degree + 1):
        rank, torsion = homology(x, i)
        groups[i] = (rank, list(torsion))
        lines.append("H_%d = %s" % (i, _invariants_str(rank, torsion)))
    return {"lines": lines, "space": args.space,
            "simplices": [len(s) for s in x.simplices],
            "homology": {str(i): list(g) for i, g in groups.items()}}


def cmd_fixture(args, budget):
    if args.name not in FIXTURES:
        print("format error: unknown fixture %r (have: %s)"
              % (args.name, ", ".join(sorted(FIXTURES))), file=sys.stderr)
        sys.exit(3)
    asm = fixture(args.name)
    sieves = {}
    if args.name in SIEVES:
        sieves["sieve"] = fixture_sieve(args.name)
    if args.name in SUBS:
        sieves["sub"] = fixture_sub(args.name)
    text = document.dumps(asm, sieves or None)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(text)
        return {"lines": ["wrote %s" % args.emit], "path": args.emit}
    return {"lines": [text.rstrip("\n")], "document": json.loads(text)}


def build_parser():
    p = _Parser(prog="assemblage",
                description="finite assemblers: axioms, K0, quotients, "
                            "sink groups, tuple categories, homology")
    p.add_argument("--budget", type=int,
                   default=int(os.environ.get("ASSEMBLAGE_BUDGET",
                                              DEFAULT_LIMIT)),
                   help="step budget for searches (default %d or "
                        "$ASSEMBLAGE_BUDGET)" % DEFAULT_LIMIT)
    p.add_argument("--json", action="store_true",
                   help="machine-readable output")
    p.add_argument("--seed", type=int, default=0,
                   help="reserved; no semantic effect")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("validate", cmd_validate, help="category laws and axioms")
    sp.add_argument("file")

    sp = add("k0", cmd_k0, help="K0 presentation, rank, torsion, classes")
    sp.add_argument("file")
    sp.add_argument("--relations", choices=["enumerated", "generating"],
                    default="enumerated")

    sp = add("sc", cmd_sc, help="scissors congruence search")
    sp.add_argument("file")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--depth", type=int, default=4,
                    help="maximum pieces per side")
    sp.add_argument("--relations", choices=["enumerated", "generating"],
                    default="enumerated")

    sp = add("quotient", cmd_quotient, help="quotient by a sieve")
    sp.add_argument("file")
    sp.add_argument("--sieve", required=True)

    sp = add("devissage", cmd_devissage,
             help="subassembler covering hypothesis and the induced "
                  "K0 map")
    sp.add_argument("file")
    sp.add_argument("--sub", required=True)
    sp.add_argument("--relations", choices=["enumerated", "generating"],
                    default="enumerated")

    sp = add("localize", cmd_localize,
             help="sieve/complements hypotheses and the K0 cokernel "
                  "comparison")
    sp.add_argument("file")
    sp.add_argument("--sieve", required=True)
    sp.add_argument("--relations", choices=["enumerated", "generating"],
                    default="enumerated")

    sp = add("sink-group", cmd_sink_group,
             help="span group at a sink and the projection")
    sp.add_argument("file")

    sp = add("wcat", cmd_wcat, help="tuple category properties")
    sp.add_argument("file")
    sp.add_argument("--max-tuple", type=int, default=3)
    sp.add_argument("--sample", type=int, default=None,
                    help="cap on cospans checked")

    sp = add("homology", cmd_homology, help="truncated nerve homology")
    sp.add_argument("file")
    sp.add_argument("--space", choices=["level0", "level1"],
                    default="level0")
    sp.add_argument("--degree", type=int, default=1,
                    help="highest degree reported")
    sp.add_argument("--max-tuple", type=int, default=3)

    sp = add("fixture", cmd_fixture, help="emit a built-in example")
    sp.add_argument("name")
    sp.add_argument("--emit", default=None, metavar="OUT_JSON")

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = Budget(args.budget)
    try:
        payload = args.fn(args, budget)
    except BudgetExhausted as e:
        msg = {"error": "budget exhausted", "operation": e.operation,
               "lines": ["budget exhausted during %s" % e.operation]}
        _emit(msg, args.json)
        return 2
    except _Failure as e:
        payload = e.args[0]
        payload["ok"] = False
        _emit(payload, args.json)
        return 1
    payload.setdefault("ok", True)
    _emit(payload, args.json)
    return 0


if __name__ == "__main__":
    sys.exit(main())
