"""JSON documents for assemblers.

Keys: "objects", "initial", "morphisms" ([{id, src, tgt}]),
"composition" ([{first, second, result}] with result = second after
first), "covers" ([{target, family}]), optional "sieves" (named object
lists) and "morphism_maps" (named {objects, morphisms} dicts).

Identities ("id:<obj>") and the morphisms out of the initial object
("init:<obj>") are implicit: the loader generates them together with
every composite they take part in, and the exporter omits them. User
ids must stay clear of the two reserved prefixes.
"""

from __future__ import annotations

import json

from .category import ID_PREFIX, INIT_PREFIX
from .coverage import Assembler, CoverFamily
from .fixtures import _with_initial


class DocumentError(ValueError):
    pass


def _require(cond, msg):
    if not cond:
        raise DocumentError(msg)


def _reserved(mid):
    return mid.startswith(ID_PREFIX) or mid.startswith(INIT_PREFIX)


def assembler_to_document(asm, sieves=None, morphism_maps=None):
    cat = asm.cat
    doc = {
        "objects": sorted(cat.objects),
        "initial": asm.initial,
        "morphisms": [],
        "composition": [],
        "covers": [],
    }
    for mid in sorted(cat.morphisms):
        if _reserved(mid):
            continue
        src, tgt = cat.morphisms[mid]
        doc["morphisms"].append({"id": mid, "src": src, "tgt": tgt})
    for (f, g) in sorted(cat.composition):
        if _reserved(f) or _reserved(g):
            continue
        doc["composition"].append({"first": f, "second": g,
                                   "result": cat.composition[(f, g)]})
    for fam in sorted(asm.covers, key=lambda f: (f.target, f.members)):
        doc["covers"].append({"target": fam.target,
                              "family": list(fam.members)})
    if sieves:
        doc["sieves"] = {name: sorted(objs)
                         for name, objs in sieves.items()}
    if morphism_maps:
        doc["morphism_maps"] = {
            name: {"objects": dict(mm["objects"]),
                   "morphisms": dict(mm["morphisms"])}
            for name, mm in morphism_maps.items()}
    return doc


def assembler_from_document(doc):
    """Returns (assembler, sieves, morphism_maps). Raises DocumentError
    on malformed input; semantic problems (incomplete composition,
    axiom failures) are left to the validators."""
    _require(isinstance(doc, dict), "document must be a JSON object")
    for key in ("objects", "initial", "morphisms", "composition",
                "covers"):
        _require(key in doc, "missing key %r" % key)
    objects = doc["objects"]
    _require(isinstance(objects, list) and objects
             and all(isinstance(o, str) for o in objects),
             "objects must be a non-empty array of strings")
    _require(len(set(objects)) == len(objects), "duplicate object id")
    initial = doc["initial"]
    _require(initial in objects, "initial %r is not an object" % initial)

    morphisms = {}
    for ent in doc["morphisms"]:
        _require(isinstance(ent, dict)
                 and set(ent) >= {"id", "src", "tgt"},
                 "morphism entries need id/src/tgt")
        mid, src, tgt = ent["id"], ent["src"], ent["tgt"]
        _require(not _reserved(mid),
                 "morphism id %r uses a reserved prefix" % mid)
        _require(mid not in morphisms, "duplicate morphism id %r" % mid)
        _require(src in objects, "morphism %r: unknown src %r" % (mid, src))
        _require(tgt in objects, "morphism %r: unknown tgt %r" % (mid, tgt))
        _require(src != initial,
                 "morphism %r out of the initial object; those are "
                 "implicit" % mid)
        morphisms[mid] = (src, tgt)

    def known(mid):
        if mid in morphisms:
            return morphisms[mid]
        if mid.startswith(ID_PREFIX):
            o = mid[len(ID_PREFIX):]
            if o in objects:
                return (o, o)
        if mid.startswith(INIT_PREFIX):
            o = mid[len(INIT_PREFIX):]
            if o in objects and o != initial:
                return (initial, o)
        return None

    comp = {}
    for ent in doc["composition"]:
        _require(isinstance(ent, dict)
                 and set(ent) >= {"first", "second", "result"},
                 "composition entries need first/second/result")
        f, g, h = ent["first"], ent["second"], ent["result"]
        _require(f in morphisms, "composition: unknown first %r" % f)
        _require(g in morphisms, "composition: unknown second %r" % g)
        _require(known(h) is not None,
                 "composition: unknown result %r" % h)
        _require(morphisms[f][1] == morphisms[g][0],
                 "composition: (%s, %s) is not composable" % (f, g))
        _require(known(h) == (morphisms[f][0], morphisms[g][1]),
                 "composition: result %r has wrong endpoints" % h)
        _require((f, g) not in comp or comp[(f, g)] == h,
                 "composition: conflicting entries for (%s, %s)" % (f, g))
        comp[(f, g)] = h

    cat = _with_initial(objects, initial, morphisms, comp)

    covers = []
    for ent in doc["covers"]:
        _require(isinstance(ent, dict) and set(ent) >= {"target", "family"},
                 "cover entries need target/family")
        target = ent["target"]
        _require(target in objects, "cover: unknown target %r" % target)
        members = ent["family"]
        _require(isinstance(members, list), "cover family must be a list")
        for m in members:
            _require(m in cat.morphisms, "cover: unknown morphism %r" % m)
            _require(cat.tgt(m) == target,
                     "cover of %r: member %r has target %r"
                     % (target, m, cat.tgt(m)))
        covers.append(CoverFamily(target, members))

    sieves = {}
    for name, objs in (doc.get("sieves") or {}).items():
        _require(isinstance(objs, list), "sieve %r must be a list" % name)
        for o in objs:
            _require(o in objects, "sieve %r: unknown object %r" % (name, o))
        sieves[name] = list(objs)

    morphism_maps = {}
    for name, mm in (doc.get("morphism_maps") or {}).items():
        _require(isinstance(mm, dict) and set(mm) >= {"objects",
                                                      "morphisms"},
                 "morphism map %r needs objects/morphisms" % name)
        morphism_maps[name] = {"objects": dict(mm["objects"]),
                               "morphisms": dict(mm["morphisms"])}

    return Assembler(cat, initial, covers), sieves, morphism_maps


def dumps(asm, sieves=None, morphism_maps=None):
    doc = assembler_to_document(asm, sieves, morphism_maps)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError("invalid JSON: %s" % e)
    return assembler_from_document(doc)


def save(path, asm, sieves=None, morphism_maps=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(asm, sieves, morphism_maps))


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
