"""Morphisms of assemblers and the standard constructions.

A morphism of assemblers is a functor that preserves the initial object,
sends covering families to covering families, and preserves disjointness.
"""

from __future__ import annotations

from itertools import combinations

from .budget import as_budget
from .category import FiniteCategory, identity_id, initial_morphism_id
from .coverage import (Assembler, CoverFamily,
                       enumerate_disjoint_covering_families,
                       find_disjoint_covering_family)


class AssemblerMorphism:
    def __init__(self, source, target, object_map, morphism_map):
        self.source = source
        self.target = target
        self.object_map = dict(object_map)
        self.morphism_map = dict(morphism_map)

    def __call__(self, mid):
        return self.morphism_map[mid]

    def apply_object(self, obj):
        return self.object_map[obj]

    def __eq__(self, other):
        return (isinstance(other, AssemblerMorphism)
                and self.source == other.source
                and self.target == other.target
                and self.object_map == other.object_map
                and self.morphism_map == other.morphism_map)

    __hash__ = None

    def compose_with(self, other):
        """other after self."""
        assert self.target == other.source
        return AssemblerMorphism(
            self.source, other.target,
            {o: other.object_map[v] for o, v in self.object_map.items()},
            {m: other.morphism_map[v]
             for m, v in self.morphism_map.items()})


class MorphismReport:
    def __init__(self):
        self.errors = []

    @property
    def ok(self):
        return not self.errors

    def add(self, kind, detail):
        self.errors.append((kind, detail))

    def __repr__(self):
        if self.ok:
            return "MorphismReport(ok)"
        return "MorphismReport(%d errors; first: %r)" % (
            len(self.errors), self.errors[0])


def check_assembler_morphism(fn, budget=None):
    """Functoriality, initial preservation, continuity (images of the
    declared and enumerated disjoint covering families cover), and
    disjointness preservation, within budget."""
    budget = as_budget(budget)
    src, tgt = fn.source, fn.target
    report = MorphismReport()
    for o in src.cat.objects:
        if fn.object_map.get(o) not in tgt.cat.objects:
            report.add("object-map", o)
    for m, (a, b) in src.cat.morphisms.items():
        img = fn.morphism_map.get(m)
        if img is None or img not in tgt.cat.morphisms:
            report.add("morphism-map", m)
            continue
        if tgt.cat.morphisms[img] != (fn.object_map[a], fn.object_map[b]):
            report.add("endpoints", m)
    if not report.ok:
        return report
    if fn.object_map[src.initial] != tgt.initial:
        report.add("initial", src.initial)
    for o in src.cat.objects:
        if fn.morphism_map[src.cat.identities[o]] != \
                tgt.cat.identities[fn.object_map[o]]:
            report.add("identity", o)
    for (f, g), h in src.cat.composition.items():
        budget.tick()
        if tgt.cat.compose(fn.morphism_map[f], fn.morphism_map[g]) != \
                fn.morphism_map[h]:
            report.add("composition", (f, g))
    if not report.ok:
        return report
    families = list(src.covers)
    for o in src.cat.objects:
        families.extend(enumerate_disjoint_covering_families(src, o, budget))
    for fam in families:
        image = [fn.morphism_map[m] for m in fam.members]
        if not tgt.is_covering_family(image, fn.object_map[fam.target],
                                      budget):
            report.add("continuity", fam)
    for o in src.cat.objects:
        into = src.cat.into(o)
        budget.tick(len(into) ** 2)
        for f, g in combinations(into, 2):
            if src.are_disjoint(f, g, budget) and not \
                    tgt.are_disjoint(fn.morphism_map[f],
                                     fn.morphism_map[g], budget):
                report.add("disjointness", (f, g))
    return report


def _tag(i, name):
    return "%d:%s" % (i, name)


def coproduct(assemblers, initial="0"):
    """Wedge of assemblers: one fresh initial object, tagged copies of
    everything noninitial. Returns (assembler, [injections])."""
    objects = [initial]
    morphisms = {}
    comp = {}
    covers = []
    injections = []
    for i, asm in enumerate(assemblers):
        cat = asm.cat
        omap = {asm.initial: initial}
        mmap = {}
        for o in asm.noninitial:
            omap[o] = _tag(i, o)
            objects.append(_tag(i, o))
        for m, (a, b) in cat.morphisms.items():
            if cat.is_identity(m):
                mmap[m] = identity_id(omap[a])
            elif a == asm.initial:
                mmap[m] = (identity_id(initial) if b == asm.initial
                           else initial_morphism_id(omap[b]))
            else:
                mmap[m] = _tag(i, m)
                morphisms[_tag(i, m)] = (omap[a], omap[b])
        for (f, g), h in cat.composition.items():
            comp[(mmap[f], mmap[g])] = mmap[h]
        for fam in asm.covers:
            if fam.target == asm.initial:
                continue
            covers.append(CoverFamily(
                omap[fam.target],
                [mmap[m] for m in fam.members
                 if cat.src(m) != asm.initial]))
        injections.append((omap, mmap))
    for o in objects:
        if o != initial:
            morphisms[initial_morphism_id(o)] = (initial, o)
    cat_out = _complete_initial(objects, morphisms, comp, initial)
    out = Assembler(cat_out, initial, covers)
    result_inj = []
    for asm, (omap, mmap) in zip(assemblers, injections):
        result_inj.append(AssemblerMorphism(asm, out, omap, mmap))
    return out, result_inj


def _complete_initial(objects, morphisms, comp, initial):
    """Build the category, filling in composites that involve the unique
    morphisms out of the initial object."""
    cat = FiniteCategory(objects, morphisms, comp)
    full = dict(cat.composition)
    init_of = {o: (identity_id(initial) if o == initial
                   else initial_morphism_id(o)) for o in objects}
    for m, (a, b) in cat.morphisms.items():
        if a == initial:
            # anything after an initial morphism is an initial morphism
            for g in cat.out_of(b):
                full[(m, g)] = init_of[cat.tgt(g)]
    return FiniteCategory(objects, morphisms, full)


def smash_with_pointed_set(points, basepoint, asm, initial="0"):
    """Wedge of one copy of asm per non-base point; returns
    (assembler, {point: injection})."""
    live = [p for p in sorted(points) if p != basepoint]
    out, injections = coproduct([asm] * len(live), initial)
    # retag copies with the point labels for readability of object ids? no:
    # keep integer tags; expose the point -> injection mapping instead.
    return out, dict(zip(live, injections))


def product(a, b):
    """Product assembler; covers are decided by the projection rule:
    a family covers iff each coordinate projection covers.
    Returns (assembler, (proj1, proj2))."""
    def po(x, y):
        return "(%s|%s)" % (x, y)

    objects = [po(x, y) for x in a.cat.objects for y in b.cat.objects]
    morphisms = {}
    pairs = {}
    for f, (fa, fb) in a.cat.morphisms.items():
        for g, (ga, gb) in b.cat.morphisms.items():
            mid = "(%s|%s)" % (f, g)
            morphisms[mid] = (po(fa, ga), po(fb, gb))
            pairs[mid] = (f, g)
    comp = {}
    for m1, (f1, g1) in pairs.items():
        for m2, (f2, g2) in pairs.items():
            if a.cat.tgt(f1) == a.cat.src(f2) and \
                    b.cat.tgt(g1) == b.cat.src(g2):
                comp[(m1, m2)] = "(%s|%s)" % (a.cat.compose(f1, f2),
                                              b.cat.compose(g1, g2))
    # identity ids must follow the id: convention; rename
    rename = {}
    for o in a.cat.objects:
        for p in b.cat.objects:
            rename["(%s|%s)" % (a.cat.identities[o], b.cat.identities[p])] = \
                identity_id(po(o, p))
    morphisms = {rename.get(m, m): st for m, st in morphisms.items()
                 if m not in rename}
    comp = {(rename.get(f, f), rename.get(g, g)): rename.get(h, h)
            for (f, g), h in comp.items()}
    pairs = {rename.get(m, m): fg for m, fg in pairs.items()}
    cat = FiniteCategory(objects, morphisms, comp)
    initial = po(a.initial, b.initial)

    def oracle(asm, members, target):
        left = [pairs[m][0] for m in members]
        right = [pairs[m][1] for m in members]
        ta, tb = None, None
        for o in a.cat.objects:
            for p in b.cat.objects:
                if po(o, p) == target:
                    ta, tb = o, p
        return a.is_covering_family(left, ta) and \
            b.is_covering_family(right, tb)

    out = Assembler(cat, initial, (), cover_oracle=oracle)
    proj1 = AssemblerMorphism(
        out, a,
        {po(x, y): x for x in a.cat.objects for y in b.cat.objects},
        {m: fg[0] for m, fg in pairs.items()})
    proj2 = AssemblerMorphism(
        out, b,
        {po(x, y): y for x in a.cat.objects for y in b.cat.objects},
        {m: fg[1] for m, fg in pairs.items()})
    return out, (proj1, proj2)


def is_sieve(asm, objects):
    """Down-closed class of objects containing the initial object."""
    objects = set(objects)
    if asm.initial not in objects:
        return False
    for m, (a, b) in asm.cat.morphisms.items():
        if b in objects and a not in objects:
            return False
    return True


def has_complements(asm, obj, budget=None):
    """Every morphism out of obj sits inside some finite disjoint
    covering family of its target. Returns (ok, {morphism: family|None})."""
    budget = as_budget(budget)
    witnesses = {}
    ok = True
    for m in asm.cat.out_of(obj):
        if asm.cat.is_identity(m):
            continue
        fam = find_disjoint_covering_family(
            asm, asm.cat.tgt(m), containing=[m], budget=budget)
        witnesses[m] = fam
        if fam is None:
            ok = False
    return ok, witnesses


def quotient(asm, sieve_objects):
    """The assembler C\\D for a sieve D: objects outside D plus the
    initial object; a family covers iff it can be completed to a
    covering family of C by morphisms with domains in D. Covers are
    declared as the D-stripped declared covers of C, which generates
    the same coverage. Returns (quotient assembler, projection)."""
    sieve_objects = set(sieve_objects)
    assert is_sieve(asm, sieve_objects)
    cat = asm.cat
    keep = [o for o in cat.objects
            if o not in sieve_objects or o == asm.initial]
    keep_set = set(keep)
    morphisms = {}
    for m, (a, b) in cat.morphisms.items():
        if a in keep_set and b in keep_set and not cat.is_identity(m):
            morphisms[m] = (a, b)
    comp = {}
    valid = set(morphisms)
    for o in keep:
        valid.add(cat.identities[o])
    for (f, g), h in cat.composition.items():
        if f in valid and g in valid:
            assert h in valid
            comp[(f, g)] = h
    qcat = FiniteCategory(keep, morphisms, comp)
    covers = []
    for fam in asm.covers:
        if fam.target not in keep_set or fam.target == asm.initial:
            continue
        covers.append(CoverFamily(
            fam.target,
            [m for m in fam.members if cat.src(m) in keep_set
             and cat.src(m) != asm.initial]))
    q = Assembler(qcat, asm.initial, covers)
    omap = {o: (o if o in keep_set else asm.initial) for o in cat.objects}
    mmap = {}
    for m, (a, b) in cat.morphisms.items():
        if a in keep_set and b in keep_set:
            mmap[m] = m
        elif b in keep_set:
            mmap[m] = initial_morphism_id(b) if b != asm.initial \
                else identity_id(asm.initial)
        else:
            mmap[m] = identity_id(asm.initial)
    return q, AssemblerMorphism(asm, q, omap, mmap)


def subassembler_on(asm, objects, extra_covers=()):
    """Full subassembler on the given objects (must include the initial
    object), with the inherited declared covers plus extra_covers.
    Returns (sub assembler, inclusion)."""
    objects = set(objects)
    assert asm.initial in objects
    cat = asm.cat
    morphisms = {m: (a, b) for m, (a, b) in cat.morphisms.items()
                 if a in objects and b in objects and not cat.is_identity(m)}
    valid = set(morphisms) | {cat.identities[o] for o in objects}
    comp = {(f, g): h for (f, g), h in cat.composition.items()
            if f in valid and g in valid}
    scat = FiniteCategory(sorted(objects), morphisms, comp)
    covers = [fam for fam in asm.covers
              if fam.target in objects
              and all(cat.src(m) in objects for m in fam.members)]
    covers.extend(extra_covers)
    sub = Assembler(scat, asm.initial, covers)
    inclusion = AssemblerMorphism(
        sub, asm, {o: o for o in objects}, {m: m for m in valid})
    return sub, inclusion


def is_subassembler(asm, sub, inclusion, budget=None):
    """sub is an assembler in its own right and the inclusion is a
    morphism of assemblers."""
    from .coverage import check_axioms
    budget = as_budget(budget)
    report = check_axioms(sub, budget)
    if not report.ok:
        return False
    return check_assembler_morphism(inclusion, budget).ok
