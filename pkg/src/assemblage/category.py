"""Finite categories given by explicit composition tables.

Objects and morphisms are string ids. The composition table maps a
composable pair (f, g) with tgt(f) == src(g) to the composite g-after-f.
Identity ids use the reserved prefix "id:"; morphisms out of a chosen
initial object use "init:" (see assembler.py / document.py).
"""

from __future__ import annotations

ID_PREFIX = "id:"
INIT_PREFIX = "init:"


def identity_id(obj):
    return ID_PREFIX + obj


def initial_morphism_id(obj):
    return INIT_PREFIX + obj


class ValidationReport:
    def __init__(self):
        self.errors = []

    @property
    def ok(self):
        return not self.errors

    def add(self, kind, detail):
        self.errors.append((kind, detail))

    def __repr__(self):
        if self.ok:
            return "ValidationReport(ok)"
        return "ValidationReport(%d errors; first: %r)" % (
            len(self.errors), self.errors[0])


class FiniteCategory:
    """objects: iterable of ids; morphisms: {mid: (src, tgt)};
    composition: {(f, g): g_after_f} on all non-identity composable pairs
    (identity composites may be omitted; they are filled in here)."""

    def __init__(self, objects, morphisms, composition):
        self.objects = tuple(sorted(objects))
        obj_set = set(self.objects)
        self.morphisms = dict(morphisms)
        self.identities = {}
        for o in self.objects:
            mid = identity_id(o)
            self.morphisms.setdefault(mid, (o, o))
            self.identities[o] = mid
        self.composition = dict(composition)
        for mid, (s, t) in self.morphisms.items():
            assert s in obj_set and t in obj_set, mid
            self.composition.setdefault((self.identities[s], mid), mid)
            self.composition.setdefault((mid, self.identities[t]), mid)
        self._hom = {}
        self._into = {}
        self._out = {}
        for mid in sorted(self.morphisms):
            s, t = self.morphisms[mid]
            self._hom.setdefault((s, t), []).append(mid)
            self._into.setdefault(t, []).append(mid)
            self._out.setdefault(s, []).append(mid)
        self._iso_cache = {}

    def __eq__(self, other):
        return (isinstance(other, FiniteCategory)
                and self.objects == other.objects
                and self.morphisms == other.morphisms
                and self.composition == other.composition)

    __hash__ = None

    def src(self, mid):
        return self.morphisms[mid][0]

    def tgt(self, mid):
        return self.morphisms[mid][1]

    def hom(self, a, b):
        return self._hom.get((a, b), [])

    def into(self, b):
        return self._into.get(b, [])

    def out_of(self, a):
        return self._out.get(a, [])

    def compose(self, f, g):
        """g after f; requires tgt(f) == src(g)."""
        return self.composition[(f, g)]

    def is_identity(self, mid):
        s, t = self.morphisms[mid]
        return s == t and self.identities[s] == mid

    def is_isomorphism(self, mid):
        try:
            return self._iso_cache[mid]
        except KeyError:
            pass
        s, t = self.morphisms[mid]
        ids, idt = self.identities[s], self.identities[t]
        result = any(self.composition.get((mid, g)) == ids
                     and self.composition.get((g, mid)) == idt
                     for g in self.hom(t, s))
        self._iso_cache[mid] = result
        return result

    def isomorphic_objects(self, a, b):
        return a == b or any(self.is_isomorphism(f) for f in self.hom(a, b))


def validate_category(cat, budget=None):
    """Check the category laws; returns a ValidationReport.

    Distinct from axiom checking: this validates the raw table
    (totality of composition, identity laws, associativity).
    """
    from .budget import as_budget
    budget = as_budget(budget)
    report = ValidationReport()
    for o in cat.objects:
        i = cat.identities.get(o)
        if i is None or cat.morphisms.get(i) != (o, o):
            report.add("identity-missing", o)
    for (f, g), h in cat.composition.items():
        if f not in cat.morphisms or g not in cat.morphisms:
            report.add("composition-unknown-morphism", (f, g))
            continue
        if cat.tgt(f) != cat.src(g):
            report.add("composition-not-composable", (f, g))
            continue
        if h not in cat.morphisms or \
                cat.morphisms[h] != (cat.src(f), cat.tgt(g)):
            report.add("composition-bad-endpoints", (f, g, h))
    # totality
    for f, (_, tf) in cat.morphisms.items():
        budget.tick(len(cat.out_of(tf)))
        for g in cat.out_of(tf):
            if (f, g) not in cat.composition:
                report.add("composition-missing", (f, g))
    if not report.ok:
        return report
    # identity laws
    for mid, (s, t) in cat.morphisms.items():
        if cat.compose(cat.identities[s], mid) != mid or \
                cat.compose(mid, cat.identities[t]) != mid:
            report.add("identity-law", mid)
    # associativity, via the packed-table kernel
    from ._kernels import associativity_violation
    packed = pack_category(cat)
    bad = associativity_violation(packed, budget)
    if bad is not None:
        report.add("associativity", tuple(packed.mor_ids[i] for i in bad))
    return report


class PackedCategory:
    """Integer-indexed view of a FiniteCategory for the kernels."""

    def __init__(self, cat):
        self.mor_ids = sorted(cat.morphisms)
        self.index = {m: i for i, m in enumerate(self.mor_ids)}
        n = len(self.mor_ids)
        self.n = n
        self.src = [0] * n
        self.tgt = [0] * n
        obj_index = {o: i for i, o in enumerate(cat.objects)}
        self.obj_ids = list(cat.objects)
        for m, i in self.index.items():
            s, t = cat.morphisms[m]
            self.src[i] = obj_index[s]
            self.tgt[i] = obj_index[t]
        items = sorted((self.index[f], self.index[g], self.index[h])
                       for (f, g), h in cat.composition.items())
        self.comp_f = [x[0] for x in items]
        self.comp_g = [x[1] for x in items]
        self.comp_h = [x[2] for x in items]
        # morphisms grouped by target object, then by source object
        self.by_tgt = {}
        self.by_src = {}
        for i in range(n):
            self.by_tgt.setdefault(self.tgt[i], []).append(i)
            self.by_src.setdefault(self.src[i], []).append(i)


def pack_category(cat):
    if not hasattr(cat, "_packed"):
        cat._packed = PackedCategory(cat)
    return cat._packed


def monomorphism_flags(cat, budget=None):
    """{mid: bool} for every morphism, via the packed kernel."""
    from .budget import as_budget
    from ._kernels import mono_flags
    packed = pack_category(cat)
    flags = mono_flags(packed, as_budget(budget))
    return {packed.mor_ids[i]: bool(flags[i]) for i in range(packed.n)}


def is_monomorphism(cat, mid, budget=None):
    return monomorphism_flags(cat, budget)[mid]


class PullbackCone:
    def __init__(self, apex, left, right):
        self.apex = apex
        self.left = left
        self.right = right

    def __repr__(self):
        return "PullbackCone(%s, %s, %s)" % (self.apex, self.left, self.right)

    def __eq__(self, other):
        return (isinstance(other, PullbackCone) and self.apex == other.apex
                and self.left == other.left and self.right == other.right)


def cones(cat, f, g):
    """All (apex, p, q) with f.p == g.q, for a cospan f: A -> C <- B :g."""
    assert cat.tgt(f) == cat.tgt(g)
    a, b = cat.src(f), cat.src(g)
    out = []
    for x in cat.objects:
        for p in cat.hom(x, a):
            fp = cat.compose(p, f)
            for q in cat.hom(x, b):
                if fp == cat.compose(q, g):
                    out.append((x, p, q))
    return out

def pullback(cat, f, g):
    """The terminal cone over the cospan (f, g), or None."""
    all_cones = cones(cat, f, g)
    for (x, p, q) in all_cones:
        ok = True
        for (y, p2, q2) in all_cones:
            mediators = [m for m in cat.hom(y, x)
                         if cat.compose(m, p) == p2
                         and cat.compose(m, q) == q2]
            if len(mediators) != 1:
                ok = False
                break
        if ok:
            return PullbackCone(x, p, q)
    return None
