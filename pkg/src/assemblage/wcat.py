"""The category of tuples over an assembler.

Objects are finite tuples of noninitial objects (indexed 1..k, truncated
at max_tuple); a morphism (A_1..A_k) -> (B_1..B_l) is an index map
together with componentwise morphisms A_i -> B_{j(i)} such that every
fiber is a finite disjoint covering family of its target component.
"""

from __future__ import annotations

from itertools import product as iproduct

from .budget import as_budget
from .coverage import CoverFamily


class WMorphism:
    """index_map: tuple, index_map[i] = target slot of source slot i
    (0-based); components[i]: morphism A_i -> B_{index_map[i]}."""

    def __init__(self, source, target, index_map, components):
        self.source = source
        self.target = target
        self.index_map = tuple(index_map)
        self.components = tuple(components)

    def key(self):
        return (self.source, self.target, self.index_map, self.components)

    def __eq__(self, other):
        return isinstance(other, WMorphism) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "WMorphism(%s -> %s; %s; %s)" % (self.source, self.target,
                                                self.index_map,
                                                self.components)


class WCategory:
    def __init__(self, asm, max_tuple=3):
        self.asm = asm
        self.max_tuple = max_tuple
        self._objects = None
        self._hom = {}

    def objects(self):
        if self._objects is None:
            out = [()]
            layer = [()]
            for _ in range(self.max_tuple):
                layer = [t + (o,) for t in layer
                         for o in sorted(self.asm.noninitial)]
                out.extend(layer)
            self._objects = out
        return self._objects

    def identity(self, obj):
        return WMorphism(obj, obj, tuple(range(len(obj))),
                         tuple(self.asm.cat.identities[o] for o in obj))

    def hom(self, a, b, budget=None):
        try:
            return self._hom[(a, b)]
        except KeyError:
            pass
        budget = as_budget(budget)
        asm = self.asm
        cat = asm.cat
        k, l = len(a), len(b)
        out = []
        if k == 0 and l == 0:
            out = [WMorphism(a, b, (), ())]
        elif l == 0 and k > 0:
            out = []
        else:
            empty_ok = [asm.is_covering_family((), o, budget) for o in b]
            for index_map in iproduct(range(l), repeat=k):
                budget.tick()
                fibers = [[i for i in range(k) if index_map[i] == j]
                          for j in range(l)]
                if any(not fibers[j] and not empty_ok[j] for j in range(l)):
                    continue
                choices = [cat.hom(a[i], b[index_map[i]]) for i in range(k)]
                if any(not c for c in choices):
                    continue
                for components in iproduct(*choices):
                    budget.tick()
                    ok = True
                    for j in range(l):
                        fam = [components[i] for i in fibers[j]]
                        if not asm.is_disjoint_family(fam, budget) or \
                                not asm.is_covering_family(fam, b[j],
                                                           budget):
                            ok = False
                            break
                    if ok:
                        out.append(WMorphism(a, b, index_map, components))
        self._hom[(a, b)] = out
        return out

    def compose(self, f, g):
        """g after f."""
        assert f.target == g.source
        index_map = tuple(g.index_map[j] for j in f.index_map)
        components = tuple(
            self.asm.cat.compose(f.components[i],
                                 g.components[f.index_map[i]])
            for i in range(len(f.index_map)))
        return WMorphism(f.source, g.target, index_map, components)

    def endomorphisms(self, obj, budget=None):
        return self.hom(obj, obj, budget)


class WRelCategory(WCategory):
    """Tuples over the quotient C\\D, with only those morphisms whose
    fibers complete to finite disjoint covering families of the ambient
    assembler by morphisms with domains in D."""

    def __init__(self, asm, sieve_objects, max_tuple=3):
        from .morphisms import quotient
        self.ambient = asm
        self.sieve_objects = set(sieve_objects)
        q, proj = quotient(asm, sieve_objects)
        super().__init__(q, max_tuple)
        self.projection = proj

    def _fiber_completable(self, fam, target, budget):
        """fam must be pairwise disjoint in the ambient assembler and
        extendable by sieve-domain morphisms to a disjoint covering
        family there."""
        amb = self.ambient
        if not amb.is_disjoint_family(fam, budget):
            return False
        cat = amb.cat
        candidates = [m for m in amb.noninitial_into(target)
                      if cat.src(m) in self.sieve_objects
                      and all(amb.are_disjoint(m, f, budget) for f in fam)]

        def extend(chosen, rest):
            budget.tick()
            if amb.is_covering_family(chosen, target, budget):
                return True
            for i, m in enumerate(rest):
                if all(amb.are_disjoint(m, c, budget) for c in chosen):
                    if extend(chosen + [m], rest[i + 1:]):
                        return True
            return False

        return extend(list(fam), candidates)

    def hom(self, a, b, budget=None):
        key = ("rel", a, b)
        try:
            return self._hom[key]
        except KeyError:
            pass
        budget = as_budget(budget)
        out = []
        for m in super().hom(a, b, budget):
            ok = True
            for j in range(len(b)):
                fam = [m.components[i] for i in range(len(a))
                       if m.index_map[i] == j]
                if not self._fiber_completable(fam, b[j], budget):
                    ok = False
                    break
            if ok:
                out.append(m)
        self._hom[key] = out
        return out


def build_w(asm, max_tuple=3):
    return WCategory(asm, max_tuple)


def build_w_rel(asm, sieve_objects, max_tuple=3):
    return WRelCategory(asm, sieve_objects, max_tuple)


class WPropertiesReport:
    def __init__(self):
        self.monomorphisms = None
        self.cospan_completion = None
        self.witnesses = {}

    def __repr__(self):
        return "WPropertiesReport(mono=%s, cospans=%s)" % (
            self.monomorphisms, self.cospan_completion)


def check_w_properties(w, budget=None, sample=None):
    """Every morphism of the truncated tuple category is monic, and
    every cospan completes to a commuting square. Verdicts may be
    "exhausted" when the truncation or budget cuts the search short.
    `sample` caps the number of cospans checked."""
    from .budget import BudgetExhausted
    budget = as_budget(budget)
    report = WPropertiesReport()
    objs = w.objects()
    try:
        report.monomorphisms = True
        for a in objs:
            for b in objs:
                for f in w.hom(a, b, budget):
                    for c in objs:
                        arrows = w.hom(c, a, budget)
                        budget.tick(len(arrows) ** 2)
                        for i, g in enumerate(arrows):
                            for h in arrows[i + 1:]:
                                if w.compose(g, f) == w.compose(h, f):
                                    report.monomorphisms = False
                                    report.witnesses["mono"] = (f, g, h)
    except BudgetExhausted:
        report.monomorphisms = "exhausted"
    try:
        report.cospan_completion = True
        checked = 0
        for c in objs:
            for a in objs:
                for b in objs:
                    for f in w.hom(a, c, budget):
                        for g in w.hom(b, c, budget):
                            if sample is not None and checked >= sample:
                                raise BudgetExhausted("cospan sample")
                            checked += 1
                            if not _square_exists(w, f, g, budget):
                                report.cospan_completion = "exhausted"
                                report.witnesses.setdefault(
                                    "cospan", []).append((f, g))
    except BudgetExhausted:
        report.cospan_completion = "exhausted"
    return report


def _square_exists(w, f, g, budget):
    """Some d with morphisms to src(f), src(g) making the square with
    the cospan commute, within the truncation."""
    for d in w.objects():
        for p in w.hom(d, f.source, budget):
            pf = w.compose(p, f)
            for q in w.hom(d, g.source, budget):
                budget.tick()
                if pf == w.compose(q, g):
                    return True
    return False


def wedge_decomposition_check(w, wedge_parts, tags, budget=None):
    """For a coproduct assembler, |Hom| in the tuple category matches the
    product of the per-summand hom sizes (tuples split by summand tag).

    wedge_parts: [WCategory over each summand]; tags(obj) -> summand
    index for each noninitial object of the wedge. Returns (ok, failures).
    """
    budget = as_budget(budget)

    def split(t):
        parts = [[] for _ in wedge_parts]
        for o in t:
            i, original = tags(o)
            parts[i].append(original)
        return [tuple(p) for p in parts]

    failures = []
    objs = w.objects()
    for a in objs:
        for b in objs:
            budget.tick()
            lhs = len(w.hom(a, b, budget))
            rhs = 1
            for part, pa, pb in zip(wedge_parts, split(a), split(b)):
                rhs *= len(part.hom(pa, pb, budget))
            if lhs != rhs:
                failures.append((a, b, lhs, rhs))
    return not failures, failures


def comma_over(w, y, budget=None):
    """Objects of the comma category over y: pairs (x, m: x -> y)."""
    budget = as_budget(budget)
    out = []
    for x in w.objects():
        for m in w.hom(x, y, budget):
            out.append((x, m))
    return out


def comma_is_preorder(w, y, budget=None):
    """At most one morphism between any two objects over y."""
    budget = as_budget(budget)
    objs = comma_over(w, y, budget)
    for (x1, m1) in objs:
        for (x2, m2) in objs:
            budget.tick()
            arrows = [h for h in w.hom(x1, x2, budget)
                      if w.compose(h, m2) == m1]
            if len(arrows) > 1:
                return False, ((x1, m1), (x2, m2), arrows)
    return True, None


def comma_is_cofiltered(w, y, budget=None):
    """Every pair of objects over y admits a common source over y,
    within the truncation. Returns (verdict, witness); verdict may be
    "inconclusive" when nothing is found inside the truncation."""
    budget = as_budget(budget)
    objs = comma_over(w, y, budget)
    for (x1, m1) in objs:
        for (x2, m2) in objs:
            budget.tick()
            found = False
            for (z, mz) in objs:
                if any(w.compose(h, m1) == mz for h in w.hom(z, x1, budget)) \
                        and any(w.compose(h, m2) == mz
                                for h in w.hom(z, x2, budget)):
                    found = True
                    break
            if not found:
                return "inconclusive", ((x1, m1), (x2, m2))
    return True, None


def pi0_wcat(w, budget=None):
    """Connected components of the truncated tuple category."""
    budget = as_budget(budget)
    objs = w.objects()
    parent = {o: o for o in objs}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for a in objs:
        for b in objs:
            budget.tick()
            if a != b and w.hom(a, b, budget):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    return sorted({find(o) for o in objs})
