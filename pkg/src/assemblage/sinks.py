"""Spans into a sink object, and the group they form.

For an assembler with a sink S (every object maps to it), whose
noninitial-domain morphisms are epi and singleton-covering, and with no
disjoint cospans of noninitial sources, the spans (A, f1: A -> S,
f2: A -> S) modulo common-source equivalence form a group, and a choice
of structure morphisms f_A: A -> S induces a projection functor onto the
one-object assembler of that group.
"""

from __future__ import annotations

from itertools import combinations

from .budget import as_budget
from .coverage import CoverFamily
from .morphisms import AssemblerMorphism


class Span:
    """(source, left leg, right leg), both legs into the sink."""

    def __init__(self, source, left, right):
        self.source = source
        self.left = left
        self.right = right

    def key(self):
        return (self.source, self.left, self.right)

    def __eq__(self, other):
        return isinstance(other, Span) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Span(%s; %s, %s)" % self.key()


class SinkConditionsReport:
    def __init__(self):
        self.sink = None
        self.sink_object = None
        self.epi = None
        self.singleton_covers = None
        self.no_disjoint = None
        self.witnesses = {}

    @property
    def ok(self):
        return all(v is True for v in (self.sink, self.epi,
                                       self.singleton_covers,
                                       self.no_disjoint))

    def __repr__(self):
        return ("SinkConditionsReport(sink=%s@%s, epi=%s, singletons=%s, "
                "no_disjoint=%s)" % (self.sink, self.sink_object, self.epi,
                                     self.singleton_covers,
                                     self.no_disjoint))


def find_sink(asm):
    """An object every object maps into, or None."""
    cat = asm.cat
    for s in sorted(asm.noninitial):
        if all(cat.hom(o, s) for o in cat.objects):
            return s
    return None


def check_sink_conditions(asm, sink=None, budget=None):
    budget = as_budget(budget)
    cat = asm.cat
    report = SinkConditionsReport()
    if sink is None:
        sink = find_sink(asm)
    report.sink_object = sink
    report.sink = sink is not None
    if sink is None:
        return report
    # every noninitial-domain morphism is an epimorphism
    report.epi = True
    for f, (a, b) in cat.morphisms.items():
        if a == asm.initial:
            continue
        for c in cat.objects:
            budget.tick(len(cat.hom(b, c)) ** 2)
            for g, h in combinations(cat.hom(b, c), 2):
                if cat.compose(f, g) == cat.compose(f, h):
                    report.epi = False
                    report.witnesses["epi"] = (f, g, h)
    # every noninitial-domain singleton family covers
    report.singleton_covers = True
    for f, (a, b) in cat.morphisms.items():
        if a == asm.initial:
            continue
        budget.tick()
        if not asm.is_covering_family([f], b, budget):
            report.singleton_covers = False
            report.witnesses["singleton"] = f
            break
    # no two morphisms with noninitial domains into a common target
    # are disjoint
    report.no_disjoint = True
    for o in cat.objects:
        into = asm.noninitial_into(o)
        budget.tick(len(into) ** 2)
        for f, g in combinations(into, 2):
            if asm.are_disjoint(f, g, budget):
                report.no_disjoint = False
                report.witnesses["disjoint"] = (f, g)
        if report.no_disjoint is False:
            break
    return report


class SinkGroup:
    """Group of spans into the sink modulo common-source equivalence.

    elements: canonical representative spans; table[(x, y)] follows the
    square-completion product (left leg of x down the left, right leg of
    y down the right).
    """

    def __init__(self, asm, sink, elements, classes, table, identity):
        self.asm = asm
        self.sink = sink
        self.elements = elements
        self._classes = classes
        self.table = table
        self.identity = identity

    def class_of(self, span):
        return self._classes[span.key()]

    def multiply(self, x, y):
        return self.table[(x, y)]

    def inverse(self, x):
        for y in self.elements:
            if self.table[(x, y)] == self.identity and \
                    self.table[(y, x)] == self.identity:
                return y
        raise ValueError("no inverse for %r" % (x,))

    @property
    def order(self):
        return len(self.elements)


def _all_spans(asm, sink):
    cat = asm.cat
    spans = []
    for a in asm.noninitial:
        legs = cat.hom(a, sink)
        for f1 in legs:
            for f2 in legs:
                spans.append(Span(a, f1, f2))
    return spans


def spans_equivalent(asm, s1, s2, budget=None):
    """Is there a noninitial common source making both leg pairs agree?"""
    budget = as_budget(budget)
    cat = asm.cat
    for c in asm.noninitial:
        for p in cat.hom(c, s1.source):
            l1 = cat.compose(p, s1.left)
            r1 = cat.compose(p, s1.right)
            for q in cat.hom(c, s2.source):
                budget.tick()
                if l1 == cat.compose(q, s2.left) and \
                        r1 == cat.compose(q, s2.right):
                    return True
    return False


def complete_square(asm, f, g, budget=None):
    """For f: A -> S, g: B -> S, a noninitial X with p: X -> A,
    q: X -> B and f.p == g.q (exists under the sink conditions)."""
    budget = as_budget(budget)
    cat = asm.cat
    for x in sorted(asm.noninitial):
        for p in cat.hom(x, cat.src(f)):
            fp = cat.compose(p, f)
            for q in cat.hom(x, cat.src(g)):
                budget.tick()
                if fp == cat.compose(q, g):
                    return x, p, q
    return None


def sink_group(asm, sink=None, budget=None):
    """Build the span group; requires the sink conditions (not checked
    here, see check_sink_conditions)."""
    budget = as_budget(budget)
    cat = asm.cat
    if sink is None:
        sink = find_sink(asm)
    assert sink is not None, "no sink object"
    spans = _all_spans(asm, sink)
    # union-find over equivalent spans
    parent = {s.key(): s.key() for s in spans}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for s1, s2 in combinations(spans, 2):
        if spans_equivalent(asm, s1, s2, budget):
            union(s1.key(), s2.key())
    by_key = {s.key(): s for s in spans}
    classes = {k: find(k) for k in parent}
    reps = sorted(set(classes.values()))
    elements = [by_key[k] for k in reps]
    ident = cat.identities[sink]
    identity = by_key[classes[(sink, ident, ident)]]

    def rep_of(span):
        return by_key[classes[span.key()]]

    table = {}
    for x in elements:
        for y in elements:
            done = complete_square(asm, x.right, y.left, budget)
            assert done is not None, "square completion failed"
            c, p, q = done
            prod = Span(c, cat.compose(p, x.left), cat.compose(q, y.right))
            table[(x, y)] = rep_of(prod)
    group = SinkGroup(asm, sink,
                      elements, {k: by_key[v] for k, v in classes.items()},
                      table, rep_of(Span(sink, ident, ident)))
    return group


def group_isomorphism(table_a, table_b):
    """Search for a bijection carrying one multiplication table to the
    other. Tables are {(g, h): gh} over hashable labels. Returns the
    bijection dict or None."""
    elems_a = sorted({g for g, _ in table_a})
    elems_b = sorted({g for g, _ in table_b})
    if len(elems_a) != len(elems_b):
        return None

    def unit(table, elems):
        for e in elems:
            if all(table[(g, e)] == g and table[(e, g)] == g
                   for g in elems):
                return e
        return None

    ua, ub = unit(table_a, elems_a), unit(table_b, elems_b)
    if ua is None or ub is None:
        return None

    def order(table, e, unit_el):
        k, x = 1, e
        while x != unit_el:
            x = table[(x, e)]
            k += 1
        return k

    rest = [e for e in elems_a if e != ua]

    def extend(mapping, remaining):
        if not remaining:
            return dict(mapping)
        g = remaining[0]
        for h in elems_b:
            if h in mapping.values() or \
                    order(table_a, g, ua) != order(table_b, h, ub):
                continue
            mapping[g] = h
            if all(mapping.get(table_a[(x, y)]) ==
                   table_b[(mapping[x], mapping[y])]
                   for x in mapping for y in mapping
                   if table_a[(x, y)] in mapping):
                found = extend(mapping, remaining[1:])
                if found is not None:
                    return found
            del mapping[g]
        return None

    return extend({ua: ub}, rest)


def sink_group_table(group):
    """Multiplication table over span keys, for isomorphism searches."""
    return {(x.key(), y.key()): group.table[(x, y)].key()
            for x in group.elements for y in group.elements}


def sink_projection(asm, structure=None, sink=None, budget=None):
    """Projection onto the one-object assembler of the span group.

    structure: {object: morphism to the sink} with the identity at the
    sink itself (defaults to the lexicographically first hom element).
    Returns (group, sphere assembler, AssemblerMorphism, structure).
    """
    from .fixtures import sphere_group
    budget = as_budget(budget)
    cat = asm.cat
    if sink is None:
        sink = find_sink(asm)
    group = sink_group(asm, sink, budget)
    if structure is None:
        structure = {}
        for o in asm.noninitial:
            structure[o] = cat.identities[sink] if o == sink \
                else sorted(cat.hom(o, sink))[0]
    assert structure[sink] == cat.identities[sink]

    labels = {x.key(): "[%s;%s,%s]" % x.key() for x in group.elements}
    table = {(labels[x.key()], labels[y.key()]):
             labels[group.table[(x, y)].key()]
             for x in group.elements for y in group.elements}
    sphere = sphere_group(table, name="s")
    unit_label = labels[group.identity.key()]

    def sphere_mor(label):
        from .category import identity_id
        return identity_id("pt") if label == unit_label else "s:" + label

    omap = {o: ("0" if o == asm.initial else "pt") for o in cat.objects}
    mmap = {}
    for m, (a, b) in cat.morphisms.items():
        if a == asm.initial:
            from .category import identity_id, initial_morphism_id
            mmap[m] = identity_id("0") if b == asm.initial \
                else initial_morphism_id("pt")
        else:
            span = Span(a, structure[a], cat.compose(m, structure[b]))
            mmap[m] = sphere_mor(labels[group.class_of(span).key()])
    fn = AssemblerMorphism(asm, sphere, omap, mmap)
    return group, sphere, fn, structure


def verify_sink_family_conjugation(asm, structure, phi, psi_objects,
                                   psi_morphisms, sink=None, budget=None):
    """Given an automorphism (psi_objects, psi_morphisms) of the
    assembler and compatible isos phi[A]: A -> psi(A), the projection
    along the transported structure family f'_A = f_{psi(A)} . phi[A]
    agrees with the original projection up to conjugation by the span
    (S, id, phi[S]). Returns a dict report."""
    budget = as_budget(budget)
    cat = asm.cat
    if sink is None:
        sink = find_sink(asm)
    group = sink_group(asm, sink, budget)
    report = {"square": True, "conjugation": True, "failures": []}
    # the transported family f'_A = f_psi(A) . phi_A
    new_structure = {}
    for o in asm.noninitial:
        new_structure[o] = cat.compose(phi[o], structure[psi_objects[o]])
    # the defining squares: phi_S . f_A == f'_A for every A
    phi_s = phi[sink]
    for o in asm.noninitial:
        if cat.compose(structure[o], phi_s) != new_structure[o]:
            report["square"] = False
            report["failures"].append(("square", o))
    conj = Span(sink, cat.identities[sink], phi_s)
    conj_inv = Span(sink, phi_s, cat.identities[sink])
    for m, (a, b) in cat.morphisms.items():
        if a == asm.initial or b == asm.initial:
            continue
        budget.tick()
        new_span = Span(a, new_structure[a],
                        cat.compose(m, new_structure[b]))
        lhs = group.class_of(new_span)
        mid = group.class_of(Span(a, structure[a],
                                  cat.compose(m, structure[b])))
        rhs = group.multiply(group.multiply(
            group.class_of(conj_inv), mid), group.class_of(conj))
        if lhs != rhs:
            report["conjugation"] = False
            report["failures"].append(m)
    return report


def restrict_to_object(asm, u, budget=None):
    """Full subassembler on the objects admitting a morphism to u,
    with the inherited covers. Returns (sub assembler, inclusion)."""
    from .morphisms import subassembler_on
    cat = asm.cat
    objects = [o for o in cat.objects
               if o == asm.initial or cat.hom(o, u)]
    return subassembler_on(asm, objects)


def restriction_span_map(asm, sub, f_u, sink=None, budget=None):
    """The homomorphism from the span group of the restriction to the
    span group of the ambient assembler induced by postcomposition with
    f_u: U -> S: [A; f, g] -> [A; f_u.f, f_u.g].
    Returns (sub group, ambient group, mapping dict)."""
    budget = as_budget(budget)
    cat = asm.cat
    if sink is None:
        sink = find_sink(asm)
    u = cat.src(f_u)
    sub_group = sink_group(sub, u, budget)
    amb_group = sink_group(asm, sink, budget)
    mapping = {}
    for x in sub_group.elements:
        image = Span(x.source, cat.compose(x.left, f_u),
                     cat.compose(x.right, f_u))
        mapping[x] = amb_group.class_of(image)
    return sub_group, amb_group, mapping
