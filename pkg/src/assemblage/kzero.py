"""The zeroth K-group of an assembler.

K0 is the free abelian group on the noninitial objects modulo one
relation [A] = sum [A_i] per finite disjoint covering family {A_i -> A};
it is computed by integer Smith normal form so classes get canonical
coordinates and torsion is exact.
"""

from __future__ import annotations

from .budget import as_budget
from .coverage import (CoverFamily, enumerate_disjoint_covering_families,
                       find_disjoint_covering_family)
from .snf import Presentation, map_is_isomorphism


class K0Group:
    def __init__(self, asm, generators, relations, families):
        self.asm = asm
        self.generators = tuple(generators)
        self.index = {g: i for i, g in enumerate(self.generators)}
        self.presentation = Presentation(len(self.generators), relations)
        self.families = tuple(families)

    @property
    def rank(self):
        return self.presentation.rank

    @property
    def torsion(self):
        return self.presentation.torsion

    @property
    def invariants(self):
        return self.presentation.invariants

    def class_of(self, obj):
        """Canonical coordinates of [obj] in the Smith basis."""
        if obj == self.asm.initial:
            return self.zero()
        vec = [0] * len(self.generators)
        vec[self.index[obj]] = 1
        return self.presentation.reduce(vec)

    def class_of_combination(self, coeffs):
        """coeffs: {object: int}; initial objects contribute nothing."""
        vec = [0] * len(self.generators)
        for obj, c in coeffs.items():
            if obj != self.asm.initial:
                vec[self.index[obj]] += c
        return self.presentation.reduce(vec)

    def zero(self):
        return self.presentation.reduce([0] * len(self.generators))

    def __repr__(self):
        return "K0Group(rank=%d, torsion=%s)" % (self.rank,
                                                 list(self.torsion))


def _family_row(k0gens, index, asm, fam):
    row = [0] * len(k0gens)
    row[index[fam.target]] += 1
    for m in fam.members:
        src = asm.cat.src(m)
        if src != asm.initial:
            row[index[src]] -= 1
    return row


def relation_families(asm, relations="enumerated", budget=None):
    """The disjoint covering families whose rows present K0.

    "enumerated": every disjoint covering family of every object.
    "generating": the declared families that are disjoint, plus the
    singleton isomorphism families. This is a cheaper under-approximation:
    every generating family is enumerated, so the enumerated group is a
    quotient of the generating one, but saturation (e.g. disjoint
    supersets of covering families) can impose strictly more relations.
    The modes agree when the declared covers already exhaust the
    saturation modulo the generated subgroup, as in the interval
    fixtures.
    """
    budget = as_budget(budget)
    fams = []
    if relations == "enumerated":
        for o in asm.noninitial:
            fams.extend(enumerate_disjoint_covering_families(asm, o, budget))
    elif relations == "generating":
        seen = set()
        for fam in asm.covers:
            if fam.target == asm.initial or fam in seen:
                continue
            seen.add(fam)
            if asm.is_disjoint_family(fam, budget):
                fams.append(fam)
        cat = asm.cat
        for m, (a, b) in cat.morphisms.items():
            if a != asm.initial and a != b and cat.is_isomorphism(m):
                fam = CoverFamily(b, [m])
                if fam not in seen:
                    seen.add(fam)
                    fams.append(fam)
    else:
        raise ValueError(relations)
    return fams


def k0(asm, relations="enumerated", budget=None):
    budget = as_budget(budget)
    gens = sorted(asm.noninitial)
    index = {g: i for i, g in enumerate(gens)}
    fams = relation_families(asm, relations, budget)
    rows = []
    seen = set()
    for fam in fams:
        row = tuple(_family_row(gens, index, asm, fam))
        if any(row) and row not in seen:
            seen.add(row)
            rows.append(list(row))
    return K0Group(asm, gens, rows, fams)


def k0_map(fn, source_k0=None, target_k0=None, relations="enumerated",
           budget=None):
    """The homomorphism K0(source) -> K0(target) induced by an assembler
    morphism. Returns (matrix, source_k0, target_k0); matrix rows are
    indexed by source generators in generator coordinates of the target."""
    budget = as_budget(budget)
    if source_k0 is None:
        source_k0 = k0(fn.source, relations, budget)
    if target_k0 is None:
        target_k0 = k0(fn.target, relations, budget)
    mat = []
    for g in source_k0.generators:
        row = [0] * len(target_k0.generators)
        img = fn.object_map[g]
        if img != fn.target.initial:
            row[target_k0.index[img]] = 1
        mat.append(row)
    return mat, source_k0, target_k0


def k0_map_is_isomorphism(fn, relations="enumerated", budget=None):
    mat, src, tgt = k0_map(fn, relations=relations, budget=budget)
    return map_is_isomorphism(src.presentation, tgt.presentation, mat)


def scissors_congruent(asm, a, b, max_pieces=4, relations="enumerated",
                       budget=None):
    """Search for a pair of disjoint covering families of a and b of
    equal size whose pieces match up to isomorphism. Returns
    (verdict, witness); witness is (family_a, family_b, pairing) or None.
    A successful witness certifies [a] == [b] in K0."""
    budget = as_budget(budget)
    if a == b:
        ida = asm.cat.identities[a]
        return True, (CoverFamily(a, [ida]), CoverFamily(b, [ida]),
                      [(ida, ida)])
    cat = asm.cat
    fams_a = [f for f in enumerate_disjoint_covering_families(asm, a, budget)
              if len(f) <= max_pieces]
    fams_b = [f for f in enumerate_disjoint_covering_families(asm, b, budget)
              if len(f) <= max_pieces]
    for fa in fams_a:
        for fb in fams_b:
            if len(fa) != len(fb):
                continue
            budget.tick()
            pairing = _match_pieces(cat, list(fa), list(fb), budget)
            if pairing is not None:
                return True, (fa, fb, pairing)
    return False, None


def _match_pieces(cat, members_a, members_b, budget):
    if not members_a:
        return []
    head = members_a[0]
    for i, other in enumerate(members_b):
        budget.tick()
        if cat.isomorphic_objects(cat.src(head), cat.src(other)):
            rest = _match_pieces(cat, members_a[1:],
                                 members_b[:i] + members_b[i + 1:], budget)
            if rest is not None:
                return [(head, other)] + rest
    return None


def devissage_check(asm, sub, inclusion, relations="enumerated",
                    budget=None):
    """Does every object of the ambient assembler admit a finite disjoint
    covering family with domains in the subassembler? If so the inclusion
    induces an equivalence on K-theory; this verifies the hypothesis
    witnesses and the K0 isomorphism. Returns a dict report."""
    budget = as_budget(budget)
    image_objects = set(inclusion.object_map.values())
    witnesses = {}
    ok = True
    for o in asm.noninitial:
        fam = find_disjoint_covering_family(asm, o, domains=image_objects,
                                            budget=budget)
        witnesses[o] = fam
        if fam is None:
            ok = False
    iso = None
    if ok:
        iso = k0_map_is_isomorphism(inclusion, relations, budget)
    return {"hypothesis": ok, "witnesses": witnesses, "k0_isomorphism": iso}


def localization_check(asm, sieve_objects, relations="enumerated",
                       budget=None):
    """pi_0 shadow of the localization sequence K(D) -> K(C) -> K(C\\D).

    Verifies the sieve and complements hypotheses and compares
    coker(K0(D) -> K0(C)) with K0(C\\D) under the induced map.
    Returns a dict report.
    """
    from .morphisms import (is_sieve, has_complements, quotient,
                            subassembler_on)
    budget = as_budget(budget)
    report = {"sieve": is_sieve(asm, sieve_objects)}
    if not report["sieve"]:
        return report
    complements = {}
    comp_ok = True
    for o in sorted(set(sieve_objects) - {asm.initial}):
        ok, wit = has_complements(asm, o, budget)
        complements[o] = (ok, wit)
        if not ok:
            comp_ok = False
    report["complements"] = comp_ok
    report["complement_witnesses"] = complements
    sub, incl = subassembler_on(asm, sieve_objects)
    q, proj = quotient(asm, sieve_objects)
    k0_c = k0(asm, relations, budget)
    k0_d = k0(sub, relations, budget)
    k0_q = k0(q, relations, budget)
    mat, _, _ = k0_map(incl, k0_d, k0_c, relations, budget)
    # cokernel of K0(D) -> K0(C): impose the image rows as relations
    coker_rows = [list(r) for r in k0_c.presentation.relations] + mat
    coker = Presentation(len(k0_c.generators), coker_rows)
    report["coker_invariants"] = coker.invariants
    report["k0_quotient_invariants"] = k0_q.invariants
    # induced map coker -> K0(C\D) on generators
    induced = []
    for g in k0_c.generators:
        row = [0] * len(k0_q.generators)
        img = proj.object_map[g]
        if img != q.initial:
            row[k0_q.index[img]] = 1
        induced.append(row)
    report["pi0_exact"] = map_is_isomorphism(coker, k0_q.presentation,
                                             induced)
    report["quotient"] = q
    report["projection"] = proj
    return report
