"""Assemblers: finite categories with an initial object and covers.

A family of morphisms into a common target is *covering* when it
contains an iterated refinement of a basic family, where the basic
families are the declared covers, identity singletons, and singleton
families of isomorphisms, and refinement replaces a member by its
composites with a covering family of its domain. The empty family
covers the initial object. Membership is decided by a least fixpoint
over the morphisms into the target (see notes in is_covering_family).

Disjointness of a cospan means no cone with noninitial apex exists.
"""

from __future__ import annotations

from itertools import combinations

from .budget import as_budget, Budget
from .category import (FiniteCategory, pack_category, monomorphism_flags,
                       validate_category, initial_morphism_id)


class CoverFamily:
    """A finite family of morphisms sharing a target."""

    def __init__(self, target, members):
        self.target = target
        self.members = tuple(sorted(set(members)))

    def __eq__(self, other):
        return (isinstance(other, CoverFamily) and self.target == other.target
                and self.members == other.members)

    def __hash__(self):
        return hash((self.target, self.members))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return "CoverFamily(%s <= {%s})" % (self.target,
                                            ", ".join(self.members))


class Assembler:
    def __init__(self, cat, initial, covers, cover_oracle=None):
        self.cat = cat
        self.initial = initial
        assert initial in cat.objects
        covers = tuple(covers)
        for fam in covers:
            assert isinstance(fam, CoverFamily)
            for m in fam.members:
                assert cat.tgt(m) == fam.target, fam
        self.covers = covers
        self.cover_oracle = cover_oracle
        self._covers_by_target = {}
        for fam in covers:
            self._covers_by_target.setdefault(fam.target, []).append(fam)
        self._basics = {}
        self._disjoint = {}
        self._cover_cache = {}
        self._clauses = {}
        self._disjoint_done = set()
        self._packed = None

    def __eq__(self, other):
        return (isinstance(other, Assembler) and self.cat == other.cat
                and self.initial == other.initial
                and sorted(self.covers, key=lambda f: (f.target, f.members))
                == sorted(other.covers, key=lambda f: (f.target, f.members)))

    __hash__ = None

    @property
    def noninitial(self):
        return tuple(o for o in self.cat.objects if o != self.initial)

    def declared_covers(self, target=None):
        if target is None:
            return self.covers
        return tuple(self._covers_by_target.get(target, []))

    def noninitial_into(self, target):
        """Morphisms into target whose domain is not initial."""
        return [m for m in self.cat.into(target)
                if self.cat.src(m) != self.initial]

    # -- covering decision ------------------------------------------------

    def _basic_families(self, target):
        """Declared covers (initial-domain members stripped; they refine
        away via the empty cover of the initial object), the identity
        singleton, and singleton isomorphism families."""
        try:
            return self._basics[target]
        except KeyError:
            pass
        cat = self.cat
        basics = []
        for fam in self._covers_by_target.get(target, []):
            basics.append(frozenset(m for m in fam.members
                                    if cat.src(m) != self.initial))
        basics.append(frozenset([cat.identities[target]]))
        for m in self.noninitial_into(target):
            if cat.is_isomorphism(m):
                basics.append(frozenset([m]))
        basics = sorted(set(basics), key=sorted)
        self._basics[target] = basics
        return basics

    def is_covering_family(self, family, target=None, budget=None):
        """Decide whether `family` covers its target.

        The least fixpoint computes the set of morphisms f into the
        target that admit a refinement tree over basic families with all
        leaves in `family`; the family covers iff the identity does.
        """
        if isinstance(family, CoverFamily):
            target = family.target
            members = family.members
        else:
            members = tuple(family)
            if target is None:
                assert members, "target required for the empty family"
                target = self.cat.tgt(members[0])
        if self.cover_oracle is not None:
            return self.cover_oracle(self, frozenset(members), target)
        if target == self.initial:
            return True
        cat = self.cat
        for m in members:
            assert cat.tgt(m) == target
        key = (target, frozenset(members))
        try:
            return self._cover_cache[key]
        except KeyError:
            pass
        budget = as_budget(budget)
        member_set = key[1]
        clauses, by_leaf = self._cover_clauses(target, budget)
        covered = set()
        queue = []
        for f in cat.into(target):
            if f in member_set or cat.src(f) == self.initial:
                covered.add(f)
                queue.append(f)
        # Horn propagation: a clause fires once all its leaves are covered.
        need = [len(leaves) for _, leaves in clauses]
        for c, (head, leaves) in enumerate(clauses):
            if not leaves and head not in covered:
                covered.add(head)
                queue.append(head)
        while queue:
            m = queue.pop()
            for c in by_leaf.get(m, ()):
                budget.tick()
                need[c] -= 1
                if need[c] == 0:
                    head = clauses[c][0]
                    if head not in covered:
                        covered.add(head)
                        queue.append(head)
        result = cat.identities[target] in covered
        self._cover_cache[key] = result
        return result

    def _cover_clauses(self, target, budget):
        """Per-target refinement clauses: f into target is covered once
        every leaf g.f of some basic family of src(f) is covered. Also
        returns the leaf -> clause-index adjacency. Cached; leaves are
        deduplicated per clause."""
        try:
            return self._clauses[target]
        except KeyError:
            pass
        cat = self.cat
        clauses = []
        by_leaf = {}
        for f in cat.into(target):
            for basic in self._basic_families(cat.src(f)):
                budget.tick(len(basic) + 1)
                leaves = frozenset(cat.compose(g, f) for g in basic)
                c = len(clauses)
                clauses.append((f, leaves))
                for m in leaves:
                    by_leaf.setdefault(m, []).append(c)
        self._clauses[target] = (clauses, by_leaf)
        return clauses, by_leaf

    # -- disjointness ------------------------------------------------------

    def are_disjoint(self, f, g, budget=None):
        """No cone with noninitial apex over the cospan (f, g)."""
        cat = self.cat
        assert cat.tgt(f) == cat.tgt(g)
        key = (f, g) if f <= g else (g, f)
        try:
            return self._disjoint[key]
        except KeyError:
            pass
        budget = as_budget(budget)
        found = False
        a, b = cat.src(f), cat.src(g)
        for x in cat.objects:
            if x == self.initial:
                continue
            ps = cat.hom(x, a)
            qs = cat.hom(x, b)
            if not ps or not qs:
                continue
            budget.tick(len(ps) * len(qs))
            for p in ps:
                pf = cat.compose(p, f)
                if any(pf == cat.compose(q, g) for q in qs):
                    found = True
                    break
            if found:
                break
        self._disjoint[key] = not found
        return not found

    def is_disjoint_family(self, family, budget=None):
        members = list(family)
        budget = as_budget(budget)
        return all(self.are_disjoint(f, g, budget)
                   for f, g in combinations(members, 2))


def _precompute_disjointness(asm, target, budget):
    """Fill the pairwise-disjointness cache for all morphisms into
    `target` in one pass through the packed kernel. Idempotent per
    target; repeat calls are free."""
    if target in asm._disjoint_done:
        return
    from ._kernels import disjoint_pair_matrix
    packed = asm._packed
    if packed is None:
        packed = asm._packed = pack_category(asm.cat)
    obj_index = {o: i for i, o in enumerate(packed.obj_ids)}
    noninit = frozenset(obj_index[o] for o in asm.noninitial)
    members = packed.by_tgt.get(obj_index[target], [])
    matrix = disjoint_pair_matrix(packed, obj_index[target], noninit, budget)
    for i, a in enumerate(members):
        ma = packed.mor_ids[a]
        for j in range(i, len(members)):
            mb = packed.mor_ids[members[j]]
            key = (ma, mb) if ma <= mb else (mb, ma)
            asm._disjoint[key] = bool(matrix[i][j])
    asm._disjoint_done.add(target)


def enumerate_disjoint_covering_families(asm, target, budget=None):
    """All pairwise disjoint covering families of `target` whose members
    have noninitial domains. For the initial object this is the empty
    family alone."""
    budget = as_budget(budget)
    if target == asm.initial:
        return [CoverFamily(target, ())]
    candidates = sorted(asm.noninitial_into(target))
    if len(candidates) > 8:
        _precompute_disjointness(asm, target, budget)
    out = []

    def extend(chosen, rest):
        budget.tick()
        if asm.is_covering_family(chosen, target, budget):
            out.append(CoverFamily(target, chosen))
        for i, m in enumerate(rest):
            if all(asm.are_disjoint(m, c, budget) for c in chosen):
                extend(chosen + [m], rest[i + 1:])

    extend([], candidates)
    return out


def find_disjoint_covering_family(asm, target, containing=(),
                                  domains=None, budget=None):
    """First-found disjoint covering family of `target` containing the
    given morphisms, with all (noninitial) domains in `domains` if that
    set is given. Returns a CoverFamily or None; raises BudgetExhausted
    if the search space is not exhausted in time."""
    budget = as_budget(budget)
    cat = asm.cat
    containing = list(containing)
    if not asm.is_disjoint_family(containing, budget):
        return None
    candidates = [m for m in asm.noninitial_into(target)
                  if m not in containing
                  and (domains is None or cat.src(m) in domains)]
    if domains is not None and any(cat.src(m) not in domains
                                   and cat.src(m) != asm.initial
                                   for m in containing):
        return None
    # larger domains first makes the greedy path find partitions quickly
    candidates.sort(key=lambda m: (-len(cat.into(cat.src(m))), m))
    if len(candidates) > 8:
        _precompute_disjointness(asm, target, budget)

    def extend(chosen, rest):
        budget.tick()
        if asm.is_covering_family(chosen, target, budget):
            return CoverFamily(target, chosen)
        for i, m in enumerate(rest):
            if all(asm.are_disjoint(m, c, budget) for c in chosen):
                found = extend(chosen + [m], rest[i + 1:])
                if found is not None:
                    return found
        return None

    return extend(containing, candidates)


def refines(asm, fine, coarse, budget=None):
    """Does every member of `fine` factor through a member of `coarse`?
    Returns a witness dict {fine member: (coarse member, factor)} or None."""
    budget = as_budget(budget)
    cat = asm.cat
    witness = {}
    for h in fine:
        hit = None
        for f in coarse:
            for u in cat.hom(cat.src(h), cat.src(f)):
                budget.tick()
                if cat.compose(u, f) == h:
                    hit = (f, u)
                    break
            if hit:
                break
        if hit is None:
            return None
        witness[h] = hit
    return witness


def common_refinement(asm, fam1, fam2, budget=None):
    """A disjoint covering family refining both, or None.

    Tries the two inputs first (so common_refinement(F, F) is F), then
    searches the enumerated families.
    """
    assert fam1.target == fam2.target
    budget = as_budget(budget)
    if refines(asm, fam1, fam2, budget) is not None and \
            asm.is_disjoint_family(fam1, budget) and \
            asm.is_covering_family(fam1, budget=budget):
        return fam1
    if refines(asm, fam2, fam1, budget) is not None and \
            asm.is_disjoint_family(fam2, budget) and \
            asm.is_covering_family(fam2, budget=budget):
        return fam2
    for cand in enumerate_disjoint_covering_families(asm, fam1.target,
                                                     budget):
        if refines(asm, cand, fam1, budget) is not None and \
                refines(asm, cand, fam2, budget) is not None:
            return cand
    return None


class AxiomReport:
    """Per-axiom verdicts: True, False, or "exhausted"."""

    def __init__(self):
        self.category_ok = None
        self.initial_ok = None
        self.axiom_i = None     # empty family covers the initial object
        self.axiom_r = None     # common refinements exist
        self.axiom_m = None     # every morphism is monic
        self.witnesses = {}

    @property
    def ok(self):
        return all(v is True for v in (self.category_ok, self.initial_ok,
                                       self.axiom_i, self.axiom_r,
                                       self.axiom_m))

    def __repr__(self):
        return ("AxiomReport(category=%s, initial=%s, I=%s, R=%s, M=%s)"
                % (self.category_ok, self.initial_ok, self.axiom_i,
                   self.axiom_r, self.axiom_m))


def check_axioms(asm, budget=None):
    from .budget import BudgetExhausted
    budget = as_budget(budget)
    report = AxiomReport()
    report.category_ok = validate_category(asm.cat, budget).ok
    # exactly one morphism out of the initial object into everything,
    # and none back in from elsewhere
    report.initial_ok = True
    for o in asm.cat.objects:
        if len(asm.cat.hom(asm.initial, o)) != 1:
            report.initial_ok = False
            report.witnesses["initial"] = o
            break
    report.axiom_i = asm.is_covering_family((), asm.initial, budget)
    try:
        report.axiom_m = all(monomorphism_flags(asm.cat, budget).values())
        if not report.axiom_m:
            flags = monomorphism_flags(asm.cat, budget)
            report.witnesses["mono"] = sorted(
                m for m, ok in flags.items() if not ok)
    except BudgetExhausted:
        report.axiom_m = "exhausted"
    try:
        report.axiom_r = True
        for target in asm.noninitial:
            fams = enumerate_disjoint_covering_families(asm, target, budget)
            for f1, f2 in combinations(fams, 2):
                if common_refinement(asm, f1, f2, budget) is None:
                    report.axiom_r = False
                    report.witnesses["refinement"] = (f1, f2)
                    break
            if report.axiom_r is False:
                break
    except BudgetExhausted:
        report.axiom_r = "exhausted"
    return report
