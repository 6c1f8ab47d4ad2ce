"""Truncated simplicial assemblers and the cofiber of a map.

Levels are assemblers, faces and degeneracies are assembler morphisms.
The cofiber of g: D -> C has level n equal to C wedge n copies of D
(the copies indexed by the nondegenerate circle cells); all structure
maps are componentwise except d_0, which routes the first copy through
g and shifts the rest down.
"""

from __future__ import annotations

from .budget import as_budget
from .category import identity_id, initial_morphism_id
from .morphisms import AssemblerMorphism, coproduct
from .snf import Presentation


class SimplicialAssembler:
    """levels[n] for 0 <= n <= depth; faces[(n, i)]: level n -> n-1 for
    1 <= n <= depth, 0 <= i <= n; degeneracies[(n, i)]: level n -> n+1
    for 0 <= n < depth, 0 <= i <= n."""

    def __init__(self, levels, faces, degeneracies):
        self.levels = list(levels)
        self.depth = len(self.levels) - 1
        self.faces = dict(faces)
        self.degeneracies = dict(degeneracies)

    def face(self, n, i):
        return self.faces[(n, i)]

    def degeneracy(self, n, i):
        return self.degeneracies[(n, i)]


def check_simplicial_identities(sa, budget=None):
    """All identities that fit inside the truncation; returns a list of
    violated (name, indices) pairs."""
    bad = []

    def eq(f, g, tag):
        if f.object_map != g.object_map or f.morphism_map != g.morphism_map:
            bad.append(tag)

    for n in range(2, sa.depth + 1):
        for j in range(n + 1):
            for i in range(j):
                # d_i d_j = d_{j-1} d_i
                eq(sa.face(n, j).compose_with(sa.face(n - 1, i)),
                   sa.face(n, i).compose_with(sa.face(n - 1, j - 1)),
                   ("dd", n, i, j))
    for n in range(0, sa.depth - 1):
        for i in range(n + 1):
            for j in range(i, n + 1):
                # s_i s_j = s_{j+1} s_i for i <= j
                eq(sa.degeneracy(n, j).compose_with(
                       sa.degeneracy(n + 1, i)),
                   sa.degeneracy(n, i).compose_with(
                       sa.degeneracy(n + 1, j + 1)),
                   ("ss", n, i, j))
    for n in range(1, sa.depth + 1):
        if n - 1 >= sa.depth:
            continue
        for j in range(n):
            for i in range(n + 1):
                lhs = sa.degeneracy(n - 1, j).compose_with(sa.face(n, i))
                if i < j:
                    rhs = sa.face(n - 1, i).compose_with(
                        sa.degeneracy(n - 2, j - 1)) if n >= 2 else None
                elif i in (j, j + 1):
                    rhs = "identity"
                else:
                    rhs = sa.face(n - 1, i - 1).compose_with(
                        sa.degeneracy(n - 2, j)) if n >= 2 else None
                if rhs == "identity":
                    ident = AssemblerMorphism(
                        sa.levels[n - 1], sa.levels[n - 1],
                        {o: o for o in sa.levels[n - 1].cat.objects},
                        {m: m for m in sa.levels[n - 1].cat.morphisms})
                    eq(lhs, ident, ("ds-id", n, i, j))
                elif rhs is not None:
                    eq(lhs, rhs, ("ds", n, i, j))
    return bad


def constant_simplicial(asm, depth):
    ident = AssemblerMorphism(asm, asm,
                              {o: o for o in asm.cat.objects},
                              {m: m for m in asm.cat.morphisms})
    faces = {(n, i): ident for n in range(1, depth + 1)
             for i in range(n + 1)}
    degens = {(n, i): ident for n in range(depth)
              for i in range(n + 1)}
    return SimplicialAssembler([asm] * (depth + 1), faces, degens)


def _collapse_map(src_asm, tgt_asm):
    """Everything to the initial object."""
    omap = {o: tgt_asm.initial for o in src_asm.cat.objects}
    mmap = {m: identity_id(tgt_asm.initial) for m in src_asm.cat.morphisms}
    return omap, mmap


def _wedge_level(base, summand, n):
    """C wedge n copies of D; returns (assembler, injections) with
    injections[0] the C part."""
    out, inj = coproduct([base] + [summand] * n)
    return out, inj


def _level_map(level_src, level_tgt, part_targets):
    """Assembler morphism between wedge levels given, per part of the
    source, either ("inj", injection of the target level) to embed the
    part, ("via", g, injection) to apply g first, or ("collapse", None).
    part_targets[j] handles part j; parts are indexed as in coproduct."""
    omap = {level_src.initial: level_tgt.initial}
    mmap = {}
    src_parts = part_targets

    def map_part(j, inj_src, action):
        part = inj_src.source
        if action[0] == "collapse":
            for o in part.cat.objects:
                omap[inj_src.object_map[o]] = level_tgt.initial
            for m in part.cat.morphisms:
                mmap[inj_src.morphism_map[m]] = \
                    identity_id(level_tgt.initial)
        elif action[0] == "inj":
            inj_tgt = action[1]
            for o in part.cat.objects:
                omap[inj_src.object_map[o]] = inj_tgt.object_map[o]
            for m in part.cat.morphisms:
                mmap[inj_src.morphism_map[m]] = inj_tgt.morphism_map[m]
        else:
            g, inj_tgt = action[1], action[2]
            for o in part.cat.objects:
                omap[inj_src.object_map[o]] = \
                    inj_tgt.object_map[g.object_map[o]]
            for m in part.cat.morphisms:
                mmap[inj_src.morphism_map[m]] = \
                    inj_tgt.morphism_map[g.morphism_map[m]]
        return None

    for j, (inj_src, action) in enumerate(src_parts):
        map_part(j, inj_src, action)
    # remaining: identities and initial morphisms of the source level
    for o in level_src.cat.objects:
        mmap.setdefault(identity_id(o), identity_id(omap[o]))
        if o != level_src.initial:
            img = omap[o]
            mmap.setdefault(
                initial_morphism_id(o),
                identity_id(level_tgt.initial) if img == level_tgt.initial
                else initial_morphism_id(img))
    return AssemblerMorphism(level_src, level_tgt, omap, mmap)


def _circle_face_index(i, j):
    """Circle face d_i on the nondegenerate cell j of level n; returns
    the target cell index (may be 0 = route/collapse slot or n at the
    lower level = collapse)."""
    return j - 1 if i < j else j


def suspension_levels(base, summand, depth, route=None):
    """Shared construction for C wedge (circle smash D): levels and
    structure maps; route is the assembler morphism D -> C used by d_0
    on the first copy (None collapses it, giving the plain smash)."""
    levels = []
    injections = []
    for n in range(depth + 1):
        lvl, inj = _wedge_level(base, summand, n)
        levels.append(lvl)
        injections.append(inj)
    faces = {}
    for n in range(1, depth + 1):
        for i in range(n + 1):
            parts = []
            # part 0: the base, mapped identically
            parts.append((injections[n][0], ("inj", injections[n - 1][0])))
            for j in range(1, n + 1):
                jp = _circle_face_index(i, j)
                if 1 <= jp <= n - 1:
                    parts.append((injections[n][j],
                                  ("inj", injections[n - 1][jp])))
                elif jp == 0 and route is not None:
                    parts.append((injections[n][j],
                                  ("via", route, injections[n - 1][0])))
                else:
                    parts.append((injections[n][j], ("collapse", None)))
            faces[(n, i)] = _level_map(levels[n], levels[n - 1], parts)
    degens = {}
    for n in range(depth):
        for i in range(n + 1):
            parts = [(injections[n][0], ("inj", injections[n + 1][0]))]
            for j in range(1, n + 1):
                jp = j if j <= i else j + 1
                parts.append((injections[n][j],
                              ("inj", injections[n + 1][jp])))
            degens[(n, i)] = _level_map(levels[n], levels[n + 1], parts)
    return SimplicialAssembler(levels, faces, degens)


def circle_smash(asm, depth, base=None):
    """The levelwise smash of the simplicial circle with the assembler,
    wedged onto `base` (defaults to the trivial assembler)."""
    from .fixtures import trivial
    if base is None:
        base = trivial()
    return suspension_levels(base, asm, depth, route=None)


def cofiber(g, depth):
    """The cofiber of the assembler morphism g: D -> C."""
    return suspension_levels(g.target, g.source, depth, route=g)


def k0_simplicial(sa, relations="enumerated", budget=None):
    """pi_0 of the K-theory of a simplicial assembler: the coequalizer
    of the two face maps K0(level 1) -> K0(level 0)."""
    from .kzero import k0, k0_map
    budget = as_budget(budget)
    assert sa.depth >= 1
    k0_zero = k0(sa.levels[0], relations, budget)
    k0_one = k0(sa.levels[1], relations, budget)
    m0, _, _ = k0_map(sa.face(1, 0), k0_one, k0_zero, relations, budget)
    m1, _, _ = k0_map(sa.face(1, 1), k0_one, k0_zero, relations, budget)
    rows = [list(r) for r in k0_zero.presentation.relations]
    for a, b in zip(m0, m1):
        rows.append([x - y for x, y in zip(a, b)])
    return Presentation(len(k0_zero.generators), rows), k0_zero
