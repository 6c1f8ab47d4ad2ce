"""Pure-Python reference implementations of the hot kernels.

Each function takes a PackedCategory (integer-indexed composition data)
and mirrors the signature of the compiled versions in _speedups.
"""

from __future__ import annotations


def _lookup(packed):
    comp = {}
    fs, gs, hs = packed.comp_f, packed.comp_g, packed.comp_h
    n = packed.n
    for i in range(len(fs)):
        comp[fs[i] * n + gs[i]] = hs[i]
    return comp


def associativity_violation(packed, budget):
    """First (f, g, h) with (h.g).f != h.(g.f), or None."""
    comp = _lookup(packed)
    n = packed.n
    src, tgt = packed.src, packed.tgt
    by_src = packed.by_src
    for f in range(n):
        gs = by_src.get(tgt[f], [])
        budget.tick(len(gs))
        for g in gs:
            gf = comp[f * n + g]
            hs = by_src.get(tgt[g], [])
            budget.tick(len(hs))
            for h in hs:
                if comp[gf * n + h] != comp[f * n + comp[g * n + h]]:
                    return (f, g, h)
    return None


def mono_flags(packed, budget):
    """List of 0/1 per morphism: is it a monomorphism?"""
    comp = _lookup(packed)
    n = packed.n
    src, tgt = packed.src, packed.tgt
    flags = [1] * n
    for x, incoming in packed.by_tgt.items():
        outgoing = packed.by_src.get(x, [])
        if not outgoing:
            continue
        by_source = {}
        for g in incoming:
            by_source.setdefault(src[g], []).append(g)
        for parallel in by_source.values():
            k = len(parallel)
            for i in range(k):
                g = parallel[i]
                for j in range(i + 1, k):
                    h = parallel[j]
                    budget.tick(len(outgoing))
                    for f in outgoing:
                        if flags[f] and \
                                comp[g * n + f] == comp[h * n + f]:
                            flags[f] = 0
    return flags


def disjoint_pair_matrix(packed, target, noninitial, budget):
    """Symmetric 0/1 matrix over the morphisms into `target` (object index):
    entry 1 iff no cone with apex in `noninitial` (a set of object indices)
    exists over the pair."""
    comp = _lookup(packed)
    n = packed.n
    src = packed.src
    members = packed.by_tgt.get(target, [])
    m = len(members)
    hom = {}
    for p in range(n):
        if packed.src[p] in noninitial:
            hom.setdefault((packed.src[p], packed.tgt[p]), []).append(p)
    matrix = [[0] * m for _ in range(m)]
    for i in range(m):
        f = members[i]
        for j in range(i, m):
            g = members[j]
            found = False
            for x in noninitial:
                ps = hom.get((x, src[f]))
                if not ps:
                    continue
                qs = hom.get((x, src[g]))
                if not qs:
                    continue
                budget.tick(len(ps) * len(qs))
                for p in ps:
                    pf = comp[p * n + f]
                    for q in qs:
                        if pf == comp[q * n + g]:
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            if not found:
                matrix[i][j] = matrix[j][i] = 1
    return matrix
