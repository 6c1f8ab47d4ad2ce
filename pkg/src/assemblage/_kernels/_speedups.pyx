# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the composition-table kernels.

Same contracts as _kernels/pure.py; budget ticks are batched per outer
loop iteration so exhaustion is detected with coarse granularity.
The composition table is stored row-sorted: for each f the composable
g's sit in a contiguous segment, found by a short binary search.
"""

import numpy as np
cimport numpy as cnp


cdef inline long _compose(const long[::1] row_start, const int[::1] g_keys,
                          const int[::1] vals, long f, long g) nogil:
    cdef long lo = row_start[f], hi = row_start[f + 1], mid
    while lo < hi:
        mid = (lo + hi) // 2
        if g_keys[mid] < g:
            lo = mid + 1
        else:
            hi = mid
    return vals[lo]


def _tables(packed):
    cache = getattr(packed, "_np", None)
    if cache is None:
        n = packed.n
        comp_f = np.asarray(packed.comp_f, dtype=np.int64)
        comp_g = np.asarray(packed.comp_g, dtype=np.int64)
        order = np.argsort(comp_f * n + comp_g, kind="stable")
        nobj = len(packed.obj_ids)
        cache = {
            "row_start": np.searchsorted(
                np.ascontiguousarray(comp_f[order]),
                np.arange(n + 1, dtype=np.int64)),
            "g_keys": np.ascontiguousarray(
                comp_g[order].astype(np.int32)),
            "vals": np.ascontiguousarray(
                np.asarray(packed.comp_h, dtype=np.int32)[order]),
            "src": np.asarray(packed.src, dtype=np.int32),
            "tgt": np.asarray(packed.tgt, dtype=np.int32),
            "by_src_arr": [np.asarray(packed.by_src.get(o, ()),
                                      dtype=np.int32) for o in range(nobj)],
            "by_tgt_arr": [np.asarray(packed.by_tgt.get(o, ()),
                                      dtype=np.int32) for o in range(nobj)],
        }
        packed._np = cache
    return cache


def associativity_violation(packed, budget):
    t = _tables(packed)
    cdef const long[::1] row_start = t["row_start"]
    cdef const int[::1] g_keys = t["g_keys"]
    cdef const int[::1] vals = t["vals"]
    cdef const int[::1] tgt = t["tgt"]
    cdef long n = packed.n
    by_src_arr = t["by_src_arr"]
    cdef const int[::1] gs, hs
    cdef long f, g, h, gf, hg, i, j
    cdef long steps = 0
    for f in range(n):
        gs = by_src_arr[tgt[f]]
        for i in range(gs.shape[0]):
            g = gs[i]
            gf = _compose(row_start, g_keys, vals, f, g)
            hs = by_src_arr[tgt[g]]
            steps += hs.shape[0]
            for j in range(hs.shape[0]):
                h = hs[j]
                hg = _compose(row_start, g_keys, vals, g, h)
                if _compose(row_start, g_keys, vals, gf, h) != \
                        _compose(row_start, g_keys, vals, f, hg):
                    budget.tick(steps)
                    return (f, g, h)
        budget.tick(steps)
        steps = 0
    return None


def mono_flags(packed, budget):
    t = _tables(packed)
    cdef const long[::1] row_start = t["row_start"]
    cdef const int[::1] g_keys = t["g_keys"]
    cdef const int[::1] vals = t["vals"]
    cdef const int[::1] src = t["src"]
    cdef long n = packed.n
    cdef cnp.ndarray[cnp.int8_t, ndim=1] flags = \
        np.ones(n, dtype=np.int8)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] out_arr, par_arr
    cdef long i, j, k, f, g, h, steps
    for x, incoming in packed.by_tgt.items():
        outgoing = packed.by_src.get(x)
        if not outgoing:
            continue
        out_arr = np.asarray(outgoing, dtype=np.int32)
        by_source = {}
        for g in incoming:
            by_source.setdefault(src[g], []).append(g)
        steps = 0
        for parallel in by_source.values():
            if len(parallel) < 2:
                continue
            par_arr = np.asarray(parallel, dtype=np.int32)
            for i in range(par_arr.shape[0]):
                g = par_arr[i]
                for j in range(i + 1, par_arr.shape[0]):
                    h = par_arr[j]
                    steps += out_arr.shape[0]
                    for k in range(out_arr.shape[0]):
                        f = out_arr[k]
                        if flags[f] and \
                                _compose(row_start, g_keys, vals, g, f) == \
                                _compose(row_start, g_keys, vals, h, f):
                            flags[f] = 0
        budget.tick(steps)
    return flags.tolist()


def disjoint_pair_matrix(packed, target, noninitial, budget):
    t = _tables(packed)
    cdef const long[::1] row_start = t["row_start"]
    cdef const int[::1] g_keys = t["g_keys"]
    cdef const int[::1] vals = t["vals"]
    cdef const int[::1] src = t["src"]
    cdef const int[::1] tgt = t["tgt"]
    cdef long n = packed.n
    hom = {}
    cdef long p
    for p in range(n):
        if src[p] in noninitial:
            hom.setdefault((src[p], tgt[p]), []).append(p)
    members = packed.by_tgt.get(target, [])
    cdef long m = len(members)
    matrix = [[0] * m for _ in range(m)]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] ps_arr, qs_arr
    cdef long i, j, f, g, a, b, pf, steps
    cdef bint found
    for i in range(m):
        f = members[i]
        steps = 0
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
                ps_arr = np.asarray(ps, dtype=np.int32)
                qs_arr = np.asarray(qs, dtype=np.int32)
                steps += ps_arr.shape[0] * qs_arr.shape[0]
                for a in range(ps_arr.shape[0]):
                    pf = _compose(row_start, g_keys, vals, ps_arr[a], f)
                    for b in range(qs_arr.shape[0]):
                        if pf == _compose(row_start, g_keys, vals,
                                          qs_arr[b], g):
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            if not found:
                matrix[i][j] = matrix[j][i] = 1
        budget.tick(steps)
    return matrix
