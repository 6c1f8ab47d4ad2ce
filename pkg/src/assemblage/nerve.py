"""Truncated nerves of tuple categories and integer homology.

A truncated simplicial set stores simplices up to a fixed degree with
explicit face maps; homology is computed from the normalized chain
complex (degenerate simplices quotiented away) by Smith normal form.
H_i is only trusted when simplices up to degree i+1 are present.
"""

from __future__ import annotations

import itertools

from .budget import as_budget
from .snf import invariant_factors, smith_normal_form
from .wcat import WMorphism, pi0_wcat


class TruncatedSimplicialSet:
    """simplices[n]: list of hashable simplices; faces[(n, i)]: dict
    simplex -> (n-1)-simplex; degenerate[n]: set of simplices."""

    def __init__(self, simplices, faces, degenerate):
        self.simplices = [list(s) for s in simplices]
        self.d = len(self.simplices) - 1
        self.faces = faces
        self.degenerate = [set(s) for s in degenerate]

    def face(self, n, i, simplex):
        return self.faces[(n, i)][simplex]

    def nondegenerate(self, n):
        return [s for s in self.simplices[n]
                if s not in self.degenerate[n]]

    def boundary_matrix(self, n):
        """Rows indexed by nondegenerate n-simplices, columns by
        nondegenerate (n-1)-simplices."""
        assert 1 <= n <= self.d
        cols = self.nondegenerate(n - 1)
        col_index = {s: j for j, s in enumerate(cols)}
        rows = []
        for s in self.nondegenerate(n):
            row = [0] * len(cols)
            sign = 1
            for i in range(n + 1):
                f = self.face(n, i, s)
                j = col_index.get(f)
                if j is not None:
                    row[j] += sign
                sign = -sign
            rows.append(row)
        return rows


def boundary_squared_is_zero(x):
    for n in range(2, x.d + 1):
        dn = x.boundary_matrix(n)
        dn1 = x.boundary_matrix(n - 1)
        if not dn or not dn1:
            continue
        cols = len(dn1[0]) if dn1 else 0
        for row in dn:
            acc = [0] * cols
            for k, c in enumerate(row):
                if c:
                    for j, v in enumerate(dn1[k]):
                        acc[j] += c * v
            if any(acc):
                return False
    return True


def _matrix_rank(rows):
    if not rows or not rows[0]:
        return 0
    d, _, _ = smith_normal_form(rows)
    return sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i] != 0)


def homology(x, i):
    """(rank, torsion) of H_i of the normalized complex."""
    assert 0 <= i <= x.d - 1, "one spare degree above i is required"
    n_i = len(x.nondegenerate(i))
    r_i = _matrix_rank(x.boundary_matrix(i)) if i >= 1 else 0
    upper = x.boundary_matrix(i + 1)
    r_up = _matrix_rank(upper)
    torsion = tuple(f for f in invariant_factors(upper) if f > 1) \
        if upper and upper[0] else ()
    return n_i - r_i - r_up, torsion


def _is_identity_w(w, f):
    return f == w.identity(f.source)


def truncated_nerve(w, d, budget=None):
    """Nerve of a tuple category up to degree d: n-simplices are
    composable chains of n morphisms; a chain is degenerate when some
    entry is an identity."""
    budget = as_budget(budget)
    objs = w.objects()
    simplices = [list(objs)]
    degenerate = [set()]
    faces = {}
    mors = []
    out_of = {o: [] for o in objs}
    for a in objs:
        for b in objs:
            budget.tick()
            for f in w.hom(a, b, budget):
                mors.append(f)
                out_of[a].append(f)
    chains = [(f,) for f in mors]
    for n in range(1, d + 1):
        if n > 1:
            nxt = []
            for c in chains:
                for f in out_of[c[-1].target]:
                    budget.tick()
                    nxt.append(c + (f,))
            chains = nxt
        simplices.append(chains)
        degenerate.append(
            set(c for c in chains
                if any(_is_identity_w(w, f) for f in c)))
        for i in range(n + 1):
            fm = {}
            for c in chains:
                if i == 0:
                    fc = c[1:] if n > 1 else c[0].target
                elif i == n:
                    fc = c[:-1] if n > 1 else c[0].source
                else:
                    fc = c[:i - 1] + (w.compose(c[i - 1], c[i]),) \
                        + c[i + 1:]
                fm[c] = fc
            faces[(n, i)] = fm
    return TruncatedSimplicialSet(simplices, faces, degenerate)


def nerve_h0_matches_pi0(w, budget=None):
    budget = as_budget(budget)
    x = truncated_nerve(w, 1, budget)
    rank, torsion = homology(x, 0)
    components = pi0_wcat(w, budget)
    return rank == len(components) and torsion == ()


# ---------------------------------------------------------------------
# Diagonal of the bisimplicial model of the first K-theory space.  The
# level-n category is the n-fold product of the tuple category, with
# the slot playing the role of the non-basepoint cells of the
# simplicial circle.  Circle face i merges slots i and i+1 (by tuple
# concatenation), kills slot 1 when i = 0 and slot n when i = n.


def _concat_w(f, g):
    shift = len(f.target)
    return WMorphism(f.source + g.source, f.target + g.target,
                     f.index_map + tuple(j + shift for j in g.index_map),
                     f.components + g.components)


_EMPTY_W = WMorphism((), (), (), ())


def _circle_face_on_tuple(parts, i, n, concat):
    """parts: tuple of n slot values at level n; returns n-1 slots."""
    assert len(parts) == n
    if i == 0:
        return parts[1:]
    if i == n:
        return parts[:-1]
    return parts[:i - 1] + (concat(parts[i - 1], parts[i]),) \
        + parts[i + 1:]


def _diag_face(w, chain, n, i):
    """Diagonal face: nerve face then the circle-face functor on every
    remaining morphism tuple. chain: tuple of n morphism-tuples."""
    if i == 0:
        body = chain[1:]
    elif i == n:
        body = chain[:-1]
    else:
        body = chain[:i - 1] + (
            tuple(w.compose(f, g)
                  for f, g in zip(chain[i - 1], chain[i])),) \
            + chain[i + 1:]
    return tuple(_circle_face_on_tuple(ft, i, n, _concat_w)
                 for ft in body)


def _diag_degeneracy(w, chain, n, i):
    """s_i: chain of n-1 morphism-tuples at level n-1 -> n tuples at
    level n; inserts an identity chain slot at position i and an empty
    circle slot after position i."""
    if i < len(chain):
        obj = tuple(f.source for f in chain[i])
    else:
        obj = tuple(f.target for f in chain[-1]) if chain else ()
    ident = tuple(w.identity(o) for o in obj)
    widened = []
    for ft in list(chain[:i]) + [ident] + list(chain[i:]):
        widened.append(ft[:i] + (_EMPTY_W,) + ft[i:])
    return tuple(widened)


def diagonal_level_space(asm, k, d, max_tuple=3, budget=None):
    """Truncation of the diagonal of the k-th K-theory space model.
    k = 0 gives the nerve of the tuple category itself; k = 1 builds
    level n as chains in the n-fold product with total tuple length
    bounded by max_tuple."""
    from .wcat import build_w
    budget = as_budget(budget)
    assert k in (0, 1)
    w = build_w(asm, max_tuple)
    if k == 0:
        return truncated_nerve(w, d, budget)

    objs = [o for o in w.objects()]
    point = ()  # the single level-0 object: no non-basepoint cells
    simplices = [[point]]
    degenerate = [set()]
    faces = {}
    level_chains = {0: [point]}
    for n in range(1, d + 1):
        # level-n objects: n slots, total length <= max_tuple
        lvl_objs = [t for t in itertools.product(objs, repeat=n)
                    if sum(len(c) for c in t) <= max_tuple]
        # morphisms between level objects, componentwise
        mors = []
        out_of = {}
        for a in lvl_objs:
            for b in lvl_objs:
                budget.tick()
                per_slot = [w.hom(a[j], b[j], budget) for j in range(n)]
                if any(not h for h in per_slot):
                    continue
                for combo in itertools.product(*per_slot):
                    budget.tick()
                    mors.append(combo)
                    out_of.setdefault(a, []).append(combo)
        chains = [(m,) for m in mors]
        for _ in range(n - 1):
            nxt = []
            for c in chains:
                tgt = tuple(f.target for f in c[-1])
                for m in out_of.get(tgt, []):
                    budget.tick()
                    nxt.append(c + (m,))
            chains = nxt
        level_chains[n] = chains
        simplices.append(chains)
        for i in range(n + 1):
            fm = {}
            for c in chains:
                fm[c] = _diag_face(w, c, n, i) if n > 1 else point
            faces[(n, i)] = fm
        # degenerate iff fixed by some s_i d_i
        degset = set()
        for c in chains:
            for i in range(n):
                lower = faces[(n, i)][c]
                if n == 1:
                    back = _diag_degeneracy(w, (), 1, 0)
                else:
                    back = _diag_degeneracy(w, lower, n, i)
                if back == c:
                    degset.add(c)
                    break
        degenerate.append(degset)
    return TruncatedSimplicialSet(simplices, faces, degenerate)
