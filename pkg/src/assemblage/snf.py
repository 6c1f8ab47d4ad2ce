"""Exact integer matrix routines: Smith normal form with transforms.

Matrices are lists of lists of Python ints, so entries never overflow.
All transforms are unimodular; ``U @ A @ V == D`` with D diagonal and
each diagonal entry dividing the next.
"""

from __future__ import annotations


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    cols = len(b[0])
    out = []
    for row in a:
        acc = [0] * cols
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(cols):
                    acc[j] += x * brow[j]
        out.append(acc)
    return out


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, dst, src, q):
    # row[dst] += q * row[src]
    if q:
        rd, rs = m[dst], m[src]
        for j in range(len(rd)):
            rd[j] += q * rs[j]


def _add_col(m, dst, src, q):
    if q:
        for row in m:
            row[dst] += q * row[src]


def smith_normal_form(a):
    """Return (d, u, v) with u*a*v = d in Smith normal form.

    d is returned as the full diagonalized matrix (same shape as a);
    u is rows x rows, v is cols x cols, both unimodular.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d = [list(row) for row in a]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def pivot_search(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = d[i][j]
                if x and (best is None or abs(x) < abs(best[2])):
                    best = (i, j, x)
        return best

    t = 0
    while True:
        found = pivot_search(t)
        if found is None:
            break
        i, j, _ = found
        if i != t:
            _swap_rows(d, t, i)
            _swap_rows(u, t, i)
        if j != t:
            _swap_cols(d, t, j)
            _swap_cols(v, t, j)
        def clear(t):
            # zero out column t and row t away from the pivot; swaps
            # keep the remainder at the pivot, so this terminates by
            # the euclidean descent of |d[t][t]|
            while True:
                dirty = False
                for i in range(rows):
                    if i != t and d[i][t]:
                        q = d[i][t] // d[t][t]
                        _add_row(d, i, t, -q)
                        _add_row(u, i, t, -q)
                        if d[i][t]:
                            _swap_rows(d, t, i)
                            _swap_rows(u, t, i)
                            dirty = True
                for j in range(cols):
                    if j != t and d[t][j]:
                        q = d[t][j] // d[t][t]
                        _add_col(d, j, t, -q)
                        _add_col(v, j, t, -q)
                        if d[t][j]:
                            _swap_cols(d, t, j)
                            _swap_cols(v, t, j)
                            dirty = True
                if not dirty:
                    break

        clear(t)
        # make the pivot divide everything below-right
        while True:
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if d[i][j] % d[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            _add_row(d, t, bad, 1)
            _add_row(u, t, bad, 1)
            clear(t)
        if d[t][t] < 0:
            for row in d:
                row[t] = -row[t]
            for row in v:
                row[t] = -row[t]
        t += 1
        if t == min(rows, cols):
            break
    return d, u, v


def invariant_factors(a):
    """Nonzero diagonal entries of the Smith form of a."""
    if not a or not a[0]:
        return []
    d, _, _ = smith_normal_form(a)
    out = []
    for t in range(min(len(d), len(d[0]))):
        if d[t][t]:
            out.append(d[t][t])
    return out


class Presentation:
    """Finitely presented abelian group Z^n / rowspan(relations)."""

    def __init__(self, n, relations):
        self.n = n
        self.relations = [list(r) for r in relations]
        for r in self.relations:
            assert len(r) == n
        if self.relations:
            d, u, v = smith_normal_form(self.relations)
        else:
            d, u, v = [], [], identity_matrix(n)
        self._v = v
        self._diag = []
        for t in range(min(len(d), n) if d else 0):
            if d[t][t]:
                self._diag.append(d[t][t])

    @property
    def rank(self):
        return self.n - len(self._diag)

    @property
    def torsion(self):
        return tuple(x for x in self._diag if x != 1)

    @property
    def invariants(self):
        """(free rank, torsion coefficients)."""
        return (self.rank, self.torsion)

    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def reduce(self, vec):
        """Canonical coordinates of an element of Z^n in the quotient.

        Coordinates are taken in the Smith basis; torsion coordinates are
        reduced mod the invariant factor, coordinates with factor 1 are
        dropped, free coordinates pass through.
        """
        assert len(vec) == self.n
        coords = [sum(vec[k] * self._v[k][j] for k in range(self.n))
                  for j in range(self.n)]
        out = []
        for j in range(self.n):
            if j < len(self._diag):
                d = self._diag[j]
                if d == 1:
                    continue
                out.append(coords[j] % d)
            else:
                out.append(coords[j])
        return tuple(out)

    def contains(self, vec):
        """Is vec in the relation lattice (i.e. zero in the quotient)?"""
        return all(x == 0 for x in self.reduce(vec))

def map_is_isomorphism(src, dst, mat):
    """Does x -> x @ mat induce an isomorphism src -> dst of presentations?

    mat is src.n x dst.n. Assumes the map is well defined (checked here too).
    """
    for rel in src.relations:
        img = [sum(rel[k] * mat[k][j] for k in range(src.n))
               for j in range(dst.n)]
        if not dst.contains(img):
            return False
    # surjective: images of generators + dst relations span Z^dst.n
    stacked = [list(row) for row in mat] + [list(r) for r in dst.relations]
    facs = invariant_factors(stacked) if stacked else []
    if len(facs) < dst.n or any(abs(f) != 1 for f in facs):
        return False
    # injective: preimage of the dst relation lattice lies in the src lattice
    # solve x @ mat = y @ R_dst, i.e. (x, y) in ker [mat; -R_dst]
    big = [list(row) for row in mat] + \
          [[-x for x in r] for r in dst.relations]
    if big:
        d, u, _ = smith_normal_form(big)
        rank = sum(1 for t in range(min(len(big), dst.n)) if d[t][t])
        for i in range(rank, len(big)):
            x = u[i][:src.n]
            if not src.contains(x):
                return False
    return True
