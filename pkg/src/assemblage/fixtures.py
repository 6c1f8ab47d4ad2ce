"""Worked assemblers used by the tests and the CLI.

Each builder returns an Assembler; `fixture()` is the registry used by
the CLI. Fixtures that come with a distinguished sieve expose it via the
second return value of `fixture_with_sieve`.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .category import FiniteCategory, identity_id, initial_morphism_id
from .coverage import Assembler, CoverFamily


def _with_initial(objects, initial, morphisms, comp):
    """Add the unique morphisms out of `initial` and their composites."""
    morphisms = dict(morphisms)
    for o in objects:
        if o != initial:
            morphisms[initial_morphism_id(o)] = (initial, o)
    comp = dict(comp)
    cat = FiniteCategory(objects, morphisms, comp)
    full = dict(cat.composition)
    for m, (a, b) in cat.morphisms.items():
        if a == initial:
            for g in cat.out_of(b):
                full[(m, g)] = (identity_id(initial)
                                if cat.tgt(g) == initial
                                else initial_morphism_id(cat.tgt(g)))
    return FiniteCategory(objects, morphisms, full)


def trivial():
    """Just the initial object."""
    cat = FiniteCategory(["0"], {}, {})
    return Assembler(cat, "0", ())


def sphere_group(table, name="g"):
    """Two objects 0 and pt, with Aut(pt) the group given by a
    multiplication table {(g, h): h.g} (apply g first). The group unit
    is identified with the categorical identity of pt."""
    elements = sorted({g for g, _ in table} | {h for _, h in table})
    unit = None
    for e in elements:
        if all(table[(g, e)] == g and table[(e, g)] == g for g in elements):
            unit = e
            break
    assert unit is not None, "not a group table"

    def label(g):
        return identity_id("pt") if g == unit else "%s:%s" % (name, g)

    objects = ["0", "pt"]
    morphisms = {label(g): ("pt", "pt") for g in elements if g != unit}
    comp = {}
    for (g, h), k in table.items():
        if g != unit and h != unit:
            comp[(label(g), label(h))] = label(k)
    cat = _with_initial(objects, "0", morphisms, comp)
    return Assembler(cat, "0", ())


def cyclic_table(n):
    return {(str(a), str(b)): str((a + b) % n)
            for a in range(n) for b in range(n)}


def symmetric_table(n):
    """Multiplication table of the symmetric group on n letters, with
    permutations written as tuples joined by dots; (g, h) -> h after g."""
    elems = list(permutations(range(n)))

    def label(p):
        return ".".join(map(str, p))

    table = {}
    for g in elems:
        for h in elems:
            hg = tuple(h[g[i]] for i in range(n))
            table[(label(g), label(h))] = label(hg)
    return table


def finite_sets(n):
    """Subsets of {1..n} and injections between them; a family covers
    when the images partition the target (declared generators: the
    partitions by literal blocks; isomorphism twists are generated)."""
    assert 1 <= n <= 3
    universe = list(range(1, n + 1))
    subsets = []
    for k in range(n + 1):
        subsets.extend(combinations(universe, k))

    def oname(s):
        return "{%s}" % ",".join(map(str, s))

    def mname(src, tgt, img):
        # injection into tgt sending the i-th element of src to img[i]
        return "inj:%s>%s:(%s)" % (oname(src), oname(tgt),
                                   ",".join(map(str, img)))

    objects = [oname(s) for s in subsets]
    morphisms = {}
    data = {}
    for src in subsets:
        if not src:
            continue
        for tgt in subsets:
            if len(src) > len(tgt):
                continue
            for img in permutations(tgt, len(src)):
                if src == tgt and tuple(img) == src:
                    continue  # identity
                m = mname(src, tgt, img)
                morphisms[m] = (oname(src), oname(tgt))
                data[m] = (src, tgt, dict(zip(src, img)))
    comp = {}
    every = dict(data)
    for src in subsets:
        every[identity_id(oname(src))] = (src, src, {x: x for x in src})
    for m1, (s1, t1, f1) in every.items():
        for m2, (s2, t2, f2) in every.items():
            if t1 != s2:
                continue
            composite = {x: f2[f1[x]] for x in s1}
            img = tuple(composite[x] for x in s1)
            if s1 == t2 and img == s1:
                comp[(m1, m2)] = identity_id(oname(s1))
            else:
                comp[(m1, m2)] = mname(s1, t2, img)
    comp = {k: v for k, v in comp.items()
            if not (k[0].startswith("id:") or k[1].startswith("id:"))}
    cat = _with_initial(objects, oname(()), morphisms, comp)
    covers = []
    for tgt in subsets:
        if not tgt:
            continue
        for part in _set_partitions(list(tgt)):
            if len(part) < 2:
                continue
            members = [mname(tuple(block), tgt, tuple(block))
                       for block in part]
            covers.append(CoverFamily(oname(tgt), members))
    return Assembler(cat, oname(()), covers)


def _set_partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[head]] + part
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]


def open_sets(opens):
    """Poset of open sets of a finite space, ordered by inclusion;
    covering families are generated by binary unions."""
    opens = [frozenset(u) for u in opens]
    assert frozenset() in opens
    names = {u: "{%s}" % ",".join(map(str, sorted(u))) for u in opens}

    def mid(u, v):
        return "sub:%s<%s" % (names[u], names[v])

    morphisms = {}
    for u in opens:
        for v in opens:
            if u < v and u:
                morphisms[mid(u, v)] = (names[u], names[v])

    def arrow(u, v):
        return identity_id(names[u]) if u == v else mid(u, v)

    comp = {}
    for u in opens:
        if not u:
            continue
        for v in opens:
            for w in opens:
                if u < v < w:
                    comp[(mid(u, v), mid(v, w))] = mid(u, w)
    cat = _with_initial(sorted(names.values()),
                        names[frozenset()],
                        morphisms, comp)
    covers = []
    for w in opens:
        if not w:
            continue
        for u in opens:
            for v in opens:
                if u and v and u < w and v < w and u | v == w:
                    covers.append(CoverFamily(
                        names[w], [mid(u, w), mid(v, w)]))
    return Assembler(cat, names[frozenset()], covers)


def sierpinski():
    return open_sets([(), ("a",), ("a", "b")])


def discrete_two_points():
    return open_sets([(), ("a",), ("b",), ("a", "b")])


def preorder5():
    """The five object poset 0 -> A -> B, C -> D whose only declared
    nontrivial cover is {B -> D, C -> D}; its sieve is {0, A}."""
    objects = ["0", "A", "B", "C", "D"]
    above = {"A": ["B", "C", "D"], "B": ["D"], "C": ["D"], "D": []}

    def mid(a, b):
        return "le:%s<%s" % (a, b)

    morphisms = {}
    for a, ups in above.items():
        for b in ups:
            morphisms[mid(a, b)] = (a, b)

    def arrow(a, b):
        return identity_id(a) if a == b else mid(a, b)

    comp = {}
    for a in ["A", "B", "C", "D"]:
        for b in [a] + above[a]:
            for c in ([b] + above[b]):
                if a == b and b == c:
                    continue
                comp[(arrow(a, b), arrow(b, c))] = arrow(a, c)
    cat = _with_initial(objects, "0", morphisms, comp)
    return Assembler(cat, "0",
                     [CoverFamily("D", [mid("B", "D"), mid("C", "D")])])


def preorder5_sieve():
    return ["0", "A"]


def poset_sink():
    """0 < C < A, B < S with every noninitial singleton declared
    covering; satisfies the sink/epi/no-disjointness conditions."""
    objects = ["0", "C", "A", "B", "S"]
    above = {"C": ["A", "B", "S"], "A": ["S"], "B": ["S"], "S": []}

    def mid(a, b):
        return "le:%s<%s" % (a, b)

    morphisms = {}
    for a, ups in above.items():
        for b in ups:
            morphisms[mid(a, b)] = (a, b)

    def arrow(a, b):
        return identity_id(a) if a == b else mid(a, b)

    comp = {}
    for a in ["C", "A", "B", "S"]:
        for b in [a] + above[a]:
            for c in ([b] + above[b]):
                if a == b and b == c:
                    continue
                comp[(arrow(a, b), arrow(b, c))] = arrow(a, c)
    cat = _with_initial(objects, "0", morphisms, comp)
    covers = [CoverFamily(b, [mid(a, b)])
              for a, ups in above.items() for b in ups]
    return Assembler(cat, "0", covers)


# -- one dimensional polytopes ---------------------------------------------

def _seg_name(a, b, lt, rt):
    if a == b:
        return "pt(%d)" % a
    return "%s%d,%d%s" % ("[" if lt else "(", a, b, "]" if rt else ")")


def _contains(outer, inner):
    """Closed/open interval containment; intervals are (a, b, lt, rt)
    in lattice units, points are (a, a, True, True)."""
    a, b, lt, rt = outer
    c, d, lc, rc = inner
    if c < a or d > b:
        return False
    if c == a and lc and not lt:
        return False
    if d == b and rc and not rt:
        return False
    return True


def intervals(n, m, variant="total", reflections=False):
    """Lattice polytopes in [0, m] with vertices in (1/n)Z, morphisms the
    lattice translations (and reflections, if enabled) mapping the source
    into the target. Endpoints are stored in lattice units (multiples
    of 1/n). variant="classical": closed intervals only. variant="total":
    points and all four interval types, with the point objects forming
    the distinguished sieve."""
    assert variant in ("classical", "total")
    top = n * m
    segs = []
    if variant == "total":
        for p in range(top + 1):
            segs.append((p, p, True, True))
    for a in range(top + 1):
        for b in range(a + 1, top + 1):
            if variant == "classical":
                segs.append((a, b, True, True))
            else:
                for lt in (True, False):
                    for rt in (True, False):
                        segs.append((a, b, lt, rt))
    names = {s: _seg_name(*s) for s in segs}
    objects = ["0"] + sorted(names.values())

    def moved(seg, kind, t):
        a, b, lt, rt = seg
        if kind == "t":
            return (a + t, b + t, lt, rt)
        return (t - b, t - a, rt, lt)

    def mid(kind, t, src, tgt):
        return "%s%d:%s>%s" % (kind, t, names[src], names[tgt])

    kinds = ["t"] + (["r"] if reflections else [])
    morphisms = {}
    data = {}
    for src in segs:
        for tgt in segs:
            for kind in kinds:
                lo = tgt[0] - src[0] if kind == "t" else tgt[0] + src[0]
                hi = tgt[1] - src[1] if kind == "t" else tgt[1] + src[1]
                for t in range(min(lo, hi), max(lo, hi) + 1):
                    if not _contains(tgt, moved(src, kind, t)):
                        continue
                    if kind == "t" and t == 0 and src == tgt:
                        continue  # identity
                    m = mid(kind, t, src, tgt)
                    morphisms[m] = (names[src], names[tgt])
                    data[m] = (src, tgt, kind, t)
    every = dict(data)
    for s in segs:
        every[identity_id(names[s])] = (s, s, "t", 0)
    out_by_src = {}
    for m2, (s2, t2, k2, u2) in every.items():
        out_by_src.setdefault(s2, []).append((m2, t2, k2, u2))
    comp = {}
    for m1, (s1, t1, k1, u1) in every.items():
        for m2, t2, k2, u2 in out_by_src.get(t1, ()):
            # apply (k1, u1) first, then (k2, u2)
            if k2 == "t":
                kind, t = k1, u1 + u2
            else:
                kind = "r" if k1 == "t" else "t"
                t = u2 - u1
            if kind == "t" and t == 0 and s1 == t2:
                comp[(m1, m2)] = identity_id(names[s1])
            else:
                comp[(m1, m2)] = mid(kind, t, s1, t2)
    comp = {k: v for k, v in comp.items()
            if not (k[0].startswith("id:") or k[1].startswith("id:"))}
    cat = _with_initial(objects, "0", morphisms, comp)
    covers = []
    for tgt in segs:
        a, b, lt, rt = tgt
        if a == b:
            continue
        if variant == "classical":
            for c in range(a + 1, b):
                covers.append(CoverFamily(names[tgt], [
                    mid("t", 0, (a, c, True, True), tgt),
                    mid("t", 0, (c, b, True, True), tgt)]))
        else:
            for c in range(a, b + 1):
                left_open = (a, c, lt, False)
                left_closed = (a, c, lt, True)
                point = (c, c, True, True)
                right_open = (c, b, False, rt)
                right_closed = (c, b, True, rt)
                options = [
                    [left_open, point, right_open],
                    [left_closed, right_open],
                    [left_open, right_closed],
                ]
                for pieces in options:
                    members = []
                    ok = True
                    for piece in pieces:
                        if piece[0] == piece[1] and piece != point:
                            continue  # empty side
                        if piece[0] > piece[1] or piece == tgt:
                            ok = False
                            break
                        if not _contains(tgt, piece):
                            ok = False
                            break
                        members.append(mid("t", 0, piece, tgt))
                    if ok and len(members) >= 2:
                        covers.append(CoverFamily(names[tgt], members))
    return Assembler(cat, "0", covers)


def intervals_sieve(n, m):
    """The point objects of intervals(n, m, "total")."""
    return ["0"] + ["pt(%d)" % p for p in range(n * m + 1)]


def seg_length(obj_id):
    """Lattice length of an interval fixture object id (points are 0)."""
    if obj_id.startswith("pt(") or obj_id == "0":
        return 0
    body = obj_id[1:-1]
    a, b = body.split(",")
    return int(b) - int(a)


def seg_euler(obj_id):
    """Combinatorial Euler characteristic: closed 1, half-open 0,
    open -1, point 1."""
    if obj_id == "0":
        return 0
    if obj_id.startswith("pt("):
        return 1
    return (1 if obj_id[0] == "[" else 0) + \
        (1 if obj_id[-1] == "]" else 0) - 1


FIXTURES = {
    "trivial": trivial,
    "sphere-1": lambda: sphere_group(cyclic_table(1)),
    "sphere-z2": lambda: sphere_group(cyclic_table(2)),
    "sphere-s3": lambda: sphere_group(symmetric_table(3)),
    "finite-sets-2": lambda: finite_sets(2),
    "finite-sets-3": lambda: finite_sets(3),
    "sierpinski": sierpinski,
    "discrete-2": discrete_two_points,
    "preorder5": preorder5,
    "poset-sink": poset_sink,
    "intervals-1-2-classical": lambda: intervals(1, 2, "classical"),
    "intervals-1-2-total": lambda: intervals(1, 2, "total"),
    "intervals-2-3-classical": lambda: intervals(2, 3, "classical"),
    "intervals-2-3-total": lambda: intervals(2, 3, "total"),
}

SIEVES = {
    "preorder5": preorder5_sieve,
    "intervals-1-2-total": lambda: intervals_sieve(1, 2),
    "intervals-2-3-total": lambda: intervals_sieve(2, 3),
}


def _singletons_sub(n):
    """Initial plus the one-point sets; every set is disjointly covered
    by its points."""
    return ["{}"] + ["{%d}" % i for i in range(1, n + 1)]


# object sets of subassemblers used for the devissage checks
SUBS = {
    "finite-sets-2": lambda: _singletons_sub(2),
    "finite-sets-3": lambda: _singletons_sub(3),
}


def fixture(name):
    return FIXTURES[name]()


def fixture_sieve(name):
    return SIEVES[name]()


def fixture_sub(name):
    return SUBS[name]()
