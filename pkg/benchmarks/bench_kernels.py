"""Timing comparison of the compiled kernels against the pure-Python
fallback on the largest bundled fixture.

Run:  python3 benchmarks/bench_kernels.py [fixture-name]
"""

import sys
import time

from assemblage.budget import Budget
from assemblage.category import pack_category
from assemblage.fixtures import fixture
from assemblage._kernels import pure

try:
    from assemblage._kernels import _speedups
except ImportError:
    _speedups = None


def run(mod, packed, noninit, targets):
    budget = Budget(10 ** 10)
    t0 = time.perf_counter()
    assert mod.associativity_violation(packed, budget) is None
    t1 = time.perf_counter()
    mod.mono_flags(packed, budget)
    t2 = time.perf_counter()
    for t in targets:
        mod.disjoint_pair_matrix(packed, t, noninit, budget)
    t3 = time.perf_counter()
    return t1 - t0, t2 - t1, t3 - t2


def main():
    name = sys.argv[1] if len(sys.argv) > 1 else "intervals-2-3-total"
    asm = fixture(name)
    packed = pack_category(asm.cat)
    obj_index = {o: i for i, o in enumerate(packed.obj_ids)}
    noninit = {obj_index[o] for o in asm.noninitial}
    targets = [obj_index[o] for o in sorted(asm.noninitial)[:5]]
    print("fixture %s: %d objects, %d morphisms, %d composites"
          % (name, len(asm.cat.objects), len(asm.cat.morphisms),
             len(asm.cat.composition)))
    rows = [("pure", run(pure, packed, noninit, targets))]
    if _speedups is not None:
        # fresh pack so the compiled path does not reuse cached tables
        packed2 = pack_category(asm.cat)
        rows.append(("compiled", run(_speedups, packed2, noninit, targets)))
    else:
        print("compiled kernels not built; showing pure only")
    print("%-10s %12s %12s %12s" % ("kernel", "assoc", "mono",
                                    "disjoint"))
    for label, (a, m, d) in rows:
        print("%-10s %10.3fs %10.3fs %10.3fs" % (label, a, m, d))
    if _speedups is not None:
        pa, pm, pd = rows[0][1]
        ca, cm, cd = rows[1][1]
        print("speedup    %10.1fx %10.1fx %10.1fx"
              % (pa / max(ca, 1e-9), pm / max(cm, 1e-9),
                 pd / max(cd, 1e-9)))


if __name__ == "__main__":
    main()
