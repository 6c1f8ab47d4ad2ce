import pytest

from assemblage.coverage import Assembler, CoverFamily
from assemblage.fixtures import _with_initial

# verdict lines from the acceptance run, echoed after the test summary
# (fd-level capture would otherwise swallow them)
ACCEPTANCE_VERDICTS = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for line in ACCEPTANCE_VERDICTS:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_fixture_names():
    # everything that enumerates disjoint covering families in seconds
    return ["trivial", "sphere-1", "sphere-z2", "sphere-s3",
            "finite-sets-2", "sierpinski", "discrete-2", "preorder5",
            "poset-sink", "intervals-1-2-classical"]


def poset_assembler(le_pairs, n_objects, cover_targets=(), rng=None):
    """A poset on objects x0..x_{n-1} plus a fresh initial object.
    le_pairs: strict relation pairs (i, j) meaning xi < xj, transitively
    closed by the caller or not (closed here). cover_targets: for each
    entry (j, members) declare a cover of xj by the given sources."""
    names = ["x%d" % i for i in range(n_objects)]
    le = set(le_pairs)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(le):
            for (c, d) in list(le):
                if b == c and (a, d) not in le and a != d:
                    le.add((a, d))
                    changed = True
    morphisms = {}
    comp = {}

    def mid(i, j):
        return "le:%s<%s" % (names[i], names[j])

    for (i, j) in le:
        morphisms[mid(i, j)] = (names[i], names[j])
    for (i, j) in le:
        for (k, l) in le:
            if j == k:
                # (i, l) is in le by transitive closure
                comp[(mid(i, j), mid(k, l))] = mid(i, l)
    cat = _with_initial(["0"] + names, "0", morphisms, comp)
    covers = []
    for (j, members) in cover_targets:
        fam = [mid(i, j) for i in members if (i, j) in le]
        if fam:
            covers.append(CoverFamily(names[j], fam))
    return Assembler(cat, "0", covers)


def random_poset(rng, max_objects=6):
    n = rng.randint(1, max_objects)
    pairs = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                pairs.add((i, j))  # edges respect the index order: acyclic
    targets = []
    for j in range(n):
        below = [i for (i, k) in pairs if k == j]
        if below and rng.random() < 0.6:
            sub = [i for i in below if rng.random() < 0.7] or below[:1]
            targets.append((j, sub))
    return poset_assembler(pairs, n, targets)
