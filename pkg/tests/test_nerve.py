import pytest

from assemblage.fixtures import fixture
from assemblage.kzero import k0
from assemblage.nerve import (boundary_squared_is_zero,
                              diagonal_level_space, homology,
                              nerve_h0_matches_pi0, truncated_nerve)
from assemblage.wcat import build_w, pi0_wcat


def test_nerve_of_trivial_assembler_is_a_point():
    w = build_w(fixture("trivial"), 2)
    x = truncated_nerve(w, 2)
    assert homology(x, 0) == (1, ())
    assert homology(x, 1) == (0, ())


def test_boundary_squared_is_zero():
    for name, mt in [("sierpinski", 2), ("sphere-z2", 1),
                     ("preorder5", 1), ("finite-sets-2", 1)]:
        w = build_w(fixture(name), mt)
        x = truncated_nerve(w, 2)
        assert boundary_squared_is_zero(x), name


@pytest.mark.parametrize("name,mt", [
    ("sphere-z2", 2), ("sierpinski", 2), ("preorder5", 1),
    ("poset-sink", 1), ("finite-sets-2", 1),
])
def test_nerve_h0_matches_pi0(name, mt):
    w = build_w(fixture(name), mt)
    assert nerve_h0_matches_pi0(w)


def test_h0_rank_equals_component_count():
    w = build_w(fixture("sierpinski"), 2)
    x = truncated_nerve(w, 1)
    rank, torsion = homology(x, 0)
    assert rank == len(pi0_wcat(w))
    assert torsion == ()


def test_classifying_space_of_z2_has_torsion_h1():
    # the tuple category at length 1 is the point () plus B(Z/2);
    # H1 of the classical classifying space is Z/2
    w = build_w(fixture("sphere-z2"), 1)
    x = truncated_nerve(w, 2)
    assert homology(x, 0) == (2, ())
    assert homology(x, 1) == (0, (2,))


def test_classifying_space_of_trivial_group_has_no_h1():
    w = build_w(fixture("sphere-1"), 1)
    x = truncated_nerve(w, 2)
    assert homology(x, 1) == (0, ())


def test_homology_needs_a_spare_degree():
    w = build_w(fixture("sphere-1"), 1)
    x = truncated_nerve(w, 1)
    with pytest.raises(AssertionError):
        homology(x, 1)


# ------------------------------------------------------- diagonal spaces

def test_diagonal_level_zero_is_the_nerve():
    asm = fixture("sierpinski")
    x = diagonal_level_space(asm, 0, 1, max_tuple=2)
    w = build_w(asm, 2)
    y = truncated_nerve(w, 1)
    assert [len(s) for s in x.simplices] == [len(s) for s in y.simplices]
    assert homology(x, 0) == homology(y, 0)


@pytest.mark.parametrize("name", ["sphere-1", "sierpinski", "preorder5"])
def test_diagonal_level_one_is_connected(name):
    # the first K-theory space has a single 0-cell, so H0 = Z
    x = diagonal_level_space(fixture(name), 1, 1, max_tuple=2)
    assert homology(x, 0) == (1, ())


@pytest.mark.parametrize("name", ["sphere-1", "sierpinski", "preorder5"])
def test_diagonal_level_one_h1_matches_k0(name):
    # pi_1 of the first K-theory space is K0; its abelianization shows
    # up as H1 of the diagonal, already at truncation (depth 2, length 2)
    asm = fixture(name)
    x = diagonal_level_space(asm, 1, 2, max_tuple=2)
    assert boundary_squared_is_zero(x)
    assert homology(x, 1) == k0(asm).invariants


def test_diagonal_boundaries_square_to_zero():
    x = diagonal_level_space(fixture("sphere-z2"), 1, 2, max_tuple=2)
    assert boundary_squared_is_zero(x)
