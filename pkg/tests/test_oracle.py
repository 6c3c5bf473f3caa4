"""Box-search oracle: exact integer solving and concordance with the theory."""

import random

import pytest

from tilegb.bones import decide_nbone, nbone_prototiles
from tilegb.oracle import hnf_solve, oracle_decide, placement_system
from tilegb.tiling import verify_certificate


def tri_region(m):
    return frozenset((i, j) for i in range(m) for j in range(m - i))


def matvec(A, z):
    return [sum(a * b for a, b in zip(row, z)) for row in A]


# ---------------------------------------------------------------------------
# hnf_solve

@pytest.mark.parametrize("A,t,solvable", [
    ([[2]], [4], True),
    ([[2]], [3], False),
    ([[1, 1], [0, 2]], [1, 2], True),
    ([[0]], [0], True),
    ([[0]], [1], False),
])
def test_hnf_solve_examples(A, t, solvable):
    z = hnf_solve(A, t)
    if solvable:
        assert z is not None and matvec(A, z) == t
    else:
        assert z is None


def test_hnf_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        hnf_solve([[1, 2]], [1, 2])
    with pytest.raises(ValueError):
        hnf_solve([[1, 2], [1]], [1, 2])


def test_hnf_solve_random_solvable_systems():
    rng = random.Random(17)
    for _ in range(60):
        m, k = rng.randrange(1, 6), rng.randrange(1, 6)
        A = [[rng.randint(-5, 5) for _ in range(k)] for _ in range(m)]
        z = [rng.randint(-4, 4) for _ in range(k)]
        t = matvec(A, z)
        found = hnf_solve(A, t)
        assert found is not None
        assert matvec(A, found) == t


def test_hnf_solve_detects_unsolvable():
    rng = random.Random(18)
    found_unsolvable = 0
    for _ in range(200):
        m, k = rng.randrange(1, 5), rng.randrange(1, 5)
        A = [[2 * rng.randint(-3, 3) for _ in range(k)] for _ in range(m)]
        t = [2 * rng.randint(-5, 5) + 1 for _ in range(m)]  # odd targets
        z = hnf_solve(A, t)
        assert z is None  # even matrix cannot hit odd targets
        found_unsolvable += 1
    assert found_unsolvable == 200


# ---------------------------------------------------------------------------
# placement systems

def test_placement_system_shape():
    system = placement_system(tri_region(2), nbone_prototiles(2), 1)
    x0, x1, y0, y1 = system.box
    assert (x0, y0) == (-1, -1) and (x1, y1) == (3, 3)
    ncells = (x1 - x0) * (y1 - y0)
    assert len(system.matrix) == ncells
    assert len(system.target) == ncells
    assert sum(system.target) == 3
    # every column has exactly |prototile| ones
    for c in range(len(system.placements)):
        assert sum(row[c] for row in system.matrix) == 2


def test_placement_system_rejects_bad_input():
    with pytest.raises(ValueError):
        placement_system(tri_region(2), [], 1)
    with pytest.raises(ValueError):
        placement_system(tri_region(2), [frozenset()], 1)
    with pytest.raises(ValueError):
        placement_system(tri_region(2), nbone_prototiles(2), -1)


# ---------------------------------------------------------------------------
# decisions

def test_oracle_single_cell():
    decision = oracle_decide(frozenset({(0, 0)}), [frozenset({(0, 0)})], 0)
    assert decision.solvable
    assert sum(map(abs, decision.solution)) == 1
    assert verify_certificate(decision.certificate)


def test_oracle_T3_dominoes():
    decision = oracle_decide(tri_region(3), nbone_prototiles(2), 4)
    assert decision.solvable
    assert verify_certificate(decision.certificate)


@pytest.mark.parametrize("margin", range(0, 7))
def test_oracle_T2_dominoes_never_solvable(margin):
    decision = oracle_decide(tri_region(2), nbone_prototiles(2), margin)
    assert not decision.solvable
    assert decision.status == "no_solution_in_box"


def test_oracle_empty_region():
    decision = oracle_decide(frozenset(), nbone_prototiles(2), 1)
    assert decision.solvable
    assert verify_certificate(decision.certificate)


@pytest.mark.parametrize("n", (2, 3))
def test_oracle_concordance_with_residue_rule(n):
    tiles = nbone_prototiles(n)
    for m in range(1, n * n + n + 1):
        decision = oracle_decide(tri_region(m), tiles, 2 * n)
        assert decision.solvable == decide_nbone(m, n), (n, m)
        if decision.solvable:
            assert verify_certificate(decision.certificate)


def test_oracle_cross_validates_groebner_route():
    # The two decision paths are independent; a definitive answer from one
    # must never contradict the other on random small instances.
    from tilegb.tiling import decide_signed_tiling
    rng = random.Random(2025)
    for _ in range(120):
        tiles = []
        for _ in range(rng.randrange(1, 3)):
            cells = frozenset((rng.randrange(3), rng.randrange(2))
                              for _ in range(rng.randrange(1, 4)))
            if cells:
                tiles.append(cells)
        if not tiles:
            continue
        region = frozenset((i, j) for i in range(3) for j in range(3)
                           if rng.random() < 0.4)
        decision = decide_signed_tiling(region, tiles, max_rounds=3)
        boxed = oracle_decide(region, tiles, margin=4)
        if decision.status == "no":
            assert not boxed.solvable, (region, tiles)
        if boxed.solvable:
            assert decision.status != "no", (region, tiles)
            assert verify_certificate(boxed.certificate)
