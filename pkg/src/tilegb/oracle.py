"""Brute-force signed-tiling decisions on bounded boxes.

Independent of the Groebner route: a signed tiling restricted to a box is an
integer solution of A z = t, where columns of A are indicators of prototile
placements inside the box and t is the region indicator.  Solved exactly by
Hermite-style column elimination with the combination recorded.  A failure
only rules out tilings confined to the box, so it is reported as
``no_solution_in_box`` rather than a definitive no.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intlin import PROV_BASE, echelon_insert, lattice_express
from .tiling import Certificate, Placement, Region, verify_certificate


@dataclass
class PlacementSystem:
    """The linear system of one box: ``matrix`` has one row per box cell and
    one 0/1 column per placement; ``target`` is the region indicator."""

    box: tuple[int, int, int, int]  # x0, x1, y0, y1 with half-open ranges
    placements: list[Placement]
    matrix: list[list[int]]
    target: list[int]


@dataclass
class OracleDecision:
    """Outcome of the box search; a yes carries the solution vector and its
    expanded, independently verified certificate."""

    solvable: bool
    solution: list[int] | None = None
    certificate: Certificate | None = None

    @property
    def status(self) -> str:
        return "yes" if self.solvable else "no_solution_in_box"


def hnf_solve(A: list[list[int]], t: list[int]) -> list[int] | None:
    """Some integer solution of A z = t, or None when none exists.

    Columns are inserted into an echelon lattice with the unimodular
    combination tracked; t is then expressed over the lattice.
    """
    m = len(A)
    if len(t) != m:
        raise ValueError(f"dimension mismatch: {m} rows vs {len(t)} targets")
    k = len(A[0]) if m else 0
    if any(len(row) != k for row in A):
        raise ValueError("ragged matrix")
    columns = []
    for c in range(k):
        vec = {i: A[i][c] for i in range(m) if A[i][c]}
        vec[PROV_BASE + c] = 1
        columns.append(vec)
    # Insert sparsest-leading first: distinct leading rows insert without work.
    order = sorted(range(k), key=lambda c: (min((i for i in columns[c] if i < PROV_BASE),
                                                default=m), c))
    pivots: dict[int, dict[int, int]] = {}
    for c in order:
        echelon_insert(pivots, columns[c])
    combo = lattice_express(pivots, {i: v for i, v in enumerate(t) if v})
    if combo is None:
        return None
    z = [0] * k
    for c, v in combo.items():
        z[c] = v
    return z


def placement_system(region: Region, prototiles: list[Region], margin: int) -> PlacementSystem:
    """Box = bounding box of the region padded by ``margin``; placements are
    all prototile translates fully inside the box."""
    if not prototiles:
        raise ValueError("empty prototile list")
    if any(not t for t in prototiles):
        raise ValueError("empty prototile")
    if margin < 0:
        raise ValueError("negative margin")
    if region:
        xs = [i for i, _ in region]
        ys = [j for _, j in region]
        x0, x1 = min(xs) - margin, max(xs) + margin + 1
        y0, y1 = min(ys) - margin, max(ys) + margin + 1
    else:
        x0 = y0 = 0
        x1 = y1 = 1
    width = x1 - x0
    cell_index = {}
    for j in range(y0, y1):
        for i in range(x0, x1):
            cell_index[(i, j)] = (j - y0) * width + (i - x0)
    placements = []
    columns = []
    for tidx, tile in enumerate(prototiles):
        tis = [i for i, _ in tile]
        tjs = [j for _, j in tile]
        for b in range(y0 - min(tjs), y1 - max(tjs)):
            for a in range(x0 - min(tis), x1 - max(tis)):
                placements.append(Placement(tidx, (a, b), 1))
                columns.append([cell_index[(i + a, j + b)] for i, j in tile])
    ncells = width * (y1 - y0)
    matrix = [[0] * len(placements) for _ in range(ncells)]
    for c, rows in enumerate(columns):
        for r in rows:
            matrix[r][c] = 1
    target = [0] * ncells
    for cell in region:
        target[cell_index[cell]] = 1
    return PlacementSystem((x0, x1, y0, y1), placements, matrix, target)


def oracle_decide(region: Region, prototiles: list[Region], margin: int) -> OracleDecision:
    """Search for a signed tiling confined to the padded bounding box.

    A yes is sound (the expanded certificate is verified cell by cell); a
    ``no_solution_in_box`` is inconclusive evidence, since placements outside
    the box might still make a tiling possible.
    """
    system = placement_system(region, prototiles, margin)
    z = hnf_solve(system.matrix, system.target)
    if z is None:
        return OracleDecision(False)
    placements = []
    for mult, pl in zip(z, system.placements):
        if mult:
            sign = 1 if mult > 0 else -1
            placements.extend(Placement(pl.tile, pl.shift, sign)
                              for _ in range(abs(mult)))
    cert = Certificate(list(prototiles), placements, region)
    if not verify_certificate(cert):
        raise RuntimeError("internal error: oracle solution failed verification")
    return OracleDecision(True, z, cert)
