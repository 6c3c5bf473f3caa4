"""Tile homology groups: abelian-group presentations on finite boxes reduced
by Smith normal form, with a stabilization scan and the n-bone closed form.

The group of a prototile set is the cokernel of all tile translates fully
supported in a box [0, D)^2, i.e. the box approximation of the direct limit
of Z[x, y]/I under multiplication maps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intlin import axpy, echelon_insert
from .tiling import Region, newton_polynomial, normalize_region


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: free rank plus invariant factors
    d1 | d2 | ... (each at least 2)."""

    free_rank: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        prev = None
        for d in self.invariant_factors:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
            if prev is not None and d % prev != 0:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = d

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"


@dataclass
class Presentation:
    """Box presentation: one generator per cell of [0, D)^2 and one relation
    row per tile translate fully inside the box."""

    box_side: int
    relations: list[dict[int, int]]

    @property
    def num_generators(self) -> int:
        return self.box_side * self.box_side


def _dense_snf(M: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form (nonzero entries, chained); standard
    elimination with smallest-pivot selection, exact integer arithmetic."""
    M = [list(row) for row in M]
    m = len(M)
    n = len(M[0]) if m else 0
    diag: list[int] = []
    t = 0
    while True:
        best = None
        for i in range(t, m):
            row = M[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        M[t], M[bi] = M[bi], M[t]
        if bj != t:
            for row in M:
                row[t], row[bj] = row[bj], row[t]
        while True:
            if M[t][t] < 0:
                M[t] = [-v for v in M[t]]
            p = M[t][t]
            moved = False
            for i in range(m):
                if i == t or not M[i][t]:
                    continue
                q = M[i][t] // p
                if q:
                    Mt = M[t]
                    M[i] = [a - q * b for a, b in zip(M[i], Mt)]
                if M[i][t]:  # p did not divide: smaller residue becomes pivot
                    M[t], M[i] = M[i], M[t]
                    moved = True
                    break
            if moved:
                continue
            for j in range(n):
                if j == t or not M[t][j]:
                    continue
                q = M[t][j] // p
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                if M[t][j]:
                    for row in M:
                        row[t], row[j] = row[j], row[t]
                    moved = True
                    break
            if moved:
                continue
            # Row and column are clear; enforce that p divides the rest.
            offender = None
            for i in range(t + 1, m):
                row = M[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            Mo = M[offender]
            M[t] = [a + b for a, b in zip(M[t], Mo)]
        diag.append(M[t][t])
        t += 1
    return diag


def _sparse_invariants(rows) -> tuple[list[int], int]:
    """Invariant factors (including trivial 1s) and rank from sparse relation
    rows: echelonize, clear pivot columns left to right, peel off unit pivots,
    finish the small remaining core densely."""
    pivots: dict[int, dict[int, int]] = {}
    for vec in rows:
        echelon_insert(pivots, dict(vec))
    rank = len(pivots)
    cols = sorted(pivots)
    for j in cols:
        if pivots[j][j] < 0:
            pivots[j] = {k: -v for k, v in pivots[j].items()}
    for j in cols:
        piv = pivots[j]
        p = piv[j]
        for j2 in cols:
            if j2 == j:
                continue
            other = pivots[j2]
            v = other.get(j, 0)
            if v:
                axpy(other, -(v // p), piv)
    unit_cols = {j for j in cols if pivots[j][j] == 1}
    core_rows = [pivots[j] for j in cols if j not in unit_cols]
    if not core_rows:
        return [1] * rank, rank
    core_cols = sorted({c for r in core_rows for c in r})
    index = {c: k for k, c in enumerate(core_cols)}
    dense = [[0] * len(core_cols) for _ in core_rows]
    for r, vec in zip(dense, core_rows):
        for c, v in vec.items():
            r[index[c]] = v
    factors = _dense_snf(dense)
    return [1] * len(unit_cols) + factors, rank


def snf(M: list[list[int]]) -> tuple[list[int], int]:
    """Smith normal form invariants of an integer matrix: the positive
    diagonal d1 | d2 | ... | dr and the rank r over the rationals."""
    rows = []
    for row in M:
        vec = {j: v for j, v in enumerate(row) if v}
        if vec:
            rows.append(vec)
    return _sparse_invariants(rows)


def box_presentation(prototiles: list[Region], box_side: int) -> Presentation:
    """All translates of each prototile fully supported in [0, D)^2, as
    coefficient rows over the D^2 cell generators (cell (p, q) -> p*D + q)."""
    if not prototiles:
        raise ValueError("empty prototile list")
    d = box_side
    relations: list[dict[int, int]] = []
    for tile in prototiles:
        norm, _ = normalize_region(tile)
        poly = newton_polynomial(norm)
        w = poly.max_exponent(0)
        h = poly.max_exponent(1)
        if w >= d or h >= d:
            raise ValueError(f"box side {d} too small for a prototile of extent {max(w, h) + 1}")
        base = sorted(poly.terms.items())
        for a in range(d - w):
            for b in range(d - h):
                relations.append({(p + a) * d + (q + b): c for (p, q), c in base})
    return Presentation(d, relations)


def box_group(prototiles: list[Region], box_side: int) -> AbelianGroup:
    """Cokernel of the box presentation: free rank = generators - rank and the
    invariant factors exceeding 1."""
    pres = box_presentation(prototiles, box_side)
    matrix = []
    for vec in pres.relations:
        row = [0] * pres.num_generators
        for c, v in vec.items():
            row[c] = v
        matrix.append(row)
    factors, rank = snf(matrix)
    return AbelianGroup(pres.num_generators - rank,
                        tuple(f for f in factors if f != 1))


def stabilized_group(prototiles: list[Region], d_start: int,
                     d_max: int) -> tuple[AbelianGroup, bool]:
    """Scan box sides d_start..d_max; stabilized when three consecutive box
    groups agree, in which case the stable group is returned.  Fewer than
    three sides, or no agreeing window, reports stabilized=False with the
    last group computed."""
    if d_start > d_max:
        raise ValueError("d_start exceeds d_max")
    groups = [box_group(prototiles, d) for d in range(d_start, d_max + 1)]
    for k in range(len(groups) - 2):
        if groups[k] == groups[k + 1] == groups[k + 2]:
            return groups[k + 2], True
    return groups[-1], False


def nbone_homology(n: int) -> AbelianGroup:
    """Closed form for the n-bone tile homology group:
    free rank (n-1)(n-2) plus one Z/n torsion class."""
    if n < 2:
        raise ValueError(f"bone length must be >= 2, got {n}")
    return AbelianGroup((n - 1) * (n - 2), (n,))
