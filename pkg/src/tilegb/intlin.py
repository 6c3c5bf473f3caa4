"""Internal sparse integer linear algebra: echelon lattices over Z.

Vectors are dicts mapping column index to nonzero value.  An echelon set maps
each pivot column to a vector whose smallest "real" column is that pivot.
Columns at PROV_BASE and above are bookkeeping columns used to record how a
vector was combined from the original generators; they never become pivots.
"""

from __future__ import annotations

from .groebner import xgcd

PROV_BASE = 1 << 40


def axpy(dst: dict[int, int], c: int, src: dict[int, int]) -> None:
    """dst += c * src, dropping entries that cancel."""
    if not c:
        return
    for k, v in src.items():
        w = dst.get(k, 0) + c * v
        if w:
            dst[k] = w
        else:
            del dst[k]


def _lead(vec: dict[int, int]) -> int | None:
    return min((c for c in vec if c < PROV_BASE), default=None)


def echelon_insert(pivots: dict[int, dict[int, int]], vec: dict[int, int]) -> int | None:
    """Insert a vector into the echelon set, returning its pivot column, or
    None when it reduces to a dependence (possibly leaving only bookkeeping
    columns)."""
    while True:
        j = _lead(vec)
        if j is None:
            return None
        piv = pivots.get(j)
        if piv is None:
            pivots[j] = vec
            return j
        a, b = piv[j], vec[j]
        if b % a == 0:
            axpy(vec, -(b // a), piv)
        elif a % b == 0:
            pivots[j] = vec
            piv, vec = vec, piv
            axpy(vec, -(a // b), piv)
        else:
            g, u, v = xgcd(a, b)
            new_piv: dict[int, int] = {}
            axpy(new_piv, u, piv)
            axpy(new_piv, v, vec)
            new_vec: dict[int, int] = {}
            axpy(new_vec, -(b // g), piv)
            axpy(new_vec, a // g, vec)
            pivots[j] = new_piv
            vec = new_vec


def lattice_express(pivots: dict[int, dict[int, int]],
                    target: dict[int, int]) -> dict[int, int] | None:
    """Reduce ``target`` (real columns only) over the echelon set.  When the
    real part clears exactly, return the accumulated bookkeeping combination
    (column index relative to PROV_BASE); otherwise None."""
    vec = dict(target)
    while True:
        j = _lead(vec)
        if j is None:
            return {c - PROV_BASE: -v for c, v in vec.items()}
        piv = pivots.get(j)
        if piv is None or vec[j] % piv[j] != 0:
            return None
        axpy(vec, -(vec[j] // piv[j]), piv)
