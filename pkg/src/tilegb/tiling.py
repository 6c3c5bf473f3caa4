"""Lattice regions, signed-tiling decisions with certificates, and rendering.

A signed tiling of a region is a multiset of translated prototiles with signs
whose indicator functions sum to the region's indicator.  Deciding one reduces
to ideal membership of the region's Newton polynomial after clearing a test
monomial (translates may stick out below the axes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import bones, groebner
from .groebner import buchberger
from .polyring import LEX, Polynomial

Cell = tuple[int, int]
Region = frozenset  # of Cell


@dataclass(frozen=True)
class Placement:
    """One signed translate: prototile ``tile`` shifted by ``shift``."""

    tile: int
    shift: Cell
    sign: int


@dataclass
class Certificate:
    """A signed tiling witness; valid iff the signed sum of translated
    prototile indicators equals the region indicator exactly."""

    prototiles: list[Region]
    placements: list[Placement]
    region: Region


@dataclass
class TilingDecision:
    """Outcome of the generic decision: 'yes' carries a verified certificate;
    'no' is only returned when the test-monomial sequence provably stabilizes;
    otherwise 'inconclusive'."""

    status: str
    certificate: Certificate | None = None


def region_from_cells(cells) -> Region:
    return frozenset((int(i), int(j)) for i, j in cells)


def translate_region(region: Region, di: int, dj: int) -> Region:
    return frozenset((i + di, j + dj) for i, j in region)


def normalize_region(region: Region) -> tuple[Region, Cell]:
    """Translate so both coordinates start at 0; returns the applied shift."""
    if not region:
        return region, (0, 0)
    di = -min(i for i, _ in region)
    dj = -min(j for _, j in region)
    return translate_region(region, di, dj), (di, dj)


def newton_polynomial(region: Region) -> Polynomial:
    """sum of x^i y^j over the cells (i, j); coordinates must be non-negative."""
    for i, j in region:
        if i < 0 or j < 0:
            raise ValueError(f"negative coordinate {(i, j)}; normalize the region first")
    return Polynomial({(i, j): 1 for i, j in region})


def region_of_polynomial(p: Polynomial) -> Region:
    """Inverse of newton_polynomial on 0/1-coefficient polynomials."""
    if any(c != 1 for c in p.terms.values()):
        raise ValueError("polynomial has a coefficient other than 1")
    return frozenset(p.terms)


def verify_certificate(cert: Certificate) -> bool:
    """Cell-by-cell integer accumulation; no polynomial machinery involved."""
    acc: dict[Cell, int] = {}
    for pl in cert.placements:
        tile = cert.prototiles[pl.tile]
        a, b = pl.shift
        for i, j in tile:
            cell = (i + a, j + b)
            v = acc.get(cell, 0) + pl.sign
            if v:
                acc[cell] = v
            else:
                del acc[cell]
    return acc == {cell: 1 for cell in cert.region}


def _placements_from_cofactors(cofactors: list[Polynomial],
                               offsets: list[Cell]) -> list[Placement]:
    """Expand each cofactor term c * x^a y^b into |c| unit placements of the
    corresponding tile, shifted by the tile's offset."""
    placements = []
    for tile_index, (cof, (oi, oj)) in enumerate(zip(cofactors, offsets)):
        for (a, b), c in sorted(cof.terms.items()):
            sign = 1 if c > 0 else -1
            placements.extend(Placement(tile_index, (a + oi, b + oj), sign)
                              for _ in range(abs(c)))
    return placements


def tile_extent(tile: Region) -> int:
    xs = [i for i, _ in tile]
    ys = [j for _, j in tile]
    return max(max(xs) - min(xs), max(ys) - min(ys))


def decide_signed_tiling(region: Region, prototiles: list[Region],
                         max_rounds: int = 8) -> TilingDecision:
    """Decide signed tilability of ``region`` by translates of ``prototiles``.

    Computes a strong basis of the prototile ideal with cofactors recorded,
    then tests membership of (xy)^(t*D) * f_region for t = 0..max_rounds,
    where D is one more than the largest prototile extent (a cofinal test
    sequence).  The answer 'no' is definitive only when every variable is
    provably invertible modulo the ideal: either some pure power x^a (resp.
    y^a) is congruent to 1, or the variable occurs in no prototile.
    """
    if not prototiles:
        raise ValueError("empty prototile list")
    if any(not t for t in prototiles):
        raise ValueError("empty prototile")
    norm_tiles = []
    offsets = []
    for tile in prototiles:
        nt, (di, dj) = normalize_region(tile)
        norm_tiles.append(nt)
        # A placement of the normalized tile at (a, b) is the original tile
        # at (a + di, b + dj).
        offsets.append((di, dj))
    region_norm, (ri, rj) = normalize_region(region)
    f_region = newton_polynomial(region_norm)
    gens = [newton_polynomial(t) for t in norm_tiles]
    G = buchberger(gens, LEX, "nonneg", track_cofactors=True)

    diameter = max(tile_extent(t) for t in prototiles)
    d = diameter + 1

    # A variable is tame when multiplication by it is invertible modulo the
    # ideal, so test monomials cannot change membership.
    bound = 2 * max(g.degree() for g in G.elements) + 2
    tame = []
    for var in range(2):
        if all(g.max_exponent(var) == 0 for g in gens):
            tame.append(True)
            continue
        unit = Polynomial.constant(1)
        found = False
        for a in range(1, bound + 1):
            power = Polynomial({(a, 0) if var == 0 else (0, a): 1})
            if groebner.reduce(power - unit, G).remainder.is_zero():
                found = True
                break
        tame.append(found)
    decisive = all(tame)

    rounds = 0 if decisive else max_rounds
    for t in range(rounds + 1):
        shifted = f_region.mul_term(1, (t * d, t * d))
        res = groebner.reduce(shifted, G)
        if not res.remainder.is_zero():
            continue
        # Express the shifted region polynomial over the original generators.
        cof = [Polynomial.zero() for _ in gens]
        for q, row in zip(res.quotients, G.cofactors):
            if q:
                cof = [c + q * rc for c, rc in zip(cof, row)]
        shift_back = (-t * d - ri, -t * d - rj)
        total_offsets = [(oi + shift_back[0], oj + shift_back[1]) for oi, oj in offsets]
        placements = _placements_from_cofactors(cof, total_offsets)
        cert = Certificate(list(prototiles), placements, region)
        if not verify_certificate(cert):
            raise RuntimeError("internal error: extracted certificate failed verification")
        return TilingDecision("yes", cert)
    return TilingDecision("no" if decisive else "inconclusive")


def certificate_nbone(m: int, n: int) -> Certificate:
    """Signed-tiling certificate for the side-m triangle by n-bones, built by
    cofactor-tracked division against the explicit strong basis."""
    if not bones.decide_nbone(m, n):
        raise ValueError(f"triangle of side {m} admits no signed tiling by {n}-bones")
    bs = bones.bone_system(n)
    res = groebner.reduce(bones.triangle(m), bs.basis)
    if not res.remainder.is_zero():
        raise RuntimeError("internal error: admissible triangle did not reduce to zero")
    cof = [Polynomial.zero() for _ in range(3)]
    for q, row in zip(res.quotients, bs.basis.cofactors):
        if q:
            cof = [c + q * rc for c, rc in zip(cof, row)]
    prototiles = bones.nbone_prototiles(n)
    region = frozenset((i, j) for i in range(m) for j in range(m - i))
    placements = _placements_from_cofactors(cof, [(0, 0)] * 3)
    cert = Certificate(prototiles, placements, region)
    if not verify_certificate(cert):
        raise RuntimeError("internal error: n-bone certificate failed verification")
    return cert


# ---------------------------------------------------------------------------
# file formats

def region_to_text(region: Region) -> str:
    lines = [f"{i} {j}" for i, j in sorted(region, key=lambda c: (c[1], c[0]))]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_region_text(text: str) -> Region:
    cells = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'i j', got {raw!r}")
        try:
            cells.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from None
    return frozenset(cells)


def tiles_to_text(tiles: list[Region]) -> str:
    return "\n".join(region_to_text(t) for t in tiles)


def parse_tiles_text(text: str) -> list[Region]:
    """Blocks of region lines separated by blank lines, one per prototile."""
    blocks: list[list[str]] = [[]]
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append(raw)
    tiles = [parse_region_text("\n".join(b)) for b in blocks if b]
    if not tiles:
        raise ValueError("no prototiles in tiles file")
    return tiles


def certificate_to_text(cert: Certificate, region_path: str) -> str:
    lines = [f"tiles={len(cert.prototiles)} region={region_path}"]
    for pl in cert.placements:
        sign = "+" if pl.sign > 0 else "-"
        lines.append(f"{sign} {pl.tile} {pl.shift[0]} {pl.shift[1]}")
    return "\n".join(lines) + "\n"


def parse_certificate_text(text: str) -> tuple[int, str, list[Placement]]:
    """Returns (tile count, region path, placements)."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty certificate file")
    fields = dict(part.split("=", 1) for part in lines[0].split() if "=" in part)
    if "tiles" not in fields or "region" not in fields:
        raise ValueError("certificate header must carry tiles= and region=")
    count = int(fields["tiles"])
    placements = []
    for lineno, raw in enumerate(lines[1:], 2):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4 or parts[0] not in "+-":
            raise ValueError(f"line {lineno}: expected '<+|-> tile a b', got {raw!r}")
        placements.append(Placement(int(parts[1]), (int(parts[2]), int(parts[3])),
                                    1 if parts[0] == "+" else -1))
    return count, fields["region"], placements


# ---------------------------------------------------------------------------
# rendering

HEX_SIZE = 20.0
SQRT3 = math.sqrt(3.0)


def _hex_center(i: int, j: int) -> tuple[float, float]:
    return HEX_SIZE * (i + j / 2.0), HEX_SIZE * j * SQRT3 / 2.0


def _hex_points(cx: float, cy: float) -> str:
    r = HEX_SIZE / SQRT3
    pts = []
    for k in range(6):
        ang = math.pi / 6 + k * math.pi / 3
        pts.append(f"{cx + r * math.cos(ang):.2f},{cy - r * math.sin(ang):.2f}")
    return " ".join(pts)


def _svg_document(groups: list[str], cells: list[Cell]) -> bytes:
    if cells:
        xs, ys = zip(*[_hex_center(i, j) for i, j in cells])
        pad = HEX_SIZE
        x0, y0 = min(xs) - pad, -max(ys) - pad
        w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    else:
        x0 = y0 = 0.0
        w = h = 1.0
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'viewBox="{x0:.2f} {y0:.2f} {w:.2f} {h:.2f}">')
    return ("\n".join([head] + groups + ["</svg>"]) + "\n").encode("utf-8")


def _hex_polygon(i: int, j: int, fill: str) -> str:
    cx, cy = _hex_center(i, j)
    # Flip y so increasing j runs upward on screen.
    return f'<polygon points="{_hex_points(cx, -cy)}" fill="{fill}" stroke="black" stroke-width="1"/>'


def render(obj: Certificate | Region, fmt: str = "text") -> bytes:
    """Render a region or certificate as plain text or an SVG hex drawing."""
    if fmt == "text":
        if isinstance(obj, Certificate):
            lines = [f"{'+' if pl.sign > 0 else '-'} {pl.tile} {pl.shift[0]} {pl.shift[1]}"
                     for pl in obj.placements]
            return ("\n".join(lines) + ("\n" if lines else "")).encode("utf-8")
        return region_to_text(obj).encode("utf-8")
    if fmt != "svg":
        raise ValueError(f"unsupported format {fmt!r}")
    if isinstance(obj, Certificate):
        groups = []
        all_cells: list[Cell] = []
        for pl in obj.placements:
            fill = "#8dc88d" if pl.sign > 0 else "#d98c8c"
            cells = sorted((i + pl.shift[0], j + pl.shift[1])
                           for i, j in obj.prototiles[pl.tile])
            all_cells.extend(cells)
            polys = "".join(_hex_polygon(i, j, fill) for i, j in cells)
            groups.append(f'<g opacity="0.7">{polys}</g>')
        return _svg_document(groups, all_cells)
    cells = sorted(obj, key=lambda c: (c[1], c[0]))
    group = "".join(_hex_polygon(i, j, "#cccccc") for i, j in cells)
    return _svg_document([f"<g>{group}</g>"] if cells else [], cells)
