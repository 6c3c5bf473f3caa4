"""Strong Groebner bases over Z: division with cofactors, S- and G-polynomials,
Buchberger completion and basis verification.

Over the integers a basis is *strong* when the leading term (coefficient
included) of every nonzero ideal element is divisible by the leading term of
some basis element; membership then reduces to a zero remainder.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

from .polyring import (CONVENTIONS, LEX, Mono, Polynomial, TermOrder,
                       coeff_divmod, format_poly, mono_div, mono_divides,
                       mono_lcm, parse_poly)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with u*a + v*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _lcm(a: int, b: int) -> int:
    return abs(a * b) // xgcd(a, b)[0]


@dataclass
class GroebnerBasis:
    """An ordered basis together with its term order and coefficient convention.

    When ``cofactors`` is present, row i expresses elements[i] over
    ``generators``: elements[i] == sum(cofactors[i][j] * generators[j]).
    ``verified`` records that strongness has been established (either by
    completion or by verify_strong_gb); ideal membership refuses to run
    without it.
    """

    elements: list[Polynomial]
    order: TermOrder = LEX
    convention: str = "minabs"
    generators: list[Polynomial] | None = None
    cofactors: list[list[Polynomial]] | None = None
    verified: bool = False
    _lts: list[tuple[Mono, int]] = field(init=False, repr=False)

    def __post_init__(self):
        if not self.elements:
            raise ValueError("empty basis")
        if any(g.is_zero() for g in self.elements):
            raise ValueError("zero polynomial in basis")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown coefficient convention {self.convention!r}")
        self._lts = [g.leading_term(self.order) for g in self.elements]

    @property
    def nvars(self) -> int:
        return self.elements[0].nvars

    def leading_terms(self) -> list[tuple[Mono, int]]:
        return list(self._lts)

    def reordered(self, perm: list[int]) -> GroebnerBasis:
        """Same basis with elements permuted (used to probe confluence)."""
        return GroebnerBasis([self.elements[i] for i in perm], self.order,
                             self.convention, verified=self.verified)


@dataclass
class ReductionResult:
    """Division output: input == sum(quotients[i] * basis[i]) + remainder,
    with no remainder term strongly reducible by the basis."""

    quotients: list[Polynomial]
    remainder: Polynomial


def _reduce_raw(fterms: dict[Mono, int], nvars: int, elements: list[Polynomial],
                lts: list[tuple[Mono, int]], order: TermOrder,
                conv: str) -> tuple[list[dict[Mono, int]], dict[Mono, int]]:
    """Core division loop on raw term maps.

    Deterministic rules: always attack the current leading term; use the first
    basis element (in list order) whose leading term gives a nonzero division
    quotient; once no element applies, the term moves to the remainder.
    """
    key = order.key
    work = dict(fterms)
    heap = [tuple(-e for e in key(m)) + m for m in work]
    heapq.heapify(heap)
    quotients: list[dict[Mono, int]] = [{} for _ in elements]
    remainder: dict[Mono, int] = {}
    tails = [[(m, c) for m, c in g.terms.items() if m != lts[i][0]]
             for i, g in enumerate(elements)]
    while heap:
        packed = heapq.heappop(heap)
        mono = packed[len(packed) // 2:]
        c = work.get(mono)
        if not c:
            continue
        progressed = True
        while c and progressed:
            progressed = False
            for gi, (gm, gc) in enumerate(lts):
                if not all(a <= b for a, b in zip(gm, mono)):
                    continue
                q, r = coeff_divmod(c, gc, conv)
                if q == 0:
                    continue
                shift = tuple(a - b for a, b in zip(mono, gm))
                for tm, tc in tails[gi]:
                    m2 = tuple(a + b for a, b in zip(tm, shift))
                    v = work.get(m2, 0) - q * tc
                    if v:
                        if m2 not in work:
                            heapq.heappush(heap, tuple(-e for e in key(m2)) + m2)
                        work[m2] = v
                    else:
                        work.pop(m2, None)
                c = r
                qd = quotients[gi]
                qd[shift] = qd.get(shift, 0) + q
                progressed = True
                break
        if c:
            remainder[mono] = c
        work.pop(mono, None)
    return quotients, remainder


def reduce(f: Polynomial, G: GroebnerBasis, convention: str | None = None) -> ReductionResult:
    """Divide f by the basis, returning quotients (one per element) and the
    remainder.  The convention defaults to the basis's own."""
    if f.nvars != G.nvars:
        raise ValueError(f"arity mismatch: {f.nvars} vs {G.nvars}")
    conv = convention if convention is not None else G.convention
    if conv not in CONVENTIONS:
        raise ValueError(f"unknown coefficient convention {conv!r}")
    quotients, remainder = _reduce_raw(f.terms, f.nvars, G.elements, G._lts, G.order, conv)
    return ReductionResult([Polynomial._make(q, f.nvars) for q in quotients],
                           Polynomial._make(remainder, f.nvars))


def remainder(f: Polynomial, G: GroebnerBasis, convention: str | None = None) -> Polynomial:
    return reduce(f, G, convention).remainder


def s_polynomial(g: Polynomial, h: Polynomial, order: TermOrder = LEX) -> Polynomial:
    """S(g, h) = (L / LT(g)) g - (L / LT(h)) h for
    L = lcm(LC(g), LC(h)) * lcm(LM(g), LM(h))."""
    if g.is_zero() or h.is_zero():
        raise ValueError("S-polynomial of the zero polynomial")
    gm, gc = g.leading_term(order)
    hm, hc = h.leading_term(order)
    cl = _lcm(gc, hc)
    ml = mono_lcm(gm, hm)
    return g.mul_term(cl // gc, mono_div(ml, gm)) - h.mul_term(cl // hc, mono_div(ml, hm))


def g_polynomial(g: Polynomial, h: Polynomial, order: TermOrder = LEX) -> Polynomial:
    """GCD-polynomial: u (M/LM(g)) g + v (M/LM(h)) h with
    u LC(g) + v LC(h) = gcd(LC(g), LC(h)) and M = lcm(LM(g), LM(h)).

    Its leading term is gcd(LC(g), LC(h)) * M; completion over Z needs these
    to realize coefficient gcds that no S-polynomial can reach."""
    if g.is_zero() or h.is_zero():
        raise ValueError("G-polynomial of the zero polynomial")
    gm, gc = g.leading_term(order)
    hm, hc = h.leading_term(order)
    d, u, v = xgcd(gc, hc)
    # Pin u to the smallest-|u| Bezout solution (positive on ties).
    step = hc // d
    u = coeff_divmod(u, step, "minabs")[1]
    v = (d - u * gc) // hc
    ml = mono_lcm(gm, hm)
    return g.mul_term(u, mono_div(ml, gm)) + h.mul_term(v, mono_div(ml, hm))


def _term_divides(lt1: tuple[Mono, int], lt2: tuple[Mono, int]) -> bool:
    """Term divisibility: monomial divides and coefficient divides."""
    return mono_divides(lt1[0], lt2[0]) and lt2[1] % lt1[1] == 0


def buchberger(generators: list[Polynomial], order: TermOrder = LEX,
               conv: str = "minabs", track_cofactors: bool = False) -> GroebnerBasis:
    """Complete the generators to a strong Groebner basis over Z.

    Pairs are processed FIFO; for each pair the S-polynomial is reduced (unless
    the leading monomials are coprime and one leading coefficient divides the
    other) and the G-polynomial is reduced when neither leading coefficient
    divides the other.  Nonzero remainders are appended, their pairs queued.
    The final basis is sign-normalized, purged of term-redundant elements,
    tail-reduced and sorted by descending leading monomial.
    """
    if not generators:
        raise ValueError("empty generator list")
    if any(g.is_zero() for g in generators):
        raise ValueError("zero generator")
    nvars = generators[0].nvars
    basis = list(generators)
    lts = [g.leading_term(order) for g in basis]
    rows: list[list[Polynomial]] | None = None
    if track_cofactors:
        rows = [[Polynomial.constant(1, nvars) if i == j else Polynomial.zero(nvars)
                 for j in range(len(generators))] for i in range(len(generators))]

    def append(p: Polynomial, row: list[Polynomial] | None):
        basis.append(p)
        lts.append(p.leading_term(order))
        if rows is not None:
            rows.append(row)
        t = len(basis) - 1
        queue.extend((i, t) for i in range(t))

    def reduce_tracked(p: Polynomial, row: list[Polynomial] | None):
        qs, rem = _reduce_raw(p.terms, nvars, basis, lts, order, conv)
        if rows is None:
            return Polynomial._make(rem, nvars), None
        for t, q in enumerate(qs):
            if q:
                qp = Polynomial._make(q, nvars)
                row = [rc - qp * bc for rc, bc in zip(row, rows[t])]
        return Polynomial._make(rem, nvars), row

    queue: deque[tuple[int, int]] = deque((i, j) for j in range(len(basis)) for i in range(j))
    while queue:
        i, j = queue.popleft()
        (mi, ci), (mj, cj) = lts[i], lts[j]
        coprime = all(min(a, b) == 0 for a, b in zip(mi, mj))
        one_divides = ci % cj == 0 or cj % ci == 0
        if not (coprime and one_divides):
            spoly = s_polynomial(basis[i], basis[j], order)
            if spoly:
                row = None
                if rows is not None:
                    cl = _lcm(ci, cj)
                    ml = mono_lcm(mi, mj)
                    ti = (cl // ci, mono_div(ml, mi))
                    tj = (cl // cj, mono_div(ml, mj))
                    row = [a.mul_term(*ti) - b.mul_term(*tj)
                           for a, b in zip(rows[i], rows[j])]
                rem, row = reduce_tracked(spoly, row)
                if rem:
                    append(rem, row)
        if not one_divides:
            gpoly = g_polynomial(basis[i], basis[j], order)
            row = None
            if rows is not None:
                d, u, v = xgcd(ci, cj)
                u = coeff_divmod(u, cj // d, "minabs")[1]
                v = (d - u * ci) // cj
                ml = mono_lcm(mi, mj)
                row = [a.mul_term(u, mono_div(ml, mi)) + b.mul_term(v, mono_div(ml, mj))
                       for a, b in zip(rows[i], rows[j])]
            rem, row = reduce_tracked(gpoly, row)
            if rem:
                append(rem, row)

    # Sign-normalize so leading coefficients are positive.
    for t in range(len(basis)):
        if lts[t][1] < 0:
            basis[t] = -basis[t]
            lts[t] = (lts[t][0], -lts[t][1])
            if rows is not None:
                rows[t] = [-c for c in rows[t]]

    # Drop elements whose leading term is term-divisible by another's.
    keep: list[int] = []
    for t in range(len(basis)):
        redundant = False
        for s in range(len(basis)):
            if s == t:
                continue
            if _term_divides(lts[s], lts[t]) and (lts[s] != lts[t] or s < t):
                redundant = True
                break
        if not redundant:
            keep.append(t)
    keep.sort(key=lambda t: order.key(lts[t][0]), reverse=True)
    basis = [basis[t] for t in keep]
    lts = [lts[t] for t in keep]
    if rows is not None:
        rows = [rows[t] for t in keep]

    # Tail-reduce each element by the others; leading terms are untouched, so
    # strongness is preserved and the output is stable.
    for t in range(len(basis)):
        others = basis[:t] + basis[t + 1:]
        olts = lts[:t] + lts[t + 1:]
        gm, gc = lts[t]
        tail = dict(basis[t].terms)
        del tail[gm]
        qs, rem = _reduce_raw(tail, nvars, others, olts, order, conv)
        rem[gm] = gc
        basis[t] = Polynomial._make(rem, nvars)
        if rows is not None:
            orows = rows[:t] + rows[t + 1:]
            row = rows[t]
            for s, q in enumerate(qs):
                if q:
                    qp = Polynomial._make(q, nvars)
                    row = [rc - qp * oc for rc, oc in zip(row, orows[s])]
            rows[t] = row

    return GroebnerBasis(basis, order, conv,
                         generators=list(generators) if track_cofactors else None,
                         cofactors=rows, verified=True)


@dataclass
class VerifyReport:
    """Outcome of the strong-basis criterion; on failure carries the first
    violating pair and, for an S-polynomial failure, its nonzero remainder."""

    passed: bool
    reason: str = ""
    pair: tuple[int, int] | None = None
    witness: Polynomial | None = None

    def __bool__(self) -> bool:
        return self.passed


def verify_strong_gb(G: GroebnerBasis) -> VerifyReport:
    """Check the two strong-basis conditions: every pair of leading terms is
    covered by some element dividing both lcm(LM) and gcd(LC), and every
    S-polynomial reduces to zero."""
    lts = G._lts
    n = len(lts)
    for i in range(n):
        for j in range(i + 1, n):
            (mi, ci), (mj, cj) = lts[i], lts[j]
            ml = mono_lcm(mi, mj)
            cg = xgcd(ci, cj)[0]
            if not any(mono_divides(hm, ml) and cg % hc == 0 for hm, hc in lts):
                return VerifyReport(False, "no element covers lcm(LM)/gcd(LC)", (i, j))
    for i in range(n):
        for j in range(i + 1, n):
            spoly = s_polynomial(G.elements[i], G.elements[j], G.order)
            if spoly.is_zero():
                continue
            rem = reduce(spoly, G).remainder
            if not rem.is_zero():
                return VerifyReport(False, "S-polynomial does not reduce to zero",
                                    (i, j), rem)
    G.verified = True
    return VerifyReport(True)


def ideal_member(f: Polynomial, G: GroebnerBasis) -> tuple[bool, list[Polynomial] | None]:
    """Membership test via zero remainder; valid only against a verified
    strong basis, so unverified bases are refused."""
    if not G.verified:
        raise ValueError("basis not verified strong; run verify_strong_gb first")
    res = reduce(f, G)
    if res.remainder.is_zero():
        return True, res.quotients
    return False, None


def basis_to_text(G: GroebnerBasis) -> str:
    """Serialize: a header line, then one canonical polynomial per line."""
    lines = [f"order=lex vars=x,y conv={G.convention}"]
    lines.extend(format_poly(g) for g in G.elements)
    return "\n".join(lines) + "\n"


def basis_from_text(text: str) -> GroebnerBasis:
    """Parse the basis_to_text format; the result is unverified."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty basis file")
    header = lines[0].split()
    fields = dict(part.split("=", 1) for part in header if "=" in part)
    conv = fields.get("conv", "minabs")
    if conv not in ("minabs", "nonneg"):
        raise ValueError(f"unknown convention {conv!r}")
    elements = [parse_poly(ln) for ln in lines[1:]]
    return GroebnerBasis(elements, LEX, conv)
