"""Sparse multivariate polynomials with arbitrary-precision integer coefficients.

Monomials are plain tuples of non-negative exponents; a polynomial is a map
from monomial to nonzero coefficient.  The default ring is Z[x, y].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Mono = tuple[int, ...]

CONVENTIONS = ("minabs", "nonneg")


class PolyParseError(ValueError):
    """Syntax error in polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class TermOrder:
    """Lexicographic term order; ``precedence`` lists variable indices from
    most to least significant (default: x before y)."""

    precedence: tuple[int, ...] = (0, 1)

    def key(self, mono: Mono) -> tuple[int, ...]:
        return tuple(mono[i] for i in self.precedence)


LEX = TermOrder()


def lex_compare(u: Mono, v: Mono, order: TermOrder = LEX) -> int:
    """Compare monomials under ``order``: -1 (less), 0 (equal) or +1 (greater)."""
    if len(u) != len(v):
        raise ValueError(f"arity mismatch: {len(u)} vs {len(v)}")
    ku, kv = order.key(u), order.key(v)
    return (ku > kv) - (ku < kv)


def mono_mul(u: Mono, v: Mono) -> Mono:
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u: Mono, v: Mono) -> bool:
    """True iff the monomial u divides v componentwise."""
    return all(a <= b for a, b in zip(u, v))


def mono_div(u: Mono, v: Mono) -> Mono:
    """u / v; requires v | u."""
    q = tuple(a - b for a, b in zip(u, v))
    if any(e < 0 for e in q):
        raise ValueError(f"{v} does not divide {u}")
    return q


def mono_lcm(u: Mono, v: Mono) -> Mono:
    return tuple(max(a, b) for a, b in zip(u, v))


class Polynomial:
    """Immutable sparse polynomial over Z.

    ``terms`` maps exponent tuples to nonzero integer coefficients; the zero
    polynomial has an empty map.  All monomials share the arity ``nvars``.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms: dict[Mono, int] | Iterable[tuple[Mono, int]] | None = None,
                 nvars: int = 2):
        data: dict[Mono, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, coeff in items:
                mono = tuple(mono)
                if len(mono) != nvars:
                    raise ValueError(f"monomial {mono} has arity {len(mono)}, expected {nvars}")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                c = data.get(mono, 0) + coeff
                if c:
                    data[mono] = c
                else:
                    data.pop(mono, None)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @staticmethod
    def _make(data: dict[Mono, int], nvars: int) -> Polynomial:
        # Internal: wrap an already-normalized term map without re-validating.
        p = object.__new__(Polynomial)
        object.__setattr__(p, "nvars", nvars)
        object.__setattr__(p, "terms", data)
        object.__setattr__(p, "_hash", None)
        return p

    @staticmethod
    def zero(nvars: int = 2) -> Polynomial:
        return Polynomial(None, nvars)

    @staticmethod
    def constant(c: int, nvars: int = 2) -> Polynomial:
        return Polynomial({(0,) * nvars: c}, nvars)

    @staticmethod
    def variable(index: int, nvars: int = 2) -> Polynomial:
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return Polynomial({mono: 1}, nvars)

    @staticmethod
    def term(coeff: int, mono: Mono) -> Polynomial:
        return Polynomial({tuple(mono): coeff}, len(mono))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Mono, int]]:
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.nvars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def _check_arity(self, other: Polynomial):
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.constant(other, self.nvars)
        self._check_arity(other)
        data = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = data.get(mono, 0) + coeff
            if c:
                data[mono] = c
            else:
                del data[mono]
        return Polynomial._make(data, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._make({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.nvars)
            return Polynomial._make({m: other * c for m, c in self.terms.items()}, self.nvars)
        self._check_arity(other)
        data: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = data.get(m, 0) + c1 * c2
                if c:
                    data[m] = c
                else:
                    del data[m]
        return Polynomial._make(data, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power")
        acc = Polynomial.constant(1, self.nvars)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def mul_term(self, coeff: int, mono: Mono) -> Polynomial:
        """Multiply by the single term coeff * x^mono."""
        if coeff == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial._make({mono_mul(m, mono): coeff * c for m, c in self.terms.items()},
                                self.nvars)

    def leading_term(self, order: TermOrder = LEX) -> tuple[Mono, int]:
        """(monomial, coefficient) of the largest term under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=order.key)
        return mono, self.terms[mono]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def max_exponent(self, var: int) -> int:
        """Largest exponent of variable ``var``; 0 for the zero polynomial."""
        return max((m[var] for m in self.terms), default=0)

    def permute_vars(self, perm: tuple[int, ...]) -> Polynomial:
        """Relabel variables: exponent of old variable i moves to perm[i]."""
        data = {}
        for m, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(m):
                new[perm[i]] = e
            data[tuple(new)] = c
        return Polynomial(data, self.nvars)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def coeff_divmod(a: int, d: int, conv: str = "minabs") -> tuple[int, int]:
    """Division a = q*d + r with the remainder picked by the convention.

    minabs: |r| <= |d|/2, ties broken toward positive r.
    nonneg: 0 <= r < |d|.
    """
    if d == 0:
        raise ZeroDivisionError("division by zero coefficient")
    ad = abs(d)
    r = a % ad  # Python remainder is already in [0, ad)
    if conv == "minabs":
        if 2 * r > ad:
            r -= ad
        # 2*r == ad keeps the positive representative
    elif conv != "nonneg":
        raise ValueError(f"unknown coefficient convention {conv!r}")
    return (a - r) // d, r


def diff_quotient(p: Polynomial) -> Polynomial:
    """(p(x) - p(y)) / (x - y) for a polynomial p in x alone.

    Always a polynomial: x^m contributes x^(m-1) + x^(m-2) y + ... + y^(m-1).
    """
    if p.nvars != 2:
        raise ValueError("expected a polynomial in the ring Z[x, y]")
    data: dict[Mono, int] = {}
    for (m, q), c in p.terms.items():
        if q != 0:
            raise ValueError("input must involve only the variable x")
        for i in range(m):
            mono = (m - 1 - i, i)
            v = data.get(mono, 0) + c
            if v:
                data[mono] = v
            else:
                del data[mono]
    return Polynomial(data, 2)


VAR_NAMES = ("x", "y")


def _display_key(item: tuple[Mono, int]) -> tuple[int, tuple[int, ...]]:
    # Ascending total degree, x-major within a degree: 1 < x < y < x^2 < x*y < y^2.
    mono = item[0]
    return (sum(mono), tuple(-e for e in mono))


def format_poly(p: Polynomial) -> str:
    """Canonical text form, e.g. "x^2 + x*y + y^2" or "-1 - x - y"."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for mono, coeff in sorted(p.terms.items(), key=_display_key):
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(VAR_NAMES[i])
            elif e > 1:
                factors.append(f"{VAR_NAMES[i]}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if coeff < 0 else "") + body)
        else:
            parts.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(parts)


def parse_poly(text: str) -> Polynomial:
    """Parse the canonical grammar: terms of optional integer coefficient and
    x/y power factors joined by '+'/'-'.  Inverse of format_poly."""
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise PolyParseError("expected integer", start)
        return int(text[start:pos])

    def read_factor() -> tuple[int, int]:
        # returns (variable index, exponent)
        nonlocal pos
        var = text[pos]
        if var not in VAR_NAMES:
            raise PolyParseError(f"expected variable, got {var!r}", pos)
        pos += 1
        exp = 1
        skip_ws()
        if pos < n and text[pos] == "^":
            pos += 1
            skip_ws()
            exp = read_int()
        return VAR_NAMES.index(var), exp

    terms: list[tuple[Mono, int]] = []
    skip_ws()
    if pos >= n:
        raise PolyParseError("empty polynomial", pos)
    sign = 1
    if text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos += 1
    while True:
        skip_ws()
        if pos >= n:
            raise PolyParseError("expected term", pos)
        coeff = sign
        exps = [0, 0]
        if text[pos].isdigit():
            coeff *= read_int()
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                skip_ws()
                vi, e = read_factor()
                exps[vi] += e
        elif text[pos] in VAR_NAMES:
            vi, e = read_factor()
            exps[vi] += e
        else:
            raise PolyParseError(f"expected term, got {text[pos]!r}", pos)
        skip_ws()
        while pos < n and text[pos] == "*":
            pos += 1
            skip_ws()
            vi, e = read_factor()
            exps[vi] += e
            skip_ws()
        terms.append(((exps[0], exps[1]), coeff))
        if pos >= n:
            break
        if text[pos] not in "+-":
            raise PolyParseError(f"expected '+' or '-', got {text[pos]!r}", pos)
        sign = -1 if text[pos] == "-" else 1
        pos += 1
    return Polynomial(terms, 2)
