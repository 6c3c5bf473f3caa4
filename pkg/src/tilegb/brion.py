"""Short rational forms for triangle integer-point transforms.

The side-m triangle's Newton polynomial equals a three-term sum of rational
functions attached to the triangle's corners; verification clears
denominators and checks a polynomial identity by exact multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bones import b3_poly, triangle
from .polyring import Polynomial


@dataclass
class RationalForm:
    """Sum of numerator / product(denominator factors) terms."""

    terms: list[tuple[Polynomial, list[Polynomial]]]


def _p(coeffs: dict) -> Polynomial:
    return Polynomial(coeffs)


def rational_form_T(m: int) -> RationalForm:
    """The corner expansion of the side-m triangle:
    1/((1-x)(1-y)) + x^(m+1)/((x-1)(x-y)) + y^(m+1)/((y-1)(y-x))."""
    if m < 0:
        raise ValueError("negative side length")
    one_minus_x = _p({(0, 0): 1, (1, 0): -1})
    one_minus_y = _p({(0, 0): 1, (0, 1): -1})
    x_minus_one = _p({(1, 0): 1, (0, 0): -1})
    y_minus_one = _p({(0, 1): 1, (0, 0): -1})
    x_minus_y = _p({(1, 0): 1, (0, 1): -1})
    y_minus_x = _p({(0, 1): 1, (1, 0): -1})
    return RationalForm([
        (Polynomial.constant(1), [one_minus_x, one_minus_y]),
        (_p({(m + 1, 0): 1}), [x_minus_one, x_minus_y]),
        (_p({(0, m + 1): 1}), [y_minus_one, y_minus_x]),
    ])


def form_denotes(form: RationalForm, p: Polynomial) -> bool:
    """Exact check that the form sums to the polynomial p, by clearing all
    denominators: sum_i num_i * prod_{j != i} den_j == p * prod_j den_j."""
    dens = []
    for _, factors in form.terms:
        d = Polynomial.constant(1)
        for f in factors:
            if f.is_zero():
                raise ValueError("zero denominator factor")
            d = d * f
        dens.append(d)
    total = Polynomial.constant(1)
    for d in dens:
        total = total * d
    lhs = Polynomial.zero()
    for i, (num, _) in enumerate(form.terms):
        part = num
        for j, d in enumerate(dens):
            if j != i:
                part = part * d
        lhs = lhs + part
    return lhs == p * total


def verify_brion(m: int) -> bool:
    """Check T(m) * (1-x)(1-y)(x-y) == (x-y) - x^(m+1)(1-y) + y^(m+1)(1-x),
    the cleared-denominator statement of the corner expansion."""
    if m < 0:
        raise ValueError("negative side length")
    x_minus_y = _p({(1, 0): 1, (0, 1): -1})
    delta = _p({(0, 0): 1, (1, 0): -1}) * _p({(0, 0): 1, (0, 1): -1}) * x_minus_y
    rhs = (x_minus_y
           - _p({(m + 1, 0): 1}) * _p({(0, 0): 1, (0, 1): -1})
           + _p({(0, m + 1): 1}) * _p({(0, 0): 1, (1, 0): -1}))
    return triangle(m) * delta == rhs


def fast_triangle(m: int) -> Polynomial:
    """triangle(m) built from the recurrence T(k) = T(k-1) + b3(k)."""
    if m < 0:
        raise ValueError("negative side length")
    acc: dict[tuple[int, int], int] = {}
    for k in range(1, m + 1):
        for mono, c in b3_poly(k).terms.items():
            acc[mono] = acc.get(mono, 0) + c
    return Polynomial(acc)
