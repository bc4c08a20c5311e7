from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

import mpmath

from ..utils.helpers import ParameterError
from .params import Params

Rational = Union[int, Fraction]


def pochhammer(x: Rational, k: int) -> Fraction:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1."""
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


def terminating_2f1(a: Rational, b: int, c: Rational, z: Rational) -> Fraction:
    """Exact 2F1(a, b; c; z) for a non-positive integer b.

    The series stops after -b + 1 terms. Each term is obtained from the
    previous one by the ratio (a+k)(b+k) z / ((c+k)(k+1)).
    """
    if isinstance(b, Fraction):
        if b.denominator != 1:
            raise ParameterError(f"b={b} must be a non-positive integer")
        b = b.numerator
    if b > 0:
        raise ParameterError(f"b={b} must be a non-positive integer")
    a, c, z = Fraction(a), Fraction(c), Fraction(z)
    term = Fraction(1)
    total = Fraction(1)
    for k in range(-b):
        if c + k == 0:
            raise ParameterError(f"c={c} hits a pole before the series terminates")
        term = term * (a + k) * (b + k) * z / ((c + k) * (k + 1))
        total += term
    return total


def hyp2f1_parameters(params: Params) -> tuple[int, int, Fraction, Fraction]:
    """(a, b, c, z) = (1, 1 - n, (1 - dn)/2, d/2)."""
    return (
        1,
        1 - params.n,
        Fraction(1 - params.half_edges, 2),
        Fraction(params.d, 2),
    )


def hyp2f1_terminating(params: Params, cap: Optional[int] = None) -> Fraction:
    """2F1(1, 1-n; (1-dn)/2; d/2) evaluated exactly; equals E(X)."""
    params.check_exact(cap)
    return terminating_2f1(*hyp2f1_parameters(params))


def hyp2f1_float(params: Params, digits: int = 30) -> float:
    """The same series summed in mpmath floating point, as a float cross-check.

    mpmath.hyp2f1 leaves the series for transformation formulas once
    1 - n < -1000 and then returns a complex value, so the terms are summed
    here. Every term is positive.
    """
    a, b, c, z = hyp2f1_parameters(params)
    with mpmath.workdps(digits):
        c_mp = mpmath.mpf(c.numerator) / c.denominator
        z_mp = mpmath.mpf(z.numerator) / z.denominator
        term = mpmath.mpf(1)
        terms = [term]
        for k in range(-b):
            term = term * (a + k) * (b + k) * z_mp / ((c_mp + k) * (k + 1))
            terms.append(term)
        value = mpmath.fsum(terms)
    return float(value)
