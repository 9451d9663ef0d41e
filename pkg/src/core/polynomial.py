# src/core/polynomial.py
"""
Integer polynomials as sympy Poly objects over ZZ.

Entries of the q-weighted transfer matrices and the crossing-refined counts
are polynomials in Q; characteristic polynomials are polynomials in X.
Coefficient lists handed in and out of this module are ascending:
coefficients(p)[i] is the coefficient of var^i.
"""

from functools import reduce
from typing import Iterable, Sequence, Tuple

import sympy
from sympy import Poly
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed

from src.utils.errors import ExactnessError, NotDivisible

Polynomial = Poly

Q, X = sympy.symbols("q x")


def poly(coeffs: Sequence[int], var: sympy.Symbol = Q) -> Poly:
    """Build from ascending coefficients"""
    descending = [int(c) for c in reversed(tuple(coeffs))]
    return Poly(descending or [0], var, domain=ZZ)


def from_descending(coeffs: Sequence[int], var: sympy.Symbol = X) -> Poly:
    """Build from highest-degree-first coefficients, as polynomials are printed"""
    return Poly([int(c) for c in coeffs] or [0], var, domain=ZZ)


def zero(var: sympy.Symbol = Q) -> Poly:
    return Poly(0, var, domain=ZZ)


def one(var: sympy.Symbol = Q) -> Poly:
    return Poly(1, var, domain=ZZ)


def monomial(degree: int, var: sympy.Symbol = Q) -> Poly:
    return Poly(var**degree, var, domain=ZZ)


def coefficients(p: Poly) -> Tuple[int, ...]:
    """Ascending coefficients; empty for the zero polynomial"""
    if p.is_zero:
        return ()
    return tuple(int(c) for c in reversed(p.all_coeffs()))


def degree(p: Poly) -> int:
    """Degree; -1 for the zero polynomial"""
    return -1 if p.is_zero else int(p.degree())


def coefficient(p: Poly, i: int) -> int:
    coeffs = coefficients(p)
    return coeffs[i] if 0 <= i < len(coeffs) else 0


def constant_term(p: Poly) -> int:
    return coefficient(p, 0)


def second_coefficient(p: Poly) -> int:
    """Coefficient just below the leading one"""
    return coefficient(p, degree(p) - 1)


def is_monic(p: Poly) -> bool:
    return not p.is_zero and int(p.LC()) == 1


def evaluate(p: Poly, value: int) -> int:
    return int(p.eval(value))


def exact_div(p: Poly, divisor: Poly) -> Poly:
    """Quotient p / divisor over ZZ; NotDivisible carries the nonzero remainder"""
    if divisor.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    try:
        return p.exquo(divisor, auto=False)
    except ExactQuotientFailed:
        quotient, remainder = p.div(divisor, auto=False)
        raise NotDivisible(
            format_poly(p), format_poly(divisor), remainder, quotient
        ) from None


def divide_scalar(p: Poly, n: int) -> Poly:
    """Coefficientwise exact division by a nonzero integer"""
    if any(c % n for c in coefficients(p)):
        raise ExactnessError(f"{n} does not divide every coefficient of {p}")
    return p.exquo_ground(n)


def product(factors: Iterable[Tuple[Poly, int]], var: sympy.Symbol = X) -> Poly:
    """Product of f^e over (f, e) pairs"""
    return reduce(lambda acc, fe: acc * fe[0] ** fe[1], factors, one(var))


def format_poly(p: Poly, var: str = "") -> str:
    """Render like q^2+q+1 or x^3-10x^2+27x-20"""
    var = var or str(p.gen)
    coeffs = coefficients(p)
    if not coeffs:
        return "0"
    out = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + (
                var if deg == 1 else f"{var}^{deg}"
            )
        out.append(("-" if c < 0 else "+", body))
    first_sign, first_body = out[0]
    text = ("-" if first_sign == "-" else "") + first_body
    return text + "".join(s + b for s, b in out[1:])
