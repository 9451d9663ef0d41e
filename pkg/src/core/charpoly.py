# src/core/charpoly.py
"""
Exact characteristic polynomials det(xI - A) and determinants of integer
matrices, computed by sympy's DomainMatrix over ZZ (division-free, so every
intermediate value stays an integer).
"""

import logging

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from src.core.matrices import ExactMatrix, PolyMatrix
from src.core.polynomial import X, Polynomial, from_descending, one
from src.utils.errors import ExactnessError, UsageError

logger = logging.getLogger(__name__)


def to_domain_matrix(a: ExactMatrix) -> DomainMatrix:
    if isinstance(a, PolyMatrix):
        raise UsageError("characteristic polynomials need an integer matrix")
    rows = [[ZZ(int(v)) for v in row] for row in a.entries]
    return DomainMatrix(rows, (a.dim, a.dim), ZZ)


def char_poly(a: ExactMatrix) -> Polynomial:
    """Monic characteristic polynomial of degree a.dim, in X"""
    dm = to_domain_matrix(a)
    if a.dim == 0:
        return one(X)
    p = from_descending([int(c) for c in dm.charpoly()], X)
    if p.degree() != a.dim or p.LC() != 1:
        raise ExactnessError(f"char_poly of dim {a.dim} is not monic of full degree")
    logger.debug(f"char_poly dim={a.dim}")
    return p


def determinant(a: ExactMatrix) -> int:
    """Exact determinant; 1 for the empty matrix"""
    dm = to_domain_matrix(a)
    if a.dim == 0:
        return 1
    return int(dm.det())
