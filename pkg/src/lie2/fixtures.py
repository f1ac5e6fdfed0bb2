"""Small named algebras used across the test suite and the CLI examples.

A1 = (0|1) with q = 0            -> V(A1) = U(A1) = k[y]/(y^2)
A2 = (1|1), q(y) = x, x^[2] = 0  -> V(A2) = k[y]/(y^4), U(A2) = k[y]
A3 = (1|0), x^[2] = x            -> V(A3) = k[x]/(x^2 + x), semisimple
A4 = (1|1), [x,y] = y, q = 0, x^[2] = x
"""

from __future__ import annotations

import numpy as np

from .gf2la import GF2, FieldSpec
from .liesuper import LieSuperAlgebra


def a1(field: FieldSpec = GF2) -> LieSuperAlgebra:
    return LieSuperAlgebra(
        field,
        even_dim=0,
        odd_dim=1,
        bracket=np.zeros((1, 1, 1), dtype=np.int64),
        q_diag=np.zeros((1, 0), dtype=np.int64),
        two_map=np.zeros((0, 0), dtype=np.int64),
        names=["y"],
    )


def a2(field: FieldSpec = GF2) -> LieSuperAlgebra:
    q = np.array([[1]], dtype=np.int64)  # q(y) = x
    return LieSuperAlgebra(
        field,
        even_dim=1,
        odd_dim=1,
        bracket=np.zeros((2, 2, 2), dtype=np.int64),
        q_diag=q,
        two_map=np.zeros((1, 1), dtype=np.int64),
        names=["x", "y"],
    )


def a3(field: FieldSpec = GF2) -> LieSuperAlgebra:
    return LieSuperAlgebra(
        field,
        even_dim=1,
        odd_dim=0,
        bracket=np.zeros((1, 1, 1), dtype=np.int64),
        q_diag=np.zeros((0, 1), dtype=np.int64),
        two_map=np.array([[1]], dtype=np.int64),  # x^[2] = x
        names=["x"],
    )


def a4(field: FieldSpec = GF2) -> LieSuperAlgebra:
    br = np.zeros((2, 2, 2), dtype=np.int64)
    br[0, 1, 1] = 1  # [x,y] = y
    br[1, 0, 1] = 1  # symmetric partner
    return LieSuperAlgebra(
        field,
        even_dim=1,
        odd_dim=1,
        bracket=br,
        q_diag=np.zeros((1, 1), dtype=np.int64),
        two_map=np.array([[1]], dtype=np.int64),  # x^[2] = x
        names=["x", "y"],
    )


def even_abelian(a: int, field: FieldSpec = GF2, two_map=None) -> LieSuperAlgebra:
    """Purely even abelian algebra, zero 2-map unless one is supplied."""
    if two_map is None:
        two_map = np.zeros((a, a), dtype=np.int64)
    return LieSuperAlgebra(
        field,
        even_dim=a,
        odd_dim=0,
        bracket=np.zeros((a, a, a), dtype=np.int64),
        q_diag=np.zeros((0, a), dtype=np.int64),
        two_map=two_map,
    )


def odd_abelian(b: int, field: FieldSpec = GF2) -> LieSuperAlgebra:
    """Purely odd space with q = 0; U = V = the exterior algebra."""
    return LieSuperAlgebra(
        field,
        even_dim=0,
        odd_dim=b,
        bracket=np.zeros((b, b, b), dtype=np.int64),
        q_diag=np.zeros((b, 0), dtype=np.int64),
        two_map=np.zeros((0, 0), dtype=np.int64),
    )


def all_fixtures(field: FieldSpec = GF2) -> dict[str, LieSuperAlgebra]:
    return {"A1": a1(field), "A2": a2(field), "A3": a3(field), "A4": a4(field)}
