import numpy as np
import pytest

from lie2.errors import MissingRestrictedData
from lie2.fixtures import a1, a2, a3, a4, all_fixtures, even_abelian, odd_abelian
from lie2.gf2la import GF2, FieldSpec
from lie2.liesuper import (
    LieSuperAlgebra,
    flatten_to_restricted,
    transform_basis,
    validate_restricted,
    validate_superalgebra,
)


def test_fixtures_validate():
    for name, L in all_fixtures().items():
        assert validate_superalgebra(L) == [], name
        assert validate_restricted(L) == [], name


def test_abelian_with_zero_q_is_valid():
    L = odd_abelian(2)
    assert validate_superalgebra(L) == []


def test_a2_is_valid_l6():
    # L6 for A2: ad(y)^2 = 0 = ad(x) = ad(q(y))
    L = a2()
    assert L.ad_matrix(L.basis_vector(1)).is_zero()
    assert validate_superalgebra(L) == []


def test_nonzero_odd_self_bracket_rejected():
    br = np.zeros((1, 1, 1), dtype=np.int64)
    br[0, 0, 0] = 1  # [y,y] = y: wrong parity too
    L = LieSuperAlgebra(GF2, 0, 1, br, np.zeros((1, 0)), np.zeros((0, 0)))
    axioms = {v.axiom for v in validate_superalgebra(L)}
    assert axioms & {"L5", "grading"}


def test_fake_even_self_bracket_rejected():
    br = np.zeros((1, 1, 1), dtype=np.int64)
    br[0, 0, 0] = 1  # [x,x] = x
    L = LieSuperAlgebra(GF2, 1, 0, br, np.zeros((0, 1)), np.array([[1]]))
    rep = validate_superalgebra(L)
    assert any(v.axiom == "L3" and v.witness == (0, 0) for v in rep)


def test_missing_two_map():
    L = a2()
    L0 = LieSuperAlgebra(L.field, 1, 1, L.bracket, L.q_diag, None)
    with pytest.raises(MissingRestrictedData):
        validate_restricted(L0)


def test_a3_variants():
    # x^[2] = x is valid; so is x^[2] = 0 (everything central)
    assert validate_restricted(a3()) == []
    L = even_abelian(1)
    assert validate_restricted(L) == []


def test_flatten_a2():
    L = a2()
    flat = flatten_to_restricted(L)
    z = np.array([1, 1])  # x + y
    assert list(flat.two_op(z)) == [1, 0]  # q(y) = x


def test_flatten_a4():
    L = a4()
    flat = flatten_to_restricted(L)
    z = np.array([1, 1])
    # x^[2] + q(y) + [y,x] = x + 0 + y
    assert list(flat.two_op(z)) == [1, 1]
    assert list(flat.two_op(np.zeros(2, dtype=np.int64))) == [0, 0]


def test_flatten_read_back_is_valid_restricted_lie_algebra():
    for name, L in all_fixtures().items():
        flat = flatten_to_restricted(L)
        E = flat.as_even_algebra()
        assert validate_superalgebra(E) == [], name
        assert validate_restricted(E) == [], name


def test_q_polarization_identity():
    # q(u+v) + q(u) + q(v) = [u,v] for odd u, v (regression for the forced
    # polarization definition)
    rng = np.random.default_rng(3)
    for L in (a2(), a4(), a2(FieldSpec(2))):
        for _ in range(40):
            u = L.random_vector(rng, parity=1)
            v = L.random_vector(rng, parity=1)
            lhs = L.q_of(u ^ v) ^ L.q_of(u) ^ L.q_of(v)
            assert np.array_equal(lhs, L.bracket_vec(u, v))


def test_transform_basis_preserves_validity():
    rng = np.random.default_rng(5)
    L = a4(FieldSpec(2))
    for _ in range(10):
        T = np.eye(2, dtype=np.int64)
        T[0, 0] = int(rng.integers(1, 4))
        T[1, 1] = int(rng.integers(1, 4))
        L2 = transform_basis(L, T)
        assert validate_superalgebra(L2) == []
        assert validate_restricted(L2) == []


def test_gf4_r1_checked():
    L = a3(FieldSpec(2))
    assert validate_restricted(L) == []
