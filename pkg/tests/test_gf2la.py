import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lie2.errors import DivisionByZero, MalformedInput
from lie2.gf2la import (
    GF2,
    FieldSpec,
    Matrix,
    field_arith,
    rank_and_kernel,
    solve_linear,
)


def brute_solutions(field, rows, b):
    """Oracle: enumerate every candidate vector and keep the solutions."""
    n = len(rows[0]) if rows else 0
    sols = []
    for cand in itertools.product(field.elements(), repeat=n):
        ok = True
        for row, rhs in zip(rows, b):
            acc = 0
            for c, x in zip(row, cand):
                acc ^= field.mul(c, x)
            if acc != rhs:
                ok = False
                break
        if ok:
            sols.append(np.array(cand))
    return sols


def test_gf2_basics():
    assert field_arith(GF2, 1, 1, "add") == 0
    assert field_arith(GF2, 1, 1, "mul") == 1
    assert field_arith(GF2, 1, 0, "inv") == 1
    with pytest.raises(DivisionByZero):
        field_arith(GF2, 0, 0, "inv")


def test_gf4_inverse_of_t():
    # t has inverse t+1: the oracle is the product t*(t+1) = t^2+t = 1
    f4 = FieldSpec(2)
    t, t1 = 0b10, 0b11
    assert f4.mul(t, t1) == 1
    assert field_arith(f4, t, 0, "inv") == t1


@pytest.mark.parametrize("e", [1, 2, 3, 4, 8])
def test_one_is_identity(e):
    f = FieldSpec(e)
    for a in f.elements():
        assert f.mul(a, 1) == a


@pytest.mark.parametrize("e", [1, 2, 3])
def test_field_axioms_exhaustive(e):
    f = FieldSpec(e)
    els = list(f.elements())
    for a, b, c in itertools.product(els, repeat=3):
        assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
        assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
        assert f.mul(a, b) == f.mul(b, a)
    for a in els[1:]:
        assert f.mul(a, f.inv(a)) == 1


def test_reducible_poly_rejected():
    with pytest.raises(MalformedInput):
        FieldSpec(2, defining_poly=0b110)  # x^2 + x = x(x+1)


def test_default_polys_have_degree_e():
    for e in range(1, 17):
        f = FieldSpec(e)
        assert f.poly.bit_length() - 1 == e


def test_rank_kernel_identity_and_zero():
    I = Matrix.identity(GF2, 4)
    r, k = rank_and_kernel(I)
    assert r == 4 and k == []
    Z = Matrix.zeros(GF2, 3, 5)
    r, k = rank_and_kernel(Z)
    assert r == 0 and len(k) == 5
    assert np.array_equal(np.stack(k), np.eye(5, dtype=np.int64))


def test_rank_kernel_ones_2x2():
    # row-reduced by hand: [[1,1],[1,1]] -> [[1,1],[0,0]], kernel (1,1)
    M = Matrix(GF2, [[1, 1], [1, 1]])
    r, k = rank_and_kernel(M)
    assert r == 1
    assert len(k) == 1
    assert list(k[0]) == [1, 1]


def test_solve_identity_and_zero():
    I = Matrix.identity(GF2, 3)
    b = np.array([1, 0, 1])
    assert list(solve_linear(I, b)) == [1, 0, 1]
    Z = Matrix.zeros(GF2, 2, 2)
    assert solve_linear(Z, np.array([1, 0])) is None


def test_solve_underdetermined_deterministic():
    # oracle: the four candidates of [[1,1]]x=(1) are (1,0) and (0,1);
    # free variables are set to 0, so the pivot solution (1,0) is returned
    M = Matrix(GF2, [[1, 1]])
    sols = brute_solutions(GF2, [[1, 1]], [1])
    assert sorted(map(list, sols)) == [[0, 1], [1, 0]]
    assert list(solve_linear(M, np.array([1]))) == [1, 0]


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=0, max_value=2**31 - 1),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
)
def test_rank_transpose_invariant(e, seed, m, n):
    f = FieldSpec(e)
    rng = np.random.default_rng(seed)
    A = Matrix(f, rng.integers(0, f.order, size=(m, n)))
    assert A.rank() == A.transpose().rank()


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=0, max_value=2**31 - 1),
)
def test_solve_roundtrip(e, seed):
    f = FieldSpec(e)
    rng = np.random.default_rng(seed)
    m, n = int(rng.integers(1, 7)), int(rng.integers(1, 7))
    A = Matrix(f, rng.integers(0, f.order, size=(m, n)))
    x0 = rng.integers(0, f.order, size=n)
    b = A.mul_vec(x0)
    x = solve_linear(A, b)
    assert x is not None
    assert np.array_equal(A.mul_vec(x), b)


def test_kernel_vectors_annihilated():
    rng = np.random.default_rng(7)
    for e in (1, 2, 4):
        f = FieldSpec(e)
        A = Matrix(f, rng.integers(0, f.order, size=(5, 8)))
        r, kern = rank_and_kernel(A)
        assert r + len(kern) == 8
        for v in kern:
            assert not A.mul_vec(v).any()
        if kern:
            K = Matrix(f, np.stack(kern))
            assert K.rank() == len(kern)


def test_field_embedding():
    f2, f4, f16 = FieldSpec(1), FieldSpec(2), FieldSpec(4)
    t = f2.embedding_into(f4)
    assert list(t) == [0, 1]
    emb = f4.embedding_into(f16)
    # embeddings are field homomorphisms
    for a in f4.elements():
        for b in f4.elements():
            assert emb[f4.mul(a, b)] == f16.mul(int(emb[a]), int(emb[b]))
            assert emb[a ^ b] == int(emb[a]) ^ int(emb[b])
