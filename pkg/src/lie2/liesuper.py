"""Finite-dimensional Lie superalgebras over GF(2^e) and their axioms.

Basis convention throughout the package: the even generators x_1..x_a come
first, then the odd generators y_1..y_b.  Elements are int arrays of length
n = a + b over the field.  The quadratic operator is stored only on the odd
basis; its value on a general odd vector is forced by polarization:

    q(sum b_j y_j) = sum b_j^2 q(y_j) + sum_{j<l} b_j b_l [y_j, y_l].

The optional 2-map is likewise stored on the even basis and extended by

    (sum a_i x_i)^[2] = sum a_i^2 x_i^[2] + sum_{i<j} a_i a_j [x_j, x_i],

which is the only extension compatible with the semilinearity and sum rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

import numpy as np

from .errors import MalformedInput, MissingRestrictedData
from .gf2la import GF2, FieldSpec, Matrix


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def __str__(self) -> str:
        msg = f"{self.axiom} fails at {self.witness}"
        return f"{msg}: {self.detail}" if self.detail else msg


class ValidationFailed(MalformedInput):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class LieSuperAlgebra:
    """Structure constants of a Lie superalgebra, with optional 2-map."""

    def __init__(
        self,
        field: FieldSpec,
        even_dim: int,
        odd_dim: int,
        bracket,
        q_diag,
        two_map=None,
        names: Optional[list[str]] = None,
    ):
        self.field = field
        self.even_dim = int(even_dim)
        self.odd_dim = int(odd_dim)
        n = self.even_dim + self.odd_dim
        self.dim = n
        self.bracket = np.asarray(bracket, dtype=np.int64).reshape(n, n, n)
        self.q_diag = np.asarray(q_diag, dtype=np.int64).reshape(self.odd_dim, self.even_dim)
        if two_map is None:
            self.two_map = None
        else:
            self.two_map = np.asarray(two_map, dtype=np.int64).reshape(self.even_dim, self.even_dim)
        for arr in (self.bracket, self.q_diag) + ((self.two_map,) if self.two_map is not None else ()):
            if arr.size and int(arr.max(initial=0)) >= field.order:
                raise MalformedInput("structure constant exceeds field order")
        if names is None:
            names = [f"x{i+1}" for i in range(self.even_dim)] + [f"y{j+1}" for j in range(self.odd_dim)]
        if len(names) != n or len(set(names)) != n:
            raise MalformedInput("generator names must be unique and match the dimension")
        self.names = list(names)

    # -- bookkeeping -------------------------------------------------------

    def parity(self, i: int) -> int:
        return 0 if i < self.even_dim else 1

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def even_part(self, z: np.ndarray) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        out[: self.even_dim] = z[: self.even_dim]
        return out

    def odd_part(self, z: np.ndarray) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        out[self.even_dim :] = z[self.even_dim :]
        return out

    def is_restricted(self) -> bool:
        return self.two_map is not None

    # -- structure maps ------------------------------------------------------

    def bracket_vec(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        f = self.field
        out = np.zeros(self.dim, dtype=np.int64)
        for i in np.nonzero(u)[0]:
            ui = int(u[i])
            row = self.bracket[i]
            for j in np.nonzero(v)[0]:
                cij = row[j]
                if cij.any():
                    out ^= f.mul_scalar(cij, f.mul(ui, int(v[j])))
        return out

    def q_of(self, z: np.ndarray) -> np.ndarray:
        """Quadratic operator on the odd part of z, as a full-length vector."""
        f = self.field
        a = self.even_dim
        out = np.zeros(self.dim, dtype=np.int64)
        odd_idx = np.nonzero(z[a:])[0] + a
        for j in odd_idx:
            bj = int(z[j])
            out[:a] ^= f.mul_scalar(self.q_diag[j - a], f.mul(bj, bj))
        for pos, j in enumerate(odd_idx):
            for l in odd_idx[pos + 1 :]:
                coef = f.mul(int(z[j]), int(z[l]))
                out ^= f.mul_scalar(self.bracket[j, l], coef)
        return out

    def two_of(self, z: np.ndarray) -> np.ndarray:
        """Polarized 2-map on the even part of z, as a full-length vector."""
        if self.two_map is None:
            raise MissingRestrictedData("algebra has no 2-map")
        f = self.field
        a = self.even_dim
        out = np.zeros(self.dim, dtype=np.int64)
        ev_idx = np.nonzero(z[:a])[0]
        for i in ev_idx:
            ai = int(z[i])
            out[:a] ^= f.mul_scalar(self.two_map[i], f.mul(ai, ai))
        for pos, i in enumerate(ev_idx):
            for j in ev_idx[pos + 1 :]:
                coef = f.mul(int(z[i]), int(z[j]))
                out ^= f.mul_scalar(self.bracket[j, i], coef)
        return out

    def two_operation(self, z: np.ndarray) -> np.ndarray:
        """The induced 2-operation z -> z0^[2] + q(z1) + [z1, z0] on all of L."""
        z0, z1 = self.even_part(z), self.odd_part(z)
        return self.two_of(z0) ^ self.q_of(z1) ^ self.bracket_vec(z1, z0)

    def ad_matrix(self, u: np.ndarray) -> Matrix:
        cols = [self.bracket_vec(u, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix(self.field, np.stack(cols, axis=1) if cols else np.zeros((self.dim, 0), dtype=np.int64))

    def random_vector(self, rng, parity: Optional[int] = None) -> np.ndarray:
        v = rng.integers(0, self.field.order, size=self.dim)
        if parity == 0:
            v[self.even_dim :] = 0
        elif parity == 1:
            v[: self.even_dim] = 0
        return v.astype(np.int64)

    def __repr__(self) -> str:
        kind = "restricted " if self.is_restricted() else ""
        return f"LieSuperAlgebra({kind}shape ({self.even_dim}|{self.odd_dim}) over {self.field})"


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _check_shapes(L: LieSuperAlgebra) -> None:
    n = L.dim
    if L.bracket.shape != (n, n, n):
        raise MalformedInput("bracket tensor has wrong shape")
    if L.q_diag.shape != (L.odd_dim, L.even_dim):
        raise MalformedInput("q table has wrong shape")
    if L.two_map is not None and L.two_map.shape != (L.even_dim, L.even_dim):
        raise MalformedInput("2-map table has wrong shape")


def validate_superalgebra(L: LieSuperAlgebra, rng_seed: int = 0, samples: int = 20) -> list[Violation]:
    """Check the bracket/q axioms; an empty report means the data is valid."""
    _check_shapes(L)
    f = L.field
    n, a = L.dim, L.even_dim
    out: list[Violation] = []

    for i in range(n):
        for j in range(n):
            p = L.parity(i) ^ L.parity(j)
            bad = [k for k in range(n) if L.bracket[i, j, k] and L.parity(k) != p]
            for k in bad:
                out.append(Violation("grading", (i, j, k), "bracket lands in the wrong parity"))

    for i in range(n):
        for j in range(i + 1, n):
            if not np.array_equal(L.bracket[i, j], L.bracket[j, i]):
                out.append(Violation("L1", (i, j), "[a,b] != [b,a]"))

    for i in range(a):
        if L.bracket[i, i].any():
            out.append(Violation("L3", (i, i), "[x,x] != 0 for even x"))

    for j in range(a, n):
        if L.bracket[j, j].any():
            out.append(Violation("L5", (j, j), "char 2 forces [y,y] = 0"))

    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = L.bracket_vec(L.basis_vector(i), L.bracket[j, k])
                rhs = L.bracket_vec(L.bracket[i, j], L.basis_vector(k)) ^ L.bracket_vec(
                    L.basis_vector(j), L.bracket[i, k]
                )
                if not np.array_equal(lhs, rhs):
                    out.append(Violation("L2", (i, j, k), "Jacobi identity fails"))

    for j in range(a, n):
        y = L.basis_vector(j)
        yy = L.bracket_vec(y, y)
        if L.bracket_vec(y, yy).any():
            out.append(Violation("L4", (j,), "[y,[y,y]] != 0"))

    for j in range(a, n):
        y = L.basis_vector(j)
        qy = np.zeros(n, dtype=np.int64)
        qy[:a] = L.q_diag[j - a]
        for k in range(n):
            ek = L.basis_vector(k)
            lhs = L.bracket_vec(y, L.bracket_vec(y, ek))
            rhs = L.bracket_vec(qy, ek)
            if not np.array_equal(lhs, rhs):
                out.append(Violation("L6", (j, k), "ad(y)^2 != ad(q(y)) on basis"))

    # polarized q on generic odd vectors: ad(u)^2 = ad(q(u)), [u,u] = 0
    rng = np.random.default_rng(rng_seed)
    for _ in range(samples):
        u = L.random_vector(rng, parity=1)
        if L.bracket_vec(u, u).any():
            out.append(Violation("L5", (tuple(int(c) for c in u),), "[u,u] != 0 for odd u"))
            continue
        qu = L.q_of(u)
        adu = L.ad_matrix(u)
        if (adu @ adu) != L.ad_matrix(qu):
            out.append(Violation("L6", (tuple(int(c) for c in u),), "ad(u)^2 != ad(q(u))"))
    return out


def validate_restricted(L: LieSuperAlgebra, rng_seed: int = 0, samples: int = 20) -> list[Violation]:
    """Check R1-R3 for the stored 2-map (raises if the 2-map is absent)."""
    _check_shapes(L)
    if L.two_map is None:
        raise MissingRestrictedData("validate_restricted requires a 2-map")
    f = L.field
    n, a = L.dim, L.even_dim
    out: list[Violation] = []
    rng = np.random.default_rng(rng_seed)

    def two_full(i: int) -> np.ndarray:
        v = np.zeros(n, dtype=np.int64)
        v[:a] = L.two_map[i]
        return v

    # R1 is definitional for the polarized extension; over GF(2) the scalar
    # set is {0,1} and there is nothing to test.  Evaluate anyway at e >= 2.
    if f.e >= 2:
        for _ in range(samples):
            x = L.random_vector(rng, parity=0)
            alpha = int(rng.integers(0, f.order))
            lhs = L.two_of(f.mul_scalar(x, alpha))
            rhs = f.mul_scalar(L.two_of(x), f.mul(alpha, alpha))
            if not np.array_equal(lhs, rhs):
                out.append(Violation("R1", (alpha, tuple(int(c) for c in x)), "(ax)^[2] != a^2 x^[2]"))

    for i in range(a):
        adx = L.ad_matrix(L.basis_vector(i))
        if (adx @ adx) != L.ad_matrix(two_full(i)):
            out.append(Violation("R2", (i,), "ad(x^[2]) != ad(x)^2 on basis"))
    for _ in range(samples):
        x = L.random_vector(rng, parity=0)
        adx = L.ad_matrix(x)
        if (adx @ adx) != L.ad_matrix(L.two_of(x)):
            out.append(Violation("R2", (tuple(int(c) for c in x),), "ad(x^[2]) != ad(x)^2"))

    for i in range(a):
        for j in range(a):
            xi, xj = L.basis_vector(i), L.basis_vector(j)
            lhs = L.two_of(xi ^ xj) if i != j else np.zeros(n, dtype=np.int64)
            rhs = two_full(i) ^ two_full(j) ^ L.bracket_vec(xj, xi)
            if i == j:
                rhs = np.zeros(n, dtype=np.int64)
            if not np.array_equal(lhs, rhs):
                out.append(Violation("R3", (i, j), "(x+y)^[2] != x^[2]+y^[2]+[y,x]"))
    return out


# ---------------------------------------------------------------------------
# Flattening to an ordinary restricted Lie algebra
# ---------------------------------------------------------------------------


@dataclass
class RestrictedFlattening:
    """The induced 2-operation on the underlying ordinary Lie algebra."""

    base: LieSuperAlgebra
    table: np.ndarray  # row i = image of basis element i under z -> z^{2}

    def two_op(self, z: np.ndarray) -> np.ndarray:
        return self.base.two_operation(z)

    def as_even_algebra(self) -> LieSuperAlgebra:
        """Reread the flattened algebra as a purely even restricted algebra."""
        L = self.base
        return LieSuperAlgebra(
            L.field,
            even_dim=L.dim,
            odd_dim=0,
            bracket=L.bracket.copy(),
            q_diag=np.zeros((0, L.dim), dtype=np.int64),
            two_map=self.table.copy(),
            names=list(L.names),
        )


def flatten_to_restricted(
    L: LieSuperAlgebra, rng_seed: int = 0, samples: int = 100
) -> RestrictedFlattening:
    """Combine the 2-map and q into a 2-operation on the whole space.

    Re-verifies the three restrictedness identities for the full space, mixed
    parity included; any failure raises, since a valid input cannot produce
    one."""
    bad = validate_superalgebra(L)
    if bad:
        raise ValidationFailed(bad)
    bad = validate_restricted(L)
    if bad:
        raise ValidationFailed(bad)

    f, n = L.field, L.dim
    table = np.stack([L.two_operation(L.basis_vector(i)) for i in range(n)])
    flat = RestrictedFlattening(L, table)

    viol: list[Violation] = []
    for i in range(n):
        for j in range(i + 1, n):
            zi, zj = L.basis_vector(i), L.basis_vector(j)
            lhs = L.two_operation(zi ^ zj)
            rhs = table[i] ^ table[j] ^ L.bracket_vec(zj, zi)
            if not np.array_equal(lhs, rhs):
                viol.append(Violation("R3", (i, j), "flattened sum rule fails on basis"))
    rng = np.random.default_rng(rng_seed)
    for _ in range(samples):
        z = L.random_vector(rng)
        w = L.random_vector(rng)
        alpha = int(rng.integers(0, f.order))
        if not np.array_equal(
            L.two_operation(f.mul_scalar(z, alpha)),
            f.mul_scalar(L.two_operation(z), f.mul(alpha, alpha)),
        ):
            viol.append(Violation("R1", (alpha,), "flattened semilinearity fails"))
        adz = L.ad_matrix(z)
        if (adz @ adz) != L.ad_matrix(L.two_operation(z)):
            viol.append(Violation("R2", (tuple(int(c) for c in z),), "flattened ad rule fails"))
        if not np.array_equal(
            L.two_operation(z ^ w),
            L.two_operation(z) ^ L.two_operation(w) ^ L.bracket_vec(w, z),
        ):
            viol.append(Violation("R3", (tuple(int(c) for c in z),), "flattened sum rule fails"))
    if viol:
        raise ValidationFailed(viol)
    return flat


# ---------------------------------------------------------------------------
# Base change and basis change
# ---------------------------------------------------------------------------


def extend_scalars(L: LieSuperAlgebra, target: FieldSpec) -> LieSuperAlgebra:
    """Base-change the structure constants along GF(2^d) -> GF(2^e), d | e."""
    emb = L.field.embedding_into(target)
    return LieSuperAlgebra(
        target,
        L.even_dim,
        L.odd_dim,
        emb[L.bracket],
        emb[L.q_diag],
        None if L.two_map is None else emb[L.two_map],
        names=list(L.names),
    )


def transform_basis(L: LieSuperAlgebra, T: np.ndarray) -> LieSuperAlgebra:
    """Structure constants in the new basis f_i = sum_k T[k,i] e_k.

    T must be invertible and parity-preserving (block diagonal)."""
    f, n, a = L.field, L.dim, L.even_dim
    T = np.asarray(T, dtype=np.int64)
    if T.shape != (n, n):
        raise MalformedInput("basis transform has wrong shape")
    if T[:a, a:].any() or T[a:, :a].any():
        raise MalformedInput("basis transform must preserve parity")
    Tm = Matrix(f, T)
    aug = np.concatenate([T, np.eye(n, dtype=np.int64)], axis=1)
    from .gf2la import rref

    R, piv = rref(f, aug)
    if piv[: n] != list(range(n)):
        raise MalformedInput("basis transform is singular")
    Tinv = R[:, n:]
    Tinv_m = Matrix(f, Tinv)

    newb = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            v = L.bracket_vec(T[:, i], T[:, j])
            newb[i, j] = Tinv_m.mul_vec(v)
    newq = np.zeros((L.odd_dim, a), dtype=np.int64)
    for j in range(L.odd_dim):
        v = L.q_of(T[:, a + j])
        newq[j] = Tinv_m.mul_vec(v)[:a]
    newt = None
    if L.two_map is not None:
        newt = np.zeros((a, a), dtype=np.int64)
        for i in range(a):
            v = L.two_of(T[:, i])
            newt[i] = Tinv_m.mul_vec(v)[:a]
    return LieSuperAlgebra(f, a, L.odd_dim, newb, newq, newt, names=list(L.names))
