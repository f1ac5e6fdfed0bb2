"""Exact arithmetic in GF(2^e) and dense linear algebra over it.

Field elements are plain Python ints in [0, 2^e): the binary digits are the
coefficients of a polynomial in the generator t, reduced modulo a fixed
irreducible polynomial.  Addition is XOR, so numpy integer arrays support
vectorized addition natively; multiplication goes through a full table
(e <= 8), log/antilog tables (primitive defining polynomial), or a carryless
fallback.

All elimination routines use the first nonzero pivot under the fixed column
order, so ranks, kernels and solutions are bit-for-bit reproducible.
"""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from .errors import DivisionByZero, IncompatibleInputs, MalformedInput

# Fixed defining polynomials (bit vectors, degree = e).  Conway polynomials
# for e <= 8, standard primitive polynomials above that.  Irreducibility is
# re-checked at construction, so a bad entry cannot slip through.
DEFAULT_POLYS = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1011011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}

_MAX_E = 16


def _poly_deg(p: int) -> int:
    return p.bit_length() - 1


def _poly_mod(a: int, m: int) -> int:
    dm = _poly_deg(m)
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _poly_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2."""
    d = _poly_deg(p)
    if d < 1:
        return False
    for dd in range(1, d // 2 + 1):
        for g in range(1 << dd, 1 << (dd + 1)):
            if _poly_mod(p, g) == 0:
                return False
    return True


class FieldSpec:
    """GF(2^e) with a fixed defining polynomial.

    Elements are ints; 0 and 1 are the additive and multiplicative units in
    every extension, so GF(2)-valued data embeds into any GF(2^e) verbatim.
    """

    def __init__(self, e: int = 1, defining_poly: Optional[int] = None):
        if e < 1 or e > _MAX_E:
            raise MalformedInput(f"extension degree e={e} outside supported range 1..{_MAX_E}")
        if defining_poly is None:
            defining_poly = DEFAULT_POLYS[e]
        if _poly_deg(defining_poly) != e:
            raise MalformedInput("defining polynomial degree does not match e")
        if not _poly_irreducible(defining_poly):
            raise MalformedInput(f"defining polynomial {bin(defining_poly)} is reducible")
        self.e = e
        self.poly = defining_poly
        self.order = 1 << e

        self._mul_table: Optional[np.ndarray] = None
        self._log: Optional[np.ndarray] = None
        self._exp: Optional[np.ndarray] = None
        self._inv_table: Optional[np.ndarray] = None
        self._build_tables()

    # -- construction helpers -------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            a <<= 1
            if a >> self.e:
                a ^= self.poly
            b >>= 1
        return acc

    def _build_tables(self) -> None:
        q = self.order
        # log/antilog tables when t = x is a generator of the unit group
        exp = np.zeros(2 * q, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        val, ok = 1, True
        for i in range(q - 1):
            exp[i] = val
            if val == 1 and i > 0:
                ok = False
                break
            log[val] = i
            val = self._mul_raw(val, 2) if self.e > 1 else self._mul_raw(val, 1)
        if self.e == 1:
            ok = True
        if ok:
            for i in range(q - 1, 2 * q):
                exp[i] = exp[i - (q - 1)]
            self._exp, self._log = exp, log
        if self.e <= 8:
            t = np.zeros((q, q), dtype=np.int64)
            for a in range(q):
                for b in range(a, q):
                    v = self._mul_raw(a, b)
                    t[a, b] = v
                    t[b, a] = v
            self._mul_table = t
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = self._inv_raw(a)
        self._inv_table = inv

    def _inv_raw(self, a: int) -> int:
        # a^(2^e - 2) by square and multiply
        acc, base, n = 1, a, self.order - 2
        while n:
            if n & 1:
                acc = self._mul_raw(acc, base)
            base = self._mul_raw(base, base)
            n >>= 1
        return acc

    # -- scalar ops ------------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return int(self._exp[self._log[a] + self._log[b]])
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inversion of 0 in GF(2^e)")
        return int(self._inv_table[a])

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def elements(self) -> range:
        return range(self.order)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self.e == other.e and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.e, self.poly))

    def __repr__(self) -> str:
        return f"GF(2^{self.e})"

    # -- vectorized ops on int arrays -------------------------------------

    def mul_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product of two broadcastable int arrays."""
        if self.e == 1:
            return a & b
        if self._mul_table is not None:
            return self._mul_table[a, b]
        a, b = np.broadcast_arrays(a, b)
        nz = (a != 0) & (b != 0)
        out = np.zeros(a.shape, dtype=np.int64)
        out[nz] = self._exp[self._log[a[nz]] + self._log[b[nz]]]
        return out

    def mul_scalar(self, a: np.ndarray, s: int) -> np.ndarray:
        if s == 0:
            return np.zeros_like(np.asarray(a))
        if s == 1:
            return np.asarray(a).copy()
        return self.mul_arrays(np.asarray(a), np.full((), s, dtype=np.int64))

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Matrix product of element arrays (2-D)."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.shape[1] != B.shape[0]:
            raise MalformedInput("matmul shape mismatch")
        if self.e == 1:
            if A.shape[0] == 0 or A.shape[1] == 0 or B.shape[1] == 0:
                return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
            prod = np.float64(0) + A.astype(np.float64) @ B.astype(np.float64)
            return prod.astype(np.int64) & 1
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for k in range(A.shape[1]):
            col = A[:, k]
            row = B[k, :]
            nzc = np.nonzero(col)[0]
            if nzc.size == 0:
                continue
            out[nzc] ^= self.mul_arrays(col[nzc, None], row[None, :])
        return out

    def embedding_into(self, other: "FieldSpec") -> np.ndarray:
        """Table mapping this field's elements into a larger GF(2^E), e | E.

        The image of the generator is the lexicographically smallest root of
        this field's defining polynomial in the big field (deterministic).
        """
        if other.e % self.e != 0:
            raise IncompatibleInputs(f"no embedding GF(2^{self.e}) -> GF(2^{other.e})")
        if other.e == self.e and other.poly == self.poly:
            return np.arange(self.order, dtype=np.int64)
        root = None
        coeffs = [(self.poly >> i) & 1 for i in range(self.e + 1)]
        for cand in other.elements():
            acc = 0
            for c in reversed(coeffs):
                acc = other.mul(acc, cand) ^ c
            if acc == 0:
                root = cand
                break
        if root is None:
            raise IncompatibleInputs("defining polynomial has no root in target field")
        table = np.zeros(self.order, dtype=np.int64)
        for a in range(self.order):
            acc, p = 0, 1
            for i in range(self.e):
                if (a >> i) & 1:
                    acc ^= p
                p = other.mul(p, root)
            table[a] = acc
        return table


GF2 = FieldSpec(1)


def field_arith(field: FieldSpec, a: int, b: int, op: str) -> int:
    """Scalar field operation dispatch: op in {add, mul, inv}."""
    if op == "add":
        return field.add(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "inv":
        return field.inv(a)
    raise MalformedInput(f"unknown field op {op!r}")


# ---------------------------------------------------------------------------
# Row reduction
# ---------------------------------------------------------------------------


def _rref_gf2(A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """RREF over GF(2) with bit-packed rows; returns (R, pivot columns)."""
    m, n = A.shape
    if m == 0 or n == 0:
        return A.copy(), []
    P = np.packbits(A.astype(np.uint8), axis=1)
    r, pivots = 0, []
    for c in range(n):
        byte, shift = c >> 3, 7 - (c & 7)
        col = (P[r:, byte] >> shift) & 1
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            P[[r, p]] = P[[p, r]]
        colall = (P[:, byte] >> shift) & 1
        colall[r] = 0
        rows = np.nonzero(colall)[0]
        if rows.size:
            P[rows] ^= P[r]
        pivots.append(c)
        r += 1
        if r == m:
            break
    R = np.unpackbits(P, axis=1)[:, :n].astype(np.int64)
    return R, pivots


def _rref_gen(field: FieldSpec, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """RREF over GF(2^e), e >= 2."""
    A = A.astype(np.int64).copy()
    m, n = A.shape
    r, pivots = 0, []
    for c in range(n):
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r] = field.mul_scalar(A[r], field.inv(lead))
        col = A[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            A[rows] ^= field.mul_arrays(col[rows, None], A[r][None, :])
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def rref(field: FieldSpec, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2:
        raise MalformedInput("rref expects a 2-D array")
    if field.e == 1:
        return _rref_gf2(A)
    return _rref_gen(field, A)


class Matrix:
    """Dense matrix over a FieldSpec; entries are field elements as ints."""

    __slots__ = ("field", "a")

    def __init__(self, field: FieldSpec, entries):
        self.field = field
        a = np.asarray(entries, dtype=np.int64)
        if a.ndim != 2:
            raise MalformedInput("matrix entries must be 2-D")
        if a.size and int(a.max(initial=0)) >= field.order:
            raise MalformedInput("entry exceeds field order")
        self.a = a

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, field: FieldSpec, m: int, n: int) -> "Matrix":
        return cls(field, np.zeros((m, n), dtype=np.int64))

    # -- basic structure ----------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self) -> str:
        return f"Matrix({self.field}, shape={self.a.shape})"

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.a.copy())

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.a.T.copy())

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise IncompatibleInputs("field mismatch in matrix add")
        return Matrix(self.field, self.a ^ other.a)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise IncompatibleInputs("field mismatch in matrix product")
        return Matrix(self.field, self.field.matmul(self.a, other.a))

    def mul_vec(self, v: np.ndarray) -> np.ndarray:
        return self.field.matmul(self.a, np.asarray(v, dtype=np.int64).reshape(-1, 1)).ravel()

    def scale(self, s: int) -> "Matrix":
        return Matrix(self.field, self.field.mul_scalar(self.a, s))

    def is_zero(self) -> bool:
        return not self.a.any()

    # -- elimination-backed queries ------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        R, piv = rref(self.field, self.a)
        return Matrix(self.field, R), piv

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[np.ndarray]:
        """Basis of the right kernel; deterministic (free vars in column order)."""
        R, piv = rref(self.field, self.a)
        pivset = set(piv)
        out = []
        for f in range(self.cols):
            if f in pivset:
                continue
            v = np.zeros(self.cols, dtype=np.int64)
            v[f] = 1
            for i, p in enumerate(piv):
                v[p] = R[i, f]  # char 2: -x = x
            out.append(v)
        return out

    def solve(self, b: np.ndarray) -> Optional[np.ndarray]:
        """One solution of self @ x = b, free variables set to 0; None if none."""
        b = np.asarray(b, dtype=np.int64).reshape(-1)
        if b.shape[0] != self.rows:
            raise MalformedInput("rhs length mismatch")
        aug = np.concatenate([self.a, b.reshape(-1, 1)], axis=1)
        R, piv = rref(self.field, aug)
        if piv and piv[-1] == self.cols:
            return None
        x = np.zeros(self.cols, dtype=np.int64)
        for i, p in enumerate(piv):
            x[p] = R[i, self.cols]
        return x

    def column_space_pivots(self) -> list[int]:
        """Indices of a deterministic maximal independent column set."""
        return self.rref()[1]


def rank_and_kernel(M: Matrix) -> tuple[int, list[np.ndarray]]:
    """Rank and a deterministic right-kernel basis; rank + |kernel| = cols."""
    R, piv = M.rref()
    kern = M.kernel_basis()
    assert len(piv) + len(kern) == M.cols
    return len(piv), kern


def solve_linear(M: Matrix, b: np.ndarray) -> Optional[np.ndarray]:
    """Some x with M x = b iff b is in the column space, else None."""
    return M.solve(b)


def solve_matrix(field: FieldSpec, A: np.ndarray, B: np.ndarray) -> Optional[np.ndarray]:
    """One solution X of A @ X = B (columnwise), or None; free vars = 0."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if B.ndim == 1:
        B = B.reshape(-1, 1)
    if A.shape[0] != B.shape[0]:
        raise MalformedInput("solve_matrix shape mismatch")
    n = A.shape[1]
    R, piv = rref(field, np.concatenate([A, B], axis=1))
    if piv and piv[-1] >= n:
        return None
    X = np.zeros((n, B.shape[1]), dtype=np.int64)
    for i, p in enumerate(piv):
        X[p, :] = R[i, n:]
    return X


def from_columns(field: FieldSpec, cols: Iterable[np.ndarray], nrows: int) -> Matrix:
    cols = list(cols)
    if not cols:
        return Matrix.zeros(field, nrows, 0)
    return Matrix(field, np.stack([np.asarray(c, dtype=np.int64) for c in cols], axis=1))
