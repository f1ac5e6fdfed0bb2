"""Restricted enveloping algebras by PBW straightening, and their modules.

V(L) is materialized on the 2^n square-free monomial basis indexed by bit
masks: bit i set means generator e_i occurs, factors in increasing basis
order.  Products are computed by the two rewriting moves

    b a  ->  a b + [b, a]          (a < b in the basis order, char 2)
    a a  ->  q(a)   or   a^[2]     (a odd / even),

memoized per (monomial, generator).  Each move lowers (length, inversions)
lexicographically, so the rewriting terminates; associativity is verified at
construction, exhaustively for n <= 6 and on random triples above that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import IncompatibleInputs, LimitExceeded, MalformedInput
from .gf2la import FieldSpec, Matrix, rref, solve_matrix
from .liesuper import LieSuperAlgebra, ValidationFailed, Violation, validate_restricted, validate_superalgebra

_ASSOC_EXHAUSTIVE_LIMIT = 6
_RESOLUTION_DIM_CAP = 400_000
_NMAX_CAP = 12


class SuperModule:
    """Parity-split module given by one action matrix per Lie basis element.

    Basis convention: even module basis vectors first.  `mode` records which
    relations the module is meant to satisfy ("U": bracket and q relations;
    "V": additionally the 2-map relations)."""

    def __init__(self, algebra: LieSuperAlgebra, even_dim: int, odd_dim: int, action, mode: str = "V"):
        self.algebra = algebra
        self.field = algebra.field
        self.even_dim = int(even_dim)
        self.odd_dim = int(odd_dim)
        self.dim = self.even_dim + self.odd_dim
        if mode not in ("U", "V"):
            raise MalformedInput("module mode must be 'U' or 'V'")
        self.mode = mode
        self.action = [np.asarray(m, dtype=np.int64).reshape(self.dim, self.dim) for m in action]
        if len(self.action) != algebra.dim:
            raise MalformedInput("need one action matrix per algebra basis element")

    def parity(self, i: int) -> int:
        return 0 if i < self.even_dim else 1

    def parities(self) -> list[int]:
        return [self.parity(i) for i in range(self.dim)]

    def act_vector(self, z: np.ndarray) -> np.ndarray:
        """Matrix of the action of an algebra element (first-order part)."""
        f = self.field
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i in np.nonzero(z)[0]:
            out ^= f.mul_scalar(self.action[i], int(z[i]))
        return out

    def mono_matrix(self, mask: int, cache: Optional[dict] = None) -> np.ndarray:
        """Action of the PBW monomial with the given mask (factors ascending)."""
        if cache is not None and mask in cache:
            return cache[mask]
        if mask == 0:
            out = np.eye(self.dim, dtype=np.int64)
        else:
            low = mask & -mask
            i = low.bit_length() - 1
            rest = self.mono_matrix(mask ^ low, cache)
            out = self.field.matmul(self.action[i], rest)
        if cache is not None:
            cache[mask] = out
        return out

    def __repr__(self) -> str:
        return f"SuperModule(dim ({self.even_dim}|{self.odd_dim}), mode {self.mode})"


def make_module(
    algebra: LieSuperAlgebra, parities, mats, mode: str = "V"
) -> tuple[SuperModule, np.ndarray]:
    """Canonicalize an arbitrary parity labelling to the evens-first convention.

    Returns the module and the index map nat2can (old index -> new index)."""
    parities = list(parities)
    order = np.argsort(np.asarray(parities, dtype=np.int64), kind="stable")
    nat2can = np.empty(len(parities), dtype=np.int64)
    nat2can[order] = np.arange(len(parities))
    even = sum(1 for p in parities if p == 0)
    new_mats = [np.asarray(m, dtype=np.int64)[np.ix_(order, order)] for m in mats]
    return SuperModule(algebra, even, len(parities) - even, new_mats, mode), nat2can


def trivial_module(L: LieSuperAlgebra, parity: int = 0, mode: str = "V") -> SuperModule:
    z = [np.zeros((1, 1), dtype=np.int64) for _ in range(L.dim)]
    return SuperModule(L, 1 - parity, parity, z, mode)


def zero_module(L: LieSuperAlgebra, mode: str = "V") -> SuperModule:
    z = [np.zeros((0, 0), dtype=np.int64) for _ in range(L.dim)]
    return SuperModule(L, 0, 0, z, mode)


def validate_module(L: LieSuperAlgebra, M: SuperModule, rng_seed: int = 0) -> list[Violation]:
    """Check block structure and the defining relations for M's mode."""
    if M.algebra is not L and (M.algebra.dim != L.dim or M.field != L.field):
        raise IncompatibleInputs("module belongs to a different algebra")
    for m in M.action:
        if m.shape != (M.dim, M.dim):
            raise MalformedInput("action matrix shape mismatch")
    out: list[Violation] = []
    a, d_even = L.even_dim, M.even_dim
    for i in range(L.dim):
        m = M.action[i]
        if L.parity(i) == 0:
            bad = m[:d_even, d_even:].any() or m[d_even:, :d_even].any()
        else:
            bad = m[:d_even, :d_even].any() or m[d_even:, d_even:].any()
        if bad:
            out.append(Violation("parity-blocks", (i,), "action matrix breaks the parity split"))
    f = M.field
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            anti = f.matmul(M.action[i], M.action[j]) ^ f.matmul(M.action[j], M.action[i])
            if not np.array_equal(anti, M.act_vector(L.bracket[i, j])):
                out.append(Violation("bracket-relation", (i, j), "rho(a)rho(b)+rho(b)rho(a) != rho([a,b])"))
    for j in range(a, L.dim):
        qv = np.zeros(L.dim, dtype=np.int64)
        qv[:a] = L.q_diag[j - a]
        sq = f.matmul(M.action[j], M.action[j])
        if not np.array_equal(sq, M.act_vector(qv)):
            out.append(Violation("q-relation", (j,), "rho(y)^2 != rho(q(y))"))
    if M.mode == "V":
        if L.two_map is None:
            raise MalformedInput("V-mode module over an algebra without a 2-map")
        for i in range(a):
            tv = np.zeros(L.dim, dtype=np.int64)
            tv[:a] = L.two_map[i]
            sq = f.matmul(M.action[i], M.action[i])
            if not np.array_equal(sq, M.act_vector(tv)):
                out.append(Violation("two-map-relation", (i,), "rho(x)^2 != rho(x^[2])"))
    return out


def module_tensor(L: LieSuperAlgebra, M: SuperModule, N: SuperModule) -> SuperModule:
    """Tensor product with the primitive-generator action g (x) 1 + 1 (x) g."""
    if M.algebra is not N.algebra and (M.algebra.dim != N.algebra.dim or M.field != N.field):
        raise IncompatibleInputs("tensor factors over different algebras")
    if M.mode != N.mode:
        raise IncompatibleInputs("tensor factors with different modes")
    dm, dn = M.dim, N.dim
    parities = [(M.parity(i) + N.parity(j)) % 2 for i in range(dm) for j in range(dn)]
    idn, idm = np.eye(dn, dtype=np.int64), np.eye(dm, dtype=np.int64)
    mats = [np.kron(M.action[g], idn) ^ np.kron(idm, N.action[g]) for g in range(L.dim)]
    mod, _ = make_module(L, parities, mats, M.mode)
    return mod


def module_dual(L: LieSuperAlgebra, M: SuperModule) -> SuperModule:
    """Dual module; each generator acts by the transpose (sign-free, char 2)."""
    return SuperModule(L, M.even_dim, M.odd_dim, [m.T.copy() for m in M.action], M.mode)


def module_direct_sum(L: LieSuperAlgebra, M: SuperModule, N: SuperModule) -> SuperModule:
    if M.mode != N.mode:
        raise IncompatibleInputs("direct sum with different modes")
    dm, dn = M.dim, N.dim
    parities = M.parities() + N.parities()
    mats = []
    for g in range(L.dim):
        m = np.zeros((dm + dn, dm + dn), dtype=np.int64)
        m[:dm, :dm] = M.action[g]
        m[dm:, dm:] = N.action[g]
        mats.append(m)
    mod, _ = make_module(L, parities, mats, M.mode)
    return mod


def extend_module(L_big: LieSuperAlgebra, M: SuperModule, emb: np.ndarray) -> SuperModule:
    """Base-change a module along a field embedding table."""
    mats = [emb[m] for m in M.action]
    return SuperModule(L_big, M.even_dim, M.odd_dim, mats, M.mode)


def adjoint_module(L: LieSuperAlgebra, mode: Optional[str] = None) -> SuperModule:
    """L acting on itself by ad; a U-module always, a V-module when restricted."""
    if mode is None:
        mode = "V" if L.is_restricted() else "U"
    mats = [L.ad_matrix(L.basis_vector(i)).a for i in range(L.dim)]
    return SuperModule(L, L.even_dim, L.odd_dim, mats, mode)


def submodule(L: LieSuperAlgebra, parent: SuperModule, cols: np.ndarray, mode: Optional[str] = None):
    """Invariant subspace (parity-homogeneous columns) as a module.

    Returns (module, inclusion) with inclusion mapping new coords to parent
    coords."""
    mode = mode or parent.mode
    if cols.size == 0:
        return zero_module(L, mode), cols.reshape(parent.dim, 0)
    parities = []
    for c in range(cols.shape[1]):
        sup = np.nonzero(cols[:, c])[0]
        ps = {parent.parity(int(i)) for i in sup}
        if len(ps) != 1:
            raise MalformedInput("submodule basis vector is not parity homogeneous")
        parities.append(ps.pop())
    order = np.argsort(np.asarray(parities), kind="stable")
    cols = cols[:, order]
    parities = [parities[int(i)] for i in order]
    f = parent.field
    mats = []
    for g in range(L.dim):
        img = f.matmul(parent.action[g], cols)
        X = solve_matrix(f, cols, img)
        if X is None:
            raise MalformedInput("columns do not span an invariant subspace")
        mats.append(X)
    even = sum(1 for p in parities if p == 0)
    return SuperModule(L, even, len(parities) - even, mats, mode), cols


# ---------------------------------------------------------------------------
# The PBW algebra V(L)
# ---------------------------------------------------------------------------


class PbwAlgebra:
    """V(L) on the 2^n square-free PBW basis, with memoized straightening."""

    def __init__(self, L: LieSuperAlgebra, check_associativity: bool = True, assoc_samples: int = 1000):
        if not L.is_restricted():
            raise MalformedInput("V(L) needs a restricted algebra (2-map present)")
        self.L = L
        self.field = L.field
        self.n = L.dim
        self.dim = 1 << self.n
        self._odd_mask = ((1 << L.odd_dim) - 1) << L.even_dim if L.odd_dim else 0
        self._sq: list[np.ndarray] = []
        for i in range(self.n):
            v = np.zeros(self.n, dtype=np.int64)
            if L.parity(i) == 0:
                v[: L.even_dim] = L.two_map[i]
            else:
                v[: L.even_dim] = L.q_diag[i - L.even_dim]
            self._sq.append(v)
        self._rmul_cache: dict[tuple[int, int], np.ndarray] = {}
        self._lmul_cache: dict[tuple[int, int], np.ndarray] = {}
        self._lmono_cache: dict[int, np.ndarray] = {}
        self._gen_left: Optional[list[np.ndarray]] = None
        if check_associativity:
            self._verify_associativity(assoc_samples)

    # -- basis bookkeeping ---------------------------------------------------

    def parity_mask(self, mask: int) -> int:
        return bin(mask & self._odd_mask).count("1") & 1

    def basis_parities(self) -> list[int]:
        return [self.parity_mask(m) for m in range(self.dim)]

    def unit(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[0] = 1
        return v

    def counit(self, vec: np.ndarray) -> int:
        """Augmentation: coefficient of the empty monomial."""
        return int(vec[0])

    def monomial_name(self, mask: int) -> str:
        if mask == 0:
            return "1"
        return "*".join(self.L.names[i] for i in range(self.n) if (mask >> i) & 1)

    # -- products -------------------------------------------------------------

    def rmul_gen(self, mask: int, i: int) -> np.ndarray:
        """Product (monomial mask) * e_i as a coefficient vector."""
        key = (mask, i)
        hit = self._rmul_cache.get(key)
        if hit is not None:
            return hit
        f = self.field
        if mask == 0:
            out = np.zeros(self.dim, dtype=np.int64)
            out[1 << i] = 1
        else:
            j = mask.bit_length() - 1
            if j < i:
                out = np.zeros(self.dim, dtype=np.int64)
                out[mask | (1 << i)] = 1
            else:
                rest = mask ^ (1 << j)
                if j == i:
                    out = np.zeros(self.dim, dtype=np.int64)
                    sq = self._sq[i]
                    for k in np.nonzero(sq)[0]:
                        out ^= f.mul_scalar(self.rmul_gen(rest, int(k)), int(sq[k]))
                else:
                    out = self.vec_rmul_gen(self.rmul_gen(rest, i), j)
                    br = self.L.bracket[j, i]
                    for k in np.nonzero(br)[0]:
                        out ^= f.mul_scalar(self.rmul_gen(rest, int(k)), int(br[k]))
        self._rmul_cache[key] = out
        return out

    def vec_rmul_gen(self, vec: np.ndarray, i: int) -> np.ndarray:
        f = self.field
        out = np.zeros(self.dim, dtype=np.int64)
        for m in np.nonzero(vec)[0]:
            out ^= f.mul_scalar(self.rmul_gen(int(m), i), int(vec[m]))
        return out

    def lmul_gen(self, i: int, mask: int) -> np.ndarray:
        """Product e_i * (monomial mask)."""
        key = (i, mask)
        hit = self._lmul_cache.get(key)
        if hit is not None:
            return hit
        f = self.field
        if mask == 0:
            out = np.zeros(self.dim, dtype=np.int64)
            out[1 << i] = 1
        else:
            low = mask & -mask
            j = low.bit_length() - 1
            if i < j:
                out = np.zeros(self.dim, dtype=np.int64)
                out[mask | (1 << i)] = 1
            else:
                rest = mask ^ low
                if i == j:
                    out = np.zeros(self.dim, dtype=np.int64)
                    sq = self._sq[i]
                    for k in np.nonzero(sq)[0]:
                        out ^= f.mul_scalar(self.lmul_gen(int(k), rest), int(sq[k]))
                else:
                    out = self.vec_lmul_gen(j, self.lmul_gen(i, rest))
                    br = self.L.bracket[i, j]
                    for k in np.nonzero(br)[0]:
                        out ^= f.mul_scalar(self.lmul_gen(int(k), rest), int(br[k]))
        self._lmul_cache[key] = out
        return out

    def vec_lmul_gen(self, i: int, vec: np.ndarray) -> np.ndarray:
        f = self.field
        out = np.zeros(self.dim, dtype=np.int64)
        for m in np.nonzero(vec)[0]:
            out ^= f.mul_scalar(self.lmul_gen(i, int(m)), int(vec[m]))
        return out

    def mono_mul(self, m1: int, m2: int) -> np.ndarray:
        """Product of two basis monomials."""
        out = np.zeros(self.dim, dtype=np.int64)
        out[m1] = 1
        rest = m2
        while rest:
            low = rest & -rest
            out = self.vec_rmul_gen(out, low.bit_length() - 1)
            rest ^= low
        return out

    def element_mul(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        f = self.field
        out = np.zeros(self.dim, dtype=np.int64)
        for m2 in np.nonzero(v)[0]:
            coef = int(v[m2])
            acc = f.mul_scalar(u, coef)
            rest = int(m2)
            while rest:
                low = rest & -rest
                acc = self.vec_rmul_gen(acc, low.bit_length() - 1)
                rest ^= low
            out ^= acc
        return out

    def left_mult_monomial(self, mask: int) -> np.ndarray:
        """Matrix of left multiplication by a basis monomial on V(L)."""
        hit = self._lmono_cache.get(mask)
        if hit is not None:
            return hit
        if mask == 0:
            out = np.eye(self.dim, dtype=np.int64)
        else:
            low = mask & -mask
            i = low.bit_length() - 1
            rest = self.left_mult_monomial(mask ^ low)
            gen = self.gen_left_matrices()[i]
            out = self.field.matmul(gen, rest)
        self._lmono_cache[mask] = out
        return out

    def gen_left_matrices(self) -> list[np.ndarray]:
        if self._gen_left is None:
            mats = []
            for i in range(self.n):
                cols = [self.lmul_gen(i, m) for m in range(self.dim)]
                mats.append(np.stack(cols, axis=1))
            self._gen_left = mats
        return self._gen_left

    def mult_table(self) -> np.ndarray:
        """Full (dim, dim, dim) structure-constant table of V(L)."""
        t = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for m1 in range(self.dim):
            for m2 in range(self.dim):
                t[m1, m2] = self.mono_mul(m1, m2)
        return t

    def regular_module(self) -> SuperModule:
        mats = self.gen_left_matrices()
        mod, _ = make_module(self.L, self.basis_parities(), mats, "V")
        return mod

    # -- construction-time guards --------------------------------------------

    def _verify_associativity(self, samples: int) -> None:
        f = self.field
        if self.n <= _ASSOC_EXHAUSTIVE_LIMIT:
            T = self.mult_table()
            flat = T.reshape(self.dim * self.dim, self.dim)
            for m3 in range(self.dim):
                lhs = f.matmul(flat, T[:, m3, :]).reshape(self.dim, self.dim, self.dim)
                rhs = np.stack([f.matmul(T[:, m3, :], T[m1]) for m1 in range(self.dim)])
                if not np.array_equal(lhs, rhs):
                    raise MalformedInput("associativity failure in PBW straightening")
        else:
            rng = np.random.default_rng(0)
            for _ in range(samples):
                m1, m2, m3 = (int(x) for x in rng.integers(0, self.dim, size=3))
                lhs = self.element_mul(self.mono_mul(m1, m2), _basis_vec(self.dim, m3))
                rhs = self.element_mul(_basis_vec(self.dim, m1), self.mono_mul(m2, m3))
                if not np.array_equal(lhs, rhs):
                    raise MalformedInput("associativity failure in PBW straightening")

    def __repr__(self) -> str:
        return f"PbwAlgebra(dim {self.dim} over {self.field})"


def _basis_vec(dim: int, i: int) -> np.ndarray:
    v = np.zeros(dim, dtype=np.int64)
    v[i] = 1
    return v


def build_vl(L: LieSuperAlgebra, validate: bool = True) -> PbwAlgebra:
    """Construct V(L) after running the axiom suites."""
    if validate:
        bad = validate_superalgebra(L)
        if bad:
            raise ValidationFailed(bad)
        bad = validate_restricted(L)
        if bad:
            raise ValidationFailed(bad)
    return PbwAlgebra(L)


# ---------------------------------------------------------------------------
# Free covers, resolutions, projectivity, Ext
# ---------------------------------------------------------------------------


@dataclass
class CoverStep:
    """One free-cover step V^r ->> Omega with explicit kernel data.

    Natural coordinates on the free module: index (t, mask) = t * 2^n + mask.
    `pi` maps natural coordinates onto the covered module; `kernel` columns
    form the syzygy basis, with `kernel_parities` their parities."""

    rank: int
    gen_parities: list[int]
    pi: np.ndarray
    kernel: np.ndarray
    kernel_parities: list[int]


def _mono_action(field: FieldSpec, mats: list[np.ndarray], dim: int, mask: int, cache: dict) -> np.ndarray:
    """Action matrix of a PBW monomial, factors applied in increasing order."""
    hit = cache.get(mask)
    if hit is not None:
        return hit
    if mask == 0:
        out = np.eye(dim, dtype=np.int64)
    else:
        low = mask & -mask
        out = field.matmul(mats[low.bit_length() - 1], _mono_action(field, mats, dim, mask ^ low, cache))
    cache[mask] = out
    return out


def _cover_step(V: PbwAlgebra, parities: list[int], mats: list[np.ndarray]) -> CoverStep:
    """Free cover of the module given by (parities, action matrices)."""
    d = len(parities)
    D = d * V.dim
    if D > _RESOLUTION_DIM_CAP:
        raise LimitExceeded(f"free cover dimension {D} exceeds the cap")
    f = V.field
    mono_par = V.basis_parities()
    cover_par = [(parities[t] + mono_par[m]) % 2 for t in range(d) for m in range(V.dim)]
    cache: dict[int, np.ndarray] = {}
    pi = np.zeros((d, D), dtype=np.int64)
    for m in range(V.dim):
        act = _mono_action(f, mats, d, m, cache)
        for t in range(d):
            pi[:, t * V.dim + m] = act[:, t]
    # parity-split kernel: even columns against even rows, odd against odd
    kernel_cols: list[np.ndarray] = []
    kernel_par: list[int] = []
    for p in (0, 1):
        cols = [c for c in range(D) if cover_par[c] == p]
        if not cols:
            continue
        sub = Matrix(f, pi[:, cols])
        for kv in sub.kernel_basis():
            full = np.zeros(D, dtype=np.int64)
            full[cols] = kv
            kernel_cols.append(full)
            kernel_par.append(p)
    kernel = (
        np.stack(kernel_cols, axis=1) if kernel_cols else np.zeros((D, 0), dtype=np.int64)
    )
    return CoverStep(d, list(parities), pi, kernel, kernel_par)


def _module_data(M: SuperModule) -> tuple[list[int], list[np.ndarray]]:
    return M.parities(), M.action


def _free_action_apply(V: PbwAlgebra, rank: int, gen: int, vecs: np.ndarray) -> np.ndarray:
    """Apply e_gen to columns of vecs in natural free-module coordinates."""
    G = V.gen_left_matrices()[gen]
    out = np.zeros_like(vecs)
    for t in range(rank):
        sl = slice(t * V.dim, (t + 1) * V.dim)
        out[sl] = V.field.matmul(G, vecs[sl])
    return out


def free_cover(V: PbwAlgebra, M: SuperModule):
    """Free cover V^{dim M} ->> M with the syzygy kernel as a module.

    Returns (cover, pi, syzygy, inclusion): `pi` and `inclusion` are matrices
    in the canonical coordinates of the returned modules."""
    step = _cover_step(V, *_module_data(M))
    mono_par = V.basis_parities()
    cover_par = [(M.parity(t) + mono_par[m]) % 2 for t in range(step.rank) for m in range(V.dim)]
    mats = []
    for g in range(V.L.dim):
        mat = np.zeros((step.rank * V.dim, step.rank * V.dim), dtype=np.int64)
        G = V.gen_left_matrices()[g]
        for t in range(step.rank):
            sl = slice(t * V.dim, (t + 1) * V.dim)
            mat[sl, sl] = G
        mats.append(mat)
    cover, nat2can = make_module(V.L, cover_par, mats, "V")
    inv = np.argsort(nat2can)
    pi = step.pi[:, inv]
    kern = step.kernel
    kern2 = np.zeros_like(kern)
    kern2[nat2can, :] = kern
    syz_mats = []
    if kern.shape[1]:
        for g in range(V.L.dim):
            img = V.field.matmul(cover.action[g], kern2)
            X = solve_matrix(V.field, kern2, img)
            assert X is not None
            syz_mats.append(X)
        even = sum(1 for p in step.kernel_parities if p == 0)
        syz = SuperModule(V.L, even, len(step.kernel_parities) - even, syz_mats, "V")
    else:
        syz = zero_module(V.L)
    return cover, pi, syz, kern2


def is_projective_vl(V: PbwAlgebra, M: SuperModule) -> bool:
    """Decide projectivity by solving for a module splitting of the cover."""
    d = M.dim
    if d == 0:
        return True
    step = _cover_step(V, *_module_data(M))
    D = step.rank * V.dim
    f = V.field
    idd = np.eye(d, dtype=np.int64)
    idD = np.eye(D, dtype=np.int64)
    blocks = [np.kron(step.pi, idd)]
    rhs = [idd.reshape(-1)]
    for g in range(V.L.dim):
        Gc = np.zeros((D, D), dtype=np.int64)
        Gm = V.gen_left_matrices()[g]
        for t in range(step.rank):
            sl = slice(t * V.dim, (t + 1) * V.dim)
            Gc[sl, sl] = Gm
        eq = np.kron(Gc, idd) ^ np.kron(idD, M.action[g].T)
        blocks.append(eq)
        rhs.append(np.zeros(D * d, dtype=np.int64))
    A = np.concatenate(blocks, axis=0)
    b = np.concatenate(rhs)
    return solve_matrix(f, A, b) is not None


@dataclass
class Resolution:
    """Iterated free covers P_len -> ... -> P_0 ->> M in natural coordinates."""

    V: PbwAlgebra
    ranks: list[int]
    gen_parities: list[list[int]]
    pi0: np.ndarray
    # d_k (k >= 1) maps P_k -> P_{k-1}; columns are syzygy basis vectors of
    # length ranks[k-1] * 2^n, one per generator of P_k.
    d_gens: list[np.ndarray]

    def d_matrix(self, k: int) -> np.ndarray:
        """Full k-linear matrix of d_k in natural coordinates."""
        V = self.V
        rk, rk1 = self.ranks[k], self.ranks[k - 1]
        out = np.zeros((rk1 * V.dim, rk * V.dim), dtype=np.int64)
        gens = self.d_gens[k - 1]
        for t in range(rk):
            w = gens[:, t]
            for m in range(V.dim):
                col = np.zeros(rk1 * V.dim, dtype=np.int64)
                Lm = V.left_mult_monomial(m)
                for tp in range(rk1):
                    sl = slice(tp * V.dim, (tp + 1) * V.dim)
                    col[sl] = V.field.matmul(Lm, w[sl].reshape(-1, 1)).ravel()
                out[:, t * V.dim + m] = col
        return out

    def d_vmatrix(self, k: int) -> np.ndarray:
        """d_k as an array (r_{k-1}, r_k, 2^n) of V(L)-entries."""
        V = self.V
        rk, rk1 = self.ranks[k], self.ranks[k - 1]
        return self.d_gens[k - 1].reshape(rk1, V.dim, rk).transpose(0, 2, 1)


def resolve(V: PbwAlgebra, M: SuperModule, length: int) -> Resolution:
    """Free-cover resolution of M out to homological degree `length`."""
    ranks: list[int] = []
    gen_parities: list[list[int]] = []
    d_gens: list[np.ndarray] = []
    parities, mats = _module_data(M)
    pi0 = None
    for k in range(length + 1):
        step = _cover_step(V, parities, mats)
        ranks.append(step.rank)
        gen_parities.append(step.gen_parities)
        if k == 0:
            pi0 = step.pi
        if k == length:
            break
        kern = step.kernel
        d_gens.append(kern)
        # next module to cover: the syzygy, with action in kernel coordinates
        if kern.shape[1] == 0:
            parities, mats = [], [np.zeros((0, 0), dtype=np.int64) for _ in range(V.L.dim)]
            continue
        new_mats = []
        for g in range(V.L.dim):
            img = _free_action_apply(V, step.rank, g, kern)
            X = solve_matrix(V.field, kern, img)
            assert X is not None
            new_mats.append(X)
        parities, mats = step.kernel_parities, new_mats
    return Resolution(V, ranks, gen_parities, pi0, d_gens)


def hom_space_dim(L: LieSuperAlgebra, M: SuperModule, N: SuperModule) -> int:
    """dim of the space of module maps M -> N (even and odd together)."""
    if M.dim == 0 or N.dim == 0:
        return 0
    f = M.field
    dm, dn = M.dim, N.dim
    blocks = []
    for g in range(L.dim):
        # X: N-coords x M-coords; equivariance X rho_M(g) = rho_N(g) X
        eq = np.kron(np.eye(dn, dtype=np.int64), M.action[g].T) ^ np.kron(N.action[g], np.eye(dm, dtype=np.int64))
        blocks.append(eq)
    A = Matrix(f, np.concatenate(blocks, axis=0) if blocks else np.zeros((0, dn * dm), dtype=np.int64))
    return dn * dm - A.rank()


def ext_dims_vl(V: PbwAlgebra, M: SuperModule, N: SuperModule, nmax: int) -> list[int]:
    """dim Ext^i_{V(L)}(M, N) for 0 <= i <= nmax from the free-cover resolution."""
    if nmax > _NMAX_CAP:
        raise LimitExceeded(f"nmax {nmax} exceeds the cap {_NMAX_CAP}")
    if M.dim == 0:
        return [0] * (nmax + 1)
    res = resolve(V, M, nmax + 1)
    f = V.field
    dn = N.dim
    cache: dict[int, np.ndarray] = {}
    deltas = []
    for k in range(1, nmax + 2):
        rk, rk1 = res.ranks[k], res.ranks[k - 1]
        delta = np.zeros((rk * dn, rk1 * dn), dtype=np.int64)
        gens = res.d_gens[k - 1]
        for j in range(rk):
            w = gens[:, j]
            for t in range(rk1):
                blk = np.zeros((dn, dn), dtype=np.int64)
                for m in np.nonzero(w[t * V.dim : (t + 1) * V.dim])[0]:
                    coef = int(w[t * V.dim + int(m)])
                    blk ^= f.mul_scalar(N.mono_matrix(int(m), cache), coef)
                delta[j * dn : (j + 1) * dn, t * dn : (t + 1) * dn] = blk
        deltas.append(Matrix(f, delta))
    dims = []
    prev_rank = 0
    for k in range(nmax + 1):
        rk = res.ranks[k]
        rkd = deltas[k].rank()
        dims.append(rk * dn - rkd - prev_rank)
        prev_rank = rkd
    return dims
