"""Operator representations of the quantized Hermitian matrix algebra.

A representation is an N x N block matrix Z of dense operators on a
truncated space, self-adjoint on the interior, satisfying the reflection
equation.  Sources: big-cell builds from highest-weight modules, the
explicit N=2 families, scalar *-characters, and adjoint transports by
triangular or unitary quantum-group representations.

All residuals are Frobenius norms of defects applied to interior basis
vectors, relative to the squared block scale; with a margin of at least
twice the word length they sit at machine precision.

On signatures: the k-th leading minor acts with definite sign equal to the
product eps_[1] ... eps_[k]; the classifying sign vector eta_k = eps_[k]
is therefore the ratio of consecutive minor signs, and coincides with the
signs of the spectral-weight roots.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from . import classify as _classify
from .errors import BadCorep, DomainError, NotAdmissible, NotFactorial
from .gtrep import HWModule, HWModuleSpec, build_hw_module, suq2_rep
from .ncalg import NCPoly, central_sigma, leading_minor_Z

__all__ = [
    "HermitianRep",
    "build_bigcell_rep",
    "n2_family",
    "zero_rep",
    "eval_z_poly",
    "re_residual",
    "selfadj_residual",
    "verify_rep",
    "sigma_scalars",
    "spectral_data",
    "spectral_components",
    "op_leading_minor",
    "op_minor_blocks",
    "ext_power_blocks",
    "ext_power_blocks_braided",
    "adjoint_transport_T",
    "adjoint_transport_U",
    "uchar_blocks",
    "suq2_corep_blocks",
    "report_json",
]

TRANSPORT_DIM_CAP = 20000


@dataclass
class HermitianRep:
    """Block operator matrix Z with truncation-interior bookkeeping."""

    N: int
    Z: list                     # Z[i][j] (0-based) -> ndarray (dim x dim)
    interior: np.ndarray        # bool mask over the basis
    q0: float
    source: dict = field(default_factory=dict)
    tmod: HWModule | None = None   # present for big-cell builds
    rank: int | None = None
    signature: tuple | None = None

    @property
    def dim(self) -> int:
        return self.Z[0][0].shape[0]

    def block(self, i: int, j: int) -> np.ndarray:
        return self.Z[i - 1][j - 1]

    def znorm(self) -> float:
        """Largest block norm measured on interior columns (the boundary of
        a truncation carries unbounded triangular junk by design)."""
        mask = self.interior
        return max(
            np.linalg.norm(self.Z[i][j][:, mask], 2)
            for i in range(self.N) for j in range(self.N)
        )


# ---------------------------------------------------------------------------
# constructions


def build_bigcell_rep(spec: HWModuleSpec, margin: int | None = None) -> HermitianRep:
    """Z = T^dagger E_eps T on a truncated highest-weight module.

    Entrywise Z_ij = sum over rows m <= min(i,j) of eps_[m] T[m,i]* T[m,j];
    the signature is eta_k = eps_[k] for k up to the rank M.
    """
    mod = build_hw_module(spec, margin=margin)
    N = spec.N
    eps_pad = spec.eps_padded
    lead = [1] * (N + 1)
    for m in range(1, N + 1):
        lead[m] = lead[m - 1] * eps_pad[m - 1]  # eps_[m]
    blocks = [[None] * N for _ in range(N)]
    ld = np.longdouble
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            # assembled in extended precision: the summands grow like
            # q^{-2 shell} and cancel down to a bounded operator
            M = np.zeros((mod.dim, mod.dim), dtype=ld)
            for m in range(1, min(i, j) + 1):
                if lead[m] == 0:
                    continue
                M += lead[m] * (mod.t_block(m, i).astype(ld).T @ mod.t_block(m, j).astype(ld))
            blocks[i - 1][j - 1] = M.astype(np.float64)
    Mrank = spec.M
    signature = tuple(lead[1:Mrank + 1])
    return HermitianRep(
        N=N, Z=blocks, interior=mod.interior.copy(), q0=spec.q0,
        source={"kind": "bigcell", "eps": spec.eps, "r": [str(x) for x in spec.r],
                "D": spec.D},
        tmod=mod, rank=Mrank, signature=signature,
    )


def zero_rep(N: int, q0: float = 0.5) -> HermitianRep:
    Z = [[np.zeros((1, 1)) for _ in range(N)] for _ in range(N)]
    return HermitianRep(N=N, Z=Z, interior=np.array([True]), q0=q0,
                        source={"kind": "zero"}, rank=0, signature=())


def _shift_family(zs, T0, D0, q0, hermitize=True):
    """Common weighted-shift construction for the N=2 families.

    z is diagonal with entries zs; the lowering entry v satisfies
    w v = q^2 (-D0 + q^{-1} T0 z - q^{-2} z^2) with w = v^dagger, and
    u = q T0 - q^2 z.
    """
    dim = len(zs)
    z = np.diag(np.asarray(zs, dtype=float))
    wv = q0 ** 2 * (-D0 + T0 * zs / q0 - zs ** 2 / q0 ** 2)
    v = np.zeros((dim, dim))
    for k in range(1, dim):
        val = wv[k]
        if val < -1e-12 * max(1.0, abs(D0)):
            raise DomainError("family parameters produce a negative norm")
        v[k - 1, k] = np.sqrt(max(val, 0.0))
    u = q0 * T0 * np.eye(dim) - q0 ** 2 * z
    return z, v, u


def n2_family(kind: str, D: int = 40, q0: float = 0.5, margin: int = 8, **params) -> HermitianRep:
    """The explicit irreducible N=2 representations.

    kind: 'S_pos' (c != 0, n >= 0; dimension n+1), 'S_zero' (lam != 0),
    'S_neg+' / 'S_neg-' (c > 0, a > 0), 'char' (theta, c > 0, a > 0,
    default a = 1), or 'zero'.
    """
    if kind == "zero":
        return zero_rep(2, q0)
    if kind == "char":
        theta = float(params.get("theta", 0.0))
        c = float(params["c"])
        a = float(params.get("a", 1.0))
        if c <= 0 or a <= 0:
            raise DomainError("char family needs c > 0, a > 0")
        ph = np.exp(2j * np.pi * theta)
        Z = [[np.array([[0.0 + 0j]]), np.array([[q0 * c * np.conj(ph)]])],
             [np.array([[q0 * c * ph]]), np.array([[q0 * c * (a - 1 / a) + 0j]])]]
        return HermitianRep(N=2, Z=Z, interior=np.array([True]), q0=q0,
                            source={"kind": "char", "theta": theta, "c": c, "a": a},
                            rank=2, signature=(1, -1))
    if kind == "S_pos":
        c, n = float(params["c"]), int(params["n"])
        if c == 0 or n < 0:
            raise DomainError("S_pos needs c != 0 and n >= 0")
        zs = np.array([c * q0 ** (-n + 2 * k) for k in range(n + 1)])
        T0 = c * (q0 ** (n + 1) + q0 ** (-n - 1))
        D0 = c * c
        interior = np.ones(n + 1, dtype=bool)
        sig = (int(np.sign(c)),) * 2
        src = {"kind": "S_pos", "c": c, "n": n}
    elif kind == "S_zero":
        lam = float(params["lam"])
        if lam == 0:
            raise DomainError("S_zero needs lam != 0")
        zs = np.array([lam * q0 ** (2 * k + 1) for k in range(D + 1)])
        T0, D0 = lam, 0.0
        interior = np.arange(D + 1) <= D - margin
        sig = (int(np.sign(lam)),)
        src = {"kind": "S_zero", "lam": lam}
    elif kind in ("S_neg+", "S_neg-"):
        c, a = float(params["c"]), float(params["a"])
        if c <= 0 or a <= 0:
            raise DomainError("S_neg needs c > 0, a > 0")
        s = 1.0 if kind == "S_neg+" else -1.0
        zs = np.array([s * c * a ** s * q0 ** (2 * k + 1) for k in range(D + 1)])
        T0, D0 = c * (a - 1 / a), -c * c
        interior = np.arange(D + 1) <= D - margin
        sig = (int(s), int(-s))
        src = {"kind": kind, "c": c, "a": a}
    else:
        raise DomainError(f"unknown family kind {kind!r}")
    z, v, u = _shift_family(zs, T0, D0, q0)
    Z = [[z, v.T], [v, u]]
    rank = 2 if kind != "S_zero" else 1
    return HermitianRep(N=2, Z=Z, interior=interior, q0=q0, source=src,
                        rank=rank, signature=sig)


def from_scalar_matrix(M: np.ndarray, q0: float = 0.5, source=None) -> HermitianRep:
    """Wrap a scalar self-adjoint N x N matrix as a one-dimensional rep."""
    M = np.asarray(M, dtype=complex)
    N = M.shape[0]
    Z = [[M[i, j].reshape(1, 1) for j in range(N)] for i in range(N)]
    return HermitianRep(N=N, Z=Z, interior=np.array([True]), q0=q0,
                        source=source or {"kind": "scalar"})


# ---------------------------------------------------------------------------
# evaluation of symbolic polynomials on blocks


def eval_z_poly(p: NCPoly, rep: HermitianRep) -> np.ndarray:
    """Evaluate a Z-polynomial as an operator (words left to right)."""
    if p.algebra != "REA":
        raise DomainError("expected a Z-polynomial")
    dim = rep.dim
    dtype = rep.Z[0][0].dtype
    out = np.zeros((dim, dim), dtype=np.result_type(dtype, complex))
    for word, coeff in p.terms.items():
        M = np.eye(dim, dtype=out.dtype)
        for code in word:
            i, j = (code >> 10) & 0x3FF, code & 0x3FF
            M = M @ rep.block(i, j)
        out += complex(coeff.eval(rep.q0)) * M
    if p.qdenom:
        out /= (rep.q0 - 1.0 / rep.q0) ** p.qdenom
    return out


# ---------------------------------------------------------------------------
# residuals


def _rhat_entries(N: int, q0: float):
    """Sparse numeric braid matrix as {(rowpair, colpair): scalar}."""
    R = {}
    for k in range(1, N + 1):
        for l in range(1, N + 1):
            R[((l, k), (k, l))] = R.get(((l, k), (k, l)), 0.0) + (q0 ** -1 if k == l else 1.0)
            if l < k:
                R[((k, l), (k, l))] = R.get(((k, l), (k, l)), 0.0) + (1 / q0 - q0)
    return R


def _z2_blocks(rep: HermitianRep):
    out = {}
    for a in range(1, rep.N + 1):
        for b in range(1, rep.N + 1):
            for d in range(1, rep.N + 1):
                blk = rep.block(b, d)
                if np.any(blk):
                    out[((a, b), (a, d))] = blk
    return out


def _scal_times_block(R: dict, B: dict):
    rows = {}
    for (m, c), mat in B.items():
        rows.setdefault(m, []).append((c, mat))
    out = {}
    for (r, m), s in R.items():
        for c, mat in rows.get(m, ()):
            key = (r, c)
            out[key] = out.get(key, 0) + s * mat
    return out


def _block_times_scal(B: dict, R: dict):
    rows = {}
    for (m, c), s in R.items():
        rows.setdefault(m, []).append((c, s))
    out = {}
    for (r, m), mat in B.items():
        for c, s in rows.get(m, ()):
            key = (r, c)
            out[key] = out.get(key, 0) + s * mat
    return out


def _block_times_block(A: dict, B: dict):
    rows = {}
    for (m, c), mat in B.items():
        rows.setdefault(m, []).append((c, mat))
    out = {}
    for (r, m), amat in A.items():
        for c, bmat in rows.get(m, ()):
            key = (r, c)
            prod = amat @ bmat
            if key in out:
                out[key] = out[key] + prod
            else:
                out[key] = prod
    return out


def re_residual(rep: HermitianRep) -> float:
    """Relative interior residual of R Z2 R Z2 - Z2 R Z2 R."""
    R = _rhat_entries(rep.N, rep.q0)
    Z2 = _z2_blocks(rep)
    lhs = _block_times_block(_block_times_scal(_scal_times_block(R, Z2), R), Z2)
    rhs = _block_times_scal(_block_times_block(_block_times_scal(Z2, R), Z2), R)
    mask = rep.interior
    total = 0.0
    for key in set(lhs) | set(rhs):
        diff = lhs.get(key, 0) - rhs.get(key, 0)
        if isinstance(diff, np.ndarray):
            total += float(np.linalg.norm(diff[:, mask]) ** 2)
    scale = max(1.0, rep.znorm() ** 2)
    return np.sqrt(total) / scale


def selfadj_residual(rep: HermitianRep) -> float:
    """Relative residual of Z_ij - Z_ji^dagger on interior rows and columns."""
    mask = rep.interior
    total = 0.0
    for i in range(1, rep.N + 1):
        for j in range(1, rep.N + 1):
            diff = rep.block(i, j) - rep.block(j, i).conj().T
            total += float(np.linalg.norm(diff[np.ix_(mask, mask)]) ** 2)
    return np.sqrt(total) / max(1.0, rep.znorm())


# ---------------------------------------------------------------------------
# central elements and spectral data


def sigma_scalars(rep: HermitianRep, tol: float = 1e-8):
    """Measured central scalars, their scalarness residuals, and operators."""
    N = rep.N
    mask = rep.interior
    ref = int(np.argmax(mask))
    if rep.tmod is not None:
        ref = rep.tmod.highest_weight_index()
    scalars, resids, ops = [], [], []
    for k in range(1, N + 1):
        op = eval_z_poly(central_sigma(k, N), rep)
        s = complex(op[ref, ref])
        resid = float(np.linalg.norm((op - s * np.eye(rep.dim))[:, mask]))
        scalars.append(s)
        resids.append(resid / (1.0 + abs(s)))
        ops.append(op)
    return scalars, resids, ops


def hc_sigma_prediction(rep: HermitianRep):
    """Diagonal-projection prediction e_k(eta_1 q^{2 r_1}, eta_2 q^{2 r_2 + 2}, ...)."""
    if rep.tmod is None:
        return None
    spec = rep.tmod.spec
    q0 = rep.q0
    eps_pad = spec.eps_padded
    lead = 1
    args = []
    for m in range(1, spec.N + 1):
        lead_prev = lead
        lead = lead * eps_pad[m - 1]
        args.append(lead * q0 ** float(2 * spec.r_padded[m - 1] + 2 * (m - 1)))
    out = []
    for k in range(1, spec.N + 1):
        ek = sum(
            np.prod([args[t - 1] for t in comb])
            for comb in itertools.combinations(range(1, spec.N + 1), k)
        )
        out.append(complex(ek))
    return out


def op_leading_minor(rep: HermitianRep, k: int) -> np.ndarray:
    """The k-th leading minor as an operator.

    For big-cell builds it is the sign-weighted product of squared diagonal
    generators; in general it is the ordered permutation-sum word in the Z
    blocks.  The two agree (tested) wherever both apply.
    """
    if rep.tmod is not None:
        spec = rep.tmod.spec
        eps_pad = spec.eps_padded
        sgn = 1.0
        diag = np.ones(rep.dim, dtype=np.longdouble)
        lead = 1
        for m in range(1, k + 1):
            lead *= eps_pad[m - 1]
            sgn *= lead
            diag = diag * rep.tmod.Tdiag[m - 1] ** 2
        return sgn * np.diag(diag.astype(np.float64))
    return eval_z_poly(leading_minor_Z(k, rep.N), rep)


def _interior_eigs(op: np.ndarray, rep: HermitianRep, tol: float = 1e-8):
    """Eigenvalues harvested from interior-supported eigenvectors only."""
    mask = rep.interior
    sub = op[np.ix_(mask, mask)]
    sub = (sub + sub.conj().T) / 2
    vals, vecs = np.linalg.eigh(sub)
    full = np.zeros((rep.dim, vecs.shape[1]), dtype=complex)
    full[mask, :] = vecs
    out = []
    scale = max(1.0, float(np.linalg.norm(op[:, mask], 2)))
    for t, lam in enumerate(vals):
        resid = np.linalg.norm(op @ full[:, t] - lam * full[:, t])
        if resid <= tol * scale:
            out.append(float(lam))
    return out


def spectral_data(rep: HermitianRep, tol: float = 1e-8):
    """(roots, signature, extended signature, rank) of a factor representation.

    Requires the central elements to act as scalars to tolerance.  The
    rank is the number of nonzero roots of the characteristic polynomial.
    For big-cell representations the signature is read off the leading
    minors: eta_k is the ratio of the signs of the k-th and (k-1)-st minor
    spectra; otherwise it falls back to the root signs in the canonical
    decreasing-magnitude-per-class order.
    """
    scalars, resids, _ = sigma_scalars(rep, tol)
    if max(resids) > tol:
        raise NotFactorial(f"central elements are not scalar: residuals {resids}")
    N = rep.N
    scale = max(1.0, rep.znorm())
    rank = 0
    for k in range(N, 0, -1):
        if abs(scalars[k - 1]) > tol * scale ** k:
            rank = k
            break
    roots = _roots_from_sigma(scalars, rank, N)
    ext = _classify.ext_signature(roots, rep.q0)

    minor_sign = []
    for k in range(1, rank + 1):
        op = op_leading_minor(rep, k)
        nrm = float(np.linalg.norm(op[:, rep.interior], 2)) if rep.dim > 1 else abs(op[0, 0])
        if nrm <= tol * scale ** k:
            minor_sign.append(0)
            continue
        eigs = [x for x in _interior_eigs(op, rep, tol) if abs(x) > tol * max(1.0, nrm)]
        if eigs and all(x > 0 for x in eigs):
            minor_sign.append(1)
        elif eigs and all(x < 0 for x in eigs):
            minor_sign.append(-1)
        else:
            minor_sign.append(0)
    if all(minor_sign):
        sig, prev = [], 1
        for k in range(1, rank + 1):
            sig.append(minor_sign[k - 1] * prev)
            prev = minor_sign[k - 1]
    else:
        sig = [1 if x > 0 else -1 for x in sorted(
            (x for x in roots if x != 0.0), key=abs, reverse=True)]
    return roots, tuple(sig), ext, rank


def _roots_from_sigma(scalars, rank, N):
    coeffs = [1.0]
    for k in range(1, rank + 1):
        coeffs.append((-1) ** k * scalars[k - 1].real)
    roots = list(np.roots(coeffs)) if rank > 0 else []
    roots = [float(x.real) for x in roots]
    return sorted(roots + [0.0] * (N - rank), reverse=True)


def spectral_components(rep: HermitianRep, tol: float = 1e-7):
    """Spectral data per joint eigenspace of the central elements.

    Transported representations decompose into factors with distinct
    central characters; this clusters interior-exact joint eigenvectors
    and classifies each cluster.  Returns a list of
    (sigma_tuple, roots, extended_signature, multiplicity).
    """
    N = rep.N
    _, _, ops = sigma_scalars(rep, tol=np.inf)
    mask = rep.interior
    sub_ops = [(op[np.ix_(mask, mask)] + op[np.ix_(mask, mask)].conj().T) / 2 for op in ops]
    rng = np.random.default_rng(0)
    combo = sum(rng.standard_normal() * op for op in sub_ops)
    vals, vecs = np.linalg.eigh(combo)
    scale = max(1.0, rep.znorm() ** N)
    clusters = {}
    for t in range(vecs.shape[1]):
        v = np.zeros(rep.dim, dtype=complex)
        v[mask] = vecs[:, t]
        sig = []
        ok = True
        for op in ops:
            lam = complex(v.conj() @ (op @ v))
            if np.linalg.norm(op @ v - lam * v) > tol * scale:
                ok = False
                break
            sig.append(lam.real)
        if not ok:
            continue
        key = tuple(round(x, 6) for x in sig)
        clusters.setdefault(key, []).append(tuple(sig))
    out = []
    for key, members in sorted(clusters.items()):
        sig = tuple(np.mean([m[k] for m in members]) for k in range(N))
        rank = N
        while rank > 0 and abs(sig[rank - 1]) <= 1e-7 * scale:
            rank -= 1
        roots = _roots_from_sigma([complex(x) for x in sig], rank, N)
        ext = _classify.ext_signature(roots, rep.q0)
        out.append((sig, roots, ext, len(members)))
    return out


# ---------------------------------------------------------------------------
# operator-level quantum minors and their exchange structure


def _inversions(seq):
    return sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])


def ext_power_blocks(tblocks, k: int, N: int, q0: float):
    """Operator minors of a triangular block matrix by the ordered
    permutation-sum formula; returns {(I, J): ndarray}."""
    dim = tblocks(1, 1).shape[0]
    out = {}
    for I in itertools.combinations(range(1, N + 1), k):
        for J in itertools.combinations(range(1, N + 1), k):
            M = np.zeros((dim, dim), dtype=tblocks(1, 1).dtype)
            for w in itertools.permutations(range(k)):
                rows = tuple(I[w[p]] for p in range(k))
                coeff = (-q0) ** _inversions(rows)
                term = np.eye(dim, dtype=M.dtype)
                nonzero = True
                for p in range(k):
                    blk = tblocks(rows[p], J[p])
                    if not np.any(blk):
                        nonzero = False
                        break
                    term = term @ blk
                if nonzero:
                    M = M + coeff * term
            out[(I, J)] = M
    return out


def ext_power_blocks_braided(tblocks, k: int, N: int, q0: float):
    """Same minors via the embedded exterior-power coaction (cross-check)."""
    from .braid import exterior_power

    ext = exterior_power(N, k)
    E = ext.embed.to_numpy(q0)
    P = ext.project.to_numpy(q0)
    dim = tblocks(1, 1).shape[0]
    nk = N ** k
    chain = {}
    for w in itertools.product(range(1, N + 1), repeat=k):
        for wp in itertools.product(range(1, N + 1), repeat=k):
            term = np.eye(dim, dtype=complex)
            ok = True
            for a in range(k):
                blk = tblocks(w[a], wp[a])
                if not np.any(blk):
                    ok = False
                    break
                term = term @ blk
            if ok and np.any(term):
                chain[(w, wp)] = term

    def word_index(w):
        out = 0
        for a in w:
            out = out * N + (a - 1)
        return out

    blocks = {}
    for ci, I in enumerate(ext.basis):
        for cj, J in enumerate(ext.basis):
            M = np.zeros((dim, dim), dtype=complex)
            for (w, wp), term in chain.items():
                pc = P[ci, word_index(w)]
                ec = E[word_index(wp), cj]
                if pc and ec:
                    M = M + pc * ec * term
            blocks[(I, J)] = M
    return blocks


def op_minor_blocks(rep: HermitianRep, k: int):
    """Operator-level minors Z_{I,J} of a big-cell representation via the
    triangular factorization Z^{[k]} = (T^{[k]})^dagger E^{[k]} T^{[k]}."""
    if rep.tmod is None:
        raise DomainError("operator minors need a triangular factorization")
    spec = rep.tmod.spec
    eps_pad = spec.eps_padded
    N = rep.N
    ld = np.longdouble
    T = ext_power_blocks(lambda i, j: rep.tmod.t_block(i, j).astype(ld), k, N, rep.q0)
    lead = [1] * (N + 1)
    for m in range(1, N + 1):
        lead[m] = lead[m - 1] * eps_pad[m - 1]
    out = {}
    for I in itertools.combinations(range(1, N + 1), k):
        for J in itertools.combinations(range(1, N + 1), k):
            M = np.zeros((rep.dim, rep.dim), dtype=ld)
            for K in itertools.combinations(range(1, N + 1), k):
                wK = np.prod([lead[t] for t in K])
                if wK == 0:
                    continue
                M = M + wK * (T[(K, I)].T @ T[(K, J)])
            out[(I, J)] = M.astype(np.float64)
    return out


# ---------------------------------------------------------------------------
# adjoint transports


def adjoint_transport_T(rep: HermitianRep, trep) -> HermitianRep:
    """Transport Z -> T^dagger_13 Z_12 T_13 by a finite triangular rep."""
    N = rep.N
    if trep.N != N:
        raise DomainError("size mismatch between representation and transport")
    newdim = rep.dim * trep.dim
    if newdim > TRANSPORT_DIM_CAP:
        raise DomainError(f"transport dimension {newdim} exceeds cap {TRANSPORT_DIM_CAP}")
    blocks = [[None] * N for _ in range(N)]
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            M = np.zeros((newdim, newdim), dtype=complex)
            for k in range(1, i + 1):
                tki = np.asarray(trep.t_block(k, i), dtype=np.float64)
                if not np.any(tki):
                    continue
                for l in range(1, j + 1):
                    tlj = np.asarray(trep.t_block(l, j), dtype=np.float64)
                    if not np.any(tlj):
                        continue
                    M = M + np.kron(rep.block(k, l), tki.T @ tlj)
            blocks[i - 1][j - 1] = M
    interior = np.kron(rep.interior, trep.interior).astype(bool)
    return HermitianRep(
        N=N, Z=blocks, interior=interior, q0=rep.q0,
        source={"kind": "transported_T", "parent": rep.source},
        rank=rep.rank, signature=rep.signature,
    )


def _check_corep_unitary(U, interior, tol):
    n = len(U)
    dim = U[0][0].shape[0]
    worst = 0.0
    for i in range(n):
        for j in range(n):
            acc = sum(U[k][i].conj().T @ U[k][j] for k in range(n))
            want = np.eye(dim) if i == j else np.zeros((dim, dim))
            worst = max(worst, float(np.linalg.norm((acc - want)[np.ix_(interior, interior)])))
    if worst > tol:
        raise BadCorep(f"transport matrix unitarity residual {worst:.2e} > {tol:.2e}")
    return worst


def adjoint_transport_U(rep: HermitianRep, U, u_interior=None, tol: float = 1e-9) -> HermitianRep:
    """Transport Z -> U^dagger_13 Z_12 U_13 by a unitary block corepresentation."""
    N = rep.N
    if len(U) != N:
        raise DomainError("transport block matrix has wrong size")
    udim = U[0][0].shape[0]
    if u_interior is None:
        u_interior = np.ones(udim, dtype=bool)
    _check_corep_unitary(U, u_interior, tol)
    newdim = rep.dim * udim
    if newdim > TRANSPORT_DIM_CAP:
        raise DomainError(f"transport dimension {newdim} exceeds cap {TRANSPORT_DIM_CAP}")
    blocks = [[None] * N for _ in range(N)]
    for i in range(N):
        for j in range(N):
            M = np.zeros((newdim, newdim), dtype=complex)
            for k in range(N):
                for l in range(N):
                    if not (np.any(U[k][i]) and np.any(U[l][j]) and np.any(rep.Z[k][l])):
                        continue
                    M = M + np.kron(rep.Z[k][l], U[k][i].conj().T @ U[l][j])
            blocks[i][j] = M
    interior = np.kron(rep.interior, u_interior).astype(bool)
    return HermitianRep(
        N=N, Z=blocks, interior=interior, q0=rep.q0,
        source={"kind": "transported_U", "parent": rep.source},
        rank=rep.rank, signature=rep.signature,
    )


def uchar_blocks(thetas) -> list:
    """Diagonal character of the unitary quantum group as 1x1 blocks."""
    n = len(thetas)
    return [
        [np.array([[np.exp(2j * np.pi * thetas[k])]]) if k == i else np.zeros((1, 1))
         for i in range(n)]
        for k in range(n)
    ]


def suq2_corep_blocks(D: int, theta: float = 0.0, q0: float = 0.5):
    """The standard quantum-SU(2) corepresentation block matrix and its
    interior mask."""
    _, _, U = suq2_rep(D, theta=theta, q0=q0)
    interior = np.arange(D + 1) <= D - 1
    return U, interior


# ---------------------------------------------------------------------------
# verification report


def verify_rep(rep: HermitianRep, tol: float = 1e-9) -> dict:
    """Reflection-equation, self-adjointness, central-scalar, and
    Cayley-Hamilton checks; all findings are report rows."""
    N = rep.N
    findings = []
    re_res = re_residual(rep)
    findings.append({"name": "reflection_equation", "residual": re_res, "ok": re_res < tol})
    sa_res = selfadj_residual(rep)
    findings.append({"name": "self_adjoint", "residual": sa_res, "ok": sa_res < tol})

    scalars, resids, ops = sigma_scalars(rep)
    for k in range(1, N + 1):
        findings.append({
            "name": f"sigma_{k}_scalar",
            "residual": resids[k - 1],
            "ok": resids[k - 1] < max(tol, 1e-8),
            "value": scalars[k - 1].real,
        })
    hc = hc_sigma_prediction(rep)
    if hc is not None:
        for k in range(1, N + 1):
            d = abs(scalars[k - 1] - hc[k - 1]) / (1.0 + abs(hc[k - 1]))
            findings.append({
                "name": f"sigma_{k}_hc_match",
                "residual": d,
                "ok": d < 1e-10,
                "predicted": hc[k - 1].real,
            })

    # Cayley-Hamilton with the measured scalars
    dimN = rep.dim
    powers = [[np.eye(dimN, dtype=complex) if i == j else np.zeros((dimN, dimN), dtype=complex)
               for j in range(N)] for i in range(N)]
    acc = [[powers[i][j].copy() for j in range(N)] for i in range(N)]
    ch = [[(-1) ** N * scalars[N - 1] * np.eye(dimN, dtype=complex) if i == j
           else np.zeros((dimN, dimN), dtype=complex) for j in range(N)] for i in range(N)]
    for m in range(1, N + 1):
        nxt = [[sum(acc[i][t] @ rep.Z[t][j] for t in range(N)) for j in range(N)] for i in range(N)]
        acc = nxt
        k = N - m
        coeff = (-1) ** k * (scalars[k - 1] if k >= 1 else 1.0)
        for i in range(N):
            for j in range(N):
                ch[i][j] = ch[i][j] + coeff * acc[i][j]
    mask = rep.interior
    ch_res = np.sqrt(sum(float(np.linalg.norm(ch[i][j][:, mask]) ** 2)
                         for i in range(N) for j in range(N)))
    ch_res /= max(1.0, rep.znorm() ** N)
    findings.append({"name": "cayley_hamilton", "residual": ch_res, "ok": ch_res < max(tol, 1e-8)})

    return {
        "rep_id": json.dumps(rep.source, sort_keys=True, default=str),
        "residuals": {"re": re_res, "selfadj": sa_res, "ch": ch_res},
        "sigma": [s.real for s in scalars],
        "findings": findings,
        "pass": all(f["ok"] for f in findings),
    }


def report_json(rep: HermitianRep, tol: float = 1e-9) -> str:
    """Full JSON report: residuals, central scalars, roots, signatures."""
    rpt = verify_rep(rep, tol)
    try:
        roots, sig, ext, rank = spectral_data(rep)
        rpt.update({
            "roots": roots,
            "signature": list(sig),
            "extsig": {"rmod1": ext.rmod1, "nplus": ext.nplus,
                       "nminus": ext.nminus, "nzero": ext.nzero},
            "rank": rank,
        })
    except (NotFactorial, NotAdmissible):
        rpt.update({"roots": None, "signature": None, "extsig": None, "rank": None})
    return json.dumps(rpt, sort_keys=True, default=float)
