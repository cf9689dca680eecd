"""Hot numeric kernels with two interchangeable backends.

Each kernel exists twice: a numba ``@njit`` version and a vectorized
numpy/scipy version. The public dispatchers pick the numba path when numba
imported successfully and the ``MSMNET_NO_NUMBA`` environment variable is
unset; setting ``MSMNET_NO_NUMBA=1`` forces the numpy path. Both paths of
``sample_edges`` produce bit-identical edge sets because the per-pair
randomness is a pure function of (seed, pair index); the floating-point
reductions (``conditional_r1``) may differ between backends in the last few
ulps due to summation order.
"""

from __future__ import annotations

import os

import numpy as np
import scipy.sparse as sp

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dep, but keep a fallback
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


ENV_FLAG = "MSMNET_NO_NUMBA"

# splitmix64 constants: counter k -> mix64(seed + (k+1)*GOLDEN)
_SM_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_SM_MULT1 = np.uint64(0xBF58476D1CE4E5B9)
_SM_MULT2 = np.uint64(0x94D049BB133111EB)
_SH30 = np.uint64(30)
_SH27 = np.uint64(27)
_SH31 = np.uint64(31)
_SH11 = np.uint64(11)
_ONE = np.uint64(1)
_INV53 = 2.0 ** -53


def numba_active() -> bool:
    """True when dispatchers will route to the numba backend."""
    if not HAVE_NUMBA:
        return False
    return os.environ.get(ENV_FLAG, "").strip().lower() not in ("1", "true", "yes")


def backend_name() -> str:
    return "numba" if numba_active() else "numpy"


# ---------------------------------------------------------------------------
# counter-based uniforms
# ---------------------------------------------------------------------------

def uniforms_at(seed: int, start: int, count: int) -> np.ndarray:
    """Uniforms in [0,1) at counter positions start..start+count-1 (numpy path)."""
    k = np.arange(start, start + count, dtype=np.uint64)
    z = (k + _ONE) * _SM_GOLDEN + np.uint64(seed)
    z = (z ^ (z >> _SH30)) * _SM_MULT1
    z = (z ^ (z >> _SH27)) * _SM_MULT2
    z = z ^ (z >> _SH31)
    return (z >> _SH11).astype(np.float64) * _INV53


@njit(cache=True)
def _uniform_scalar(seed_u64, k_u64):
    z = (k_u64 + _ONE) * _SM_GOLDEN + seed_u64
    z = (z ^ (z >> _SH30)) * _SM_MULT1
    z = (z ^ (z >> _SH27)) * _SM_MULT2
    z = z ^ (z >> _SH31)
    return np.float64(z >> _SH11) * _INV53


# ---------------------------------------------------------------------------
# edge sampling: pair {i,j} present iff u(pair) < 1 - exp(-delta*w_i*w_j)
# ---------------------------------------------------------------------------

@njit(cache=True)
def _sample_edges_numba_impl(w, delta, seed_u64):
    n = w.shape[0]
    cap = 1024
    eu = np.empty(cap, np.int64)
    ev = np.empty(cap, np.int64)
    m = 0
    counter = np.uint64(0)
    for i in range(n - 1):
        dwi = delta * w[i]
        for j in range(i + 1, n):
            p = -np.expm1(-dwi * w[j])
            u = _uniform_scalar(seed_u64, counter)
            counter += _ONE
            if u < p:
                if m == cap:
                    cap *= 2
                    eu2 = np.empty(cap, np.int64)
                    ev2 = np.empty(cap, np.int64)
                    eu2[:m] = eu
                    ev2[:m] = ev
                    eu = eu2
                    ev = ev2
                eu[m] = i
                ev[m] = j
                m += 1
    return eu[:m].copy(), ev[:m].copy()


def _sample_edges_numpy_impl(w, delta, seed):
    n = w.shape[0]
    us, vs = [], []
    for i in range(n - 1):
        count = n - 1 - i
        base = i * (2 * n - i - 1) // 2
        u = uniforms_at(seed, base, count)
        p = -np.expm1(-delta * w[i] * w[i + 1:])
        hit = np.flatnonzero(u < p)
        if hit.size:
            us.append(np.full(hit.size, i, dtype=np.int64))
            vs.append(hit.astype(np.int64) + i + 1)
    if not us:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty.copy()
    return np.concatenate(us), np.concatenate(vs)


def sample_edges(w: np.ndarray, delta: float, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Sample all independent pair indicators; returns (u, v) with u < v."""
    w = np.ascontiguousarray(w, dtype=np.float64)
    if numba_active():
        return _sample_edges_numba_impl(w, float(delta), np.uint64(seed))
    return _sample_edges_numpy_impl(w, float(delta), int(seed))


# ---------------------------------------------------------------------------
# per-node triangle counts over a sorted-CSR adjacency
# ---------------------------------------------------------------------------

@njit(cache=True)
def _triangles_numba_impl(indptr, indices):
    n = indptr.shape[0] - 1
    tri = np.zeros(n, np.int64)
    for u in range(n):
        au0, au1 = indptr[u], indptr[u + 1]
        for pu in range(au0, au1):
            v = indices[pu]
            if v <= u:
                continue
            # merge suffixes of N(u), N(v) above v: each triangle u<v<w hit once
            a = au0 + np.searchsorted(indices[au0:au1], v + 1)
            b0, b1 = indptr[v], indptr[v + 1]
            b = b0 + np.searchsorted(indices[b0:b1], v + 1)
            while a < au1 and b < b1:
                x = indices[a]
                y = indices[b]
                if x < y:
                    a += 1
                elif x > y:
                    b += 1
                else:
                    tri[u] += 1
                    tri[v] += 1
                    tri[x] += 1
                    a += 1
                    b += 1
    return tri


def _triangles_numpy_impl(indptr, indices):
    # 2*tri_v = sum_u A_vu (A^2)_vu, evaluated in row blocks to bound memory
    n = indptr.shape[0] - 1
    if indices.size == 0:
        return np.zeros(n, np.int64)
    data = np.ones(indices.size, dtype=np.int64)
    adj = sp.csr_matrix((data, indices, indptr), shape=(n, n))
    tri2 = np.zeros(n, np.int64)
    block = max(1, min(n, 4096))
    for lo in range(0, n, block):
        hi = min(n, lo + block)
        rows = adj[lo:hi]
        tri2[lo:hi] = np.asarray((rows @ adj).multiply(rows).sum(axis=1)).ravel()
    return tri2 // 2


def triangle_counts(indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """Number of triangles through each node."""
    if numba_active():
        return _triangles_numba_impl(indptr, indices)
    return _triangles_numpy_impl(indptr, indices)


# ---------------------------------------------------------------------------
# exact conditional degree-1 fraction: O(n^2) double sum
# ---------------------------------------------------------------------------

@njit(cache=True)
def _r1_numba_impl(w, delta, wsum):
    n = w.shape[0]
    total = 0.0
    for i in range(n):
        ai = delta * w[i] * (wsum - w[i])
        si = 0.0
        for k in range(n):
            if k == i:
                continue
            t = delta * w[i] * w[k]
            si += -np.expm1(-t) * np.exp(t - ai)
        total += si
    return total / n


def _r1_numpy_impl(w, delta, wsum):
    n = w.shape[0]
    total = 0.0
    for i in range(n):
        ai = delta * w[i] * (wsum - w[i])
        t = delta * w[i] * w
        expo = t - ai
        expo[i] = -np.inf  # k = i is excluded; unmasked it can overflow for hubs
        term = -np.expm1(-t) * np.exp(expo)
        total += term.sum()
    return total / n


def conditional_r1(w: np.ndarray, delta: float) -> float:
    """Expected degree-1 fraction given weights: (1/n) sum_i P(D_i = 1)."""
    w = np.ascontiguousarray(w, dtype=np.float64)
    wsum = float(w.sum())
    if numba_active():
        return float(_r1_numba_impl(w, float(delta), wsum))
    return float(_r1_numpy_impl(w, float(delta), wsum))
