"""Linear-algebra Hom, used as an independent check on the graph-map count.

The string representation is written out with explicit 0/1 matrices and the
commutativity equations of a morphism are solved modulo large primes.
"""

from __future__ import annotations

import numpy as np

from .homext import euler_form
from .strings import StringModule, dimension_vector

PRIMES = (2147483629, 2147483587)


def representation(M: StringModule):
    """Basis index per position and one matrix per arrow (target x source)."""
    Q, n = M.quiver, M.n
    basis: dict[int, list[int]] = {v: [] for v in range(n)}
    where = {}
    for m in M.positions():
        where[m] = len(basis[m % n])
        basis[m % n].append(m)
    mats = {}
    for a in Q.arrows():
        mats[a.index] = np.zeros((len(basis[a.target]), len(basis[a.source])), dtype=np.int64)
    for m in range(M.start + 1, M.end):
        v = m % n
        if Q.is_plus(m):
            mats[v][where[m + 1], where[m]] = 1
        else:
            mats[v][where[m], where[m + 1]] = 1
    dims = [len(basis[v]) for v in range(n)]
    return dims, mats


def rank_mod_p(A: np.ndarray, p: int) -> int:
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        below = np.nonzero(A[r + 1:, c])[0] + r + 1
        if below.size:
            f = A[below, c][:, None]
            A[below] = (A[below] - f * A[r]) % p
        r += 1
    return r


def hom_equations(M: StringModule, N: StringModule) -> tuple[np.ndarray, int]:
    """Matrix of the morphism equations and the number of unknowns."""
    dM, mM = representation(M)
    dN, mN = representation(N)
    offset = {}
    k = 0
    for v in range(M.n):
        offset[v] = k
        k += dN[v] * dM[v]

    def var(v, r, c):  # entry (r, c) of theta_v : M_v -> N_v
        return offset[v] + r * dM[v] + c

    eqs = []
    for a in M.quiver.arrows():
        s, t = a.source, a.target
        A, B = mM[a.index], mN[a.index]  # A: M_s -> M_t, B: N_s -> N_t
        # (B theta_s - theta_t A)[r, c] = 0 for r in N_t, c in M_s
        for r in range(dN[t]):
            for c in range(dM[s]):
                row = np.zeros(k, dtype=np.int64)
                for x in range(dN[s]):
                    if B[r, x]:
                        row[var(s, x, c)] += B[r, x]
                for y in range(dM[t]):
                    if A[y, c]:
                        row[var(t, r, y)] -= A[y, c]
                if row.any():
                    eqs.append(row)
    if not eqs:
        return np.zeros((0, k), dtype=np.int64), k
    return np.array(eqs), k


def dim_hom_linear_algebra(M: StringModule, N: StringModule) -> int:
    E, k = hom_equations(M, N)
    if k == 0 or E.shape[0] == 0:
        return k
    rank = max(rank_mod_p(E, p) for p in PRIMES)
    return k - rank


def dim_ext_linear_algebra(M: StringModule, N: StringModule) -> int:
    """Ext from Hom and the Euler form (hereditary algebra)."""
    chi = euler_form(M.quiver, dimension_vector(M), dimension_vector(N))
    return dim_hom_linear_algebra(M, N) - chi
