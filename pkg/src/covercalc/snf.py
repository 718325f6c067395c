"""Smith normal form over Z and over F_p[t].

Classical norm-descent elimination: the smallest-norm nonzero entry (ties
broken by row-major position) is moved to the pivot, row/column remainders
strictly shrink the norm, and a final pass forces the divisibility chain.
U and V are accumulated from the elementary operations, so U*A*V = D with
unit determinants.
"""

from __future__ import annotations

from . import fppoly
from .rings import INTEGERS, POLY, RingHandle


class _IntOps:
    zero = 0
    one = 1

    @staticmethod
    def is_zero(x):
        return x == 0

    @staticmethod
    def norm(x):
        return abs(x)

    @staticmethod
    def divmod(a, b):
        q = a // b
        r = a - q * b
        # keep |r| <= |b|/2 so norms shrink fast
        if abs(2 * r) > abs(b):
            adj = 1 if (r > 0) == (b > 0) else -1
            q += adj
            r -= adj * b
        return q, r

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def canonical_unit(x):
        """Unit u with u*x canonical (nonnegative)."""
        return -1 if x < 0 else 1


class _PolyOps:
    def __init__(self, p: int):
        self.p = p
        self.zero = fppoly.ZERO
        self.one = fppoly.ONE

    def is_zero(self, x):
        return x == fppoly.ZERO

    def norm(self, x):
        return fppoly.deg(x) + 1

    def divmod(self, a, b):
        return fppoly.divmod_poly(a, b, self.p)

    def add(self, a, b):
        return fppoly.add(a, b, self.p)

    def sub(self, a, b):
        return fppoly.sub(a, b, self.p)

    def mul(self, a, b):
        return fppoly.mul(a, b, self.p)

    def canonical_unit(self, x):
        """Scalar u with u*x monic."""
        return (pow(x[-1], self.p - 2, self.p),)


def _ops_for(ring: RingHandle):
    if ring.kind == INTEGERS:
        return _IntOps()
    if ring.kind == POLY:
        return _PolyOps(ring.p)
    raise ValueError("Smith normal form supports Z and F_p[t] matrices only")


def smith_normal_form(ring: RingHandle, A):
    """Return (D, U, V) with U*A*V = D diagonal and d1 | d2 | ...

    D is the list of diagonal entries (length min(rows, cols)); entries are
    nonnegative over Z and monic over F_p[t].  Matrix entries over F_p[t]
    are coefficient tuples as in fppoly.
    """
    ops = _ops_for(ring)
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("matrix is not rectangular")
    D = [[_coerce(ops, x) for x in row] for row in A]
    U = _identity(ops, m)
    V = _identity(ops, n)

    for k in range(min(m, n)):
        while True:
            piv = _smallest_entry(ops, D, k)
            if piv is None:
                break
            pi, pj = piv
            if pi != k:
                D[k], D[pi] = D[pi], D[k]
                U[k], U[pi] = U[pi], U[k]
            if pj != k:
                _swap_cols(D, k, pj)
                _swap_cols(V, k, pj)
            dirty = False
            for i in range(k + 1, m):
                if not ops.is_zero(D[i][k]):
                    q, r = ops.divmod(D[i][k], D[k][k])
                    _row_sub(ops, D, U, i, k, q)
                    dirty = dirty or not ops.is_zero(r)
            for j in range(k + 1, n):
                if not ops.is_zero(D[k][j]):
                    q, r = ops.divmod(D[k][j], D[k][k])
                    _col_sub(ops, D, V, j, k, q)
                    dirty = dirty or not ops.is_zero(r)
            if dirty:
                continue
            # pivot must divide the remaining submatrix for the chain
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if not ops.is_zero(ops.divmod(D[i][j], D[k][k])[1]):
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _row_add(ops, D, U, k, offender)
        # normalize the pivot to its canonical associate
        if not ops.is_zero(D[k][k]):
            u = ops.canonical_unit(D[k][k])
            if u != ops.one:
                D[k] = [ops.mul(u, x) for x in D[k]]
                U[k] = [ops.mul(u, x) for x in U[k]]

    diag = [D[k][k] for k in range(min(m, n))]
    return diag, U, V


def _coerce(ops, x):
    if isinstance(ops, _PolyOps):
        if isinstance(x, int):
            return fppoly.trim((x,), ops.p)
        return fppoly.trim(tuple(x), ops.p)
    return int(x)


def _identity(ops, n):
    return [[ops.one if i == j else ops.zero for j in range(n)] for i in range(n)]


def _smallest_entry(ops, D, k):
    best = None
    best_norm = None
    for i in range(k, len(D)):
        for j in range(k, len(D[0])):
            if not ops.is_zero(D[i][j]):
                nm = ops.norm(D[i][j])
                if best_norm is None or nm < best_norm:
                    best, best_norm = (i, j), nm
    return best


def _swap_cols(M, a, b):
    for row in M:
        row[a], row[b] = row[b], row[a]


def _row_sub(ops, D, U, i, k, q):
    D[i] = [ops.sub(x, ops.mul(q, y)) for x, y in zip(D[i], D[k])]
    U[i] = [ops.sub(x, ops.mul(q, y)) for x, y in zip(U[i], U[k])]


def _row_add(ops, D, U, k, i):
    D[k] = [ops.add(x, y) for x, y in zip(D[k], D[i])]
    U[k] = [ops.add(x, y) for x, y in zip(U[k], U[i])]


def _col_sub(ops, D, V, j, k, q):
    for row in D:
        row[j] = ops.sub(row[j], ops.mul(q, row[k]))
    for row in V:
        row[j] = ops.sub(row[j], ops.mul(q, row[k]))


def matmul(ops_ring: RingHandle, A, B):
    """Exact matrix product over Z or F_p[t] (for checking U*A*V = D)."""
    ops = _ops_for(ops_ring)
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    out = [[ops.zero for _ in range(cols)] for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            acc = ops.zero
            for l in range(inner):
                acc = ops.add(acc, ops.mul(_coerce(ops, A[i][l]), _coerce(ops, B[l][j])))
            out[i][j] = acc
    return out
