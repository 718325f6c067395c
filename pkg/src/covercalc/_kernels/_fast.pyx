# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled search kernels; same contract and tie-breaking as pure.py.

Bitmasks cross the boundary as Python ints and are unpacked into C arrays
of 64-bit words internally.  Element counts are capped at 1 << 16, far
above the oracle's materialization bound.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

ctypedef unsigned long long u64

BACKEND = "c"

DEF MAXK = 16


cdef struct Group:
    int k
    int n
    long long orders[MAXK]
    long long strides[MAXK]


cdef int _init_group(Group* g, object orders) except -1:
    cdef int i
    cdef long long nn = 1
    g.k = len(orders)
    if g.k > MAXK:
        raise ValueError("too many cyclic coordinates")
    for i in range(g.k):
        g.orders[i] = orders[i]
        g.strides[i] = nn
        nn *= g.orders[i]
        if nn > (1 << 16):
            raise ValueError("module too large for the compiled kernel")
    g.n = <int>nn
    return 0


cdef inline void _dec(Group* g, long long x, long long* out):
    cdef int i
    for i in range(g.k):
        out[i] = x % g.orders[i]
        x //= g.orders[i]


cdef inline long long _enc(Group* g, long long* digits):
    cdef long long x = 0
    cdef long long d
    cdef int i
    for i in range(g.k):
        d = digits[i] % g.orders[i]
        if d < 0:
            d += g.orders[i]
        x += d * g.strides[i]
    return x


cdef inline int _words(int nbits):
    return (nbits + 63) >> 6


cdef void _from_pyint(object mask, u64* buf, int words):
    cdef int i
    for i in range(words):
        buf[i] = <u64>((mask >> (64 * i)) & 0xFFFFFFFFFFFFFFFF)


cdef object _to_pyint(u64* buf, int words):
    out = 0
    cdef int i
    for i in range(words - 1, -1, -1):
        out = (out << 64) | int(buf[i])
    return out


cdef inline bint _get(u64* buf, long long x):
    return (buf[x >> 6] >> (x & 63)) & 1


cdef inline void _setbit(u64* buf, long long x):
    buf[x >> 6] |= (<u64>1) << (x & 63)


cdef int _popcount(u64* buf, int words):
    cdef int i, c = 0
    cdef u64 v
    for i in range(words):
        v = buf[i]
        while v:
            v &= v - 1
            c += 1
    return c


cdef int _count_and(u64* a, u64* b, int words):
    cdef int i, c = 0
    cdef u64 v
    for i in range(words):
        v = a[i] & b[i]
        while v:
            v &= v - 1
            c += 1
    return c


cdef inline int _ctz(u64 v):
    cdef int c = 0
    while not (v & 1):
        v >>= 1
        c += 1
    return c


def encode(orders, digits):
    cdef Group g
    cdef long long buf[MAXK]
    cdef int i
    _init_group(&g, orders)
    for i in range(g.k):
        buf[i] = digits[i]
    return _enc(&g, buf)


def decode(orders, x):
    cdef Group g
    cdef long long buf[MAXK]
    cdef int i
    _init_group(&g, orders)
    _dec(&g, x, buf)
    return tuple(buf[i] for i in range(g.k))


cdef void _load_matrix(Group* g, object mat, long long* out):
    cdef int i, j
    for i in range(g.k):
        row = mat[i]
        for j in range(g.k):
            out[i * g.k + j] = row[j]


cdef inline void _apply(Group* g, long long* m, long long* xd, long long* out):
    cdef int i, j
    cdef long long acc
    for i in range(g.k):
        acc = 0
        for j in range(g.k):
            acc += m[i * g.k + j] * xd[j]
        out[i] = acc % g.orders[i]
        if out[i] < 0:
            out[i] += g.orders[i]


def apply_matrix(orders, mat, x):
    cdef Group g
    cdef long long m[MAXK * MAXK]
    cdef long long xd[MAXK]
    cdef long long yd[MAXK]
    _init_group(&g, orders)
    _load_matrix(&g, mat, m)
    _dec(&g, x, xd)
    _apply(&g, m, xd, yd)
    return _enc(&g, yd)


cdef void _translate_c(Group* g, u64* src, u64* dst, long long elem, int words):
    cdef long long gd[MAXK]
    cdef long long xd[MAXK]
    cdef long long sd[MAXK]
    cdef long long x
    cdef int i
    _dec(g, elem, gd)
    memset(dst, 0, words * 8)
    for x in range(g.n):
        if _get(src, x):
            _dec(g, x, xd)
            for i in range(g.k):
                sd[i] = xd[i] + gd[i]
            _setbit(dst, _enc(g, sd))


def translate(orders, mask, g_elem):
    cdef Group g
    cdef int words
    cdef u64* src
    cdef u64* dst
    _init_group(&g, orders)
    words = _words(g.n)
    src = <u64*>calloc(words, 8)
    dst = <u64*>calloc(words, 8)
    if src == NULL or dst == NULL:
        if src != NULL:
            free(src)
        if dst != NULL:
            free(dst)
        raise MemoryError()
    try:
        _from_pyint(mask, src, words)
        _translate_c(&g, src, dst, g_elem, words)
        return _to_pyint(dst, words)
    finally:
        free(src)
        free(dst)


def closure(orders, actions, seeds):
    cdef Group g
    cdef int words, nact, i, w, changed
    cdef long long* mats = NULL
    cdef u64* members
    cdef u64* t
    cdef u64* t2
    cdef long long gd[MAXK]
    cdef long long yd[MAXK]
    cdef long long elem
    _init_group(&g, orders)
    words = _words(g.n)
    nact = len(actions)
    members = <u64*>calloc(words, 8)
    t = <u64*>calloc(words, 8)
    t2 = <u64*>calloc(words, 8)
    if members == NULL or t == NULL or t2 == NULL:
        raise MemoryError()
    if nact:
        mats = <long long*>malloc(nact * g.k * g.k * 8)
        if mats == NULL:
            raise MemoryError()
        for i in range(nact):
            _load_matrix(&g, actions[i], mats + i * g.k * g.k)
    pending = list(seeds)
    try:
        _setbit(members, 0)
        while pending:
            elem = pending.pop()
            if _get(members, elem):
                continue
            _translate_c(&g, members, t, elem, words)
            changed = 1
            while changed:
                changed = 0
                for w in range(words):
                    if t[w] & ~members[w]:
                        changed = 1
                        break
                if changed:
                    for w in range(words):
                        members[w] |= t[w]
                    _translate_c(&g, t, t2, elem, words)
                    memcpy(t, t2, words * 8)
            _dec(&g, elem, gd)
            for i in range(nact):
                _apply(&g, mats + i * g.k * g.k, gd, yd)
                pending.append(_enc(&g, yd))
        return _to_pyint(members, words)
    finally:
        free(members)
        free(t)
        free(t2)
        if mats != NULL:
            free(mats)


def invariant_core(orders, actions, mask):
    cdef Group g
    cdef int words, nact, i, stable
    cdef long long* mats
    cdef u64* cur
    cdef u64* keep
    cdef long long x
    cdef long long xd[MAXK]
    cdef long long yd[MAXK]
    _init_group(&g, orders)
    if not actions:
        return mask
    words = _words(g.n)
    nact = len(actions)
    mats = <long long*>malloc(nact * g.k * g.k * 8)
    cur = <u64*>calloc(words, 8)
    keep = <u64*>calloc(words, 8)
    if mats == NULL or cur == NULL or keep == NULL:
        raise MemoryError()
    for i in range(nact):
        _load_matrix(&g, actions[i], mats + i * g.k * g.k)
    try:
        _from_pyint(mask, cur, words)
        stable = 0
        while not stable:
            memcpy(keep, cur, words * 8)
            for x in range(g.n):
                if _get(cur, x):
                    _dec(&g, x, xd)
                    for i in range(nact):
                        _apply(&g, mats + i * g.k * g.k, xd, yd)
                        if not _get(cur, _enc(&g, yd)):
                            keep[x >> 6] &= ~((<u64>1) << (x & 63))
                            break
            stable = 1
            for i in range(words):
                if keep[i] != cur[i]:
                    stable = 0
                    break
            memcpy(cur, keep, words * 8)
        return _to_pyint(cur, words)
    finally:
        free(mats)
        free(cur)
        free(keep)


cdef struct CoverCtx:
    int words
    int ncand
    int nbits
    u64* universe
    u64* cands
    int* cover_cnt
    int** cover_of
    int best


cdef int _dfs(CoverCtx* ctx, u64* cov, int depth, u64* scratch) except -1:
    cdef int words = ctx.words
    cdef int i, j, e, gain, maxcov, need, rem_count, pick, cnt, ln, a, b, tmp
    cdef u64* rem = scratch + depth * words
    cdef u64 v
    cdef long long x
    cdef int* lst
    cdef int* order
    cdef int* gains
    for i in range(words):
        rem[i] = ctx.universe[i] & ~cov[i]
    rem_count = _popcount(rem, words)
    if rem_count == 0:
        if depth < ctx.best:
            ctx.best = depth
        return 0
    if depth + 1 >= ctx.best:
        return 0
    maxcov = 0
    for i in range(ctx.ncand):
        gain = _count_and(ctx.cands + i * words, rem, words)
        if gain > maxcov:
            maxcov = gain
    if maxcov == 0:
        return 0
    need = (rem_count + maxcov - 1) // maxcov
    if depth + need >= ctx.best:
        return 0
    pick = -1
    cnt = 0
    for j in range(words):
        v = rem[j]
        while v:
            x = (<long long>j << 6) + _ctz(v)
            v &= v - 1
            if pick < 0 or ctx.cover_cnt[x] < cnt:
                pick = <int>x
                cnt = ctx.cover_cnt[x]
    e = pick
    lst = ctx.cover_of[e]
    ln = ctx.cover_cnt[e]
    order = <int*>malloc(ln * sizeof(int))
    gains = <int*>malloc(ln * sizeof(int))
    if order == NULL or gains == NULL:
        if order != NULL:
            free(order)
        if gains != NULL:
            free(gains)
        raise MemoryError()
    try:
        for i in range(ln):
            order[i] = lst[i]
            gains[i] = _count_and(ctx.cands + lst[i] * words, rem, words)
        for a in range(1, ln):
            b = a
            while b > 0 and (gains[b] > gains[b - 1] or
                             (gains[b] == gains[b - 1] and order[b] < order[b - 1])):
                tmp = gains[b]; gains[b] = gains[b - 1]; gains[b - 1] = tmp
                tmp = order[b]; order[b] = order[b - 1]; order[b - 1] = tmp
                b -= 1
        for i in range(ln):
            if depth + 1 >= ctx.best:
                break
            for j in range(words):
                rem[j] = cov[j] | (ctx.cands + order[i] * words)[j]
            _dfs(ctx, rem, depth + 1, scratch)
            for j in range(words):
                rem[j] = ctx.universe[j] & ~cov[j]
    finally:
        free(order)
        free(gains)
    return 0


cdef int _greedy(CoverCtx* ctx) except -1:
    cdef int words = ctx.words
    cdef u64* cov = <u64*>calloc(words, 8)
    cdef u64* rem = <u64*>calloc(words, 8)
    cdef int size = 0
    cdef int i, j, pick, gain, g2
    if cov == NULL or rem == NULL:
        if cov != NULL:
            free(cov)
        if rem != NULL:
            free(rem)
        raise MemoryError()
    try:
        while True:
            for j in range(words):
                rem[j] = ctx.universe[j] & ~cov[j]
            if _popcount(rem, words) == 0:
                return size
            pick = -1
            gain = 0
            for i in range(ctx.ncand):
                g2 = _count_and(ctx.cands + i * words, rem, words)
                if g2 > gain:
                    pick = i
                    gain = g2
            for j in range(words):
                cov[j] |= (ctx.cands + pick * words)[j]
            size += 1
    finally:
        free(cov)
        free(rem)


def min_cover(universe, candidates):
    """Exact minimum cover; (size, lexicographically-least witness)."""
    if universe == 0:
        return 0, ()
    total = 0
    for c in candidates:
        total |= c
    if universe & ~total:
        return None, ()
    cdef int ncand = len(candidates)
    cdef int nbits = max(int(universe).bit_length(), 1)
    cdef int words = _words(nbits)
    cdef CoverCtx ctx
    cdef int i, e, cnt
    cdef u64* cov0 = NULL
    cdef u64* scratch = NULL
    ctx.words = words
    ctx.ncand = ncand
    ctx.nbits = nbits
    ctx.universe = <u64*>calloc(words, 8)
    ctx.cands = <u64*>calloc(ncand * words, 8)
    ctx.cover_cnt = <int*>calloc(nbits, sizeof(int))
    ctx.cover_of = <int**>calloc(nbits, sizeof(int*))
    if (ctx.universe == NULL or ctx.cands == NULL or ctx.cover_cnt == NULL
            or ctx.cover_of == NULL):
        raise MemoryError()
    try:
        _from_pyint(universe, ctx.universe, words)
        for i in range(ncand):
            _from_pyint(candidates[i], ctx.cands + i * words, words)
        for e in range(nbits):
            if _get(ctx.universe, e):
                cnt = 0
                for i in range(ncand):
                    if _get(ctx.cands + i * words, e):
                        cnt += 1
                ctx.cover_cnt[e] = cnt
                ctx.cover_of[e] = <int*>malloc(cnt * sizeof(int))
                if ctx.cover_of[e] == NULL:
                    raise MemoryError()
                cnt = 0
                for i in range(ncand):
                    if _get(ctx.cands + i * words, e):
                        ctx.cover_of[e][cnt] = i
                        cnt += 1
        ctx.best = _greedy(&ctx)
        cov0 = <u64*>calloc(words, 8)
        scratch = <u64*>calloc((ctx.best + 2) * words, 8)
        if cov0 == NULL or scratch == NULL:
            raise MemoryError()
        _dfs(&ctx, cov0, 0, scratch)
        witness = _lex_witness(universe, candidates, ctx.best)
        return ctx.best, witness
    finally:
        if cov0 != NULL:
            free(cov0)
        if scratch != NULL:
            free(scratch)
        for e in range(nbits):
            if ctx.cover_of[e] != NULL:
                free(ctx.cover_of[e])
        free(ctx.cover_of)
        free(ctx.cover_cnt)
        free(ctx.cands)
        free(ctx.universe)


def _lex_witness(universe, candidates, k):
    # Python ints keep this simple; it is cheap next to the search above.
    n = len(candidates)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | candidates[i]
    path = []

    def dfs(cov, start):
        if len(path) == k:
            return not (universe & ~cov)
        if universe & ~(cov | suffix[start]):
            return False
        for i in range(start, n - (k - len(path)) + 1):
            if universe & ~(cov | suffix[i]):
                break
            if not (candidates[i] & universe & ~cov):
                continue
            path.append(i)
            if dfs(cov | candidates[i], i + 1):
                return True
            path.pop()
        return False

    if not dfs(0, 0):
        raise AssertionError("lex pass failed to reproduce the optimal size")
    return tuple(path)
