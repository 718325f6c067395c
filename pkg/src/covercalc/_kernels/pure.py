"""Pure-Python search kernels over int bitmasks.

Elements of a finite abelian group with cyclic orders (d_0, ..., d_{k-1})
are indexed in mixed radix (digit 0 least significant); subsets are Python
ints with bit x set for element index x.  The compiled backend implements
the same functions with the same tie-breaking, so results are identical.
"""

from __future__ import annotations

BACKEND = "pure"


def encode(orders, digits) -> int:
    x = 0
    for d, o in zip(reversed(digits), reversed(orders)):
        x = x * o + (d % o)
    return x


def decode(orders, x: int) -> tuple:
    out = []
    for o in orders:
        x, r = divmod(x, o)
        out.append(r)
    return tuple(out)


def _digits(orders, x: int):
    out = []
    for o in orders:
        x, r = divmod(x, o)
        out.append(r)
    return out


def translate(orders, mask: int, g: int) -> int:
    """{x + g : x in mask}."""
    gd = _digits(orders, g)
    out = 0
    m = mask
    while m:
        lsb = m & -m
        x = lsb.bit_length() - 1
        xd = _digits(orders, x)
        out |= 1 << encode(orders, [a + b for a, b in zip(xd, gd)])
        m ^= lsb
    return out


def apply_matrix(orders, mat, x: int) -> int:
    xd = _digits(orders, x)
    k = len(orders)
    return encode(orders, [sum(mat[i][j] * xd[j] for j in range(k)) for i in range(k)])


def closure(orders, actions, seeds) -> int:
    """Subgroup generated by the seed indices, closed under the action matrices."""
    members = 1  # the zero element
    pending = list(seeds)
    while pending:
        g = pending.pop()
        if (members >> g) & 1:
            continue
        t = translate(orders, members, g)
        while t & ~members:
            members |= t
            t = translate(orders, t, g)
        for mat in actions:
            pending.append(apply_matrix(orders, mat, g))
    return members


def invariant_core(orders, actions, mask: int) -> int:
    """Largest subset of a subgroup mask closed under every action matrix."""
    if not actions:
        return mask
    while True:
        keep = mask
        m = mask
        while m:
            lsb = m & -m
            x = lsb.bit_length() - 1
            for mat in actions:
                if not (mask >> apply_matrix(orders, mat, x)) & 1:
                    keep &= ~lsb
                    break
            m ^= lsb
        if keep == mask:
            return mask
        mask = keep


def _bits(mask: int):
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def min_cover(universe: int, candidates) -> tuple:
    """Exact minimum cover of the universe bits by candidate masks.

    Returns (size, witness) where witness is the lexicographically least
    increasing index tuple of that size, or (None, ()) when infeasible.
    """
    if universe == 0:
        return 0, ()
    total = 0
    for c in candidates:
        total |= c
    if universe & ~total:
        return None, ()

    cover_of = {}
    for e in _bits(universe):
        cover_of[e] = [i for i, c in enumerate(candidates) if (c >> e) & 1]

    best = _greedy_size(universe, candidates)
    best = _bnb(universe, candidates, cover_of, best)
    witness = _lex_witness(universe, candidates, best)
    return best, witness


def _greedy_size(universe: int, candidates) -> int:
    cov = 0
    size = 0
    while universe & ~cov:
        rem = universe & ~cov
        pick, gain = -1, 0
        for i, c in enumerate(candidates):
            g = (c & rem).bit_count()
            if g > gain:
                pick, gain = i, g
        cov |= candidates[pick]
        size += 1
    return size


def _bnb(universe: int, candidates, cover_of, upper: int) -> int:
    best = upper

    def dfs(cov: int, depth: int):
        nonlocal best
        rem = universe & ~cov
        if not rem:
            if depth < best:
                best = depth
            return
        if depth + 1 >= best:
            return
        maxcov = 0
        for c in candidates:
            g = (c & rem).bit_count()
            if g > maxcov:
                maxcov = g
        if maxcov == 0:
            return
        need = -(-rem.bit_count() // maxcov)
        if depth + need >= best:
            return
        e = min(_bits(rem), key=lambda b: (len(cover_of[b]), b))
        order = sorted(cover_of[e],
                       key=lambda i: (-(candidates[i] & rem).bit_count(), i))
        for i in order:
            dfs(cov | candidates[i], depth + 1)
            if depth + 1 >= best:
                break

    dfs(0, 0)
    return best


def _lex_witness(universe: int, candidates, k: int) -> tuple:
    n = len(candidates)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | candidates[i]
    path = []

    def dfs(cov: int, start: int) -> bool:
        if len(path) == k:
            return not (universe & ~cov)
        if universe & ~(cov | suffix[start]):
            return False
        for i in range(start, n - (k - len(path)) + 1):
            if universe & ~(cov | suffix[i]):
                break
            # in a minimum cover every member contributes new elements
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
