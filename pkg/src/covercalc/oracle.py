"""Brute-force ground truth on materialized finite modules.

A finite module is a tuple of cyclic orders (elements are coordinate
tuples) together with integer matrices generating the ring action
(multiplication by i over Z[i], by t over F_p[t]; none over Z).  Subsets
are int bitmasks over the element indexing, and the heavy work (closures,
exact minimum covers) runs in the selected search kernel.

The exact searches here are deliberately independent of the closed-form
covering machinery: minimum submodule covers restrict to maximal
submodules (every proper submodule of a finite module extends to a
maximal one), and punctured coset covers restrict to inclusion-maximal
puncture-avoiding cosets (every avoiding coset extends to a maximal one).
Both restrictions are cross-validated against unrestricted searches in
the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence

from . import _kernels as kernels
from . import fppoly, modules, residues, rings, snf
from .covering import CoverWitness, LINES
from .errors import (NotMaterializableError, ShapeMismatchError,
                     TooLargeError, TrivialGroupError, UnsupportedRingError)
from .modules import Descriptor, NormalizedDescriptor
from .rings import FactoredIdeal, RingHandle

SIGMA_SIZE_BOUND = 4096
ALL_SUBGROUPS_BOUND = 64
COSET_SIZE_BOUND = 32
HARD_SIZE_CAP = 1 << 16   # both kernels share these representation limits
HARD_COORD_CAP = 16


@dataclass(frozen=True)
class SummandInfo:
    start: int
    ncoords: int
    annihilator: FactoredIdeal
    basis: tuple          # ring element represented by each coordinate
    transform: tuple = () # Z[i]: row-major 2x2 basis change (a+bi coeffs -> coords)


@dataclass(frozen=True)
class FiniteModule:
    orders: tuple
    actions: tuple = ()
    ring: RingHandle = rings.integers()
    summands: tuple = ()

    def __post_init__(self):
        for mat in self.actions:
            for i, di in enumerate(self.orders):
                for j, dj in enumerate(self.orders):
                    if (dj * mat[i][j]) % di:
                        raise ValueError(
                            f"action entry [{i}][{j}] is not well defined")

    @property
    def size(self) -> int:
        return prod(self.orders) if self.orders else 1

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def encode(self, digits) -> int:
        return kernels.encode(self.orders, digits)

    def decode(self, x: int) -> tuple:
        return kernels.decode(self.orders, x)

    def span(self, seeds) -> int:
        return kernels.closure(self.orders, self.actions, list(seeds))

    def encode_ring_element(self, summand_idx: int, elem) -> int:
        """Element index of a ring element inside one cyclic summand."""
        info = self.summands[summand_idx]
        digits = [0] * len(self.orders)
        coords = _ring_element_coords(self.ring, info, elem)
        for c, v in enumerate(coords):
            digits[info.start + c] = v % self.orders[info.start + c]
        return self.encode(digits)


def _ring_element_coords(ring: RingHandle, info: SummandInfo, elem) -> list:
    if ring.kind == rings.INTEGERS:
        return [elem]
    if ring.kind == rings.POLY:
        g = rings.ideal_generator_element(ring, info.annihilator)
        r = fppoly.mod(fppoly.trim(elem, ring.p), g, ring.p)
        return [r[c] if c < len(r) else 0 for c in range(info.ncoords)]
    if ring.kind == rings.GAUSSIAN:
        a, b = elem
        # transform rows are the kept rows of the lattice basis change
        return [r0 * a + r1 * b for (r0, r1) in info.transform]
    raise UnsupportedRingError(f"{ring} is not materializable")


def materialize(d: Descriptor, max_size: int = SIGMA_SIZE_BOUND) -> FiniteModule:
    """Realize a finite torsion descriptor as orders + action matrices.

    Summands materialize as listed (composite annihilators give a single
    cyclic block); normalized descriptors therefore yield one block per
    prime power.
    """
    plain = modules._as_plain(d)
    ring = plain.ring
    if not rings.is_concrete(ring):
        raise UnsupportedRingError(f"cannot materialize modules over {ring}")
    if plain.has_divisible_part or plain.free_rank > modules.ZERO or plain.tail_above:
        raise NotMaterializableError("only finite torsion descriptors materialize")
    entries = (d.torsion_entries() if isinstance(d, NormalizedDescriptor)
               else plain.torsion)
    flat: list[FactoredIdeal] = []
    for ideal, mult in entries:
        if not mult.is_finite:
            raise NotMaterializableError("infinite multiplicity")
        flat.extend([ideal] * mult.finite_value)

    total = 1
    for ideal in flat:
        total *= ideal.quotient_size().finite_value
        if total > min(max_size, HARD_SIZE_CAP):
            raise TooLargeError(f"materialized size exceeds {max_size}")

    orders: list[int] = []
    blocks: list = []   # per summand: (action block or None, basis, transform)
    infos: list[SummandInfo] = []
    for ideal in flat:
        start = len(orders)
        o, act, basis, transform = _materialize_summand(ring, ideal)
        orders.extend(o)
        blocks.append(act)
        infos.append(SummandInfo(start, len(o), ideal, tuple(basis),
                                 transform=transform))
    if len(orders) > HARD_COORD_CAP:
        raise TooLargeError(f"more than {HARD_COORD_CAP} cyclic coordinates")
    actions = ()
    if ring.kind in (rings.GAUSSIAN, rings.POLY) and orders:
        k = len(orders)
        mat = [[0] * k for _ in range(k)]
        pos = 0
        for act in blocks:
            b = len(act)
            for i in range(b):
                for j in range(b):
                    mat[pos + i][pos + j] = act[i][j] % orders[pos + i]
            pos += b
        actions = (tuple(tuple(row) for row in mat),)
    mod = FiniteModule(tuple(orders), actions, ring, tuple(infos))
    _check_annihilators(mod)
    return mod


def _materialize_summand(ring: RingHandle, ideal: FactoredIdeal):
    if ring.kind == rings.INTEGERS:
        n = rings.ideal_generator_element(ring, ideal)
        return [n], None, [1], ()
    if ring.kind == rings.POLY:
        g = rings.ideal_generator_element(ring, ideal)
        dg = fppoly.deg(g)
        comp = [[0] * dg for _ in range(dg)]
        for i in range(1, dg):
            comp[i][i - 1] = 1
        for i in range(dg):
            comp[i][dg - 1] = (-g[i]) % ring.p
        basis = [tuple([0] * c + [1]) for c in range(dg)]
        return [ring.p] * dg, comp, basis, ()
    if ring.kind == rings.GAUSSIAN:
        return _materialize_gauss(ideal)
    raise UnsupportedRingError(f"{ring} is not materializable")


def _materialize_gauss(ideal: FactoredIdeal):
    a, b = rings.ideal_generator_element(rings.gaussian_integers(), ideal)
    lattice = [[a, -b], [b, a]]
    diag, U, _ = snf.smith_normal_form(rings.integers(), lattice)
    det = U[0][0] * U[1][1] - U[0][1] * U[1][0]
    Uinv = [[U[1][1] // det, -U[0][1] // det],
            [-U[1][0] // det, U[0][0] // det]]
    T = [[0, -1], [1, 0]]  # multiplication by i on (1, i) coordinates
    UT = [[sum(U[i][l] * T[l][j] for l in range(2)) for j in range(2)]
          for i in range(2)]
    A = [[sum(UT[i][l] * Uinv[l][j] for l in range(2)) for j in range(2)]
         for i in range(2)]
    kept = [c for c in range(2) if diag[c] != 1]
    orders = [diag[c] for c in kept]
    act = [[A[i][j] % orders[ki] for kj, j in enumerate(kept)]
           for ki, i in enumerate(kept)]
    basis = [(Uinv[0][c], Uinv[1][c]) for c in kept]
    transform = tuple(tuple(U[i][j] for j in range(2)) for i in kept)
    return orders, act, basis, transform


def _check_annihilators(mod: FiniteModule) -> None:
    """Re-derive each summand's annihilator action and require it to vanish."""
    for info in mod.summands:
        gen = rings.ideal_generator_element(mod.ring, info.annihilator)
        for c in range(info.ncoords):
            x = [0] * len(mod.orders)
            x[info.start + c] = 1
            y = _scalar_action(mod, gen, mod.encode(x))
            if y != 0:
                raise AssertionError(
                    f"annihilator {info.annihilator} does not kill summand")


def _scalar_action(mod: FiniteModule, scalar, x: int) -> int:
    """Apply multiplication by a ring element to one module element."""
    if mod.ring.kind == rings.INTEGERS:
        digits = mod.decode(x)
        return mod.encode([scalar * v for v in digits])
    if mod.ring.kind == rings.GAUSSIAN:
        a, b = scalar
        out = _int_scale(mod, a, x)
        ix = kernels.apply_matrix(mod.orders, mod.actions[0], x)
        return _add(mod, out, _int_scale(mod, b, ix))
    if mod.ring.kind == rings.POLY:
        out = 0
        cur = x
        for coeff in scalar:
            out = _add(mod, out, _int_scale(mod, coeff, cur))
            cur = kernels.apply_matrix(mod.orders, mod.actions[0], cur)
        return out
    raise UnsupportedRingError(str(mod.ring))


def _int_scale(mod: FiniteModule, n: int, x: int) -> int:
    digits = mod.decode(x)
    return mod.encode([n * v for v in digits])


def _add(mod: FiniteModule, x: int, y: int) -> int:
    xd, yd = mod.decode(x), mod.decode(y)
    return mod.encode([a + b for a, b in zip(xd, yd)])


@dataclass(frozen=True)
class SubmoduleSet:
    mask: int
    generators: tuple

    def size(self) -> int:
        return self.mask.bit_count()


def _wrap(mod: FiniteModule, mask: int) -> SubmoduleSet:
    gens: list[int] = []
    span = 1
    x = 0
    m = mask
    while m:
        lsb = m & -m
        x = lsb.bit_length() - 1
        if not (span >> x) & 1:
            gens.append(x)
            span = mod.span(gens)
        m &= ~span
    return SubmoduleSet(mask, tuple(gens))


def maximal_submodules(mod: FiniteModule) -> list[int]:
    """Masks of the maximal proper submodules.

    Candidates are invariant cores of index-p subgroups: every maximal
    submodule K satisfies K = core(H) for any index-p subgroup H between
    K and M, so taking cores of all index-p subgroups and keeping the
    inclusion-maximal ones is exhaustive.  (For residue fields larger
    than F_p the maximal submodules themselves have non-prime index.)
    """
    n = mod.size
    if n == 1:
        return []
    cores: set[int] = set()
    for p in _prime_factors(n):
        coords = [i for i, d in enumerate(mod.orders) if d % p == 0]
        digit_cache = _mod_p_digits(mod, coords, p)
        for a in _projective_vectors(p, len(coords)):
            kmask = 0
            for x in range(n):
                if sum(ai * di for ai, di in zip(a, digit_cache[x])) % p == 0:
                    kmask |= 1 << x
            cores.add(kernels.invariant_core(mod.orders, mod.actions, kmask))
    ordered = sorted(cores)
    out = []
    for c in ordered:
        if not any(c != o and (c | o) == o for o in ordered):
            out.append(c)
    return out


def _mod_p_digits(mod: FiniteModule, coords, p: int):
    cache = []
    for x in range(mod.size):
        digits = mod.decode(x)
        cache.append(tuple(digits[c] % p for c in coords))
    return cache


def _projective_vectors(p: int, r: int):
    """Representatives of (F_p^r - 0) / scalars: first nonzero entry is 1."""
    for lead in range(r):
        for tail in itertools.product(range(p), repeat=r - lead - 1):
            yield (0,) * lead + (1,) + tail


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def all_subgroups(orders: Sequence[int]) -> list[int]:
    """All subgroups of the abelian group with the given cyclic orders.

    Enumerates canonical upper-triangular generator matrices H with
    h_jj | d_j and reduced off-diagonals, pruned by the requirement that
    the spanned lattice contain diag(d); masks are deduplicated.
    """
    k = len(orders)
    if k == 0:
        return [1]
    found: set[int] = set()
    col_divisors = [_divisors(d) for d in orders]

    def feasible_prefix(cols, j) -> bool:
        # solve H x = d_j e_j over Z using columns 0..j (upper triangular)
        x = [0] * (j + 1)
        target = [0] * (j + 1)
        target[j] = orders[j]
        for i in range(j, -1, -1):
            acc = target[i] - sum(cols[l][i] * x[l] for l in range(i + 1, j + 1))
            if acc % cols[i][i]:
                return False
            x[i] = acc // cols[i][i]
        return True

    def extend(cols):
        j = len(cols)
        if j == k:
            gens = [kernels.encode(orders, col) for col in cols]
            found.add(kernels.closure(orders, (), gens))
            return
        for hjj in col_divisors[j]:
            for off in itertools.product(*(range(cols[i][i]) for i in range(j))):
                col = [off[i] for i in range(j)] + [hjj] + [0] * (k - j - 1)
                cols.append(col)
                if feasible_prefix(cols, j):
                    extend(cols)
                cols.pop()

    extend([])
    return sorted(found)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def enumerate_submodules(mod: FiniteModule, maximal_only: bool = True,
                         max_size: Optional[int] = None) -> list[SubmoduleSet]:
    """Action-invariant subgroups: all of them, or the maximal ones only."""
    bound = max_size or (SIGMA_SIZE_BOUND if maximal_only else ALL_SUBGROUPS_BOUND)
    if mod.size > bound:
        raise TooLargeError(f"module size {mod.size} exceeds bound {bound}")
    if maximal_only:
        masks = maximal_submodules(mod)
    else:
        masks = [m for m in all_subgroups(mod.orders)
                 if kernels.invariant_core(mod.orders, mod.actions, m) == m]
    return [_wrap(mod, m) for m in masks]


def is_cyclic(mod: FiniteModule) -> bool:
    """Cyclic iff some element lies in no maximal submodule."""
    union = 0
    for m in maximal_submodules(mod):
        union |= m
    return union != mod.full_mask


def min_submodule_cover(mod: FiniteModule, maximal_only: bool = True,
                        max_size: int = SIGMA_SIZE_BOUND):
    """Exact minimum number of proper submodules covering the module.

    Returns (size, [SubmoduleSet...]), or (None, []) when no cover exists
    (cyclic modules, including the zero module).
    """
    if mod.size > max_size:
        raise TooLargeError(f"module size {mod.size} exceeds bound {max_size}")
    if mod.size == 1:
        return None, []
    if maximal_only:
        candidates = maximal_submodules(mod)
    else:
        candidates = [s.mask for s in enumerate_submodules(mod, maximal_only=False,
                                                           max_size=max_size)
                      if s.mask != mod.full_mask]
    union = 0
    for c in candidates:
        union |= c
    if union != mod.full_mask:
        return None, []   # some generator escapes every proper submodule
    size, idxs = kernels.min_cover(mod.full_mask, candidates)
    return size, [_wrap(mod, candidates[i]) for i in idxs]


def punctured_coset_candidates(mod: FiniteModule, puncture: int,
                               inclusion_maximal: bool = True):
    """Puncture-avoiding cosets of proper submodules as (coset, submodule, rep)."""
    subs = [s.mask for s in enumerate_submodules(mod, maximal_only=False,
                                                 max_size=mod.size)
            if s.mask != mod.full_mask]
    cands = []
    for smask in subs:
        assigned = 0
        for x in range(mod.size):
            if (assigned >> x) & 1:
                continue
            coset = kernels.translate(mod.orders, smask, x)
            assigned |= coset
            if not (coset >> puncture) & 1:
                cands.append((coset, smask, x))
    if inclusion_maximal:
        cands.sort(key=lambda t: (-t[0].bit_count(), t[0], t[1]))
        kept = []
        for c in cands:
            if not any((c[0] | k[0]) == k[0] for k in kept):
                kept.append(c)
        cands = kept
    cands.sort(key=lambda t: (-t[0].bit_count(), t[0], t[1]))
    return cands


def min_coset_cover_punctured(mod: FiniteModule, puncture: int,
                              max_size: int = COSET_SIZE_BOUND,
                              inclusion_maximal: bool = True):
    """Exact minimum number of proper-submodule cosets covering M - {puncture}."""
    if mod.size > max_size:
        raise TooLargeError(f"module size {mod.size} exceeds bound {max_size}")
    if mod.size == 1:
        raise TrivialGroupError("the trivial module has no punctured cover")
    cands = punctured_coset_candidates(mod, puncture, inclusion_maximal)
    universe = mod.full_mask & ~(1 << puncture)
    size, idxs = kernels.min_cover(universe, [c[0] for c in cands])
    witness = [(cands[i][0], _wrap(mod, cands[i][1]), cands[i][2]) for i in idxs]
    return size, witness


def verify_cover_witness(mod: FiniteModule, witness) -> bool:
    """Elementwise check of a lines cover or a punctured coset cover.

    Lines: every part must be a proper submodule and the union all of M.
    Coset witnesses: no coset contains the puncture and the union is
    exactly M minus the puncture.
    """
    from .cosets import CosetCoverWitness, check_coset_cover_on
    if isinstance(witness, CosetCoverWitness):
        return check_coset_cover_on(mod, witness)
    if not isinstance(witness, CoverWitness) or witness.kind != LINES:
        raise ShapeMismatchError("expected a lines cover witness")
    if not witness.line_points:
        raise ShapeMismatchError("symbolic witness cannot be materialized")
    if not mod.summands:
        raise ShapeMismatchError("module carries no summand data")
    i, j = witness.summand_pair
    if max(i, j) >= len(mod.summands):
        raise ShapeMismatchError("witness indexes a missing summand")
    F = residues.residue_field(mod.ring, witness.ideal)
    red_i = _reduction_vector(mod, mod.summands[i], F)
    red_j = _reduction_vector(mod, mod.summands[j], F)
    if len(witness.line_points) != F.q + 1:
        return False
    union = 0
    for lam, mu in witness.line_points:
        line_mask = 0
        for x in range(mod.size):
            digits = mod.decode(x)
            xi = _reduce_coords(F, digits, mod.summands[i], red_i)
            xj = _reduce_coords(F, digits, mod.summands[j], red_j)
            if F.mul(mu, xi) == F.mul(lam, xj):
                line_mask |= 1 << x
        if line_mask == mod.full_mask:
            return False
        if not _is_submodule(mod, line_mask):
            return False
        union |= line_mask
    return union == mod.full_mask


def _reduction_vector(mod: FiniteModule, info: SummandInfo, F) -> list[int]:
    out = []
    for elem in info.basis:
        if mod.ring.kind == rings.INTEGERS:
            out.append(F.reduce_int(elem))
        elif mod.ring.kind == rings.POLY:
            out.append(F.reduce_poly(elem))
        else:
            out.append(F.reduce_gauss(elem))
    return out


def _reduce_coords(F, digits, info: SummandInfo, red) -> int:
    acc = 0
    for c in range(info.ncoords):
        acc = F.add(acc, F.mul(digits[info.start + c] % F.p, red[c]))
    return acc


def _is_submodule(mod: FiniteModule, mask: int) -> bool:
    if not (mask & 1):
        return False
    gens: list[int] = []
    span = 1
    m = mask
    while m & ~span:
        x = (m & ~span)
        x = (x & -x).bit_length() - 1
        gens.append(x)
        span = mod.span(gens)
        if span & ~mask:
            return False
    return span == mask
