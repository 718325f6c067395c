"""Symbolic module descriptors and their canonical normal form.

A descriptor records a direct sum of cyclic modules: a free part, torsion
summands R/I with factored annihilators (multiplicities are extended
cardinals), copies of the fraction field, and Pruefer summands.  A torsion
"tail" flag stands for one copy of R/m for every maximal ideal of residue
above a bound, which is how families like "one cyclic summand per prime"
are written down without listing them.

Normalization splits every torsion annihilator into prime-power blocks
(the summand-wise Chinese remainder decomposition) and groups blocks by
maximal ideal in canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

from . import rings, snf
from .cardinal import ALEPH0, Cardinal, ZERO, cardinal_sum, finite
from .errors import NotApplicableError, SpecSemanticError
from .rings import FactoredIdeal, MaximalIdealId, RingHandle


@dataclass(frozen=True)
class ModuleDescriptor:
    ring: RingHandle
    free_rank: Cardinal = ZERO
    torsion: tuple = ()        # ((FactoredIdeal, multiplicity Cardinal), ...)
    field_copies: Cardinal = ZERO
    pruefer: tuple = ()        # ((MaximalIdealId, multiplicity Cardinal), ...)
    tail_above: int = 0        # > 0: plus one copy of R/m for every m with |R/m| > tail_above

    @property
    def is_zero(self) -> bool:
        return (self.free_rank == ZERO and not self.torsion
                and self.field_copies == ZERO and not self.pruefer
                and self.tail_above == 0)

    @property
    def has_divisible_part(self) -> bool:
        return self.field_copies > ZERO or bool(self.pruefer)

    def reduced_summand_count(self) -> Cardinal:
        parts = [self.free_rank] + [mult for _, mult in self.torsion]
        if self.tail_above:
            parts.append(ALEPH0)
        return cardinal_sum(parts)

    def summand_count(self) -> Cardinal:
        parts = [self.reduced_summand_count(), self.field_copies]
        parts.extend(mult for _, mult in self.pruefer)
        return cardinal_sum(parts)


def make_descriptor(ring: RingHandle,
                    free_rank: Cardinal = ZERO,
                    torsion=(),
                    field_copies: Cardinal = ZERO,
                    pruefer=(),
                    tail_above: int = 0) -> ModuleDescriptor:
    """Validate, merge, and canonically order the parts of a descriptor."""
    merged: dict[FactoredIdeal, Cardinal] = {}
    for ideal, mult in torsion:
        if not isinstance(ideal, FactoredIdeal):
            ideal = rings.factor_ideal(ring, ideal)
        if ideal.zero or ideal.unit:
            raise SpecSemanticError(
                "torsion annihilators must be proper nonzero ideals")
        if mult == ZERO:
            continue
        merged[ideal] = cardinal_sum([merged.get(ideal, ZERO), mult])
    torsion_t = tuple(sorted(merged.items(), key=lambda kv: _ideal_key(kv[0])))

    if field_copies > ZERO or pruefer:
        if not rings.is_pid_kind(ring):
            raise SpecSemanticError(
                f"fraction-field and Pruefer summands need a PID kind, not {ring}")
    if rings.is_field(ring):
        if pruefer:
            raise SpecSemanticError("a field has no Pruefer modules")
        if torsion_t:
            raise SpecSemanticError("a field has no torsion modules")
        # F = R over a field: fold fraction-field copies into the free part
        free_rank = cardinal_sum([free_rank, field_copies])
        field_copies = ZERO

    pr_merged: dict[MaximalIdealId, Cardinal] = {}
    for m, mult in pruefer:
        rings.residue_cardinality(ring, m)  # membership check
        if mult == ZERO:
            continue
        pr_merged[m] = cardinal_sum([pr_merged.get(m, ZERO), mult])
    pruefer_t = tuple(sorted(pr_merged.items(), key=lambda kv: kv[0].sort_key()))

    if tail_above:
        if not rings.has_enumerable_primes(ring):
            raise SpecSemanticError(f"{ring} cannot carry a prime-family tail")
        if not rings.has_infinite_spectrum(ring):
            raise SpecSemanticError("prime-family tail needs an infinite spectrum")
        if free_rank > ZERO or field_copies > ZERO or pruefer_t:
            raise SpecSemanticError(
                "a prime-family tail is only supported on pure-torsion descriptors")
    return ModuleDescriptor(ring, free_rank, torsion_t, field_copies,
                            pruefer_t, tail_above)


def _ideal_key(ideal: FactoredIdeal):
    return tuple((m.sort_key(), e) for m, e in ideal.factors)


@dataclass(frozen=True)
class NormalizedDescriptor:
    """Torsion split into prime-power blocks grouped by maximal ideal."""

    ring: RingHandle
    free_rank: Cardinal
    blocks: tuple              # ((MaximalIdealId, ((exp, mult), ... exp desc)), ...)
    field_copies: Cardinal
    pruefer: tuple
    tail_above: int = 0

    def torsion_entries(self):
        """Flatten back to ((single-prime FactoredIdeal, mult), ...) in block order."""
        out = []
        for m, exps in self.blocks:
            for e, mult in exps:
                out.append((FactoredIdeal.from_factors({m: e}), mult))
        return tuple(out)

    def to_descriptor(self) -> ModuleDescriptor:
        return make_descriptor(self.ring, self.free_rank, self.torsion_entries(),
                               self.field_copies, self.pruefer, self.tail_above)


Descriptor = Union[ModuleDescriptor, NormalizedDescriptor]


def normalize(d: Descriptor) -> NormalizedDescriptor:
    """Chinese-remainder split of each torsion summand; idempotent."""
    if isinstance(d, NormalizedDescriptor):
        return d
    by_m: dict[MaximalIdealId, dict[int, Cardinal]] = {}
    for ideal, mult in d.torsion:
        for m, e in ideal.factors:
            exps = by_m.setdefault(m, {})
            exps[e] = cardinal_sum([exps.get(e, ZERO), mult])
    blocks = []
    for m in sorted(by_m, key=lambda m: m.sort_key()):
        exps = tuple(sorted(by_m[m].items(), key=lambda kv: -kv[0]))
        blocks.append((m, exps))
    return NormalizedDescriptor(d.ring, d.free_rank, tuple(blocks),
                                d.field_copies, d.pruefer, d.tail_above)


@dataclass(frozen=True)
class NCSet:
    """Maximal ideals where at least two summands localize nonzero."""

    all_maximal: bool
    ideals: tuple = ()

    @property
    def is_empty(self) -> bool:
        return not self.all_maximal and not self.ideals

    def __str__(self) -> str:
        if self.all_maximal:
            return "all"
        return "{" + ", ".join(str(m) for m in self.ideals) + "}"


def nc_set(d: Descriptor) -> NCSet:
    """Ideals at which two or more reduced summands localize nonzero.

    Free summands localize nonzero everywhere, a torsion summand R/I exactly
    at the primes dividing I.  Divisible summands are excluded: the covering
    thresholds for non-reduced modules depend only on the reduced part.
    """
    d = _as_plain(d)
    if rings.is_field(d.ring):
        raise NotApplicableError("fields have no maximal ideals here")
    if d.free_rank >= finite(2):
        return NCSet(all_maximal=True)
    counts: dict[MaximalIdealId, int] = {}
    for ideal, mult in d.torsion:
        per_copy = 2 if mult >= finite(2) else 1
        for m, _ in ideal.factors:
            counts[m] = counts.get(m, 0) + per_copy
    free_bonus = 1 if d.free_rank == finite(1) else 0
    members = set()
    for m, c in counts.items():
        tail_bonus = 1 if (d.tail_above and m.residue_card > finite(d.tail_above)) else 0
        if c + free_bonus + tail_bonus >= 2:
            members.add(m)
    return NCSet(all_maximal=False,
                 ideals=tuple(sorted(members, key=lambda m: m.sort_key())))


def q_value(d: Descriptor) -> Optional[Cardinal]:
    """min |R/m| over the NC set; None when the NC set is empty."""
    nc = nc_set(d)
    if nc.is_empty:
        return None
    d = _as_plain(d)
    if nc.all_maximal:
        return rings.min_residue_cardinality(d.ring)
    return min(rings.residue_cardinality(d.ring, m) for m in nc.ideals)


def q_witness(d: Descriptor) -> tuple[Optional[Cardinal], Optional[MaximalIdealId]]:
    """(q, canonically least maximal ideal attaining it); ideal may be None."""
    nc = nc_set(d)
    if nc.is_empty:
        return None, None
    d = _as_plain(d)
    if nc.all_maximal:
        return rings.min_residue_cardinality(d.ring), rings.least_maximal_ideal(d.ring)
    q = q_value(d)
    best = [m for m in nc.ideals
            if rings.residue_cardinality(d.ring, m) == q]
    return q, min(best, key=lambda m: m.sort_key())


def reduced_divisible_split(d: Descriptor) -> tuple[ModuleDescriptor, ModuleDescriptor]:
    """(reduced part: free + torsion, divisible part: field copies + Pruefer)."""
    d = _as_plain(d)
    if not rings.is_pid_kind(d.ring):
        raise NotApplicableError(f"no divisible/reduced split over {d.ring}")
    red = replace(d, field_copies=ZERO, pruefer=())
    div = replace(d, free_rank=ZERO, torsion=(), tail_above=0)
    return red, div


def _as_plain(d: Descriptor) -> ModuleDescriptor:
    return d.to_descriptor() if isinstance(d, NormalizedDescriptor) else d


def smith_normal_form(ring: RingHandle, A):
    """Re-exported from snf for a one-stop module API."""
    return snf.smith_normal_form(ring, A)


def descriptor_from_presentation(ring: RingHandle, A, ncols_free: int = 0) -> ModuleDescriptor:
    """Descriptor of coker(A) + R^ncols_free.

    Rows of A index generators, columns are relations; unit invariant
    factors vanish, zero ones contribute free rank.
    """
    if ncols_free < 0:
        raise ValueError("ncols_free must be nonnegative")
    m = len(A)
    n = len(A[0]) if m else 0
    diag, _, _ = snf.smith_normal_form(ring, A) if m and n else ([], None, None)
    free = ncols_free + max(m - n, 0) if m else ncols_free
    torsion = []
    for dd in diag:
        ideal = _diag_ideal(ring, dd)
        if ideal is None:
            free += 1
        elif ideal.unit:
            continue
        else:
            torsion.append((ideal, finite(1)))
    return make_descriptor(ring, free_rank=finite(free), torsion=torsion)


def _diag_ideal(ring: RingHandle, entry) -> Optional[FactoredIdeal]:
    zero = entry == 0 if ring.kind == rings.INTEGERS else entry == ()
    if zero:
        return None
    return rings.factor_ideal(ring, entry)
