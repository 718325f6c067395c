"""Minimum coset covers of a punctured module.

For a cyclic torsion module R/I over a finite-residue Dedekind kind, the
least number of proper-submodule cosets covering R/I minus one point is
the sum over the prime-power factors m^n of I of n*(|R/m| - 1): each
graded layer m^(j-1)/m^j contributes its nonzero classes.  The same sum
is returned for direct sums of prime-power blocks, flagged as conjectural
except where it is a theorem (cyclic inputs, and all modules over Z).

The explicit cover peels prime-power factors in canonical order: layer j
of the factor m^e contributes the cosets g*r*pi^(j-1) + (g*pi^j) for the
nonzero residues r, where g is the product of the factors already peeled;
the whole cover is finally translated by the puncture.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fppoly, gaussian, modules, oracle, rings
from .cardinal import finite
from .errors import (InfiniteResidueError, NotMaterializableError,
                     TrivialGroupError, ZeroIdealError)
from .rings import FactoredIdeal, MaximalIdealId, RingHandle


def phi_prime(ring: RingHandle, m: MaximalIdealId, n: int) -> int:
    """Contribution of one prime-power factor m^n: sum of layer sizes minus n."""
    if n < 1:
        raise ValueError("exponent must be positive")
    total = 0
    for j in range(1, n + 1):
        layer = rings.layer_cardinality(ring, m, j)
        if not layer.is_finite:
            raise InfiniteResidueError(f"residue of {m} is infinite")
        total += layer.finite_value - 1
    return total


def phi_cyclic(ring: RingHandle, ideal) -> int:
    """Minimum punctured coset cover size of R/I, I factored or a literal."""
    if not isinstance(ideal, FactoredIdeal):
        ideal = rings.factor_ideal(ring, ideal)
    if ideal.zero:
        raise ZeroIdealError("R/I needs a nonzero ideal")
    if ideal.unit:
        raise TrivialGroupError("R/R is the trivial module")
    return sum(phi_prime(ring, m, e) for m, e in ideal.factors)


def phi_finite_abelian(orders) -> int:
    """Szegedy's count for a finite abelian group given by cyclic orders."""
    orders = list(orders)
    if not orders or any(o < 1 for o in orders):
        raise ValueError("orders must be positive integers")
    total = 0
    seen_nontrivial = False
    valuations: dict[int, int] = {}
    for o in orders:
        if o > 1:
            seen_nontrivial = True
        d = 2
        while d * d <= o:
            while o % d == 0:
                valuations[d] = valuations.get(d, 0) + 1
                o //= d
            d += 1 if d == 2 else 2
        if o > 1:
            valuations[o] = valuations.get(o, 0) + 1
    if not seen_nontrivial:
        raise TrivialGroupError("the trivial group has no punctured cover")
    return sum((p - 1) * v for p, v in valuations.items())


def phi_vector_space(q: int, n: int) -> int:
    """Affine-hyperplane count n*(q-1) for F_q^n minus the origin."""
    if n < 1:
        raise ValueError("dimension must be positive")
    if q < 2 or not _is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    return n * (q - 1)


def _is_prime_power(q: int) -> bool:
    for p in range(2, q + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return False


def phi_conjecture_value(ring: RingHandle, blocks) -> tuple[int, bool]:
    """Predicted punctured-cover size for a sum of prime-power blocks.

    Returns (value, conjectural).  The value is a theorem for cyclic inputs
    (pairwise distinct primes) and for every Z-module; other direct sums
    carry the conjectural flag.
    """
    blocks = list(blocks)
    if not blocks:
        raise TrivialGroupError("no blocks")
    value = sum(phi_prime(ring, m, n) for m, n in blocks)
    primes = [m for m, _ in blocks]
    cyclic = len(set(primes)) == len(primes)
    conjectural = not (cyclic or ring.kind == rings.INTEGERS)
    return value, conjectural


@dataclass(frozen=True)
class CosetCoverWitness:
    ring: RingHandle
    modulus: FactoredIdeal
    modulus_element: object
    puncture: object
    cosets: tuple            # ((submodule generator element, representative), ...)

    def count(self) -> int:
        return len(self.cosets)

    def target_str(self) -> str:
        return f"{self.ring}: R/({rings.element_str(self.ring, self.modulus_element)})"


def build_coset_cover(ring: RingHandle, ideal, puncture) -> CosetCoverWitness:
    """Explicit minimal coset cover of (R/I) minus a puncture.

    Concrete rings only.  Emits exactly phi_cyclic(ring, I) cosets; layer
    representatives within a block are r*pi^(j-1) over the canonical
    nonzero residues r, lifted by the product of previously peeled blocks,
    then the whole list is translated by the puncture.
    """
    if not rings.is_concrete(ring):
        raise NotMaterializableError(f"cannot build concrete cosets over {ring}")
    if not isinstance(ideal, FactoredIdeal):
        ideal = rings.factor_ideal(ring, ideal)
    if ideal.zero:
        raise ZeroIdealError("R/I needs a nonzero ideal")
    if ideal.unit:
        raise TrivialGroupError("R/R is the trivial module")
    h = rings.ideal_generator_element(ring, ideal)
    puncture = _reduce_mod(ring, puncture, h)
    cosets = []
    g = rings.ring_one(ring)
    for m, e in ideal.factors:
        pi = _prime_element(ring, m)
        for j in range(1, e + 1):
            sub_gen = rings.ring_mul(ring, g, rings.ring_pow(ring, pi, j))
            sub_gen = _reduce_mod(ring, sub_gen, h)
            layer = rings.ring_mul(ring, g, rings.ring_pow(ring, pi, j - 1))
            for r in _nonzero_residues(ring, m):
                rep = rings.ring_mul(ring, r, layer)
                rep = _add_mod(ring, rep, puncture, h)
                rep = _canonical_rep(ring, rep, sub_gen, h)
                cosets.append((sub_gen, rep))
        g = rings.ring_mul(ring, g, rings.ring_pow(ring, pi, e))
    expected = phi_cyclic(ring, ideal)
    if len(cosets) != expected:
        raise AssertionError(f"built {len(cosets)} cosets, expected {expected}")
    return CosetCoverWitness(ring, ideal, h, puncture, tuple(cosets))


def _prime_element(ring: RingHandle, m: MaximalIdealId):
    return m.data


def _nonzero_residues(ring: RingHandle, m: MaximalIdealId):
    """Canonical nonzero residue representatives of R/m, as ring elements."""
    if ring.kind == rings.INTEGERS:
        return [r for r in range(1, m.data)]
    if ring.kind == rings.POLY:
        out = []
        for v in range(1, m.residue_card.finite_value):
            out.append(fppoly.from_code(v, ring.p))
        return out
    # Z[i]: residues of a split/ramified prime are 1..p-1; of an inert
    # prime q the nonzero a+bi with 0 <= a, b < q
    u, v = m.data
    if v != 0:
        p = gaussian.norm(m.data)
        return [(r, 0) for r in range(1, p)]
    return [(a, b) for b in range(u) for a in range(u) if (a, b) != (0, 0)]


def _reduce_mod(ring: RingHandle, x, h):
    if ring.kind == rings.INTEGERS:
        return x % abs(h)
    if ring.kind == rings.POLY:
        return fppoly.mod(fppoly.trim(x, ring.p), h, ring.p)
    return gaussian.divmod_round(tuple(x), h)[1]


def _add_mod(ring: RingHandle, x, y, h):
    if ring.kind == rings.INTEGERS:
        return (x + y) % abs(h)
    if ring.kind == rings.POLY:
        return fppoly.mod(fppoly.add(x, y, ring.p), h, ring.p)
    return gaussian.divmod_round(gaussian.add(x, y), h)[1]


def _canonical_rep(ring: RingHandle, rep, sub_gen, h):
    """Deterministic small representative of rep + (sub_gen) mod h."""
    modulus = h if _is_zero(ring, _reduce_mod(ring, sub_gen, h)) else sub_gen
    if ring.kind == rings.INTEGERS:
        return rep % abs(modulus)
    if ring.kind == rings.POLY:
        return fppoly.mod(rep, modulus, ring.p)
    return gaussian.divmod_round(rep, modulus)[1]


def _is_zero(ring: RingHandle, x) -> bool:
    if ring.kind == rings.INTEGERS:
        return x == 0
    if ring.kind == rings.POLY:
        return x == ()
    return tuple(x) == (0, 0)


def verify_coset_cover(witness: CosetCoverWitness, max_size: int = 4096) -> bool:
    """Materialize the target and check the witness elementwise.

    True iff no coset contains the puncture, every submodule is proper,
    and the union is exactly the module minus the puncture.
    """
    ring = witness.ring
    d = modules.make_descriptor(ring, torsion=((witness.modulus, finite(1)),))
    mod = oracle.materialize(d, max_size=max_size)
    return check_coset_cover_on(mod, witness)


def check_coset_cover_on(mod, witness: CosetCoverWitness) -> bool:
    """Elementwise coset-witness check against an already-materialized target."""
    from . import _kernels as kernels
    from .errors import ShapeMismatchError
    if (len(mod.summands) != 1 or mod.ring != witness.ring
            or mod.summands[0].annihilator != witness.modulus):
        raise ShapeMismatchError("module does not match the witness target")
    puncture_idx = mod.encode_ring_element(0, witness.puncture)
    universe = mod.full_mask & ~(1 << puncture_idx)
    union = 0
    for sub_gen, rep in witness.cosets:
        sub_mask = mod.span([mod.encode_ring_element(0, sub_gen)])
        if sub_mask == mod.full_mask:
            return False
        coset = kernels.translate(mod.orders, sub_mask,
                                  mod.encode_ring_element(0, rep))
        if (coset >> puncture_idx) & 1:
            return False
        union |= coset
    return union == universe
