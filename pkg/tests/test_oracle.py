"""The brute-force engine: materialization, enumeration, exact covers.

Independent cross-checks: subgroup enumeration is compared against a
join-closure method that knows nothing about generator matrices, the
maximal-submodule restriction is compared against covers over all proper
submodules, and the punctured coset search against its unrestricted
variant.
"""

import pytest

from covercalc import _kernels as kernels
from covercalc import covering, modules, oracle, parser, rings
from covercalc.errors import ShapeMismatchError, TooLargeError, TrivialGroupError

Z = rings.integers()


def parse(text):
    return parser.parse_spec(text)[1]


def subgroups_by_join_closure(orders):
    """All subgroups via pairwise joins of cyclic subgroups (double loop)."""
    n = 1
    for o in orders:
        n *= o
    cyclics = set()
    for x in range(n):
        cyclics.add(kernels.closure(orders, (), [x]))
    known = set(cyclics)
    while True:
        new = set()
        for a in known:
            for b in cyclics:
                if b & ~a:
                    gens = [i for i in range(n) if ((a | b) >> i) & 1]
                    j = kernels.closure(orders, (), gens)
                    if j not in known:
                        new.add(j)
        if not new:
            break
        known |= new
    return known


class TestMaterialize:
    def test_plain_z(self):
        mod = oracle.materialize(parse("Z: R/(12) + R/(18)"))
        assert sorted(mod.orders) == [12, 18]
        assert mod.actions == ()
        assert mod.size == 216

    def test_gaussian_ramified_square(self):
        # (1+i)^2 = 2i generates (2): the module Z[i]/(2) has 4 elements
        mod = oracle.materialize(parse("Zi: R/(2i)"))
        assert mod.size == 4
        assert sorted(mod.orders) == [2, 2]

    def test_gaussian_two_coordinates(self):
        mod = oracle.materialize(parse("Zi: R/(2)"))
        assert sorted(mod.orders) == [2, 2]
        # multiplication by i has order 4 on Z[i]/(2)? it squares to -1
        act = mod.actions[0]
        x = mod.encode([1, 0])
        ix = kernels.apply_matrix(mod.orders, act, x)
        iix = kernels.apply_matrix(mod.orders, act, ix)
        # i*i*x = -x = x mod 2
        assert iix == x

    def test_poly_companion(self):
        mod = oracle.materialize(parse("Fp[t] p=2: R/(t^2+t+1)"))
        assert mod.orders == (2, 2)
        act = mod.actions[0]
        # t annihilates nothing; t^2 + t + 1 kills every element
        for x in range(mod.size):
            tx = kernels.apply_matrix(mod.orders, act, x)
            ttx = kernels.apply_matrix(mod.orders, act, tx)
            s = oracle._add(mod, oracle._add(mod, ttx, tx), x)
            assert s == 0

    def test_gaussian_annihilator_killed(self):
        mod = oracle.materialize(parse("Zi: R/(2+i)"))
        assert mod.orders == (5,)
        # multiplication by 2+i is zero on every element
        for x in range(5):
            assert oracle._scalar_action(mod, (2, 1), x) == 0

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            oracle.materialize(parse("Z: R/(5000)"), max_size=4096)

    def test_normalized_descriptor_splits_blocks(self):
        mod = oracle.materialize(modules.normalize(parse("Z: R/(12) + R/(18)")))
        assert sorted(mod.orders) == [2, 3, 4, 9]
        assert mod.size == 216


class TestEnumeration:
    def test_klein_counts(self):
        mod = oracle.materialize(parse("Z: R/(2) + R/(2)"))
        assert len(oracle.enumerate_submodules(mod, maximal_only=False)) == 5
        assert len(oracle.enumerate_submodules(mod, maximal_only=True)) == 3

    def test_z4_chain(self):
        mod = oracle.materialize(parse("Z: R/(4)"))
        assert len(oracle.enumerate_submodules(mod, maximal_only=False)) == 3
        maxi = oracle.enumerate_submodules(mod, maximal_only=True)
        assert len(maxi) == 1 and maxi[0].size() == 2

    def test_gaussian_invariance_filter(self):
        # of the 3 order-2 subgroups of Z[i]/(2), only (1+i)M is i-invariant
        mod = oracle.materialize(parse("Zi: R/(2)"))
        subs = oracle.enumerate_submodules(mod, maximal_only=False)
        proper_nonzero = [s for s in subs if 1 < s.size() < mod.size]
        assert len(proper_nonzero) == 1
        img = {oracle._scalar_action(mod, (1, 1), x) for x in range(mod.size)}
        assert {i for i in range(mod.size) if (proper_nonzero[0].mask >> i) & 1} == img

    def test_f4_maximal_submodules_have_index_four(self):
        mod = oracle.materialize(parse("Fp[t] p=2: R/(t^2+t+1)^2"))
        maxi = oracle.enumerate_submodules(mod, maximal_only=True)
        assert len(maxi) == 5
        assert all(s.size() == 4 for s in maxi)

    @pytest.mark.parametrize("orders", [(2, 4), (3, 9), (4, 8), (2, 2), (9, 3),
                                        (2, 2, 2), (5, 5), (6, 4), (12,),
                                        (2, 3), (10, 2)])
    def test_subgroup_counts_match_closure_enumeration(self, orders):
        mod = oracle.FiniteModule(orders)
        got = {s.mask for s in oracle.enumerate_submodules(mod, maximal_only=False,
                                                           max_size=1000)}
        assert got == subgroups_by_join_closure(orders)

    def test_action_invariance_postcondition(self):
        for spec in ["Zi: R/(1+i)^3", "Fp[t] p=2: R/(t^2+t+1) + R/(t)",
                     "Zi: R/(2+i) + R/(1+i)"]:
            mod = oracle.materialize(parse(spec))
            for s in oracle.enumerate_submodules(mod, maximal_only=False,
                                                 max_size=64):
                assert kernels.invariant_core(mod.orders, mod.actions, s.mask) == s.mask
            for s in oracle.enumerate_submodules(mod, maximal_only=True):
                assert kernels.invariant_core(mod.orders, mod.actions, s.mask) == s.mask


class TestMinCover:
    def test_klein(self):
        mod = oracle.materialize(parse("Z: R/(2) + R/(2)"))
        size, witness = oracle.min_submodule_cover(mod)
        assert size == 3 and len(witness) == 3

    def test_cyclic_no_cover(self):
        mod = oracle.materialize(parse("Z: R/(6)"))
        assert oracle.min_submodule_cover(mod) == (None, [])

    def test_three_squared(self):
        mod = oracle.materialize(parse("Z: R/(3) + R/(3)"))
        assert oracle.min_submodule_cover(mod)[0] == 4

    def test_zero_module(self):
        mod = oracle.materialize(parse("Z: 0"))
        assert oracle.min_submodule_cover(mod) == (None, [])

    def test_maximal_restriction_sound_up_to_64(self):
        # sampled orders <= 64: covers over maximal submodules agree with
        # covers over all proper submodules
        samples = ["Z: R/(2) + R/(2)", "Z: R/(4) + R/(2)", "Z: R/(8) + R/(8)",
                   "Z: R/(3) + R/(3)", "Z: R/(9) + R/(3)", "Z: R/(2)^3",
                   "Z: R/(6) + R/(10)", "Z: R/(4) + R/(4) + R/(2)",
                   "Z: R/(5) + R/(5)", "Z: R/(7) + R/(7)", "Z: R/(12) + R/(4)",
                   "Zi: R/(1+i)^2", "Zi: R/(1+i) + R/(1+i)",
                   "Fp[t] p=2: R/(t)^2 + R/(t+1)", "Fp[t] p=2: R/(t^2+t+1)^2",
                   "Zi: R/(2+i) + R/(2+i)"]
        for spec in samples:
            mod = oracle.materialize(parse(spec), max_size=64)
            a = oracle.min_submodule_cover(mod, maximal_only=True, max_size=64)[0]
            b = oracle.min_submodule_cover(mod, maximal_only=False, max_size=64)[0]
            assert a == b, spec

    def test_deterministic_witness(self):
        mod = oracle.materialize(parse("Z: R/(12) + R/(18)"))
        a = oracle.min_submodule_cover(mod)
        b = oracle.min_submodule_cover(mod)
        assert a == b


class TestPuncturedCosets:
    def test_z4(self):
        mod = oracle.materialize(parse("Z: R/(4)"))
        size, witness = oracle.min_coset_cover_punctured(mod, 0)
        assert size == 2

    def test_klein(self):
        mod = oracle.materialize(parse("Z: R/(2) + R/(2)"))
        assert oracle.min_coset_cover_punctured(mod, 0)[0] == 2

    def test_z5(self):
        mod = oracle.materialize(parse("Z: R/(5)"))
        assert oracle.min_coset_cover_punctured(mod, 0)[0] == 4

    def test_trivial_rejected(self):
        mod = oracle.materialize(parse("Z: 0"))
        with pytest.raises(TrivialGroupError):
            oracle.min_coset_cover_punctured(mod, 0)

    def test_restriction_cross_validated_up_to_16(self):
        specs = ["Z: R/(4)", "Z: R/(6)", "Z: R/(8)", "Z: R/(12)", "Z: R/(16)",
                 "Z: R/(2) + R/(2)", "Z: R/(4) + R/(2)", "Z: R/(9)",
                 "Z: R/(3) + R/(3)", "Z: R/(4) + R/(4)", "Z: R/(2)^3",
                 "Zi: R/(1+i)^2", "Fp[t] p=2: R/(t) + R/(t+1)"]
        for spec in specs:
            mod = oracle.materialize(parse(spec), max_size=16)
            for puncture in {0, mod.size - 1}:
                a = oracle.min_coset_cover_punctured(mod, puncture,
                                                     inclusion_maximal=True)[0]
                b = oracle.min_coset_cover_punctured(mod, puncture,
                                                     inclusion_maximal=False)[0]
                assert a == b, (spec, puncture)

    def test_every_puncture_same_count(self):
        mod = oracle.materialize(parse("Z: R/(12)"))
        counts = {oracle.min_coset_cover_punctured(mod, x)[0]
                  for x in range(mod.size)}
        assert counts == {4}


class TestVerifyWitness:
    def test_accepts_built_witnesses(self):
        for spec in ["Z: R/(2) + R/(2)", "Z: R/(12) + R/(18)",
                     "Zi: R/(1+i) + R/(1+i)", "Fp[t] p=2: R/(t^2+t+1)^2",
                     "Z: R/(9) + R/(3)"]:
            d = parse(spec)
            w = covering.build_cover_witness(d)
            mod = oracle.materialize(d)
            assert oracle.verify_cover_witness(mod, w), spec

    def test_rejects_partial_cover(self):
        from dataclasses import replace
        d = parse("Z: R/(2) + R/(2)")
        w = covering.build_cover_witness(d)
        broken = replace(w, line_points=w.line_points[:2],
                         line_strs=w.line_strs[:2])
        mod = oracle.materialize(d)
        assert not oracle.verify_cover_witness(mod, broken)

    def test_shape_mismatch(self):
        d = parse("Z: R/(2) + R/(2)")
        w = covering.build_cover_witness(d)
        other = oracle.materialize(parse("Z: R/(4)"))
        with pytest.raises(ShapeMismatchError):
            oracle.verify_cover_witness(other, w)

    def test_chain_witness_not_materializable(self):
        w = covering.build_cover_witness(parse("Z: Q"))
        mod = oracle.materialize(parse("Z: R/(4)"))
        with pytest.raises(ShapeMismatchError):
            oracle.verify_cover_witness(mod, w)

    def test_coset_witness_through_oracle_surface(self):
        from covercalc import cosets, rings
        w = cosets.build_coset_cover(rings.integers(), 4, 0)
        mod = oracle.materialize(parse("Z: R/(4)"))
        assert oracle.verify_cover_witness(mod, w)
        wrong = oracle.materialize(parse("Z: R/(8)"))
        with pytest.raises(ShapeMismatchError):
            oracle.verify_cover_witness(wrong, w)
