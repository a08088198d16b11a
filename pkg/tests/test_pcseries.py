import random

import pytest

from prosep.freenil import BasisCapExceeded, free_nilpotent
from prosep.hall import witt_rank
from prosep.pcgroup import PcPresentation, consistency_check
from prosep.pcquot import kernel_of_restriction, quotient_by
from prosep.pcsub import InducedPresentation, induced_subgroup, relative_index, whole_group
from prosep.pcseries import (
    NotNilpotentWithinBound,
    abelian_invariants_of_presentation,
    is_cyclic_quotient,
    is_nilpotent_pc,
    layer_invariants,
    lower_central_series_pc,
    nilpotency_class_pc,
    p_quotient,
    residually_p_witness,
    separability_witness,
    torsion_primes,
    tower,
)
from prosep.snf import AbelianInvariants


def heisenberg():
    return PcPresentation(
        orders=[None, None, None],
        conjs={(0, 1, 1): (0, 1, -1), (0, 1, -1): (0, 1, 1)},
        names=["a", "b", "c"],
    )


def klein_bottle():
    return PcPresentation(
        orders=[None, None],
        conjs={(0, 1, 1): (0, -1), (0, 1, -1): (0, -1)},
        names=["b", "a"],
    )


def z_as_pc():
    return PcPresentation(orders=[None], names=["g"])


def z3_lattice():
    return PcPresentation(orders=[None, None, None], names=["x", "y", "z"])


def heisenberg_mod_center_squared():
    # same as heisenberg but with c^2 = 1 imposed
    return PcPresentation(
        orders=[None, None, 2],
        powers={2: (0, 0, 0)},
        conjs={(0, 1, 1): (0, 1, 1), (0, 1, -1): (0, 1, 1)},
        names=["a", "b", "c"],
    )


class TestFreeNilpotent:
    def test_rank2_class2_is_heisenberg_shaped(self):
        fn = free_nilpotent(2, 2)
        p = fn.presentation
        assert p.n == 3
        assert p.hirsch_length() == 3
        ok, _ = consistency_check(p)
        assert ok
        a, b, c = (p.generator_vector(i) for i in range(3))
        assert p.commutator(b, a) == c
        assert p.commutator(a, b) == p.inv(c)

    @pytest.mark.parametrize("rank,cls,hirsch", [(2, 3, 5), (4, 2, 10), (3, 2, 6)])
    def test_hirsch_lengths(self, rank, cls, hirsch):
        fn = free_nilpotent(rank, cls)
        assert fn.presentation.hirsch_length() == hirsch

    def test_consistency_small(self):
        for rank, cls in ((2, 3), (2, 4), (3, 2)):
            ok, failures = consistency_check(free_nilpotent(rank, cls).presentation)
            assert ok, failures

    def test_lcs_recovers_weight_filtration(self):
        fn = free_nilpotent(2, 3)
        p = fn.presentation
        series = lower_central_series_pc(p)
        assert len(series) == 4  # G > gamma_2 > gamma_3 > 1
        for k in (2, 3):
            positions = [i for i in range(p.n) if fn.basis.weight_of(i) >= k]
            gamma = series[k - 1]
            assert sorted(gamma.pivots) == positions
            assert all(gamma.pivots[i][i] == 1 for i in positions)

    def test_layer_ranks_match_witt(self):
        fn = free_nilpotent(2, 4)
        invs = layer_invariants(fn.presentation)
        assert [inv.free_rank for inv in invs] == [witt_rank(2, k) for k in (1, 2, 3, 4)]
        assert all(not inv.torsion for inv in invs)

    def test_word_evaluation(self):
        fn = free_nilpotent(2, 2)
        p = fn.presentation
        # ab a^-1 b^-1 = [b^-1, a^-1] ~ c modulo sign
        vec = fn.element_from_word([(0, 1), (1, 1), (0, -1), (1, -1)])
        assert vec[0] == vec[1] == 0
        assert abs(vec[2]) == 1
        assert fn.element_from_word([(0, 1), (1, 1)]) == p.collect([(0, 1), (1, 1)])

    def test_basis_cap(self):
        with pytest.raises(BasisCapExceeded):
            free_nilpotent(2, 10)


class TestLowerCentralSeries:
    def test_heisenberg_class_two(self):
        h = heisenberg()
        series = lower_central_series_pc(h)
        assert len(series) == 3
        assert series[1].sequence == [(0, 0, 1)]
        assert series[2].is_trivial()
        assert nilpotency_class_pc(h) == 2

    def test_abelian(self):
        assert nilpotency_class_pc(z3_lattice()) == 1
        assert lower_central_series_pc(z_as_pc())[1].is_trivial()

    def test_klein_bottle_refused(self):
        with pytest.raises(NotNilpotentWithinBound):
            lower_central_series_pc(klein_bottle())
        assert not is_nilpotent_pc(klein_bottle())

    def test_torsion_primes(self):
        assert torsion_primes(heisenberg()) == set()
        assert torsion_primes(z3_lattice()) == set()
        assert torsion_primes(heisenberg_mod_center_squared()) == {2}

    def test_heisenberg_layer_invariants(self):
        invs = layer_invariants(heisenberg())
        assert invs == [AbelianInvariants(2), AbelianInvariants(1)]


class TestQuotients:
    def test_hirsch_additivity(self):
        cases = []
        h = heisenberg()
        cases.append((h, induced_subgroup(h, [h.generator_vector(2)])))
        k = klein_bottle()
        cases.append((k, induced_subgroup(k, [k.generator_vector(1)])))
        for p, n in cases:
            quo = quotient_by(p, n)
            assert p.hirsch_length() == n.hirsch_length() + quo.group.hirsch_length()

    def test_projection_is_homomorphism(self):
        rng = random.Random(9)
        h = heisenberg()
        n = induced_subgroup(h, [h.pow(h.generator_vector(0), 2),
                                 h.pow(h.generator_vector(1), 2),
                                 h.generator_vector(2)])
        quo = quotient_by(h, n)
        for _ in range(100):
            x = h.collect([(rng.randrange(3), rng.randint(-3, 3)) for _ in range(3)])
            y = h.collect([(rng.randrange(3), rng.randint(-3, 3)) for _ in range(3)])
            lhs = quo.project_vector(h.mul(x, y))
            rhs = quo.group.mul(quo.project_vector(x), quo.project_vector(y))
            assert lhs == rhs

    def test_quotient_presentation_consistent(self):
        h = heisenberg()
        n = induced_subgroup(h, [h.pow(h.generator_vector(0), 4),
                                 h.pow(h.generator_vector(1), 2),
                                 h.pow(h.generator_vector(2), 2)])
        quo = quotient_by(h, n)
        ok, failures = consistency_check(quo.group)
        assert ok, failures
        assert quo.group.group_order() == 16


class TestPQuotientTowers:
    def test_z_tower_at_3(self):
        z = z_as_pc()
        assert p_quotient(z, 3, 2).group.group_order() == 3
        for k in (2, 3, 4):
            assert p_quotient(z, 3, k).group.group_order() == 3 ** (k - 1)

    def test_klein_3_tower_is_cyclic(self):
        k = klein_bottle()
        for level in range(2, 7):
            quo = p_quotient(k, 3, level)
            assert quo.group.group_order() == 3 ** (level - 1)
            assert is_cyclic_quotient(quo.group)

    def test_klein_2_tower_grows_nonabelian(self):
        k = klein_bottle()
        quo2 = p_quotient(k, 2, 2)
        assert quo2.group.group_order() == 4
        quo3 = p_quotient(k, 2, 3)
        assert quo3.group.group_order() == 16
        assert not is_cyclic_quotient(quo3.group)

    def test_heisenberg_level2_at_2(self):
        h = heisenberg()
        quo = p_quotient(h, 2, 2)
        assert quo.group.group_order() == 4
        inv = abelian_invariants_of_presentation(quo.group)
        assert inv == AbelianInvariants(0, (2, 2))

    def test_tower_coherence(self):
        rng = random.Random(21)
        h = heisenberg()
        tw = tower(h, 2)
        for k in (2, 3):
            quo_k = tw.quotient(k)
            quo_k1 = tw.quotient(k + 1)
            image = quo_k1.project_subgroup(tw.gamma(k))
            composite = quotient_by(quo_k1.group, image, check_normal=False)
            assert composite.group.group_order() == quo_k.group.group_order()
            for _ in range(40):
                x = h.collect([(rng.randrange(3), rng.randint(-4, 4)) for _ in range(3)])
                y = h.collect([(rng.randrange(3), rng.randint(-4, 4)) for _ in range(3)])
                same_direct = quo_k.project_vector(x) == quo_k.project_vector(y)
                same_composite = (
                    composite.project_vector(quo_k1.project_vector(x))
                    == composite.project_vector(quo_k1.project_vector(y))
                )
                assert same_direct == same_composite

    def test_gamma_terms_are_normal(self):
        from prosep.pcsub import is_normal

        k = klein_bottle()
        tw = tower(k, 2)
        for level in (2, 3, 4):
            assert is_normal(k, tw.gamma(level))

    def test_level_k_quotient_absorbs_shallower_quotients(self):
        # any p-quotient with class data bounded by k factors through the
        # level-k quotient: concretely, the level-j series of G/gamma_k
        # matches the direct level-j quotients of G, and the level-k term
        # of the quotient itself is trivial
        from prosep.pcseries import PQuotientTower

        for pres, p in ((heisenberg(), 2), (klein_bottle(), 3), (z_as_pc(), 5)):
            tw = tower(pres, p)
            for k in (2, 3):
                q_group = tw.quotient(k).group
                inner = PQuotientTower(q_group, p)
                assert inner.gamma(k).order() == 1
                for j in range(1, k + 1):
                    assert (inner.quotient(j).group.group_order()
                            == tw.quotient(j).group.group_order())


class TestKernelOfRestriction:
    def test_heisenberg_cyclic_meet(self):
        h = heisenberg()
        sub = induced_subgroup(h, [h.generator_vector(0)])
        quo = p_quotient(h, 2, 2)
        meet = kernel_of_restriction(h, sub, quo)
        assert meet.sequence == [(2, 0, 0)]

    def test_klein_meet(self):
        k = klein_bottle()
        b, a = k.generator_vector(0), k.generator_vector(1)
        sub = induced_subgroup(k, [a, k.pow(b, 2)])
        quo = p_quotient(k, 3, 2)
        meet = kernel_of_restriction(k, sub, quo)
        # H meet <a, b^3> = <a, b^6>
        assert sorted(meet.pivots) == [0, 1]
        assert meet.pivots[0][0] == 6
        assert meet.pivots[1][1] == 1


class TestRelativeIndex:
    def test_klein_sublattice(self):
        k = klein_bottle()
        b, a = k.generator_vector(0), k.generator_vector(1)
        h = induced_subgroup(k, [a, k.pow(b, 2)])
        lam = induced_subgroup(k, [k.pow(a, 3), k.pow(b, 6)])
        assert relative_index(k, h, lam) == 9

    def test_infinite_index(self):
        h = heisenberg()
        outer = whole_group(h)
        inner = induced_subgroup(h, [h.generator_vector(0)])
        assert relative_index(h, outer, inner) is None

    def test_induced_presentation_roundtrip(self):
        k = klein_bottle()
        b, a = k.generator_vector(0), k.generator_vector(1)
        h = induced_subgroup(k, [a, k.pow(b, 2)])
        ind = InducedPresentation(k, h)
        # the subgroup is free abelian of rank 2: no conjugation relations
        ok, _ = consistency_check(ind.group)
        assert ok
        assert ind.group.hirsch_length() == 2
        x = k.mul(k.pow(a, 3), k.pow(b, -4))
        assert ind.embed(ind.coordinatize(x)) == x


class TestSeparabilityWitness:
    def test_heisenberg_cyclic_pair(self):
        h = heisenberg()
        a = h.generator_vector(0)
        sub = induced_subgroup(h, [a])
        lam = induced_subgroup(h, [h.pow(a, 2)])
        report = separability_witness(h, sub, lam, 2)
        assert report.succeeded
        assert report.level == 2
        assert "meet inside Lambda" in report.details["verified"]

    def test_lambda_equals_h_succeeds_at_level_one(self):
        h = heisenberg()
        sub = induced_subgroup(h, [h.generator_vector(0), h.generator_vector(2)])
        report = separability_witness(h, sub, sub, 3)
        assert report.succeeded and report.level == 1

    def test_klein_bottle_failure_at_3(self):
        k = klein_bottle()
        b, a = k.generator_vector(0), k.generator_vector(1)
        sub = induced_subgroup(k, [a, k.pow(b, 2)])
        lam = induced_subgroup(k, [k.pow(a, 3), k.pow(b, 6)])
        report = separability_witness(k, sub, lam, 3, k_max=6)
        assert not report.succeeded
        assert report.status == "exhausted"
        failures = report.details["failures_by_level"]
        for level in range(2, 7):
            assert failures[level] == a

    def test_klein_bottle_2_power_lattices_succeed(self):
        k = klein_bottle()
        b, a = k.generator_vector(0), k.generator_vector(1)
        sub = induced_subgroup(k, [a, k.pow(b, 2)])
        lam = induced_subgroup(k, [k.pow(a, 2), k.pow(b, 4)])
        report = separability_witness(k, sub, lam, 2)
        assert report.succeeded

    def test_precondition_validation(self):
        k = klein_bottle()
        b, a = k.generator_vector(0), k.generator_vector(1)
        sub = induced_subgroup(k, [a, k.pow(b, 2)])
        lam = induced_subgroup(k, [k.pow(a, 3), k.pow(b, 6)])
        with pytest.raises(ValueError):
            separability_witness(k, sub, lam, 2)  # index 9 is not a 2-power
        with pytest.raises(ValueError):
            separability_witness(k, lam, sub, 3)  # H inside Lambda, not the reverse


class TestResidualWitness:
    def test_heisenberg_center_at_2(self):
        h = heisenberg()
        report = residually_p_witness(h, h.generator_vector(2), 2)
        assert report.succeeded and report.level == 3

    def test_z_fifth_power_at_5(self):
        z = z_as_pc()
        report = residually_p_witness(z, z.pow(z.generator_vector(0), 5), 5)
        assert report.succeeded and report.level == 3

    def test_klein_a_fails_at_3(self):
        k = klein_bottle()
        report = residually_p_witness(k, k.generator_vector(1), 3, k_max=8)
        assert report.status == "exhausted"
        assert report.failure_element == (0, 1)

    def test_identity_rejected(self):
        with pytest.raises(ValueError):
            residually_p_witness(heisenberg(), (0, 0, 0), 2)
