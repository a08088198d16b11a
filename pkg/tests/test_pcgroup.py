import random

import pytest

from prosep.pcgroup import (
    CollectionBlowup,
    PcElement,
    PcPresentation,
    consistency_check,
    xgcd,
)
from prosep.pcsub import (
    PcSubgroup,
    induced_subgroup,
    is_normal,
    normal_closure,
    trivial_subgroup,
    whole_group,
)


def heisenberg():
    # generators a, b, c with [a,b] = c central: b^a = b c^-1, b^{a^-1} = b c
    return PcPresentation(
        orders=[None, None, None],
        conjs={
            (0, 1, 1): (0, 1, -1),
            (0, 1, -1): (0, 1, 1),
        },
        names=["a", "b", "c"],
    )


def klein_bottle():
    # pc order: b first, then a, with a^b = a^-1
    return PcPresentation(
        orders=[None, None],
        conjs={
            (0, 1, 1): (0, -1),
            (0, 1, -1): (0, -1),
        },
        names=["b", "a"],
    )


def z4_as_pc():
    # g1^2 = g2, g2^2 = 1
    return PcPresentation(
        orders=[2, 2],
        powers={0: (0, 1), 1: (0, 0)},
        names=["g1", "g2"],
    )


def broken_heisenberg():
    # c fails to be central in an incoherent way: conjugation by b inverts
    # it but conjugation by b^-1 fixes it, which no group satisfies
    return PcPresentation(
        orders=[None, None, None],
        conjs={
            (0, 1, 1): (0, 1, -1),
            (0, 1, -1): (0, 1, 1),
            (1, 2, 1): (0, 0, -1),
            (1, 2, -1): (0, 0, 1),
        },
        names=["a", "b", "c"],
    )


class TestXgcd:
    def test_basic(self):
        for a, b in [(12, 18), (-4, 6), (0, 5), (7, 0), (1, 1), (270, 192)]:
            g, x, y = xgcd(a, b)
            assert g == x * a + y * b
            assert g >= 0


class TestCollection:
    def test_heisenberg_b_times_a(self):
        h = heisenberg()
        assert h.collect([(1, 1), (0, 1)]) == (1, 1, -1)

    def test_identity_word(self):
        h = heisenberg()
        assert h.collect([(0, 0), (1, 0), (2, 0)]) == (0, 0, 0)
        assert h.collect([]) == (0, 0, 0)

    def test_klein_a_times_b(self):
        k = klein_bottle()
        # a * b collected in the order b < a gives b * a^-1
        assert k.collect([(1, 1), (0, 1)]) == (1, -1)

    def test_finite_power_relation(self):
        z4 = z4_as_pc()
        assert z4.collect([(0, 2)]) == (0, 1)
        assert z4.collect([(0, 3)]) == (1, 1)
        assert z4.collect([(0, 4)]) == (0, 0)

    def test_group_laws_random_words(self):
        rng = random.Random(11)
        for p in (heisenberg(), klein_bottle(), z4_as_pc()):
            for _ in range(1000):
                u = [(rng.randrange(p.n), rng.randint(-4, 4)) for _ in range(4)]
                v = [(rng.randrange(p.n), rng.randint(-4, 4)) for _ in range(4)]
                lhs = p.collect(u + v)
                rhs = p.mul(p.collect(u), p.collect(v))
                assert lhs == rhs
                x = p.collect(u)
                assert p.mul(x, p.inv(x)) == p.identity
                assert p.mul(p.inv(x), x) == p.identity

    def test_power_by_squaring_matches_iteration(self):
        h = heisenberg()
        x = h.collect([(0, 1), (1, 1)])
        direct = h.identity
        for _ in range(17):
            direct = h.mul(direct, x)
        assert h.pow(x, 17) == direct
        assert h.pow(x, -17) == h.inv(direct)

    def test_central_commutator(self):
        h = heisenberg()
        a = h.generator_vector(0)
        b = h.generator_vector(1)
        assert h.commutator(a, b) == (0, 0, 1)
        c = h.generator_vector(2)
        assert h.commutator(a, c) == h.identity
        assert h.commutator(b, c) == h.identity

    def test_klein_conjugation(self):
        k = klein_bottle()
        b = k.generator_vector(0)
        a = k.generator_vector(1)
        assert k.conjugate(a, b) == (0, -1)
        assert k.conjugate(a, k.inv(b)) == (0, -1)
        # b^2 acts trivially on a
        assert k.conjugate(a, k.pow(b, 2)) == a

    def test_collection_cap(self):
        h = PcPresentation(
            orders=[None, None, None],
            conjs={(0, 1, 1): (0, 1, -1), (0, 1, -1): (0, 1, 1)},
            collection_cap=10,
        )
        with pytest.raises(CollectionBlowup):
            h.collect([(0, 5), (1, 5), (0, -5), (1, 5)] * 20)


class TestPresentation:
    def test_validation_rejects_bad_layers(self):
        with pytest.raises(ValueError):
            PcPresentation(orders=[None, None], conjs={(0, 1, 1): (0, 2)})
        with pytest.raises(ValueError):
            PcPresentation(orders=[None, None], conjs={(0, 1, 1): (1, 1)})
        with pytest.raises(ValueError):
            PcPresentation(orders=[None, 2], powers={1: (1, 0)})

    def test_hirsch_and_order(self):
        assert heisenberg().hirsch_length() == 3
        assert klein_bottle().hirsch_length() == 2
        assert z4_as_pc().hirsch_length() == 0
        assert z4_as_pc().group_order() == 4
        assert heisenberg().group_order() is None

    def test_element_wrapper(self):
        h = heisenberg()
        a = PcElement(h, (1, 0, 0))
        b = PcElement(h, (0, 1, 0))
        assert (b * a).vector == (1, 1, -1)
        assert (a * a.inverse()).is_identity()
        assert (a**3).vector == (3, 0, 0)
        assert repr(b * a) == "a*b*c^-1"

    def test_element_range_validation(self):
        z4 = z4_as_pc()
        with pytest.raises(ValueError):
            PcElement(z4, (2, 0))


class TestConsistency:
    def test_heisenberg_consistent(self):
        ok, failures = consistency_check(heisenberg())
        assert ok and not failures

    def test_klein_consistent(self):
        ok, failures = consistency_check(klein_bottle())
        assert ok

    def test_z4_consistent(self):
        ok, _ = consistency_check(z4_as_pc())
        assert ok

    def test_broken_heisenberg_detected(self):
        ok, failures = consistency_check(broken_heisenberg())
        assert not ok
        assert failures
        assert "overlap" in str(failures[0])


class TestSubgroups:
    def test_cyclic_subgroup_membership(self):
        h = heisenberg()
        sub = induced_subgroup(h, [h.generator_vector(0)])
        assert h.pow(h.generator_vector(0), 5) in sub
        assert h.generator_vector(2) not in sub
        assert sub.hirsch_length() == 1

    def test_klein_z2_subgroup(self):
        k = klein_bottle()
        a = k.generator_vector(1)
        b2 = k.pow(k.generator_vector(0), 2)
        sub = induced_subgroup(k, [a, b2])
        assert sub.index() == 2
        assert sub.hirsch_length() == 2
        # the subgroup is abelian: b^2 acts trivially on a
        assert k.conjugate(a, b2) == a

    def test_whole_and_trivial(self):
        h = heisenberg()
        assert whole_group(h).index() == 1
        assert trivial_subgroup(h).is_trivial()
        assert trivial_subgroup(h).index() is None

    def test_finite_subgroup_elements(self):
        z4 = z4_as_pc()
        sub = induced_subgroup(z4, [z4.generator_vector(1)])
        assert sub.order() == 2
        assert len(sub.elements()) == 2
        assert whole_group(z4).order() == 4
        assert len(whole_group(z4).elements()) == 4

    def test_gcd_combination(self):
        h = heisenberg()
        a = h.generator_vector(0)
        sub = induced_subgroup(h, [h.pow(a, 4), h.pow(a, 6)])
        assert sub.pivots[0][0] == 2
        assert h.pow(a, 2) in sub
        assert a not in sub

    def test_index_counts_cosets(self):
        h = heisenberg()
        sub = induced_subgroup(
            h,
            [h.pow(h.generator_vector(0), 2),
             h.generator_vector(1),
             h.generator_vector(2)],
        )
        assert sub.index() == 2

    def test_normal_closure_of_commutator(self):
        h = heisenberg()
        derived = normal_closure(h, [h.commutator(h.generator_vector(0), h.generator_vector(1))])
        assert derived.sequence == [(0, 0, 1)]
        assert is_normal(h, derived)

    def test_center_subgroup_is_normal(self):
        h = heisenberg()
        sub = induced_subgroup(h, [h.generator_vector(2)])
        assert is_normal(h, sub)
        sub2 = induced_subgroup(h, [h.generator_vector(0)])
        assert not is_normal(h, sub2)

    def test_coordinatize_roundtrip(self):
        h = heisenberg()
        rng = random.Random(3)
        sub = induced_subgroup(
            h, [h.pow(h.generator_vector(0), 2), h.generator_vector(2)]
        )
        for _ in range(50):
            coords = [rng.randint(-3, 3) for _ in sub.sequence]
            x = h.identity
            for u, q in zip(sub.sequence, coords):
                x = h.mul(x, h.pow(u, q))
            assert x in sub
            back = sub.coordinatize(x)
            y = h.identity
            for u, q in zip(sub.sequence, back):
                y = h.mul(y, h.pow(u, q))
            assert y == x

    def test_random_membership_against_products(self):
        rng = random.Random(5)
        for p in (heisenberg(), klein_bottle()):
            gens = [
                p.collect([(rng.randrange(p.n), rng.randint(-2, 2)) for _ in range(3)])
                for _ in range(2)
            ]
            sub = induced_subgroup(p, gens)
            for _ in range(60):
                x = p.identity
                for _ in range(rng.randint(1, 6)):
                    g = rng.choice(gens)
                    if rng.random() < 0.5:
                        g = p.inv(g)
                    x = p.mul(x, g)
                assert x in sub

    def test_subgroup_equality_is_canonical(self):
        h = heisenberg()
        a, b, c = (h.generator_vector(i) for i in range(3))
        s1 = induced_subgroup(h, [h.pow(a, 2), h.mul(h.pow(a, 2), c), b])
        s2 = induced_subgroup(h, [c, b, h.pow(a, 2)])
        assert s1 == s2
        assert hash(s1) == hash(s2)

    def test_join(self):
        h = heisenberg()
        s1 = induced_subgroup(h, [h.generator_vector(0)])
        s2 = induced_subgroup(h, [h.generator_vector(2)])
        j = s1.join(s2)
        assert h.generator_vector(0) in j
        assert h.generator_vector(2) in j
        assert s1 <= j and s2 <= j
