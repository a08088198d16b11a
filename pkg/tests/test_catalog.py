import random

import pytest

from prosep.catalog import catalog, catalog_entry, catalog_names, finite_catalog
from prosep.pcgroup import PcPresentation, consistency_check
from prosep.pcseries import (
    NotNilpotentWithinBound,
    lower_central_series_pc,
    residually_p_witness,
)
from prosep.perm import FiniteGroup, Permutation, is_nilpotent, sylow
from prosep.presentations import FpPresentation


class TestCatalogEntries:
    def test_every_entry_loads_and_validates(self):
        for name in catalog_names():
            entry = catalog_entry(name)
            obj = entry.build()
            assert entry.description
            if entry.kind == "perm":
                assert isinstance(obj, FiniteGroup)
                assert obj.order >= 1
            elif entry.kind == "pc":
                assert isinstance(obj, PcPresentation)
                ok, failures = consistency_check(obj)
                assert ok, (name, failures)
            else:
                assert isinstance(obj, FpPresentation)

    def test_counts_and_orders(self):
        entries = finite_catalog()
        assert len(entries) >= 30
        assert all(g.order <= 200 for _, g in entries)

    def test_surface_presentation(self):
        surface = catalog("surface-2")
        assert surface.generators == ["a1", "a2", "a3", "a4"]
        assert len(surface.relators) == 1

    def test_klein_bottle_hirsch(self):
        assert catalog("klein-bottle").hirsch_length() == 2


class TestTorsionActionExample:
    """Z/5 x| Z with a generating action: the torsion part is crushed by
    every nilpotent quotient.  Depth-bounded observations only."""

    def test_not_residually_nilpotent_signals(self):
        g1 = catalog("z5:z")
        with pytest.raises(NotNilpotentWithinBound):
            lower_central_series_pc(g1)

    def test_torsion_generator_in_every_commutator_term(self):
        g1 = catalog("z5:z")
        b, a = g1.generator_vector(0), g1.generator_vector(1)
        # [a, b] = a^-1 * a^2 = a, so a lies in gamma_k for every k
        assert g1.commutator(a, b) == a

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_torsion_generator_dies_in_every_p_quotient(self, p):
        g1 = catalog("z5:z")
        a = g1.generator_vector(1)
        report = residually_p_witness(g1, a, p, k_max=6)
        assert report.status == "exhausted"

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_infinite_generator_survives(self, p):
        g1 = catalog("z5:z")
        b = g1.generator_vector(0)
        report = residually_p_witness(g1, b, p, k_max=6)
        assert report.succeeded


def sylow_product_nilpotency(group):
    from prosep.perm import prime_factors

    primes = prime_factors(group.order)
    sylows = [sylow(group, p) for p in primes]
    n = 1
    for s in sylows:
        n *= s.order
    if n != group.order:
        return False
    for i, a in enumerate(sylows):
        for b in sylows[i + 1:]:
            if len(a.elements & b.elements) != 1:
                return False
            for x in a.generators:
                for y in b.generators:
                    if x * y != y * x:
                        return False
    return True


class TestCatalogWideInvariants:
    def test_nilpotency_criteria_agree_up_to_order_100(self):
        for name, group in finite_catalog(max_order=100):
            assert is_nilpotent(group) == sylow_product_nilpotency(group), name

    def test_group_axioms_on_random_triples(self):
        rng = random.Random(99)
        for name, group in finite_catalog(max_order=200):
            els = group.elements()
            ident = Permutation.identity(group.degree)
            for _ in range(1000):
                x, y, z = (rng.choice(els) for _ in range(3))
                assert (x * y) * z == x * (y * z)
                assert x * x.inverse() == ident
