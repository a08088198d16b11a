import random

import pytest
from hypothesis import given, settings, strategies as st

from prosep.snf import (
    AbelianInvariants,
    abelian_invariants_of_relations,
    matmul,
    saturate_lattice,
    smith_normal_form,
)


def check_reconstruction(m):
    sf = smith_normal_form(m)
    assert matmul(matmul(sf.u, m), sf.v) == sf.diagonal_matrix()
    for a, b in zip(sf.d, sf.d[1:]):
        if a != 0:
            assert b % a == 0
        else:
            assert b == 0
    # vinv really is the inverse of v
    n = len(sf.v)
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    assert matmul(sf.v, sf.vinv) == ident
    return sf


def test_diagonal_input():
    sf = check_reconstruction([[2, 0], [0, 6]])
    assert sf.invariants == AbelianInvariants(0, (2, 6))


def test_trefoil_relator_row():
    sf = check_reconstruction([[2, 3]])
    assert sf.invariants == AbelianInvariants(1, ())


def test_zero_matrix():
    sf = check_reconstruction([[0, 0], [0, 0]])
    assert sf.invariants == AbelianInvariants(2, ())


def test_divisibility_enforced():
    # diag(2, 3) is not in Smith form; invariants are 1 | 6
    sf = check_reconstruction([[2, 0], [0, 3]])
    assert [abs(x) for x in sf.d] == [1, 6]
    assert sf.invariants == AbelianInvariants(0, (6,))


def test_empty_relations():
    assert abelian_invariants_of_relations(3, []) == AbelianInvariants(3)
    assert abelian_invariants_of_relations(0, []) == AbelianInvariants(0)


def test_invariants_str_and_order():
    assert str(AbelianInvariants(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    assert AbelianInvariants(0, (2, 4)).order == 8
    assert AbelianInvariants(1, ()).order is None
    assert AbelianInvariants(0, ()).is_trivial()


def test_invalid_invariants():
    with pytest.raises(ValueError):
        AbelianInvariants(0, (3, 4))
    with pytest.raises(ValueError):
        AbelianInvariants(0, (1,))


def test_random_matrices_reconstruct():
    rng = random.Random(20240)
    for _ in range(200):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        check_reconstruction(m)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-40, 40), min_size=1, max_size=5),
        min_size=1,
        max_size=5,
    ).filter(lambda m: len({len(r) for r in m}) == 1)
)
def test_reconstruction_property(m):
    check_reconstruction(m)


def test_saturation_in_z2():
    # lattice spanned by (2, 0) and (0, 6): 2-saturation adds (1, 0) and (0, 3)
    rows = saturate_lattice(2, [[2, 0], [0, 6]], [2])
    sf = smith_normal_form(rows)
    assert [abs(x) for x in sf.d] == [1, 3]


def test_saturation_of_primitive_vector_is_itself():
    rows = saturate_lattice(2, [[2, 1]], [2, 3, 5, 7])
    sf = smith_normal_form(rows)
    # still the same rank-1 lattice generated by a primitive vector
    assert [abs(x) for x in sf.d] == [1]
    base = rows[0]
    assert sorted(map(abs, base)) == [1, 2]
