import pytest

from prosep.expansion import LayerSolver, SeriesContext
from prosep.hall import HallBasis, witt_rank


WITT_RANK2 = [2, 1, 2, 3, 6, 9, 18]


def test_witt_rank_small_values():
    assert [witt_rank(2, n) for n in range(1, 8)] == WITT_RANK2
    assert witt_rank(1, 1) == 1
    assert all(witt_rank(1, n) == 0 for n in range(2, 9))
    assert witt_rank(3, 2) == 3
    assert witt_rank(4, 2) == 6


def test_witt_rank_validates():
    with pytest.raises(ValueError):
        witt_rank(0, 1)
    with pytest.raises(ValueError):
        witt_rank(2, 0)


def test_hall_counts_match_witt():
    for r in (1, 2, 3, 4):
        basis = HallBasis(r, 5 if r < 4 else 3)
        assert basis.weight_counts() == [
            witt_rank(r, n) for n in range(1, basis.class_bound + 1)
        ]


def test_hall_rank2_class3_names():
    basis = HallBasis(2, 3)
    names = [basis.name(i) for i in range(len(basis))]
    assert names == ["a", "b", "[b,a]", "[[b,a],a]", "[[b,a],b]"]


def test_free_words_are_commutator_words():
    basis = HallBasis(2, 2)
    assert basis.free_word(2) == ((1, -1), (0, -1), (1, 1), (0, 1))


def test_series_group_laws():
    ctx = SeriesContext(2, 4)
    a = ctx.generator(0)
    b = ctx.generator(1)
    ab = ctx.mul(a, b)
    assert ctx.mul(ab, ctx.inverse(ab)) == ctx.one()
    assert ctx.mul(ctx.power(a, 3), ctx.power(a, -3)) == ctx.one()
    assert ctx.power(ab, 2) == ctx.mul(ab, ab)


def test_weight_detection():
    ctx = SeriesContext(2, 4)
    a = ctx.generator(0)
    b = ctx.generator(1)
    assert ctx.weight(ctx.one()) is None
    assert ctx.weight(a) == 1
    assert ctx.weight(ctx.commutator(a, b)) == 2
    assert ctx.weight(ctx.commutator(ctx.commutator(a, b), a)) == 3


def test_square_coordinates():
    ctx = SeriesContext(2, 3)
    basis = HallBasis(2, 3)
    solver = LayerSolver(basis, ctx)
    s = ctx.word([(0, 2)])
    assert ctx.weight(s) == 1
    coords = solver.coordinates(ctx.homogeneous(s, 1), 1)
    assert coords == [2, 0]


def test_commutator_coordinates():
    ctx = SeriesContext(2, 3)
    basis = HallBasis(2, 3)
    solver = LayerSolver(basis, ctx)
    # [a,b] has weight 2 and is the inverse of the basis entry [b,a]
    s = ctx.commutator(ctx.generator(0), ctx.generator(1))
    assert ctx.weight(s) == 2
    coords = solver.coordinates(ctx.homogeneous(s, 2), 2)
    assert coords == [-1]


def test_each_basis_entry_has_unit_coordinates():
    ctx = SeriesContext(2, 4)
    basis = HallBasis(2, 4)
    solver = LayerSolver(basis, ctx)
    for idx, c in enumerate(basis.commutators):
        s = ctx.word(basis.free_word(idx))
        assert ctx.weight(s) == c.weight
        coords = solver.coordinates(ctx.homogeneous(s, c.weight), c.weight)
        offset = basis.indices_of_weight(c.weight).index(idx)
        expected = [0] * len(coords)
        expected[offset] = 1
        assert coords == expected


def test_surface_relator_coordinates():
    # [a1,a2][a3,a4] in rank 4: weight 2, unit coefficients, primitive
    ctx = SeriesContext(4, 2)
    basis = HallBasis(4, 2)
    solver = LayerSolver(basis, ctx)
    s = ctx.mul(
        ctx.commutator(ctx.generator(0), ctx.generator(1)),
        ctx.commutator(ctx.generator(2), ctx.generator(3)),
    )
    assert ctx.weight(s) == 2
    coords = solver.coordinates(ctx.homogeneous(s, 2), 2)
    assert sorted(map(abs, coords)) == [0, 0, 0, 0, 1, 1]


def test_trefoil_relator_weight_one():
    ctx = SeriesContext(2, 3)
    s = ctx.word([(0, 2), (1, 3)])
    assert ctx.weight(s) == 1
    basis = HallBasis(2, 3)
    solver = LayerSolver(basis, ctx)
    assert solver.coordinates(ctx.homogeneous(s, 1), 1) == [2, 3]
