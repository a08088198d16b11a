"""Free nilpotent groups on Hall-basis generators.

The free group of rank r modulo its (c+1)-st lower central term has the
basic commutators of weight <= c as a polycyclic generating sequence with
all relative orders infinite.  Normal forms are computed through the
truncated series embedding: strip the element layer by layer, reading each
layer's coordinates in the Hall basis, until nothing remains.  The
conjugation relations obtained this way define the pc presentation used by
everything downstream (collection, subgroups, quotient towers).
"""

from __future__ import annotations

from dataclasses import dataclass

from .expansion import LayerSolver, SeriesContext
from .hall import HallBasis, default_generator_names, witt_rank
from .pcgroup import PcPresentation

DEFAULT_BASIS_CAP = 127


class BasisCapExceeded(RuntimeError):
    pass


@dataclass
class FreeNilpotentGroup:
    """A free nilpotent group with its Hall basis and series machinery."""

    rank: int
    class_bound: int
    basis: HallBasis
    presentation: PcPresentation
    ctx: SeriesContext
    solver: LayerSolver
    _series_of_gen: list

    def series_of_word(self, letters):
        """Series of a word over the original rank generators."""
        return self.ctx.word(letters)

    def series_of_basis_word(self, letters):
        """Series of a word over basis generators: (index, exponent) pairs."""
        out = self.ctx.one()
        for i, e in letters:
            out = self.ctx.mul(out, self.ctx.power(self._series_of_gen[i], e))
        return out

    def normal_form_of_series(self, series):
        """Exponent vector over the basis generators, by layer stripping."""
        ctx = self.ctx
        vec = [0] * len(self.basis)
        for k in range(1, self.class_bound + 1):
            w = ctx.weight(series)
            if w is None:
                break
            if w > k:
                continue
            assert w == k, "lower layer left behind during stripping"
            coords = self.solver.coordinates(ctx.homogeneous(series, k), k)
            indices = self.basis.indices_of_weight(k)
            strip = ctx.one()
            for idx, e in zip(indices, coords):
                vec[idx] = e
                if e:
                    strip = ctx.mul(strip, ctx.power(self._series_of_gen[idx], e))
            series = ctx.mul(ctx.inverse(strip), series)
        assert ctx.is_one(series), "element failed to strip to the identity"
        return tuple(vec)

    def element_from_word(self, letters):
        """Normal form of a word over the original rank generators."""
        return self.normal_form_of_series(self.series_of_word(letters))

    def weight_of_word(self, letters):
        return self.ctx.weight(self.series_of_word(letters))

    def layer_positions(self, k: int):
        return self.basis.indices_of_weight(k)


def free_nilpotent(rank: int, class_bound: int, names=None,
                   basis_cap: int = DEFAULT_BASIS_CAP) -> FreeNilpotentGroup:
    """Build the free nilpotent group of the given rank and class."""
    if rank < 1 or class_bound < 1:
        raise ValueError("rank and class must be >= 1")
    size = sum(witt_rank(rank, n) for n in range(1, class_bound + 1))
    if size > basis_cap:
        raise BasisCapExceeded(
            "Hall basis would have %d entries (cap %d)" % (size, basis_cap)
        )
    if names is None:
        names = default_generator_names(rank)
    basis = HallBasis(rank, class_bound, names)
    ctx = SeriesContext(rank, class_bound)
    solver = LayerSolver(basis, ctx)
    series_of_gen = [ctx.word(basis.free_word(i)) for i in range(len(basis))]

    gen_names = [basis.name(i) for i in range(len(basis))]
    pres = PcPresentation([None] * len(basis), names=gen_names)
    group = FreeNilpotentGroup(
        rank, class_bound, basis, pres, ctx, solver, series_of_gen
    )

    for i in range(len(basis)):
        wi = basis.weight_of(i)
        si = series_of_gen[i]
        si_inv = ctx.inverse(si)
        for j in range(i + 1, len(basis)):
            if wi + basis.weight_of(j) > class_bound:
                break
            sj = series_of_gen[j]
            conj = ctx.mul(ctx.mul(si_inv, sj), si)
            vec = group.normal_form_of_series(conj)
            if vec != pres.generator_vector(j):
                pres.set_conjugation(i, j, vec)
            conj = ctx.mul(ctx.mul(si, sj), si_inv)
            vec = group.normal_form_of_series(conj)
            if vec != pres.generator_vector(j):
                pres.set_conjugation(i, j, vec, sign=-1)

    # self-check: each basis generator collects to its own basis vector
    for i in range(len(basis)):
        assert group.normal_form_of_series(series_of_gen[i]) == pres.generator_vector(i)
    return group
