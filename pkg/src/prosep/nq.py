"""Nilpotent quotients of finitely presented groups, and their layers.

For G = F/<<R>> the class-c quotient G/gamma_{c+1}G is the free nilpotent
group of the same rank modulo the normal closure of the relator images.
Because the ambient group is nilpotent, the closure is reached by
saturating under commutation with the original generators only.  The
abelian invariants of the lower-central layers -- the fingerprint -- fall
out of the closure's induced sequence: the weight-k slices of the pivots
with weight-k leads span exactly the relation lattice of layer k.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .expansion import LayerSolver, SeriesContext
from .freenil import FreeNilpotentGroup, free_nilpotent
from .hall import HallBasis, witt_rank
from .pcquot import PcQuotient, quotient_by
from .pcsub import PcSubgroup, normal_closure
from .pcseries import p_quotient
from .presentations import FpPresentation
from .snf import AbelianInvariants, abelian_invariants_of_relations
from .words import Word

DEFAULT_CLASS_CAP = 5
DEFAULT_RANK_CAP = 6


class NqCapExceeded(RuntimeError):
    pass


class TrivialWordError(ValueError):
    pass


class WeightExceedsBound(ValueError):
    pass


@dataclass(frozen=True)
class Fingerprint:
    """Abelian invariants of the layers gamma_k/gamma_{k+1}, k = 1..c.

    Layer 1 is the abelianization.  Equality of fingerprints is a
    NECESSARY condition for two groups to share their nilpotent quotients;
    it is not claimed to be sufficient.
    """

    class_bound: int
    layers: tuple

    def truncate(self, c: int) -> "Fingerprint":
        if c > self.class_bound:
            raise ValueError("cannot truncate upward")
        return Fingerprint(c, self.layers[:c])

    def __str__(self):
        return "; ".join(str(layer) for layer in self.layers)


@dataclass
class NqResult:
    presentation: FpPresentation
    class_bound: int
    ambient: FreeNilpotentGroup
    closure: PcSubgroup
    quotient: PcQuotient
    fingerprint: Fingerprint

    @property
    def group(self):
        return self.quotient.group


def nq(fp: FpPresentation, class_bound: int,
       class_cap: int = DEFAULT_CLASS_CAP, rank_cap: int = DEFAULT_RANK_CAP,
       basis_cap=None) -> NqResult:
    """The class-c nilpotent quotient of a finitely presented group.

    Caps are configuration, not architecture: pass larger ones explicitly
    when the collection cost is acceptable.
    """
    if class_bound < 1:
        raise ValueError("class bound must be >= 1")
    if class_bound > class_cap:
        raise NqCapExceeded(
            "class %d exceeds cap %d (raise class_cap to override)"
            % (class_bound, class_cap)
        )
    if fp.rank > rank_cap:
        raise NqCapExceeded(
            "rank %d exceeds cap %d (raise rank_cap to override)"
            % (fp.rank, rank_cap)
        )
    kwargs = {} if basis_cap is None else {"basis_cap": basis_cap}
    ambient = free_nilpotent(fp.rank, class_bound, names=fp.generators, **kwargs)
    pres = ambient.presentation
    relator_vectors = [
        ambient.element_from_word(letters) for letters in fp.relator_letters()
    ]
    relator_vectors = [v for v in relator_vectors if any(v)]
    closure = normal_closure(pres, relator_vectors, conjugating=range(fp.rank))
    fingerprint = _fingerprint_of_closure(ambient, closure)
    quo = quotient_by(pres, closure, check_normal=False)
    return NqResult(fp, class_bound, ambient, closure, quo, fingerprint)


def _fingerprint_of_closure(ambient: FreeNilpotentGroup, closure: PcSubgroup) -> Fingerprint:
    layers = []
    for k in range(1, ambient.class_bound + 1):
        positions = ambient.layer_positions(k)
        rows = []
        for i, u in closure.pivots.items():
            if ambient.basis.weight_of(i) == k:
                rows.append([u[j] for j in positions])
        layers.append(abelian_invariants_of_relations(len(positions), rows))
    return Fingerprint(ambient.class_bound, tuple(layers))


@dataclass
class ComparisonReport:
    """Layer-by-layer fingerprint comparison plus p-quotient order checks.

    A necessary-condition report: mismatches rule out shared nilpotent
    quotients, agreement does not certify them (and the report says so).
    """

    left_name: str
    right_name: str
    class_bound: int
    layers_equal: list
    p_quotient_orders: dict
    all_equal: bool
    caveat: str = (
        "fingerprint and quotient-order equality is necessary, not "
        "sufficient, for sharing nilpotent quotients"
    )


def fingerprint_compare(left: NqResult, right: NqResult, primes=()) -> ComparisonReport:
    if left.class_bound != right.class_bound:
        raise ValueError("compare nq results at the same class")
    c = left.class_bound
    layers_equal = [
        left.fingerprint.layers[k] == right.fingerprint.layers[k] for k in range(c)
    ]
    p_orders = {}
    agree = all(layers_equal)
    for p in primes:
        entries = []
        for k in range(1, c + 1):
            lo = p_quotient(left.group, p, k).group.group_order()
            ro = p_quotient(right.group, p, k).group.group_order()
            entries.append((lo, ro, lo == ro))
            agree = agree and lo == ro
        p_orders[p] = entries
    return ComparisonReport(
        left_name=left.presentation.name,
        right_name=right.presentation.name,
        class_bound=c,
        layers_equal=layers_equal,
        p_quotient_orders=p_orders,
        all_equal=agree,
    )


@dataclass
class RelatorReport:
    """Where a word sits in the lower-central filtration of a free group.

    ``weight`` is the largest k with w in gamma_k F (equivalently the first
    layer where it shows), ``coordinates`` its image in the weight-k Hall
    basis, and ``is_proper_power`` whether that image is a proper multiple
    in the free abelian layer.
    """

    word: Word
    rank: int
    weight: int
    coordinates: list
    is_proper_power: bool


def relator_analysis(word: Word, rank: int, c_max: int, names=None) -> RelatorReport:
    if word.is_identity():
        raise TrivialWordError("word is trivial in the free group")
    if names is None:
        names = _infer_names(word, rank)
    index_of = {g: i for i, g in enumerate(names)}
    missing = word.generators() - set(names)
    if missing:
        raise ValueError(
            "word uses generators %s outside rank %d (%s)"
            % (sorted(missing), rank, ", ".join(names))
        )
    letters = word.letters(index_of)
    ctx = SeriesContext(rank, c_max)
    series = ctx.word(letters)
    weight = ctx.weight(series)
    if weight is None:
        raise WeightExceedsBound(
            "word lies in gamma_%d of the free group; raise the class bound"
            % (c_max + 1)
        )
    basis = HallBasis(rank, weight, names)
    solver = LayerSolver(basis, ctx)
    coords = solver.coordinates(ctx.homogeneous(series, weight), weight)
    g = 0
    for c in coords:
        g = gcd(g, abs(c))
    return RelatorReport(
        word=word,
        rank=rank,
        weight=weight,
        coordinates=coords,
        is_proper_power=g > 1,
    )


def _infer_names(word: Word, rank: int):
    """Default letters a, b, c...; numbered a1..aN when the word uses them."""
    from .hall import default_generator_names

    used = word.generators()
    numbered = ["a%d" % (i + 1) for i in range(rank)]
    if used and used <= set(numbered):
        return numbered
    return default_generator_names(rank)


def free_group_fingerprint(rank: int, class_bound: int) -> Fingerprint:
    """The expected fingerprint of a free group: Witt ranks, no torsion."""
    return Fingerprint(
        class_bound,
        tuple(
            AbelianInvariants(witt_rank(rank, k)) for k in range(1, class_bound + 1)
        ),
    )
