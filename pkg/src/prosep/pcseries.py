"""Series, quotient towers and witness searches over pc groups.

The tower G/gamma_{k,p}G of p-lower-central quotients is the constructive
face of the pro-p completion of a finitely generated group: every finite
p-quotient factors through a deep enough level, so a subgroup/coset can be
separated by SOME normal p-power-index subgroup iff it is separated by a
tower level.  Witness searches scan the tower up to a depth bound and
report either a verified witness level or a bounded-depth failure, which is
explicitly NOT a disproof.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from weakref import WeakKeyDictionary

from .pcgroup import PcElement, PcPresentation
from .pcquot import PcQuotient, kernel_of_restriction, quotient_by
from .pcsub import (
    InducedPresentation,
    PcSubgroup,
    is_normal,
    normal_closure,
    relative_index,
    whole_group,
)
from .snf import AbelianInvariants, abelian_invariants_of_relations

DEFAULT_WITNESS_DEPTH = 8
DEFAULT_SERIES_DEPTH = 20
DEFAULT_QUOTIENT_ORDER_CAP = 10**12


class NotNilpotentWithinBound(RuntimeError):
    """The lower central series failed to stabilize within the depth cap."""


def _commutator_layer_gens(p: PcPresentation, sub: PcSubgroup):
    gens = []
    for u in sub.sequence:
        for i in range(p.n):
            g = p.generator_vector(i)
            for c in (g, p.inv(g)):
                y = p.commutator(u, c)
                if any(y):
                    gens.append(y)
    return gens


def lower_central_series_pc(p: PcPresentation, depth_cap=DEFAULT_SERIES_DEPTH):
    """gamma_1 = G, gamma_{k+1} = [gamma_k, G], down to the trivial group.

    Raises NotNilpotentWithinBound when the series goes stable-nontrivial
    or runs past the cap, since only nilpotent inputs are supported here.
    """
    series = [whole_group(p)]
    for _ in range(depth_cap):
        current = series[-1]
        if current.is_trivial():
            return series
        gens = _commutator_layer_gens(p, current)
        nxt = normal_closure(p, gens)
        if nxt == current:
            raise NotNilpotentWithinBound(
                "lower central series is stable and nontrivial"
            )
        series.append(nxt)
    if series[-1].is_trivial():
        return series
    raise NotNilpotentWithinBound(
        "lower central series did not reach 1 within depth %d" % depth_cap
    )


def is_nilpotent_pc(p: PcPresentation, depth_cap=DEFAULT_SERIES_DEPTH) -> bool:
    try:
        lower_central_series_pc(p, depth_cap)
        return True
    except NotNilpotentWithinBound:
        return False


def nilpotency_class_pc(p: PcPresentation, depth_cap=DEFAULT_SERIES_DEPTH) -> int:
    return len(lower_central_series_pc(p, depth_cap)) - 1


def p_lower_central_subgroup(p: PcPresentation, prime: int, sub: PcSubgroup) -> PcSubgroup:
    """One step: [sub, G] * sub^p as a subgroup."""
    gens = _commutator_layer_gens(p, sub)
    for u in sub.sequence:
        gens.append(p.pow(u, prime))
    return normal_closure(p, gens)


class PQuotientTower:
    """Cached levels of the tower G/gamma_{k,p}G with their projections.

    Level k = 1 is the trivial quotient (gamma_{1,p} = G); the projections
    from G are direct, so tower coherence is a testable property rather
    than a construction detail.
    """

    def __init__(self, p: PcPresentation, prime: int,
                 order_cap=DEFAULT_QUOTIENT_ORDER_CAP):
        from .perm import is_prime

        if not is_prime(prime):
            raise ValueError("%d is not prime" % prime)
        self.presentation = p
        self.prime = prime
        self.order_cap = order_cap
        self._gammas = [None, whole_group(p)]  # 1-indexed
        self._quotients = {}

    def gamma(self, k: int) -> PcSubgroup:
        if k < 1:
            raise ValueError("levels start at 1")
        while len(self._gammas) <= k:
            self._gammas.append(
                p_lower_central_subgroup(
                    self.presentation, self.prime, self._gammas[-1]
                )
            )
        return self._gammas[k]

    def quotient(self, k: int) -> PcQuotient:
        if k not in self._quotients:
            quo = quotient_by(
                self.presentation, self.gamma(k), check_normal=False,
                order_cap=self.order_cap,
            )
            order = quo.group.group_order()
            assert order is not None, "p-lower-central quotients are finite"
            assert _is_p_power(order, self.prime)
            self._quotients[k] = quo
        return self._quotients[k]


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


_tower_cache: "WeakKeyDictionary[PcPresentation, dict]" = WeakKeyDictionary()


def tower(p: PcPresentation, prime: int, order_cap=DEFAULT_QUOTIENT_ORDER_CAP) -> PQuotientTower:
    per_group = _tower_cache.setdefault(p, {})
    if prime not in per_group:
        per_group[prime] = PQuotientTower(p, prime, order_cap)
    return per_group[prime]


def p_quotient(p: PcPresentation, prime: int, k: int,
               order_cap=DEFAULT_QUOTIENT_ORDER_CAP) -> PcQuotient:
    """The finite p-group G/gamma_{k,p}G with its projection."""
    if k < 1:
        raise ValueError("level must be >= 1")
    return tower(p, prime, order_cap).quotient(k)


@dataclass
class WitnessReport:
    """Outcome of a separability or residual-p witness search.

    status "success" carries the first working level and verification data;
    "exhausted" means every level up to k_max failed -- a bounded-depth
    statement only.
    """

    kind: str
    prime: int
    status: str
    level: int
    k_max: int
    details: dict = field(default_factory=dict)
    witness_subgroup: PcSubgroup = None
    failure_element: tuple = None

    @property
    def succeeded(self) -> bool:
        return self.status == "success"


def separability_witness(
    p: PcPresentation,
    sub: PcSubgroup,
    lam: PcSubgroup,
    prime: int,
    k_max: int = DEFAULT_WITNESS_DEPTH,
    verify: bool = True,
) -> WitnessReport:
    """Search the tower for a level separating H from Lambda.

    Level k works iff ker(H -> G/gamma_{k,p}) lies inside Lambda, tested by
    the index identity [phi(H) : phi(Lambda)] = [H : Lambda] in the finite
    quotient.  Success of the scan is complete for normal p-power-index
    witnesses: any such witness subgroup contains some gamma_{k,p}.
    """
    if not lam <= sub:
        raise ValueError("Lambda must be a subgroup of H")
    target = relative_index(p, sub, lam)
    if target is None or not _is_p_power(target, prime):
        raise ValueError("[H : Lambda] must be a finite power of %d" % prime)
    tw = tower(p, prime)
    failures = {}
    for k in range(1, k_max + 1):
        quo = tw.quotient(k)
        phi_h = quo.project_subgroup(sub)
        phi_lam = quo.project_subgroup(lam)
        if phi_h.order() // phi_lam.order() == target:
            details = {
                "index": target,
                "quotient_order": quo.group.group_order(),
            }
            if verify:
                n = tw.gamma(k)
                assert is_normal(p, n)
                meet = kernel_of_restriction(p, sub, quo)
                assert all(lam.contains_vector(u) for u in meet.sequence)
                details["verified"] = ["normal", "p-power index", "meet inside Lambda"]
            return WitnessReport(
                kind="separability",
                prime=prime,
                status="success",
                level=k,
                k_max=k_max,
                details=details,
                witness_subgroup=tw.gamma(k),
            )
        meet = kernel_of_restriction(p, sub, quo)
        for u in meet.sequence:
            if not lam.contains_vector(u):
                failures[k] = u
                break
    return WitnessReport(
        kind="separability",
        prime=prime,
        status="exhausted",
        level=k_max,
        k_max=k_max,
        details={"index": target, "failures_by_level": failures},
        failure_element=failures.get(max(failures)) if failures else None,
    )


def residually_p_witness(
    p: PcPresentation,
    x,
    prime: int,
    k_max: int = DEFAULT_WITNESS_DEPTH,
) -> WitnessReport:
    """Smallest tower level where x survives, or a bounded-depth failure."""
    if isinstance(x, PcElement):
        x = x.vector
    if not any(x):
        raise ValueError("x must be a nontrivial element")
    tw = tower(p, prime)
    for k in range(1, k_max + 1):
        quo = tw.quotient(k)
        if any(quo.project_vector(x)):
            return WitnessReport(
                kind="residual",
                prime=prime,
                status="success",
                level=k,
                k_max=k_max,
                details={"quotient_order": quo.group.group_order()},
                witness_subgroup=tw.gamma(k),
            )
    return WitnessReport(
        kind="residual",
        prime=prime,
        status="exhausted",
        level=k_max,
        k_max=k_max,
        failure_element=tuple(x),
    )


def layer_invariants(p: PcPresentation, depth_cap=DEFAULT_SERIES_DEPTH):
    """Abelian invariants of the lower-central layers of a nilpotent group."""
    series = lower_central_series_pc(p, depth_cap)
    out = []
    for upper, lower in zip(series, series[1:]):
        quo = quotient_by(p, lower, check_normal=False)
        image = quo.project_subgroup(upper)
        out.append(abelian_invariants_of_subgroup(quo.group, image))
    return out


def abelian_invariants_of_subgroup(p: PcPresentation, sub: PcSubgroup) -> AbelianInvariants:
    """Invariants of an abelian subgroup given by its induced sequence."""
    induced = InducedPresentation(p, sub)
    g = induced.group
    for (i, j, s), vec in g.conjs.items():
        if vec != g.generator_vector(j):
            raise ValueError("subgroup is not abelian")
    rows = []
    for i, o in enumerate(g.orders):
        if o is None:
            continue
        row = [0] * g.n
        row[i] = o
        w = g.powers.get(i)
        if w is not None:
            row = [a - b for a, b in zip(row, w)]
        rows.append(row)
    return abelian_invariants_of_relations(g.n, rows)


def torsion_primes(p: PcPresentation, depth_cap=DEFAULT_SERIES_DEPTH):
    """Primes dividing the torsion of the lower-central layers.

    Only defined for nilpotent groups (the series must reach 1).  For
    torsion-free nilpotent groups this is empty, matching the dichotomy
    between residually-p for all p and residually-P for the torsion primes.
    """
    from .perm import prime_factors

    primes = set()
    for inv in layer_invariants(p, depth_cap):
        for d in inv.torsion:
            primes.update(prime_factors(d))
    return primes


def abelian_invariants_of_presentation(p: PcPresentation) -> AbelianInvariants:
    """Invariants of an abelian pc group (all conjugations trivial)."""
    return abelian_invariants_of_subgroup(p, whole_group(p))


def is_cyclic_quotient(p: PcPresentation) -> bool:
    """Is a finite abelian-or-not pc group cyclic? (abelian + one invariant)"""
    for (i, j, s), vec in p.conjs.items():
        if vec != p.generator_vector(j):
            return False
    inv = abelian_invariants_of_presentation(p)
    return inv.free_rank == 0 and len(inv.torsion) <= 1
