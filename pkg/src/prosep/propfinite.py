"""Pro-p structure of finite groups.

For a finite group the pro-p completion collapses to the maximal p-quotient
G/O^p(G), where the p-residual O^p(G) is the stable term of the p-lower
central series gamma_{1,p} = G, gamma_{n+1,p} = [gamma_{n,p}, G] *
gamma_{n,p}^p.  A subgroup inclusion H <= G induces an injection of pro-p
completions exactly when H meets O^p(G) in O^p(H); that equation is the
entire embeddability test here, and its failures are returned as concrete
witness elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .perm import (
    FiniteGroup,
    Quotient,
    SubgroupHandle,
    all_subgroups,
    is_nilpotent,
    is_normal,
    is_prime,
    mulclose,
    prime_factors,
    quotient,
)


def _require_prime(p: int):
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)


def p_lower_central_series(group: FiniteGroup, p: int):
    """gamma_{n+1,p} = [gamma_{n,p}, G] * gamma_{n,p}^p.

    Each step is the normal closure of the generator commutators and
    generator p-th powers, which generate the same subgroup as the full
    elementwise products would.  The list ends at the stable term; if that
    term is nontrivial it appears twice, witnessing stability.
    """
    from .perm import minimal_generating_sequence, normal_closure

    _require_prime(p)
    series = [group.whole()]
    while True:
        current = series[-1]
        seeds = []
        for x in minimal_generating_sequence(current.as_group()):
            for g in group.generators:
                c = x.commutator(g)
                if not c.is_identity():
                    seeds.append(c)
            xp = x**p
            if not xp.is_identity():
                seeds.append(xp)
        nxt = normal_closure(group, seeds)
        series.append(nxt)
        if nxt.is_trivial() or nxt.elements == current.elements:
            return series


def p_residual(group: FiniteGroup, p: int) -> SubgroupHandle:
    """O^p(G): smallest normal subgroup with p-group quotient.

    Memoized on the group object; groups are immutable so the cached handle
    stays valid for the group's lifetime.
    """
    cache = getattr(group, "_p_residual_cache", None)
    if cache is None:
        cache = group._p_residual_cache = {}
    if p not in cache:
        cache[p] = p_lower_central_series(group, p)[-1]
    return cache[p]


def p_residual_by_intersection(group: FiniteGroup, p: int, cap=None) -> SubgroupHandle:
    """O^p(G) as the intersection of all normal p-power-index subgroups.

    Independent route used for the triple-equivalence checks; needs the
    subgroup lattice.
    """
    _require_prime(p)
    kwargs = {} if cap is None else {"cap": cap}
    current = set(group.elements())
    for handle in all_subgroups(group, **kwargs):
        if not is_normal(group, handle):
            continue
        if _is_p_power(handle.index, p):
            current &= handle.elements
    return SubgroupHandle(group, tuple(sorted(current)))


def p_residual_by_maximal_quotient(group: FiniteGroup, p: int, cap=None) -> SubgroupHandle:
    """O^p(G) as the kernel of the map onto the largest p-group quotient."""
    _require_prime(p)
    kwargs = {} if cap is None else {"cap": cap}
    best = None
    for handle in all_subgroups(group, **kwargs):
        if not is_normal(group, handle):
            continue
        if _is_p_power(handle.index, p):
            if best is None or handle.order < best.order:
                best = handle
    assert best is not None  # the whole group always qualifies
    return best


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass
class PResidual:
    """The pro-p completion data of a finite group.

    ``completion`` is the finite p-group G/O^p(G) and ``projection`` the
    verified quotient map onto it.
    """

    group: FiniteGroup
    prime: int
    residual: SubgroupHandle
    completion: FiniteGroup
    projection: Quotient

    def __post_init__(self):
        assert _is_p_power(self.completion.order, self.prime)


def pro_p_completion(group: FiniteGroup, p: int) -> PResidual:
    res = p_residual(group, p)
    q = quotient(group, res)
    return PResidual(group, p, res, q.group, q)


def is_pro_p_embeddable(group: FiniteGroup, handle: SubgroupHandle, p: int):
    """Does H -> G induce an injection of pro-p completions?

    For finite groups the induced map is H/O^p(H) -> G/O^p(G) and its
    kernel is (H, intersected with O^p(G)) over O^p(H).  Returns
    ``(True, None)`` or ``(False, witness)`` with a concrete element of the
    intersection that lies outside O^p(H).
    """
    _require_prime(p)
    if handle.parent is not group:
        raise ValueError("subgroup handle does not belong to this group")
    res_g = p_residual(group, p)
    res_h = p_residual(handle.as_group(), p)
    meet = handle.elements & res_g.elements
    if meet == res_h.elements:
        return True, None
    extra = sorted(meet - res_h.elements)
    assert extra, "O^p(H) must sit inside H meet O^p(G)"
    return False, extra[0]


class WitnessSearcher:
    """Precomputed candidate set for the normal p-power-index witnesses.

    Every normal subgroup of p-power index contains O^p(G), so the
    candidates are exactly the preimages of the normal subgroups of the
    finite p-group G/O^p(G); they are tried by ascending index, so the
    first hit is the cheapest witness.  Build once per (G, p) and reuse
    across many (H, Lambda) queries.
    """

    def __init__(self, group: FiniteGroup, p: int, cap=None):
        _require_prime(p)
        self.group = group
        self.p = p
        comp = pro_p_completion(group, p)
        kwargs = {} if cap is None else {"cap": cap}
        candidates = [
            nbar for nbar in all_subgroups(comp.completion, **kwargs)
            if is_normal(comp.completion, nbar)
        ]
        candidates.sort(key=lambda nbar: (nbar.index, nbar.sorted_elements()))
        self.preimages = []
        for nbar in candidates:
            self.preimages.append(frozenset(
                x for x in group.elements()
                if comp.projection.project(x) in nbar.elements
            ))

    def find(self, handle: SubgroupHandle, lam: SubgroupHandle) -> Optional[SubgroupHandle]:
        if not (lam.elements <= handle.elements):
            raise ValueError("Lambda must be a subgroup of H")
        if not all(x.conjugate(g) in lam.elements
                   for g in handle.generators for x in lam.generators):
            raise ValueError("Lambda must be normal in H")
        if not _is_p_power(handle.order // lam.order, self.p):
            raise ValueError("[H : Lambda] must be a power of %d" % self.p)
        for preimage in self.preimages:
            if preimage & handle.elements <= lam.elements:
                return SubgroupHandle(self.group, tuple(sorted(preimage)))
        return None


def embeddability_witness(
    group: FiniteGroup,
    handle: SubgroupHandle,
    lam: SubgroupHandle,
    p: int,
    cap=None,
    searcher: Optional[WitnessSearcher] = None,
) -> Optional[SubgroupHandle]:
    """A normal p-power-index N <= G with N meet H inside Lambda, if any."""
    if searcher is None:
        searcher = WitnessSearcher(group, p, cap)
    return searcher.find(handle, lam)


@dataclass
class CVerdict:
    """Outcome of the nilpotency <=> all-subgroups-embeddable verification.

    ``counterexample`` is None exactly when the group is nilpotent;
    otherwise it is (subgroup, prime, witness) and ``recheck`` confirms the
    witness violates the embeddability equation.
    """

    group: FiniteGroup
    nilpotent: bool
    counterexample: Optional[tuple] = None

    def recheck(self) -> bool:
        if self.counterexample is None:
            return is_nilpotent(self.group)
        handle, p, witness = self.counterexample
        res_g = p_residual(self.group, p)
        res_h = p_residual(handle.as_group(), p)
        return (
            witness in handle.elements
            and witness in res_g.elements
            and witness not in res_h.elements
        )


def theorem_c_verify(group: FiniteGroup, cap=None) -> CVerdict:
    """Check nilpotency against pro-p embeddability of every subgroup.

    The two sides are computed independently: nilpotency from the lower
    central series, embeddability by running the O^p equation over the whole
    subgroup lattice for every prime dividing the order.  They must agree;
    disagreement raises, since it would falsify the equivalence this
    function exists to instantiate.

    Counterexample tie-breaking is deterministic: smallest prime first,
    then the first failing subgroup in lattice-enumeration order.
    """
    nilp = is_nilpotent(group)
    kwargs = {} if cap is None else {"cap": cap}
    lattice = all_subgroups(group, **kwargs)
    counterexample = None
    for p in sorted(prime_factors(group.order)):
        res_g = p_residual(group, p)
        for handle in lattice:
            res_h = p_residual(handle.as_group(), p)
            meet = handle.elements & res_g.elements
            if meet != res_h.elements:
                witness = min(sorted(meet - res_h.elements))
                counterexample = (handle, p, witness)
                break
        if counterexample:
            break
    if nilp and counterexample is not None:
        raise AssertionError("nilpotent group produced an embeddability failure")
    if not nilp and counterexample is None:
        raise AssertionError("non-nilpotent group with all subgroups embeddable")
    return CVerdict(group, nilp, counterexample)


@dataclass
class RadicalResult:
    """The P-radical set {g : g^n in H for a P-number n} and its shape.

    Outside nilpotent groups the set may fail to be a subgroup; that is
    reported, not raised.  ``index`` is filled only when the set is a
    subgroup.
    """

    elements: frozenset
    is_subgroup: bool
    index: Optional[int]
    witnesses: dict


def p_radical_finite(group: FiniteGroup, handle: SubgroupHandle, primes) -> RadicalResult:
    """Compute R_P(H) in a finite group by cyclic-subgroup analysis.

    g has a P-number power inside H iff the index [<g> : H meet <g>] is a
    P-number, in which case that index is the least P-witness exponent.
    The empty prime set gives R_{}(H) = H (only n = 1 qualifies).
    """
    primes = sorted(set(primes))
    for p in primes:
        _require_prime(p)
    members = {}
    for g in group.elements():
        cyc = frozenset(mulclose([g], group.order_cap, group.degree))
        t = len(cyc) // len(cyc & handle.elements)
        if _is_supported(t, primes):
            members[g] = t
    els = frozenset(members)
    closed = all(a * b in els for a in els for b in els)
    index = len(els) // handle.order if closed else None
    return RadicalResult(els, closed, index, members)


def _is_supported(n: int, primes) -> bool:
    for p in primes:
        while n % p == 0:
            n //= p
    return n == 1


def is_p_number(n: int, primes) -> bool:
    return _is_supported(n, sorted(set(primes)))


def automorphism_images(group: FiniteGroup):
    """All automorphisms of a small group, as full element maps.

    Candidate generator images are restricted to elements of matching order
    before the homomorphism extension is attempted; still exponential, so
    keep |G| small (the callers cap at 24).
    """
    from itertools import product as iproduct

    from .perm import AutomorphismError, automorphism_from_images, minimal_generating_sequence

    els = group.elements()
    gens = minimal_generating_sequence(group)
    if not gens:
        return [{group.identity: group.identity}]
    reduced = FiniteGroup(tuple(gens), degree=group.degree, order_cap=group.order_cap)
    reduced._elements = group._elements
    reduced._element_set = group._element_set
    pools = []
    for g in gens:
        o = g.order()
        pools.append([x for x in els if x.order() == o])
    out = []
    for images in iproduct(*pools):
        try:
            full = automorphism_from_images(
                reduced, dict(zip(reduced.generators, images))
            )
        except AutomorphismError:
            continue
        out.append(full)
    return out


def characteristic_subgroups_of_p_power_index(
    handle: SubgroupHandle, p: int, auto_cap: int = 24
):
    """Characteristic Lambda <| H with [H : Lambda] a power of p.

    Detected by brute force over Aut(H) when |H| <= auto_cap; larger groups
    fall back to the verbal subgroups given by the p-lower central terms of
    H, which are characteristic by construction.
    """
    _require_prime(p)
    h_group = handle.as_group()
    out = []
    if handle.order <= auto_cap:
        autos = automorphism_images(h_group)
        for sub in all_subgroups(h_group, cap=max(handle.order, 1)):
            if not _is_p_power(handle.order // sub.order, p):
                continue
            if not is_normal(h_group, sub):
                continue
            if all(
                frozenset(full[x] for x in sub.elements) == sub.elements
                for full in autos
            ):
                out.append(SubgroupHandle(handle.parent, tuple(sub.generators)))
    else:
        for term in p_lower_central_series(h_group, p):
            if _is_p_power(handle.order // term.order, p):
                out.append(SubgroupHandle(handle.parent, tuple(term.generators)))
    return out


def semidirect_equivalences(sd, p_handle: SubgroupHandle, q_handle: SubgroupHandle):
    """The four conditions tied together for P x| Q with coprime orders.

    Returns a dict with one boolean per condition: trivial action, direct
    product (Q normal), nilpotent, and pro-p embeddability of P for every
    prime dividing |P|.  The acceptance suite asserts the four agree.
    """
    group = sd.group
    trivial_action = all(
        x * y == y * x
        for x in sd.embed_p.values()
        for y in sd.embed_q.values()
    )
    direct = is_normal(group, q_handle)
    nilp = is_nilpotent(group)
    embeddable = all(
        is_pro_p_embeddable(group, p_handle, p)[0]
        for p in prime_factors(p_handle.order)
    )
    return {
        "trivial_action": trivial_action,
        "direct_product": direct,
        "nilpotent": nilp,
        "p_embeddable": embeddable,
    }
