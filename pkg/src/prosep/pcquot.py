"""Quotients of pc groups by normal subgroups given as induced sequences.

The quotient presentation keeps the parent's generators: a position with a
pivot of leading exponent e gets relative order e (dropped entirely when
e = 1), a pivot-free position keeps its old order.  Elements map by
reduction to the canonical coset representative, which zeroes exactly the
dropped coordinates, so reindexing is a bijection onto the quotient's
normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .pcgroup import PcElement, PcPresentation
from .pcsub import PcSubgroup, _lead, is_normal


class QuotientCapExceeded(RuntimeError):
    pass


@dataclass
class PcQuotient:
    parent: PcPresentation
    kernel: PcSubgroup
    group: PcPresentation
    kept: list
    position_of: dict = field(init=False)

    def __post_init__(self):
        self.position_of = {i: a for a, i in enumerate(self.kept)}

    def project_vector(self, x):
        reduced = self.kernel.reduce(x)
        out = []
        for i in range(self.parent.n):
            if i in self.position_of:
                out.append(reduced[i])
            elif reduced[i]:
                raise AssertionError("reduction left weight on a dropped generator")
        return tuple(out)

    def project(self, element: PcElement) -> PcElement:
        return PcElement(self.group, self.project_vector(element.vector))

    def section_vector(self, v):
        out = [0] * self.parent.n
        for a, i in enumerate(self.kept):
            out[i] = v[a]
        return tuple(out)

    def project_subgroup(self, sub: PcSubgroup) -> PcSubgroup:
        return PcSubgroup(self.group, [self.project_vector(u) for u in sub.sequence])

    def preimage_subgroup(self, sub: PcSubgroup) -> PcSubgroup:
        gens = [self.section_vector(u) for u in sub.sequence]
        gens.extend(self.kernel.sequence)
        return PcSubgroup(self.parent, gens)


def quotient_by(parent: PcPresentation, kernel: PcSubgroup, check_normal=True,
                order_cap=None) -> PcQuotient:
    """The quotient presentation G/N with its projection data."""
    if check_normal and not is_normal(parent, kernel):
        raise ValueError("kernel must be a normal subgroup")
    kept = []
    new_orders = []
    for i in range(parent.n):
        u = kernel.pivots.get(i)
        if u is None:
            kept.append(i)
            new_orders.append(parent.orders[i])
        elif u[i] > 1:
            kept.append(i)
            new_orders.append(u[i])
    if order_cap is not None:
        total = 1
        for o in new_orders:
            if o is None:
                break
            total *= o
        else:
            if total > order_cap:
                raise QuotientCapExceeded(
                    "quotient order %d exceeds cap %d" % (total, order_cap)
                )
    names = [parent.names[i] for i in kept]
    group = PcPresentation(new_orders, names=names,
                           collection_cap=parent.collection_cap)
    quo = PcQuotient(parent, kernel, group, kept)
    for a, i in enumerate(kept):
        o = new_orders[a]
        if o is not None:
            w = parent.pow(parent.generator_vector(i), o)
            group.set_power(a, quo.project_vector(w))
    for b, j in enumerate(kept):
        gj = parent.generator_vector(j)
        for a, i in enumerate(kept):
            if i >= j:
                break
            gi = parent.generator_vector(i)
            img = quo.project_vector(parent.conjugate(gj, gi))
            if img != group.generator_vector(b):
                group.set_conjugation(a, b, img)
            img = quo.project_vector(parent.conjugate(gj, parent.inv(gi)))
            if img != group.generator_vector(b):
                group.set_conjugation(a, b, img, sign=-1)
    return quo


class ShadowEchelon:
    """Echelon pivots for the image of a subgroup, with parent shadows.

    Completes the image of ``sub`` under a quotient map while tracking, for
    every pivot, a parent element mapping onto it.  Image elements that die
    during completion contribute their shadows to the kernel generators, so
    this one structure yields both the kernel of the restriction and a way
    to express image elements through parent representatives.
    """

    def __init__(self, parent: PcPresentation, sub: PcSubgroup, quo: PcQuotient):
        self.parent = parent
        self.sub = sub
        self.quo = quo
        self.pivots = {}
        self.kernel_gens = []
        for u in sub.sequence:
            self._record_or_insert((quo.project_vector(u), u))
        self._sweep()

    def _sift(self, pair):
        q = self.quo.group
        p = self.parent
        qv, sv = pair
        for i in range(q.n):
            if qv[i] == 0:
                continue
            hit = self.pivots.get(i)
            if hit is None:
                return (qv, sv), i
            qu, su = hit
            k = qv[i] // qu[i]
            if k:
                qv = q.mul(q.pow(qu, -k), qv)
                sv = p.mul(p.pow(su, -k), sv)
            if qv[i]:
                return (qv, sv), i
        return (qv, sv), None

    def _record_or_insert(self, pair):
        from .pcgroup import xgcd

        q = self.quo.group
        p = self.parent
        work = [pair]
        while work:
            (qv, sv), lead = self._sift(work.pop())
            if lead is None:
                if _lead(sv) is not None:
                    self.kernel_gens.append(sv)
                continue
            current = self.pivots.get(lead)
            if current is None:
                o = q.orders[lead]
                e = qv[lead]
                if o is not None:
                    d, s_coef, _ = xgcd(e, o)
                    if d != e:
                        a = s_coef % (o // d)
                        work.append((qv, sv))
                        qv, sv = q.pow(qv, a), p.pow(sv, a)
                    work.append((q.pow(qv, (o // qv[lead])),
                                 p.pow(sv, (o // qv[lead]))))
                elif e < 0:
                    qv, sv = q.inv(qv), p.inv(sv)
                self.pivots[lead] = (qv, sv)
            else:
                qu, su = current
                d, a, b = xgcd(qu[lead], qv[lead])
                combo = (q.mul(q.pow(qu, a), q.pow(qv, b)),
                         p.mul(p.pow(su, a), p.pow(sv, b)))
                del self.pivots[lead]
                work.extend([combo, current, (qv, sv)])

    def _sweep(self):
        q = self.quo.group
        p = self.parent
        while True:
            extra = []
            items = list(self.pivots.values())
            for qv, sv in items:
                cands = [(q.inv(qv), p.inv(sv))]
                i = _lead(qv)
                o = q.orders[i]
                if o is not None:
                    t = o // qv[i]
                    cands.append((q.pow(qv, t), p.pow(sv, t)))
                for qw, sw in items:
                    cands.append((q.mul(qv, qw), p.mul(sv, sw)))
                for cand in cands:
                    (rq, rs), lead = self._sift(cand)
                    if lead is not None:
                        extra.append((rq, rs))
                    elif _lead(rs) is not None:
                        self.kernel_gens.append(rs)
            if not extra:
                return
            for pair in extra:
                self._record_or_insert(pair)

    def express(self, qx):
        """A parent element of ``sub`` mapping onto qx (raises if outside)."""
        from .pcsub import MembershipError

        q = self.quo.group
        p = self.parent
        shadow = p.identity
        for i in range(q.n):
            if qx[i] == 0:
                continue
            hit = self.pivots.get(i)
            if hit is None:
                raise MembershipError("image element lies outside the image")
            qu, su = hit
            k = qx[i] // qu[i]
            if k:
                shadow = p.mul(shadow, p.pow(su, k))
                qx = q.mul(q.pow(qu, -k), qx)
            if qx[i]:
                raise MembershipError("image element lies outside the image")
        return shadow

    def kernel_subgroup(self) -> PcSubgroup:
        """sub meet ker(quo), saturated to a normal subgroup of sub."""
        p = self.parent
        kernel = PcSubgroup(p, self.kernel_gens)
        while True:
            extra = []
            for u in kernel.sequence:
                for c in self.sub.sequence:
                    for cc in (c, p.inv(c)):
                        y = p.conjugate(u, cc)
                        if not kernel.contains_vector(y):
                            extra.append(y)
            if not extra:
                return kernel
            kernel = PcSubgroup(p, list(kernel.pivots.values()) + extra)


def kernel_of_restriction(parent: PcPresentation, sub: PcSubgroup,
                          quo: PcQuotient) -> PcSubgroup:
    """The intersection of ``sub`` with the quotient kernel."""
    return ShadowEchelon(parent, sub, quo).kernel_subgroup()
