"""Subgroups of pc groups via induced (echelon) generating sequences.

A subgroup is stored as a sequence of normal-form vectors with strictly
increasing leading positions.  The sequence is completed until it is closed
under products, inverses, deep powers and (on request) conjugation, which
makes non-commutative sifting a correct membership test.  Leading exponents
are canonicalized to positive gcd representatives and deeper coordinates are
reduced modulo later pivots, so equal subgroups have equal sequences.
"""

from __future__ import annotations

from .pcgroup import MembershipError, PcElement, PcPresentation, xgcd


def _lead(vec):
    for i, e in enumerate(vec):
        if e:
            return i
    return None


class PcSubgroup:
    """A subgroup of a pc group, closed under the sifting relations."""

    def __init__(self, presentation: PcPresentation, generators=(), _trusted=None):
        self.presentation = presentation
        self.pivots = {}  # position -> vector
        if _trusted is not None:
            for vec in _trusted:
                self.pivots[_lead(vec)] = vec
            return
        vectors = []
        for g in generators:
            if isinstance(g, PcElement):
                if g.presentation is not presentation:
                    raise ValueError("generator lives over another presentation")
                vectors.append(g.vector)
            else:
                vectors.append(presentation._as_vector(g))
        self._complete(vectors)
        self._canonicalize()

    # -- construction -------------------------------------------------------

    def _complete(self, seed):
        p = self.presentation
        work = list(seed)
        while True:
            while work:
                x = work.pop()
                x = self._sift_partial(x)
                i = _lead(x)
                if i is None:
                    continue
                e = x[i]
                current = self.pivots.get(i)
                if current is None:
                    x, consequences = self._normalize_pivot(i, x)
                    self.pivots[i] = x
                    work.extend(consequences)
                else:
                    f = current[i]
                    d, a, b = xgcd(f, e)
                    assert 0 < d < f, "sifting should have reduced a multiple"
                    combo = p.mul(p.pow(current, a), p.pow(x, b))
                    assert combo[i] % d == 0
                    del self.pivots[i]
                    work.extend([combo, current, x])
            # closure sweep: the pivot set must absorb products, inverses
            # and deep powers, otherwise sifting is not a membership test
            for cand in self._closure_candidates():
                if _lead(self.reduce(cand)) is not None:
                    work.append(cand)
            if not work:
                return

    def _normalize_pivot(self, i, x):
        """Positive-gcd leading exponent; returns (pivot, extra work items)."""
        p = self.presentation
        o = p.orders[i]
        e = x[i]
        consequences = []
        if o is None:
            if e < 0:
                x = p.inv(x)
        else:
            d = xgcd(e, o)[0]
            if d != e:
                # replace by a power with leading exponent exactly the gcd
                a = xgcd(e, o)[1] % (o // d)
                y = p.pow(x, a)
                assert y[i] == d, "power should realize the gcd lead"
                consequences.append(x)
                x = y
        return x, consequences

    def _closure_candidates(self):
        p = self.presentation
        seq = self.sequence
        for x in seq:
            yield p.inv(x)
            i = _lead(x)
            o = p.orders[i]
            if o is not None:
                yield p.pow(x, o // x[i])
            for other in seq:
                yield p.mul(x, other)

    def _sift_partial(self, x):
        """Reduce x by pivots with exact divisions; remainder may be nonzero."""
        p = self.presentation
        for i in range(p.n):
            if x[i] == 0:
                continue
            u = self.pivots.get(i)
            if u is None:
                return x
            q = x[i] // u[i]
            if q:
                x = p.mul(p.pow(u, -q), x)
            if x[i]:
                return x
        return x

    def _canonicalize(self):
        p = self.presentation
        positions = sorted(self.pivots)
        for idx in range(len(positions) - 1, -1, -1):
            i = positions[idx]
            u = self.pivots[i]
            for j in positions[idx + 1:]:
                v = self.pivots[j]
                q = u[j] // v[j]
                if q:
                    u = p.mul(u, p.pow(v, -q))
            self.pivots[i] = u

    # -- queries --------------------------------------------------------------

    @property
    def sequence(self):
        return [self.pivots[i] for i in sorted(self.pivots)]

    def elements(self):
        """All elements; only valid for finite subgroups."""
        p = self.presentation
        out = [p.identity]
        for i in sorted(self.pivots, reverse=True):
            u = self.pivots[i]
            o = p.orders[i]
            if o is None:
                raise ValueError("subgroup is infinite")
            reps = []
            for k in range(o // u[i]):
                uk = p.pow(u, k)
                reps.extend(p.mul(uk, x) for x in out)
            out = reps
        return out

    def reduce(self, x):
        """The canonical representative of the coset (self)*x."""
        p = self.presentation
        for i in range(p.n):
            if x[i] == 0:
                continue
            u = self.pivots.get(i)
            if u is None:
                continue
            q = x[i] // u[i]
            if q:
                x = p.mul(p.pow(u, -q), x)
        return x

    def contains_vector(self, x) -> bool:
        return _lead(self.reduce(x)) is None

    def __contains__(self, element) -> bool:
        if isinstance(element, PcElement):
            element = element.vector
        return self.contains_vector(element)

    def coordinatize(self, x):
        """Exponents of x along the induced sequence; raises if x is outside."""
        p = self.presentation
        coords = []
        for i in sorted(self.pivots):
            u = self.pivots[i]
            q = x[i] // u[i] if x[i] else 0
            coords.append(q)
            if q:
                x = p.mul(p.pow(u, -q), x)
        if _lead(x) is not None:
            raise MembershipError("element lies outside the subgroup")
        return coords

    def is_trivial(self) -> bool:
        return not self.pivots

    def order(self):
        """Subgroup order, or None when infinite."""
        p = self.presentation
        total = 1
        for i, u in self.pivots.items():
            o = p.orders[i]
            if o is None:
                return None
            total *= o // u[i]
        return total

    def index(self):
        """[G : H], or None when infinite."""
        p = self.presentation
        total = 1
        for i in range(p.n):
            o = p.orders[i]
            u = self.pivots.get(i)
            if u is None:
                if o is None:
                    return None
                total *= o
            else:
                total *= u[i]
        return total

    def hirsch_length(self) -> int:
        p = self.presentation
        return sum(1 for i in self.pivots if p.orders[i] is None)

    def __eq__(self, other):
        return (
            isinstance(other, PcSubgroup)
            and self.presentation is other.presentation
            and self.pivots == other.pivots
        )

    def __hash__(self):
        return hash((id(self.presentation), tuple(sorted(self.pivots.items()))))

    def __le__(self, other: "PcSubgroup") -> bool:
        return all(other.contains_vector(u) for u in self.pivots.values())

    def join(self, other: "PcSubgroup") -> "PcSubgroup":
        return PcSubgroup(
            self.presentation, list(self.pivots.values()) + list(other.pivots.values())
        )

    def __repr__(self):
        seq = ", ".join(repr(PcElement(self.presentation, v)) for v in self.sequence)
        return "<PcSubgroup [%s]>" % seq


def whole_group(p: PcPresentation) -> PcSubgroup:
    return PcSubgroup(p, [p.generator_vector(i) for i in range(p.n)])


def trivial_subgroup(p: PcPresentation) -> PcSubgroup:
    return PcSubgroup(p, [])


def induced_subgroup(p: PcPresentation, generators) -> PcSubgroup:
    return PcSubgroup(p, list(generators))


def membership(p: PcPresentation, sub: PcSubgroup, element) -> bool:
    return element in sub


def subgroup_index(p: PcPresentation, sub: PcSubgroup):
    return sub.index()


def normal_closure(p: PcPresentation, generators, conjugating=None) -> PcSubgroup:
    """Smallest subgroup containing the generators and closed under
    conjugation by the given conjugators (all presentation generators by
    default)."""
    vectors = []
    for g in generators:
        vectors.append(g.vector if isinstance(g, PcElement) else p._as_vector(g))
    if conjugating is None:
        conjugating = list(range(p.n))
    sub = PcSubgroup(p, vectors)
    while True:
        extra = []
        for u in sub.sequence:
            for i in conjugating:
                g = p.generator_vector(i)
                for c in (g, p.inv(g)):
                    y = p.conjugate(u, c)
                    if not sub.contains_vector(y):
                        extra.append(y)
        if not extra:
            return sub
        sub = PcSubgroup(p, list(sub.pivots.values()) + extra)


def is_normal(p: PcPresentation, sub: PcSubgroup) -> bool:
    for u in sub.sequence:
        for i in range(p.n):
            g = p.generator_vector(i)
            for c in (g, p.inv(g)):
                if not sub.contains_vector(p.conjugate(u, c)):
                    return False
    return True


class InducedPresentation:
    """A subgroup turned into a standalone pc group.

    The induced sequence of a completed subgroup is itself a polycyclic
    sequence with the normal-tails property, so its power and conjugation
    data, read off inside the parent and re-coordinatized, give a pc
    presentation of the subgroup.  ``embed``/``coordinatize`` translate
    between the two coordinate systems.
    """

    def __init__(self, parent: PcPresentation, sub: PcSubgroup, names=None):
        self.parent = parent
        self.sub = sub
        seq = sub.sequence
        orders = []
        for u in seq:
            i = _lead(u)
            o = parent.orders[i]
            orders.append(None if o is None else o // u[i])
        if names is None:
            names = ["h%d" % (t + 1) for t in range(len(seq))]
        self.group = PcPresentation(orders, names=names,
                                    collection_cap=parent.collection_cap)
        for t, u in enumerate(seq):
            o = orders[t]
            if o is not None:
                w = parent.pow(u, o)
                self.group.set_power(t, self._coords(w, expect_past=t))
        for t in range(len(seq)):
            for s in range(t):
                img = parent.conjugate(seq[t], seq[s])
                self.group.set_conjugation(s, t, self._coords(img, expect_past=None))
                img = parent.conjugate(seq[t], parent.inv(seq[s]))
                self.group.set_conjugation(
                    s, t, self._coords(img, expect_past=None), sign=-1
                )

    def _coords(self, x, expect_past):
        coords = self.sub.coordinatize(x)
        vec = []
        for t, q in enumerate(coords):
            o = self.group.orders[t]
            if o is not None:
                q %= o
            vec.append(q)
        if expect_past is not None and any(vec[: expect_past + 1]):
            raise AssertionError("power relation does not fall into the tail")
        return tuple(vec)

    def embed(self, vec):
        """Subgroup coordinates -> parent normal form."""
        p = self.parent
        out = p.identity
        for u, q in zip(self.sub.sequence, vec):
            if q:
                out = p.mul(out, p.pow(u, q))
        return out

    def coordinatize(self, x):
        """Parent normal form -> subgroup coordinates (raises if outside)."""
        coords = self.sub.coordinatize(x)
        vec = []
        for t, q in enumerate(coords):
            o = self.group.orders[t]
            if o is not None:
                q %= o
            vec.append(q)
        return tuple(vec)

    def pull_subgroup(self, inner: PcSubgroup) -> PcSubgroup:
        """An inner subgroup of the induced group, mapped into the parent."""
        return PcSubgroup(self.parent, [self.embed(v) for v in inner.sequence])

    def push_subgroup(self, sub_in_parent: PcSubgroup) -> PcSubgroup:
        """A parent subgroup contained in self.sub, in induced coordinates."""
        return PcSubgroup(
            self.group, [self.coordinatize(v) for v in sub_in_parent.sequence]
        )


def relative_index(p: PcPresentation, outer: PcSubgroup, inner: PcSubgroup):
    """[outer : inner]; None when infinite.  inner must lie inside outer."""
    if not inner <= outer:
        raise MembershipError("inner subgroup is not contained in the outer one")
    induced = InducedPresentation(p, outer)
    pushed = induced.push_subgroup(inner)
    return pushed.index()
